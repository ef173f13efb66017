"""Abelian ideals of Borel subalgebras, with a focus on the long ones and their duals.

Quick start::

    >>> from abelian_ideals import build, enumerate_ideals, long_ideals
    >>> rs = build("F4")
    >>> len(enumerate_ideals(rs)), len(long_ideals(rs))
    (16, 4)
"""

from .affine import (
    AffineRoot,
    WeylWord,
    alcove_image,
    apply_word_affine,
    apply_word_linear,
    base_point,
    direct_inversion_set,
    inversion_set,
    reflect_affine,
    region,
)
from .duality import (
    dual_ideal,
    enumerate_commutative_bstable,
    is_commutative_bstable,
    verify_duality_bijection,
)
from .graded_oracle import gl_count, gl_formula, gl_verify
from .ideals import (
    AbelianIdeal,
    enumerate_ideals,
    generators,
    is_abelian_ideal,
    is_long_ideal,
    long_characterizations,
    long_ideals,
    oracle_enumerate_ideals,
    rootlet,
)
from .rootsys import RootSystem, RootSystemError, SimpleType, build, dualize

__version__ = "0.1.0"

__all__ = [
    "AffineRoot",
    "WeylWord",
    "alcove_image",
    "apply_word_affine",
    "apply_word_linear",
    "base_point",
    "direct_inversion_set",
    "inversion_set",
    "reflect_affine",
    "region",
    "dual_ideal",
    "enumerate_commutative_bstable",
    "is_commutative_bstable",
    "verify_duality_bijection",
    "gl_count",
    "gl_formula",
    "gl_verify",
    "AbelianIdeal",
    "enumerate_ideals",
    "generators",
    "is_abelian_ideal",
    "is_long_ideal",
    "long_characterizations",
    "long_ideals",
    "oracle_enumerate_ideals",
    "rootlet",
    "RootSystem",
    "RootSystemError",
    "SimpleType",
    "build",
    "dualize",
]
