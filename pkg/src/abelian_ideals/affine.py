"""Affine real roots, affine Weyl group words and alcove regions.

A word is a tuple of letters in ``0..p`` read as a product of simple
reflections ``s_(i_l) ... s_(i_1)``; the rightmost letter acts first.
Letter 0 is the affine reflection attached to ``a_0 = delta - theta``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import FrozenSet, Iterable, Iterator, NamedTuple, Optional, Sequence, Tuple, Union

from .rootsys import RationalVector, Root, RootSystem, RootSystemError, neg, root_key


class AffineRoot(NamedTuple):
    """A real affine root ``finite + level * delta``."""

    finite: Root
    level: int

    def is_positive(self) -> bool:
        return self.level > 0 or (self.level == 0 and all(c >= 0 for c in self.finite))

    def __neg__(self) -> "AffineRoot":
        return AffineRoot(neg(self.finite), -self.level)

    def to_json(self) -> dict:
        return {"coeffs": list(self.finite), "delta": self.level}

    @classmethod
    def from_json(cls, obj: dict) -> "AffineRoot":
        return cls(tuple(obj["coeffs"]), int(obj["delta"]))


def affine_key(r: AffineRoot):
    return (r.level, root_key(r.finite))


def affine_root(rs: RootSystem, finite: Sequence[int], level: int = 0) -> AffineRoot:
    """Validated constructor: the finite part must be a root."""
    return AffineRoot(rs.check_root(finite), int(level))


def simple_affine_root(rs: RootSystem, i: int) -> AffineRoot:
    if i == 0:
        return AffineRoot(neg(rs.theta), 1)
    return AffineRoot(rs.simple_roots[i - 1], 0)


def reflect_affine(rs: RootSystem, i: int, r: AffineRoot) -> AffineRoot:
    """Linear action of the simple reflection ``s_i`` on an affine root."""
    if i == 0:
        c = rs.theta_pairing(r.finite)
        theta = rs.theta
        return AffineRoot(tuple(b - c * t for b, t in zip(r.finite, theta)), r.level + c)
    if not 1 <= i <= rs.rank:
        raise RootSystemError(f"letter {i} out of range 0..{rs.rank}")
    return AffineRoot(rs.reflect(i - 1, r.finite), r.level)


Word = Union["WeylWord", Sequence[int]]


def _letters(w: Word) -> Tuple[int, ...]:
    return w.letters if isinstance(w, WeylWord) else tuple(w)


def inverse(w: Word) -> Tuple[int, ...]:
    return tuple(reversed(_letters(w)))


def apply_word_linear(rs: RootSystem, w: Word, r: AffineRoot) -> AffineRoot:
    for i in reversed(_letters(w)):
        r = reflect_affine(rs, i, r)
    return r


def suffix_inversion_sets(rs: RootSystem, w: Word) -> Iterator[Tuple[Tuple[int, ...], FrozenSet[AffineRoot]]]:
    """Yield ``(u, N(u))`` for every right substring ``u`` of ``w``, shortest first.

    Reading ``w`` from the right, ``N(s_i u)`` is ``N(u)`` plus
    ``u^-1(a_i)`` when that root is positive, and minus its negative
    otherwise.  Works for non-reduced words too.
    """
    letters = _letters(w)
    inv: set = set()
    suffix: Tuple[int, ...] = ()
    yield suffix, frozenset(inv)
    for i in reversed(letters):
        r = apply_word_linear(rs, inverse(suffix), simple_affine_root(rs, i))
        if r.is_positive():
            inv.add(r)
        else:
            inv.discard(-r)
        suffix = (i,) + suffix
        yield suffix, frozenset(inv)


def inversion_set(rs: RootSystem, w: Word) -> Tuple[AffineRoot, ...]:
    """``{a > 0 : w(a) < 0}``, computed by the left-multiplication recursion."""
    for _, inv in suffix_inversion_sets(rs, w):
        pass
    return tuple(sorted(inv, key=affine_key))


def direct_inversion_set(rs: RootSystem, w: Word) -> Tuple[AffineRoot, ...]:
    """Inversion set by scanning every positive root of level <= len(w).

    ``delta`` is fixed by the group, so ``w(b + k delta) = w(b) + k delta``
    and each finite root needs one word application.
    """
    letters = _letters(w)
    out = []
    for b in rs.roots:
        img = apply_word_linear(rs, letters, AffineRoot(b, 0))
        for k in range(len(letters) + 1):
            r = AffineRoot(b, k)
            if r.is_positive() and not AffineRoot(img.finite, img.level + k).is_positive():
                out.append(r)
    return tuple(sorted(out, key=affine_key))


@dataclass(frozen=True)
class WeylWord:
    """A word in the affine simple reflections with cached inversion data."""

    rs: RootSystem = field(repr=False, compare=False, hash=False)
    letters: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(i) for i in self.letters))
        for i in self.letters:
            if not 0 <= i <= self.rs.rank:
                raise RootSystemError(f"letter {i} out of range 0..{self.rs.rank}")

    def __len__(self) -> int:
        return len(self.letters)

    @cached_property
    def inversions(self) -> Tuple[AffineRoot, ...]:
        return inversion_set(self.rs, self.letters)

    @cached_property
    def is_reduced(self) -> bool:
        return len(self.inversions) == len(self.letters)

    @property
    def length(self) -> int:
        """Coxeter length of the group element."""
        return len(self.inversions)

    def __str__(self) -> str:
        return "".join(f"s{i}" for i in self.letters) or "e"


# -- the affine-linear action on V ---------------------------------------------


@lru_cache(maxsize=None)
def base_point(rs: RootSystem) -> RationalVector:
    """Interior point ``sum(coweights) / h`` of the fundamental alcove."""
    h = 1 + sum(rs.theta)
    total = [Fraction(0)] * rs.rank
    for i in range(1, rs.rank + 1):
        total = [a + b for a, b in zip(total, rs.fundamental_coweight(i))]
    x0 = tuple(v / h for v in total)
    assert all(rs.inner(a, x0) == Fraction(1, h) for a in rs.simple_roots)
    assert rs.inner(rs.theta, x0) == Fraction(h - 1, h)
    return x0


def reflect_point(rs: RootSystem, i: int, x: Sequence) -> RationalVector:
    """``s_i . x``; letter 0 reflects in the hyperplane ``(theta, x) = 1``."""
    if i == 0:
        theta = rs.theta
        c = rs.inner(theta, x) - 1
        tv = rs.coroot(theta)
        return tuple(Fraction(a) - c * t for a, t in zip(x, tv))
    if not 1 <= i <= rs.rank:
        raise RootSystemError(f"letter {i} out of range 0..{rs.rank}")
    return tuple(Fraction(a) for a in rs.reflect(i - 1, x))


def apply_word_affine(rs: RootSystem, w: Word, x: Sequence) -> RationalVector:
    x = tuple(Fraction(a) for a in x)
    for i in reversed(_letters(w)):
        x = reflect_point(rs, i, x)
    return x


class AmbiguousRegion(ValueError):
    """The point lies on one of the walls used by :func:`region`."""


@dataclass(frozen=True)
class Region:
    in_c: bool
    in_2c: bool
    in_cs: Optional[bool]  # None for simply-laced systems


def region(rs: RootSystem, x: Sequence) -> Region:
    """Membership of ``x`` in the alcove C, in 2C, and in C_s."""
    simple = [rs.inner(a, x) for a in rs.simple_roots]
    t = rs.inner(rs.theta, x)
    values = simple + [t - 1, t - 2]
    ts = None
    if rs.theta_s is not None:
        ts = rs.inner(rs.theta_s, x)
        values.append(ts - 1)
    if any(v == 0 for v in values):
        raise AmbiguousRegion(f"ambiguous region: point {x} lies on a wall")
    dominant = all(v > 0 for v in simple)
    in_c = dominant and t < 1
    in_2c = dominant and t < 2
    in_cs = None if ts is None else dominant and ts < 1
    chain = [in_c] + ([in_cs] if in_cs is not None else []) + [in_2c]
    assert chain == sorted(chain), f"containment chain broken at {x}"
    return Region(in_c, in_2c, in_cs)


def alcove_image(rs: RootSystem, w: Word) -> RationalVector:
    """``w^-1 . x0``, an interior point of the alcove ``w^-1 . C``."""
    return apply_word_affine(rs, inverse(w), base_point(rs))


def all_words(rank: int, max_len: int) -> Iterable[Tuple[int, ...]]:
    """Every word of length <= ``max_len`` in letters ``0..rank``."""
    layer = [()]
    for _ in range(max_len + 1):
        yield from layer
        layer = [(i,) + w for w in layer for i in range(rank + 1)]
