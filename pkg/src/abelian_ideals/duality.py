"""Long Abelian ideals versus commutative subalgebras of little adjoint modules.

For a system with two root lengths, the module with highest weight the
short dominant root has the short roots as its nonzero weights, each with a
one-dimensional weight space.  A subspace spanned by weight vectors of
positive short roots ``S`` of the Langlands dual is modelled purely by
``S``: a bracket of weight vectors is taken to be nonzero exactly when the
sum of weights is a weight of the bracket's target.

Ratio-2 types (B, C, F4) sit in a Z2-graded algebra whose odd part brackets
into the adjoint module.  For G2 the grading is by Z3 and the bracket of the
little adjoint module with itself lands in a second copy of the little
adjoint module; ``target="little_adjoint"`` selects that predicate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, List, Optional, Tuple

from .ideals import AbelianIdeal, enumerate_ideals, is_long_ideal, long_ideals
from .poset import upper_sets
from .rootsys import SHORT, Root, RootSystem, RootSystemError, SimpleType, add, build, root_key

ADJOINT = "adjoint"
LITTLE_ADJOINT = "little_adjoint"

# dim V(theta_s) from the classification of little adjoint modules
TABLE_DIMENSION = {
    "B": lambda p: 2 * p + 1,
    "C": lambda p: 2 * p * p - p - 1,
    "F": lambda p: 26,
}


def _sorted(roots: Iterable[Root]) -> Tuple[Root, ...]:
    return tuple(sorted(roots, key=root_key))


def default_target(rs: RootSystem) -> str:
    return LITTLE_ADJOINT if rs.length_ratio == 3 else ADJOINT


def dual_ideal(rs: RootSystem, I) -> FrozenSet[Root]:
    """Coroots of a long ideal, in the coordinates of ``rs.dual``."""
    roots = I.roots if isinstance(I, AbelianIdeal) else tuple(I)
    if not is_long_ideal(rs, roots):
        raise RootSystemError(f"{rs.type}: {roots} is not a long ideal")
    image = frozenset(rs.to_dual(x) for x in roots)
    assert len(image) == len(roots)
    return image


def _check_candidate(rs_dual: RootSystem, S) -> FrozenSet[Root]:
    S = frozenset(tuple(x) for x in S)
    for x in S:
        if not rs_dual.is_positive_root(x) or rs_dual.length_class(x) != SHORT:
            raise RootSystemError(f"{x} is not a short positive root of {rs_dual.type}")
    return S


def _is_weight(rs: RootSystem, x: Root) -> bool:
    """Nonzero weights of the little adjoint module are the short roots."""
    return x in rs.roots and rs.length_class(x) == SHORT


def _brackets_nonzero(rs: RootSystem, x: Root, y: Root, target: str) -> bool:
    s = add(x, y)
    if target == ADJOINT:
        return s in rs.roots
    if target == LITTLE_ADJOINT:
        return _is_weight(rs, s)
    raise ValueError(f"unknown bracket target {target!r}")


def is_bstable(rs_dual: RootSystem, S) -> bool:
    S = _check_candidate(rs_dual, S)
    return all(s in S for x in S for b in rs_dual.positive_roots
               if _is_weight(rs_dual, s := add(x, b)))


def is_commutative(rs_dual: RootSystem, S, target: str = ADJOINT) -> bool:
    S = _check_candidate(rs_dual, S)
    return not any(_brackets_nonzero(rs_dual, x, y, target) for x in S for y in S)


def is_commutative_bstable(rs_dual: RootSystem, S, target: str = ADJOINT) -> bool:
    return is_bstable(rs_dual, S) and is_commutative(rs_dual, S, target)


def enumerate_commutative_bstable(rs_dual: RootSystem, target: str = ADJOINT) -> List[FrozenSet[Root]]:
    """Borel-stable commutative subspaces spanned by positive short weight vectors."""
    short = [x for x in rs_dual.positive_roots if rs_dual.length_class(x) == SHORT]
    if not short:
        raise RootSystemError(f"{rs_dual.type} has no short roots")
    above = {x: [s for b in rs_dual.positive_roots if _is_weight(rs_dual, s := add(x, b))]
             for x in short}

    def compatible(x, chosen):
        return not _brackets_nonzero(rs_dual, x, x, target) and not any(
            _brackets_nonzero(rs_dual, x, y, target) for y in chosen)

    order = sorted(short, key=root_key, reverse=True)
    return sorted(upper_sets(order, above, compatible),
                  key=lambda s: (len(s), sorted(map(root_key, s), reverse=True)))


def little_adjoint_dimension(rs: RootSystem) -> int:
    """Number of short roots plus the zero-weight multiplicity (# short simple roots)."""
    n_short = sum(1 for x in rs.roots if rs.length_class(x) == SHORT)
    return n_short + len(rs.short_simple_indices)


def proof_step_violations(rs: RootSystem, I: AbelianIdeal) -> List[str]:
    """Check the root-level facts behind the correspondence on one long ideal.

    * for ``m`` in ``I`` and long positive ``b`` with ``m + b`` a root,
      the coroot of ``m + b`` is the sum of the coroots;
    * no two coroots of members of ``I`` have a nonzero bracket (their sum
      is not a root, or for G2 not a short root, of the dual).
    """
    dual = rs.dual
    target = default_target(rs)
    out = []
    for m in I.roots:
        for b in rs.positive_roots:
            s = add(m, b)
            if rs.is_long(b) and s in rs.roots:
                if rs.to_dual(s) != add(rs.to_dual(m), rs.to_dual(b)):
                    out.append(f"coroot of {m}+{b} is not additive")
        for n in I.roots:
            if _brackets_nonzero(dual, rs.to_dual(m), rs.to_dual(n), target):
                out.append(f"coroots of {m} and {n} have a nonzero bracket ({target})")
    return out


@dataclass
class DualityReport:
    type: str
    long_ideals: int
    dual_candidates: int
    bijection: bool
    target: str
    witnesses: List[dict] = field(default_factory=list)
    alternate_target: Optional[str] = None
    alternate_count: Optional[int] = None
    predicates_agree: Optional[bool] = None
    dimension: Optional[int] = None
    table_dimension: Optional[int] = None

    def to_json(self) -> dict:
        out = {
            "type": self.type,
            "long_ideals": self.long_ideals,
            "dual_candidates": self.dual_candidates,
            "bijection": self.bijection,
            "target": self.target,
            "witnesses": self.witnesses,
            "dimension": self.dimension,
            "table_dimension": self.table_dimension,
        }
        if self.alternate_target is not None:
            out.update(alternate_target=self.alternate_target,
                       alternate_count=self.alternate_count,
                       predicates_agree=self.predicates_agree)
        return out

    @property
    def ok(self) -> bool:
        dims = self.table_dimension is None or self.dimension == self.table_dimension
        return self.bijection and dims


def verify_duality_bijection(t, ideals: Optional[List[AbelianIdeal]] = None) -> DualityReport:
    """Compare coroot images of long ideals with the dual-side enumeration.

    ``witnesses`` lists every set found on one side only.
    """
    if isinstance(t, str):
        t = SimpleType.parse(t)
    if t.family not in "BCFG":
        raise RootSystemError(f"duality is defined for B, C, F4 and G2, not {t}")
    rs = build(t)
    dual = rs.dual
    target = default_target(rs)
    longs = long_ideals(rs, ideals if ideals is not None else enumerate_ideals(rs))
    forward = {dual_ideal(rs, I) for I in longs}
    found = enumerate_commutative_bstable(dual, target)
    backward = set(found)
    witnesses = [{"side": "long_ideals_only", "roots": [list(x) for x in _sorted(S)]}
                 for S in sorted(forward - backward, key=_sorted)]
    witnesses += [{"side": "dual_only", "roots": [list(x) for x in _sorted(S)]}
                  for S in sorted(backward - forward, key=_sorted)]
    report = DualityReport(
        type=str(t),
        long_ideals=len(longs),
        dual_candidates=len(found),
        bijection=forward == backward and len(found) == len(backward),
        target=target,
        witnesses=witnesses,
        dimension=little_adjoint_dimension(rs),
        table_dimension=TABLE_DIMENSION[t.family](t.rank) if t.family in TABLE_DIMENSION else None,
    )
    if target == LITTLE_ADJOINT:
        alt = enumerate_commutative_bstable(dual, ADJOINT)
        report.alternate_target = ADJOINT
        report.alternate_count = len(alt)
        report.predicates_agree = set(alt) == backward
    return report
