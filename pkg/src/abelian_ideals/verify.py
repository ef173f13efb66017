"""Per-type invariant suite shared by the CLI and the acceptance tests."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Callable, List, Optional

from .affine import alcove_image, base_point, region, suffix_inversion_sets
from .duality import proof_step_violations, verify_duality_bijection
from .ideals import (
    ORACLE_MAX_POSITIVE,
    CharacterizationMismatch,
    enumerate_ideals,
    is_abelian_ideal,
    is_long_ideal,
    long_characterizations,
    oracle_enumerate_ideals,
    rootlet,
)
from .rootsys import RootSystem, SimpleType, build, neg


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""
    witness: Optional[dict] = None


def all_types(max_rank: int = 8) -> List[SimpleType]:
    """The standard list: A1+, B2+, C2+, D4+, E6-E8, F4, G2 up to ``max_rank``."""
    out = []
    starts = {"A": 1, "B": 2, "C": 2, "D": 4}
    for fam, lo in starts.items():
        out += [SimpleType(fam, p) for p in range(lo, max_rank + 1)]
    out += [SimpleType("E", p) for p in (6, 7, 8) if p <= max_rank]
    if max_rank >= 4:
        out.append(SimpleType("F", 4))
    if max_rank >= 2:
        out.append(SimpleType("G", 2))
    return out


def _witness(I, note: str = "") -> dict:
    w = {"roots": [list(x) for x in I.roots], "word": list(I.word)}
    if note:
        w["note"] = note
    return w


def _first_failure(ideals, pred: Callable) -> Optional[dict]:
    for I in ideals:
        msg = pred(I)
        if msg:
            return _witness(I, msg)
    return None


def verify_type(t) -> List[Check]:
    """Run every applicable invariant on one type; never raises on a failed check."""
    if isinstance(t, str):
        t = SimpleType.parse(t)
    rs = build(t)
    checks: List[Check] = []
    ideals = enumerate_ideals(rs)

    checks.append(Check("peterson_count", len(ideals) == 2 ** rs.rank,
                        f"{len(ideals)} ideals, 2^rank = {2 ** rs.rank}"))

    def level_one(inv):
        return all(r.level == 1 and rs.is_positive_root(neg(r.finite)) for r in inv)

    def structure(I):
        if not is_abelian_ideal(rs, I):
            return "violates commutativity or upward closure"
        if I.roots and rs.theta not in I.root_set:
            return "nonempty ideal without the highest root"
        inv = None
        for tail, inv in suffix_inversion_sets(rs, I.word):
            ideal = {neg(r.finite) for r in inv}
            if len(inv) != len(tail) or not level_one(inv) or not ideal <= I.root_set:
                return f"right substring {tail} is not minuscule inside the ideal"
        if len(inv) != len(I) or {neg(r.finite) for r in inv} != I.root_set:
            return f"l(w) = {len(inv)} but #I = {len(I)}, or N(w) does not match the ideal"
        return ""

    bad = _first_failure(ideals, structure)
    checks.append(Check("ideal_structure", bad is None,
                        "conditions (a)/(b), theta in I, l(w) = #I = #N(w), "
                        "right substrings minuscule", bad))

    if len(rs.positive_roots) <= ORACLE_MAX_POSITIVE:
        bfs = {I.root_set for I in ideals}
        oracle = set(oracle_enumerate_ideals(rs))
        diff = sorted(bfs ^ oracle, key=len)
        checks.append(Check("oracle_equivalence", not diff,
                            f"BFS {len(bfs)} vs upper-set oracle {len(oracle)}",
                            {"roots": [list(x) for x in sorted(diff[0])]} if diff else None))

    x0 = base_point(rs)

    x0_cov = rs.covector(x0)

    def alcove(I):
        y = alcove_image(rs, I.word)
        if not region(rs, y).in_2c:
            return "w^-1 . C is not inside 2C"
        y_cov = rs.covector(y)
        for g in I.roots:
            at_x0 = sum(a * b for a, b in zip(g, x0_cov))
            at_y = sum(a * b for a, b in zip(g, y_cov))
            if not at_x0 < 1 < at_y:
                return f"H({list(g)}, 1) does not separate C and w^-1 . C"
        return ""

    bad = _first_failure(ideals, alcove)
    checks.append(Check("alcove_separation", bad is None,
                        "w^-1 . C inside 2C, separated by H(g,1) for g in I", bad))

    def rootlet_ok(I):
        if not I.roots:
            return ""
        try:
            rootlet(rs, I)
        except AssertionError as e:
            return str(e)
        return ""

    bad = _first_failure(ideals, rootlet_ok)
    checks.append(Check("rootlet_soundness", bad is None, "rootlet is a long positive root", bad))

    if rs.theta_s is not None:
        checks += _two_length_checks(rs, ideals)
    return checks


def _two_length_checks(rs: RootSystem, ideals) -> List[Check]:
    checks = []
    try:
        ratio, power = rs.long_ideal_count_formula()
        checks.append(Check("volume_formula", True, f"prod m / prod c = {ratio} = d^a = {power}"))
    except AssertionError as e:
        checks.append(Check("volume_formula", False, str(e)))
        ratio = None

    longs = [I for I in ideals if is_long_ideal(rs, I)]
    checks.append(Check("long_count", len(longs) == ratio,
                        f"{len(longs)} long ideals, d^a = {ratio}"))

    bad = None
    for I in ideals:
        try:
            long_characterizations(rs, I)
        except CharacterizationMismatch as e:
            bad = _witness(I, str(e))
            break
    checks.append(Check("four_way_long", bad is None,
                        "roots / word letters / alcove in C_s / rootlet agree", bad))

    if rs.type.family in "BCFG":
        rep = verify_duality_bijection(rs.type, ideals)
        checks.append(Check("duality_bijection", rep.ok,
                            f"{rep.long_ideals} long ideals vs {rep.dual_candidates} dual candidates"
                            f" ({rep.target})", rep.witnesses[0] if rep.witnesses else None))
        bad = _first_failure(longs, lambda I: "; ".join(proof_step_violations(rs, I)))
        checks.append(Check("duality_proof_steps", bad is None,
                            "coroot additivity and vanishing brackets inside long ideals", bad))
    return checks


def checks_to_json(checks: List[Check]) -> List[dict]:
    return [asdict(c) for c in checks]
