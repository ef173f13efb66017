import pytest

from abelian_ideals.duality import (
    ADJOINT,
    LITTLE_ADJOINT,
    default_target,
    dual_ideal,
    enumerate_commutative_bstable,
    is_bstable,
    is_commutative,
    is_commutative_bstable,
    little_adjoint_dimension,
    proof_step_violations,
    verify_duality_bijection,
)
from abelian_ideals.ideals import long_ideals
from abelian_ideals.rootsys import SHORT, RootSystemError, build


def subset_oracle(rs_dual, target):
    """All subsets of positive short roots, checked pair by pair."""
    roots = set(rs_dual.roots)
    short = [x for x in rs_dual.positive_roots if rs_dual.norm2(x) < rs_dual.norm2(rs_dual.theta)]
    short_all = {x for x in roots if rs_dual.norm2(x) < rs_dual.norm2(rs_dual.theta)}

    def plus(x, y):
        return tuple(a + b for a, b in zip(x, y))

    def nonzero(x, y):
        s = plus(x, y)
        return s in roots if target == ADJOINT else s in short_all

    out = set()
    for mask in range(1 << len(short)):
        S = {short[k] for k in range(len(short)) if mask >> k & 1}
        stable = all(plus(x, b) in S for x in S for b in rs_dual.positive_roots
                     if plus(x, b) in short_all)
        if stable and not any(nonzero(x, y) for x in S for y in S):
            out.add(frozenset(S))
    return out


class TestDualSide:
    @pytest.mark.parametrize("t", ["B2", "B3", "B4", "C2", "C3", "F4", "G2"])
    def test_enumeration_matches_subsets(self, t):
        dual = build(t).dual
        for target in (ADJOINT, LITTLE_ADJOINT):
            assert set(enumerate_commutative_bstable(dual, target)) == subset_oracle(dual, target)

    def test_predicates_on_c2(self):
        # dual of B2 is C2: short positive roots a1, a1+a2
        c2 = build("B2").dual
        assert str(c2.type) == "C2"
        assert is_bstable(c2, [(1, 1)])
        assert not is_bstable(c2, [(1, 0)])
        assert is_commutative_bstable(c2, [(1, 1)])
        assert not is_commutative(c2, [(1, 0), (1, 1)])
        with pytest.raises(RootSystemError):
            is_bstable(c2, [(2, 1)])  # long

    def test_no_short_roots(self):
        with pytest.raises(RootSystemError):
            enumerate_commutative_bstable(build("A3"))

    def test_targets(self):
        assert default_target(build("G2")) == LITTLE_ADJOINT
        assert default_target(build("F4")) == ADJOINT
        with pytest.raises(ValueError):
            is_commutative(build("G2"), [(1, 1)], target="other")


class TestCorrespondence:
    @pytest.mark.parametrize("t", ["B3", "C3", "F4", "G2"])
    def test_dual_images_are_short(self, t):
        rs = build(t)
        dual = rs.dual
        for I in long_ideals(rs):
            S = dual_ideal(rs, I)
            assert len(S) == len(I)
            assert all(dual.length_class(x) == SHORT and dual.is_positive_root(x) for x in S)

    def test_dual_ideal_rejects_short(self):
        rs = build("C2")
        with pytest.raises(RootSystemError):
            dual_ideal(rs, [(2, 1), (1, 1)])

    @pytest.mark.parametrize("t,count", [("B2", 2), ("B3", 4), ("B4", 8), ("B5", 16),
                                         ("C2", 2), ("C3", 2), ("C4", 2), ("C5", 2),
                                         ("F4", 4), ("G2", 3)])
    def test_bijection(self, t, count):
        rep = verify_duality_bijection(t)
        assert rep.ok and rep.bijection and not rep.witnesses
        assert rep.long_ideals == rep.dual_candidates == count

    @pytest.mark.parametrize("t,dim", [("B2", 5), ("B3", 7), ("B5", 11), ("C3", 14),
                                       ("C4", 27), ("F4", 26), ("G2", 7)])
    def test_dimension(self, t, dim):
        assert little_adjoint_dimension(build(t)) == dim

    def test_g2_predicates_compared(self):
        rep = verify_duality_bijection("G2")
        assert rep.target == LITTLE_ADJOINT
        assert rep.alternate_target == ADJOINT
        assert rep.alternate_count == 2 and rep.predicates_agree is False
        js = rep.to_json()
        assert js["alternate_count"] == 2 and js["table_dimension"] is None

    def test_other_families_rejected(self):
        with pytest.raises(RootSystemError):
            verify_duality_bijection("D4")

    @pytest.mark.parametrize("t", ["B4", "C4", "F4", "G2"])
    def test_proof_steps(self, t):
        rs = build(t)
        for I in long_ideals(rs):
            assert proof_step_violations(rs, I) == []
