from itertools import combinations

import pytest

from abelian_ideals.affine import alcove_image, region
from abelian_ideals.ideals import (
    AbelianIdeal,
    CharacterizationMismatch,
    enumerate_ideals,
    generators,
    ideal_of_word,
    ideal_to_json,
    is_abelian_ideal,
    is_minuscule,
    long_characterizations,
    long_ideals,
    maximal_ideals,
    oracle_enumerate_ideals,
    rootlet,
)
from abelian_ideals.rootsys import RootSystemError, build, epsilon_coords

C2 = build("C2")
TH = (2, 1)


def raw_subset_oracle(rs):
    """Every subset of positive roots, filtered by the two defining conditions.

    Written against the bare root set so that it shares nothing with the
    library's ideal predicates.
    """
    pos = list(rs.positive_roots)
    roots = set(rs.roots)
    out = set()
    for mask in range(1 << len(pos)):
        S = {pos[k] for k in range(len(pos)) if mask >> k & 1}
        ok = True
        for x in S:
            for v in pos:
                s = tuple(a + b for a, b in zip(x, v))
                if s in roots and s not in S:
                    ok = False
                    break
            if not ok or any(tuple(a + b for a, b in zip(x, y)) in roots for y in S):
                ok = False
                break
        if ok:
            out.add(frozenset(S))
    return out


class TestPredicates:
    def test_c2_examples(self):
        assert is_abelian_ideal(C2, [])
        assert is_abelian_ideal(C2, [TH])
        assert is_abelian_ideal(C2, [TH, (1, 1)])
        assert is_abelian_ideal(C2, [TH, (1, 1), (0, 1)])
        assert not is_abelian_ideal(C2, [TH, (1, 1), (1, 0)])  # a1 + (a1+a2) is a root
        assert not is_abelian_ideal(C2, [(1, 1)])  # not upward closed

    def test_rejects_non_roots(self):
        with pytest.raises(RootSystemError):
            is_abelian_ideal(C2, [(5, 5)])

    def test_minuscule_words(self):
        assert is_minuscule(C2, ())
        assert is_minuscule(C2, (1, 0))
        assert not is_minuscule(C2, (0, 0))
        assert not is_minuscule(C2, (2, 1, 0))
        assert ideal_of_word(C2, (0, 1, 0)) == {TH, (1, 1), (0, 1)}
        with pytest.raises(ValueError):
            ideal_of_word(C2, (2,))


class TestEnumeration:
    def test_c2_list(self):
        got = {I.root_set: I.word for I in enumerate_ideals(C2)}
        assert got == {
            frozenset(): (),
            frozenset({TH}): (0,),
            frozenset({TH, (1, 1)}): (1, 0),
            frozenset({TH, (1, 1), (0, 1)}): (0, 1, 0),
        }

    @pytest.mark.parametrize("t", ["A1", "A2", "A3", "A4", "B2", "B3", "C2", "C3", "G2"])
    def test_bfs_matches_raw_subsets(self, t):
        rs = build(t)
        assert {I.root_set for I in enumerate_ideals(rs)} == raw_subset_oracle(rs)

    @pytest.mark.parametrize("t", ["A3", "B3", "C3", "G2", "D4"])
    def test_upper_set_oracle_matches_raw(self, t):
        rs = build(t)
        if len(rs.positive_roots) > 12:
            pytest.skip("raw oracle too large")
        assert set(oracle_enumerate_ideals(rs)) == raw_subset_oracle(rs)

    def test_oracle_guard(self):
        with pytest.raises(RootSystemError, match="oracle is limited"):
            oracle_enumerate_ideals(build("E6"))

    @pytest.mark.parametrize("t", ["B4", "C4", "F4", "D5", "E6"])
    def test_words_generate_their_ideals(self, t):
        rs = build(t)
        ideals = enumerate_ideals(rs)
        assert len(ideals) == 2 ** rs.rank
        for I in ideals:
            assert len(I.word) == len(I)
            assert ideal_of_word(rs, I.word) == I.root_set

    @pytest.mark.parametrize("t", ["B3", "F4", "G2"])
    def test_right_substrings_minuscule(self, t):
        rs = build(t)
        for I in enumerate_ideals(rs):
            for k in range(len(I.word) + 1):
                tail = I.word[k:]
                assert is_minuscule(rs, tail)
                assert ideal_of_word(rs, tail) <= I.root_set

    @pytest.mark.parametrize("t", ["C3", "F4", "E6"])
    def test_nonempty_contains_theta(self, t):
        rs = build(t)
        assert all(rs.theta in I for I in enumerate_ideals(rs) if I.roots)


class TestRootlets:
    def test_c2_values(self):
        ideals = {I.root_set: I for I in enumerate_ideals(C2)}
        assert rootlet(C2, ideals[frozenset({TH})]) == TH
        assert rootlet(C2, ideals[frozenset({TH, (1, 1)})]) == (0, 1)
        assert rootlet(C2, ideals[frozenset({TH, (1, 1), (0, 1)})]) == (0, 1)

    def test_empty_ideal(self):
        with pytest.raises(ValueError):
            rootlet(C2, AbelianIdeal(()))

    @pytest.mark.parametrize("t", ["B4", "C4", "G2", "E6", "D4", "A4"])
    def test_long_positive(self, t):
        rs = build(t)
        for I in enumerate_ideals(rs):
            if I.roots:
                tau = rootlet(rs, I)
                assert rs.is_positive_root(tau) and rs.is_long(tau)


class TestLongIdeals:
    def test_c2_flags(self):
        ideals = {I.root_set: I for I in enumerate_ideals(C2)}
        one = long_characterizations(C2, ideals[frozenset({TH})])
        assert (one.by_roots, one.by_word, one.by_alcove, one.by_rootlet) == (True,) * 4
        two = long_characterizations(C2, ideals[frozenset({TH, (1, 1)})])
        assert (two.by_roots, two.by_word, two.by_alcove, two.by_rootlet) == (False,) * 4

    def test_mismatch_is_reported(self):
        # an ideal paired with a word that is not its own
        bogus = AbelianIdeal([TH, (1, 1)], (0,))
        with pytest.raises(CharacterizationMismatch) as e:
            long_characterizations(C2, bogus)
        assert e.value.ideal is bogus
        assert not long_characterizations(C2, bogus, check=False).agree

    def test_simply_laced_rejected(self):
        with pytest.raises(RootSystemError):
            long_characterizations(build("A2"), AbelianIdeal(()))
        with pytest.raises(RootSystemError):
            long_ideals(build("E6"))

    @pytest.mark.parametrize("t,count", [("B2", 2), ("B3", 4), ("B4", 8), ("C3", 2), ("C4", 2),
                                         ("F4", 4), ("G2", 3)])
    def test_counts(self, t, count):
        assert len(long_ideals(build(t))) == count

    @pytest.mark.parametrize("p", [3, 4, 5])
    def test_b_maximal(self, p):
        rs = build(f"B{p}")
        (top,) = maximal_ideals(long_ideals(rs))
        eps = {epsilon_coords(rs, x) for x in top.roots}
        expected = set()
        for i, j in combinations(range(p), 2):
            v = [0] * p
            v[i] = v[j] = 1
            expected.add(tuple(v))
        assert eps == expected
        gen = (0,) * (p - 2) + (1, 2)
        assert generators(rs, top) == (gen,)
        assert rootlet(rs, top) == gen

    def test_f4_maximal(self):
        rs = build("F4")
        (top,) = maximal_ideals(long_ideals(rs))
        assert top.root_set == {(2, 4, 3, 2), (2, 4, 3, 1), (2, 4, 2, 1)}
        assert generators(rs, top) == ((2, 4, 2, 1),)

    def test_g2_long(self):
        rs = build("G2")
        nontrivial = {I.root_set for I in long_ideals(rs) if I.roots}
        assert nontrivial == {frozenset({(3, 2)}), frozenset({(3, 2), (3, 1)})}

    @pytest.mark.parametrize("p", [2, 3, 4, 5])
    def test_c_unique(self, p):
        rs = build(f"C{p}")
        nontrivial = [I.root_set for I in long_ideals(rs) if I.roots]
        assert nontrivial == [frozenset({rs.theta})]

    @pytest.mark.parametrize("t", ["B3", "C4", "G2", "F4"])
    def test_alcove_images_monotone(self, t):
        rs = build(t)
        for I in enumerate_ideals(rs):
            r = region(rs, alcove_image(rs, I.word))
            chain = [r.in_c, r.in_cs, r.in_2c]
            assert chain == sorted(chain)
            assert r.in_c == (not I.roots)


def test_json_shape():
    rs = build("B3")
    I = enumerate_ideals(rs)[3]
    js = ideal_to_json(rs, I)
    assert set(js) == {"type", "roots", "word", "long", "rootlet", "generators", "roots_eps"}
    assert js["type"] == "B3" and len(js["roots"]) == len(js["word"]) == len(I)
    assert "roots_eps" not in ideal_to_json(build("F4"), enumerate_ideals(build("F4"))[0])
    assert ideal_to_json(rs, enumerate_ideals(rs)[0])["rootlet"] is None
