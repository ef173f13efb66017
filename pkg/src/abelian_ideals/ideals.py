"""Abelian ideals of a Borel subalgebra and their minuscule elements.

An Abelian ideal is stored as the set of its positive roots together with
one reduced word for the matching minuscule element ``w``, whose
inversion set is ``{delta - g : g in ideal}``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .affine import (
    AffineRoot,
    alcove_image,
    apply_word_linear,
    inverse,
    inversion_set,
    region,
    simple_affine_root,
)
from .poset import upper_sets
from .rootsys import Root, RootSystem, RootSystemError, add, epsilon_coords, root_key, sub

ORACLE_MAX_POSITIVE = 30


class CharacterizationMismatch(AssertionError):
    """Two descriptions of long ideals disagree on a concrete ideal."""

    def __init__(self, message: str, ideal: "AbelianIdeal"):
        super().__init__(message)
        self.ideal = ideal


@dataclass(frozen=True)
class AbelianIdeal:
    roots: Tuple[Root, ...]
    word: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "roots", tuple(sorted(set(map(tuple, self.roots)), key=root_key)))
        object.__setattr__(self, "word", tuple(self.word))

    def __len__(self) -> int:
        return len(self.roots)

    def __contains__(self, x) -> bool:
        return tuple(x) in self.root_set

    @property
    def root_set(self) -> FrozenSet[Root]:
        return frozenset(self.roots)


def _as_set(rs: RootSystem, S) -> FrozenSet[Root]:
    if isinstance(S, AbelianIdeal):
        return S.root_set
    out = frozenset(tuple(x) for x in S)
    for x in out:
        if not rs.is_positive_root(x):
            raise RootSystemError(f"{x} is not a positive root of {rs.type}")
    return out


def is_abelian_ideal(rs: RootSystem, S) -> bool:
    """Check commutativity (no sum of two members is a root) and upward closure."""
    S = _as_set(rs, S)
    for x in S:
        sums = rs.positive_sums[x]
        if any(s not in S for s in sums):
            return False
        if any(add(x, y) in rs.roots for y in S):
            return False
    return True


def enumerate_ideals(rs: RootSystem) -> List[AbelianIdeal]:
    """All Abelian ideals, reached by a BFS over minuscule elements.

    From a minuscule ``w`` with ideal ``I``, the element ``s_i w`` is
    minuscule exactly when ``w^-1(a_i) = delta - g`` with ``g`` a positive
    root not in ``I``; its ideal is then ``I + {g}``.
    """
    start: FrozenSet[Root] = frozenset()
    seen: Dict[FrozenSet[Root], Tuple[int, ...]] = {start: ()}
    queue = deque([start])
    while queue:
        ideal = queue.popleft()
        word = seen[ideal]
        winv = inverse(word)
        for i in range(rs.rank + 1):
            r = apply_word_linear(rs, winv, simple_affine_root(rs, i))
            if r.level != 1:
                continue
            g = tuple(-c for c in r.finite)
            if not rs.is_positive_root(g) or g in ideal:
                continue
            new = ideal | {g}
            if new not in seen:
                seen[new] = (i,) + word
                queue.append(new)
    out = [AbelianIdeal(tuple(I), w) for I, w in seen.items()]
    return sorted(out, key=_ideal_key)


def _ideal_key(I: AbelianIdeal):
    return (len(I.roots), [root_key(x) for x in reversed(I.roots)])


def oracle_enumerate_ideals(rs: RootSystem) -> List[FrozenSet[Root]]:
    """Upper sets of the positive-root poset that satisfy commutativity.

    Uses only root addition, no Weyl group.  Guarded to small systems.
    """
    pos = rs.positive_roots
    if len(pos) > ORACLE_MAX_POSITIVE:
        raise RootSystemError(
            f"{rs.type} has {len(pos)} positive roots; oracle is limited to {ORACLE_MAX_POSITIVE}")
    above = {x: [s for v in pos if (s := add(x, v)) in rs.roots] for x in pos}

    def commutes(x, chosen):
        return add(x, x) not in rs.roots and all(add(x, y) not in rs.roots for y in chosen)

    order = sorted(pos, key=root_key, reverse=True)
    return sorted(upper_sets(order, above, commutes),
                  key=lambda s: (len(s), sorted(map(root_key, s), reverse=True)))


def is_minuscule(rs: RootSystem, word: Sequence[int]) -> bool:
    """Every inversion has the form ``delta - g`` with ``g`` a positive root."""
    inv = inversion_set(rs, word)
    if len(inv) != len(word):
        return False
    return all(r.level == 1 and rs.is_positive_root(tuple(-c for c in r.finite)) for r in inv)


def ideal_of_word(rs: RootSystem, word: Sequence[int]) -> FrozenSet[Root]:
    """``I_w`` for a minuscule word."""
    if not is_minuscule(rs, word):
        raise ValueError(f"word {tuple(word)} is not minuscule")
    return frozenset(tuple(-c for c in r.finite) for r in inversion_set(rs, word))


def rootlet(rs: RootSystem, I: AbelianIdeal) -> Root:
    """``w(a_0) + delta`` for the minuscule ``w`` of a non-trivial ideal."""
    if not I.roots:
        raise ValueError("rootlet undefined for the empty ideal")
    r = apply_word_linear(rs, I.word, simple_affine_root(rs, 0))
    tau = AffineRoot(r.finite, r.level + 1)
    if tau.level != 0 or not rs.is_positive_root(tau.finite) or not rs.is_long(tau.finite):
        raise AssertionError(f"{rs.type}: rootlet {tau} of {I.roots} is not a long positive root")
    return tau.finite


def is_long_ideal(rs: RootSystem, I) -> bool:
    return all(rs.is_long(x) for x in _as_set(rs, I))


@dataclass(frozen=True)
class LongCharacterizations:
    by_roots: bool
    by_word: bool
    by_alcove: bool
    by_rootlet: bool

    @property
    def agree(self) -> bool:
        return len({self.by_roots, self.by_word, self.by_alcove, self.by_rootlet}) == 1


def long_characterizations(rs: RootSystem, I: AbelianIdeal, check: bool = True) -> LongCharacterizations:
    """Decide whether ``I`` is long in four ways.

    * by_roots: every root of ``I`` is long;
    * by_word: the stored word uses no short simple reflection
      (``s_0`` counts as long);
    * by_alcove: ``w^-1 . C`` lies inside ``C_s``;
    * by_rootlet: ``theta - rootlet`` involves only long simple roots.

    With ``check`` set, disagreement raises :class:`CharacterizationMismatch`.
    """
    if rs.theta_s is None:
        raise RootSystemError(f"{rs.type} has a single root length")
    by_roots = is_long_ideal(rs, I)
    short = {i + 1 for i in rs.short_simple_indices}
    by_word = not any(i in short for i in I.word)
    by_alcove = region(rs, alcove_image(rs, I.word)).in_cs
    if I.roots:
        diff = sub(rs.theta, rootlet(rs, I))
        by_rootlet = all(diff[i] == 0 for i in rs.short_simple_indices)
    else:
        by_rootlet = by_roots
    res = LongCharacterizations(by_roots, by_word, by_alcove, by_rootlet)
    if check and not res.agree:
        raise CharacterizationMismatch(
            f"{rs.type}: long characterizations disagree on {I.roots} (word {I.word}): {res}", I)
    return res


def generators(rs: RootSystem, I) -> Tuple[Root, ...]:
    """Minimal roots of ``I`` in the root poset."""
    S = _as_set(rs, I)
    out = [g for g in S if not any(sub(g, v) in S for v in rs.positive_roots)]
    return tuple(sorted(out, key=root_key))


def long_ideals(rs: RootSystem, ideals: Optional[Iterable[AbelianIdeal]] = None) -> List[AbelianIdeal]:
    """Long Abelian ideals; their number is checked against ``d ** #long simple roots``."""
    if rs.theta_s is None:
        raise RootSystemError(f"{rs.type}: long ideals need two root lengths")
    if ideals is None:
        ideals = enumerate_ideals(rs)
    out = [I for I in ideals if is_long_ideal(rs, I)]
    ratio, _ = rs.long_ideal_count_formula()
    if len(out) != ratio:
        raise AssertionError(f"{rs.type}: {len(out)} long ideals, expected {ratio}")
    return out


def maximal_ideals(ideals: Iterable[AbelianIdeal]) -> List[AbelianIdeal]:
    ideals = list(ideals)
    return [I for I in ideals
            if not any(I.root_set < J.root_set for J in ideals)]


def ideal_to_json(rs: RootSystem, I: AbelianIdeal) -> dict:
    out = {
        "type": str(rs.type),
        "roots": [list(x) for x in I.roots],
        "word": list(I.word),
        "long": is_long_ideal(rs, I),
        "rootlet": list(rootlet(rs, I)) if I.roots else None,
        "generators": [list(x) for x in generators(rs, I)],
    }
    if epsilon_coords(rs, rs.theta) is not None:
        out["roots_eps"] = [list(epsilon_coords(rs, x)) for x in I.roots]
    return out
