"""Brute-force count of Borel-stable commutative subalgebras for gl_r x gl_(n-r) in gl_n.

The odd part V is spanned by the matrix units ``E_ij`` in the two
off-diagonal blocks.  Weights ``e_i - e_j`` of V are multiplicity free, so
every Borel-stable subspace is spanned by a set of matrix units, and the
search runs over such sets.
"""

from __future__ import annotations

from math import comb
from typing import List, Sequence, Tuple

import numpy as np

MAX_POSITIONS = 24

Position = Tuple[int, int]


class GuardExceeded(ValueError):
    pass


def block_positions(n: int, r: int) -> List[Position]:
    """Matrix units of V, 1-based, upper block first."""
    _check(n, r)
    upper = [(i, j) for i in range(1, r + 1) for j in range(r + 1, n + 1)]
    lower = [(i, j) for i in range(r + 1, n + 1) for j in range(1, r + 1)]
    return upper + lower


def borel_generators(n: int, r: int) -> List[Position]:
    """Strictly upper-triangular units of each diagonal block.

    Diagonal matrices act on matrix units by scalars and impose nothing.
    """
    blocks = [range(1, r + 1), range(r + 1, n + 1)]
    return [(k, l) for b in blocks for k in b for l in b if k < l]


def bracket_units(a: Position, b: Position):
    """``[E_a, E_b]`` as a list of ``(coefficient, position)`` terms."""
    (i, j), (k, l) = a, b
    out = []
    if j == k:
        out.append((1, (i, l)))
    if l == i:
        out.append((-1, (k, j)))
    return out


def _check(n: int, r: int):
    if not 1 <= r < n:
        raise ValueError(f"need 1 <= r < n, got n={n}, r={r}")


def gl_formula(n: int, r: int) -> int:
    """``C(n, r) + (n - r) C(n - 1, r - 1)``."""
    _check(n, r)
    return comb(n, r) + (n - r) * comb(n - 1, r - 1)


def gl_subalgebras(n: int, r: int) -> List[Tuple[Position, ...]]:
    """Every Borel-stable commutative set of matrix units.

    Depth-first over positions with pruning on commutativity; stability is
    checked on completed sets.
    """
    _check(n, r)
    if 2 * r * (n - r) > MAX_POSITIONS:
        raise GuardExceeded(
            f"gl_{n} with r={r} has {2 * r * (n - r)} positions (limit {MAX_POSITIONS}); "
            f"use gl_formula instead")
    pos = block_positions(n, r)
    gens = borel_generators(n, r)
    m = len(pos)
    index = {p: t for t, p in enumerate(pos)}
    # conflict[t]: bitmask of positions not commuting with position t
    conflict = [0] * m
    for t, a in enumerate(pos):
        for u, b in enumerate(pos):
            if bracket_units(a, b):
                conflict[t] |= 1 << u
    # need[t]: bitmask of positions forced by stability once t is present
    need = [0] * m
    for t, a in enumerate(pos):
        for g in gens:
            for _, c in bracket_units(g, a):
                need[t] |= 1 << index[c]

    found = []

    def stable(mask: int) -> bool:
        t = mask
        while t:
            low = t & -t
            if need[low.bit_length() - 1] & ~mask:
                return False
            t ^= low
        return True

    def rec(t: int, mask: int, blocked: int):
        if t == m:
            if stable(mask):
                found.append(mask)
            return
        rec(t + 1, mask, blocked)
        if not blocked >> t & 1:
            rec(t + 1, mask | 1 << t, blocked | conflict[t])

    rec(0, 0, 0)
    return [tuple(pos[t] for t in range(m) if mask >> t & 1) for mask in found]


def gl_count(n: int, r: int) -> int:
    return len(gl_subalgebras(n, r))


def _unit(n: int, p: Position) -> np.ndarray:
    e = np.zeros((n, n), dtype=np.int64)
    e[p[0] - 1, p[1] - 1] = 1
    return e


def recheck_with_matrices(n: int, r: int, subsets: Sequence[Sequence[Position]]) -> bool:
    """Re-verify stability and commutativity with explicit integer commutators."""
    gens = [_unit(n, g) for g in borel_generators(n, r)]
    gens += [_unit(n, (k, k)) for k in range(1, n + 1)]
    for S in subsets:
        units = [_unit(n, p) for p in S]
        support = np.zeros((n, n), dtype=bool)
        for p in S:
            support[p[0] - 1, p[1] - 1] = True
        for x in units:
            for g in gens:
                br = g @ x - x @ g
                if np.any(br[~support]):
                    return False
            for y in units:
                if np.any(x @ y - y @ x):
                    return False
    return True


def gl_verify(n: int, r: int) -> bool:
    subsets = gl_subalgebras(n, r)
    return len(subsets) == gl_formula(n, r) and recheck_with_matrices(n, r, subsets)
