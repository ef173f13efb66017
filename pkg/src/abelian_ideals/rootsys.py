"""Finite root systems of simple Lie algebras, built from Cartan matrices.

Roots are integer coefficient tuples over the simple roots.  Points of the
real span V are tuples of :class:`fractions.Fraction` in the same basis.
No floating point is used anywhere.

Cartan matrix convention: ``cartan[i][j] = 2 (a_i, a_j) / (a_i, a_i)``, so
row ``i`` describes the simple reflection ``s_i(a_j) = a_j - cartan[i][j] a_i``.
The Gram matrix is ``D @ cartan`` with ``D`` diagonal, normalized so that
short simple roots have squared length 2.

Simple-root numbering (frozen; the F4 and G2 choices decide which simple
roots are long)::

    A_p  a1 - a2 - ... - ap
    B_p  a1 - ... - a(p-1) => ap          ap short
    C_p  a1 - ... - a(p-1) <= ap          ap long
    D_p  a1 - ... - a(p-2) < a(p-1), ap   (D3 is A3 with a1 in the middle)
    E_n  a1 - a3 - a4 - ... - an, a2 attached to a4
    F4   a1 - a2 <= a3 - a4               a1, a2 short; a3, a4 long
    G2   a1 <= a2                         a1 short, a2 long

With this table the highest root of F4 is 2a1+4a2+3a3+2a4 and the short
dominant root is 2a1+3a2+2a3+a4.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import prod
from typing import Dict, List, Optional, Sequence, Tuple

Root = Tuple[int, ...]
RationalVector = Tuple[Fraction, ...]

LONG = "long"
SHORT = "short"

# Classical counts of positive roots, used as a construction check.
_POSITIVE_COUNT = {
    "A": lambda p: p * (p + 1) // 2,
    "B": lambda p: p * p,
    "C": lambda p: p * p,
    "D": lambda p: p * (p - 1),
    "E": lambda p: {6: 36, 7: 63, 8: 120}[p],
    "F": lambda p: 24,
    "G": lambda p: 6,
}

_TYPE_RE = re.compile(r"^\s*([A-Ga-g])\s*(\d+)\s*$")


class RootSystemError(ValueError):
    """Raised for inadmissible types and invalid root arguments."""


@dataclass(frozen=True, order=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self):
        fam, p = self.family, self.rank
        if fam not in _POSITIVE_COUNT:
            raise RootSystemError(f"unknown family {fam!r}; expected one of A-G")
        if not isinstance(p, int) or p < 1:
            raise RootSystemError(f"rank must be a positive integer, got {p!r}")
        if fam in "BC" and p < 2:
            raise RootSystemError(f"type {fam} needs rank >= 2, got {p}")
        if fam == "D" and p < 3:
            raise RootSystemError(f"type D needs rank >= 3, got {p}")
        if fam == "E" and p not in (6, 7, 8):
            raise RootSystemError(f"type E needs rank 6, 7 or 8, got {p}")
        if fam == "F" and p != 4:
            raise RootSystemError(f"type F needs rank 4, got {p}")
        if fam == "G" and p != 2:
            raise RootSystemError(f"type G needs rank 2, got {p}")

    @classmethod
    def parse(cls, text: str) -> "SimpleType":
        """Parse strings like ``"B4"`` or ``"f4"``."""
        m = _TYPE_RE.match(text)
        if not m:
            raise RootSystemError(f"cannot parse root system type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def dual(self) -> "SimpleType":
        return SimpleType({"B": "C", "C": "B"}.get(self.family, self.family), self.rank)


def cartan_matrix(t: SimpleType) -> Tuple[Tuple[int, ...], ...]:
    """Cartan matrix of ``t`` in the numbering documented at module level."""
    p = t.rank
    c = [[0] * p for _ in range(p)]
    for i in range(p):
        c[i][i] = 2

    def bond(i, j, a_ij=-1, a_ji=-1):
        # 1-based indices
        c[i - 1][j - 1] = a_ij
        c[j - 1][i - 1] = a_ji

    fam = t.family
    if fam in "ABC":
        for i in range(1, p - 1):
            bond(i, i + 1)
        if p >= 2:
            if fam == "A":
                bond(p - 1, p)
            elif fam == "B":
                bond(p - 1, p, -1, -2)
            else:
                bond(p - 1, p, -2, -1)
    elif fam == "D":
        for i in range(1, p - 1):
            bond(i, i + 1)
        bond(p - 2, p)
    elif fam == "E":
        bond(1, 3)
        bond(2, 4)
        for i in range(3, p):
            bond(i, i + 1)
    elif fam == "F":
        bond(1, 2)
        bond(2, 3, -2, -1)
        bond(3, 4)
    elif fam == "G":
        bond(1, 2, -3, -1)
    return tuple(tuple(row) for row in c)


def _symmetrizer(cartan: Sequence[Sequence[int]]) -> List[Fraction]:
    """Diagonal D with D @ cartan symmetric and min(D) = 1."""
    p = len(cartan)
    d: List[Optional[Fraction]] = [None] * p
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(p):
            if j != i and cartan[i][j] != 0:
                if cartan[j][i] == 0:
                    raise RootSystemError("Cartan matrix is not symmetrizable")
                val = d[i] * cartan[i][j] / cartan[j][i]
                if d[j] is None:
                    d[j] = val
                    stack.append(j)
                elif d[j] != val:
                    raise RootSystemError("Cartan matrix is not symmetrizable")
    if any(x is None for x in d):
        raise RootSystemError("Dynkin diagram is disconnected")
    low = min(d)
    return [x / low for x in d]


def solve(matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> RationalVector:
    """Exact Gauss-Jordan solve of ``matrix @ x = rhs`` over the rationals."""
    n = len(matrix)
    a = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
    return tuple(a[r][n] for r in range(n))


def height(x: Root) -> int:
    return sum(x)


def root_key(x: Root):
    """Canonical ordering: height first, then lexicographic coefficients."""
    return (sum(x), tuple(x))


def add(x: Sequence, y: Sequence) -> tuple:
    return tuple(a + b for a, b in zip(x, y))


def sub(x: Sequence, y: Sequence) -> tuple:
    return tuple(a - b for a, b in zip(x, y))


def scale(c, x: Sequence) -> tuple:
    return tuple(c * a for a in x)


def neg(x: Sequence) -> tuple:
    return tuple(-a for a in x)


def _positive_roots(cartan) -> List[Root]:
    """Close the simple roots under root addition using root strings.

    For a positive root b and simple root a_i, with p the largest k such
    that b - k a_i is a root, b + a_i is a root iff p - <b, a_i^v> > 0.
    Roots are processed by height, so the downward string is always known.
    """
    p = len(cartan)
    simple = [tuple(int(i == j) for j in range(p)) for i in range(p)]
    found = set(simple)
    layer = list(simple)
    while layer:
        nxt = set()
        for b in layer:
            for i in range(p):
                pair = sum(b[j] * cartan[i][j] for j in range(p))
                down = 0
                e = simple[i]
                cur = sub(b, e)
                while cur in found:
                    down += 1
                    cur = sub(cur, e)
                if down - pair > 0:
                    nxt.add(add(b, e))
        found |= nxt
        layer = sorted(nxt)
    return sorted(found, key=root_key)


@dataclass(frozen=True)
class RootSystem:
    """An immutable finite root system with its exact Gram form.

    Build with :func:`build` (or :meth:`from_cartan` for a relabelled
    system such as a Langlands dual).
    """

    type: SimpleType
    cartan: Tuple[Tuple[int, ...], ...]
    gram: Tuple[Tuple[Fraction, ...], ...] = field(repr=False)
    positive_roots: Tuple[Root, ...] = field(repr=False)

    @classmethod
    def from_cartan(cls, t: SimpleType, cartan) -> "RootSystem":
        cartan = tuple(tuple(int(v) for v in row) for row in cartan)
        d = _symmetrizer(cartan)
        gram = tuple(tuple(d[i] * cartan[i][j] for j in range(len(cartan)))
                     for i in range(len(cartan)))
        for i in range(len(gram)):
            for j in range(len(gram)):
                if gram[i][j] != gram[j][i]:
                    raise RootSystemError("symmetrized Cartan form is not symmetric")
        rs = cls(t, cartan, gram, tuple(_positive_roots(cartan)))
        expected = _POSITIVE_COUNT[t.family](t.rank)
        if len(rs.positive_roots) != expected:
            raise RootSystemError(
                f"{t}: generated {len(rs.positive_roots)} positive roots, expected {expected}")
        return rs

    # -- basic data ---------------------------------------------------------

    @property
    def rank(self) -> int:
        return self.type.rank

    @cached_property
    def simple_roots(self) -> Tuple[Root, ...]:
        p = self.rank
        return tuple(tuple(int(i == j) for j in range(p)) for i in range(p))

    @cached_property
    def roots(self) -> frozenset:
        return frozenset(self.positive_roots) | frozenset(neg(x) for x in self.positive_roots)

    @cached_property
    def _positive_set(self) -> frozenset:
        return frozenset(self.positive_roots)

    def is_root(self, x: Sequence[int]) -> bool:
        return tuple(x) in self.roots

    def is_positive_root(self, x: Sequence[int]) -> bool:
        return tuple(x) in self._positive_set

    @cached_property
    def positive_sums(self) -> Dict[Root, Tuple[Root, ...]]:
        """For each positive root x, the roots x + v with v positive."""
        out = {}
        for x in self.positive_roots:
            out[x] = tuple(s for v in self.positive_roots if (s := add(x, v)) in self.roots)
        return out

    def check_root(self, x: Sequence[int]) -> Root:
        x = tuple(x)
        if x not in self.roots:
            raise RootSystemError(f"{x} is not a root of {self.type}")
        return x

    # -- bilinear form ------------------------------------------------------

    @cached_property
    def _int_gram(self) -> Tuple[Tuple[int, ...], ...]:
        # short simple roots have squared length 2, so every entry is an integer
        for row in self.gram:
            assert all(v.denominator == 1 for v in row)
        return tuple(tuple(int(v) for v in row) for row in self.gram)

    def inner(self, u: Sequence, v: Sequence) -> Fraction:
        """``u^T gram v`` for vectors in the simple-root basis."""
        g = self._int_gram
        total = 0
        for i, a in enumerate(u):
            if a:
                row = g[i]
                total += a * sum(row[j] * b for j, b in enumerate(v) if b)
        return Fraction(total)

    def covector(self, x: Sequence) -> tuple:
        """``gram @ x``, so that ``inner(u, x) == sum(u_i * covector(x)_i)``."""
        g = self._int_gram
        return tuple(sum(row[j] * b for j, b in enumerate(x) if b) for row in g)

    @cached_property
    def _root_norm2(self) -> Dict[Root, int]:
        return {x: int(self.inner(x, x)) for x in self.roots}

    def norm2(self, x: Sequence) -> Fraction:
        x = tuple(x)
        n = self._root_norm2.get(x)
        return Fraction(n) if n is not None else self.inner(x, x)

    def pairing(self, v: Sequence, x: Sequence) -> Fraction:
        """``<v, x^v> = 2 (v, x) / (x, x)``."""
        return 2 * self.inner(v, x) / self.norm2(x)

    def theta_pairing(self, v: Sequence[int]) -> int:
        """``<v, theta^v>`` for an integer vector ``v``."""
        w = self._theta_covector
        c = sum(a * b for a, b in zip(v, w))
        q, r = divmod(c, self._root_norm2[self.theta])
        assert r == 0
        return q

    @cached_property
    def _theta_covector(self) -> Tuple[int, ...]:
        g = self._int_gram
        return tuple(2 * sum(g[i][j] * t for j, t in enumerate(self.theta)) for i in range(self.rank))

    def coroot(self, x: Sequence) -> RationalVector:
        """``2x / (x, x)`` as a vector in the simple-root basis."""
        x = self.check_root(x)
        n = self.norm2(x)
        return tuple(Fraction(2 * c) / n for c in x)

    def reflect(self, i: int, v: Sequence) -> tuple:
        """Linear simple reflection ``s_i`` (0-based ``i``) on a vector."""
        row = self.cartan[i]
        c = sum(row[j] * b for j, b in enumerate(v) if b)
        v = list(v)
        v[i] -= c
        return tuple(v)

    # -- distinguished roots --------------------------------------------------

    @cached_property
    def theta(self) -> Root:
        """Highest root."""
        top = self.positive_roots[-1]
        for x in self.positive_roots:
            if any(a > b for a, b in zip(x, top)):
                raise RootSystemError("highest root is not unique")
        return top

    @cached_property
    def is_simply_laced(self) -> bool:
        return len({self.norm2(a) for a in self.simple_roots}) == 1

    @cached_property
    def theta_s(self) -> Optional[Root]:
        """Short dominant root; ``None`` for simply-laced systems."""
        if self.is_simply_laced:
            return None
        dominant = [x for x in self.positive_roots if self.length_class(x) == SHORT
                    and all(self.inner(x, a) >= 0 for a in self.simple_roots)]
        if len(dominant) != 1:
            raise RootSystemError(f"expected one short dominant root, found {dominant}")
        return dominant[0]

    @cached_property
    def length_ratio(self) -> int:
        """``|theta|^2 / |theta_s|^2``; 1 when simply-laced."""
        if self.is_simply_laced:
            return 1
        r = self.norm2(self.theta) / self.norm2(self.theta_s)
        assert r.denominator == 1
        return int(r)

    @cached_property
    def _length_classes(self) -> Dict[Root, str]:
        top = self._root_norm2[self.theta]
        return {x: LONG if n == top else SHORT for x, n in self._root_norm2.items()}

    def length_class(self, x: Sequence[int]) -> str:
        return self._length_classes[self.check_root(x)]

    def is_long(self, x: Sequence[int]) -> bool:
        return self.length_class(x) == LONG

    @cached_property
    def long_simple_indices(self) -> Tuple[int, ...]:
        """0-based indices of the long simple roots."""
        return tuple(i for i, a in enumerate(self.simple_roots) if self.is_long(a))

    @cached_property
    def short_simple_indices(self) -> Tuple[int, ...]:
        return tuple(i for i, a in enumerate(self.simple_roots) if not self.is_long(a))

    @property
    def long_simple_count(self) -> int:
        return len(self.long_simple_indices)

    def positive_of_length(self, cls: str) -> Tuple[Root, ...]:
        return tuple(x for x in self.positive_roots if self.length_class(x) == cls)

    # -- sums and duals -----------------------------------------------------

    def sum_roots(self, x: Sequence[int], y: Sequence[int]) -> Optional[Root]:
        """``x + y`` if it is a root, else ``None``."""
        s = add(self.check_root(x), self.check_root(y))
        return s if s in self.roots else None

    def fundamental_coweight(self, i: int) -> RationalVector:
        """The vector w with ``(w, a_j) = [i == j]``; ``i`` is 1-based."""
        if not 1 <= i <= self.rank:
            raise RootSystemError(f"index {i} out of range 1..{self.rank}")
        e = [Fraction(int(j == i - 1)) for j in range(self.rank)]
        return solve(self.gram, e)

    def to_dual(self, x: Sequence[int]) -> Root:
        """Coordinates of the coroot ``x^v`` in the basis of simple coroots."""
        x = self.check_root(x)
        n = self.norm2(x)
        out = []
        for i, c in enumerate(x):
            v = Fraction(c) * self.norm2(self.simple_roots[i]) / n
            assert v.denominator == 1
            out.append(int(v))
        return tuple(out)

    @cached_property
    def dual(self) -> "RootSystem":
        """The coroot system, simple roots labelled as in ``self``."""
        t = [list(r) for r in zip(*self.cartan)]
        return RootSystem.from_cartan(self.type.dual, t)

    def long_ideal_count_formula(self) -> Tuple[int, int]:
        """Both sides of ``prod(m_i)/prod(c_i) = d ** #long simple roots``.

        ``m_i`` and ``c_i`` are the coefficients of ``theta`` and ``theta_s``.
        """
        if self.theta_s is None:
            raise RootSystemError(f"{self.type}: no short dominant root (simply-laced)")
        num, den = prod(self.theta), prod(self.theta_s)
        if num % den:
            raise AssertionError(f"{self.type}: {num}/{den} is not an integer")
        ratio = num // den
        power = self.length_ratio ** self.long_simple_count
        if ratio != power:
            raise AssertionError(f"{self.type}: prod m/prod c = {ratio} != d^a = {power}")
        return ratio, power


_CACHE: Dict[SimpleType, RootSystem] = {}


def build(t) -> RootSystem:
    """Root system of type ``t`` (a :class:`SimpleType` or a string like ``"F4"``)."""
    if isinstance(t, str):
        t = SimpleType.parse(t)
    if t not in _CACHE:
        _CACHE[t] = RootSystem.from_cartan(t, cartan_matrix(t))
    return _CACHE[t]


def dualize(rs: RootSystem) -> Tuple[RootSystem, Dict[Root, Root]]:
    """Dual system together with the coroot bijection on all roots."""
    dual = rs.dual
    mapping = {x: rs.to_dual(x) for x in rs.roots}
    assert set(mapping.values()) == dual.roots
    return dual, mapping


def epsilon_coords(rs: RootSystem, x: Sequence[int]) -> Optional[Tuple[int, ...]]:
    """Standard orthonormal-basis coordinates for types B and C, else ``None``.

    B_p: a_i = e_i - e_(i+1), a_p = e_p.  C_p: a_i = e_i - e_(i+1), a_p = 2 e_p.
    """
    fam, p = rs.type.family, rs.rank
    if fam not in "BC" or tuple(map(tuple, rs.cartan)) != cartan_matrix(rs.type):
        return None
    out = []
    for j in range(p):
        c = x[j] - (x[j - 1] if j else 0)
        if j == p - 1 and fam == "C":
            c = 2 * x[j] - (x[j - 1] if j else 0)
        out.append(c)
    return tuple(out)


def format_root(x: Sequence[int], prefix: str = "a") -> str:
    """Render ``(2, 4, 3, 2)`` as ``"2a1+4a2+3a3+2a4"``."""
    parts = []
    for i, c in enumerate(x, 1):
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = "" if abs(c) == 1 else str(abs(c))
        parts.append(f"{sign}{mag}{prefix}{i}")
    if not parts:
        return "0"
    s = "".join(parts)
    return s[1:] if s[0] == "+" else s
