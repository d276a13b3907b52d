"""The fermionic diagonal coinvariant ring by brute-force linear algebra.

The ambient algebra is the exterior algebra on theta_1..theta_n, xi_1..xi_n.
A monomial is a pair of index sets, written theta-factors first, then
xi-factors, each block ascending.  The symmetric group permutes indices in
both blocks at once.  For every bidegree we compute the span of the ideal
generated by positive-degree invariants and read off the character of the
quotient from traces.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from itertools import combinations, permutations

import numpy as np

from .characters import ClassFunction
from .kronecker import frobenius_of
from .linalg import RowSpace, row_space
from .partitions import partitions_of
from .symfunc import SymF, zero

__all__ = [
    "ExtMonomial",
    "act",
    "wedge",
    "BidegreePiece",
    "piece",
    "invariant_basis",
    "ideal_bidegree",
    "quotient_character",
    "quotient_dimension",
    "fdr_frobenius",
    "BigradedTable",
    "cycle_representative",
    "OracleBoundExceeded",
    "DEFAULT_ORACLE_BOUND",
]

DEFAULT_ORACLE_BOUND = 6


class OracleBoundExceeded(ValueError):
    pass


@dataclass(frozen=True, order=True)
class ExtMonomial:
    """theta_{theta_set} xi_{xi_set} in canonical order (indices are 1-based)."""

    theta_set: tuple
    xi_set: tuple

    @property
    def bidegree(self):
        return len(self.theta_set), len(self.xi_set)

    def __str__(self):
        factors = [f"theta{i}" for i in self.theta_set] + [f"xi{i}" for i in self.xi_set]
        return "*".join(factors) or "1"


def _sort_sign(seq):
    """(sign of the sorting permutation, sorted tuple); sign 0 on a repeat."""
    inversions = 0
    for a in range(len(seq)):
        for b in range(a + 1, len(seq)):
            if seq[a] > seq[b]:
                inversions += 1
            elif seq[a] == seq[b]:
                return 0, ()
    return (-1 if inversions & 1 else 1), tuple(sorted(seq))


def act(w, mono: ExtMonomial):
    """Apply a permutation (``w[i-1]`` is the image of i) to a monomial.

    Returns (sign, monomial).
    """
    s1, th = _sort_sign([w[i - 1] for i in mono.theta_set])
    s2, xi = _sort_sign([w[i - 1] for i in mono.xi_set])
    return s1 * s2, ExtMonomial(th, xi)


def wedge(a: ExtMonomial, b: ExtMonomial):
    """Product a*b as (sign, monomial); sign 0 when an index repeats."""
    # move b's theta block past a's xi block
    sign = -1 if (len(a.xi_set) * len(b.theta_set)) & 1 else 1
    s1, th = _sort_sign(a.theta_set + b.theta_set)
    s2, xi = _sort_sign(a.xi_set + b.xi_set)
    return sign * s1 * s2, ExtMonomial(th, xi)


class BidegreePiece:
    """All monomials of bidegree (i, j) in a fixed order, with an index."""

    def __init__(self, n, i, j):
        self.n, self.i, self.j = n, i, j
        idx = range(1, n + 1)
        self.monomials = [
            ExtMonomial(a, b) for a in combinations(idx, i) for b in combinations(idx, j)
        ]
        self.index = {mono: k for k, mono in enumerate(self.monomials)}

    @property
    def dimension(self):
        return len(self.monomials)

    def signed_permutation(self, w):
        """Arrays (target index, sign) describing w on this basis."""
        target = np.empty(self.dimension, dtype=np.int64)
        sign = np.empty(self.dimension, dtype=np.int64)
        for k, mono in enumerate(self.monomials):
            s, image = act(w, mono)
            target[k] = self.index[image]
            sign[k] = s
        return target, sign


_lock = threading.RLock()
_pieces = {}
_invariants = {}
_ideals = {}


def _check_range(n, i, j):
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if not (0 <= i <= n and 0 <= j <= n):
        raise ValueError(f"bidegree ({i},{j}) outside 0..{n}")


def piece(n, i, j) -> BidegreePiece:
    _check_range(n, i, j)
    with _lock:
        key = (n, i, j)
        if key not in _pieces:
            _pieces[key] = BidegreePiece(n, i, j)
        return _pieces[key]


def _orbit_representatives(n, a, b):
    # orbits of (theta_set, xi_set) are labelled by the overlap size
    for c in range(max(0, a + b - n), min(a, b) + 1):
        yield ExtMonomial(tuple(range(1, a + 1)), tuple(range(1, c + 1)) + tuple(range(a + 1, a + b - c + 1)))


def invariant_basis(n, a, b):
    """Integer basis (rows over ``piece(n, a, b)``) of the invariants in bidegree (a, b).

    Each row is an orbit sum of signed images over the whole group, divided
    by its content.  Distinct orbits have disjoint supports, so the nonzero
    orbit sums are already independent.
    """
    _check_range(n, a, b)
    with _lock:
        key = (n, a, b)
        if key in _invariants:
            return _invariants[key]
    pc = piece(n, a, b)
    rows = []
    for rep in _orbit_representatives(n, a, b):
        vec = np.zeros(pc.dimension, dtype=np.int64)
        for w in permutations(range(1, n + 1)):
            s, image = act(w, rep)
            vec[pc.index[image]] += s
        if vec.any():
            rows.append(vec // np.gcd.reduce(np.abs(vec[vec != 0])))
    out = np.array(rows, dtype=np.int64).reshape(-1, pc.dimension)
    with _lock:
        _invariants[key] = out
    return out


def _ideal_generators(n, i, j):
    target = piece(n, i, j)
    gens = []
    for a in range(i + 1):
        for b in range(j + 1):
            if a + b == 0:
                continue
            inv = invariant_basis(n, a, b)
            if not len(inv):
                continue
            src = piece(n, a, b)
            support = [
                [(src.monomials[k], int(row[k])) for k in np.nonzero(row)[0]] for row in inv
            ]
            for mono in piece(n, i - a, j - b).monomials:
                for terms in support:
                    vec = np.zeros(target.dimension, dtype=np.int64)
                    for v, c in terms:
                        s, prod = wedge(v, mono)
                        if s:
                            vec[target.index[prod]] += s * c
                    if vec.any():
                        gens.append(vec)
    return np.array(gens, dtype=np.int64).reshape(-1, target.dimension)


def ideal_bidegree(n, i, j) -> RowSpace:
    """Exact basis of the ideal of positive-degree invariants in bidegree (i, j).

    Spanned by v*m over invariants v of bidegree (a, b), 0 < a + b, and all
    monomials m of the complementary bidegree.
    """
    _check_range(n, i, j)
    with _lock:
        key = (n, i, j)
        if key in _ideals:
            return _ideals[key]
    space = row_space(_ideal_generators(n, i, j), piece(n, i, j).dimension, seed=10000 * n + 100 * i + j)
    with _lock:
        _ideals[key] = space
    return space


def cycle_representative(mu):
    """The permutation (1..mu_1)(mu_1+1..mu_1+mu_2)... as an image tuple."""
    w = []
    start = 1
    for part in mu:
        w.extend(range(start + 1, start + part))
        w.append(start)
        start += part
    return tuple(w)


def _trace_full(target, sign):
    fixed = target == np.arange(len(target))
    return int(sign[fixed].sum())


def _trace_ideal(space: RowSpace, target, sign):
    """trace of w on the ideal: solve w.B = B.A with B in reduced echelon form.

    Coordinates of a vector in the row space are its entries at the pivot
    columns, so A[r][s] = (w.b_r)[pivot_s] and trace(A) needs only the
    diagonal.
    """
    if not space.dimension:
        return 0
    # (w.b)[target[k]] = sign[k] * b[k]; invert to read position pivot_r
    source = np.empty_like(target)
    source[target] = np.arange(len(target))
    total = 0
    for r, col in enumerate(space.pivots):
        k = source[col]
        total += int(sign[k]) * int(space.rows[r][k])
    quo, rem = divmod(total, space.denominator)
    if rem:
        raise ArithmeticError(f"non-integer trace {total}/{space.denominator} on the ideal")
    return quo


def quotient_character(n, i, j) -> ClassFunction:
    """Character of the (i, j) piece of the quotient ring."""
    pc = piece(n, i, j)
    space = ideal_bidegree(n, i, j)
    values = {}
    for mu in partitions_of(n):
        target, sign = pc.signed_permutation(cycle_representative(mu))
        values[mu] = _trace_full(target, sign) - _trace_ideal(space, target, sign)
    return ClassFunction(n, values)


def quotient_dimension(n, i, j) -> int:
    return piece(n, i, j).dimension - ideal_bidegree(n, i, j).dimension


class BigradedTable:
    """Frobenius images indexed by bidegree (i, j), 0 <= i, j <= n."""

    def __init__(self, n, entries=None):
        self.n = n
        self.entries = dict(entries or {})

    def __getitem__(self, ij):
        return self.entries.get(ij, zero(self.n))

    def __eq__(self, other):
        if not isinstance(other, BigradedTable) or other.n != self.n:
            return NotImplemented
        keys = set(self.entries) | set(other.entries)
        return all(self[k] == other[k] for k in keys)

    def keys(self):
        return sorted(self.entries)

    def nonzero(self):
        return {k: v for k, v in sorted(self.entries.items()) if v}

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "entries": [
                {"i": i, "j": j, "frobenius": self.entries[i, j].to_json()} for i, j in self.keys()
            ],
        }

    @classmethod
    def from_json(cls, data) -> "BigradedTable":
        try:
            entries = {(int(e["i"]), int(e["j"])): SymF.from_json(e["frobenius"]) for e in data["entries"]}
            return cls(int(data["n"]), entries)
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed table JSON: {exc}") from None

    def format_text(self) -> str:
        rows = [f"({i},{j}): {self.entries[i, j]}" for i, j in self.keys() if self.entries[i, j]]
        return "\n".join(rows) if rows else "(empty)"


def fdr_frobenius(n, bound=DEFAULT_ORACLE_BOUND) -> BigradedTable:
    """Frobenius image of every bidegree piece of the quotient, by the oracle."""
    if n > bound:
        raise OracleBoundExceeded(f"n = {n} exceeds the oracle bound {bound}")
    entries = {}
    for i in range(n + 1):
        for j in range(n + 1):
            entries[i, j] = frobenius_of(quotient_character(n, i, j))
    return BigradedTable(n, entries)

