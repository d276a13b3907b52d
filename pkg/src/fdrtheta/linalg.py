"""Small exact linear algebra over any field whose elements support + - * /.

Used for basis-change matrices (Fraction entries) and the Macdonald
transition matrix (RatFuncQT entries).  Matrices are lists of row lists.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd, isqrt

import numpy as np

__all__ = [
    "invert",
    "solve",
    "mat_mul",
    "identity",
    "SingularMatrixError",
    "fraction_free_inverse",
    "rref_mod_p",
    "rational_reconstruction",
    "RowSpace",
    "row_space",
]


class SingularMatrixError(ArithmeticError):
    pass


def identity(n, one=1, zero=0):
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    n, m = len(a), len(b[0]) if b else 0
    out = []
    for i in range(n):
        row = []
        ai = a[i]
        for j in range(m):
            s = 0
            for k, x in enumerate(ai):
                if x:
                    y = b[k][j]
                    if y:
                        s = s + x * y
            row.append(s)
        out.append(row)
    return out


def _gauss_jordan(a, rhs, pivot_key):
    """Reduce ``a`` to the identity, applying the same row operations to ``rhs``."""
    n = len(a)
    a = [list(r) for r in a]
    rhs = [list(r) for r in rhs]
    for col in range(n):
        candidates = [r for r in range(col, n) if a[r][col]]
        if not candidates:
            raise SingularMatrixError(f"singular matrix at column {col}")
        piv = min(candidates, key=lambda r: pivot_key(a[r][col])) if pivot_key else candidates[0]
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            rhs[col], rhs[piv] = rhs[piv], rhs[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv if x else x for x in a[col]]
        rhs[col] = [x * inv if x else x for x in rhs[col]]
        prow, prhs = a[col], rhs[col]
        for r in range(n):
            if r != col:
                f = a[r][col]
                if f:
                    a[r] = [x - f * y if y else x for x, y in zip(a[r], prow)]
                    rhs[r] = [x - f * y if y else x for x, y in zip(rhs[r], prhs)]
    return rhs


def invert(a, pivot_key=None):
    """Exact inverse of a square matrix.

    ``pivot_key`` ranks candidate pivots (smaller is preferred); for rational
    functions a degree measure keeps intermediate expressions small.
    """
    n = len(a)
    return _gauss_jordan(a, identity(n), pivot_key)


def solve(a, b, pivot_key=None):
    """Solve a x = b for a square nonsingular ``a``; ``b`` is a list of columns' rows."""
    return _gauss_jordan(a, b, pivot_key)


def _int_exact(a, b):
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError("inexact division")
    return q


def fraction_free_inverse(a, exact_div=_int_exact, one=1, zero=0, pivot_key=None):
    """Fraction-free Gauss-Jordan elimination over an integral domain.

    Returns ``(adj, det)`` with ``a @ adj == det * I`` (``det`` is the
    determinant up to sign).  Every division is exact, so entries stay in the
    domain and never need gcd reductions along the way.
    """
    n = len(a)
    rows = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(a)]
    prev = one
    for k in range(n):
        candidates = [r for r in range(k, n) if rows[r][k]]
        if not candidates:
            raise SingularMatrixError(f"singular matrix at column {k}")
        piv = min(candidates, key=lambda r: pivot_key(rows[r][k])) if pivot_key else candidates[0]
        if piv != k:
            rows[k], rows[piv] = rows[piv], rows[k]
        pk = rows[k]
        akk = pk[k]
        for i in range(n):
            if i == k:
                continue
            ri = rows[i]
            aik = ri[k]
            new = []
            for j in range(2 * n):
                x = akk * ri[j] if ri[j] else zero
                if aik and pk[j]:
                    x = x - aik * pk[j]
                new.append(exact_div(x, prev) if x else zero)
            rows[i] = new
        prev = akk
    det = prev
    # row i now reads (0 .. d_i .. 0 | adj row); rescale rows whose pivot is not det
    adj = []
    for i in range(n):
        d = rows[i][i]
        row = rows[i][n:]
        if d != det:
            row = [exact_div(x * det, d) if x else zero for x in row]
        adj.append(row)
    return adj, det


# ---------------------------------------------------------------------------
# row spaces of integer matrices: modular elimination, lifted and certified
# ---------------------------------------------------------------------------

PRIMES = (2147483647, 2147483629, 2147483587, 2147483579, 2147483563, 2147483549)


def rref_mod_p(a, p):
    """Reduced row echelon form of an int64 array modulo a prime p < 2**31.

    Returns (pivot columns, rows) with rows the nonzero part of the RREF.
    """
    m = np.array(a, dtype=np.int64) % p
    nrows, ncols = m.shape
    pivots = []
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        nz = np.nonzero(m[rank:, col])[0]
        if nz.size == 0:
            continue
        r = rank + int(nz[0])
        if r != rank:
            m[[rank, r]] = m[[r, rank]]
        inv = pow(int(m[rank, col]), -1, p)
        m[rank] = m[rank] * inv % p
        factors = m[:, col].copy()
        factors[rank] = 0
        rows = np.nonzero(factors)[0]
        if rows.size:
            m[rows] = (m[rows] - np.outer(factors[rows], m[rank])) % p
        pivots.append(col)
        rank += 1
    return pivots, m[:rank]


def rational_reconstruction(a, modulus):
    """Fraction n/d with |n|, d <= sqrt(modulus/2) and n = a*d mod modulus, or None."""
    a %= modulus
    bound = isqrt(modulus // 2)
    r0, r1 = modulus, a
    s0, s1 = 0, 1
    while r1 > bound:
        quo = r0 // r1
        r0, r1 = r1, r0 - quo * r1
        s0, s1 = s1, s0 - quo * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    return Fraction(r1, s1)


class RowSpace:
    """Exact row space of an integer matrix, stored as its rational RREF.

    ``pivots[r]`` is the pivot column of ``rows[r]``; the rows are integer
    vectors scaled so that each pivot entry equals ``denominator``.
    """

    def __init__(self, ncols, pivots, rows, denominator):
        self.ncols = ncols
        self.pivots = tuple(pivots)
        self.rows = rows
        self.denominator = denominator

    @property
    def dimension(self):
        return len(self.pivots)

    def coordinates(self, vector):
        """Coordinates of a vector known to lie in the space."""
        return [Fraction(vector[c]) for c in self.pivots]

    def fraction_rows(self):
        d = self.denominator
        return [[Fraction(int(x), d) for x in row] for row in self.rows]


def _lift(residues, moduli):
    """Chinese remaindering of per-prime RREFs, then rational reconstruction."""
    modulus = 1
    combined = None
    for res, p in zip(residues, moduli):
        res = [[int(x) for x in row] for row in res]
        if combined is None:
            combined = res
        else:
            inv = pow(modulus, -1, p)
            combined = [
                [x + modulus * ((y - x) * inv % p) for x, y in zip(rx, ry)]
                for rx, ry in zip(combined, res)
            ]
        modulus *= p
    out = []
    for row in combined:
        lifted = []
        for x in row:
            f = rational_reconstruction(x, modulus) if x else Fraction(0)
            if f is None:
                return None
            lifted.append(f)
        out.append(lifted)
    return out


def _contained(gens, pivots, rows, denominator):
    """Exact check that every generator row lies in the span of ``rows``."""
    if not pivots:
        return not gens.any()
    big = int(np.abs(gens).max()) * max(int(np.abs(rows).max()), denominator) * (len(pivots) + 1)
    if big < 2**62:
        g = gens
        b = rows
    else:
        g = gens.astype(object)
        b = rows.astype(object)
    resid = g * denominator - g[:, list(pivots)] @ b
    return not np.any(resid != 0)


def row_space(gens, ncols, seed=0):
    """Certified exact row space of an integer generator matrix.

    The generators are first compressed by a random integer combination,
    reduced modulo word-sized primes and lifted to rationals.  The result is
    accepted only if every original generator lies in the lifted span, which
    together with the modular rank bound proves equality over Q.
    """
    gens = np.asarray(gens, dtype=np.int64).reshape(-1, ncols)
    if gens.shape[0] == 0 or not gens.any():
        return RowSpace(ncols, (), np.zeros((0, ncols), dtype=np.int64), 1)
    rng = random.Random(seed)
    nrows = gens.shape[0]
    if nrows > ncols + 8:
        mix = np.array(
            [[rng.randrange(1, 1 << 12) for _ in range(nrows)] for _ in range(ncols + 8)],
            dtype=np.int64,
        )
        if int(np.abs(gens).max()) * nrows < 2**50:
            work = mix @ gens
        else:
            work = mix.astype(object) @ gens.astype(object)
    else:
        work = gens
    residues, moduli, pivots = [], [], None
    for p in PRIMES:
        piv, red = rref_mod_p(np.array(work % p, dtype=np.int64), p)
        if pivots is None or len(piv) > len(pivots):
            pivots, residues, moduli = piv, [], []
        elif piv != pivots:
            continue
        residues.append(red)
        moduli.append(p)
        lifted = _lift(residues, moduli)
        if lifted is None:
            continue
        den = 1
        for row in lifted:
            for x in row:
                den = den * x.denominator // gcd(den, x.denominator)
        rows = [[int(x * den) for x in row] for row in lifted]
        try:
            rows = np.array(rows, dtype=np.int64)
        except OverflowError:
            rows = np.array(rows, dtype=object)
        if _contained(gens, pivots, rows, den):
            return RowSpace(ncols, pivots, rows, den)
    raise ArithmeticError("row space could not be certified with the available primes")
