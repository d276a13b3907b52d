"""Modified Macdonald polynomials and their eigenoperators.

Conventions
-----------
* Diagrams are drawn French style for the filling statistics: row 1 is the
  bottom row and holds the largest part.
* A cell in row r and column c contributes the monomial ``q^(c-1) t^(r-1)``
  to the eigenvalues, so the nabla eigenvalue of ``mu`` is
  ``q^n(mu') t^n(mu)``.  With this choice ``nabla e_k`` at ``t = 0`` is the
  one-row polynomial ``H~_(k)``, which is tested.
* ``theta_e(d, f)`` is ``Pi`` after multiplication by ``e_d[x/M]`` after
  ``Pi^-1``.  Compositions read right to left.

The operators are applied in the modified Macdonald basis: the Schur
expansions of ``H~_mu`` come from the inversion/major-index filling formula,
and the inverse transition matrix is computed once per degree by exact
Gauss-Jordan elimination over Q(q,t).
"""

from __future__ import annotations

import threading
from functools import lru_cache

from .coeffs import PoleError, PolyQT, RatFuncQT, substitute
from .linalg import fraction_free_inverse
from .partitions import Partition, conjugate, partitions_of, weighted_size
from .symfunc import (
    AlphabetScale,
    SymF,
    alphabet_scale,
    convert,
    e as elementary,
    multiply,
    simplify_coeff,
)

__all__ = [
    "DEFAULT_BOUND",
    "BoundExceeded",
    "SpecializationPoleError",
    "MacdonaldExpansion",
    "hhl_macdonald",
    "macdonald_schur",
    "macdonald_expand",
    "to_classical",
    "nabla_eigenvalue",
    "pi_eigenvalue",
    "nabla",
    "pi_op",
    "pi_inverse",
    "theta_e",
    "theta_chain",
    "enk",
    "specialize_symf",
]

DEFAULT_BOUND = 7


class BoundExceeded(ValueError):
    pass


class SpecializationPoleError(PoleError):
    """A coefficient of a symmetric function has a pole at the substitution point."""

    def __init__(self, partition, coefficient, denominator):
        self.partition = partition
        self.coefficient = coefficient
        super().__init__(
            denominator,
            f"pole at coefficient of {tuple(partition)}: {coefficient} (denominator {denominator})",
        )


def _check_bound(n, bound):
    if bound is not None and n > bound:
        raise BoundExceeded(f"degree {n} exceeds the configured bound {bound}")


# ---------------------------------------------------------------------------
# filling formula
# ---------------------------------------------------------------------------


def _shape_data(mu):
    """Reading order, descent data and attacking pairs for the shape ``mu``."""
    mu = tuple(mu)
    conj = conjugate(mu)
    # reading order: top row first, left to right; rows numbered from the bottom.
    # a cell attacks the cells of its own row and the cells strictly left of it
    # in the row below.
    cells = [(r, c) for r in range(len(mu), 0, -1) for c in range(1, mu[r - 1] + 1)]
    pos = {cell: i for i, cell in enumerate(cells)}
    descents = []  # (index of cell, index of cell below, leg + 1, arm)
    for (r, c), i in pos.items():
        if r >= 2:
            leg = conj[c - 1] - r
            arm = mu[r - 1] - c
            descents.append((i, pos[(r - 1, c)], leg + 1, arm))
    attacking = []
    for (r, c), i in pos.items():
        for (r2, c2), i2 in pos.items():
            if i2 <= i:
                continue
            if r2 == r or (r2 == r - 1 and c2 < c):
                attacking.append((i, i2))
    return len(cells), descents, attacking


def _multiset_permutations(content):
    """All words with letter i used content[i-1] times."""
    counts = list(content)
    n = sum(counts)
    word = [0] * n

    def rec(k):
        if k == n:
            yield tuple(word)
            return
        for v in range(len(counts)):
            if counts[v]:
                counts[v] -= 1
                word[k] = v + 1
                yield from rec(k + 1)
                counts[v] += 1

    return rec(0)


@lru_cache(maxsize=None)
def _hhl_monomial(mu):
    n, descents, attacking = _shape_data(mu)
    out = {}
    for lam in partitions_of(n):
        poly = {}
        for w in _multiset_permutations(lam):
            inv = 0
            for i, j in attacking:
                if w[i] > w[j]:
                    inv += 1
            maj = 0
            for i, below, legp1, arm in descents:
                if w[i] > w[below]:
                    maj += legp1
                    inv -= arm
            poly[(inv, maj)] = poly.get((inv, maj), 0) + 1
        out[lam] = PolyQT(poly)
    return out


def hhl_macdonald(mu, bound=DEFAULT_BOUND) -> SymF:
    """H~_mu in the monomial basis, summing q^inv t^maj over fillings.

    Only fillings whose content is a partition are enumerated; each such
    count is the coefficient of the matching monomial symmetric function.
    """
    mu = Partition(mu)
    _check_bound(mu.size, bound)
    data = _hhl_monomial(mu)
    return SymF("m", mu.size, {lam: RatFuncQT.coerce(c) for lam, c in data.items()})


@lru_cache(maxsize=None)
def macdonald_schur(mu) -> SymF:
    """H~_mu in the Schur basis (polynomial coefficients)."""
    return convert(hhl_macdonald(mu, bound=None), "s")


# ---------------------------------------------------------------------------
# eigenvalues
# ---------------------------------------------------------------------------


def nabla_eigenvalue(mu) -> RatFuncQT:
    mu = tuple(mu)
    return RatFuncQT.coerce(PolyQT.monomial(weighted_size(conjugate(mu)), weighted_size(mu)))


@lru_cache(maxsize=None)
def _pi_eig(mu):
    val = PolyQT(1)
    one = PolyQT(1)
    for r, length in enumerate(mu, 1):
        for c in range(1, length + 1):
            if (r, c) != (1, 1):
                val = val * (one - PolyQT.monomial(c - 1, r - 1))
    return RatFuncQT.coerce(val)


def pi_eigenvalue(mu) -> RatFuncQT:
    return _pi_eig(tuple(mu))


# ---------------------------------------------------------------------------
# transition matrices
# ---------------------------------------------------------------------------


def _poly_size(c):
    return len(c._terms)


def _poly_exact_div(a, b):
    res = a.exact_div(b)
    if res is None:
        raise ArithmeticError("inexact polynomial division in fraction-free elimination")
    return res


class _MacdonaldBasis:
    """Per-degree Schur <-> modified Macdonald transition data."""

    def __init__(self, n):
        self.n = n
        self.parts = partitions_of(n)
        self.index = {mu: i for i, mu in enumerate(self.parts)}
        self.forward = [
            [RatFuncQT.coerce(macdonald_schur(mu).coefficient(lam)) for lam in self.parts] for mu in self.parts
        ]
        self._inverse = None
        self._lock = threading.Lock()

    @property
    def inverse(self):
        """Row lam holds the Macdonald coefficients of s_lam."""
        if self._inverse is None:
            with self._lock:
                if self._inverse is None:
                    # the forward matrix is polynomial, so eliminate in Z[q,t]
                    # and divide by the determinant only at the end
                    polys = [[c.num for c in row] for row in self.forward]
                    adj, det = fraction_free_inverse(
                        polys, exact_div=_poly_exact_div, one=PolyQT(1), zero=PolyQT(), pivot_key=_poly_size
                    )
                    self._inverse = [[RatFuncQT(x, det) if x else 0 for x in row] for row in adj]
        return self._inverse


_BASES: dict = {}
_BASES_LOCK = threading.Lock()


def _basis(n):
    b = _BASES.get(n)
    if b is None:
        with _BASES_LOCK:
            b = _BASES.get(n)
            if b is None:
                b = _MacdonaldBasis(n)
                _BASES[n] = b
    return b


class MacdonaldExpansion:
    """sum_mu coefficients[mu] * H~_mu for partitions mu of ``degree``."""

    __slots__ = ("degree", "coefficients")

    def __init__(self, degree, coefficients=None):
        self.degree = degree
        self.coefficients = {Partition(mu): c for mu, c in (coefficients or {}).items() if c}

    def to_symf(self) -> SymF:
        return SymF("Htilde", self.degree, self.coefficients)

    def to_schur(self) -> SymF:
        n = self.degree
        if n == 0:
            return SymF("s", 0, dict(self.coefficients))
        basis = _basis(n)
        out = [0] * len(basis.parts)
        for mu, c in self.coefficients.items():
            row = basis.forward[basis.index[mu]]
            for k, x in enumerate(row):
                if x:
                    out[k] = out[k] + c * x
        return SymF("s", n, {lam: simplify_coeff(v) for lam, v in zip(basis.parts, out) if v})

    def scaled(self, fn):
        return MacdonaldExpansion(self.degree, {mu: c * fn(mu) for mu, c in self.coefficients.items()})

    def __eq__(self, other):
        return (
            isinstance(other, MacdonaldExpansion)
            and self.degree == other.degree
            and {k: simplify_coeff(v) for k, v in self.coefficients.items()}
            == {k: simplify_coeff(v) for k, v in other.coefficients.items()}
        )

    def __repr__(self):
        return f"MacdonaldExpansion({self.to_symf()})"


def macdonald_expand(f: SymF, bound=6) -> MacdonaldExpansion:
    """Coefficients of f in the modified Macdonald basis."""
    if f.basis == "Htilde":
        return MacdonaldExpansion(f.degree, f.terms)
    n = f.degree
    _check_bound(n, bound)
    if n == 0:
        return MacdonaldExpansion(0, f.terms)
    fs = convert(f, "s")
    basis = _basis(n)
    inv = basis.inverse
    out = [0] * len(basis.parts)
    for lam, c in fs.terms.items():
        row = inv[basis.index[lam]]
        for k, x in enumerate(row):
            if x:
                out[k] = out[k] + c * x
    return MacdonaldExpansion(n, dict(zip(basis.parts, out)))


def to_classical(f: SymF, target="s") -> SymF:
    if f.basis != "Htilde":
        return convert(f, target)
    return convert(MacdonaldExpansion(f.degree, f.terms).to_schur(), target)


# ---------------------------------------------------------------------------
# operators
# ---------------------------------------------------------------------------


def _eigen_apply(f, eig, bound):
    if f.degree <= 1:
        # every eigenvalue in degree 0 and 1 equals 1
        return to_classical(f, "s")
    exp = macdonald_expand(f, bound=bound)
    return exp.scaled(eig).to_schur()


def _pi_inv(mu):
    return pi_eigenvalue(mu).inverse()


def nabla(f: SymF, bound=6) -> SymF:
    """Scale each Macdonald coefficient by q^n(mu') t^n(mu); result in the Schur basis."""
    return _eigen_apply(f, nabla_eigenvalue, bound)


def pi_op(f: SymF, bound=6) -> SymF:
    return _eigen_apply(f, pi_eigenvalue, bound)


def pi_inverse(f: SymF, bound=6) -> SymF:
    return _eigen_apply(f, _pi_inv, bound)


@lru_cache(maxsize=None)
def _ed_over_m(d):
    return alphabet_scale(elementary(d), AlphabetScale.over_m())


def theta_e(d: int, f: SymF, bound=6) -> SymF:
    """Theta operator for e_d: conjugate multiplication by e_d[x/M] by Pi."""
    if d < 0:
        return SymF("s", f.degree + d if f.degree + d >= 0 else 0, {})
    if d == 0:
        return convert(f, "s") if f.basis != "Htilde" else to_classical(f)
    _check_bound(f.degree + d, bound)
    if not f.terms:
        return SymF("s", f.degree + d, {})
    g = pi_inverse(f, bound=bound)
    prod = multiply(_ed_over_m(d), g, basis="s")
    return pi_op(prod, bound=bound)


def theta_chain(indices, f: SymF, bound=6) -> SymF:
    """Apply Theta operators right to left: theta_chain([i, j], f) = Th_i Th_j f."""
    for d in reversed(list(indices)):
        f = theta_e(d, f, bound=bound)
    return f


@lru_cache(maxsize=None)
def _enk_cached(n, k):
    from .coeffs import q_binomial

    total = SymF("p", n, {})
    for r in range(k + 1):
        if r == 0 and n >= 1:
            continue  # e_n of the zero alphabet
        scaled = alphabet_scale(elementary(n), AlphabetScale.one_minus_q_inverse_power(r))
        coef = q_binomial(k, r) * RatFuncQT.coerce(PolyQT.monomial(k + r * (r - 1) // 2, 0))
        if r % 2:
            coef = -coef
        total = total + scaled * coef
    return convert(total, "s")


def enk(n: int, k: int) -> SymF:
    """E_{n,k}(x; q) from its plethystic alternating-sum definition (zero out of range)."""
    if n < 0 or k < 0 or k > n:
        return SymF("s", max(n, 0), {})
    if n == 0:
        return SymF("s", 0, {(): 1})
    return _enk_cached(n, k)


def specialize_symf(f: SymF, q=None, t=None) -> SymF:
    """Substitute integer values for q and/or t in every coefficient."""
    out = {}
    for lam, c in f.terms.items():
        if isinstance(c, RatFuncQT):
            try:
                v = substitute(c, q=q, t=t)
            except PoleError as exc:
                raise SpecializationPoleError(lam, c, exc.denominator) from None
            v = simplify_coeff(v)
        else:
            v = c
        if v:
            out[lam] = v
    return SymF._raw(f.basis, f.degree, out)
