"""Frobenius characteristic, Kronecker products and Littlewood-Richardson numbers."""

from __future__ import annotations

from fractions import Fraction

from .characters import ClassFunction, character_table
from .partitions import Partition, partitions_of, z_weight
from .symfunc import SymF, convert, hall_inner, multiply, schur, simplify_coeff

__all__ = [
    "frobenius_of",
    "class_function_of",
    "kronecker",
    "kronecker_multiplicity",
    "lr_coefficient",
    "lr_tableaux_count",
]


def frobenius_of(chi: ClassFunction) -> SymF:
    """Schur expansion sum_mu chi(mu) p_mu / z_mu."""
    n = chi.n
    parts = partitions_of(n)
    table = character_table(n)
    out = {}
    for i, lam in enumerate(parts):
        c = 0
        for j, mu in enumerate(parts):
            v = chi.values[mu]
            if v and table[i][j]:
                c = c + v * Fraction(table[i][j], z_weight(mu))
        c = simplify_coeff(c)
        if c:
            out[lam] = c
    return SymF("s", n, out)


def class_function_of(f: SymF) -> ClassFunction:
    """Inverse of frobenius_of: the (virtual) character with Frobenius image f."""
    n = f.degree
    fs = convert(f, "s")
    parts = partitions_of(n)
    index = {lam: i for i, lam in enumerate(parts)}
    table = character_table(n)
    vals = {}
    for j, mu in enumerate(parts):
        v = 0
        for lam, c in fs.terms.items():
            x = table[index[lam]][j]
            if x:
                v = v + c * x
        vals[mu] = v
    return ClassFunction(n, vals)


def kronecker(f: SymF, g: SymF) -> SymF:
    """Bilinear extension of s_lam * s_mu (tensor product of modules)."""
    if f.degree != g.degree:
        raise ValueError(f"Kronecker product needs equal degrees, got {f.degree} and {g.degree}")
    if not f.terms or not g.terms:
        return SymF("s", f.degree, {})
    return frobenius_of(class_function_of(f) * class_function_of(g))


def kronecker_multiplicity(rho, mu1, mu2) -> int:
    """g_{rho,mu1,mu2} by the triple character sum."""
    n = sum(rho)
    if sum(mu1) != n or sum(mu2) != n:
        raise ValueError("Kronecker coefficients need partitions of one size")
    parts = partitions_of(n)
    index = {lam: i for i, lam in enumerate(parts)}
    table = character_table(n)
    a, b, c = (table[index[Partition(x)]] for x in (rho, mu1, mu2))
    total = Fraction(0)
    for j, mu in enumerate(parts):
        total += Fraction(a[j] * b[j] * c[j], z_weight(mu))
    assert total.denominator == 1
    return int(total)


def lr_tableaux_count(lam, mu, nu) -> int:
    """Count semistandard fillings of nu/lam with content mu whose reverse
    reading word is a lattice word."""
    lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
    if len(lam) > len(nu) or any(a > b for a, b in zip(lam, nu)):
        return 0
    rows = len(nu)
    inner = lam + (0,) * (rows - len(lam))
    k = len(mu)
    if k == 0:
        return 1 if inner == nu else 0
    filling = [dict() for _ in range(rows)]
    counts = [0] * (k + 1)

    def fill_row(r):
        if r == rows:
            return 1 if all(counts[i + 1] == mu[i] for i in range(k)) else 0
        cols = list(range(nu[r], inner[r], -1))
        return fill_cells(r, cols, 0, k)

    def fill_cells(r, cols, idx, cap):
        if idx == len(cols):
            return fill_row(r + 1)
        c = cols[idx]
        low = 1
        if r > 0 and c <= nu[r - 1] and c > inner[r - 1]:
            low = filling[r - 1][c] + 1
        total = 0
        for v in range(low, cap + 1):
            if counts[v] >= mu[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            filling[r][c] = v
            total += fill_cells(r, cols, idx + 1, v)
            counts[v] -= 1
        filling[r].pop(c, None)
        return total

    return fill_row(0)


def lr_coefficient(lam, mu, nu, method: str = "rule") -> int:
    """Multiplicity of s_nu in s_lam s_mu.

    ``method="rule"`` counts lattice skew tableaux; ``method="oracle"``
    takes the Hall inner product of the power-sum product.
    """
    if sum(lam) + sum(mu) != sum(nu):
        raise ValueError("LR coefficient needs |lam| + |mu| = |nu|")
    if method == "rule":
        return lr_tableaux_count(lam, mu, nu)
    if method == "oracle":
        return int(hall_inner(multiply(schur(lam), schur(mu)), schur(nu)))
    raise ValueError(f"unknown method {method!r}")
