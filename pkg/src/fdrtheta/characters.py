"""Irreducible characters of the symmetric group.

Characters are computed with the Murnaghan-Nakayama rule on beta-sets
(first-column hook lengths): removing a border strip of size r is the same
as lowering one beta number by r, with sign given by how many beta numbers
it jumps over.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial

from .partitions import Partition, partitions_of, z_weight

__all__ = ["ClassFunction", "mn_character", "character_table", "character_of", "class_size"]


def _to_beta(lam):
    ell = len(lam)
    return tuple(p + ell - 1 - i for i, p in enumerate(lam))


def _from_beta(beta):
    beta = sorted(beta, reverse=True)
    ell = len(beta)
    return tuple(p for p in (b - (ell - 1 - i) for i, b in enumerate(beta)) if p > 0)


@lru_cache(maxsize=None)
def _mn(lam, mu):
    if not mu:
        return 1 if not lam else 0
    r, rest = mu[0], mu[1:]
    beta = _to_beta(lam)
    present = set(beta)
    total = 0
    for b in beta:
        nb = b - r
        if nb < 0 or nb in present:
            continue
        between = sum(1 for x in beta if nb < x < b)
        new = [x for x in beta if x != b] + [nb]
        val = _mn(_from_beta(new), rest)
        if val:
            total += -val if between % 2 else val
    return total


def mn_character(lam, mu) -> int:
    """Value of the irreducible character indexed by ``lam`` on cycle type ``mu``."""
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: {tuple(lam)} vs {tuple(mu)}")
    return _mn(tuple(lam), tuple(mu))


@lru_cache(maxsize=None)
def character_table(n: int) -> tuple:
    """Rows indexed by irreducibles, columns by cycle types, both in partition order."""
    parts = partitions_of(n)
    return tuple(tuple(_mn(lam, mu) for mu in parts) for lam in parts)


def class_size(mu) -> int:
    return factorial(sum(mu)) // z_weight(tuple(mu))


class ClassFunction:
    """A function on cycle types of permutations of ``n``."""

    __slots__ = ("n", "values")

    def __init__(self, n, values=None):
        self.n = n
        vals = {mu: 0 for mu in partitions_of(n)}
        for mu, v in (values or {}).items():
            mu = Partition(mu)
            if mu not in vals:
                raise ValueError(f"{tuple(mu)} is not a cycle type of size {n}")
            vals[mu] = v
        self.values = vals

    def __getitem__(self, mu):
        return self.values[Partition(mu)]

    def __add__(self, other):
        self._check(other)
        return ClassFunction(self.n, {mu: v + other.values[mu] for mu, v in self.values.items()})

    def __sub__(self, other):
        self._check(other)
        return ClassFunction(self.n, {mu: v - other.values[mu] for mu, v in self.values.items()})

    def __mul__(self, other):
        if isinstance(other, ClassFunction):
            self._check(other)
            return ClassFunction(self.n, {mu: v * other.values[mu] for mu, v in self.values.items()})
        return ClassFunction(self.n, {mu: v * other for mu, v in self.values.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, ClassFunction) and self.n == other.n and self.values == other.values

    def _check(self, other):
        if self.n != other.n:
            raise ValueError("class functions of different degrees")

    def inner(self, other):
        """Standard inner product (1/n!) sum over the group."""
        from fractions import Fraction

        self._check(other)
        s = Fraction(0)
        for mu, v in self.values.items():
            s += Fraction(v * other.values[mu], z_weight(mu))
        return s

    def __repr__(self):
        body = ", ".join(f"{','.join(map(str, mu)) or '-'}: {v}" for mu, v in self.values.items())
        return f"ClassFunction(n={self.n}, {{{body}}})"


def character_of(lam) -> ClassFunction:
    lam = Partition(lam)
    n = lam.size
    return ClassFunction(n, {mu: _mn(lam, mu) for mu in partitions_of(n)})
