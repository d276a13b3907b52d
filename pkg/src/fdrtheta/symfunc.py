"""Homogeneous symmetric functions in the classical bases.

A ``SymF`` is a finite combination of basis elements indexed by partitions of
one fixed degree.  Supported bases are ``m``, ``e``, ``h``, ``p``, ``s`` and
``Htilde`` (modified Macdonald; conversions for that tag live in
``fdrtheta.macdonald``).  Coefficients may be ints, Fractions or RatFuncQT.

Every basis change goes through power sums with exact rational transition
matrices, memoized per degree.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache

from .characters import character_table
from .coeffs import PolyQT, RatFuncQT, parse_ratfunc
from .linalg import invert
from .partitions import Partition, format_partition, partitions_of, z_weight

__all__ = [
    "SymF",
    "AlphabetScale",
    "BASES",
    "convert",
    "multiply",
    "hall_inner",
    "skew_h",
    "skew_e",
    "skew_general",
    "alphabet_scale",
    "horizontal_strips",
    "vertical_strips",
    "schur",
    "h",
    "e",
    "p",
    "m",
    "one",
    "zero",
    "map_coefficients",
    "simplify_coeff",
    "format_coeff",
    "parse_coeff",
]

BASES = ("m", "e", "h", "p", "s")
ALL_TAGS = BASES + ("Htilde",)


def simplify_coeff(c):
    """Collapse constant rational functions and integral Fractions to int/Fraction."""
    if isinstance(c, RatFuncQT):
        if c.num.is_constant() and c.den.is_constant():
            c = Fraction(c.num.constant_term(), c.den.constant_term())
        else:
            return c
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    if isinstance(c, PolyQT):
        return simplify_coeff(RatFuncQT.coerce(c))
    return c


def format_coeff(c) -> str:
    return str(simplify_coeff(c))


def parse_coeff(text: str):
    return simplify_coeff(parse_ratfunc(text))


class SymF:
    """Homogeneous symmetric function: basis tag, degree and partition -> coefficient."""

    __slots__ = ("basis", "degree", "terms")

    def __init__(self, basis, degree, terms=None):
        if basis not in ALL_TAGS:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        self.degree = degree
        clean = {}
        for lam, c in (terms or {}).items():
            if not c:
                continue
            lam = lam if isinstance(lam, Partition) else Partition(lam)
            if lam.size != degree:
                raise ValueError(f"{tuple(lam)} has size {lam.size}, expected {degree}")
            clean[lam] = c
        self.terms = clean

    @classmethod
    def _raw(cls, basis, degree, terms):
        f = cls.__new__(cls)
        f.basis, f.degree, f.terms = basis, degree, terms
        return f

    def items(self):
        """Terms in the fixed partition order."""
        order = {lam: i for i, lam in enumerate(partitions_of(self.degree))}
        return sorted(self.terms.items(), key=lambda kv: order[kv[0]])

    def coefficient(self, lam):
        return self.terms.get(Partition(lam), 0)

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def _coerce_other(self, other):
        if not isinstance(other, SymF):
            raise TypeError(f"cannot combine SymF with {type(other).__name__}")
        if other.degree != self.degree:
            if not other.terms:
                return SymF._raw(self.basis, self.degree, {})
            if not self.terms:
                return other
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        if other.basis != self.basis:
            return convert(other, self.basis)
        return other

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        other = self._coerce_other(other)
        if not self.terms:
            return other
        terms = dict(self.terms)
        for lam, c in other.terms.items():
            v = terms.get(lam, 0) + c
            if v:
                terms[lam] = v
            else:
                terms.pop(lam, None)
        return SymF._raw(self.basis, self.degree, terms)

    def __radd__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        return NotImplemented

    def __neg__(self):
        return SymF._raw(self.basis, self.degree, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        if isinstance(c, SymF):
            return multiply(self, c)
        if not c:
            return SymF._raw(self.basis, self.degree, {})
        terms = {}
        for k, v in self.terms.items():
            w = v * c
            if w:
                terms[k] = w
        return SymF._raw(self.basis, self.degree, terms)

    def __rmul__(self, c):
        return self * c

    def __eq__(self, other):
        if not isinstance(other, SymF):
            if isinstance(other, int) and other == 0:
                return not self.terms
            return NotImplemented
        if not self.terms or not other.terms:
            return not self.terms and not other.terms
        if self.degree != other.degree:
            return False
        if self.basis != other.basis:
            if "Htilde" in (self.basis, other.basis):
                from .macdonald import to_classical

                return to_classical(self, "s") == to_classical(other, "s")
            other = convert(other, self.basis)
        a = {k: simplify_coeff(v) for k, v in self.terms.items()}
        b = {k: simplify_coeff(v) for k, v in other.terms.items()}
        return a == b

    __hash__ = None

    def to(self, basis):
        return convert(self, basis)

    def map_coefficients(self, fn):
        return map_coefficients(self, fn)

    def __str__(self):
        if not self.terms:
            return "0"
        prefix = "H" if self.basis == "Htilde" else self.basis
        out = []
        for i, (lam, c) in enumerate(self.items()):
            c = simplify_coeff(c)
            label = f"{prefix}[{format_partition(lam)}]"
            text = str(c)
            neg = False
            if isinstance(c, (int, Fraction)):
                neg = c < 0
                mag = abs(c)
                body = label if mag == 1 else f"{mag}*{label}"
            elif " " not in text:
                if text.startswith("-"):
                    neg, text = True, text[1:]
                body = label if text == "1" else f"{text}*{label}"
            else:
                body = f"({text})*{label}"
            if i == 0:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def __repr__(self):
        return f"SymF({self.basis!r}, {self.degree}, {self})"

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "degree": self.degree,
            "terms": [{"lambda": list(lam), "coeff": format_coeff(c)} for lam, c in self.items()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "SymF":
        try:
            basis = data["basis"]
            degree = int(data["degree"])
            terms = {}
            for t in data["terms"]:
                lam = Partition(t["lambda"])
                terms[lam] = terms.get(lam, 0) + parse_coeff(str(t["coeff"]))
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed SymF JSON: {exc}") from None
        return cls(basis, degree, terms)


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------


def _single(basis, lam, coeff=1):
    lam = Partition(lam)
    return SymF(basis, lam.size, {lam: coeff})


def schur(lam, coeff=1):
    return _single("s", lam, coeff)


def p(lam, coeff=1):
    return _single("p", lam, coeff)


def m(lam, coeff=1):
    return _single("m", lam, coeff)


def h(n, coeff=1):
    """Complete homogeneous h_n (zero for n < 0)."""
    if n < 0:
        return SymF("h", 0, {})
    return _single("h", (n,) if n else (), coeff)


def e(n, coeff=1):
    """Elementary e_n (zero for n < 0)."""
    if n < 0:
        return SymF("e", 0, {})
    return _single("e", (n,) if n else (), coeff)


def one(basis="s"):
    return SymF(basis, 0, {(): 1})


def zero(degree=0, basis="s"):
    return SymF(basis, degree, {})


def map_coefficients(f: SymF, fn) -> SymF:
    terms = {}
    for lam, c in f.terms.items():
        v = fn(c)
        if v:
            terms[lam] = v
    return SymF._raw(f.basis, f.degree, terms)


# ---------------------------------------------------------------------------
# transition matrices (sparse dict-of-dicts, Fraction entries)
# ---------------------------------------------------------------------------

_lock = threading.RLock()


def _merge(a, b):
    return Partition(sorted(a + b, reverse=True))


def _p_product(f, g):
    out = {}
    for mu, c in f.items():
        for nu, d in g.items():
            k = _merge(mu, nu)
            out[k] = out.get(k, 0) + c * d
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _hn_in_p(n, signed):
    out = {}
    for mu in partitions_of(n):
        c = Fraction(1, z_weight(mu))
        if signed and (n - len(mu)) % 2:
            c = -c
        out[mu] = c
    return out


def _to_p_rows(n, basis):
    parts = partitions_of(n)
    if basis == "p":
        return {lam: {lam: Fraction(1)} for lam in parts}
    if basis == "s":
        table = character_table(n)
        rows = {}
        for i, lam in enumerate(parts):
            rows[lam] = {
                mu: Fraction(table[i][j], z_weight(mu)) for j, mu in enumerate(parts) if table[i][j]
            }
        return rows
    if basis in ("h", "e"):
        signed = basis == "e"
        rows = {}
        for lam in parts:
            acc = {Partition(): Fraction(1)}
            for part in lam:
                acc = _p_product(acc, _hn_in_p(part, signed))
            rows[lam] = acc
        return rows
    if basis == "m":
        return _invert_rows(n, _from_p_rows(n, "m"))
    raise ValueError(basis)


def _from_p_rows(n, basis):
    parts = partitions_of(n)
    if basis == "p":
        return {lam: {lam: Fraction(1)} for lam in parts}
    if basis == "s":
        table = character_table(n)
        return {
            mu: {lam: Fraction(table[i][j]) for i, lam in enumerate(parts) if table[i][j]}
            for j, mu in enumerate(parts)
        }
    if basis == "m":
        # coefficient of m_lam in p_mu is <p_mu, h_lam> = z_mu * [p_mu] h_lam
        hrows = _to_p_rows(n, "h")
        out = {mu: {} for mu in parts}
        for lam, row in hrows.items():
            for mu, c in row.items():
                out[mu][lam] = c * z_weight(mu)
        return out
    return _invert_rows(n, _to_p_rows(n, basis))


def _invert_rows(n, rows):
    parts = partitions_of(n)
    mat = [[rows[a].get(b, Fraction(0)) for b in parts] for a in parts]
    inv = invert(mat)
    return {a: {b: inv[i][j] for j, b in enumerate(parts) if inv[i][j]} for i, a in enumerate(parts)}


_TO_P: dict = {}
_FROM_P: dict = {}
_TRANS: dict = {}


def _cached(cache, key, build):
    val = cache.get(key)
    if val is None:
        with _lock:
            val = cache.get(key)
            if val is None:
                val = build()
                cache[key] = val
    return val


def to_p_matrix(n, basis):
    return _cached(_TO_P, (n, basis), lambda: _to_p_rows(n, basis))


def from_p_matrix(n, basis):
    return _cached(_FROM_P, (n, basis), lambda: _from_p_rows(n, basis))


def _compose(a, b):
    out = {}
    for lam, row in a.items():
        acc = {}
        for mu, c in row.items():
            for nu, d in b.get(mu, {}).items():
                acc[nu] = acc.get(nu, 0) + c * d
        out[lam] = {k: v for k, v in acc.items() if v}
    return out


def transition(n, src, dst):
    """Sparse matrix T with src_lam = sum_nu T[lam][nu] dst_nu."""
    if src == "p":
        return from_p_matrix(n, dst)
    if dst == "p":
        return to_p_matrix(n, src)
    return _cached(_TRANS, (n, src, dst), lambda: _compose(to_p_matrix(n, src), from_p_matrix(n, dst)))


def _apply(terms, matrix):
    out = {}
    for lam, c in terms.items():
        for nu, d in matrix[lam].items():
            out[nu] = out.get(nu, 0) + c * d
    return {k: simplify_coeff(v) for k, v in out.items() if v}


def convert(f: SymF, target: str) -> SymF:
    """Re-express ``f`` in another classical basis."""
    if f.basis == target:
        return f
    if "Htilde" in (f.basis, target):
        from .macdonald import to_classical, macdonald_expand

        if target == "Htilde":
            return macdonald_expand(f).to_symf()
        return to_classical(f, target)
    if target not in BASES:
        raise ValueError(f"unknown basis {target!r}")
    return SymF._raw(target, f.degree, _apply(f.terms, transition(f.degree, f.basis, target)))


# ---------------------------------------------------------------------------
# products, inner product, skewing
# ---------------------------------------------------------------------------


def multiply(f: SymF, g: SymF, basis: str = "s") -> SymF:
    """Product of two homogeneous symmetric functions, returned in ``basis``."""
    if not f.terms or not g.terms:
        return SymF(basis, f.degree + g.degree, {})
    if f.basis in ("h", "e", "p") and g.basis == f.basis:
        prod = {}
        for lam, c in f.terms.items():
            for mu, d in g.terms.items():
                k = _merge(lam, mu)
                prod[k] = prod.get(k, 0) + c * d
        res = SymF._raw(f.basis, f.degree + g.degree, {k: v for k, v in prod.items() if v})
        return convert(res, basis)
    fp, gp = convert(f, "p"), convert(g, "p")
    res = SymF._raw("p", f.degree + g.degree, _p_product(fp.terms, gp.terms))
    return convert(res, basis)


def hall_inner(f: SymF, g: SymF):
    """Hall inner product; Schur functions are orthonormal."""
    if f.degree != g.degree or not f.terms or not g.terms:
        return 0
    pair = {f.basis, g.basis}
    if f.basis == g.basis == "s":
        a, b = f.terms, g.terms
    elif pair == {"h", "m"}:
        a, b = f.terms, g.terms
    else:
        fs, gs = convert(f, "s"), convert(g, "s")
        a, b = fs.terms, gs.terms
    total = 0
    for lam, c in a.items():
        d = b.get(lam)
        if d:
            total = total + c * d
    return simplify_coeff(total)


def horizontal_strips(lam, j):
    """Partitions mu with lam/mu a horizontal strip of size j."""
    lam = tuple(lam)
    out = []

    def rec(i, remaining, acc):
        if i == len(lam):
            if remaining == 0:
                out.append(Partition(p for p in acc if p))
            return
        lower = lam[i + 1] if i + 1 < len(lam) else 0
        for part in range(lam[i], lower - 1, -1):
            removed = lam[i] - part
            if removed > remaining:
                break
            rec(i + 1, remaining - removed, acc + [part])

    if j < 0:
        return out
    rec(0, j, [])
    return out


def vertical_strips(lam, j):
    """Partitions mu with lam/mu a vertical strip of size j."""
    from .partitions import conjugate

    return [conjugate(mu) for mu in horizontal_strips(conjugate(lam), j)]


def _skew_strips(j, f, strips):
    n = f.degree - j
    if j < 0 or n < 0 or not f.terms:
        return SymF("s", max(n, 0), {})
    fs = convert(f, "s")
    out = {}
    for lam, c in fs.terms.items():
        for mu in strips(lam, j):
            out[mu] = out.get(mu, 0) + c
    return SymF._raw("s", n, {k: v for k, v in out.items() if v})


def skew_h(j: int, f: SymF) -> SymF:
    """Adjoint of multiplication by h_j, in the Schur basis (zero for j < 0)."""
    return _skew_strips(j, f, horizontal_strips)


def skew_e(j: int, f: SymF) -> SymF:
    """Adjoint of multiplication by e_j, in the Schur basis (zero for j < 0)."""
    return _skew_strips(j, f, vertical_strips)


def skew_general(F: SymF, G: SymF) -> SymF:
    """F-perp applied to G, via <F-perp G, s_nu> = <G, F s_nu>."""
    d = G.degree - F.degree
    if d < 0 or not F.terms or not G.terms:
        return SymF("s", max(d, 0), {})
    out = {}
    for nu in partitions_of(d):
        c = hall_inner(G, multiply(F, schur(nu)))
        if c:
            out[nu] = c
    return SymF._raw("s", d, out)


# ---------------------------------------------------------------------------
# alphabet scaling
# ---------------------------------------------------------------------------


class AlphabetScale:
    """Plethystic scaling p_k -> c_k p_k, with c_k produced by a rule."""

    def __init__(self, rule, name="custom"):
        self._rule = rule
        self._cache = {}
        self.name = name

    def __call__(self, k):
        v = self._cache.get(k)
        if v is None:
            v = self._rule(k)
            self._cache[k] = v
        return v

    def __repr__(self):
        return f"AlphabetScale({self.name})"

    @classmethod
    def over_m(cls):
        """x -> x/M with M = (1-q)(1-t)."""
        one = PolyQT(1)

        def rule(k):
            return RatFuncQT(one, (one - PolyQT.monomial(k, 0)) * (one - PolyQT.monomial(0, k)))

        return cls(rule, "x/M")

    @classmethod
    def one_minus_q_inverse_power(cls, r):
        """x -> x (1 - q^-r)/(1 - q); c_k = -[r]_{q^k} / q^{rk}."""

        def rule(k):
            num = PolyQT({(k * i, 0): -1 for i in range(r)})
            return RatFuncQT(num, PolyQT.monomial(r * k, 0)) if r else RatFuncQT(0)

        return cls(rule, f"x(1-q^-{r})/(1-q)")


def alphabet_scale(f: SymF, rule: AlphabetScale) -> SymF:
    """Apply the scaling in the power-sum basis; the result stays in ``p``."""
    fp = convert(f, "p")
    out = {}
    for mu, c in fp.terms.items():
        factor = 1
        for part in mu:
            factor = factor * rule(part)
        v = c * factor
        if v:
            out[mu] = v
    return SymF._raw("p", f.degree, out)
