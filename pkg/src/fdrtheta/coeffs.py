"""Exact coefficient arithmetic in Z[q,t] and its fraction field Q(q,t).

``PolyQT`` is a sparse integer polynomial in ``q`` and ``t``.  ``RatFuncQT``
is a reduced fraction of two of them.  Canonical form of a fraction:

* numerator and denominator are coprime in Z[q,t];
* terms are ordered ascending lexicographically on (deg_q, deg_t), and the
  first denominator term in that order has a positive coefficient.

So ``1/(1-q)`` is stored with denominator ``1 - q`` and prints as
``1/(1 - q)``.  Equality of fractions is equality of canonical forms.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

from gmpy2 import mpz

__all__ = [
    "PolyQT",
    "RatFuncQT",
    "PoleError",
    "poly_gcd",
    "q_int",
    "q_factorial",
    "q_binomial",
    "substitute",
    "parse_ratfunc",
    "Q",
    "T",
    "ONE",
    "ZERO",
    "M",
]


class PoleError(ZeroDivisionError):
    """Raised when a substitution makes a canonical denominator vanish."""

    def __init__(self, denominator, message=None):
        self.denominator = denominator
        super().__init__(message or f"pole: denominator {denominator} vanishes")


# ---------------------------------------------------------------------------
# dense univariate helpers over Z (little-endian lists, no trailing zeros)
# ---------------------------------------------------------------------------


def _u_trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def _u_add(f, g):
    if len(f) < len(g):
        f, g = g, f
    r = list(f)
    for i, c in enumerate(g):
        r[i] += c
    return _u_trim(r)


def _u_sub(f, g):
    r = list(f) + [0] * (len(g) - len(f))
    for i, c in enumerate(g):
        r[i] -= c
    return _u_trim(r)


def _u_mul(f, g):
    if not f or not g:
        return []
    r = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                r[i + j] += a * b
    return r


def _u_scale(f, c):
    if not c:
        return []
    return [a * c for a in f]


def _u_content(f):
    c = 0
    for a in f:
        c = gcd(c, a)
        if c == 1:
            break
    return c


def _u_divexact(f, g):
    """Quotient f/g in Z[x] if g divides f exactly, else None."""
    if not g:
        raise ZeroDivisionError
    if not f:
        return []
    df, dg = len(f) - 1, len(g) - 1
    if df < dg:
        return None
    r = list(f)
    lc = g[-1]
    quot = [0] * (df - dg + 1)
    for k in range(df - dg, -1, -1):
        c = r[k + dg]
        if c:
            qc, rem = divmod(c, lc)
            if rem:
                return None
            quot[k] = qc
            for i, b in enumerate(g):
                r[k + i] -= qc * b
    if any(r[:dg]):
        return None
    return quot


def _u_eval(f, x):
    v = 0
    for c in reversed(f):
        v = v * x + c
    return v


def _u_prem(f, g):
    dg = len(g) - 1
    lc = g[-1]
    r = list(f)
    e = len(f) - len(g) + 1
    while r and len(r) - 1 >= dg:
        j = len(r) - 1 - dg
        lr = r[-1]
        r = [lc * a for a in r]
        for i, b in enumerate(g):
            r[j + i] -= lr * b
        _u_trim(r)
        e -= 1
    if e > 0:
        r = [a * lc**e for a in r]
    return r


def _u_gcd_prs(f, g):
    cf, cg = _u_content(f), _u_content(g)
    c = gcd(cf, cg)
    f = [a // cf for a in f]
    g = [a // cg for a in g]
    if len(f) < len(g):
        f, g = g, f
    while g:
        r = _u_prem(f, g)
        f, g = g, r
        if g:
            cr = _u_content(g)
            g = [a // cr for a in g]
    cf = _u_content(f)
    f = [a // cf * c for a in f]
    if f[-1] < 0:
        f = [-a for a in f]
    return f


def _symmetric_digits(h, x):
    digits = []
    half = x // 2
    while h:
        d = h % x
        if d > half:
            d -= x
        digits.append(d)
        h = (h - d) // x
    return digits


def _u_heu_gcd(f, g):
    cf, cg = _u_content(f), _u_content(g)
    c = gcd(cf, cg)
    f = [a // cf for a in f]
    g = [a // cg for a in g]
    if len(f) == 1 or len(g) == 1:
        return [c]
    f_norm = max(abs(a) for a in f)
    g_norm = max(abs(a) for a in g)
    bound = 2 * min(f_norm, g_norm) + 29
    x = max(min(bound, 99 * isqrt(bound)), 2 * min(f_norm // abs(f[-1]), g_norm // abs(g[-1])) + 2)
    for _ in range(6):
        ff, gg = _u_eval(f, x), _u_eval(g, x)
        if ff and gg:
            h = _symmetric_digits(gcd(ff, gg), x)
            ch = _u_content(h)
            h = [a // ch for a in h]
            if h[-1] < 0:
                h = [-a for a in h]
            if _u_divexact(f, h) is not None and _u_divexact(g, h) is not None:
                return [a * c for a in h]
        x = 73794 * x * isqrt(isqrt(x)) // 27011
    return None


def _u_gcd(f, g):
    if not f:
        return _u_normal(g)
    if not g:
        return _u_normal(f)
    h = _u_heu_gcd(f, g)
    if h is None:
        h = _u_gcd_prs(f, g)
    return h


def _u_normal(f):
    if f and f[-1] < 0:
        return [-a for a in f]
    return list(f)


# ---------------------------------------------------------------------------
# dense bivariate helpers: list indexed by q-degree of univariate t-polys
# ---------------------------------------------------------------------------


def _to_dense(terms):
    dq = max(a for a, _ in terms)
    out = [[] for _ in range(dq + 1)]
    for (a, b), c in terms.items():
        row = out[a]
        if len(row) <= b:
            row.extend([0] * (b + 1 - len(row)))
        row[b] = c
    return out


def _from_dense(f):
    return {(a, b): c for a, row in enumerate(f) for b, c in enumerate(row) if c}


def _b_trim(f):
    while f and not f[-1]:
        f.pop()
    return f


def _b_int_content(f):
    c = 0
    for row in f:
        for a in row:
            c = gcd(c, a)
            if c == 1:
                return 1
    return c


def _b_t_content(f):
    c = []
    for row in f:
        if row:
            c = _u_gcd(c, row)
            if len(c) == 1 and c[0] == 1:
                break
    return c


def _b_divexact(f, g):
    if not f:
        return []
    df, dg = len(f) - 1, len(g) - 1
    if df < dg:
        return None
    r = [list(row) for row in f]
    lc = g[-1]
    quot = [[] for _ in range(df - dg + 1)]
    for k in range(df - dg, -1, -1):
        c = r[k + dg]
        if c:
            qc = _u_divexact(c, lc)
            if qc is None:
                return None
            quot[k] = qc
            for i, b in enumerate(g):
                if b:
                    r[k + i] = _u_sub(r[k + i], _u_mul(qc, b))
    if any(r[:dg]):
        return None
    return quot


def _b_eval_q(f, x):
    v = []
    for row in reversed(f):
        v = _u_add(_u_scale(v, x), row)
    return v


def _b_interpolate(h, x):
    """Lift a t-poly with big integer coefficients back to Z[q,t] in base x."""
    out = []
    for b, c in enumerate(h):
        for a, d in enumerate(_symmetric_digits(c, x)):
            while len(out) <= a:
                out.append([])
            row = out[a]
            if len(row) <= b:
                row.extend([0] * (b + 1 - len(row)))
            row[b] = d
    return [_u_trim(row) for row in out]


def _b_heu_gcd(f, g):
    f_norm = max(abs(a) for row in f for a in row)
    g_norm = max(abs(a) for row in g for a in row)
    lf = f[-1][-1]
    lg = g[-1][-1]
    bound = 2 * min(f_norm, g_norm) + 29
    x = max(min(bound, 99 * isqrt(bound)), 2 * min(f_norm // abs(lf), g_norm // abs(lg)) + 2)
    for _ in range(6):
        ff, gg = _b_eval_q(f, x), _b_eval_q(g, x)
        if ff and gg:
            h = _b_trim(_b_interpolate(_u_gcd(ff, gg), x))
            if h:
                ch = _b_int_content(h)
                h = [[a // ch for a in row] for row in h]
                if _b_divexact(f, h) is not None and _b_divexact(g, h) is not None:
                    return h
        x = 73794 * x * isqrt(isqrt(x)) // 27011
    return None


def _b_prem(f, g):
    dg = len(g) - 1
    lc = g[-1]
    r = [list(row) for row in f]
    e = len(f) - len(g) + 1
    while r and len(r) - 1 >= dg:
        j = len(r) - 1 - dg
        lr = r[-1]
        r = [_u_mul(lc, row) for row in r]
        for i, b in enumerate(g):
            if b:
                r[j + i] = _u_sub(r[j + i], _u_mul(lr, b))
        _b_trim(r)
        e -= 1
    if e > 0 and r:
        lce = [1]
        for _ in range(e):
            lce = _u_mul(lce, lc)
        r = [_u_mul(lce, row) for row in r]
    return r


def _b_gcd_prs(f, g):
    """Content / primitive-part recursion: Z[t][q] primitive remainder sequence."""
    cf, cg = _b_t_content(f), _b_t_content(g)
    c = _u_gcd(cf, cg)
    f = [_u_divexact(row, cf) for row in f]
    g = [_u_divexact(row, cg) for row in g]
    if len(f) < len(g):
        f, g = g, f
    while g:
        r = _b_prem(f, g)
        f, g = g, r
        if g:
            cr = _b_t_content(g)
            g = [_u_divexact(row, cr) for row in g]
    cf = _b_t_content(f)
    f = [_u_divexact(row, cf) for row in f]
    return [_u_mul(row, c) for row in f]



# ---------------------------------------------------------------------------
# Kronecker substitution: q^a t^b -> X^(a*D + b), then X -> 2^B, so that a
# bivariate product or exact quotient becomes one big-integer operation.
# ---------------------------------------------------------------------------

_PACK_THRESHOLD = 48


def _pack(terms, stride, bits):
    nbytes = bits // 8
    size = nbytes * (max(a * stride + b for a, b in terms) + 1)
    pos = bytearray(size)
    neg = bytearray(size)
    for (a, b), c in terms.items():
        at = nbytes * (a * stride + b)
        if c > 0:
            pos[at : at + nbytes] = c.to_bytes(nbytes, "little")
        else:
            neg[at : at + nbytes] = (-c).to_bytes(nbytes, "little")
    return mpz(int.from_bytes(pos, "little")) - mpz(int.from_bytes(neg, "little"))


def _unpack(value, stride, bits, positions):
    nbytes = bits // 8
    total = nbytes * positions
    raw = int(value & ((mpz(1) << (8 * total)) - 1)).to_bytes(total, "little")
    half = 1 << (bits - 1)
    full = 1 << bits
    out = {}
    carry = 0
    from_bytes = int.from_bytes
    at = 0
    for a in range(positions // stride):
        for b in range(stride):
            d = from_bytes(raw[at : at + nbytes], "little") + carry
            at += nbytes
            if d >= half:
                d -= full
                carry = 1
            else:
                carry = 0
            if d:
                out[a, b] = d
    return out, carry


def _bits_for(bound):
    bits = bound.bit_length() + 2
    return (bits + 7) // 8 * 8


def _packed_mul(f, g):
    fq = max(a for a, _ in f)
    ft = max(b for _, b in f)
    gq = max(a for a, _ in g)
    gt = max(b for _, b in g)
    stride = ft + gt + 1
    bound = max(map(abs, f.values())) * max(map(abs, g.values())) * min(len(f), len(g))
    bits = _bits_for(bound)
    prod = _pack(f, stride, bits) * _pack(g, stride, bits)
    out, _ = _unpack(prod, stride, bits, (fq + gq + 1) * stride)
    return out


def _packed_divexact(f, g):
    """Exact quotient f/g via integer division, or None when g does not divide f.

    Returns ``False`` when the packing was too tight to decide, so the caller
    falls back to polynomial long division.
    """
    fq = max(a for a, _ in f)
    ft = max(b for _, b in f)
    stride = ft + 1
    fmax = max(map(abs, f.values()))
    bits = _bits_for(fmax * (len(f) + 1) << 24)
    F = _pack(f, stride, bits)
    G = _pack(g, stride, bits)
    quo, rem = divmod(F, G)
    if rem:
        return None
    out, carry = _unpack(quo, stride, bits, (fq + 1) * stride)
    if carry and quo >= 0:
        return False
    if not out:
        return False
    if _packed_mul(out, g) != f:
        return False
    return out


# ---------------------------------------------------------------------------
# PolyQT
# ---------------------------------------------------------------------------


class PolyQT:
    """Sparse polynomial in q, t with integer coefficients (immutable)."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif isinstance(terms, int):
            terms = {(0, 0): terms} if terms else {}
        else:
            terms = {k: c for k, c in terms.items() if c}
        self._terms = terms
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def monomial(cls, a=0, b=0, c=1):
        if a < 0 or b < 0:
            raise ValueError("negative exponent")
        return cls._raw({(a, b): c} if c else {})

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        """(exponents, coefficient) pairs in ascending lex order."""
        return sorted(self._terms.items())

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, PolyQT):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({(0, 0): other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __neg__(self):
        return PolyQT._raw({k: -c for k, c in self._terms.items()})

    def __add__(self, other):
        if isinstance(other, int):
            other = PolyQT(other)
        elif not isinstance(other, PolyQT):
            return NotImplemented
        r = dict(self._terms)
        for k, c in other._terms.items():
            v = r.get(k, 0) + c
            if v:
                r[k] = v
            else:
                r.pop(k, None)
        return PolyQT._raw(r)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = PolyQT(other)
        elif not isinstance(other, PolyQT):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return PolyQT()
            return PolyQT._raw({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, PolyQT):
            return NotImplemented
        if not self._terms or not other._terms:
            return PolyQT()
        if len(self._terms) * len(other._terms) > _PACK_THRESHOLD:
            return PolyQT._raw(_packed_mul(self._terms, other._terms))
        r = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                k = (a1 + a2, b1 + b2)
                r[k] = r.get(k, 0) + c1 * c2
        return PolyQT._raw({k: c for k, c in r.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n):
        result = PolyQT(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def deg_q(self):
        return max((a for a, _ in self._terms), default=-1)

    def deg_t(self):
        return max((b for _, b in self._terms), default=-1)

    def is_constant(self):
        return not self._terms or set(self._terms) == {(0, 0)}

    def constant_term(self):
        return self._terms.get((0, 0), 0)

    def lowest_term(self):
        """First term in ascending lex order on (deg_q, deg_t)."""
        k = min(self._terms)
        return k, self._terms[k]

    def content(self):
        c = 0
        for v in self._terms.values():
            c = gcd(c, v)
            if c == 1:
                break
        return c

    def divexact_int(self, c):
        return PolyQT._raw({k: v // c for k, v in self._terms.items()})

    def exact_div(self, other):
        """Quotient if ``other`` divides ``self`` in Z[q,t], else None."""
        if not other:
            raise ZeroDivisionError("division by zero polynomial")
        if not self:
            return PolyQT()
        if len(other._terms) == 1:
            ((a, b), c), = other._terms.items()
            out = {}
            for (x, y), v in self._terms.items():
                if x < a or y < b or v % c:
                    return None
                out[(x - a, y - b)] = v // c
            return PolyQT._raw(out)
        if self.deg_t() < other.deg_t() or self.deg_q() < other.deg_q():
            return None
        if len(self._terms) * len(other._terms) > _PACK_THRESHOLD:
            res = _packed_divexact(self._terms, other._terms)
            if res is None:
                return None
            if res is not False:
                return PolyQT._raw(res)
        res = _b_divexact(_to_dense(self._terms), _to_dense(other._terms))
        return None if res is None else PolyQT._raw(_from_dense(res))

    def evaluate(self, q=None, t=None):
        """Substitute integer values for q and/or t."""
        r = {}
        for (a, b), c in self._terms.items():
            if q is not None:
                c *= q**a
                a = 0
            if t is not None:
                c *= t**b
                b = 0
            if c:
                r[(a, b)] = r.get((a, b), 0) + c
        return PolyQT(r)

    def power_substitute(self, k):
        """q -> q^k, t -> t^k."""
        return PolyQT._raw({(a * k, b * k): c for (a, b), c in self._terms.items()})

    def swap(self):
        return PolyQT._raw({(b, a): c for (a, b), c in self._terms.items()})

    def __repr__(self):
        return f"PolyQT({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def poly_gcd(f: PolyQT, g: PolyQT, method: str = "auto") -> PolyQT:
    """Greatest common divisor in Z[q,t], normalized with positive lowest term.

    ``method`` is ``"auto"`` (heuristic gcd, falling back to the primitive
    remainder sequence), ``"heuristic"`` or ``"prs"``.
    """
    if not f:
        return _normalize_sign(g)
    if not g:
        return _normalize_sign(f)
    c = gcd(f.content(), g.content())
    tf, tg = f._terms, g._terms
    if len(tf) == 1 or len(tg) == 1:
        # a monomial divides anything only through its q/t powers and content
        mono, other = (tf, tg) if len(tf) == 1 else (tg, tf)
        a = min(min(x for x, _ in mono), min(x for x, _ in other))
        b = min(min(y for _, y in mono), min(y for _, y in other))
        return PolyQT._raw({(a, b): c})
    fp = f.divexact_int(f.content())
    gp = g.divexact_int(g.content())
    F, G = _to_dense(fp._terms), _to_dense(gp._terms)
    h = None
    if method in ("auto", "heuristic"):
        if len(F) == 1 and len(G) == 1:
            h = [_u_gcd(F[0], G[0])]
        elif len(F) == 1 or len(G) == 1:
            h = _b_gcd_prs(F, G)
        else:
            h = _b_heu_gcd(F, G)
        if h is None and method == "heuristic":
            raise ArithmeticError("heuristic gcd failed")
    if h is None:
        h = _b_gcd_prs(F, G)
    res = PolyQT._raw(_from_dense(h))
    res = res.divexact_int(res.content()) * c
    return _normalize_sign(res)


def _normalize_sign(p):
    if p and p.lowest_term()[1] < 0:
        return -p
    return p


# ---------------------------------------------------------------------------
# RatFuncQT
# ---------------------------------------------------------------------------

_ONE_POLY = PolyQT(1)


class RatFuncQT:
    """Element of Q(q,t) held as a reduced fraction of PolyQT values."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1):
        if isinstance(num, Fraction):
            num, den0 = num.numerator, num.denominator
            den = den * den0 if isinstance(den, int) else den * den0
        if isinstance(num, int):
            num = PolyQT(num)
        if isinstance(den, int):
            den = PolyQT(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.num, self.den = PolyQT(), _ONE_POLY
        else:
            g = poly_gcd(num, den)
            if g != _ONE_POLY:
                num = num.exact_div(g)
                den = den.exact_div(g)
            if den.lowest_term()[1] < 0:
                num, den = -num, -den
            self.num, self.den = num, den
        self._hash = None

    @classmethod
    def _raw(cls, num, den):
        r = cls.__new__(cls)
        r.num, r.den, r._hash = num, den, None
        return r

    @classmethod
    def coerce(cls, x):
        if isinstance(x, RatFuncQT):
            return x
        if isinstance(x, PolyQT):
            return cls._raw(x, _ONE_POLY)
        if isinstance(x, int):
            return cls._raw(PolyQT(x), _ONE_POLY)
        if isinstance(x, Fraction):
            return cls._raw(PolyQT(x.numerator), PolyQT(x.denominator))
        raise TypeError(f"cannot coerce {type(x).__name__} to RatFuncQT")

    # -- predicates -------------------------------------------------------
    def __bool__(self):
        return bool(self.num)

    def is_polynomial(self):
        return self.den.is_constant()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, PolyQT)):
            other = RatFuncQT.coerce(other)
        if not isinstance(other, RatFuncQT):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    # -- arithmetic -------------------------------------------------------
    def __neg__(self):
        return RatFuncQT._raw(-self.num, self.den)

    def _scaled(self, n, d):
        """self * n/d for integers n, d (d > 0)."""
        if not n:
            return RatFuncQT._raw(PolyQT(), _ONE_POLY)
        g1 = gcd(n, self.den.content())
        g2 = gcd(d, self.num.content())
        num = self.num.divexact_int(g2) * (n // g1) if g2 != 1 else self.num * (n // g1)
        den = self.den.divexact_int(g1) * (d // g2) if g1 != 1 else self.den * (d // g2)
        if den.lowest_term()[1] < 0:
            num, den = -num, -den
        return RatFuncQT._raw(num, den)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFuncQT.coerce(other)
            if other.den == _ONE_POLY and self.den == _ONE_POLY:
                return RatFuncQT._raw(self.num + other.num, _ONE_POLY)
        elif isinstance(other, PolyQT):
            other = RatFuncQT.coerce(other)
        elif not isinstance(other, RatFuncQT):
            return NotImplemented
        a, b, c, d = self.num, self.den, other.num, other.den
        if not a:
            return other
        if not c:
            return self
        if b == d:
            if b == _ONE_POLY:
                return RatFuncQT._raw(a + c, _ONE_POLY)
            return RatFuncQT(a + c, b)
        if d == _ONE_POLY:
            return RatFuncQT._raw(a + c * b, b)
        if b == _ONE_POLY:
            return RatFuncQT._raw(a * d + c, d)
        g = poly_gcd(b, d)
        if g == _ONE_POLY:
            return RatFuncQT._raw(a * d + c * b, b * d)
        b1, d1 = b.exact_div(g), d.exact_div(g)
        num = a * d1 + c * b1
        if not num:
            return RatFuncQT._raw(PolyQT(), _ONE_POLY)
        h = poly_gcd(num, g)
        if h != _ONE_POLY:
            num = num.exact_div(h)
            g = g.exact_div(h)
        den = b1 * d1 * g
        if den.lowest_term()[1] < 0:
            num, den = -num, -den
        return RatFuncQT._raw(num, den)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, PolyQT, RatFuncQT)):
            return self + (-RatFuncQT.coerce(other))
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return self._scaled(other, 1)
        if isinstance(other, Fraction):
            n, d = other.numerator, other.denominator
            return self._scaled(n, d)
        if isinstance(other, PolyQT):
            other = RatFuncQT.coerce(other)
        elif not isinstance(other, RatFuncQT):
            return NotImplemented
        a, b, c, d = self.num, self.den, other.num, other.den
        if not a or not c:
            return RatFuncQT._raw(PolyQT(), _ONE_POLY)
        if b == _ONE_POLY and d == _ONE_POLY:
            return RatFuncQT._raw(a * c, _ONE_POLY)
        g1 = poly_gcd(a, d) if d != _ONE_POLY else _ONE_POLY
        g2 = poly_gcd(c, b) if b != _ONE_POLY else _ONE_POLY
        if g1 != _ONE_POLY:
            a, d = a.exact_div(g1), d.exact_div(g1)
        if g2 != _ONE_POLY:
            c, b = c.exact_div(g2), b.exact_div(g2)
        num, den = a * c, b * d
        if den.lowest_term()[1] < 0:
            num, den = -num, -den
        return RatFuncQT._raw(num, den)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("division by zero in Q(q,t)")
        num, den = self.den, self.num
        if den.lowest_term()[1] < 0:
            num, den = -num, -den
        return RatFuncQT._raw(num, den)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, PolyQT)):
            other = RatFuncQT.coerce(other)
        elif not isinstance(other, RatFuncQT):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return RatFuncQT.coerce(other) * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return RatFuncQT._raw(self.num**n, self.den**n)

    # -- transformations --------------------------------------------------
    def power_substitute(self, k):
        """q -> q^k, t -> t^k (stays reduced)."""
        return RatFuncQT._raw(self.num.power_substitute(k), self.den.power_substitute(k))

    def swap(self):
        """Exchange q and t."""
        return RatFuncQT(self.num.swap(), self.den.swap())

    def subs(self, q=None, t=None):
        return substitute(self, q=q, t=t)

    def to_fraction(self):
        """Value as a Fraction when the element is a rational constant."""
        if not (self.num.is_constant() and self.den.is_constant()):
            raise ValueError(f"{self} is not constant")
        return Fraction(self.num.constant_term(), self.den.constant_term())

    def __repr__(self):
        return f"RatFuncQT({str(self)!r})"

    def __str__(self):
        return format_ratfunc(self)


def substitute(f, q=None, t=None) -> RatFuncQT:
    """Exact partial evaluation at integer values of q and/or t.

    Raises PoleError when the canonical denominator vanishes at the point.
    """
    f = RatFuncQT.coerce(f)
    den = f.den.evaluate(q=q, t=t)
    if not den:
        raise PoleError(f.den)
    return RatFuncQT(f.num.evaluate(q=q, t=t), den)


# ---------------------------------------------------------------------------
# q-analogs
# ---------------------------------------------------------------------------


def q_int(n: int) -> PolyQT:
    """[n]_q = 1 + q + ... + q^(n-1)."""
    return PolyQT._raw({(i, 0): 1 for i in range(n)})


def q_factorial(n: int) -> PolyQT:
    r = PolyQT(1)
    for i in range(1, n + 1):
        r = r * q_int(i)
    return r


@lru_cache(maxsize=None)
def _q_binomial_poly(n, k):
    if k < 0 or k > n:
        return PolyQT()
    if k == 0 or k == n:
        return PolyQT(1)
    return _q_binomial_poly(n - 1, k - 1) + PolyQT.monomial(k, 0) * _q_binomial_poly(n - 1, k)


def q_binomial(n: int, k: int) -> RatFuncQT:
    """Gaussian binomial; exactly zero unless 0 <= k <= n."""
    return RatFuncQT._raw(_q_binomial_poly(n, k), _ONE_POLY)


# ---------------------------------------------------------------------------
# canonical strings
# ---------------------------------------------------------------------------


def _format_monomial(a, b, c, first):
    parts = []
    mag = abs(c)
    if mag != 1 or (a == 0 and b == 0):
        parts.append(str(mag))
    if a:
        parts.append("q" if a == 1 else f"q^{a}")
    if b:
        parts.append("t" if b == 1 else f"t^{b}")
    body = "*".join(parts)
    if first:
        return ("-" if c < 0 else "") + body
    return (" - " if c < 0 else " + ") + body


def format_poly(p: PolyQT) -> str:
    items = p.items()
    if not items:
        return "0"
    return "".join(_format_monomial(a, b, c, i == 0) for i, ((a, b), c) in enumerate(items))


def format_ratfunc(f: RatFuncQT) -> str:
    num = format_poly(f.num)
    if f.den == _ONE_POLY:
        return num
    if len(f.num._terms) > 1:
        num = f"({num})"
    den = format_poly(f.den)
    if len(f.den._terms) > 1 or "*" in den:
        den = f"({den})"
    return f"{num}/{den}"


def _parse_poly(text):
    s = text.replace(" ", "")
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    if not s:
        raise ValueError("empty polynomial")
    terms = {}
    i = 0
    sign = 1
    if s[0] in "+-":
        sign = -1 if s[0] == "-" else 1
        i = 1
    start = i
    chunks = []
    for j in range(i, len(s) + 1):
        if j == len(s) or (s[j] in "+-" and j > start):
            chunks.append((sign, s[start:j]))
            if j < len(s):
                sign = -1 if s[j] == "-" else 1
                start = j + 1
    for sgn, chunk in chunks:
        if not chunk:
            raise ValueError(f"malformed polynomial: {text!r}")
        coeff, a, b = 1, 0, 0
        for factor in chunk.split("*"):
            if factor.isdigit():
                coeff *= int(factor)
            elif factor == "q":
                a += 1
            elif factor == "t":
                b += 1
            elif factor.startswith("q^") and factor[2:].isdigit():
                a += int(factor[2:])
            elif factor.startswith("t^") and factor[2:].isdigit():
                b += int(factor[2:])
            else:
                raise ValueError(f"malformed monomial {chunk!r} in {text!r}")
        terms[(a, b)] = terms.get((a, b), 0) + sgn * coeff
    return PolyQT(terms)


def parse_ratfunc(text: str) -> RatFuncQT:
    """Inverse of ``str(RatFuncQT)``."""
    depth = 0
    split = None
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "/" and depth == 0:
            split = i
    if split is None:
        return RatFuncQT(_parse_poly(text))
    return RatFuncQT(_parse_poly(text[:split]), _parse_poly(text[split + 1 :]))


Q = RatFuncQT.coerce(PolyQT.monomial(1, 0))
T = RatFuncQT.coerce(PolyQT.monomial(0, 1))
ONE = RatFuncQT.coerce(1)
ZERO = RatFuncQT.coerce(0)
M = (ONE - Q) * (ONE - T)
