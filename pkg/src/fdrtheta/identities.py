"""Executable forms of the Kronecker, hook and Theta identities, each checked
by computing both sides independently.

Notation used throughout: ``theta_q0t0(n, i, j)`` is
Th_i Th_j nabla e_(n-i-j) at q = t = 0, computed purely combinatorially from
the skewing recursion.  ``theta_direct`` computes the same thing through
full q,t arithmetic and is the cross-check.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from itertools import product

from .coeffs import PolyQT, RatFuncQT, q_binomial
from .kronecker import kronecker, lr_coefficient
from .macdonald import (
    BoundExceeded,
    SpecializationPoleError,
    enk,
    nabla,
    specialize_symf,
    theta_chain,
    to_classical,
)
from .partitions import Partition, conjugate, hook_shape, partitions_of
from .symfunc import (
    SymF,
    convert,
    e,
    h,
    multiply,
    schur,
    simplify_coeff,
    skew_e,
    skew_h,
    zero,
)

__all__ = [
    "VerificationReport",
    "compare",
    "fdr_formula",
    "hook_kronecker",
    "virtual_hook",
    "kron_skew_rhs",
    "kron_skew_check",
    "hook_skew_sides",
    "hook_skew_check",
    "HOOK_SKEW_FORMS",
    "theta_q0t0",
    "theta_direct",
    "theta_recursion_sides",
    "theta_recursion_check",
    "nabla_hk_check",
    "main_theorem_tables",
    "main_theorem_check",
    "zero_index_probe",
    "h_perp_equal",
    "CONVENTIONS",
    "EMPTY_SUM_CONVENTIONS",
    "BINOMIAL_VARIANTS",
]


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------


@dataclass
class VerificationReport:
    identity: str
    params: tuple
    lhs: SymF
    rhs: SymF
    equal: bool
    first_difference: tuple | None = None
    note: str = ""
    extra: dict = field(default_factory=dict)

    @property
    def verdict(self):
        return "equal" if self.equal else "unequal"

    def to_json(self):
        out = {
            "identity": self.identity,
            "params": list(self.params),
            "verdict": self.verdict,
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
        }
        if self.first_difference is not None:
            lam, a, b = self.first_difference
            out["first_difference"] = {"lambda": list(lam), "lhs": str(a), "rhs": str(b)}
        if self.note:
            out["note"] = self.note
        return out

    def __str__(self):
        head = f"{self.identity}{tuple(self.params)}: {self.verdict}"
        if self.first_difference is not None:
            lam, a, b = self.first_difference
            head += f" (s[{','.join(map(str, lam))}]: {a} vs {b})"
        if self.note:
            head += f" [{self.note}]"
        return head


def _schur_terms(f: SymF):
    f = to_classical(f, "s") if f.basis == "Htilde" else convert(f, "s")
    return {lam: simplify_coeff(c) for lam, c in f.terms.items() if simplify_coeff(c)}


def compare(identity, params, lhs: SymF, rhs: SymF, note="") -> VerificationReport:
    """Report whether lhs - rhs vanishes, with the first differing Schur coefficient."""
    if lhs.degree != rhs.degree and (lhs.terms or rhs.terms):
        return VerificationReport(identity, tuple(params), lhs, rhs, False, None, "degree mismatch")
    a, b = _schur_terms(lhs), _schur_terms(rhs)
    diff = None
    for lam in sorted(set(a) | set(b), key=lambda x: (-sum(x), [-p for p in x])):
        x, y = a.get(lam, 0), b.get(lam, 0)
        if simplify_coeff(x - y) != 0:
            diff = (lam, x, y)
            break
    return VerificationReport(identity, tuple(params), lhs, rhs, diff is None, diff, note)


# ---------------------------------------------------------------------------
# hook Kronecker formulas
# ---------------------------------------------------------------------------


def _hook(b, a):
    lam = hook_shape(b, a)
    return None if lam is None else schur(lam)


def hook_kronecker(b1, a1, b2, a2, degree):
    """s_(b1,1^a1) * s_(b2,1^a2), zero when either hook is out of range."""
    x, y = _hook(b1, a1), _hook(b2, a2)
    if x is None or y is None:
        return zero(degree)
    return kronecker(x, y)


def fdr_formula(n, i, j) -> SymF:
    """Difference of hook Kronecker products giving the (i, j) piece; 0 once i + j >= n."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if i < 0 or j < 0 or i + j >= n:
        return zero(n)
    out = hook_kronecker(n - i, i, n - j, j, n)
    if i > 0 and j > 0:
        out = out - hook_kronecker(n - i + 1, i - 1, n - j + 1, j - 1, n)
    return out


def virtual_hook(b, a) -> SymF:
    """Hook Schur function extended so that e_a h_b = S(b, a) + S(b+1, a-1) for all integers.

    Degree a + b; zero when a < 0 or a + b < 0; (-1)^a in degree 0.
    """
    if a < 0 or a + b < 0:
        return zero(max(a + b, 0))
    if b >= 1:
        return schur(Partition((b,) + (1,) * a))
    if a + b == 0:
        return SymF("s", 0, {(): -1 if a % 2 else 1})
    return zero(a + b)


def _virtual_kronecker(x: SymF, y: SymF) -> SymF:
    if not x.terms or not y.terms:
        return zero(x.degree)
    return kronecker(x, y)


def _virtual_formula(m, l, k):
    """Hook-difference formula for Th_m Th_l nabla e_k with virtual hooks."""
    n = m + l + k
    first = _virtual_kronecker(virtual_hook(k + l, m), virtual_hook(k + m, l))
    second = _virtual_kronecker(virtual_hook(k + l + 1, m - 1), virtual_hook(k + m + 1, l - 1))
    out = first - second
    return out if out.terms else zero(max(n, 0))


# ---------------------------------------------------------------------------
# skewing a Kronecker product
# ---------------------------------------------------------------------------


def _skew_schur_by(lam, mu):
    """s_{lam/mu} = sum over nu of c^lam_{mu,nu} s_nu."""
    rest = sum(lam) - sum(mu)
    out = {}
    for nu in partitions_of(rest):
        c = lr_coefficient(mu, nu, lam)
        if c:
            out[nu] = c
    return SymF("s", rest, out)


def kron_skew_rhs(lam1, lam2, j, flavor="h") -> SymF:
    """Double Littlewood-Richardson sum for skewing s_lam1 * s_lam2 by h_j (or e_j)."""
    lam1, lam2 = Partition(lam1), Partition(lam2)
    n = sum(lam1)
    if sum(lam2) != n:
        raise ValueError(f"partitions of different sizes: {lam1} and {lam2}")
    if not 1 <= j <= n:
        raise ValueError(f"j must lie in 1..{n}, got {j}")
    if flavor not in ("h", "e"):
        raise ValueError(f"unknown flavor {flavor!r}")
    total = zero(n - j)
    for mu in partitions_of(j):
        left = _skew_schur_by(lam1, conjugate(mu) if flavor == "e" else mu)
        right = _skew_schur_by(lam2, mu)
        if left.terms and right.terms:
            total = total + kronecker(left, right)
    return total


def kron_skew_check(lam1, lam2, j, flavor="h") -> VerificationReport:
    prod = kronecker(schur(lam1), schur(lam2))
    lhs = skew_h(j, prod) if flavor == "h" else skew_e(j, prod)
    rhs = kron_skew_rhs(lam1, lam2, j, flavor)
    return compare(f"kron-skew-{flavor}", (tuple(lam1), tuple(lam2), j), lhs, rhs)


def _eh(a, b, degree):
    """h_a e_b in the Schur basis, zero for negative indices."""
    if a < 0 or b < 0:
        return zero(degree)
    return multiply(h(a), e(b))


def _eh_kronecker(a1, b1, a2, b2, degree):
    x, y = _eh(a1, b1, degree), _eh(a2, b2, degree)
    if not x.terms or not y.terms:
        return zero(degree)
    return kronecker(x, y)


HOOK_SKEW_FORMS = ("difference", "telescoped", "telescoped-inclusive")


def hook_skew_sides(k, l, m, j, form="difference"):
    """Both sides of the skewing rule for the hook Kronecker difference.

    ``form="difference"`` skews the two-term hook difference.
    ``form="telescoped"`` skews only the first product; summing the
    difference rule along (k + 2r, l - r, m - r) leaves the j terms
    r = 0..j-1 on the right.  ``form="telescoped-inclusive"`` runs r up to
    j, one term too many; it is kept so the extra term can be exhibited.
    """
    n = k + l + m
    if n < 1 or j < 1:
        raise ValueError("need k + l + m >= 1 and j >= 1")
    if form not in HOOK_SKEW_FORMS:
        raise ValueError(f"unknown form {form!r}")
    deg = max(n - j, 0)
    if j > n:
        return zero(deg), zero(deg)
    first = hook_kronecker(k + l, m, k + m, l, n)
    if form == "difference":
        diff = first - hook_kronecker(k + l + 1, m - 1, k + m + 1, l - 1, n)
        lhs = skew_h(j, diff)
        rhs = _eh_kronecker(k + l - j, m, k + m - j, l, deg) - _eh_kronecker(
            k + l, m - j, k + m, l - j, deg
        )
        return lhs, rhs
    lhs = skew_h(j, first)
    rhs = zero(deg)
    top = j + 1 if form == "telescoped-inclusive" else j
    for r in range(top):
        rhs = rhs + _eh_kronecker(k + l - j + r, m - r, k + m - j + r, l - r, deg)
    return lhs, rhs


def hook_skew_check(k, l, m, j, form="difference") -> VerificationReport:
    lhs, rhs = hook_skew_sides(k, l, m, j, form)
    return compare(f"hook-skew-{form}", (k, l, m, j), lhs, rhs)


# ---------------------------------------------------------------------------
# Th_m Th_l nabla e_k at q = t = 0 by the skewing recursion
# ---------------------------------------------------------------------------

# how a term Th_m' Th_l' nabla e_k' with k' <= 0 is valued inside the recursion
CONVENTIONS = ("virtual", "drop", "keep")

_memo = {}
_memo_lock = threading.Lock()


def _skew_terms(m, l, k, j):
    """(coefficient, m', l', k') for the three sums giving h_j^perp of Th_m Th_l nabla e_k."""
    for r in range(j + 1):
        yield 1, m - r, l - r, k - j + 2 * r
    for r in range(j):
        yield 1, m - r - 1, l - r, k - j + 2 * r + 1
        yield 1, m - r, l - r - 1, k - j + 2 * r + 1
    for r in range(j - 1):
        yield 1, m - r - 1, l - r - 1, k - j + 2 * r + 2


def _term_value(m, l, k, convention):
    deg = m + l + k
    if m < 0 or l < 0:
        return zero(max(deg, 0))
    if k >= 1:
        return _theta_rec(m, l, k, convention)
    if convention == "drop" or k < 0 and convention == "keep":
        return zero(max(deg, 0))
    if convention == "keep":
        if deg == 0:
            return SymF("s", 0, {(): 1})
        return _theta_rec(m, l, 0, convention)
    return _virtual_formula(m, l, k)


def _theta_rec(m, l, k, convention):
    key = (m, l, k, convention)
    with _memo_lock:
        hit = _memo.get(key)
    if hit is not None:
        return hit
    n = m + l + k
    skews = {}
    for j in range(1, n + 1):
        total = zero(n - j)
        for c, m2, l2, k2 in _skew_terms(m, l, k, j):
            val = _term_value(m2, l2, k2, convention)
            if val.terms:
                total = total + val * c
        skews[j] = convert(total, "m")
    coeffs = {}
    for lam in partitions_of(n):
        # <F, h_lam> = <h_{lam_1}^perp F, h_rest> = [m_rest] h_{lam_1}^perp F
        c = skews[lam[0]].coefficient(Partition(lam[1:]))
        if c:
            coeffs[lam] = c
    result = convert(SymF("m", n, coeffs), "s")
    with _memo_lock:
        _memo.setdefault(key, result)
        return _memo[key]


def theta_q0t0(n, i, j, convention="virtual", with_flag=False):
    """Th_i Th_j nabla e_(n-i-j) at q = t = 0 without any q,t arithmetic.

    Outside the range i + j < n the value is 0 by the vanishing statement;
    ``with_flag=True`` returns ``(value, vanishing)`` to make that visible.
    """
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    if n < 1 or i < 0 or j < 0:
        raise ValueError(f"invalid parameters ({n},{i},{j})")
    vanishing = i + j >= n
    value = zero(n) if vanishing else _theta_rec(i, j, n - i - j, convention)
    return (value, vanishing) if with_flag else value


def theta_direct(n, i, j, bound=6) -> SymF:
    """Th_i Th_j nabla e_(n-i-j) through q,t arithmetic, then q = t = 0.

    For i + j >= n the expression is outside the identity being checked
    (at i + j = n it would be Th_i Th_j (1), which is nonzero) and zero is
    returned, matching the vanishing of the quotient ring there.
    """
    if n < 1 or i < 0 or j < 0:
        raise ValueError(f"invalid parameters ({n},{i},{j})")
    if i + j >= n:
        return zero(n)
    k = n - i - j
    f = theta_chain([i, j], nabla(e(k), bound=bound), bound=bound)
    return specialize_symf(f, q=0, t=0)


def zero_index_probe(m, l) -> VerificationReport:
    """Compare Th_m Th_l (1) at q = t = 0 with the hook formula at k = 0.

    The hook side uses ordinary hooks, so (0, 1^m) vanishes.  The two sides
    are not expected to agree; the report records what happens.
    """
    n = m + l
    if n < 1:
        raise ValueError("need m + l >= 1")
    direct = specialize_symf(theta_chain([m, l], SymF("s", 0, {(): 1})), q=0, t=0)
    hooks = hook_kronecker(l, m, m, l, n) - hook_kronecker(l + 1, m - 1, m + 1, l - 1, n)
    return compare("zero-index-probe", (m, l, 0), direct, hooks, note="k = 0")


# ---------------------------------------------------------------------------
# the q,t recursion for h_j^perp Th_m Th_l H~_(k)
# ---------------------------------------------------------------------------

# what to do when the inner b-range is empty because E_{0,b} is requested:
#   none           drop the term (the range 1..0 is empty)
#   unit-binomial  add b = 0 with E_{0,0} = 1 and [n, 0] = 1 for every n
#   generalized    add b = 0 with Gaussian binomials extended to negative tops
#   constant-only  add b = 0 only when both Theta indices vanish, so the term
#                  is the constant 1 (matches the q = t = 0 hook values)
EMPTY_SUM_CONVENTIONS = ("none", "unit-binomial", "generalized", "constant-only")


def _qpow(e):
    return RatFuncQT(PolyQT.monomial(e, 0)) if e >= 0 else RatFuncQT(PolyQT(1), PolyQT.monomial(-e, 0))


def _choose2(x):
    return x * (x - 1) // 2


def _general_binomial(n, k):
    """Gaussian binomial extended to negative n by the product formula (Laurent in q)."""
    if k < 0:
        return RatFuncQT.coerce(0)
    if 0 <= n:
        return RatFuncQT.coerce(q_binomial(n, k))
    out = RatFuncQT.coerce(1)
    for i in range(k):
        out = out * (RatFuncQT.coerce(1) - _qpow(n - i)) / (RatFuncQT.coerce(1) - _qpow(i + 1))
    return out


def _binom(n, k, rule):
    if rule == "generalized":
        return _general_binomial(n, k)
    if rule == "unit-binomial" and k == 0:
        return RatFuncQT.coerce(1)
    return RatFuncQT.coerce(q_binomial(n, k))


_chain_memo = {}
_chain_lock = threading.Lock()


def _theta_nabla_enk(m, l, n, b, bound):
    key = (m, l, n, b)
    with _chain_lock:
        hit = _chain_memo.get(key)
    if hit is None:
        hit = theta_chain([m, l], nabla(enk(n, b), bound=bound), bound=bound)
        with _chain_lock:
            _chain_memo.setdefault(key, hit)
    return hit


def _htilde_row(k):
    return SymF("Htilde", k, {Partition((k,)) if k else Partition(): 1})


# top of the last q-binomial in the second weight: "printed" uses b + k - r - a,
# "matched" uses b + r - a, which pairs with b + r - a - 1 in the first weight
BINOMIAL_VARIANTS = ("printed", "matched")


def theta_recursion_sides(j, m, l, k, empty_sum="constant-only", bound=6, variant="matched"):
    """Both sides of the skewing recursion for Th_m Th_l H~_(k), over Q(q,t).

    The recursion holds for k >= 1.  At k = 0 the left side is
    h_j^perp Th_m Th_l (1), which need not vanish, while every right-hand
    term requires k >= 1 and is absent.
    """
    if j < 1 or min(m, l, k) < 0:
        raise ValueError("need j >= 1 and m, l, k >= 0")
    if empty_sum not in EMPTY_SUM_CONVENTIONS:
        raise ValueError(f"unknown convention {empty_sum!r}")
    if variant not in BINOMIAL_VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    n = m + l + k
    deg = max(n - j, 0)
    if n > bound:
        raise BoundExceeded(f"degree {n} exceeds bound {bound}")
    lhs = skew_h(j, theta_chain([m, l], to_classical(_htilde_row(k)), bound=bound))
    rhs = zero(deg)
    for r in range(j + 1):
        outer = RatFuncQT.coerce(q_binomial(k, r))
        if not outer:
            continue
        for a in range(k + 1):
            size = j - r + a
            m2, l2 = m - j + r, l + k - j - a
            if m2 < 0 or l2 < 0:
                continue
            b_range = range(1, size + 1)
            if size == 0:
                if empty_sum in ("unit-binomial", "generalized"):
                    b_range = range(0, 1)
                elif empty_sum == "constant-only" and m2 == l2 == 0:
                    b_range = range(0, 1)
            for b in b_range:
                rule = "standard"
                if b == 0:
                    rule = "generalized" if empty_sum == "generalized" else "unit-binomial"
                weight = _qpow(_choose2(k - r - a)) * _binom(b - 1, a, rule) * _binom(
                    b + r - a - 1, k - a - 1, rule
                ) + _qpow(_choose2(k - r - a + 1)) * _binom(b - 1, a - 1, rule) * _binom(
                    b + (k - r - a if variant == "printed" else r - a), k - a, rule
                )
                if not weight:
                    continue
                term = _theta_nabla_enk(m2, l2, size, b, bound)
                if term.terms:
                    rhs = rhs + term * (outer * weight)
    return lhs, rhs


def theta_recursion_check(
    j, m, l, k, empty_sum="constant-only", bound=6, variant="matched"
) -> VerificationReport:
    lhs, rhs = theta_recursion_sides(j, m, l, k, empty_sum, bound, variant)
    return compare(
        "theta-recursion", (j, m, l, k), lhs, rhs, note=f"b=0 rule: {empty_sum}, binomial: {variant}"
    )


# ---------------------------------------------------------------------------
# t = 0 specialization of Th_m Th_l nabla e_k
# ---------------------------------------------------------------------------


def nabla_hk_check(m, l, k, bound=6) -> VerificationReport:
    """Th_m Th_l nabla e_k = Th_m Th_l H~_(k) at t = 0, plus the pole-freeness claims.

    A pole while specializing at t = 0 is reported as a failure.
    """
    if min(m, l, k) < 0:
        raise ValueError("need m, l, k >= 0")
    params = (m, l, k)
    n = m + l + k
    try:
        lhs = specialize_symf(theta_chain([m, l], nabla(e(k), bound=bound), bound=bound), t=0)
        rhs = specialize_symf(theta_chain([m, l], to_classical(_htilde_row(k)), bound=bound), t=0)
        for nu in partitions_of(k):
            img = theta_chain([m, l], SymF("Htilde", k, {nu: 1}), bound=bound)
            specialize_symf(img, t=0)
    except SpecializationPoleError as exc:
        z = zero(n)
        return VerificationReport("nabla-hk", params, z, z, False, None, f"pole at t=0: {exc}")
    return compare("nabla-hk", params, lhs, rhs)


# ---------------------------------------------------------------------------
# the main statement, by several independent routes
# ---------------------------------------------------------------------------

METHODS = ("oracle", "formula", "recursion", "direct_qt")


def main_theorem_tables(n, methods, oracle_bound=6, qt_bound=6):
    from .exterior import BigradedTable, fdr_frobenius

    tables = {}
    for method in methods:
        if method == "oracle":
            tables[method] = fdr_frobenius(n, bound=oracle_bound)
            continue
        if method == "formula":
            fn = fdr_formula
        elif method == "recursion":
            fn = theta_q0t0
        elif method == "direct_qt":
            def fn(n, i, j):
                return theta_direct(n, i, j, bound=qt_bound)
        else:
            raise ValueError(f"unknown method {method!r}")
        tables[method] = BigradedTable(
            n, {(i, j): fn(n, i, j) for i, j in product(range(n + 1), repeat=2)}
        )
    return tables


def main_theorem_check(n, methods=("formula", "recursion"), oracle_bound=6, qt_bound=6):
    """Pairwise comparison of the selected routes on every bidegree 0 <= i, j <= n."""
    methods = list(dict.fromkeys(methods))
    if len(methods) < 2:
        raise ValueError("need at least two methods to compare")
    tables = main_theorem_tables(n, methods, oracle_bound, qt_bound)
    reports = []
    for x in range(len(methods)):
        for y in range(x + 1, len(methods)):
            a, b = methods[x], methods[y]
            for i, j in product(range(n + 1), repeat=2):
                reports.append(
                    compare(f"main-theorem:{a}={b}", (n, i, j), tables[a][i, j], tables[b][i, j])
                )
    return reports


def h_perp_equal(F: SymF, G: SymF) -> bool:
    """Whether h_j^perp F = h_j^perp G for every j >= 1 (equivalently F = G)."""
    if F.degree != G.degree:
        raise ValueError(f"degree mismatch: {F.degree} vs {G.degree}")
    n = F.degree
    if n < 1:
        raise ValueError("need positive degree")
    skews_agree = all(skew_h(j, F) == skew_h(j, G) for j in range(1, n + 1))
    direct = F == G
    if skews_agree != direct:
        raise AssertionError("skewing test disagrees with direct comparison")
    return skews_agree
