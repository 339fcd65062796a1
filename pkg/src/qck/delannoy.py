"""Classical and q-Delannoy numbers and their product formula.

D(m,n) counts lattice paths from (0,0) to (n,m) built from east (1,0),
north (0,1) and diagonal (1,1) steps.  Two q-analogues are used:

    D_q(m,n)  = sum_k q^{C(k,2)}   [n;k] [n+m-k; n]
    D*_q(m,n) = sum_k q^{C(k+1,2)} [n;k] [n+m-k; n]        (= q^{mn} D_{1/q}(m,n))

Both admit alternative expansions with (-1;q)_k and (-q;q)_k weights, and
their product collapses to a single sum (``product_expansion_rhs``); all of it
is verified exactly over polynomials in q (and symbolically in x for the
parametrized form the alternative expansions specialize from).
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .exactalg import MultiLaurentPoly
from .qkit import ParamExpr, choose2, poch_prefixes, qbinomial, qpochhammer
from .report import VerificationReport, make_report


class DelannoyMismatchError(RuntimeError):
    """The two closed forms for D(m,n) disagreed; arithmetic is broken."""


def delannoy(m: int, n: int) -> int:
    """D(m,n) computed by both binomial sums, which must agree."""
    if m < 0 or n < 0:
        raise ValueError("Delannoy indices must be non-negative")
    s1 = sum(comb(n, k) * comb(n + m - k, n) for k in range(n + 1))
    s2 = sum(comb(n, k) * comb(m, k) * 2 ** k for k in range(n + 1))
    if s1 != s2:
        raise DelannoyMismatchError(
            f"closed forms disagree at ({m},{n}): {s1} != {s2}")
    return s1


@lru_cache(maxsize=None)
def dq(m: int, n: int) -> MultiLaurentPoly:
    """D_q(m,n) = sum_k q^{C(k,2)} [n;k] [n+m-k; n]."""
    out = MultiLaurentPoly.zero()
    for k in range(n + 1):
        term = qbinomial(n, k) * qbinomial(n + m - k, n)
        out = out + term * MultiLaurentPoly.monomial(1, {"q": choose2(k)})
    return out


@lru_cache(maxsize=None)
def dq_star(m: int, n: int) -> MultiLaurentPoly:
    """D*_q(m,n) = sum_k q^{C(k+1,2)} [n;k] [n+m-k; n]."""
    out = MultiLaurentPoly.zero()
    for k in range(n + 1):
        term = qbinomial(n, k) * qbinomial(n + m - k, n)
        out = out + term * MultiLaurentPoly.monomial(1, {"q": choose2(k + 1)})
    return out


@lru_cache(maxsize=None)
def dq_inverse_base(m: int, n: int) -> MultiLaurentPoly:
    """D_{1/q}(m,n): the image of D_q(m,n) under q -> q^{-1} (Laurent)."""
    return dq(m, n).substitute({"q": ParamExpr.q_power(-1)})


def dq_alt(m: int, n: int) -> MultiLaurentPoly:
    """The (-1;q)_k expansion: sum_k q^{(m-k)(n-k)} [m;k][n;k] (-1;q)_k == D_q(m,n)."""
    return _alt_sum(m, n, ParamExpr.of(-1))


def dq_star_alt(m: int, n: int) -> MultiLaurentPoly:
    """The (-q;q)_k expansion: sum_k q^{(m-k)(n-k)} [m;k][n;k] (-q;q)_k == D*_q(n,m).

    Note the swapped arguments on the right-hand side: the sum over k <= m
    with these weights produces D*_q(n, m).
    """
    return _alt_sum(m, n, ParamExpr.of(-1, {"q": 1}))


def _alt_sum(m: int, n: int, weight_param: ParamExpr) -> MultiLaurentPoly:
    weights = poch_prefixes(weight_param, m)
    out = MultiLaurentPoly.zero()
    for k in range(m + 1):
        term = qbinomial(m, k) * qbinomial(n, k) * weights[k]
        out = out + term * MultiLaurentPoly.monomial(1, {"q": (m - k) * (n - k)})
    return out


def general_x_expansion(m: int, n: int) -> tuple:
    """Both sides of sum_k q^{(m-k)(n-k)} [m;k][n;k] (x;q)_k == sum_i q^{C(i,2)} [n;i][n+m-i;n] (-x)^i.

    Specializing x to -1 and -q recovers the two alternative expansions.
    """
    px = poch_prefixes(ParamExpr.var("x"), m)
    lhs = MultiLaurentPoly.zero()
    for k in range(m + 1):
        term = qbinomial(m, k) * qbinomial(n, k) * px[k]
        lhs = lhs + term * MultiLaurentPoly.monomial(1, {"q": (m - k) * (n - k)})
    rhs = MultiLaurentPoly.zero()
    for i in range(m + 1):
        sign = -1 if i % 2 else 1
        term = qbinomial(n, i) * qbinomial(n + m - i, n)
        rhs = rhs + term * MultiLaurentPoly.monomial(sign, {"q": choose2(i), "x": i})
    return lhs, rhs


def product_expansion_rhs(m: int, n: int) -> MultiLaurentPoly:
    """sum_k q^{(m-k)(n-k)} [n+k;2k][m;k][m+k;k] (-1;q)_k (-q;q)_k."""
    w1 = poch_prefixes(ParamExpr.of(-1), n)
    w2 = poch_prefixes(ParamExpr.of(-1, {"q": 1}), n)
    out = MultiLaurentPoly.zero()
    for k in range(n + 1):
        term = qbinomial(n + k, 2 * k) * qbinomial(m, k) * qbinomial(m + k, k)
        term = term * w1[k] * w2[k]
        out = out + term * MultiLaurentPoly.monomial(1, {"q": (m - k) * (n - k)})
    return out


def product_expansion(m: int, n: int) -> VerificationReport:
    """Check D_q(m,n) D*_q(m,n) against the single-sum expansion."""
    started = time.perf_counter()
    diff = dq(m, n) * dq_star(m, n) - product_expansion_rhs(m, n)
    return make_report("delannoy_product", {"m": m, "n": n}, ("q",), diff, started)


def product_x_identity(m: int, n: int) -> VerificationReport:
    """The x-parametrized product identity the single-sum expansion specializes from.

    (sum_k q^{(m-k)(n-k)} [m;k][n;k] (x;q)_k)(same with x -> q/x)
        == sum_k q^{(m-k)(n-k)} [n+k;2k][m;k][m+k;k] (x;q)_k (q/x;q)_k
    """
    started = time.perf_counter()
    px = poch_prefixes(ParamExpr.var("x"), max(m, n))
    pqx = poch_prefixes(ParamExpr.of(1, {"q": 1, "x": -1}), max(m, n))
    f1 = MultiLaurentPoly.zero()
    f2 = MultiLaurentPoly.zero()
    for k in range(m + 1):
        base = qbinomial(m, k) * qbinomial(n, k) * MultiLaurentPoly.monomial(
            1, {"q": (m - k) * (n - k)})
        f1 = f1 + base * px[k]
        f2 = f2 + base * pqx[k]
    rhs = MultiLaurentPoly.zero()
    for k in range(n + 1):
        term = qbinomial(n + k, 2 * k) * qbinomial(m, k) * qbinomial(m + k, k)
        term = term * px[k] * pqx[k]
        rhs = rhs + term * MultiLaurentPoly.monomial(1, {"q": (m - k) * (n - k)})
    return make_report("delannoy_product_x", {"m": m, "n": n}, ("q", "x"),
                       f1 * f2 - rhs, started)


def verify_relations(m: int, n: int) -> VerificationReport:
    """Cross-relations at one (m,n): alternative expansions, q = 1, and the q -> 1/q twin.

    Checks dq_alt == D_q(m,n), dq_star_alt == D*_q(n,m) (note the swap),
    D*_q(m,n) == q^{mn} D_{1/q}(m,n), and that both q-analogues collapse to
    D(m,n) at q = 1.
    """
    started = time.perf_counter()
    one = MultiLaurentPoly.const(1)
    d_plain = MultiLaurentPoly.const(delannoy(m, n))
    diffs = [
        dq_alt(m, n) - dq(m, n),
        dq_star_alt(m, n) - dq_star(n, m),
        dq_star(m, n) - dq_inverse_base(m, n) * MultiLaurentPoly.monomial(1, {"q": m * n}),
        dq(m, n).substitute({"q": 1}) - d_plain,
        dq_star(m, n).substitute({"q": 1}) - d_plain,
    ]
    diff = next((d for d in diffs if not d.is_zero()), MultiLaurentPoly.zero())
    return make_report("delannoy_relations", {"m": m, "n": n}, ("q",), diff, started)


def dq_symmetry_holds(bound: int) -> bool:
    """Empirical check whether D_q(m,n) == D_q(n,m) over 0 <= m,n <= bound.

    Reported for information only; nothing in the package relies on it.
    """
    return all(dq(m, n) == dq(n, m)
               for m in range(bound + 1) for n in range(m + 1, bound + 1))


@dataclass
class DelannoyTable:
    """A rectangle of Delannoy values; entries[m][n] covers 0..max_m x 0..max_n."""

    kind: str
    max_m: int
    max_n: int
    entries: list

    def cell(self, m: int, n: int):
        return self.entries[m][n]


_TABLE_KINDS = ("plain", "dq", "dqstar", "product-rhs")


def build_table(kind: str, max_m: int, max_n: int) -> DelannoyTable:
    """Tabulate D, D_q, D*_q, or the product-formula right side."""
    if kind not in _TABLE_KINDS:
        raise ValueError(f"unknown table kind {kind!r}; expected one of {_TABLE_KINDS}")
    fns = {"plain": delannoy, "dq": dq, "dqstar": dq_star,
           "product-rhs": product_expansion_rhs}
    fn = fns[kind]
    entries = [[fn(m, n) for n in range(max_n + 1)] for m in range(max_m + 1)]
    return DelannoyTable(kind, max_m, max_n, entries)
