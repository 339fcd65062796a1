"""Laurent-polynomial congruences modulo [p] and [p]^2.

For an odd prime p, [p] = 1 + q + ... + q^{p-1} is irreducible, and q is a
unit modulo [p]^2 (a witness Y with q*Y + [p]^2 == 1 is constructed for every
modulus).  A congruence u == v between Laurent polynomials therefore means:
after multiplying u - v by the minimal q-power that clears negative exponents,
the result is an integer polynomial divisible by [p] (or [p]^2).

The headline check: the odd-weighted sum over k < p of
D_q(m,k) D_{1/q}(m,k) q^{-k} collapses modulo [p]^2 to one of three closed
forms selected by m mod p.  The sum is computed both from the Delannoy product
formula directly and through its single-sum rewriting; the two must agree
exactly before any reduction happens.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .delannoy import dq, dq_inverse_base
from .exactalg import MultiLaurentPoly, divrem_in_q, exact_div
from .qkit import QBracket, bracket, poch_prefixes, qbinomial, qpochhammer, ParamExpr
from .report import VerificationReport, make_report

_PRIME_CAP = 10 ** 4


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class BracketModulus:
    """An odd prime p with [p] and [p]^2, plus the unit witness for q."""

    p: int
    bracket: QBracket
    bracket_sq: MultiLaurentPoly
    q_unit_witness: MultiLaurentPoly  # Y with q*Y + [p]^2 == 1

    @classmethod
    def of(cls, p: int) -> "BracketModulus":
        if p > _PRIME_CAP:
            raise ValueError(f"prime {p} above supported cap {_PRIME_CAP}")
        if p == 2 or not _is_prime(p):
            raise ValueError(f"{p} is not an odd prime")
        br = QBracket.of(p)
        sq = br.poly * br.poly
        # [p]^2 has constant term 1, so 1 - [p]^2 is divisible by q.
        witness = exact_div(MultiLaurentPoly.const(1) - sq,
                            MultiLaurentPoly.var("q"))
        assert MultiLaurentPoly.var("q") * witness + sq == MultiLaurentPoly.const(1)
        return cls(p, br, sq, witness)


def congruence_witness(u: MultiLaurentPoly, v: MultiLaurentPoly,
                       mod: BracketModulus, square: bool = False) -> MultiLaurentPoly:
    """Remainder of the cleared difference u - v modulo [p] or [p]^2 (zero iff congruent)."""
    d = u - v
    if d.is_zero():
        return d
    extra = [name for name in d.variables() if name != "q"]
    if extra:
        raise ValueError(f"congruence arguments must be univariate in q, found {extra}")
    lo = d.degree_range("q")[0]
    if lo < 0:
        d = d * MultiLaurentPoly.monomial(1, {"q": -lo})
    if any(not isinstance(c, int) for c in d._terms.values()):
        raise ValueError("non-integer coefficients after clearing q-powers")
    modulus = mod.bracket_sq if square else mod.bracket.poly
    _, rem = divrem_in_q(d, modulus)
    return rem


def laurent_congruent(u: MultiLaurentPoly, v: MultiLaurentPoly,
                      mod: BracketModulus, square: bool = False) -> bool:
    """True iff u == v as Laurent polynomials modulo [p] (or [p]^2 when square)."""
    return congruence_witness(u, v, mod, square).is_zero()


def verify_minus_q_pochhammer(p: int) -> VerificationReport:
    """(-q; q)_{p-1} == 1 (mod [p])."""
    started = time.perf_counter()
    mod = BracketModulus.of(p)
    value = qpochhammer(ParamExpr.of(-1, {"q": 1}), p - 1)
    witness = congruence_witness(value, MultiLaurentPoly.const(1), mod, square=False)
    return make_report("minus_q_pochhammer", {"p": p}, ("q",), witness, started)


def verify_qidentity(n: int, j: int) -> VerificationReport:
    """The telescoping identity behind the single-sum rewriting, cleared by (1 - q^{j+1}):

    sum_{k=j}^{n-1} (1-q^{2k+1}) [k+j;2j] q^{-(j+1)k} * (1-q^{j+1})
        == (1-q^n)(1-q^{n-j}) [n+j;2j] q^{-(j+1)(n-1)}
    """
    if not 0 <= j <= n - 1:
        raise ValueError("need 0 <= j <= n-1")
    started = time.perf_counter()
    one = MultiLaurentPoly.const(1)
    lhs = MultiLaurentPoly.zero()
    for k in range(j, n):
        term = (one - MultiLaurentPoly.monomial(1, {"q": 2 * k + 1})) * qbinomial(k + j, 2 * j)
        lhs = lhs + term * MultiLaurentPoly.monomial(1, {"q": -(j + 1) * k})
    lhs = lhs * (one - MultiLaurentPoly.monomial(1, {"q": j + 1}))
    rhs = (one - MultiLaurentPoly.monomial(1, {"q": n})) \
        * (one - MultiLaurentPoly.monomial(1, {"q": n - j})) \
        * qbinomial(n + j, 2 * j) * MultiLaurentPoly.monomial(1, {"q": -(j + 1) * (n - 1)})
    return make_report("qidentity", {"n": n, "j": j}, ("q",), lhs - rhs, started)


class Thm2MismatchError(RuntimeError):
    """The two routes to the left-hand sum disagreed; transcription is broken."""


def _thm2_lhs_direct(p: int, m: int) -> MultiLaurentPoly:
    out = MultiLaurentPoly.zero()
    for k in range(p):
        term = bracket(2 * k + 1) * dq(m, k) * dq_inverse_base(m, k)
        out = out + term * MultiLaurentPoly.monomial(1, {"q": -k})
    return out


def _thm2_lhs_single_sum(p: int, m: int) -> MultiLaurentPoly:
    one = MultiLaurentPoly.const(1)
    out = MultiLaurentPoly.zero()
    w1 = poch_prefixes(ParamExpr.of(-1), p - 1)
    w2 = poch_prefixes(ParamExpr.of(-1, {"q": 1}), p - 1)
    for j in range(p):
        # [p] = (1-q^p)/(1-q), so this ratio carries the full displayed
        # prefactor (1-q^p)(1-q^{p-j}) / ((1-q)(1-q^{j+1})).
        num = bracket(p) * (one - MultiLaurentPoly.monomial(1, {"q": p - j})) \
            * qbinomial(p + j, 2 * j)
        ratio = exact_div(num, one - MultiLaurentPoly.monomial(1, {"q": j + 1}))
        term = ratio * qbinomial(m, j) * qbinomial(m + j, j) * w1[j] * w2[j]
        exp = j * j - m * j - (j + 1) * (p - 1)
        out = out + term * MultiLaurentPoly.monomial(1, {"q": exp})
    return out


def thm2_lhs(p: int, m: int) -> MultiLaurentPoly:
    """The odd-weighted Delannoy-product sum, computed by both routes and cross-checked."""
    direct = _thm2_lhs_direct(p, m)
    single = _thm2_lhs_single_sum(p, m)
    if direct != single:
        raise Thm2MismatchError(f"sum routes disagree at p={p}, m={m}")
    return direct


def thm2_case(p: int, m: int) -> str:
    """Which congruence case applies: 'zero' (m = 0), 'minus_one' (m = -1) or 'other' mod p."""
    r = m % p
    if r == 0:
        return "zero"
    if r == p - 1:
        return "minus_one"
    return "other"


def thm2_target(p: int, m: int) -> MultiLaurentPoly:
    """The closed form the sum must match modulo [p]^2, materialized by exact division."""
    one_minus_q2 = MultiLaurentPoly.const(1) - MultiLaurentPoly.monomial(1, {"q": 2})
    case = thm2_case(p, m)
    if case == "zero":
        num = MultiLaurentPoly.var("q") - MultiLaurentPoly.monomial(1, {"q": 1 - 2 * m})
        return exact_div(num, one_minus_q2)
    if case == "minus_one":
        num = MultiLaurentPoly.var("q") - MultiLaurentPoly.monomial(1, {"q": 2 * m + 3})
        return exact_div(num, one_minus_q2)
    return MultiLaurentPoly.zero()


def verify_thm2(p: int, m: int) -> VerificationReport:
    """The sum over k < p of [2k+1] D_q(m,k) D_{1/q}(m,k) q^{-k} matches its case target mod [p]^2."""
    if m < 1:
        raise ValueError("need m >= 1")
    started = time.perf_counter()
    mod = BracketModulus.of(p)
    witness = congruence_witness(thm2_lhs(p, m), thm2_target(p, m), mod, square=True)
    return make_report("thm2", {"p": p, "m": m}, ("q",), witness, started)


def nonneg_divisibility_fact(p: int, j: int, m: int) -> bool:
    """The auxiliary polynomiality fact used in the congruence proof:

    (1-q^{p-j})(1-q^{j+1}) / ((1-q)(1-q^p)) * [p+j;2j] [m+1;j+1] [m+j;j+1]
    is a polynomial in q with non-negative integer coefficients.
    """
    from .exactalg import exact_divide, is_nonneg_integer_laurent
    one = MultiLaurentPoly.const(1)
    num = (one - MultiLaurentPoly.monomial(1, {"q": p - j})) \
        * (one - MultiLaurentPoly.monomial(1, {"q": j + 1})) \
        * qbinomial(p + j, 2 * j) * qbinomial(m + 1, j + 1) * qbinomial(m + j, j + 1)
    den = (one - MultiLaurentPoly.var("q")) \
        * (one - MultiLaurentPoly.monomial(1, {"q": p}))
    quotient = exact_divide(num, den)
    return quotient is not None and is_nonneg_integer_laurent(quotient)
