"""Exact arithmetic kernel: big rationals and sparse multivariate Laurent polynomials.

Every value in this package is a Laurent polynomial with exact rational
coefficients over a fixed variable universe

    q < t < a < b < c < d < x < y < x0 < x1 < ... < x9

(q is the series base, t is an auxiliary base with q = t^2 where half-integer
powers of q would otherwise appear, x0..x9 are weight slots for linearization
arguments).  Coefficients are Python ints where possible and ``fractions.Fraction``
otherwise; both are arbitrary precision and always reduced.

Representation
--------------
A polynomial is a dict mapping a *packed exponent key* to a nonzero coefficient.
Each variable owns a 24-bit field inside one big integer; an exponent e is
stored as e + 2**23 in its field, so exponents may be negative (Laurent) and
monomial multiplication is a single integer addition:

    key(m1 * m2) = key(m1) + key(m2) - _BASE

where _BASE is the key of the empty monomial.  Exponents must stay below
2**20 in absolute value, which leaves three bits of headroom per field; the
grids exercised by this package stay in the low thousands.

The canonical form is unique: no zero coefficients are stored, Fractions with
denominator 1 are normalized to int, and the printing order (graded
lexicographic over the fixed variable order) is deterministic.  All values are
immutable after construction and safe to share across threads.
"""

from __future__ import annotations

import os
import re
from fractions import Fraction

VAR_NAMES = ("q", "t", "a", "b", "c", "d", "x", "y",
             "x0", "x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8", "x9")

_W = 24
_OFF = 1 << 23
_MASK = (1 << _W) - 1
_NVARS = len(VAR_NAMES)
_INDEX = {name: i for i, name in enumerate(VAR_NAMES)}
_SHIFT = {name: _W * i for name, i in _INDEX.items()}
_BASE = sum(_OFF << (_W * i) for i in range(_NVARS))
_EXP_LIMIT = 1 << 20

Coeff = "int | Fraction"


class NotDivisibleError(ArithmeticError):
    """Raised by exact_div when the requested exact division has a remainder."""


class TermBudgetExceeded(RuntimeError):
    """Raised when a result would exceed the QCK_MAX_TERMS term cap."""


def term_cap() -> int:
    """Maximum number of stored terms allowed in any single polynomial."""
    return int(os.environ.get("QCK_MAX_TERMS", "10000000"))


def _norm_coeff(c):
    # Fractions that collapse to integers are stored as int (faster arithmetic).
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _encode(powers) -> int:
    key = _BASE
    for name, e in powers.items():
        if e:
            if name not in _INDEX:
                raise ValueError(f"unknown variable {name!r}; ring has {VAR_NAMES}")
            if not -_EXP_LIMIT < e < _EXP_LIMIT:
                raise ValueError(f"exponent {e} for {name!r} out of supported range")
            key += e << _SHIFT[name]
    return key


def _decode(key) -> tuple:
    # Exponent tuple in fixed variable order (length _NVARS).
    return tuple(((key >> (_W * i)) & _MASK) - _OFF for i in range(_NVARS))


def _grade(key) -> int:
    g = 0
    for i in range(_NVARS):
        g += ((key >> (_W * i)) & _MASK)
    return g - _NVARS * _OFF


class MultiLaurentPoly:
    """A sparse multivariate Laurent polynomial with exact rational coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        """Build from a map of {variable: exponent} dicts (or packed keys) to coefficients.

        Prefer the factory helpers ``const``, ``var``, ``monomial`` and
        ``from_terms`` in user code.
        """
        acc = {}
        if terms:
            for k, c in terms.items():
                if not isinstance(k, int):
                    k = _encode(dict(k))
                if not isinstance(c, (int, Fraction)):
                    c = Fraction(c)
                acc[k] = acc.get(k, 0) + c
        self._terms = {k: _norm_coeff(c) for k, c in acc.items() if c}

    # -- construction -----------------------------------------------------

    @staticmethod
    def _raw(terms: dict) -> "MultiLaurentPoly":
        p = MultiLaurentPoly.__new__(MultiLaurentPoly)
        p._terms = terms
        return p

    @classmethod
    def zero(cls) -> "MultiLaurentPoly":
        return cls._raw({})

    @classmethod
    def const(cls, c) -> "MultiLaurentPoly":
        c = _norm_coeff(c if isinstance(c, (int, Fraction)) else Fraction(c))
        return cls._raw({_BASE: c} if c else {})

    @classmethod
    def var(cls, name: str, exp: int = 1) -> "MultiLaurentPoly":
        return cls.monomial(1, {name: exp})

    @classmethod
    def monomial(cls, coeff, powers: dict) -> "MultiLaurentPoly":
        coeff = _norm_coeff(coeff if isinstance(coeff, (int, Fraction)) else Fraction(coeff))
        if not coeff:
            return cls.zero()
        return cls._raw({_encode(powers): coeff})

    @classmethod
    def from_terms(cls, pairs) -> "MultiLaurentPoly":
        """Build from an iterable of (powers-dict, coeff) pairs, summing duplicates."""
        out = cls.zero()
        acc = {}
        for powers, coeff in pairs:
            k = _encode(dict(powers))
            acc[k] = acc.get(k, 0) + coeff
        out._terms = {k: _norm_coeff(c) for k, c in acc.items() if c}
        return out

    # -- inspection --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def variables(self) -> tuple:
        """Names of the variables that actually occur, in canonical order."""
        seen = [False] * _NVARS
        for k in self._terms:
            for i in range(_NVARS):
                if ((k >> (_W * i)) & _MASK) != _OFF:
                    seen[i] = True
        return tuple(VAR_NAMES[i] for i in range(_NVARS) if seen[i])

    def sorted_terms(self):
        """Terms as (exponents-dict, coeff), graded-lexicographically sorted."""
        decorated = []
        for k, c in self._terms.items():
            exps = _decode(k)
            decorated.append((sum(exps), exps, c))
        decorated.sort(key=lambda t: (t[0], t[1]))
        return [({VAR_NAMES[i]: e for i, e in enumerate(exps) if e}, c)
                for _, exps, c in decorated]

    def coeff(self, powers: dict):
        """Coefficient of the given monomial (0 if absent)."""
        return self._terms.get(_encode(powers), 0)

    def constant_value(self):
        """The value of a constant polynomial; raises if any variable remains."""
        if not self._terms:
            return 0
        if len(self._terms) == 1 and _BASE in self._terms:
            return self._terms[_BASE]
        raise ValueError(f"not a constant polynomial: {self}")

    def degree_range(self, name: str) -> tuple:
        """(min, max) exponent of ``name`` across all terms; (0, 0) for 0."""
        if not self._terms:
            return (0, 0)
        sh = _SHIFT[name]
        es = [((k >> sh) & _MASK) - _OFF for k in self._terms]
        return (min(es), max(es))

    def coefficients_by(self, names) -> dict:
        """Group terms by their monomial in ``names``.

        Returns {powers-dict-over-names (as sorted tuple of pairs): polynomial
        in the remaining variables}.
        """
        idxs = [_INDEX[n] for n in names]
        buckets = {}
        for k, c in self._terms.items():
            sel = []
            rest = k
            for i in idxs:
                e = ((k >> (_W * i)) & _MASK) - _OFF
                if e:
                    sel.append((VAR_NAMES[i], e))
                    rest -= e << (_W * i)
            sel = tuple(sorted(sel, key=lambda pair: _INDEX[pair[0]]))
            buckets.setdefault(sel, {})[rest] = c
        return {sel: MultiLaurentPoly._raw(d) for sel, d in buckets.items()}

    # -- ring operations ----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, MultiLaurentPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == MultiLaurentPoly.const(other)._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __neg__(self):
        return MultiLaurentPoly._raw({k: -c for k, c in self._terms.items()})

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiLaurentPoly.const(other)
        elif not isinstance(other, MultiLaurentPoly):
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        for k, c in b.items():
            nc = out.get(k, 0) + c
            if nc:
                out[k] = _norm_coeff(nc)
            elif k in out:
                del out[k]
        return MultiLaurentPoly._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiLaurentPoly.const(other)
        elif not isinstance(other, MultiLaurentPoly):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            nc = out.get(k, 0) - c
            if nc:
                out[k] = _norm_coeff(nc)
            elif k in out:
                del out[k]
        return MultiLaurentPoly._raw(out)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _norm_coeff(other)
            if not other:
                return MultiLaurentPoly.zero()
            return MultiLaurentPoly._raw(
                {k: _norm_coeff(c * other) for k, c in self._terms.items()})
        if not isinstance(other, MultiLaurentPoly):
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return MultiLaurentPoly.zero()
        if len(a) == 1:
            (k1, c1), = a.items()
            k1 -= _BASE
            return MultiLaurentPoly._raw(
                {k1 + k: _norm_coeff(c1 * c) for k, c in b.items()})
        if len(b) == 1:
            return other.__mul__(self)
        uni = _common_single_var(a, b)
        if uni is not None:
            lo1, hi1 = self.degree_range(VAR_NAMES[uni])
            lo2, hi2 = other.degree_range(VAR_NAMES[uni])
            # Dense lists only pay off for dense supports.
            if (hi1 - lo1) + (hi2 - lo2) <= 16 * (len(a) + len(b)) + 64:
                return _mul_univariate(self, other, uni)
        return _mul_generic(a, b)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        result = MultiLaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- printing -----------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for powers, c in self.sorted_terms():
            mono = "*".join(v if e == 1 else f"{v}^{e}"
                            for v, e in sorted(powers.items(), key=lambda p: _INDEX[p[0]]))
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        s = str(self)
        return f"MultiLaurentPoly({s if len(s) <= 60 else s[:57] + '...'})"

    @classmethod
    def from_canonical(cls, text: str) -> "MultiLaurentPoly":
        """Inverse of str() on canonical output."""
        text = text.strip()
        if text == "0":
            return cls.zero()
        acc = {}
        for part in text.split(" + "):
            part = part.strip()
            coeff = Fraction(1)
            if part.startswith("-"):
                coeff = -coeff
                part = part[1:]
            powers = {}
            for factor in part.split("*"):
                factor = factor.strip()
                if re.fullmatch(r"\d+(/\d+)?", factor):
                    coeff *= Fraction(factor)
                else:
                    m = re.fullmatch(r"([a-z][a-z0-9]*)(\^(-?\d+))?", factor)
                    if m is None:
                        raise ValueError(f"cannot parse polynomial factor {factor!r}")
                    name, _, e = m.groups()
                    powers[name] = powers.get(name, 0) + (int(e) if e else 1)
            k = _encode(powers)
            acc[k] = acc.get(k, 0) + coeff
        return cls._raw({k: _norm_coeff(c) for k, c in acc.items() if c})

    # -- substitution ---------------------------------------------------------

    def substitute(self, bindings: dict) -> "MultiLaurentPoly":
        """Apply the ring homomorphism sending each bound variable to a monomial or rational.

        Binding values may be int, Fraction, a single-term MultiLaurentPoly, or
        any object with ``coeff`` and ``powers`` attributes describing a Laurent
        monomial.  Unbound variables pass through.  Substituting 0 for a
        variable that occurs with a negative exponent raises ZeroDivisionError.
        """
        norm = {}
        for name, val in bindings.items():
            if name not in _INDEX:
                raise ValueError(f"unknown variable {name!r}")
            norm[name] = _as_monomial(val)
        acc = {}
        for k, c in self._terms.items():
            nk = k
            nc = c
            dead = False
            for name, (bc, bkey) in norm.items():
                sh = _SHIFT[name]
                e = ((k >> sh) & _MASK) - _OFF
                if e == 0:
                    continue
                nk -= e << sh
                if bc == 0:
                    if e < 0:
                        raise ZeroDivisionError(
                            f"substituting 0 for {name!r}, which occurs with exponent {e}")
                    dead = True
                    break
                if e >= 0 or isinstance(bc, Fraction):
                    nc = nc * bc ** e
                else:
                    nc = nc * Fraction(1, bc ** (-e))
                nk += (bkey - _BASE) * e
            if not dead:
                acc[nk] = acc.get(nk, 0) + nc
        return MultiLaurentPoly._raw({k: _norm_coeff(c) for k, c in acc.items() if c})


def _as_monomial(val):
    """Normalize a binding value to (coeff, packed-key)."""
    if isinstance(val, (int, Fraction)):
        return (_norm_coeff(val), _BASE)
    if isinstance(val, MultiLaurentPoly):
        if len(val._terms) != 1:
            raise ValueError("substitution values must be single Laurent monomials")
        (k, c), = val._terms.items()
        return (c, k)
    if hasattr(val, "coeff") and hasattr(val, "powers"):
        return (_norm_coeff(val.coeff), _encode(dict(val.powers)))
    raise TypeError(f"cannot interpret {val!r} as a substitution value")


def _check_budget(n: int) -> None:
    if n > term_cap():
        raise TermBudgetExceeded(
            f"result would hold {n} terms, above QCK_MAX_TERMS={term_cap()}")


def _common_single_var(a: dict, b: dict):
    """Index of the single variable both operands live in, if any (constants ok)."""
    probe = next(iter(a)) | next(iter(b))
    idx = None
    # Cheap pre-test on one key pair, then verify across all keys.
    for i in range(_NVARS):
        if ((probe >> (_W * i)) & _MASK) != _OFF:
            if idx is not None:
                return None
            idx = i
    if idx is None:
        idx = 0  # both constants; treat as univariate in q
    lo = _BASE - (_OFF << (_W * idx))
    mask_rest = ~(_MASK << (_W * idx))
    for k in a:
        if (k & mask_rest) != (lo & mask_rest):
            return None
    for k in b:
        if (k & mask_rest) != (lo & mask_rest):
            return None
    return idx


def _mul_generic(a: dict, b: dict) -> MultiLaurentPoly:
    if len(a) > len(b):
        a, b = b, a
    if len(a) * len(b) > 50 * term_cap():
        raise TermBudgetExceeded(
            f"product of {len(a)} x {len(b)} terms is far above QCK_MAX_TERMS={term_cap()}")
    out = {}
    get = out.get
    bitems = list(b.items())
    for k1, c1 in a.items():
        k1 -= _BASE
        for k2, c2 in bitems:
            k = k1 + k2
            v = get(k)
            out[k] = c1 * c2 if v is None else v + c1 * c2
    out = {k: _norm_coeff(c) for k, c in out.items() if c}
    _check_budget(len(out))
    return MultiLaurentPoly._raw(out)


# -- dense univariate helpers -------------------------------------------------
#
# Univariate operands (ubiquitous in the congruence and positivity grids) are
# multiplied as dense coefficient lists.  Integer lists go through Kronecker
# packing: pack the coefficients into one big integer with fixed-width limbs,
# multiply once in C, unpack.  Exact for any operand sizes because the limb
# width is derived from the coefficient bounds.

def _kron_mul_nonneg(A, B):
    limb_bits = (max(A).bit_length() + max(B).bit_length()
                 + min(len(A), len(B)).bit_length() + 1)
    nbytes = (limb_bits + 7) // 8
    ia = int.from_bytes(b"".join(c.to_bytes(nbytes, "little") for c in A), "little")
    ib = int.from_bytes(b"".join(c.to_bytes(nbytes, "little") for c in B), "little")
    prod = ia * ib
    n_out = len(A) + len(B) - 1
    raw = prod.to_bytes(nbytes * (n_out + 1), "little")
    return [int.from_bytes(raw[i * nbytes:(i + 1) * nbytes], "little")
            for i in range(n_out)]


def _dense_mul(A, B):
    if not A or not B:
        return []
    if all(isinstance(c, int) for c in A) and all(isinstance(c, int) for c in B):
        ap = [c if c > 0 else 0 for c in A]
        an = [-c if c < 0 else 0 for c in A]
        bp = [c if c > 0 else 0 for c in B]
        bn = [-c if c < 0 else 0 for c in B]
        out = [0] * (len(A) + len(B) - 1)
        for X, Y, sign in ((ap, bp, 1), (an, bn, 1), (ap, bn, -1), (an, bp, -1)):
            if any(X) and any(Y):
                part = _kron_mul_nonneg(X, Y)
                for i, v in enumerate(part):
                    if v:
                        out[i] += sign * v
        return out
    out = [0] * (len(A) + len(B) - 1)
    for i, ai in enumerate(A):
        if ai:
            for j, bj in enumerate(B):
                if bj:
                    out[i + j] += ai * bj
    return out


def _dense_divrem(A, B):
    """Quotient and remainder of dense coefficient lists (B's lead nonzero)."""
    lead = B[-1]
    r = list(A)
    if len(A) < len(B):
        return [], r
    q = [0] * (len(A) - len(B) + 1)
    for i in reversed(range(len(q))):
        c = r[i + len(B) - 1]
        if c:
            if lead == 1:
                qc = c
            elif lead == -1:
                qc = -c
            else:
                qc = _norm_coeff(Fraction(c) / lead)
            q[i] = qc
            for j, bj in enumerate(B):
                if bj:
                    r[i + j] -= qc * bj
    while r and not r[-1]:
        r.pop()
    return q, r


def _to_dense(p: MultiLaurentPoly, idx: int):
    """(min_exponent, coefficient list) of a poly univariate in VAR_NAMES[idx]."""
    sh = _W * idx
    items = [(((k >> sh) & _MASK) - _OFF, c) for k, c in p._terms.items()]
    lo = min(e for e, _ in items)
    hi = max(e for e, _ in items)
    out = [0] * (hi - lo + 1)
    for e, c in items:
        out[e - lo] = c
    return lo, out


def _from_dense(idx: int, lo: int, coeffs) -> MultiLaurentPoly:
    sh = _W * idx
    out = {}
    for i, c in enumerate(coeffs):
        if c:
            out[_BASE + ((lo + i) << sh)] = _norm_coeff(c)
    return MultiLaurentPoly._raw(out)


def _mul_univariate(p: MultiLaurentPoly, r: MultiLaurentPoly, idx: int) -> MultiLaurentPoly:
    lo1, A = _to_dense(p, idx)
    lo2, B = _to_dense(r, idx)
    out = _dense_mul(A, B)
    _check_budget(len(out))
    return _from_dense(idx, lo1 + lo2, out)


# -- module-level operations ------------------------------------------------------

def add(p: MultiLaurentPoly, r: MultiLaurentPoly) -> MultiLaurentPoly:
    """Canonical sum of two polynomials."""
    return p + r


def mul(p: MultiLaurentPoly, r: MultiLaurentPoly) -> MultiLaurentPoly:
    """Canonical product of two polynomials."""
    return p * r


def substitute(p: MultiLaurentPoly, bindings: dict) -> MultiLaurentPoly:
    """Image of p under variable -> monomial-or-rational bindings."""
    return p.substitute(bindings)


def _min_exponent_key(p: MultiLaurentPoly) -> int:
    """Packed key of the componentwise-minimal exponent vector of p's support."""
    mins = [None] * _NVARS
    for k in p._terms:
        for i in range(_NVARS):
            e = ((k >> (_W * i)) & _MASK) - _OFF
            if mins[i] is None or e < mins[i]:
                mins[i] = e
    return sum((m + _OFF) << (_W * i) for i, m in enumerate(mins))


def _shift_by(p: MultiLaurentPoly, delta: int) -> MultiLaurentPoly:
    if delta == 0:
        return p
    return MultiLaurentPoly._raw({k + delta: c for k, c in p._terms.items()})


def exact_divide(p: MultiLaurentPoly, d: MultiLaurentPoly):
    """Quotient r with r*d == p, or None when d does not divide p exactly.

    Laurent shifts are cleared first (divide out the minimal exponent vector of
    each operand), the remaining ordinary polynomials are divided, and the
    result is verified by multiplying back.
    """
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return MultiLaurentPoly.zero()
    sp = _min_exponent_key(p) - _BASE
    sd = _min_exponent_key(d) - _BASE
    phat = _shift_by(p, -sp)
    dhat = _shift_by(d, -sd)
    q = _divide_ordinary(phat, dhat)
    if q is None:
        return None
    q = _shift_by(q, sp - sd)
    if q * d != p:  # multiply-back guard; the division loop should never fail it
        raise AssertionError("exact_divide produced an incorrect quotient")
    return q


def exact_div(p: MultiLaurentPoly, d: MultiLaurentPoly) -> MultiLaurentPoly:
    """exact_divide that raises NotDivisibleError instead of returning None."""
    q = exact_divide(p, d)
    if q is None:
        raise NotDivisibleError(f"({p}) is not divisible by ({d})")
    return q


def _divide_ordinary(p: MultiLaurentPoly, d: MultiLaurentPoly):
    """Division in the ordinary (non-negative exponent) ring; None if inexact."""
    dvars = d.variables()
    if len(dvars) <= 1:
        return _divide_by_univariate(p, d, _INDEX[dvars[0]] if dvars else 0)
    dterms = sorted(d._terms.items(), key=lambda kv: (_grade(kv[0]), kv[0]), reverse=True)
    dlead_key, dlead_c = dterms[0]
    rest = dterms[1:]
    r = dict(p._terms)
    q = {}
    while r:
        lt_key = max(r, key=lambda k: (_grade(k), k))
        lt_c = r[lt_key]
        qk = lt_key - dlead_key
        # Quotient monomial must be ordinary (componentwise >= 0).
        for i in range(_NVARS):
            if (((qk + _BASE) >> (_W * i)) & _MASK) < _OFF:
                return None
        qc = _norm_coeff(Fraction(lt_c) / dlead_c)
        q[qk + _BASE] = qc
        del r[lt_key]
        for k2, c2 in rest:
            k = qk + k2
            nc = r.get(k, 0) - qc * c2
            if nc:
                r[k] = nc
            elif k in r:
                del r[k]
    return MultiLaurentPoly._raw(q)


def _divide_by_univariate(p: MultiLaurentPoly, d: MultiLaurentPoly, idx: int):
    """Divide a multivariate p by a divisor univariate in VAR_NAMES[idx]."""
    _, B = _to_dense(d, idx)
    sh = _W * idx
    mask_var = _MASK << sh
    buckets = {}
    for k, c in p._terms.items():
        rest = k & ~mask_var
        e = ((k >> sh) & _MASK) - _OFF
        buckets.setdefault(rest, []).append((e, c))
    out = {}
    for rest, items in buckets.items():
        hi = max(e for e, _ in items)
        A = [0] * (hi + 1)
        for e, c in items:
            A[e] = c
        qd, rem = _dense_divrem(A, B)
        if rem:
            return None
        for i, c in enumerate(qd):
            if c:
                out[rest + ((i + _OFF) << sh)] = c
    return MultiLaurentPoly._raw(out)


def divrem_in_q(p: MultiLaurentPoly, m: MultiLaurentPoly) -> tuple:
    """Long division of integer polynomials in q by a monic integer modulus.

    Requires p to have only non-negative q-exponents and integer coefficients.
    Returns (quotient, remainder) with deg(remainder) < deg(m), both exact.
    """
    for poly, label in ((p, "dividend"), (m, "modulus")):
        extra = [v for v in poly.variables() if v != "q"]
        if extra:
            raise ValueError(f"{label} must be univariate in q, found {extra}")
    lo_p = p.degree_range("q")[0] if p else 0
    if lo_p < 0:
        raise ValueError("dividend has negative q-exponents; clear them first")
    if any(not isinstance(c, int) for c in p._terms.values()):
        raise ValueError("dividend must have integer coefficients")
    if m.is_zero():
        raise ZeroDivisionError("zero modulus")
    if any(not isinstance(c, int) for c in m._terms.values()):
        raise ValueError("modulus must have integer coefficients")
    _, B = _to_dense(m, 0)
    lo_m = m.degree_range("q")[0]
    if lo_m < 0:
        raise ValueError("modulus has negative q-exponents")
    B = [0] * lo_m + B
    if B[-1] != 1:
        raise ValueError("modulus must be monic")
    if p.is_zero():
        return MultiLaurentPoly.zero(), MultiLaurentPoly.zero()
    lo, A = _to_dense(p, 0)
    A = [0] * lo + A
    q, r = _dense_divrem(A, B)
    return _from_dense(0, 0, q), _from_dense(0, 0, r)


def is_nonneg_integer_laurent(p: MultiLaurentPoly) -> bool:
    """True iff p is univariate in q with non-negative integer coefficients."""
    extra = [v for v in p.variables() if v != "q"]
    if extra:
        raise ValueError(f"free variables besides q remain: {extra}")
    return all(isinstance(c, int) and c > 0 for c in p._terms.values())


ZERO = MultiLaurentPoly.zero()
ONE = MultiLaurentPoly.const(1)
