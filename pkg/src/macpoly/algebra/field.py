"""Fields of rational functions with exact integer-polynomial data.

``Frac`` is a reduced fraction of two sparse integer polynomials in a fixed
tuple of formal generators.  Canonical form: gcd(num, den) = 1 and the
denominator's leading lex coefficient is positive, so equality is plain
structural equality.

Two ready-made coefficient domains are used throughout the package:

* ``KField``   -- rational functions of one formal coupling parameter.
* ``QTField``  -- rational functions of ``Q`` (the 2n-th root of the
  quantum parameter squared, i.e. q = Q**(2n)) and ``t``; or of ``Q``
  alone once ``t = q**k`` has been substituted.

Plain ``fractions.Fraction`` serves as the exact rational domain; the tiny
adapter ``QQ`` gives it the same construction surface as the fields here.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import ExactnessError, LimitFailureError
from . import poly as P


class Frac:
    __slots__ = ("ring", "num", "den")

    def __init__(self, ring, num, den, reduce=True):
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if reduce and num:
            g = P.p_gcd(num, den)
            if g != P.p_const(1, ring.nvars):
                num = P.p_divexact(num, g)
                den = P.p_divexact(den, g)
        if not num:
            den = P.p_const(1, ring.nvars)
        elif P.p_lead_sign(den) < 0:
            num, den = P.p_neg(num), P.p_neg(den)
        self.ring = ring
        self.num = num
        self.den = den

    # -- construction helpers

    def _coerce(self, other):
        if isinstance(other, Frac):
            if other.ring is not self.ring:
                raise TypeError("mixed rational-function rings")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.of(other)
        return NotImplemented

    # -- ring/field structure

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            return Frac(self.ring, P.p_add(self.num, o.num), self.den)
        num = P.p_add(P.p_mul(self.num, o.den), P.p_mul(o.num, self.den))
        return Frac(self.ring, num, P.p_mul(self.den, o.den))

    __radd__ = __add__

    def __neg__(self):
        return Frac(self.ring, P.p_neg(self.num), self.den, reduce=False)

    def __sub__(self, other):
        o = self._coerce(other)
        return o if o is NotImplemented else self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return o if o is NotImplemented else o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Frac(self.ring, P.p_mul(self.num, o.num),
                    P.p_mul(self.den, o.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if not o.num:
            raise ZeroDivisionError("division by zero rational function")
        return Frac(self.ring, P.p_mul(self.num, o.den),
                    P.p_mul(self.den, o.num))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return o if o is NotImplemented else o / self

    def __pow__(self, e: int):
        if e < 0:
            return self.ring.one / self ** (-e)
        return Frac(self.ring, P.p_pow(self.num, e), P.p_pow(self.den, e),
                    reduce=False)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((frozenset(self.num.items()),
                     frozenset(self.den.items())))

    def __bool__(self):
        return bool(self.num)

    def __repr__(self):
        return "Frac(%s / %s)" % (self.ring.format_poly(self.num),
                                  self.ring.format_poly(self.den))

    def is_one(self):
        one = P.p_const(1, self.ring.nvars)
        return self.num == one and self.den == one


class PolyField:
    """Field of rational functions in named formal generators."""

    def __init__(self, names):
        self.names = tuple(names)
        self.nvars = len(self.names)
        self.zero = Frac(self, {}, P.p_const(1, self.nvars), reduce=False)
        self.one = Frac(self, P.p_const(1, self.nvars),
                        P.p_const(1, self.nvars), reduce=False)

    def of(self, x):
        """Embed an int or Fraction."""
        if isinstance(x, Frac):
            if x.ring is not self:
                raise TypeError("foreign rational function")
            return x
        f = Fraction(x)
        return Frac(self, P.p_const(f.numerator, self.nvars),
                    P.p_const(f.denominator, self.nvars))

    def gen(self, i=0, power=1):
        exps = [0] * self.nvars
        if power >= 0:
            exps[i] = power
            return Frac(self, P.p_mono(1, tuple(exps)),
                        P.p_const(1, self.nvars), reduce=False)
        exps[i] = -power
        return Frac(self, P.p_const(1, self.nvars),
                    P.p_mono(1, tuple(exps)), reduce=False)

    def is_zero(self, x):
        return not x.num

    def format_poly(self, pol):
        return format_poly_generic(pol, self.names)


def format_poly_generic(pol, names):
    if not pol:
        return "0"
    parts = []
    for m in sorted(pol, reverse=True):
        c = pol[m]
        factors = []
        for name, e in zip(names, m):
            if e == 1:
                factors.append(name)
            elif e:
                factors.append("%s^%d" % (name, e))
        body = "*".join(factors)
        if not body:
            term = str(abs(c))
        elif abs(c) == 1:
            term = body
        else:
            term = "%d*%s" % (abs(c), body)
        parts.append(("- " if c < 0 else "+ ") + term)
    out = " ".join(parts)
    return out[2:] if out.startswith("+ ") else "-" + out[2:]


class KField(PolyField):
    """Rational functions of a single formal coupling parameter.

    Interned per generator name so elements from independent call sites
    share one ring.
    """

    _intern: dict = {}

    def __new__(cls, name="k"):
        inst = cls._intern.get(name)
        if inst is None:
            inst = super().__new__(cls)
            cls._intern[name] = inst
        return inst

    def __init__(self, name="k"):
        if getattr(self, "_ready", False):
            return
        super().__init__((name,))
        self.k = self.gen(0)
        self._ready = True

    def at(self, value: Fraction):
        """Evaluate a Frac at a rational value of the parameter."""
        def ev(x):
            num = _eval_univar(x.num, value)
            den = _eval_univar(x.den, value)
            if den == 0:
                raise ZeroDivisionError("pole at the requested parameter")
            return num / den
        return ev


def _eval_univar(pol, value: Fraction) -> Fraction:
    out = Fraction(0)
    for m, c in pol.items():
        out += c * value ** m[0]
    return out


class QTField(PolyField):
    """Functions of Q = q^(1/(2n)) and t with exact integer data.

    The exponent granularity 2n turns every power q^x with x in (1/n)Z
    into an integer power of Q.
    """

    _intern: dict = {}

    def __new__(cls, n: int, with_t: bool = True):
        inst = cls._intern.get((n, with_t))
        if inst is None:
            inst = super().__new__(cls)
            cls._intern[(n, with_t)] = inst
        return inst

    def __init__(self, n: int, with_t: bool = True):
        if getattr(self, "_ready", False):
            return
        self.n = n
        self.gran = 2 * n
        super().__init__(("Q", "t") if with_t else ("Q",))
        self.with_t = with_t
        self._ready = True

    def q_pow(self, x) -> Frac:
        """q**x as an element of the field; x may be int or Fraction with
        denominator dividing n (so the Q-exponent 2n*x is integral)."""
        e = Fraction(x) * self.gran
        if e.denominator != 1:
            raise ExactnessError("q-exponent %s is not representable at "
                                 "granularity 1/%d" % (x, self.gran))
        return self.gen(0, int(e))

    def t_pow(self, e: int) -> Frac:
        if not self.with_t:
            raise ExactnessError("field has no t generator")
        return self.gen(1, e)

    def q_int_bracket(self, x) -> Frac:
        """(q^x - q^-x) / (q - q^-1), the symmetric integer x."""
        num = self.q_pow(x) - self.q_pow(-x)
        den = self.q_pow(1) - self.q_pow(-1)
        return num / den

    def spec_t(self, k: int):
        """Substitution map t -> q^k into the t-free field."""
        target = QTField(self.n, with_t=False)

        def sub(x: Frac) -> Frac:
            return Frac(target, _subst_t(x.num, self.gran * k),
                        _subst_t(x.den, self.gran * k))
        return target, sub

    def limit_q1(self, x: Frac) -> Fraction:
        """Limit Q -> 1 of a univariate rational function, via exact
        extraction of (Q - 1) factors."""
        if self.with_t:
            raise ExactnessError("specialize t before taking the q -> 1 "
                                 "limit")
        num, den = x.num, x.den
        while num and P.p_eval_ones(num) == 0 and P.p_eval_ones(den) == 0:
            num = _divexact_qminus1(num)
            den = _divexact_qminus1(den)
        dv = P.p_eval_ones(den)
        if dv == 0:
            raise LimitFailureError("pole at q = 1")
        return Fraction(P.p_eval_ones(num), dv)


def _subst_t(pol, qexp_per_t: int):
    out = {}
    for m, c in pol.items():
        key = (m[0] + qexp_per_t * m[1],)
        out[key] = out.get(key, 0) + c
    return {m: c for m, c in out.items() if c}


def _divexact_qminus1(pol):
    """Exact quotient of a univariate poly by (Q - 1) (synthetic division)."""
    if not pol:
        return {}
    deg = max(m[0] for m in pol)
    coeffs = [0] * (deg + 1)
    for m, c in pol.items():
        coeffs[m[0]] = c
    out = [0] * deg
    carry = 0
    for d in range(deg, 0, -1):
        carry += coeffs[d]
        out[d - 1] = carry
    if carry + coeffs[0] != 0:
        raise ExactnessError("(Q - 1) does not divide the polynomial")
    return {(d,): c for d, c in enumerate(out) if c}


class QQ:
    """Adapter giving fractions.Fraction the domain surface."""

    zero = Fraction(0)
    one = Fraction(1)
    names = ()

    @staticmethod
    def of(x):
        return Fraction(x)

    @staticmethod
    def is_zero(x):
        return x == 0
