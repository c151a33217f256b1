"""Group algebra of the weight lattice with exact coefficients.

A ``LatticePoly`` is a finitely supported map from weights to coefficients.
Coefficients may be plain ``Fraction`` values or elements of one of the
rational-function fields from ``field.py``; the owning domain travels with
the element so mixed arithmetic fails loudly.

The total order used for leading terms (and hence exact division) compares
the pairing with rho first and falls back to lexicographic coordinates;
both parts are translation invariant, which is what division needs.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import DomainError, ExactnessError
from ..rootdata import RootData, Weight, pairing, w_add, w_neg, w_sub
from .field import QQ


class LatticePoly:
    __slots__ = ("rd", "dom", "terms")

    def __init__(self, rd: RootData, dom, terms=None):
        self.rd = rd
        self.dom = dom
        self.terms = terms if terms is not None else {}

    # -- constructors

    @classmethod
    def zero(cls, rd, dom):
        return cls(rd, dom, {})

    @classmethod
    def one(cls, rd, dom):
        return cls(rd, dom, {rd.zero: dom.one})

    @classmethod
    def exp(cls, rd, dom, lam: Weight, coeff=None):
        c = dom.one if coeff is None else coeff
        return cls(rd, dom, {lam: c} if c else {})

    def copy(self):
        return LatticePoly(self.rd, self.dom, dict(self.terms))

    # -- basic ring ops

    def _check(self, other):
        if self.rd is not other.rd or self.dom is not other.dom:
            raise DomainError("mixed lattice algebras")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w, self.dom.zero) + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return LatticePoly(self.rd, self.dom, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return LatticePoly(self.rd, self.dom,
                           {w: -c for w, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, LatticePoly):
            return self.scale(other)
        self._check(other)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out = {}
        zero = self.dom.zero
        for wa, ca in a.items():
            for wb, cb in b.items():
                w = w_add(wa, wb)
                s = out.get(w, zero) + ca * cb
                if s:
                    out[w] = s
                else:
                    del out[w]
        return LatticePoly(self.rd, self.dom, out)

    __rmul__ = __mul__

    def scale(self, c):
        if isinstance(c, (int, Fraction)):
            c = self.dom.of(c)
        if not c:
            return LatticePoly(self.rd, self.dom, {})
        return LatticePoly(self.rd, self.dom,
                           {w: k * c for w, k in self.terms.items()})

    def shift(self, lam: Weight):
        """Multiply by the single exponential of lam."""
        return LatticePoly(self.rd, self.dom,
                           {w_add(w, lam): c for w, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, LatticePoly):
            return NotImplemented
        return self.rd is other.rd and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        items = sorted(self.terms, key=_order_key(self.rd), reverse=True)
        return "LatticePoly{%s}" % ", ".join(
            "%r: %r" % (w, self.terms[w]) for w in items[:8])

    # -- structure maps

    def bar(self):
        """Exponent negation e^w -> e^(-w); coefficients untouched."""
        return LatticePoly(self.rd, self.dom,
                           {w_neg(w): c for w, c in self.terms.items()})

    def constant_term(self):
        return self.terms.get(self.rd.zero, self.dom.zero)

    def coeff(self, lam: Weight):
        return self.terms.get(lam, self.dom.zero)

    def reflect_simple(self, i: int):
        return LatticePoly(self.rd, self.dom,
                           {self.rd.reflect_simple(i, w): c
                            for w, c in self.terms.items()})

    def is_symmetric(self) -> bool:
        return all(self.reflect_simple(i) == self
                   for i in range(self.rd.rank))

    def laplace(self):
        """Exponent-quadratic multiplier: e^w -> (w, w) e^w."""
        out = {}
        for w, c in self.terms.items():
            s = c * pairing(w, w)
            if s:
                out[w] = s
        return LatticePoly(self.rd, self.dom, out)

    def directional(self, a: Weight):
        """Derivative along a: e^w -> (a, w) e^w."""
        out = {}
        for w, c in self.terms.items():
            s = c * pairing(a, w)
            if s:
                out[w] = s
        return LatticePoly(self.rd, self.dom, out)

    def support_sorted(self):
        return sorted(self.terms, key=_order_key(self.rd))

    # -- division ------------------------------------------------------------

    def divexact(self, d: "LatticePoly") -> "LatticePoly":
        """Exact quotient in the group algebra; raises when a remainder
        survives (which in this package always signals a bug)."""
        self._check(d)
        if not d.terms:
            raise ZeroDivisionError("division by the zero element")
        key = _order_key(self.rd)
        dlead = max(d.terms, key=key)
        dlc = d.terms[dlead]
        rem = dict(self.terms)
        out = {}
        max_steps = 64 * (len(self.terms) + len(d.terms) + 4) ** 2
        steps = 0
        while rem:
            steps += 1
            if steps > max_steps:
                raise ExactnessError("lattice division does not terminate; "
                                     "dividend is not a multiple")
            rlead = max(rem, key=key)
            qw = w_sub(rlead, dlead)
            qc = rem[rlead] / dlc
            out[qw] = qc
            for w, c in d.terms.items():
                nw = w_add(w, qw)
                s = rem.get(nw, self.dom.zero) - qc * c
                if s:
                    rem[nw] = s
                else:
                    rem.pop(nw, None)
        return LatticePoly(self.rd, self.dom, out)


def _order_key(rd):
    rho = rd.rho
    return lambda w: (pairing(w, rho), w)


# -- distinguished elements ---------------------------------------------------


def orbitsum(rd: RootData, lam: Weight, dom=QQ) -> LatticePoly:
    """Sum of exponentials over the Weyl orbit of a dominant weight."""
    if not rd.is_dominant(lam):
        raise DomainError("orbit sums are indexed by dominant weights")
    return LatticePoly(rd, dom, {w: dom.one for w in rd.weyl_orbit(lam)})


def weyl_denominator(rd: RootData, dom=QQ) -> LatticePoly:
    """e^rho * prod over positive roots of (1 - e^(-alpha)), expanded."""
    out = LatticePoly.one(rd, dom)
    for alpha in rd.positive_roots:
        out = out * LatticePoly(rd, dom, {rd.zero: dom.one,
                                          w_neg(alpha): -dom.one})
    return out.shift(rd.rho)


def alternating_sum(rd: RootData, lam: Weight, dom=QQ) -> LatticePoly:
    """Signed orbit sum of exponentials of lam over the Weyl group."""
    out = {}
    for w, sign in rd.weyl_orbit_signed(lam):
        c = out.get(w, dom.zero) + (dom.one if sign > 0 else -dom.one)
        if c:
            out[w] = c
        else:
            out.pop(w, None)
    return LatticePoly(rd, dom, out)


def weyl_character(rd: RootData, lam: Weight, dom=QQ) -> LatticePoly:
    """Character of the irreducible with highest weight lam, computed by
    exact division of the shifted alternating sum by the denominator."""
    if not rd.is_dominant(lam):
        raise DomainError("characters are indexed by dominant weights")
    if not rd.in_weight_lattice(lam):
        raise DomainError("weight is not in the lattice")
    num = alternating_sum(rd, w_add(lam, rd.rho), dom).shift(w_neg(rd.rho))
    den = weyl_denominator(rd, dom).shift(w_neg(rd.rho))
    ch = num.divexact(den)
    if ch.coeff(lam) != dom.one:
        raise ExactnessError("character normalization failed")
    return ch


def constant_term(f: LatticePoly):
    return f.constant_term()


def bar(f: LatticePoly) -> LatticePoly:
    return f.bar()


def evaluate_at_qpower(f: LatticePoly, nu: Weight, field):
    """Substitute every exponential e^mu by q^(2 (mu, nu)) in the given
    q-power field; coefficients are carried over."""
    out = field.of(0)
    for w, c in f.terms.items():
        qp = field.q_pow(2 * pairing(w, nu))
        if isinstance(c, (int, Fraction)):
            c = field.of(c)
        out = out + c * qp
    return out


def qdim(rd: RootData, lam: Weight, field) -> object:
    """Quantum dimension: product over positive roots of
    [ (alpha, lam + rho) ] / [ (alpha, rho) ] with symmetric brackets."""
    if not rd.is_dominant(lam):
        raise DomainError("q-dimension needs a dominant weight")
    out = field.one
    lr = w_add(lam, rd.rho)
    for alpha in rd.positive_roots:
        out = out * field.q_int_bracket(pairing(alpha, lr))
        out = out / field.q_int_bracket(pairing(alpha, rd.rho))
    return out
