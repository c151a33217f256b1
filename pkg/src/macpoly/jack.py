"""Jack (Heckman-Opdam Jacobi) polynomials of type A.

The second-order operator acts on Weyl-invariant lattice polynomials with
coupling k, either formal (coefficients in Q(k)) or a specific rational.
Each positive-root term collapses on reflection-paired orbits into a
finite string, so no denominator expansion ever happens:

    pair {mu, s_a mu} with c = (mu, a) > 0 and shared coefficient x
    contributes  2k * x * c * (e^(mu - a) + ... + e^(mu - c a))
    to the root term of the operator.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra.field import KField, QQ
from .algebra.lattice import LatticePoly, orbitsum, weyl_denominator
from .errors import (DegenerateSpectrumError, DomainError, ExactnessError,
                     LimitFailureError)
from .macdonald import MacdonaldContext, check_partition, macdonald_poly
from .rootdata import RootData, Weight, from_partition, pairing, w_add, \
    w_scale, w_sub


class JackContext:
    """Rank + coupling mode.  k None means the formal coupling field."""

    def __init__(self, n: int, k=None):
        self.rd = RootData(n)
        self.n = n
        if k is None:
            self.kfield = KField()
            self.dom = self.kfield
            self.kval = self.kfield.k
        else:
            self.kfield = None
            self.dom = QQ
            self.kval = Fraction(k)
        self._poly_cache = {}

    def describe_mode(self):
        return "formal" if self.kfield is not None else str(self.kval)


def _string_contributions(rd: RootData, f: LatticePoly, scale):
    """Root-term of the operator on a Weyl-invariant input via string
    collapse; `scale` is 2k in the ambient domain."""
    out = LatticePoly.zero(f.rd, f.dom)
    acc = {}
    for alpha in rd.positive_roots:
        for w, coeff in f.terms.items():
            c = pairing(w, alpha)  # (alpha, alpha) = 2, so this is <w, a^v>
            if c <= 0:
                continue
            step = coeff * c
            for j in range(1, int(c) + 1):
                nw = w_sub(w, w_scale(j, alpha))
                s = acc.get(nw, f.dom.zero) + step
                if s:
                    acc[nw] = s
                else:
                    acc.pop(nw, None)
    out = LatticePoly(f.rd, f.dom, acc)
    return out.scale(scale)


def sutherland_apply(ctx: JackContext, f: LatticePoly) -> LatticePoly:
    """Second-order coupling-k operator on a Weyl-invariant element:
    exponent Laplacian, minus the positive-root string terms, plus the
    rho-directional derivative, all exact."""
    if not f.is_symmetric():
        raise DomainError("operator input must be Weyl invariant")
    rd = ctx.rd
    two_k = ctx.dom.of(2) * ctx.kval
    lap = f.laplace()
    strings = _string_contributions(rd, f, two_k)
    drho = f.directional(rd.rho).scale(two_k)
    return lap + strings + drho


def jack_eigenvalue(ctx: JackContext, lam: Weight):
    """(lam, lam + 2 k rho)."""
    base = pairing(lam, lam)
    lin = 2 * pairing(lam, ctx.rd.rho)
    return ctx.dom.of(base) + ctx.dom.of(lin) * ctx.kval


class JacobiElement:
    """Unit-unitriangular expansion over orbit sums."""

    def __init__(self, ctx: JackContext, lam: Weight, coeffs: dict):
        self.ctx = ctx
        self.lam = lam
        self.coeffs = coeffs  # dominant Weight -> coefficient

    def as_lattice(self) -> LatticePoly:
        out = LatticePoly.zero(self.ctx.rd, self.ctx.dom)
        for mu, c in self.coeffs.items():
            out = out + orbitsum(self.ctx.rd, mu, self.ctx.dom).scale(c)
        return out

    def coeff(self, mu: Weight):
        return self.coeffs.get(mu, self.ctx.dom.zero)


def jacobi_poly(ctx: JackContext, lam: Weight) -> JacobiElement:
    """Triangular eigen-solve over orbit sums dominated by lam."""
    rd = ctx.rd
    if not rd.is_dominant(lam) or not rd.in_weight_lattice(lam):
        raise DomainError("highest weight must be dominant and integral")
    cached = ctx._poly_cache.get(lam)
    if cached is not None:
        return cached
    basis = rd.dominant_below(lam)
    index = set(basis)
    rows = {}
    for mu in basis:
        img = sutherland_apply(ctx, orbitsum(rd, mu, ctx.dom))
        row = _expand_orbitsums(rd, img, ctx.dom)
        if any(nu not in index for nu in row):
            raise ExactnessError("operator broke dominance triangularity")
        diag = jack_eigenvalue(ctx, mu)
        if row.get(mu, ctx.dom.zero) != diag:
            raise ExactnessError("diagonal eigenvalue mismatch")
        rows[mu] = row
    top = jack_eigenvalue(ctx, lam)
    coeffs = {lam: ctx.dom.one}
    for mu in basis[1:]:
        acc = ctx.dom.zero
        for nu, cnu in coeffs.items():
            acc = acc + cnu * rows[nu].get(mu, ctx.dom.zero)
        gap = top - jack_eigenvalue(ctx, mu)
        if not gap:
            raise DegenerateSpectrumError(
                "eigenvalue collision between %r and %r at k=%s"
                % (lam, mu, ctx.describe_mode()), colliding=mu)
        c = acc / gap
        if c:
            coeffs[mu] = c
    elem = JacobiElement(ctx, lam, coeffs)
    ctx._poly_cache[lam] = elem
    return elem


def _expand_orbitsums(rd: RootData, f: LatticePoly, dom) -> dict:
    out = {}
    rem = dict(f.terms)
    while rem:
        lead = max(rem, key=lambda w: (pairing(w, rd.rho), w))
        dom_rep = rd.dominant_representative(lead)
        if dom_rep not in rem:
            raise ExactnessError("element is not Weyl invariant")
        c = rem[dom_rep]
        out[dom_rep] = c
        for w in rd.weyl_orbit(dom_rep):
            s = rem.get(w, dom.zero) - c
            if s:
                rem[w] = s
            else:
                rem.pop(w, None)
    return out


def specialize(elem: JacobiElement, kv) -> JacobiElement:
    """Substitute a rational coupling into a formal-k element."""
    ctx = elem.ctx
    if ctx.kfield is None:
        raise DomainError("element already has a specialized coupling")
    kv = Fraction(kv)
    ev = ctx.kfield.at(kv)
    tgt = JackContext(ctx.n, kv)
    coeffs = {}
    for mu, c in elem.coeffs.items():
        v = ev(c)
        if v:
            coeffs[mu] = v
    return JacobiElement(tgt, elem.lam, coeffs)


def classical_inner_product(ctx: JackContext, f: LatticePoly,
                            g: LatticePoly, k: int) -> Fraction:
    """(1/|W|) * constant term of f bar(g) (delta bar(delta))^k, with the
    classical (q = 1) denominator."""
    if k < 0 or int(k) != k:
        raise DomainError("classical inner products need integer k >= 0")
    rd = ctx.rd
    delta = weyl_denominator(rd, QQ)
    kern = LatticePoly.one(rd, QQ)
    dd = delta * delta.bar()
    for _ in range(int(k)):
        kern = kern * dd
    ct = (f * g.bar() * kern).constant_term()
    order = 1
    for i in range(2, ctx.n + 1):
        order *= i
    return ct * Fraction(1, order)


def conjugated_form_apply(ctx: JackContext, f: LatticePoly, k: int) \
        -> tuple:
    """Both sides of the conjugation identity between the plain and the
    denominator-conjugated operator, as lattice elements:

        left  = (Laplacian - k(k-1) sum_a 2/(e^(a/2)-e^(-a/2))^2
                 - k^2 (rho, rho)) (delta^k f)
        right = delta^k * (second-order operator applied to f)

    Only valid for k >= 2, where each potential term keeps the left side
    polynomial; the division by (e^a - 2 + e^(-a)) is exact."""
    if k < 2:
        raise DomainError("conjugation identity check needs k >= 2")
    rd = ctx.rd
    delta = weyl_denominator(rd, QQ)
    dk = LatticePoly.one(rd, QQ)
    for _ in range(k):
        dk = dk * delta
    target = dk * f
    lap = target.laplace()
    pot = LatticePoly.zero(rd, QQ)
    for alpha in rd.positive_roots:
        sq = LatticePoly(rd, QQ, {alpha: QQ.one, rd.zero: QQ.of(-2),
                                  w_scale(-1, alpha): QQ.one})
        pot = pot + target.divexact(sq).scale(2)
    kk = Fraction(k)
    left = lap - pot.scale(kk * (kk - 1)) \
        - target.scale(kk * kk * pairing(rd.rho, rd.rho))
    right = dk * sutherland_apply(JackContext(ctx.n, kk), f)
    return left, right


def first_form_apply(ctx: JackContext, f: LatticePoly) -> LatticePoly:
    """The alternative display of the operator, using coth-type kernels
    (1+e^a)/(1-e^a) per positive root; implemented by the same pairing
    collapse and exposed for cross-checking against sutherland_apply."""
    if not f.is_symmetric():
        raise DomainError("operator input must be Weyl invariant")
    rd = ctx.rd
    acc = {}
    for alpha in rd.positive_roots:
        for w, coeff in f.terms.items():
            c = pairing(w, alpha)
            if c <= 0:
                continue
            # (1+e^a)/(1-e^a) d_a on the pair collapses to
            # -c (e^(w - c a) + e^w + 2 sum_(0<j<c) e^(w - j a))
            contrib = [(w, 1), (w_sub(w, w_scale(int(c), alpha)), 1)]
            for j in range(1, int(c)):
                contrib.append((w_sub(w, w_scale(j, alpha)), 2))
            for nw, mult in contrib:
                s = acc.get(nw, f.dom.zero) - coeff * c * mult
                if s:
                    acc[nw] = s
                else:
                    acc.pop(nw, None)
    root_term = LatticePoly(f.rd, f.dom, acc).scale(-ctx.kval)
    return f.laplace() + root_term


# --- bridge from the q-world -------------------------------------------------

def macdonald_to_jack_limit(n: int, lam, k: int) -> JacobiElement:
    """q -> 1 limit, coefficient by coefficient, of the t = q^k Macdonald
    polynomial; asserts equality with the directly solved element."""
    if k < 0 or int(k) != k:
        raise DomainError("the degeneration bridge needs integer k >= 0")
    lam = check_partition(lam, n)
    mctx = MacdonaldContext(n, int(k))
    p = macdonald_poly(mctx, lam)
    jctx = JackContext(n, Fraction(k))
    coeffs = {}
    for mu, c in p.coeffs.items():
        try:
            v = mctx.field.limit_q1(c)
        except LimitFailureError:
            raise LimitFailureError(
                "coefficient at %r has a pole at q=1" % (mu,))
        if v:
            coeffs[from_partition(mu, n)] = v
    elem = JacobiElement(jctx, from_partition(lam, n), coeffs)
    direct = jacobi_poly(jctx, from_partition(lam, n))
    if elem.coeffs != direct.coeffs:
        raise ExactnessError("degeneration limit disagrees with the "
                             "direct eigen-solve at k=%s" % k)
    return elem
