"""Truncated-series engine for the affine weight lattice.

A level-K series is stored as layers indexed by the power of p = e^(-delta):
``layers[d]`` is a finite lattice polynomial, the whole object meaning

    p^offset * sum_d p^d * layers[d] * e^(K Lambda_0).

``n_trunc`` records through which p-order the layers are complete;
arithmetic never claims more than its inputs support.

The affine second-order operator acts layer by layer.  Real-root terms
collapse on reflection pairs exactly as in the finite case; for a root
alpha + m delta with m >= 1 the mirror of a stored term sits strictly
deeper, so iterating over stored terms with positive pairing covers every
pair that can land under the truncation, the mirror coefficient being
supplied implicitly by invariance.  Imaginary roots only multiply by a
scalar power series in p.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import product as iter_product

from .algebra.field import KField, QQ
from .algebra.lattice import LatticePoly, alternating_sum, weyl_denominator
from .errors import (CriticalShiftError, DegenerateSpectrumError,
                     DomainError, ExactnessError)
from .rootdata import (RootData, Weight, level_dominants, pairing, w_add,
                       w_neg, w_scale, w_sub)


class AffineSeries:
    __slots__ = ("rd", "dom", "level", "n_trunc", "offset", "layers")

    def __init__(self, rd: RootData, dom, level: int, n_trunc: int,
                 layers=None, offset=Fraction(0)):
        self.rd = rd
        self.dom = dom
        self.level = level
        self.n_trunc = n_trunc
        self.offset = Fraction(offset)
        self.layers = {} if layers is None else layers
        for d in list(self.layers):
            if not self.layers[d]:
                del self.layers[d]

    # -- helpers

    def d_min(self) -> int:
        return min(self.layers) if self.layers else 0

    def layer(self, d: int) -> LatticePoly:
        got = self.layers.get(d)
        return got if got is not None else LatticePoly.zero(self.rd, self.dom)

    def copy(self) -> "AffineSeries":
        return AffineSeries(self.rd, self.dom, self.level, self.n_trunc,
                            {d: f.copy() for d, f in self.layers.items()},
                            self.offset)

    def truncate(self, n: int) -> "AffineSeries":
        return AffineSeries(self.rd, self.dom, self.level,
                            min(n, self.n_trunc),
                            {d: f for d, f in self.layers.items() if d <= n},
                            self.offset)

    def _compat(self, other: "AffineSeries"):
        if self.rd is not other.rd or self.dom is not other.dom:
            raise DomainError("mixed affine algebras")

    def __add__(self, other: "AffineSeries") -> "AffineSeries":
        self._compat(other)
        if self.level != other.level or self.offset != other.offset:
            raise DomainError("sum needs matching level and delta offset")
        n = min(self.n_trunc, other.n_trunc)
        out = {}
        for d in set(self.layers) | set(other.layers):
            if d > n:
                continue
            s = self.layer(d) + other.layer(d)
            if s:
                out[d] = s
        return AffineSeries(self.rd, self.dom, self.level, n, out,
                            self.offset)

    def __neg__(self):
        return AffineSeries(self.rd, self.dom, self.level, self.n_trunc,
                            {d: -f for d, f in self.layers.items()},
                            self.offset)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "AffineSeries") -> "AffineSeries":
        self._compat(other)
        n = min(self.n_trunc + other.d_min(), other.n_trunc + self.d_min())
        out = {}
        for da, fa in self.layers.items():
            for db, fb in other.layers.items():
                d = da + db
                if d > n:
                    continue
                prod = fa * fb
                if d in out:
                    out[d] = out[d] + prod
                else:
                    out[d] = prod
        return AffineSeries(self.rd, self.dom, self.level + other.level, n,
                            {d: f for d, f in out.items() if f},
                            self.offset + other.offset)

    def scale(self, c) -> "AffineSeries":
        return AffineSeries(self.rd, self.dom, self.level, self.n_trunc,
                            {d: f.scale(c) for d, f in self.layers.items()},
                            self.offset)

    def shift_p(self, j: int) -> "AffineSeries":
        """Multiply by p^j (an exact integer delta shift)."""
        return AffineSeries(self.rd, self.dom, self.level, self.n_trunc + j,
                            {d + j: f for d, f in self.layers.items()},
                            self.offset)

    def with_offset(self, off) -> "AffineSeries":
        return AffineSeries(self.rd, self.dom, self.level, self.n_trunc,
                            dict(self.layers), self.offset + Fraction(off))

    def equal_through(self, other: "AffineSeries", n: int) -> bool:
        self._compat(other)
        if self.level != other.level or self.offset != other.offset:
            return False
        if self.n_trunc < n or other.n_trunc < n:
            raise DomainError("comparison beyond stored truncation")
        for d in set(self.layers) | set(other.layers):
            if d <= n and self.layer(d) != other.layer(d):
                return False
        return True

    def is_zero_through(self, n: int) -> bool:
        return all(d > n or not f for d, f in self.layers.items())

    def coeff(self, finite: Weight, d: int):
        return self.layer(d).coeff(finite)

    def __repr__(self):
        return "AffineSeries(level=%d, offset=%s, N=%d, layers=%s)" % (
            self.level, self.offset, self.n_trunc,
            {d: len(f.terms) for d, f in sorted(self.layers.items())})


def zero_series(rd, dom, level, n) -> AffineSeries:
    return AffineSeries(rd, dom, level, n, {})


def scalar_series(rd, dom, coeffs: dict, n: int) -> AffineSeries:
    """Level-zero series supported on the zero weight only."""
    layers = {}
    for j, c in coeffs.items():
        if c and j <= n:
            layers[j] = LatticePoly(rd, dom, {rd.zero: c})
    return AffineSeries(rd, dom, 0, n, layers)


# -- orbit machinery ----------------------------------------------------------

def translation_depth(rd: RootData, lam: Weight, level: int,
                      beta: Weight) -> Fraction:
    """p-degree picked up by the lattice translation by beta at this
    level: (lam, beta) + level * (beta, beta) / 2."""
    return pairing(lam, beta) + Fraction(level) * pairing(beta, beta) / 2


def _coroot_box(rd: RootData, lam: Weight, level: int, n: int):
    """All coroot-lattice vectors whose translation keeps p-degree <= n,
    as (beta, depth) pairs.  Depth grows like (level/2)|beta|^2, so a
    Euclidean ball search is complete."""
    lmax = max((abs(c) for c in lam), default=Fraction(0))
    ln = float(lmax) * math.sqrt(rd.n)
    radius = (ln + math.sqrt(ln * ln + 2.0 * level * max(n, 0))) / level
    bound = int(radius) + 2
    rng = range(-bound, bound + 1)
    out = []
    for head in iter_product(rng, repeat=rd.n - 1):
        tail = -sum(head)
        if abs(tail) > bound:
            continue
        beta = tuple(Fraction(c) for c in head) + (Fraction(tail),)
        d = translation_depth(rd, lam, level, beta)
        if d <= n:
            if d < 0 or d.denominator != 1:
                raise ExactnessError("translation depth %s is not a "
                                     "nonnegative integer" % d)
            out.append((beta, int(d)))
    return out


def check_level_dominant(rd: RootData, lam: Weight, level: int):
    if level <= 0:
        raise DomainError("series need positive level")
    if not rd.is_dominant(lam) or not rd.in_weight_lattice(lam):
        raise DomainError("base weight must be dominant and integral")
    if pairing(lam, rd.highest_root) > level:
        raise DomainError("weight lies outside the level-%d alcove" % level)


def affine_orbitsum(rd: RootData, lam: Weight, level: int, n: int,
                    dom=QQ) -> AffineSeries:
    """Orbit sum of lam + level * Lambda_0 under the affine Weyl group,
    truncated at p-order n."""
    check_level_dominant(rd, lam, level)
    points = set()
    for beta, d in _coroot_box(rd, lam, level, n):
        fin = w_add(lam, w_scale(level, beta))
        for w in rd.weyl_orbit(fin):
            points.add((w, d))
    layers: dict[int, dict] = {}
    for w, d in points:
        layers.setdefault(d, {})[w] = dom.one
    return AffineSeries(rd, dom, level, n,
                        {d: LatticePoly(rd, dom, terms)
                         for d, terms in layers.items()})


def affine_denominator(rd: RootData, n: int, dom=QQ) -> AffineSeries:
    """e^(affine rho) * prod over positive affine roots of (1 - e^-root);
    the m-th imaginary layer contributes (1 - p^m)^rank and each real
    root alpha + m delta contributes (1 - p^m e^-alpha)."""
    if n < 0:
        raise DomainError("truncation order must be nonnegative")
    base = AffineSeries(rd, dom, rd.dual_coxeter, n,
                        {0: weyl_denominator(rd, dom)})
    one = LatticePoly.one(rd, dom)
    for m in range(1, n + 1):
        for _ in range(rd.rank):
            base = base * AffineSeries(rd, dom, 0, n, {
                0: one, m: LatticePoly(rd, dom, {rd.zero: -dom.one})})
        for alpha in rd.positive_roots:
            for root in (alpha, w_neg(alpha)):
                base = base * AffineSeries(rd, dom, 0, n, {
                    0: one, m: LatticePoly(rd, dom, {root: -dom.one})})
    return base


def normalized_denominator(rd: RootData, n: int, dom=QQ) -> AffineSeries:
    """Denominator carrying the global p^((rho,rho)/(2h)) prefactor that
    makes it flat for the affine Laplacian."""
    off = pairing(rd.rho, rd.rho) / (2 * rd.dual_coxeter)
    return affine_denominator(rd, n, dom).with_offset(off)


def aff_laplace(f: AffineSeries) -> AffineSeries:
    """Exponent-quadratic multiplier, offset included:
    e^(w + a delta + K Lambda_0) -> ((w, w) + 2 a K) e^(same)."""
    out = {}
    for d, lay in f.layers.items():
        a = -(Fraction(d) + f.offset)
        terms = {}
        for w, c in lay.terms.items():
            s = c * (pairing(w, w) + 2 * a * f.level)
            if s:
                terms[w] = s
        if terms:
            out[d] = LatticePoly(f.rd, f.dom, terms)
    return AffineSeries(f.rd, f.dom, f.level, f.n_trunc, out, f.offset)


def check_invariance_samples(f: AffineSeries, limit: int = 60) -> None:
    """Orbit-consistency spot check on stored terms: finite reflections
    stay inside a layer and must carry equal coefficients."""
    rd = f.rd
    count = 0
    for d in sorted(f.layers):
        lay = f.layers[d]
        for w, c in lay.terms.items():
            for i in range(rd.rank):
                if lay.coeff(rd.reflect_simple(i, w)) != c:
                    raise DomainError("series is not Weyl invariant at "
                                      "layer %d" % d)
            count += 1
            if count >= limit:
                return


def mhat_apply(f: AffineSeries, k, n: int | None = None) -> AffineSeries:
    """Second-order affine operator with coupling k on an invariant
    level-K series.

    Per stored exponential e^w at layer d (delta coefficient -d):
      * quadratic part     (w, w) - 2 d K
      * rho-hat derivative 2k ((rho, w) - d h)
      * string collapse    +2k c sum_j e^(w - j root) for every affine
        real root with c = (w + level part, root) > 0
      * imaginary roots    multiplication by
                           2 k K r sum_j sigma_1(j) p^j.
    """
    if f.offset != 0:
        raise DomainError("operator expects an offset-free series")
    if n is None:
        n = f.n_trunc
    if n > f.n_trunc:
        raise DomainError("cannot exceed the stored truncation")
    check_invariance_samples(f)
    rd, dom, level = f.rd, f.dom, f.level
    hv = rd.dual_coxeter
    two_k = dom.of(2) * k
    acc: dict[int, dict] = {}

    def bump(d, w, val):
        lay = acc.setdefault(d, {})
        s = lay.get(w, dom.zero) + val
        if s:
            lay[w] = s
        else:
            lay.pop(w, None)

    for d, lay in f.layers.items():
        if d > n:
            continue
        for w, c in lay.terms.items():
            quad = pairing(w, w) - 2 * d * level
            lin = pairing(rd.rho, w) - d * hv
            bump(d, w, c * quad + two_k * dom.of(lin) * c)
            for alpha in rd.positive_roots:
                c0 = pairing(w, alpha)
                if c0 > 0:
                    step = two_k * dom.of(c0) * c
                    for j in range(1, int(c0) + 1):
                        bump(d, w_sub(w, w_scale(j, alpha)), step)
                for m in range(1, n - d + 1):
                    for root in (alpha, w_neg(alpha)):
                        cm = pairing(w, root) + m * level
                        if cm <= 0:
                            continue
                        jmax = min(int(cm), (n - d) // m)
                        if jmax < 1:
                            continue
                        step = two_k * dom.of(cm) * c
                        for j in range(1, jmax + 1):
                            bump(d + j * m, w_sub(w, w_scale(j, root)),
                                 step)
    out = AffineSeries(rd, dom, level, n,
                       {d: LatticePoly(rd, dom, terms)
                        for d, terms in acc.items() if terms})
    sig: dict[int, int] = {}
    for m in range(1, n + 1):
        for mult in range(m, n + 1, m):
            sig[mult] = sig.get(mult, 0) + m
    series = {j: two_k * dom.of(level * rd.rank * s)
              for j, s in sig.items()}
    if series:
        out = out + f.truncate(n) * scalar_series(rd, dom, series, n)
    return out


# -- eigen machinery -----------------------------------------------------------

def _expand_over_orbitsums(g: AffineSeries, basis_orbits: dict,
                           n: int) -> dict:
    """Write an invariant series over {p^e orbitsum(nu)}: {(nu, e): c}."""
    rd = g.rd
    rem = g.copy()
    out = {}
    for e in range(0, n + 1):
        while True:
            lay = rem.layer(e)
            doms = [w for w in lay.terms if rd.is_dominant(w)]
            if not doms:
                break
            nu = max(doms, key=lambda w: (pairing(w, rd.rho), w))
            c = lay.terms[nu]
            if nu not in basis_orbits:
                raise ExactnessError("dominant weight %r missing from the "
                                     "level basis" % (nu,))
            out[(nu, e)] = c
            rem = rem - basis_orbits[nu].truncate(n - e).shift_p(e).scale(c)
    if not rem.is_zero_through(n):
        raise ExactnessError("series failed to close over level orbitsums")
    return out


class AffineJacobiElement:
    """Triangular eigenvector of the affine operator, stored both as a
    truncated series and as coefficients over {p^e orbitsum(nu)}."""

    def __init__(self, rd, dom, lam, level, k, n, series, coeffs,
                 delta_shift=0):
        self.rd = rd
        self.dom = dom
        self.lam = lam
        self.level = level
        self.k = k
        self.n_trunc = n
        self.series = series
        self.coeffs = coeffs
        self.delta_shift = delta_shift

    def eigenvalue(self):
        base = pairing(self.lam, self.lam)
        lin = 2 * pairing(self.lam, self.rd.rho)
        return self.dom.of(base) + self.dom.of(lin) * self.k


def affine_eigengap(rd, dom, lam, level, k, nu, depth: int):
    """Exact eigenvalue gap between the top label and (nu, depth):
    (lam,lam) - (nu,nu) + 2 depth level + 2k((lam-nu, rho) + depth h)."""
    const = pairing(lam, lam) - pairing(nu, nu) + 2 * depth * level
    lin = 2 * (pairing(w_sub(lam, nu), rd.rho) + depth * rd.dual_coxeter)
    return dom.of(const) + dom.of(lin) * k


def affine_jacobi(rd: RootData, lam: Weight, level: int, k,
                  n: int) -> AffineJacobiElement:
    """Affine Jacobi polynomial by order-by-order triangular solve.

    k is a Fraction-like rational coupling, or None for the formal
    coupling field.  The eigenvalue gap at every solved label is checked
    exactly and a collision raises instead of silently dividing.
    """
    check_level_dominant(rd, lam, level)
    if k is None:
        dom = KField()
        kval = dom.k
    else:
        dom = QQ
        kval = Fraction(k)
        if level + kval * rd.dual_coxeter == 0:
            raise CriticalShiftError("level + k*h = 0: layer solve "
                                     "degenerates")
    coset = [mu for mu in level_dominants(rd, level)
             if rd.in_root_lattice(w_sub(lam, mu))]
    orbits = {mu: affine_orbitsum(rd, mu, level, n, dom) for mu in coset}
    action = {}
    for mu in coset:
        g = mhat_apply(orbits[mu], kval, n)
        expanded = _expand_over_orbitsums(g, orbits, n)
        diag = expanded.get((mu, 0), dom.zero)
        expect = dom.of(pairing(mu, mu)) \
            + dom.of(2 * pairing(mu, rd.rho)) * kval
        if diag != expect:
            raise ExactnessError("operator diagonal disagrees with the "
                                 "closed-form eigenvalue at %r" % (mu,))
        action[mu] = expanded

    coeffs: dict = {(lam, 0): dom.one}
    order = sorted(coset, key=lambda w: (-pairing(w, rd.rho), w))
    for depth in range(0, n + 1):
        for nu in order:
            if (nu, depth) in coeffs:
                continue
            acc = dom.zero
            for (mu, dsrc), c in coeffs.items():
                g = action[mu].get((nu, depth - dsrc))
                if g is not None:
                    acc = acc + c * g
            gap = affine_eigengap(rd, dom, lam, level, kval, nu, depth)
            if not gap:
                raise DegenerateSpectrumError(
                    "affine eigenvalue collision with %r at depth %d"
                    % (nu, depth), colliding=(nu, depth))
            c = acc / gap
            if c:
                coeffs[(nu, depth)] = c
    acc_layers: dict[int, LatticePoly] = {}
    for (nu, e), c in coeffs.items():
        piece = orbits[nu].truncate(n - e).shift_p(e).scale(c)
        for d, f in piece.layers.items():
            if d in acc_layers:
                acc_layers[d] = acc_layers[d] + f
            else:
                acc_layers[d] = f
    series = AffineSeries(rd, dom, level, n,
                          {d: f for d, f in acc_layers.items() if f})
    return AffineJacobiElement(rd, dom, lam, level, kval, n, series, coeffs)


def affine_jacobi_shifted(rd, lam, level, k, n,
                          delta_shift: int) -> AffineJacobiElement:
    """Covariance under delta shifts: the eigenvector labelled by
    lam + s*delta is p^(-s) times the base one."""
    base = affine_jacobi(rd, lam, level, k, n)
    shifted = base.series.shift_p(-delta_shift)
    return AffineJacobiElement(rd, base.dom, lam, level, base.k,
                               base.n_trunc, shifted, base.coeffs,
                               delta_shift)


def eigen_residual(elem: AffineJacobiElement) -> AffineSeries:
    """Operator applied to the solved series minus eigenvalue times it;
    exactly zero through the truncation when everything is right."""
    img = mhat_apply(elem.series, elem.k, elem.n_trunc)
    return img - elem.series.scale(elem.eigenvalue())


# -- independent character oracle ---------------------------------------------

def weyl_kac_character(rd: RootData, lam: Weight, level: int, n: int,
                       dom=QQ) -> AffineSeries:
    """Integrable-module character: alternating sum over the translated
    shifted weight, divided layer by layer by the affine denominator.
    Fully independent of the eigen machinery (its oracle at coupling 1)."""
    check_level_dominant(rd, lam, level)
    shifted_level = level + rd.dual_coxeter
    base = w_add(lam, rd.rho)
    num_layers: dict[int, LatticePoly] = {}
    for beta, d in _coroot_box(rd, base, shifted_level, n):
        nu = w_add(base, w_scale(shifted_level, beta))
        contrib = alternating_sum(rd, nu, dom).shift(w_neg(rd.rho))
        if d in num_layers:
            num_layers[d] = num_layers[d] + contrib
        else:
            num_layers[d] = contrib
    den = affine_denominator(rd, n, dom)
    den_layers = {d: f.shift(w_neg(rd.rho)) for d, f in den.layers.items()}
    d0 = den_layers[0]
    out: dict[int, LatticePoly] = {}
    for d in range(0, n + 1):
        acc = num_layers.get(d, LatticePoly.zero(rd, dom))
        for e in range(0, d):
            if e in out and (d - e) in den_layers:
                acc = acc - out[e] * den_layers[d - e]
        q = acc.divexact(d0)
        if q:
            out[d] = q
    return AffineSeries(rd, dom, level, n, out)


# -- functional evaluation ------------------------------------------------------

def evaluate_series(s: AffineSeries, h, u: complex, tau: complex) -> complex:
    """Value of the truncated series as a function: the exponential of
    w + a delta + K Lambda_0 contributes exp(2 pi i ((w,h) + K u - a tau)).
    Truncation quality is the caller's contract (Im tau large enough)."""
    import cmath
    if getattr(tau, "imag", 0.0) <= 0:
        raise DomainError("tau must lie in the upper half plane")
    hvec = tuple(complex(x) for x in h)
    if len(hvec) != s.rd.n:
        raise DomainError("Cartan argument has wrong length")
    two_pi_i = 2j * cmath.pi
    total = 0.0 + 0.0j
    for d, lay in s.layers.items():
        a = -(float(d) + float(s.offset))
        pref = cmath.exp(two_pi_i * (s.level * u - a * tau))
        for w, c in lay.terms.items():
            pw = sum(float(x) * y for x, y in zip(w, hvec))
            total += complex(c) * pref * cmath.exp(two_pi_i * pw)
    return total
