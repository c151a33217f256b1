"""Floating-point evaluation of the elliptic kernels.

Conventions: nome p = exp(2 pi i tau) with Im tau > 0.  theta1 is odd with
a simple zero on the lattice Z + tau Z and the product expansion

    theta1(x) = 2 p^(1/8) sin(pi x) prod_(n>=1)
                (1 - w p^n)(1 - p^n / w)(1 - p^n),     w = exp(2 pi i x).

Fractional powers of p are always exp of the corresponding multiple of
2 pi i tau, never a branch cut of p itself.

Every kernel that the connection needs has two independent computations
(q-series and theta expression); the identity suite in ``verify`` pins
them against each other on a grid.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .errors import DomainError, PoleProximityError

TWO_PI_I = 2j * math.pi


@dataclass(frozen=True)
class EllipticContext:
    tau: complex
    series_tolerance: float = 1e-16
    max_terms: int = 512
    pole_guard: float = 1e-9
    p: complex = field(init=False)

    def __post_init__(self):
        if self.tau.imag <= 0:
            raise DomainError("tau must have positive imaginary part")
        object.__setattr__(self, "p", cmath.exp(TWO_PI_I * self.tau))

    def p_frac(self, num: int, den: int) -> complex:
        """exp(2 pi i tau num/den): the principal fractional nome power."""
        return cmath.exp(TWO_PI_I * self.tau * num / den)


def lattice_distance(x: complex, tau: complex) -> float:
    """Distance from x to the period lattice Z + tau Z."""
    b = x.imag / tau.imag
    a = x.real - b * tau.real
    best = float("inf")
    for da in (-1, 0, 1):
        for db in (-1, 0, 1):
            node = round(a) + da + (round(b) + db) * tau
            best = min(best, abs(x - node))
    return best


def _guard_pole(x: complex, ctx: EllipticContext, what: str):
    if lattice_distance(complex(x), ctx.tau) < ctx.pole_guard:
        raise PoleProximityError("%s evaluated within %g of a lattice "
                                 "point" % (what, ctx.pole_guard))


# -- theta and eta -------------------------------------------------------------

def theta1(x: complex, ctx: EllipticContext) -> complex:
    """Product form; converges like p^n."""
    p = ctx.p
    w = cmath.exp(TWO_PI_I * x)
    out = 2.0 * ctx.p_frac(1, 8) * cmath.sin(math.pi * x)
    pn = 1.0 + 0.0j
    for n in range(1, ctx.max_terms):
        pn *= p
        fac = (1 - w * pn) * (1 - pn / w) * (1 - pn)
        out *= fac
        if abs(fac - 1.0) < ctx.series_tolerance:
            break
    return out


def theta1_deriv(x: complex, ctx: EllipticContext, order: int = 1) -> complex:
    """Derivatives from the sine expansion
    theta1 = 2 sum (-1)^n p^((2n+1)^2/8) sin((2n+1) pi x)."""
    total = 0.0 + 0.0j
    scale = 0.0
    for n in range(ctx.max_terms):
        m = 2 * n + 1
        amp = 2.0 * (-1) ** n * ctx.p_frac(m * m, 8) * (math.pi * m) ** order
        phase = m * math.pi * x
        if order % 2 == 0:
            val = cmath.sin(phase) * (-1) ** (order // 2)
        else:
            val = cmath.cos(phase) * (-1) ** (order // 2)
        term = amp * val
        total += term
        scale = max(scale, abs(term))
        if n > 2 and abs(term) < ctx.series_tolerance * max(scale, 1.0):
            break
    return total


def theta1_series(x: complex, ctx: EllipticContext) -> complex:
    """Sine-series value; independent cross-check of the product form."""
    total = 0.0 + 0.0j
    scale = 0.0
    for n in range(ctx.max_terms):
        m = 2 * n + 1
        term = 2.0 * (-1) ** n * ctx.p_frac(m * m, 8) \
            * cmath.sin(m * math.pi * x)
        total += term
        scale = max(scale, abs(term))
        if n > 2 and abs(term) < ctx.series_tolerance * max(scale, 1.0):
            break
    return total


def eta(ctx: EllipticContext) -> complex:
    """Dedekind eta: p^(1/24) prod (1 - p^n)."""
    out = ctx.p_frac(1, 24)
    pn = 1.0 + 0.0j
    for n in range(1, ctx.max_terms):
        pn *= ctx.p
        out *= (1 - pn)
        if abs(pn) < ctx.series_tolerance:
            break
    return out


# -- log-derivative kernel ------------------------------------------------------

def theta_logderiv(x: complex, ctx: EllipticContext) -> complex:
    """-(1/2 pi i) theta1'(x)/theta1(x), via the analytic log-derivative
    of the product: odd, 1-periodic, and gains +1 under x -> x + tau."""
    _guard_pole(x, ctx, "log-derivative kernel")
    w = cmath.exp(TWO_PI_I * x)
    out = -1.0 / (2j * cmath.tan(math.pi * x))
    pn = 1.0 + 0.0j
    for n in range(1, ctx.max_terms):
        pn *= ctx.p
        a = w * pn
        b = pn / w
        term = a / (1 - a) - b / (1 - b)
        out += term
        if abs(a) + abs(b) < ctx.series_tolerance:
            break
    return out


def theta_logderiv_qseries(x: complex, ctx: EllipticContext) -> complex:
    """Direct bilateral series: 1/2 + sum_(n>=0) p^n w/(1 - p^n w)
    + sum_(n<0) 1/(1 - p^n w)."""
    _guard_pole(x, ctx, "log-derivative kernel")
    w = cmath.exp(TWO_PI_I * x)
    out = 0.5 + w / (1 - w)
    pn = 1.0 + 0.0j
    for n in range(1, ctx.max_terms):
        pn *= ctx.p
        up = pn * w / (1 - pn * w)
        dn = -(pn / w) / (1 - pn / w)
        out += up + dn
        if abs(up) + abs(dn) < ctx.series_tolerance:
            break
    return out


# -- Weierstrass function --------------------------------------------------------

def _eisenstein_weight_sum(ctx: EllipticContext) -> complex:
    """sum_(m>=1) m p^m / (1 - p^m)."""
    out = 0.0 + 0.0j
    pm = 1.0 + 0.0j
    for m in range(1, ctx.max_terms):
        pm *= ctx.p
        term = m * pm / (1 - pm)
        out += term
        if abs(term) < ctx.series_tolerance:
            break
    return out


def weierstrass_p(x: complex, ctx: EllipticContext) -> complex:
    """Rearranged log-derivative form: the double lattice sum collapses to

    wp(x) = -(d^2/dx^2) log theta1(x) - (pi^2)/3 + 8 pi^2 E,
            E = sum m p^m/(1-p^m),

    which keeps the implicit additive constant of the nome expansion out
    of every downstream use."""
    _guard_pole(x, ctx, "Weierstrass function")
    t0 = theta1(x, ctx)
    t1 = theta1_deriv(x, ctx, 1)
    t2 = theta1_deriv(x, ctx, 2)
    log2 = t2 / t0 - (t1 / t0) ** 2
    return -log2 - (math.pi ** 2) / 3.0 \
        + 8 * math.pi ** 2 * _eisenstein_weight_sum(ctx)


def second_logderiv_qseries(x: complex, ctx: EllipticContext) -> complex:
    """sum_(n in Z) p^n w / (1 - p^n w)^2: equals
    (1/4 pi^2) d^2/dx^2 log theta1."""
    _guard_pole(x, ctx, "second log-derivative series")
    w = cmath.exp(TWO_PI_I * x)
    out = w / (1 - w) ** 2
    pn = 1.0 + 0.0j
    for n in range(1, ctx.max_terms):
        pn *= ctx.p
        up = pn * w / (1 - pn * w) ** 2
        dn = (pn / w) / (1 - pn / w) ** 2
        out += up + dn
        if abs(up) + abs(dn) < ctx.series_tolerance:
            break
    return out


# -- two-variable kernel ---------------------------------------------------------

def kronecker_kernel(x: complex, zeta: complex, ctx: EllipticContext) \
        -> complex:
    """-(1/2 pi i) theta1(x - zeta) theta1'(0) / (theta1(x) theta1(zeta)):
    the meromorphic kernel with residue (1/2 pi i) at x on the lattice."""
    _guard_pole(x, ctx, "pair kernel")
    _guard_pole(zeta, ctx, "pair kernel")
    num = theta1(x - zeta, ctx) * theta1_deriv(0.0, ctx, 1)
    den = theta1(x, ctx) * theta1(zeta, ctx)
    return -num / den / TWO_PI_I


def kronecker_kernel_qseries(x: complex, zeta: complex,
                             ctx: EllipticContext) -> complex:
    """sum_(m in Z) e^(2 pi i m zeta) / (1 - p^m e^(-2 pi i x)), with the
    constant tail of the m -> +infinity side resummed geometrically;
    absolutely convergent for |Im zeta| < Im tau."""
    if abs(zeta.imag) >= ctx.tau.imag:
        raise DomainError("q-series needs |Im zeta| < Im tau")
    _guard_pole(x, ctx, "pair kernel")
    _guard_pole(zeta, ctx, "pair kernel")
    wx = cmath.exp(-TWO_PI_I * x)
    wz = cmath.exp(TWO_PI_I * zeta)
    out = wz / (1 - wz) + 1 / (1 - wx)
    pm = 1.0 + 0.0j
    wzp = 1.0 + 0.0j
    wzm = 1.0 + 0.0j
    for m in range(1, ctx.max_terms):
        pm *= ctx.p
        wzp *= wz
        wzm /= wz
        up = wzp * pm * wx / (1 - pm * wx)
        dn = -wzm * (pm / wx) / (1 - pm / wx)
        out += up + dn
        if abs(up) + abs(dn) < ctx.series_tolerance:
            break
    return out


def kronecker_kernel_dx(x: complex, zeta: complex,
                        ctx: EllipticContext) -> complex:
    """-(1/2 pi i) d/dx of the pair kernel, via analytic theta
    derivatives."""
    _guard_pole(x, ctx, "pair kernel derivative")
    _guard_pole(zeta, ctx, "pair kernel derivative")
    t0x = theta1(x, ctx)
    d = theta1_deriv(x - zeta, ctx, 1) * t0x \
        - theta1(x - zeta, ctx) * theta1_deriv(x, ctx, 1)
    dxg = -theta1_deriv(0.0, ctx, 1) / theta1(zeta, ctx) * d / (t0x * t0x) \
        / TWO_PI_I
    return -dxg / TWO_PI_I


def kronecker_kernel_dx_qseries(x: complex, zeta: complex,
                                ctx: EllipticContext) -> complex:
    """sum_(m in Z) e^(-2 pi i x) p^m e^(2 pi i m zeta)
    / (1 - p^m e^(-2 pi i x))^2; absolutely convergent for
    |Im zeta| < Im tau."""
    if abs(zeta.imag) >= ctx.tau.imag:
        raise DomainError("q-series needs |Im zeta| < Im tau")
    _guard_pole(x, ctx, "pair kernel derivative")
    wx = cmath.exp(-TWO_PI_I * x)
    wz = cmath.exp(TWO_PI_I * zeta)
    out = wx / (1 - wx) ** 2
    pm = 1.0 + 0.0j
    wzp = 1.0 + 0.0j
    wzm = 1.0 + 0.0j
    for m in range(1, ctx.max_terms):
        pm *= ctx.p
        wzp *= wz
        wzm /= wz
        up = wzp * pm * wx / (1 - pm * wx) ** 2
        dn = wzm * (pm / wx) / (1 - pm / wx) ** 2
        out += up + dn
        if abs(up) + abs(dn) < ctx.series_tolerance:
            break
    return out


def diagonal_kernel_qseries(zeta: complex, ctx: EllipticContext) -> complex:
    """sum_(m != 0) p^m e^(2 pi i m zeta) / (1 - p^m)^2, absolutely
    convergent for |Im zeta| < Im tau."""
    if abs(zeta.imag) >= ctx.tau.imag:
        raise DomainError("q-series needs |Im zeta| < Im tau")
    wz = cmath.exp(TWO_PI_I * zeta)
    out = 0.0 + 0.0j
    pm = 1.0 + 0.0j
    wzp = 1.0 + 0.0j
    for m in range(1, ctx.max_terms):
        pm *= ctx.p
        wzp *= wz
        term = pm * (wzp + 1 / wzp) / (1 - pm) ** 2
        out += term
        if abs(term) < ctx.series_tolerance:
            break
    return out


def diagonal_kernel_theta(zeta: complex, ctx: EllipticContext) -> complex:
    """Theta expression of the diagonal kernel:

        theta1''(z)/(8 pi^2 theta1(z))
        - theta1'''(0)/(24 pi^2 theta1'(0)) + 1/12.

    Derived by nome-differentiating the product logarithm and using the
    heat relation theta1'' = -8 pi^2 p d/dp theta1."""
    _guard_pole(zeta, ctx, "diagonal kernel")
    t0 = theta1(zeta, ctx)
    t2 = theta1_deriv(zeta, ctx, 2)
    d1 = theta1_deriv(0.0, ctx, 1)
    d3 = theta1_deriv(0.0, ctx, 3)
    return t2 / (8 * math.pi ** 2 * t0) \
        - d3 / (24 * math.pi ** 2 * d1) + 1.0 / 12.0


# -- bilateral principal-value helpers -------------------------------------------

def logderiv_exp_series(zeta: complex, ctx: EllipticContext) -> complex:
    """sum_(m != 0) e^(2 pi i m zeta)/(1 - p^m), the +m tail resummed;
    equals the log-derivative kernel minus 1/2."""
    if not 0 < zeta.imag or not zeta.imag < ctx.tau.imag:
        # peeled resummation below assumes 0 < Im zeta < Im tau
        raise DomainError("series needs 0 < Im zeta < Im tau")
    wz = cmath.exp(TWO_PI_I * zeta)
    out = wz / (1 - wz)
    pm = 1.0 + 0.0j
    wzp = 1.0 + 0.0j
    wzm = 1.0 + 0.0j
    for m in range(1, ctx.max_terms):
        pm *= ctx.p
        wzp *= wz
        wzm /= wz
        up = wzp * pm / (1 - pm)
        dn = -wzm * pm / (1 - pm)
        out += up + dn
        if abs(up) + abs(dn) < ctx.series_tolerance:
            break
    return out


def logderiv_vp_series(zeta: complex, ctx: EllipticContext) -> complex:
    """(1/2) V.P. sum_(m in Z) (1 + p^m w)/(1 - p^m w) with symmetric
    windows; the +-m pair decays exponentially, honoring the stated
    principal-value convention."""
    _guard_pole(zeta, ctx, "principal-value kernel")
    wz = cmath.exp(TWO_PI_I * zeta)
    out = 0.5 * (1 + wz) / (1 - wz)
    pm = 1.0 + 0.0j
    for m in range(1, ctx.max_terms):
        pm *= ctx.p
        a = pm * wz
        b = wz / pm
        pair = 0.5 * ((1 + a) / (1 - a) + (1 + b) / (1 - b))
        out += pair
        if abs(pair) < ctx.series_tolerance:
            break
    return out
