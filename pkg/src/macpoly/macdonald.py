"""Macdonald difference operators and polynomials for type A.

Everything runs in the gl_n partition picture: symmetric polynomials are
dicts mapping exponent tuples to coefficients in the exact field
``QTField``.  The trace-zero (sl) picture is reached by projecting
partitions to weights; that projection matches monomial bases term by
term, so inner products live on the lattice side.

The difference operators are applied by clearing all denominators against
the Vandermonde determinant and dividing back exactly; any nonzero
remainder raises, because the operators provably preserve polynomials.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import combinations, permutations

from .algebra.field import Frac, QTField
from .algebra.lattice import (LatticePoly, evaluate_at_qpower, orbitsum,
                              weyl_denominator)
from .errors import DegenerateSpectrumError, DomainError, ExactnessError, \
    UnsupportedModeError
from .rootdata import RootData, from_partition, pairing, w_add, w_scale

Partition = tuple  # weakly decreasing tuple of n nonnegative ints


def check_partition(parts, n: int) -> Partition:
    p = tuple(int(x) for x in parts)
    if len(p) > n:
        raise DomainError("partition has more than n parts")
    p = p + (0,) * (n - len(p))
    if any(x < 0 for x in p) or any(p[i] < p[i + 1] for i in range(n - 1)):
        raise DomainError("parts must be weakly decreasing and nonnegative")
    return p


def dominated_partitions(lam: Partition):
    """All partitions of the same size below lam in dominance order,
    linearly ordered with lam first."""
    n = len(lam)
    seen = set()
    stack = [lam]
    while stack:
        cur = stack.pop()
        if cur in seen:
            continue
        seen.add(cur)
        for i in range(n):
            for j in range(i + 1, n):
                cand = list(cur)
                cand[i] -= 1
                cand[j] += 1
                t = tuple(cand)
                if all(t[a] >= t[a + 1] for a in range(n - 1)) and \
                        t[-1] >= 0 and t not in seen:
                    stack.append(t)
    weightv = tuple(range(n - 1, -1, -1))
    return sorted(seen, key=lambda m:
                  (-sum(a * b for a, b in zip(m, weightv)), m))


class MacdonaldContext:
    """Fixed rank and parameter mode (generic t, or t = q**k)."""

    def __init__(self, n: int, k: int | None = None):
        self.rd = RootData(n)
        self.n = n
        self.k = k
        self.field = QTField(n, with_t=(k is None))
        self._wi_cache = {}
        self._poly_cache = {}
        self._kernel_cache = {}
        self._lock = threading.Lock()

    def t_pow(self, e: int) -> Frac:
        if self.k is None:
            return self.field.t_pow(e)
        return self.field.q_pow(self.k * e)

    def describe_mode(self) -> str:
        return "generic" if self.k is None else "t=q^%d" % self.k


# --- gl symmetric polynomials ------------------------------------------------

def gp_add(a, b, zero):
    out = dict(a)
    for m, c in b.items():
        s = out.get(m, zero) + c
        if s:
            out[m] = s
        else:
            out.pop(m, None)
    return out


def gp_mul(a, b, zero):
    out = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = tuple(x + y for x, y in zip(ma, mb))
            s = out.get(m, zero) + ca * cb
            if s:
                out[m] = s
            else:
                del out[m]
    return out


def gp_scale(a, c):
    if not c:
        return {}
    return {m: k * c for m, k in a.items()}


def monomial_sym(ctx: MacdonaldContext, lam: Partition):
    """Monomial symmetric polynomial: one per distinct rearrangement."""
    one = ctx.field.one
    return {m: one for m in set(permutations(lam))}


def is_symmetric_gl(f) -> bool:
    groups = {}
    for m, c in f.items():
        groups.setdefault(tuple(sorted(m, reverse=True)), []).append(c)
    for key, vals in groups.items():
        count = len(set(permutations(key)))
        if len(vals) != count or any(v != vals[0] for v in vals[1:]):
            return False
    return True


def _sym_divexact(num, den, field):
    """Exact division of gl polynomials (lex leading terms)."""
    if not den:
        raise ZeroDivisionError("division by zero polynomial")
    if not num:
        return {}
    dlead = max(den)
    dlc = den[dlead]
    rem = dict(num)
    out = {}
    max_steps = 64 * (len(num) + len(den) + 4) ** 2
    steps = 0
    while rem:
        steps += 1
        if steps > max_steps:
            raise ExactnessError("gl division does not terminate")
        rlead = max(rem)
        qm = tuple(x - y for x, y in zip(rlead, dlead))
        if any(e < 0 for e in qm):
            raise ExactnessError("operator output was not polynomial")
        qc = rem[rlead] / dlc
        out[qm] = qc
        for m, c in den.items():
            nm = tuple(x + y for x, y in zip(m, qm))
            s = rem.get(nm, field.zero) - qc * c
            if s:
                rem[nm] = s
            else:
                rem.pop(nm, None)
    return out


def _vandermonde(ctx: MacdonaldContext):
    n = ctx.n
    one = ctx.field.one
    out = {(0,) * n: one}
    for i in range(n):
        for j in range(i + 1, n):
            ei = tuple(1 if a == i else 0 for a in range(n))
            ej = tuple(1 if a == j else 0 for a in range(n))
            out = gp_mul(out, {ei: one, ej: -one}, ctx.field.zero)
    return out


def _subset_weights(ctx: MacdonaldContext, subset, rest):
    """sign * prod_(i in I, j not in I) (t^2 x_i - x_j)
    * prod_(i<j in I)(x_i - x_j) * prod_(i<j not in I)(x_i - x_j)."""
    key = (subset, rest)
    cached = ctx._wi_cache.get(key)
    if cached is not None:
        return cached
    n = ctx.n
    one = ctx.field.one
    t2 = ctx.t_pow(2)
    out = {(0,) * n: one}
    inversions = 0
    for i in subset:
        for j in rest:
            if i > j:
                inversions += 1
            ei = tuple(1 if a == i else 0 for a in range(n))
            ej = tuple(1 if a == j else 0 for a in range(n))
            out = gp_mul(out, {ei: t2, ej: -one}, ctx.field.zero)
    for group in (subset, rest):
        for i, j in combinations(group, 2):
            ei = tuple(1 if a == i else 0 for a in range(n))
            ej = tuple(1 if a == j else 0 for a in range(n))
            out = gp_mul(out, {ei: one, ej: -one}, ctx.field.zero)
    if inversions % 2:
        out = gp_scale(out, -one)
    with ctx._lock:
        ctx._wi_cache[key] = out
    return out


def macdonald_op_apply(ctx: MacdonaldContext, r: int, f):
    """Apply the r-th Macdonald difference operator to a symmetric
    homogeneous gl polynomial, returning the exact expansion."""
    n = ctx.n
    if not 1 <= r <= n:
        raise DomainError("operator index r must satisfy 1 <= r <= n")
    if not f:
        return {}
    degs = {sum(m) for m in f}
    if len(degs) != 1:
        raise DomainError("operator input must be homogeneous")
    if not is_symmetric_gl(f):
        raise DomainError("operator input must be symmetric")
    field = ctx.field
    numer = {}
    for subset in combinations(range(n), r):
        rest = tuple(a for a in range(n) if a not in subset)
        shifted = {}
        for m, c in f.items():
            qfac = field.q_pow(2 * sum(m[i] for i in subset))
            s = shifted.get(m, field.zero) + c * qfac
            if s:
                shifted[m] = s
        term = gp_mul(_subset_weights(ctx, subset, rest), shifted, field.zero)
        numer = gp_add(numer, term, field.zero)
    quotient = _sym_divexact(numer, _vandermonde(ctx), field)
    pref = ctx.t_pow(r * (r - n))
    return gp_scale(quotient, pref)


def macdonald_eigenvalue(ctx: MacdonaldContext, r: int, lam: Partition):
    """Sum over r-subsets of prod q^(2 lam_i) t^(n+1-2i), i = 1..n."""
    n = ctx.n
    if not 1 <= r <= n:
        raise DomainError("operator index r must satisfy 1 <= r <= n")
    lam = check_partition(lam, n)
    field = ctx.field
    out = field.zero
    for subset in combinations(range(n), r):
        term = field.one
        for i in subset:  # 0-based, so the bracket exponent is n-1-2i
            term = term * field.q_pow(2 * lam[i]) * ctx.t_pow(n - 1 - 2 * i)
        out = out + term
    return out


def expand_monomial_basis(ctx: MacdonaldContext, f):
    """Write a symmetric gl polynomial over monomial symmetric functions;
    round-trips exactly or raises."""
    out = {}
    rem = dict(f)
    zero = ctx.field.zero
    while rem:
        lead = max(rem, key=lambda m: (tuple(sorted(m, reverse=True)), m))
        part = tuple(sorted(lead, reverse=True))
        c = rem[lead]
        out[part] = c
        for m in set(permutations(part)):
            s = rem.get(m, zero) - c
            if s:
                rem[m] = s
            else:
                rem.pop(m, None)
    return out


@dataclass
class MacdonaldBasisElement:
    """Unit-unitriangular expansion of one Macdonald polynomial over
    monomial symmetric functions."""

    n: int
    lam: Partition
    mode: str
    k: int | None
    coeffs: dict = dc_field(default_factory=dict)

    def as_gl_poly(self, ctx: MacdonaldContext):
        out = {}
        for mu, c in self.coeffs.items():
            out = gp_add(out, gp_scale(monomial_sym(ctx, mu), c),
                         ctx.field.zero)
        return out

    def as_lattice(self, ctx: MacdonaldContext) -> LatticePoly:
        out = LatticePoly.zero(ctx.rd, ctx.field)
        for mu, c in self.coeffs.items():
            w = from_partition(mu, ctx.n)
            out = out + orbitsum(ctx.rd, w, ctx.field).scale(c)
        return out


def macdonald_poly(ctx: MacdonaldContext, lam) -> MacdonaldBasisElement:
    """Triangular eigen-solve against the first Macdonald operator."""
    lam = check_partition(lam, ctx.n)
    with ctx._lock:
        cached = ctx._poly_cache.get(lam)
    if cached is not None:
        return cached
    basis = dominated_partitions(lam)
    index = {mu: i for i, mu in enumerate(basis)}
    matrix = {}
    for mu in basis:
        row = expand_monomial_basis(ctx, macdonald_op_apply(
            ctx, 1, monomial_sym(ctx, mu)))
        if any(nu not in index for nu in row):
            raise ExactnessError("operator broke dominance triangularity")
        matrix[mu] = row
    top = macdonald_eigenvalue(ctx, 1, lam)
    if matrix[lam].get(lam) != top:
        raise ExactnessError("leading eigenvalue mismatch against the "
                             "closed form")
    coeffs = {lam: ctx.field.one}
    for mu in basis[1:]:
        acc = ctx.field.zero
        for nu, cnu in coeffs.items():
            acc = acc + cnu * matrix[nu].get(mu, ctx.field.zero)
        gap = top - matrix[mu][mu]
        if not gap:
            raise DegenerateSpectrumError(
                "eigenvalue collision between %r and %r in mode %s"
                % (lam, mu, ctx.describe_mode()), colliding=mu)
        c = acc / gap
        if c:
            coeffs[mu] = c
    elem = MacdonaldBasisElement(ctx.n, lam, ctx.describe_mode(), ctx.k,
                                 coeffs)
    with ctx._lock:
        ctx._poly_cache[lam] = elem
    return elem


# --- inner products at t = q^k ----------------------------------------------

def q_denominator_power(ctx: MacdonaldContext, k: int) -> LatticePoly:
    """q-deformation of the (k-1)st power of the Weyl denominator: the
    product over i = 1..k-1 of e^rho prod_(alpha>0) (1 - q^(2i) e^-alpha).
    Empty product (k = 1) gives 1; the q -> 1 limit is delta^(k-1)."""
    if k < 1:
        raise DomainError("k must be a positive integer")
    rd, field = ctx.rd, ctx.field
    out = LatticePoly.one(rd, field)
    for i in range(1, k):
        fac = LatticePoly.one(rd, field)
        for alpha in rd.positive_roots:
            fac = fac * LatticePoly(rd, field, {
                rd.zero: field.one,
                w_scale(-1, alpha): -field.q_pow(2 * i)})
        out = out * fac.shift(rd.rho)
    return out


def finite_kernel(ctx: MacdonaldContext, k: int) -> LatticePoly:
    """prod over all roots alpha and i = 0..k-1 of (1 - q^(2i) e^alpha):
    the finite form of the orthogonality weight at t = q^k."""
    if k < 1 or int(k) != k:
        raise UnsupportedModeError("inner products need a positive "
                                   "integer k")
    key = ("kernel", k)
    with ctx._lock:
        cached = ctx._kernel_cache.get(key)
    if cached is not None:
        return cached
    rd, field = ctx.rd, ctx.field
    out = LatticePoly.one(rd, field)
    for alpha in list(rd.positive_roots):
        for sgn in (1, -1):
            root = w_scale(sgn, alpha)
            for i in range(k):
                out = out * LatticePoly(rd, field, {
                    rd.zero: field.one, root: -field.q_pow(2 * i)})
    with ctx._lock:
        ctx._kernel_cache[key] = out
    return out


def _clear_denominators(f: LatticePoly):
    """(polynomial-coefficient terms, common denominator polynomial)."""
    from .algebra import poly as P
    field = f.dom
    den = P.p_const(1, field.nvars)
    for c in f.terms.values():
        g = P.p_gcd(den, c.den)
        den = P.p_mul(den, P.p_divexact(c.den, g))
    cleared = {}
    for w, c in f.terms.items():
        cleared[w] = P.p_mul(c.num, P.p_divexact(den, c.den))
    return cleared, den


def inner_product_k(ctx: MacdonaldContext, f: LatticePoly, g: LatticePoly,
                    k: int):
    """(1/|W|) * constant term of f * bar(g) * kernel_k.

    Only the constant term is assembled: denominators are cleared once,
    the product f * bar(g) runs over raw integer-coefficient polynomials,
    and each resulting weight w meets the kernel's coefficient at -w."""
    from .algebra import poly as P
    from .rootdata import w_neg, w_sub as _ws
    kern = finite_kernel(ctx, k)
    field = ctx.field
    fc, fd = _clear_denominators(f)
    gc, gd = _clear_denominators(g)
    prod: dict = {}
    for wf, cf in fc.items():
        for wg, cg in gc.items():
            w = _ws(wf, wg)  # bar(g) negates exponents
            term = P.p_mul(cf, cg)
            if w in prod:
                prod[w] = P.p_add(prod[w], term)
            else:
                prod[w] = term
    ct = P.p_zero()
    for w, c in prod.items():
        kc = kern.terms.get(w_neg(w))
        if kc is not None:
            ct = P.p_add(ct, P.p_mul(c, kc.num))
    order = 1
    for i in range(2, ctx.n + 1):
        order *= i
    den = P.p_int_mul(P.p_mul(fd, gd), order)
    return Frac(field, ct, den)


# --- verification reports ----------------------------------------------------

@dataclass
class VerifyReport:
    identity: str
    inputs: dict
    lhs: str
    rhs: str
    equal: bool
    note: str = ""

    def to_dict(self):
        return {"identity": self.identity, "inputs": self.inputs,
                "lhs": self.lhs, "rhs": self.rhs, "equal": self.equal,
                "note": self.note}


def _fmt(field, x) -> str:
    if isinstance(x, Frac):
        num = field.format_poly(x.num)
        den = field.format_poly(x.den)
        return num if den == "1" else "(%s)/(%s)" % (num, den)
    return str(x)


def verify_norm(n: int, lam, k: int) -> VerifyReport:
    """Squared norm of one Macdonald polynomial against the closed
    product formula."""
    ctx = MacdonaldContext(n, k)
    lam = check_partition(lam, n)
    p = macdonald_poly(ctx, lam)
    lp = p.as_lattice(ctx)
    lhs = inner_product_k(ctx, lp, lp, k)
    field = ctx.field
    lamw = from_partition(lam, n)
    shifted = w_add(lamw, w_scale(k, ctx.rd.rho))
    rhs = field.one
    for alpha in ctx.rd.positive_roots:
        m = 2 * pairing(alpha, shifted)
        for i in range(1, k):
            rhs = rhs * (field.one - field.q_pow(m + 2 * i)) \
                / (field.one - field.q_pow(m - 2 * i))
    return VerifyReport(
        identity="norm", inputs={"n": n, "lambda": list(lam), "k": k},
        lhs=_fmt(field, lhs), rhs=_fmt(field, rhs), equal=lhs == rhs)


def verify_symmetry(n: int, lam, mu, k: int) -> VerifyReport:
    """Evaluation symmetry: value of one polynomial at the shifted point
    of the other, versus the bracket-product formula."""
    ctx = MacdonaldContext(n, k)
    lam = check_partition(lam, n)
    mu = check_partition(mu, n)
    field = ctx.field
    rd = ctx.rd
    lamw, muw = from_partition(lam, n), from_partition(mu, n)
    lk = w_add(lamw, w_scale(k, rd.rho))
    mk = w_add(muw, w_scale(k, rd.rho))
    p_lam = macdonald_poly(ctx, lam).as_lattice(ctx)
    p_mu = macdonald_poly(ctx, mu).as_lattice(ctx)
    num = evaluate_at_qpower(p_mu, lk, field)
    den = evaluate_at_qpower(p_lam, mk, field)
    inputs = {"n": n, "lambda": list(lam), "mu": list(mu), "k": k}
    if not den:
        return VerifyReport(identity="symmetry", inputs=inputs,
                            lhs="0/0", rhs="", equal=False,
                            note="inconclusive-at-specialization")
    lhs = num / den
    rhs = field.one
    for alpha in rd.positive_roots:
        for i in range(k):
            rhs = rhs * field.q_int_bracket(pairing(alpha, mk) + i) \
                / field.q_int_bracket(pairing(alpha, lk) + i)
    return VerifyReport(identity="symmetry", inputs=inputs,
                        lhs=_fmt(field, lhs), rhs=_fmt(field, rhs),
                        equal=lhs == rhs)


def verify_special_value(n: int, lam, k: int) -> VerifyReport:
    """Principal specialization against the bracket-product formula."""
    ctx = MacdonaldContext(n, k)
    lam = check_partition(lam, n)
    field = ctx.field
    rd = ctx.rd
    lamw = from_partition(lam, n)
    lk = w_add(lamw, w_scale(k, rd.rho))
    krho = w_scale(k, rd.rho)
    p = macdonald_poly(ctx, lam).as_lattice(ctx)
    lhs = evaluate_at_qpower(p, krho, field)
    rhs = field.one
    for alpha in rd.positive_roots:
        for i in range(k):
            rhs = rhs * field.q_int_bracket(pairing(alpha, lk) + i) \
                / field.q_int_bracket(pairing(alpha, krho) + i)
    return VerifyReport(
        identity="special-value",
        inputs={"n": n, "lambda": list(lam), "k": k},
        lhs=_fmt(field, lhs), rhs=_fmt(field, rhs), equal=lhs == rhs)


def verify_orthogonality(n: int, lam, mu, k: int) -> VerifyReport:
    ctx = MacdonaldContext(n, k)
    lam = check_partition(lam, n)
    mu = check_partition(mu, n)
    p = macdonald_poly(ctx, lam).as_lattice(ctx)
    q = macdonald_poly(ctx, mu).as_lattice(ctx)
    val = inner_product_k(ctx, p, q, k)
    distinct = from_partition(lam, n) != from_partition(mu, n)
    ok = (not val) if distinct else bool(val)
    return VerifyReport(
        identity="orthogonality",
        inputs={"n": n, "lambda": list(lam), "mu": list(mu), "k": k},
        lhs=_fmt(ctx.field, val), rhs="0" if distinct else "nonzero",
        equal=ok)
