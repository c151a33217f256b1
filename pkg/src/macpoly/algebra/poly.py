"""Sparse multivariate polynomials over the integers.

A polynomial in ``nvars`` variables is a dict mapping exponent tuples to
nonzero int coefficients.  All exponents are nonnegative; Laurent behaviour
is handled one level up (rational functions with monomial denominators).
Plain dicts and module-level functions keep the inner loops cheap; the
user-facing field wrapper lives in ``field.py``.
"""

from __future__ import annotations

from math import gcd as int_gcd

from ..errors import ExactnessError

Mono = tuple  # exponent vector
Poly = dict   # Mono -> int, zero coefficients never stored


def p_zero() -> Poly:
    return {}


def p_const(c: int, nvars: int) -> Poly:
    if c == 0:
        return {}
    return {(0,) * nvars: c}


def p_mono(c: int, exps: Mono) -> Poly:
    if c == 0:
        return {}
    return {tuple(exps): c}


def p_is_zero(a: Poly) -> bool:
    return not a


def p_add(a: Poly, b: Poly) -> Poly:
    if not a:
        return dict(b)
    if not b:
        return dict(a)
    out = dict(a)
    for m, c in b.items():
        s = out.get(m, 0) + c
        if s:
            out[m] = s
        else:
            out.pop(m, None)
    return out


def p_neg(a: Poly) -> Poly:
    return {m: -c for m, c in a.items()}


def p_sub(a: Poly, b: Poly) -> Poly:
    return p_add(a, p_neg(b))


def p_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    out: Poly = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = tuple(x + y for x, y in zip(ma, mb))
            s = out.get(m, 0) + ca * cb
            if s:
                out[m] = s
            else:
                del out[m]
    return out


def p_int_mul(a: Poly, c: int) -> Poly:
    if c == 0:
        return {}
    return {m: k * c for m, k in a.items()}


def p_pow(a: Poly, e: int) -> Poly:
    if e < 0:
        raise ValueError("negative power of a polynomial")
    nvars = len(next(iter(a))) if a else 0
    out = p_const(1, nvars)
    base = a
    while e:
        if e & 1:
            out = p_mul(out, base)
        base = p_mul(base, base)
        e >>= 1
    return out


def p_eval_ones(a: Poly) -> int:
    """Value at all variables = 1."""
    return sum(a.values())


def p_min_exps(a: Poly, nvars: int) -> Mono:
    """Componentwise minimum exponent (the largest monomial dividing a)."""
    if not a:
        return (0,) * nvars
    it = iter(a)
    lo = list(next(it))
    for m in it:
        for i, e in enumerate(m):
            if e < lo[i]:
                lo[i] = e
    return tuple(lo)


def p_shift(a: Poly, delta: Mono) -> Poly:
    """Multiply by the (possibly inverse) monomial x^delta; exponents must
    stay nonnegative."""
    if all(d == 0 for d in delta):
        return a
    out = {}
    for m, c in a.items():
        nm = tuple(x + d for x, d in zip(m, delta))
        assert all(e >= 0 for e in nm)
        out[nm] = c
    return out


def p_int_content(a: Poly) -> int:
    g = 0
    for c in a.values():
        g = int_gcd(g, abs(c))
        if g == 1:
            return 1
    return g


def _lead_mono(a: Poly) -> Mono:
    return max(a)  # lexicographic on exponent tuples


def p_lead_sign(a: Poly) -> int:
    if not a:
        return 0
    return 1 if a[_lead_mono(a)] > 0 else -1


# --- exact division -------------------------------------------------------

def p_divexact(a: Poly, b: Poly) -> Poly:
    """Exact quotient a/b; raises ExactnessError when b does not divide a."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return {}
    rem = dict(a)
    out: Poly = {}
    mb = _lead_mono(b)
    cb = b[mb]
    while rem:
        mr = _lead_mono(rem)
        cr = rem[mr]
        qm = tuple(x - y for x, y in zip(mr, mb))
        if any(e < 0 for e in qm) or cr % cb != 0:
            raise ExactnessError("polynomial division left a remainder")
        qc = cr // cb
        out[qm] = qc
        for m, c in b.items():
            nm = tuple(x + y for x, y in zip(m, qm))
            s = rem.get(nm, 0) - qc * c
            if s:
                rem[nm] = s
            else:
                rem.pop(nm, None)
    return out


def p_div_int(a: Poly, c: int) -> Poly:
    out = {}
    for m, k in a.items():
        q, r = divmod(k, c)
        if r:
            raise ExactnessError("integer content division left a remainder")
        out[m] = q
    return out


# --- gcd ------------------------------------------------------------------

def _split_by_var(a: Poly, v: int) -> dict:
    """View a as univariate in variable v: degree -> coefficient Poly in the
    remaining variables (exponent of v zeroed out)."""
    out: dict[int, Poly] = {}
    for m, c in a.items():
        d = m[v]
        key = m[:v] + (0,) + m[v + 1:]
        out.setdefault(d, {})[key] = c
    return out


def _join_by_var(coeffs: dict, v: int) -> Poly:
    out: Poly = {}
    for d, poly in coeffs.items():
        for m, c in poly.items():
            out[m[:v] + (d,) + m[v + 1:]] = c
    return out


def _active_vars(a: Poly) -> list:
    if not a:
        return []
    nv = len(next(iter(a)))
    act = []
    for v in range(nv):
        if any(m[v] for m in a):
            act.append(v)
    return act


def p_gcd(a: Poly, b: Poly) -> Poly:
    """GCD over ZZ, normalized to positive leading (lex) coefficient.

    Recursive content / primitive-part Euclid: pick a variable, take the
    gcd of contents (polys in the other variables), run a primitive
    pseudo-remainder sequence on the primitive parts.
    """
    if not a:
        return _pos(b)
    if not b:
        return _pos(a)
    nvars = len(next(iter(a)))
    # common pure-monomial factor first: cheap and common with Laurent data
    la, lb = p_min_exps(a, nvars), p_min_exps(b, nvars)
    common = tuple(min(x, y) for x, y in zip(la, lb))
    a = p_shift(a, tuple(-e for e in la))
    b = p_shift(b, tuple(-e for e in lb))
    g = _gcd_prim(a, b)
    return _pos(p_shift(g, common))


def _pos(a: Poly) -> Poly:
    return a if p_lead_sign(a) >= 0 else p_neg(a)


def _gcd_prim(a: Poly, b: Poly) -> Poly:
    ic = int_gcd(p_int_content(a), p_int_content(b))
    av, bv = _active_vars(a), _active_vars(b)
    if not av or not bv:
        return p_const(ic, len(next(iter(a))))
    common = [v for v in av if v in bv]
    if not common:
        # no shared variable: gcd is the integer content times gcd of
        # contents in the disjoint variables, which is integer again
        return p_const(ic, len(next(iter(a))))
    v = common[-1]
    ua, ub = _split_by_var(a, v), _split_by_var(b, v)
    ca = _content_list(list(ua.values()))
    cb = _content_list(list(ub.values()))
    cg = p_gcd(ca, cb)
    pa = _join_by_var({d: p_divexact(c, ca) for d, c in ua.items()}, v)
    pb = _join_by_var({d: p_divexact(c, cb) for d, c in ub.items()}, v)
    g = _euclid_prim(pa, pb, v)
    return p_mul(cg, g)


def _content_list(polys: list) -> Poly:
    g = polys[0]
    for p in polys[1:]:
        g = p_gcd(g, p)
    return g


def _deg(a: Poly, v: int) -> int:
    return max(m[v] for m in a)


def _pseudo_rem(a: Poly, b: Poly, v: int) -> Poly:
    """Pseudo-remainder of a by b w.r.t. variable v."""
    da, db = _deg(a, v), _deg(b, v)
    ub = _split_by_var(b, v)
    lb = ub[db]
    rem = a
    while rem and not p_is_zero(rem):
        dr = _deg(rem, v)
        if dr < db:
            break
        ur = _split_by_var(rem, v)
        lr = ur[dr]
        # lb * rem - lr * x^(dr-db) * b
        shift = (0,) * v + (dr - db,) + (0,) * (len(next(iter(b))) - v - 1)
        rem = p_sub(p_mul(lb, rem), p_mul(p_shift(lr, shift), b))
    return rem


def _primitive(a: Poly, v: int) -> Poly:
    ua = _split_by_var(a, v)
    c = _content_list(list(ua.values()))
    return _join_by_var({d: p_divexact(q, c) for d, q in ua.items()}, v)


def _euclid_prim(a: Poly, b: Poly, v: int) -> Poly:
    if _deg(a, v) < _deg(b, v):
        a, b = b, a
    while True:
        r = _pseudo_rem(a, b, v)
        if p_is_zero(r):
            return _primitive(b, v)
        if _deg(r, v) == 0:
            nv = len(next(iter(a)))
            return p_const(1, nv)
        a, b = b, _primitive(r, v)
