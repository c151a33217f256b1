"""Elliptic classical r-matrix and the associated flat connection.

The tensor factors are finite-dimensional representations: the defining
representation for any rank, plus arbitrary spins for rank one (the
three-point flatness sample needs a third factor with a nonempty
zero-weight space).  All operators are dense complex matrices acting on
the full tensor product; connection data is restricted to the zero-weight
block, where the system is consistent.

h is a traceless Cartan vector in epsilon coordinates; pairings with
weights reduce to coordinate sums.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .elliptic import (EllipticContext, kronecker_kernel,
                       kronecker_kernel_dx, theta1, theta_logderiv)
from .errors import DomainError

TWO_PI_I = 2j * math.pi


class Rep:
    """One tensor factor: matrices for the Chevalley-style generators in a
    fixed weight basis, plus the weight of every basis vector."""

    def __init__(self, n: int, dim: int | None = None):
        self.n = n
        if dim is None or dim == n:
            self.dim = n
            self.kind = "defining"
            self._build_defining(n)
        elif n == 2:
            self.dim = dim
            self.kind = "spin"
            self._build_spin(dim)
        else:
            raise DomainError("only the defining representation is "
                              "available for n > 2")

    def _build_defining(self, n):
        # traceless projection of the coordinate weights
        self.weights = [tuple((1.0 if a == b else 0.0) - 1.0 / n
                              for a in range(n))
                        for b in range(n)]
        self.e_mats = {}
        self.f_mats = {}
        for i in range(n):
            for j in range(i + 1, n):
                e = np.zeros((n, n), dtype=complex)
                e[i, j] = 1.0
                self.e_mats[(i, j)] = e
                self.f_mats[(i, j)] = e.T.copy()

    def _build_spin(self, dim):
        s = (dim - 1) / 2.0
        ms = [s - a for a in range(dim)]
        self.weights = [(m, -m) for m in ms]
        e = np.zeros((dim, dim), dtype=complex)
        f = np.zeros((dim, dim), dtype=complex)
        for a, m in enumerate(ms):
            if a > 0:
                e[a - 1, a] = math.sqrt((s - m) * (s + m + 1))
            if a + 1 < dim:
                f[a + 1, a] = math.sqrt((s + m) * (s - m + 1))
        self.e_mats = {(0, 1): e}
        self.f_mats = {(0, 1): f}

    def cartan_action(self, vec) -> np.ndarray:
        """Diagonal matrix of pairings of the basis weights with vec."""
        return np.diag([sum(w[a] * vec[a] for a in range(self.n))
                        for w in self.weights]).astype(complex)

    def cartan_basis(self) -> list:
        """Orthonormal traceless diagonal matrices under the trace form,
        represented in this representation."""
        out = []
        for m in range(1, self.n):
            vec = [1.0] * m + [-float(m)] + [0.0] * (self.n - m - 1)
            norm = math.sqrt(m * (m + 1))
            vec = [v / norm for v in vec]
            out.append(self.cartan_action(vec))
        return out


def positive_root_pairs(n: int):
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def _embed(mats: dict, dims: list) -> np.ndarray:
    """Kronecker-embed {slot: matrix} into the full tensor product."""
    total = None
    for idx, d in enumerate(dims):
        m = mats.get(idx)
        if m is None:
            m = np.eye(d, dtype=complex)
        total = m if total is None else np.kron(total, m)
    return total


@dataclass
class TensorSpace:
    """Tensor product of representation factors with its weight grading."""

    n: int
    reps: list

    def __post_init__(self):
        self.dims = [r.dim for r in self.reps]
        self.total_dim = int(np.prod(self.dims))
        self.basis_weights = []
        for flat in range(self.total_dim):
            idxs = self._unflatten(flat)
            w = [0.0] * self.n
            for slot, a in enumerate(idxs):
                for c in range(self.n):
                    w[c] += self.reps[slot].weights[a][c]
            self.basis_weights.append(tuple(w))
        self.zero_indices = [i for i, w in enumerate(self.basis_weights)
                             if all(abs(c) < 1e-12 for c in w)]

    def _unflatten(self, flat: int):
        idxs = []
        for d in reversed(self.dims):
            idxs.append(flat % d)
            flat //= d
        return tuple(reversed(idxs))

    def slot_weight_pairing(self, slot: int, h) -> np.ndarray:
        """Diagonal of <weight at this slot, h> over the full product."""
        diag = np.zeros(self.total_dim, dtype=complex)
        for flat in range(self.total_dim):
            a = self._unflatten(flat)[slot]
            w = self.reps[slot].weights[a]
            diag[flat] = sum(w[c] * h[c] for c in range(self.n))
        return diag

    def embed(self, slot: int, mat: np.ndarray) -> np.ndarray:
        return _embed({slot: mat}, self.dims)

    def embed2(self, si: int, mi: np.ndarray, sj: int,
               mj: np.ndarray) -> np.ndarray:
        if si == sj:
            return self.embed(si, mi @ mj)
        return _embed({si: mi, sj: mj}, self.dims)

    def zero_block(self, mat: np.ndarray) -> np.ndarray:
        z = self.zero_indices
        return mat[np.ix_(z, z)]

    def weight_preservation_residual(self, mat: np.ndarray) -> float:
        """Largest entry connecting different weight subspaces."""
        res = 0.0
        for a in range(self.total_dim):
            wa = self.basis_weights[a]
            for b in range(self.total_dim):
                if self.basis_weights[b] != wa:
                    res = max(res, abs(mat[a, b]))
        return res


def casimir_mixed(space: TensorSpace, si: int, sj: int) -> np.ndarray:
    """The invariant two-site element: sum over positive roots of
    e (x) f + f (x) e plus the orthonormal Cartan square, at the given
    slots."""
    n = space.n
    ri, rj = space.reps[si], space.reps[sj]
    total = np.zeros((space.total_dim, space.total_dim), dtype=complex)
    for pair in positive_root_pairs(n):
        if pair not in ri.e_mats or pair not in rj.e_mats:
            continue
        total += space.embed2(si, ri.e_mats[pair], sj, rj.f_mats[pair])
        total += space.embed2(si, ri.f_mats[pair], sj, rj.e_mats[pair])
    for xi, xj in zip(ri.cartan_basis(), rj.cartan_basis()):
        total += space.embed2(si, xi, sj, xj)
    return total


def omega_defining_check(n: int) -> float:
    """Residual of the invariant element against P - (1/n) Id on the two-
    site defining product (the permutation-operator cross-check)."""
    space = TensorSpace(n, [Rep(n), Rep(n)])
    om = casimir_mixed(space, 0, 1)
    perm = np.zeros((n * n, n * n), dtype=complex)
    for a in range(n):
        for b in range(n):
            perm[b * n + a, a * n + b] = 1.0
    return float(np.max(np.abs(om - (perm - np.eye(n * n) / n))))


def r_matrix(space: TensorSpace, si: int, sj: int, zeta: complex, h,
             ctx: EllipticContext) -> np.ndarray:
    """Two-site elliptic kernel at slots (si, sj):

    2 pi i [ sum_(a>0) ( e(x)f g(zeta, <a,h>) + f(x)e g(zeta, -<a,h>) )
             - (log-derivative kernel)(zeta) sum_l x_l (x) x_l ].
    """
    _check_cartan(space.n, h)
    ri, rj = space.reps[si], space.reps[sj]
    total = np.zeros((space.total_dim, space.total_dim), dtype=complex)
    for (a, b) in positive_root_pairs(space.n):
        if (a, b) not in ri.e_mats or (a, b) not in rj.e_mats:
            continue
        ah = h[a] - h[b]
        gp = kronecker_kernel(zeta, ah, ctx)
        gm = kronecker_kernel(zeta, -ah, ctx)
        total += gp * space.embed2(si, ri.e_mats[(a, b)],
                                   sj, rj.f_mats[(a, b)])
        total += gm * space.embed2(si, ri.f_mats[(a, b)],
                                   sj, rj.e_mats[(a, b)])
    sig = theta_logderiv(zeta, ctx)
    for xi, xj in zip(ri.cartan_basis(), rj.cartan_basis()):
        total -= sig * space.embed2(si, xi, sj, xj)
    return TWO_PI_I * total


def r_matrix_h_deriv(space: TensorSpace, si: int, sj: int, zeta: complex,
                     h, xvec, ctx: EllipticContext) -> np.ndarray:
    """Derivative of the two-site kernel along the Cartan direction xvec
    in the normalized convention (the one with plane-wave eigenvalue
    <nu, x>): per positive root,

        del_x g(zeta, <a,h>) = <a,x> (derivative kernel)(<a,h>, zeta),

    which follows from the antisymmetry of the kernel together with its
    defining x-derivative."""
    ri, rj = space.reps[si], space.reps[sj]
    total = np.zeros((space.total_dim, space.total_dim), dtype=complex)
    for (a, b) in positive_root_pairs(space.n):
        if (a, b) not in ri.e_mats or (a, b) not in rj.e_mats:
            continue
        ah = h[a] - h[b]
        ax = xvec[a] - xvec[b]
        dgp = kronecker_kernel_dx(ah, zeta, ctx) * ax
        dgm = kronecker_kernel_dx(-ah, zeta, ctx) * (-ax)
        total += dgp * space.embed2(si, ri.e_mats[(a, b)],
                                    sj, rj.f_mats[(a, b)])
        total += dgm * space.embed2(si, ri.f_mats[(a, b)],
                                    sj, rj.e_mats[(a, b)])
    return TWO_PI_I * total


def _check_cartan(n: int, h):
    if len(h) != n:
        raise DomainError("Cartan vector has wrong length")
    if abs(sum(h)) > 1e-12:
        raise DomainError("Cartan vector must be traceless")


def _cartan_directions(n: int) -> list:
    out = []
    for m in range(1, n):
        vec = [1.0] * m + [-float(m)] + [0.0] * (n - m - 1)
        norm = math.sqrt(m * (m + 1))
        out.append([v / norm for v in vec])
    return out


@dataclass
class Connection:
    """Per-point operator data of the system
    (K + h) d/d zeta_i = matrix part + derivative part."""

    space: TensorSpace
    zetas: list
    h: list
    ctx: EllipticContext
    level: float

    def __post_init__(self):
        if len(set((round(z.real, 12), round(z.imag, 12))
                   for z in map(complex, self.zetas))) != len(self.zetas):
            raise DomainError("evaluation points must be distinct")
        _check_cartan(self.space.n, self.h)

    def r_sum(self, i: int, zetas=None, h=None) -> np.ndarray:
        zetas = self.zetas if zetas is None else zetas
        h = self.h if h is None else h
        total = np.zeros((self.space.total_dim, self.space.total_dim),
                         dtype=complex)
        for j in range(len(zetas)):
            if j != i:
                total += r_matrix(self.space, i, j, zetas[i] - zetas[j],
                                  h, self.ctx)
        return total

    def r_sum_h_deriv(self, i: int, xvec, zetas=None) -> np.ndarray:
        zetas = self.zetas if zetas is None else zetas
        total = np.zeros((self.space.total_dim, self.space.total_dim),
                         dtype=complex)
        for j in range(len(zetas)):
            if j != i:
                total += r_matrix_h_deriv(self.space, i, j,
                                          zetas[i] - zetas[j], self.h,
                                          xvec, self.ctx)
        return total

    def derivative_mats(self, i: int) -> list:
        """pi_i(x_l) for each orthonormal Cartan direction, embedded."""
        return [self.space.embed(i, x)
                for x in self.space.reps[i].cartan_basis()]


def kz_connection(zetas, h, ctx: EllipticContext, level: float, n: int,
                  reps=None) -> Connection:
    """Assemble the connection data for the given points and weights."""
    if reps is None:
        reps = [n] * len(zetas)
    space = TensorSpace(n, [Rep(n, d) for d in reps])
    return Connection(space, [complex(z) for z in zetas], list(h), ctx,
                      float(level))


def flatness_residual(conn: Connection, i: int, j: int, nu,
                      fd_step: float = 1e-4) -> float:
    """Max relative residual of the commutator of covariant derivatives
    at points i, j on the zero-weight block, probed with plane-wave
    sections exp(2 pi i <nu, h>) v.

    Writing sections as (matrix) * (plane wave), one covariant step maps
    the matrix factor M to

        kappa dM/dz_i - R_i M + 2 pi i sum_l pi_i(x_l)(del_l M + nu_l M),

    where del_l M is the normalized Cartan derivative of M.  Everything
    is analytic except dR/dz, which uses central differences; the
    residual therefore scales like fd_step^2.
    """
    space = conn.space
    kappa = conn.level + space.n  # level + dual Coxeter number
    dirs = _cartan_directions(space.n)
    nu_pair = [sum(nu[c] * d[c] for c in range(space.n)) for d in dirs]

    def second_step(outer: int, inner: int) -> np.ndarray:
        # matrix factor of D_outer D_inner (plane-wave section)
        b0 = -conn.r_sum(inner) + TWO_PI_I * sum(
            nu_pair[l] * dm
            for l, dm in enumerate(conn.derivative_mats(inner)))
        zp = list(conn.zetas)
        zm = list(conn.zetas)
        zp[outer] += fd_step
        zm[outer] -= fd_step
        db_dz = -(conn.r_sum(inner, zetas=zp)
                  - conn.r_sum(inner, zetas=zm)) / (2 * fd_step)
        db_dh = [-conn.r_sum_h_deriv(inner, d) for d in dirs]
        out = kappa * db_dz - conn.r_sum(outer) @ b0
        for l, dm in enumerate(conn.derivative_mats(outer)):
            out += TWO_PI_I * dm @ (db_dh[l] + nu_pair[l] * b0)
        return out

    dij = second_step(i, j)
    dji = second_step(j, i)
    block = space.zero_block(dij - dji)
    scale = max(float(np.max(np.abs(space.zero_block(dij)))), 1.0)
    return float(np.max(np.abs(block)) / scale)


def weight_block_residual(conn: Connection) -> float:
    """How far the matrix parts stray from preserving the weight
    grading; structurally zero."""
    res = 0.0
    for i in range(len(conn.zetas)):
        res = max(res, conn.space.weight_preservation_residual(
            conn.r_sum(i)))
    return res


def psi_gauge(space: TensorSpace, zetas, h, ctx: EllipticContext) \
        -> np.ndarray:
    """Diagonal gauge factor: product over point pairs i < j of
    theta1(z_i - z_j + (w_i - w_j)/m) / theta1(z_i - z_j), where w_i is
    the slot-i weight pairing with h and m is the number of points."""
    _check_cartan(space.n, h)
    m = len(zetas)
    diag = np.ones(space.total_dim, dtype=complex)
    for i in range(m):
        wi = space.slot_weight_pairing(i, h)
        for j in range(i + 1, m):
            wj = space.slot_weight_pairing(j, h)
            dz = zetas[i] - zetas[j]
            den = theta1(dz, ctx)
            for flat in range(space.total_dim):
                num = theta1(dz + (wi[flat] - wj[flat]) / m, ctx)
                diag[flat] *= num / den
    return np.diag(diag)


def residue_at_zero(space: TensorSpace, si: int, sj: int, h,
                    ctx: EllipticContext, radius: float = 1e-2,
                    nodes: int = 64) -> np.ndarray:
    """Laurent residue of the two-site kernel by circular quadrature."""
    total = np.zeros((space.total_dim, space.total_dim), dtype=complex)
    for a in range(nodes):
        z = radius * cmath.exp(TWO_PI_I * a / nodes)
        total += r_matrix(space, si, sj, z, h, ctx) * z
    return total / nodes
