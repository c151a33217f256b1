"""Root system, weight lattice and Weyl group data for type A.

Weights live in the trace-zero hyperplane of Q^n, stored as tuples of
exact ``Fraction`` coordinates with denominators dividing n; the pairing
is the restriction of the standard dot product.  The affine layer adds a
level and an exact delta-coefficient on top of a finite weight.

Only orbit generation is ever exposed (permutations for the finite group,
explicit coroot translations for the affine one); group elements are never
materialized.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .errors import DomainError, InvalidRankError

Weight = tuple  # of Fraction, length n, summing to 0


def weight(coords) -> Weight:
    w = tuple(Fraction(c) for c in coords)
    if sum(w) != 0:
        raise DomainError("weight coordinates must sum to zero: %r"
                          % (coords,))
    return w


def from_partition(parts, n: int) -> Weight:
    """Project an integer gl-weight (e.g. a partition) to the trace-zero
    hyperplane by subtracting the mean from each coordinate."""
    parts = list(parts) + [0] * (n - len(parts))
    if len(parts) != n:
        raise DomainError("more parts than variables")
    mean = Fraction(sum(parts), n)
    return tuple(Fraction(p) - mean for p in parts)


def pairing(a: Weight, b: Weight) -> Fraction:
    return sum(x * y for x, y in zip(a, b))


def w_add(a: Weight, b: Weight) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def w_sub(a: Weight, b: Weight) -> Weight:
    return tuple(x - y for x, y in zip(a, b))


def w_neg(a: Weight) -> Weight:
    return tuple(-x for x in a)


def w_scale(c, a: Weight) -> Weight:
    c = Fraction(c)
    return tuple(c * x for x in a)


class RootData:
    """Immutable description of the A_(n-1) root system.

    Instances are interned per n, so object identity doubles as equality
    and elements created by independent call sites interoperate.
    """

    _intern: dict = {}

    def __new__(cls, n: int):
        inst = cls._intern.get(n)
        if inst is None:
            inst = super().__new__(cls)
            cls._intern[n] = inst
        return inst

    def __init__(self, n: int):
        if getattr(self, "_ready", False):
            return
        if n < 2:
            raise InvalidRankError("rank data needs n >= 2, got n=%d" % n)
        self._ready = True
        self.n = n
        self.rank = n - 1
        self.zero = (Fraction(0),) * n
        self.positive_roots = tuple(
            tuple(Fraction(1) if k == i else Fraction(-1) if k == j
                  else Fraction(0) for k in range(n))
            for i in range(n) for j in range(i + 1, n))
        self.simple_roots = tuple(
            self.positive_roots[self._root_index(i, i + 1)]
            for i in range(n - 1))
        self.rho = tuple(Fraction(n - 1 - 2 * i, 2) for i in range(n))
        self.highest_root = self.positive_roots[self._root_index(0, n - 1)]
        # all roots are long: theta-coroot = theta, so h-check below is exact
        self.dual_coxeter = int(pairing(self.rho, self.highest_root)) + 1
        self.fundamental_weights = tuple(
            tuple(Fraction(n - i, n) if k < i else Fraction(-i, n)
                  for k in range(n))
            for i in range(1, n))

    def _root_index(self, i: int, j: int) -> int:
        # position of e_i - e_j (i < j) in the generation order above
        return sum(self.n - 1 - a for a in range(i)) + (j - i - 1)

    def __repr__(self):
        return "RootData(A%d)" % self.rank

    # -- lattice membership -------------------------------------------------

    def in_weight_lattice(self, lam: Weight) -> bool:
        if sum(lam) != 0:
            return False
        base = lam[0]
        return all((c - base).denominator == 1 for c in lam) and \
            (self.n * base).denominator == 1

    def in_root_lattice(self, lam: Weight) -> bool:
        return sum(lam) == 0 and all(c.denominator == 1 for c in lam)

    def is_dominant(self, lam: Weight) -> bool:
        return all(lam[i] >= lam[i + 1] for i in range(self.n - 1))

    def dominates(self, lam: Weight, mu: Weight) -> bool:
        """lam >= mu in the dominance (positive-root-cone) order."""
        diff = w_sub(lam, mu)
        if not self.in_root_lattice(diff):
            return False
        partial = Fraction(0)
        for c in diff[:-1]:
            partial += c
            if partial < 0:
                return False
        return True

    # -- Weyl group ----------------------------------------------------------

    def weyl_orbit(self, lam: Weight) -> set:
        if not self.in_weight_lattice(lam):
            raise DomainError("weight is not in the lattice: %r" % (lam,))
        return {tuple(perm) for perm in permutations(lam)}

    def weyl_orbit_signed(self, lam: Weight):
        """(w(lam), sign(w)) over all permutations; repeated weights keep
        every signed occurrence (used for alternating sums)."""
        n = self.n
        for perm in permutations(range(n)):
            sign = _perm_sign(perm)
            yield tuple(lam[p] for p in perm), sign

    def dominant_representative(self, lam: Weight) -> Weight:
        return tuple(sorted(lam, reverse=True))

    def reflect_simple(self, i: int, lam: Weight) -> Weight:
        """Reflection in the i-th simple root (swap of coordinates i, i+1)."""
        out = list(lam)
        out[i], out[i + 1] = out[i + 1], out[i]
        return tuple(out)

    # -- dominance enumeration ----------------------------------------------

    def dominant_below(self, lam: Weight):
        """All dominant mu <= lam, linearly ordered so that any weight comes
        before everything strictly below it; lam itself is first."""
        if not self.is_dominant(lam):
            raise DomainError("dominant_below needs a dominant weight")
        if not self.in_weight_lattice(lam):
            raise DomainError("weight is not in the lattice: %r" % (lam,))
        shift = lam[-1]
        parts = [c - shift for c in lam]  # nonneg, integers, descending
        found = []
        self._descend(tuple(int(p) for p in parts), set(), found)
        out = [tuple(Fraction(p) + shift for p in f) for f in found]
        out.sort(key=lambda mu: (pairing(w_sub(lam, mu), self.rho), mu))
        return out

    def _descend(self, parts, seen, found):
        if parts in seen:
            return
        seen.add(parts)
        found.append(parts)
        n = len(parts)
        # moving a unit from i to j > i keeps the sum and lowers dominance
        for i in range(n):
            for j in range(i + 1, n):
                cand = list(parts)
                cand[i] -= 1
                cand[j] += 1
                if all(cand[k] >= cand[k + 1] for k in range(n - 1)) and \
                        cand[-1] >= 0:
                    self._descend(tuple(cand), seen, found)


def _perm_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, clen = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            clen += 1
        if clen % 2 == 0:
            sign = -sign
    return sign


# -- affine layer -----------------------------------------------------------

@dataclass(frozen=True)
class AffineWeight:
    """finite + level * Lambda_0 + delta_coeff * delta."""

    finite: Weight
    level: int
    delta_coeff: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "delta_coeff", Fraction(self.delta_coeff))


def aff_pairing(rd: RootData, a: AffineWeight, b: AffineWeight) -> Fraction:
    """Standard extension of the finite form: (Lambda_0, delta) = 1 and
    Lambda_0, delta are isotropic and orthogonal to the finite part."""
    return pairing(a.finite, b.finite) + a.level * b.delta_coeff \
        + b.level * a.delta_coeff


def affine_rho(rd: RootData) -> AffineWeight:
    return AffineWeight(rd.rho, rd.dual_coxeter)


def affine_reflect_translate(rd: RootData, w: AffineWeight,
                             coroot: Weight) -> AffineWeight:
    """Translation part of the affine Weyl group action at level K:

        w -> w + K*b - (<w, b> + K*(b,b)/2) * delta,   b in the coroot
        lattice (= root lattice in type A).
    """
    if not rd.in_root_lattice(coroot):
        raise DomainError("translations need a coroot-lattice vector")
    k = w.level
    shift = pairing(w.finite, coroot) + Fraction(k) * pairing(coroot, coroot) / 2
    return AffineWeight(w_add(w.finite, w_scale(k, coroot)), k,
                        w.delta_coeff - shift)


def level_dominants(rd: RootData, level: int):
    """Dominant finite weights lam with (lam, theta) <= level, i.e. the
    classifying set for level-`level` orbits; enumerated by fundamental-
    weight coordinates (every (omega_i, theta) = 1 in type A)."""
    if level < 0:
        raise DomainError("negative level")
    out = []

    def rec(i, budget, acc):
        if i == rd.rank:
            out.append(acc)
            return
        for a in range(budget + 1):
            rec(i + 1, budget - a,
                w_add(acc, w_scale(a, rd.fundamental_weights[i])))
    rec(0, level, rd.zero)
    return sorted(out, key=lambda w: (-pairing(w, rd.rho), w))
