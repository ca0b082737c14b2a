"""Numerical semigroup rings as exact integer-set arithmetic.

A monomial ideal of k[[t^S]] is determined by the set of exponents it
contains, which is an ideal of the numerical semigroup S: a set closed under
adding elements of S.  Such a set is canonically represented by the minimal
exponent it reaches in every residue class modulo the multiplicity, so
products, intersections, memberships and lengths are all small integer
computations and every verdict is exact.
"""

from __future__ import annotations

from math import gcd

from .reports import AuditRow, StandardnessReport


class NumericalSemigroup:
    """Additive submonoid of the nonnegative integers with finite complement."""

    def __init__(self, generators):
        gens = sorted(set(int(g) for g in generators))
        if not gens or gens[0] < 1:
            raise ValueError("generators must be positive integers")
        g = 0
        for a in gens:
            g = gcd(g, a)
        if g != 1:
            raise ValueError("generators %r have gcd %d > 1; the semigroup "
                             "ring would not be of the supported shape"
                             % (gens, g))
        self.generators = tuple(gens)
        self.multiplicity = gens[0]
        self.apery = self._apery()
        self.frobenius = max(self.apery) - self.multiplicity

    def _apery(self):
        """Least semigroup element in each residue class mod the multiplicity,
        by Dijkstra-style relaxation over residue classes."""
        m = self.multiplicity
        ap = [None] * m
        ap[0] = 0
        import heapq
        heap = [(0, 0)]
        while heap:
            val, r = heapq.heappop(heap)
            if ap[r] is not None and val > ap[r]:
                continue
            for g in self.generators:
                nval = val + g
                nr = nval % m
                if ap[nr] is None or nval < ap[nr]:
                    ap[nr] = nval
                    heapq.heappush(heap, (nval, nr))
        return tuple(ap)

    def contains(self, n: int) -> bool:
        if n < 0:
            return False
        return n >= self.apery[n % self.multiplicity]

    def gaps(self):
        return tuple(n for n in range(max(self.frobenius + 1, 0))
                     if not self.contains(n))

    def maximal_ideal(self) -> "SemigroupIdeal":
        return SemigroupIdeal.generated(self, self.generators)

    def unit_ideal(self) -> "SemigroupIdeal":
        return SemigroupIdeal.generated(self, (0,))

    def principal(self, offset: int) -> "SemigroupIdeal":
        if not self.contains(offset):
            raise ValueError("offset %d is not a semigroup element" % offset)
        return SemigroupIdeal.generated(self, (offset,))

    def __repr__(self):
        return "NumericalSemigroup<%s>" % ",".join(map(str, self.generators))

    def __eq__(self, other):
        return (isinstance(other, NumericalSemigroup)
                and self.generators == other.generators)

    def __hash__(self):
        return hash(self.generators)


class SemigroupIdeal:
    """Monomial ideal of the semigroup ring: minimal exponent per residue
    class mod the multiplicity (the class minima determine the whole set)."""

    __slots__ = ("semigroup", "minima")

    def __init__(self, semigroup, minima):
        self.semigroup = semigroup
        self.minima = tuple(minima)

    @classmethod
    def generated(cls, semigroup, offsets):
        offsets = sorted(set(int(o) for o in offsets))
        if not offsets:
            raise ValueError("need at least one generator offset")
        m = semigroup.multiplicity
        ap = semigroup.apery
        minima = [None] * m
        for r in range(m):
            best = None
            for e in offsets:
                cand = e + ap[(r - e) % m]
                if best is None or cand < best:
                    best = cand
            minima[r] = best
        return cls(semigroup, minima)

    def _check(self, other):
        if self.semigroup != other.semigroup:
            raise ValueError("ideals over different semigroups")

    def contains(self, n: int) -> bool:
        if n < 0:
            return False
        return n >= self.minima[n % self.semigroup.multiplicity]

    def contains_ideal(self, other) -> bool:
        self._check(other)
        return all(o >= s for s, o in zip(self.minima, other.minima))

    def product(self, other) -> "SemigroupIdeal":
        self._check(other)
        offsets = {a + b for a in self.minima for b in other.minima}
        return SemigroupIdeal.generated(self.semigroup, offsets)

    def intersect(self, other) -> "SemigroupIdeal":
        self._check(other)
        return SemigroupIdeal(self.semigroup,
                              (max(a, b) for a, b in zip(self.minima,
                                                         other.minima)))

    def power(self, k: int) -> "SemigroupIdeal":
        if k < 0:
            raise ValueError("negative power")
        out = self.semigroup.unit_ideal()
        for _ in range(k):
            out = out.product(self)
        return out

    def __eq__(self, other):
        return (isinstance(other, SemigroupIdeal)
                and self.semigroup == other.semigroup
                and self.minima == other.minima)

    def __hash__(self):
        return hash((self.semigroup, self.minima))

    def __repr__(self):
        return "SemigroupIdeal(min %s)" % (self.minima,)


def sg_member(n: int, ideal: SemigroupIdeal) -> bool:
    return ideal.contains(n)


def sg_length(a: SemigroupIdeal, b: SemigroupIdeal) -> int:
    """Length of a/b; requires b <= a."""
    if not a.contains_ideal(b):
        raise ValueError("second ideal is not contained in the first")
    m = a.semigroup.multiplicity
    return sum((bb - aa) // m for aa, bb in zip(a.minima, b.minima))


def sg_standardness(semigroup: NumericalSemigroup, j_offset: int,
                    n: int) -> StandardnessReport:
    """Per-k comparison of J∩m^k against J·m^{k-1} for J = (t^j_offset)."""
    J = semigroup.principal(j_offset)
    mx = semigroup.maximal_ideal()
    rows = []
    first_fail = None
    witness = None
    power = semigroup.unit_ideal()
    for k in range(1, n + 1):
        prev_power = power
        power = power.product(mx)           # m^k
        meet = J.intersect(power)
        prod = J.product(prev_power)        # J m^{k-1}
        equal = meet == prod
        rows.append((k, equal))
        if not equal and first_fail is None:
            first_fail = k
            witness = min(e for s, e in zip(prod.minima, meet.minima) if e < s)
    return StandardnessReport(rows=tuple(rows), first_failing_k=first_fail,
                              witness="t^%d" % witness if witness is not None
                              else None, n=n, forced=False,
                              reduction_label="t^%d" % j_offset)


def reduction_number(semigroup: NumericalSemigroup, j_offset: int,
                     bound: int = 12):
    """Least r with J m^r = m^{r+1}, or None within the bound."""
    J = semigroup.principal(j_offset)
    mx = semigroup.maximal_ideal()
    power = semigroup.unit_ideal()
    for r in range(bound + 1):
        nxt = power.product(mx)
        if J.product(power) == nxt:
            return r
        power = nxt
    return None


def dimension_one_audit(semigroup: NumericalSemigroup, j_offset: int,
                        upto: int):
    """Rows (k, length of m^{k+1}/J m^k, multiplicity - length of
    m^k/m^{k+1}, match); in dimension one the two always agree."""
    J = semigroup.principal(j_offset)
    mx = semigroup.maximal_ideal()
    e0 = sg_length(semigroup.unit_ideal(), J)
    rows = []
    power = semigroup.unit_ideal()
    for k in range(0, upto + 1):
        nxt = power.product(mx)             # m^{k+1}
        lhs = sg_length(nxt, J.product(power))
        rhs = e0 - sg_length(power, nxt)
        rows.append(AuditRow(k, lhs, rhs))
        power = nxt
    return tuple(rows)
