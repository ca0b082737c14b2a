"""Buchberger Groebner bases and the ideal calculus built on them.

Ideals are presented by generator lists inside a named polynomial ring and
cache one reduced Groebner basis per monomial order.  Pair selection uses the
normal strategy (least lcm in the order, degree first) and the update step
keeps the pair set small with the coprime-lcm and chain criteria.  A degree
guard aborts runs whose S-polynomial remainders climb past a configurable
total degree instead of hanging.
"""

from __future__ import annotations

from .polycore import (GREVLEX, MonomialOrder, Polynomial, PolynomialRing,
                       RingMismatchError, mono_div, mono_divides, mono_lcm,
                       mono_mul)

DEGREE_GUARD = 64


class DegreeGuardExceeded(RuntimeError):
    def __init__(self, degree, guard, npairs, basis_size):
        super().__init__(
            "S-polynomial remainder of total degree %d exceeds guard %d "
            "(%d pairs pending, basis size %d)" % (degree, guard, npairs, basis_size))
        self.degree = degree
        self.guard = guard


def _normalize(f: Polynomial, order: MonomialOrder) -> Polynomial:
    """Monic over prime fields; primitive integer form, positive lead, over QQ."""
    if f.is_zero():
        return f
    if f.ring.field.p is not None:
        return f.monic(order)
    terms = f.terms()
    from math import gcd
    den = 1
    for c in terms.values():
        den = den * c.denominator // gcd(den, c.denominator)
    num = 0
    for c in terms.values():
        num = gcd(num, c.numerator * den // c.denominator)
    g = f.scale(f.ring.field.from_fraction(den, num))
    if g.leading(order)[1] < 0:
        g = -g
    return g


def division(f: Polynomial, divisors, order: MonomialOrder = GREVLEX):
    """Multivariate division: returns (quotients, remainder) with
    f = sum(q_i * g_i) + r and no remainder term divisible by any lead."""
    ring = f.ring
    field = ring.field
    leads = [g.leading(order) for g in divisors]
    quots = [dict() for _ in divisors]
    rem = {}
    work = dict(f.terms())
    while work:
        m = max(work, key=order.key)
        c = work.pop(m)
        for i, (lm, lc) in enumerate(leads):
            if mono_divides(lm, m):
                shift = mono_div(m, lm)
                factor = field.div(c, lc)
                q = quots[i]
                q[shift] = field.add(q.get(shift, field.zero()), factor)
                if not q[shift]:
                    del q[shift]
                for gm, gc in divisors[i].terms().items():
                    if gm == lm:
                        continue
                    key = mono_mul(gm, shift)
                    v = field.sub(work.get(key, field.zero()), field.mul(factor, gc))
                    if v:
                        work[key] = v
                    else:
                        work.pop(key, None)
                break
        else:
            rem[m] = c
    return ([Polynomial(ring, q) for q in quots], Polynomial(ring, rem))


def reduce_poly(f: Polynomial, divisors, order: MonomialOrder = GREVLEX) -> Polynomial:
    """Remainder of f on division by the list of divisors."""
    ring = f.ring
    field = ring.field
    leads = [g.leading(order) for g in divisors]
    rem = {}
    work = dict(f.terms())
    while work:
        m = max(work, key=order.key)
        c = work.pop(m)
        for (lm, lc), g in zip(leads, divisors):
            if mono_divides(lm, m):
                shift = mono_div(m, lm)
                factor = field.div(c, lc)
                for gm, gc in g.terms().items():
                    if gm == lm:
                        continue
                    key = mono_mul(gm, shift)
                    v = field.sub(work.get(key, field.zero()), field.mul(factor, gc))
                    if v:
                        work[key] = v
                    else:
                        work.pop(key, None)
                break
        else:
            rem[m] = c
    return Polynomial(ring, rem)


def _spoly(f, g, lmf, lmg, order):
    field = f.ring.field
    lcm = mono_lcm(lmf, lmg)
    a = f.mul_monomial(mono_div(lcm, lmf), field.inv(f.terms()[lmf]))
    b = g.mul_monomial(mono_div(lcm, lmg), field.inv(g.terms()[lmg]))
    return a - b


def _update(G, lmG, P, f, order):
    """Add f to the basis, pruning pairs by the coprime and chain criteria."""
    lmf = f.leading(order)[0]
    t = len(G)

    def lcm(i):
        return mono_lcm(lmG[i], lmf)

    # chain criterion against existing pairs
    P = {(i, j) for (i, j) in P
         if (not mono_divides(lmf, mono_lcm(lmG[i], lmG[j]))
             or mono_lcm(lmG[i], lmG[j]) == lcm(i)
             or mono_lcm(lmG[i], lmG[j]) == lcm(j))}

    by_lcm = {}
    for i in range(t):
        by_lcm.setdefault(lcm(i), []).append(i)
    minimal = []
    for L in sorted(by_lcm, key=order.key):
        if all(not mono_divides(M, L) for M in minimal):
            minimal.append(L)
    new_pairs = set()
    for L in minimal:
        # coprime-lcm criterion: skip when lcm is the plain product
        if not any(mono_lcm(lmG[i], lmf) == mono_mul(lmG[i], lmf)
                   for i in by_lcm[L]):
            new_pairs.add((min(by_lcm[L]), t))
    G.append(f)
    lmG.append(lmf)
    return P | new_pairs


def _buchberger_raw(gens, order, degree_guard):
    G, lmG, P = [], [], set()
    for f in gens:
        if not f.is_zero():
            P = _update(G, lmG, P, _normalize(f, order), order)
    while P:
        pair = min(P, key=lambda p: (sum(mono_lcm(lmG[p[0]], lmG[p[1]])),
                                     order.key(mono_lcm(lmG[p[0]], lmG[p[1]])),
                                     p))
        P.discard(pair)
        i, j = pair
        s = _spoly(G[i], G[j], lmG[i], lmG[j], order)
        r = reduce_poly(s, G, order)
        if r.is_zero():
            continue
        if r.total_degree() > degree_guard:
            raise DegreeGuardExceeded(r.total_degree(), degree_guard, len(P), len(G))
        P = _update(G, lmG, P, _normalize(r, order), order)
    return G


def _reduced_basis(G, order):
    """Minimalize, interreduce, make monic, sort by leading monomial."""
    G = [g for g in G if not g.is_zero()]
    G.sort(key=lambda g: order.key(g.leading(order)[0]))
    minimal = []
    for g in G:
        lm = g.leading(order)[0]
        if not any(mono_divides(h.leading(order)[0], lm) for h in minimal):
            minimal.append(g)
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        r = reduce_poly(g, others, order) if others else g
        if not r.is_zero():
            reduced.append(r.monic(order))
    reduced.sort(key=lambda g: order.key(g.leading(order)[0]), reverse=True)
    return tuple(reduced)


class Ideal:
    """An ideal presented by generators, with cached reduced Groebner bases."""

    __slots__ = ("ring", "gens", "_gb")

    def __init__(self, ring: PolynomialRing, gens):
        self.ring = ring
        cleaned = []
        for g in gens:
            if isinstance(g, int):
                g = ring.constant(g)
            if g.ring != ring:
                raise RingMismatchError("generator outside the ambient ring")
            if not g.is_zero():
                cleaned.append(g)
        self.gens = tuple(cleaned)
        self._gb = {}

    def groebner_basis(self, order: MonomialOrder = GREVLEX,
                       degree_guard: int = DEGREE_GUARD):
        if order not in self._gb:
            raw = _buchberger_raw(list(self.gens), order, degree_guard)
            self._gb[order] = _reduced_basis(raw, order)
        return self._gb[order]

    def normal_form(self, f: Polynomial, order: MonomialOrder = GREVLEX) -> Polynomial:
        if f.ring != self.ring:
            raise RingMismatchError("polynomial outside the ambient ring")
        basis = self.groebner_basis(order)
        return reduce_poly(f, list(basis), order) if basis else f

    def contains(self, f: Polynomial, order: MonomialOrder = GREVLEX) -> bool:
        return self.normal_form(f, order).is_zero()

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.gens)

    def equals(self, other: "Ideal") -> bool:
        if self.ring != other.ring:
            raise RingMismatchError("ideals in different rings")
        return self.contains_ideal(other) and other.contains_ideal(self)

    def is_zero(self) -> bool:
        return not self.groebner_basis()

    def is_unit(self) -> bool:
        gb = self.groebner_basis()
        return len(gb) == 1 and gb[0].total_degree() == 0

    def leading_monomials(self, order: MonomialOrder = GREVLEX):
        return tuple(g.leading(order)[0] for g in self.groebner_basis(order))

    # -- calculus -----------------------------------------------------------

    def __add__(self, other):
        self._check(other)
        return Ideal(self.ring, self.gens + other.gens)

    def __mul__(self, other):
        self._check(other)
        if not self.gens or not other.gens:
            return Ideal(self.ring, ())
        gens = [f * g for f in self.gens for g in other.gens]
        return Ideal(self.ring, _minimalize_monomial_gens(gens))

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative ideal power")
        if k == 0:
            return Ideal(self.ring, (self.ring.one(),))
        from itertools import combinations_with_replacement
        gens = []
        for combo in combinations_with_replacement(self.gens, k):
            p = combo[0]
            for f in combo[1:]:
                p = p * f
            gens.append(p)
        return Ideal(self.ring, _minimalize_monomial_gens(gens))

    def intersect(self, other: "Ideal") -> "Ideal":
        """Exact intersection: eliminate t from t*I + (1-t)*J."""
        self._check(other)
        if not self.gens:
            return Ideal(self.ring, ())
        if not other.gens:
            return Ideal(self.ring, ())
        ring = self.ring
        aux = PolynomialRing(ring.field, ("#t",) + ring.names)
        t = aux.gen(0)
        one = aux.one()
        lifted = [t * _lift(g, aux) for g in self.gens]
        lifted += [(one - t) * _lift(g, aux) for g in other.gens]
        order = MonomialOrder.elimination((0,))
        basis = Ideal(aux, lifted).groebner_basis(order)
        kept = [_drop(g, ring) for g in basis if _t_free(g)]
        return Ideal(ring, kept)

    def quotient(self, other: "Ideal") -> "Ideal":
        """Colon ideal (self : other), intersecting single-generator colons."""
        self._check(other)
        if not other.gens:
            return Ideal(self.ring, (self.ring.one(),))
        out = None
        for g in other.gens:
            single = self._colon_single(g)
            out = single if out is None else out.intersect(single)
        return out

    def _colon_single(self, g: Polynomial) -> "Ideal":
        meet = self.intersect(Ideal(self.ring, (g,)))
        gens = []
        for h in meet.groebner_basis():
            quots, rem = division(h, [g])
            if not rem.is_zero():
                raise ArithmeticError("inexact division in colon computation")
            gens.append(quots[0])
        return Ideal(self.ring, gens)

    def eliminate(self, var_indices) -> "Ideal":
        """Intersection with the subring omitting the given variables."""
        block = tuple(sorted(set(var_indices)))
        if any(i < 0 or i >= self.ring.nvars for i in block):
            raise ValueError("variable index out of range")
        if not block:
            return self
        order = MonomialOrder.elimination(block)
        basis = self.groebner_basis(order)
        kept = [g for g in basis
                if all(all(m[i] == 0 for i in block) for m in g.terms())]
        return Ideal(self.ring, kept)

    def _check(self, other):
        if not isinstance(other, Ideal) or self.ring != other.ring:
            raise RingMismatchError("ideals in different rings")

    def __repr__(self):
        inside = ", ".join(str(g) for g in self.gens) or "0"
        return "Ideal(%s)" % inside


def _lift(f: Polynomial, aux: PolynomialRing) -> Polynomial:
    return Polynomial(aux, {(0,) + m: c for m, c in f.terms().items()})


def _drop(f: Polynomial, ring: PolynomialRing) -> Polynomial:
    return Polynomial(ring, {m[1:]: c for m, c in f.terms().items()})


def _t_free(f: Polynomial) -> bool:
    return all(m[0] == 0 for m in f.terms())


def _minimalize_monomial_gens(gens):
    """When every generator is a monomial, drop the divisible ones."""
    monos = []
    for g in gens:
        if len(g.terms()) != 1:
            return gens
        monos.append(next(iter(g.terms())))
    ring = gens[0].ring
    return [ring.monomial(m) for m in minimal_monomials(monos)]


def minimal_monomials(monos):
    """Minimal elements of a set of exponent tuples under divisibility."""
    uniq = sorted(set(monos))
    out = []
    for m in uniq:
        if not any(u != m and mono_divides(u, m) for u in uniq):
            out.append(m)
    return out


# -- module-level operation facade ------------------------------------------

def buchberger(gens, order: MonomialOrder = GREVLEX,
               degree_guard: int = DEGREE_GUARD) -> Ideal:
    """Ideal with its reduced Groebner basis computed for the given order."""
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator (possibly zero)")
    ideal = Ideal(gens[0].ring, gens)
    ideal.groebner_basis(order, degree_guard)
    return ideal


def normal_form(f: Polynomial, ideal: Ideal,
                order: MonomialOrder = GREVLEX) -> Polynomial:
    return ideal.normal_form(f, order)


def ideal_member(f: Polynomial, ideal: Ideal) -> bool:
    return ideal.contains(f)


def ideal_equal(a: Ideal, b: Ideal) -> bool:
    return a.equals(b)


def ideal_sum(a: Ideal, b: Ideal) -> Ideal:
    return a + b


def ideal_product(a: Ideal, b: Ideal) -> Ideal:
    return a * b


def ideal_power(a: Ideal, k: int) -> Ideal:
    return a ** k


def ideal_intersect(a: Ideal, b: Ideal) -> Ideal:
    return a.intersect(b)


def ideal_quotient(a: Ideal, b: Ideal) -> Ideal:
    return a.quotient(b)


def eliminate(a: Ideal, var_indices) -> Ideal:
    return a.eliminate(var_indices)
