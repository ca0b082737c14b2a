"""Standard graded quotient algebras, lengths, lowest-form construction, and
admissible filtrations.

Lengths of Artinian quotients are standard-monomial counts read off a reduced
Groebner basis; the quotient is cofinite exactly when the leading-term ideal
contains a pure power of every variable, and that criterion is what the
counter checks before enumerating the finite staircase box.

Local data is represented globally: every ideal of the local ring at the
origin is presented by polynomial generators in the ambient ring (plus an
optional modulus for quotient rings).  This decides the same equalities,
because both sides of every tested equality are primary to the maximal ideal
and all other localizations are unit ideals.
"""

from __future__ import annotations

import itertools

from .groebner import GREVLEX, Ideal, minimal_monomials, reduce_poly
from .linalg import LinearSolver
from .polycore import (MonomialOrder, Polynomial, PolynomialRing,
                       mono_divides, mono_mul)


class NotCofiniteError(ValueError):
    pass


class DegreeWindowError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Staircase counting.

def _pure_power_bounds(lead_monomials, nvars):
    bounds = [None] * nvars
    for m in lead_monomials:
        support = [i for i, e in enumerate(m) if e]
        if len(support) == 1:
            i = support[0]
            if bounds[i] is None or m[i] < bounds[i]:
                bounds[i] = m[i]
    return bounds


def standard_monomials(ideal: Ideal, order: MonomialOrder = GREVLEX):
    """All monomials outside the leading-term ideal; requires cofiniteness."""
    ring = ideal.ring
    leads = ideal.leading_monomials(order)
    if any(sum(m) == 0 for m in leads):
        return ()
    bounds = _pure_power_bounds(leads, ring.nvars)
    if any(b is None for b in bounds):
        missing = [ring.names[i] for i, b in enumerate(bounds) if b is None]
        raise NotCofiniteError(
            "no pure power of %s in the leading-term ideal; quotient has "
            "infinite length" % ", ".join(missing))
    out = []
    for exps in itertools.product(*(range(b) for b in bounds)):
        if not any(mono_divides(m, exps) for m in leads):
            out.append(exps)
    out.sort(key=order.key)
    return tuple(out)


def colength(ideal: Ideal) -> int:
    """Length of R/I as a standard-monomial count (I cofinite)."""
    return len(standard_monomials(ideal))


def length_quotient(a: Ideal, b: Ideal) -> int:
    """Length of a/b for nested cofinite ideals b <= a."""
    if a.ring != b.ring:
        raise ValueError("ideals in different rings")
    if not a.contains_ideal(b):
        raise ValueError("second ideal is not contained in the first")
    return colength(b) - colength(a)


# ---------------------------------------------------------------------------
# Graded algebras k[x]/I with I homogeneous.

class GradedAlgebra:
    """A standard graded quotient of a polynomial ring by a homogeneous ideal.

    ``basis(d)`` returns the degree-d standard monomials, which form a
    k-basis of the degree-d piece.  An optional ``max_degree`` marks algebras
    that were only constructed faithfully up to a degree bound.
    """

    def __init__(self, ring: PolynomialRing, defining: Ideal, max_degree=None):
        if defining.ring != ring:
            raise ValueError("defining ideal lives in a different ring")
        for g in defining.gens:
            if not g.is_homogeneous():
                raise ValueError("defining generator %s is not homogeneous" % g)
        self.ring = ring
        self.defining = defining
        self.max_degree = max_degree
        self._basis = {}
        self._leads = None
        self._dim = None

    def check_degree(self, d: int) -> None:
        if self.max_degree is not None and d > self.max_degree:
            raise DegreeWindowError(
                "degree %d beyond the construction window %d" % (d, self.max_degree))

    def basis(self, d: int):
        if d < 0:
            return ()
        self.check_degree(d)
        if d not in self._basis:
            if self._leads is None:
                self._leads = self.defining.leading_monomials()
            leads = self._leads
            out = [m for m in _monomials_of_degree(self.ring.nvars, d)
                   if not any(mono_divides(l, m) for l in leads)]
            out.sort(key=GREVLEX.key, reverse=True)
            self._basis[d] = tuple(out)
        return self._basis[d]

    def piece_dim(self, d: int) -> int:
        return len(self.basis(d))

    def nf(self, f: Polynomial) -> Polynomial:
        return self.defining.normal_form(f)

    def multiply(self, f: Polynomial, g: Polynomial) -> Polynomial:
        return self.nf(f * g)

    def is_zero_element(self, f: Polynomial) -> bool:
        return self.nf(f).is_zero()

    def coords(self, f: Polynomial, d: int) -> dict:
        """Coordinates of a degree-d element in the basis(d) monomials."""
        nf = self.nf(f)
        if nf.is_zero():
            return {}
        if nf.homogeneous_degree() != d:
            raise ValueError("element is not homogeneous of degree %d" % d)
        index = {m: i for i, m in enumerate(self.basis(d))}
        return {index[m]: c for m, c in nf.terms().items()}

    def element(self, coords: dict, d: int) -> Polynomial:
        basis = self.basis(d)
        terms = {basis[i]: c for i, c in coords.items() if c}
        return Polynomial(self.ring, terms)

    def krull_dimension(self) -> int:
        if self._dim is None:
            self._dim = _monomial_quotient_dimension(
                self.defining.leading_monomials(), self.ring.nvars)
        return self._dim

    def hilbert_values(self, upto: int):
        return tuple(self.piece_dim(d) for d in range(upto + 1))

    def __repr__(self):
        return "GradedAlgebra(%r mod %d generators)" % (self.ring,
                                                        len(self.defining.gens))


def _monomials_of_degree(nvars, d):
    if nvars == 1:
        yield (d,)
        return
    for head in range(d, -1, -1):
        for tail in _monomials_of_degree(nvars - 1, d - head):
            yield (head,) + tail


def _monomial_quotient_dimension(lead_monomials, nvars) -> int:
    """dim of k[x]/M for monomial M: the largest variable subset containing no
    generator's support."""
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in lead_monomials]
    if any(not s for s in supports):
        return -1  # unit ideal
    best = 0
    for size in range(nvars, 0, -1):
        if size <= best:
            break
        for subset in itertools.combinations(range(nvars), size):
            sub = set(subset)
            if not any(s <= sub for s in supports):
                best = size
                break
    return best


def graded_basis(algebra: GradedAlgebra, d: int):
    return algebra.basis(d)


def krull_dimension(algebra: GradedAlgebra) -> int:
    return algebra.krull_dimension()


# ---------------------------------------------------------------------------
# Degree-truncated lowest-form (associated graded) construction.

LOWEST_FORM_GUARD = 16


def lowest_form_ideal(defining: Ideal, degree_bound: int,
                      guard: int = LOWEST_FORM_GUARD) -> GradedAlgebra:
    """Graded algebra presented by the lowest-degree forms of the ideal,
    faithful in degrees <= degree_bound.

    The degree-d forms are the images of (K ∩ m^d + m^{d+1})/m^{d+1}; since
    every generator of K ∩ m^d has order >= d, that image is spanned by the
    degree-d parts of those generators.
    """
    if degree_bound < 1:
        raise ValueError("degree bound must be >= 1")
    if degree_bound > guard:
        raise ValueError("degree bound %d exceeds the guard %d"
                         % (degree_bound, guard))
    ring = defining.ring
    for g in defining.groebner_basis():
        if g.constant_term():
            raise ValueError("ideal is the unit ideal at the origin")
    maximal = Ideal(ring, ring.gens())
    forms = []
    form_ideal = Ideal(ring, ())
    current = defining
    for d in range(1, degree_bound + 1):
        current = current.intersect(maximal ** d)
        for g in current.groebner_basis():
            form = g.graded_component(d)
            if form.is_zero() or form_ideal.contains(form):
                continue
            forms.append(form.monic())
            form_ideal = Ideal(ring, forms)
    return GradedAlgebra(ring, form_ideal, max_degree=degree_bound)


# ---------------------------------------------------------------------------
# Admissible filtrations.

class Filtration:
    """A finite descending ladder of ideals I_0 = R >= I_1 >= ... >= I_N with a
    declared base ideal and admissibility window.

    ``modulus`` carries the defining ideal K when the ladder presents ideals
    of a quotient ring R/K by their preimages (each ladder entry contains K).
    """

    def __init__(self, ring, base: Ideal, ladder, window=None, modulus=None):
        self.ring = ring
        self.base = base
        self.ladder = tuple(ladder)
        self.window = window if window is not None else len(self.ladder) - 1
        self.modulus = modulus
        self._dim = None

    @property
    def length(self) -> int:
        return len(self.ladder) - 1

    def ideal(self, n: int) -> Ideal:
        if n <= 0:
            return Ideal(self.ring, (self.ring.one(),))
        if n >= len(self.ladder):
            raise DegreeWindowError(
                "filtration ladder stops at %d, asked for %d"
                % (len(self.ladder) - 1, n))
        return self.ladder[n]

    def with_modulus(self, ideal: Ideal) -> Ideal:
        if self.modulus is None:
            return ideal
        return ideal + self.modulus

    def product(self, a: Ideal, b: Ideal) -> Ideal:
        return self.with_modulus(a * b)

    def ambient_dimension(self) -> int:
        """Krull dimension of the (quotient) ring the ladder lives in."""
        if self._dim is None:
            if self.modulus is None or not self.modulus.gens:
                self._dim = self.ring.nvars
            else:
                self._dim = _monomial_quotient_dimension(
                    self.modulus.leading_monomials(), self.ring.nvars)
        return self._dim

    def piece_length(self, j: int) -> int:
        """Length of I_j / I_{j+1}."""
        return length_quotient(self.ideal(j), self.ideal(j + 1))


def make_adic_filtration(base: Ideal, steps: int, modulus=None) -> Filtration:
    """The adic ladder I_n = base^n (plus the modulus, when given)."""
    if steps < 1:
        raise ValueError("need at least one step")
    ring = base.ring
    if modulus is not None and modulus.ring != ring:
        raise ValueError("modulus in a different ring")
    ladder = [Ideal(ring, (ring.one(),))]
    power = None
    for n in range(1, steps + 1):
        power = base if power is None else power * base
        entry = power if modulus is None else power + modulus
        ladder.append(entry)
    return Filtration(ring, ladder[1], ladder, window=steps, modulus=modulus)


class AdmissibilityVerdict:
    def __init__(self, ok, failures):
        self.ok = ok
        self.failures = tuple(failures)

    def __bool__(self):
        return self.ok

    def __repr__(self):
        if self.ok:
            return "AdmissibilityVerdict(ok)"
        return "AdmissibilityVerdict(%d failures: %r)" % (len(self.failures),
                                                          self.failures[:3])


def validate_admissible(filtration: Filtration, upper_k=None) -> AdmissibilityVerdict:
    """Check the ladder conditions inside the window: descending chain;
    I_n * I_m <= I_{n+m}; base^n <= I_n; and, when ``upper_k`` is declared,
    I_n <= base^{n-k}."""
    failures = []
    window = min(filtration.window, filtration.length)

    def witness(ideal, target):
        for g in ideal.gens:
            if not target.contains(g):
                return g
        return None

    for n in range(window):
        w = witness(filtration.ideal(n + 1), filtration.ideal(n))
        if w is not None:
            failures.append(("descending", (n + 1, n), str(w)))
    for n in range(1, window + 1):
        for m in range(n, window + 1 - n):
            prod = filtration.product(filtration.ideal(n), filtration.ideal(m))
            w = witness(prod, filtration.ideal(n + m))
            if w is not None:
                failures.append(("product", (n, m), str(w)))
    power = None
    base = filtration.with_modulus(filtration.base)
    for n in range(1, window + 1):
        power = base if power is None else filtration.product(power, filtration.base)
        w = witness(power, filtration.ideal(n))
        if w is not None:
            failures.append(("adic-lower", (n,), str(w)))
    if upper_k is not None:
        for n in range(1, window + 1):
            target = (filtration.with_modulus(filtration.base ** (n - upper_k))
                      if n - upper_k > 0 else Ideal(filtration.ring,
                                                    (filtration.ring.one(),)))
            w = witness(filtration.ideal(n), target)
            if w is not None:
                failures.append(("adic-upper", (n, upper_k), str(w)))
    return AdmissibilityVerdict(not failures, failures)


# ---------------------------------------------------------------------------
# The associated graded model of a filtration: pieces I_j/I_{j+1} as exact
# k-vector spaces with multiplication by declared degree-one leading forms.

class AssociatedGradedModel:
    """Graded pieces I_j/I_{j+1} of a filtration, as coordinate vector spaces.

    Each piece is the image of I_j inside R/I_{j+1}, computed by closing the
    generator images under multiplication by the ambient variables.  The
    model serves the Koszul machinery: piece dimensions and the linear maps
    given by multiplication with the leading forms of the chosen elements
    (each required to lie in I_1 but not I_2).
    """

    def __init__(self, filtration: Filtration, forms):
        self.filtration = filtration
        self.ring = filtration.ring
        self.field = filtration.ring.field
        self.forms = tuple(forms)
        i1, i2 = filtration.ideal(1), filtration.ideal(2)
        for f in self.forms:
            if not i1.contains(f):
                raise ValueError("form %s is not in the first ladder ideal" % f)
            if i2.contains(f):
                raise ValueError(
                    "form %s has leading form of degree >= 2" % f)
        self.max_degree = filtration.length - 1
        self._pieces = {}
        self._mult = {}

    def check_degree(self, j: int) -> None:
        if j > self.max_degree:
            raise DegreeWindowError(
                "piece %d beyond the ladder window %d" % (j, self.max_degree))

    def _piece(self, j: int):
        """(basis representatives, coordinate solver, monomial index) of the
        image of I_j in R/I_{j+1}."""
        if j in self._pieces:
            return self._pieces[j]
        self.check_degree(j)
        next_ideal = self.filtration.ideal(j + 1)
        start = (self.filtration.ideal(j).gens if j > 0
                 else (self.ring.one(),))
        solver = LinearSolver(self.field)
        reps = []
        queue = []
        for g in start:
            nf = next_ideal.normal_form(g)
            if nf.is_zero():
                continue
            if solver.insert(dict(nf.terms())) is None:
                reps.append(nf)
                queue.append(nf)
        gens = self.ring.gens()
        while queue:
            w = queue.pop()
            for xv in gens:
                nf = next_ideal.normal_form(xv * w)
                if nf.is_zero():
                    continue
                if solver.insert(dict(nf.terms())) is None:
                    reps.append(nf)
                    queue.append(nf)
        coord = LinearSolver(self.field, track=True)
        for i, rep in enumerate(reps):
            coord.insert(dict(rep.terms()), tag=i)
        self._pieces[j] = (tuple(reps), coord)
        return self._pieces[j]

    def piece_dim(self, j: int) -> int:
        if j < 0:
            return 0
        return len(self._piece(j)[0])

    def piece_reps(self, j: int):
        return self._piece(j)[0]

    def coords(self, element: Polynomial, j: int) -> dict:
        """Coordinates of (element mod I_{j+1}) in the piece-j basis."""
        reps, coord = self._piece(j)
        nf = self.filtration.ideal(j + 1).normal_form(element)
        if nf.is_zero():
            return {}
        combo = coord.express(dict(nf.terms()))
        if combo is None:
            raise ValueError("element does not lie in ladder ideal %d" % j)
        return combo

    def element(self, coords: dict, j: int) -> Polynomial:
        reps, _ = self._piece(j)
        out = self.ring.zero()
        for i, c in coords.items():
            out = out + reps[i].scale(c)
        return out

    def mult_matrix(self, form_index: int, j: int):
        """Columns of the map piece j -> piece j+1 given by multiplication
        with the chosen form."""
        key = (form_index, j)
        if key not in self._mult:
            form = self.forms[form_index]
            reps, _ = self._piece(j)
            cols = [self.coords(form * rep, j + 1) for rep in reps]
            self._mult[key] = tuple(cols)
        return self._mult[key]

    def multiply_into(self, form_index: int, coords: dict, j: int) -> dict:
        cols = self.mult_matrix(form_index, j)
        out = {}
        from .linalg import vec_add_scaled
        for i, c in coords.items():
            vec_add_scaled(self.field, out, dict(cols[i]), c)
        return out
