"""Koszul complexes on degree-one forms over a graded model, per graded strand.

Everything is finite-dimensional linear algebra over the coefficient field:
the strand of homological index i and internal degree j of the complex on
x_1..x_k has pieces

    (K_{i+1})_j = G_{j-i-1}^(C(k,i+1)) -> (K_i)_j = G_{j-i}^(C(k,i))
                                       -> (K_{i-1})_j = G_{j-i+1}^(C(k,i-1))

with differential  d(e_T (x) w) = sum_l (-1)^l x_{T[l]} e_{T\T[l]} (x) w.
Strand bases are ordered lexicographically on (index subset, piece basis), so
matrices and extracted certificates are reproducible.

A class in H_1(...)_j is presented by a vector of elements of degree j-1; it
is a boundary exactly when it equals (x_1..x_k) S for a skew-symmetric matrix
S, and the boundary solver returns that S as a certificate.

Models: a GradedAlgebra together with linear forms, or an
AssociatedGradedModel of a filtration (whose "forms" are ring elements acting
through their degree-one leading forms).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .grading import AssociatedGradedModel, GradedAlgebra
from .linalg import LinearSolver, solve_combination, vec_add_scaled
from .polycore import Polynomial


class NonLinearFormError(ValueError):
    pass


class MixedDegreeError(ValueError):
    pass


class _AlgebraModel:
    """Adapter presenting a GradedAlgebra plus linear forms as a Koszul model."""

    def __init__(self, algebra: GradedAlgebra, forms):
        self.algebra = algebra
        self.ring = algebra.ring
        self.field = algebra.ring.field
        reduced = []
        for f in forms:
            nf = algebra.nf(f)
            if nf.is_zero() or nf.homogeneous_degree() != 1:
                raise NonLinearFormError(
                    "form %s is not a nonzero degree-one element" % f)
            reduced.append(nf)
        self.forms = tuple(reduced)
        self.max_degree = algebra.max_degree
        self._mult = {}

    def piece_dim(self, j):
        return 0 if j < 0 else len(self.algebra.basis(j))

    def coords(self, f, j):
        return self.algebra.coords(f, j)

    def element(self, coords, j):
        return self.algebra.element(coords, j)

    def mult_matrix(self, form_index, j):
        key = (form_index, j)
        if key not in self._mult:
            form = self.forms[form_index]
            cols = []
            for m in self.algebra.basis(j):
                prod = self.algebra.nf(
                    form * Polynomial(self.ring, {m: self.field.one()}))
                cols.append(self.algebra.coords(prod, j + 1))
            self._mult[key] = tuple(cols)
        return self._mult[key]

    def multiply_into(self, form_index, coords, j):
        cols = self.mult_matrix(form_index, j)
        out = {}
        for i, c in coords.items():
            vec_add_scaled(self.field, out, dict(cols[i]), c)
        return out


def _as_model(source, forms):
    if isinstance(source, AssociatedGradedModel):
        if forms is not None and tuple(forms) != source.forms:
            raise ValueError("an associated graded model already carries forms")
        return source
    if isinstance(source, GradedAlgebra):
        if forms is None:
            raise ValueError("forms are required with a graded algebra")
        return _AlgebraModel(source, forms)
    return source


class KoszulComplex:
    """Strand-level Koszul computations over a graded model."""

    def __init__(self, source, forms=None):
        self.model = _as_model(source, forms)
        self.field = self.model.field
        self._rank_cache = {}

    @property
    def nforms(self):
        return len(self.model.forms)

    def strand_dim(self, k, i, j):
        if i < 0 or i > k:
            return 0
        return comb(k, i) * self.model.piece_dim(j - i)

    def differential_columns(self, k, i, j):
        """Columns of (K_i)_j -> (K_{i-1})_j on the first k forms."""
        model = self.model
        src_dim = model.piece_dim(j - i)
        if i < 1 or i > k or src_dim == 0:
            return []
        targets = {T: pos for pos, T in enumerate(combinations(range(k), i - 1))}
        tgt_piece = model.piece_dim(j - i + 1)
        one = self.field.one()
        minus = self.field.neg(one)
        cols = []
        for T in combinations(range(k), i):
            mult = [model.mult_matrix(t, j - i) for t in T]
            for b in range(src_dim):
                col = {}
                for l, t in enumerate(T):
                    rest = T[:l] + T[l + 1:]
                    offset = targets[rest] * tgt_piece
                    image = mult[l][b]
                    sign = one if l % 2 == 0 else minus
                    vec_add_scaled(self.field, col,
                                   {offset + r: v for r, v in image.items()},
                                   sign)
                cols.append(col)
        return cols

    def _rank(self, k, i, j):
        key = (k, i, j)
        if key not in self._rank_cache:
            solver = LinearSolver(self.field)
            for col in self.differential_columns(k, i, j):
                solver.insert(col)
            self._rank_cache[key] = solver.rank
        return self._rank_cache[key]

    def homology_dimension(self, i, j, k=None):
        k = self.nforms if k is None else k
        middle = self.strand_dim(k, i, j)
        if middle == 0:
            return 0
        return middle - self._rank(k, i, j) - self._rank(k, i + 1, j)

    def first_nonzero_h1(self, upto_degree, k=None):
        """Least j <= upto_degree with H_1 of some prefix nonzero, or None."""
        k = self.nforms if k is None else k
        for j in range(1, upto_degree + 1):
            for kk in range(1, k + 1):
                if self.homology_dimension(1, j, kk):
                    return j
        return None

    # -- cycles and boundaries ----------------------------------------------

    def classify_cycle(self, vector):
        model = self.model
        if not isinstance(model, _AlgebraModel):
            raise TypeError("cycle classification expects a graded algebra")
        vector = [model.algebra.nf(r) for r in vector]
        k = self.nforms
        if len(vector) != k:
            raise ValueError("vector length must match the number of forms")
        degs = set()
        for r in vector:
            if not r.is_zero():
                d = r.homogeneous_degree()
                if d is None:
                    raise MixedDegreeError("entry %s is not homogeneous" % r)
                degs.add(d)
        if len(degs) > 1:
            raise MixedDegreeError("entries of mixed degrees %s" % sorted(degs))
        if not degs:
            zero = model.ring.zero()
            cert = SkewCertificate(tuple(tuple(zero for _ in range(k))
                                         for _ in range(k)))
            return CycleClass("boundary", cert, 0)
        d = degs.pop()
        j = d + 1
        piece = model.piece_dim(d)
        coords = [model.coords(r, d) if not r.is_zero() else {} for r in vector]
        total = {}
        for idx, c in enumerate(coords):
            vec_add_scaled(self.field, total,
                           model.multiply_into(idx, c, d), self.field.one())
        if total:
            return CycleClass("not_a_cycle", None, j)
        target = {}
        for idx, c in enumerate(coords):
            for r, v in c.items():
                target[idx * piece + r] = v
        cols = self.differential_columns(k, 2, j)
        combo = solve_combination(self.field, cols, target)
        if combo is None:
            return CycleClass("nonzero_class", None, j)
        return CycleClass("boundary", self._certificate(combo, k, j), j)

    def _certificate(self, combo, k, j):
        model = self.model
        piece = model.piece_dim(j - 2)
        pairs = list(combinations(range(k), 2))
        by_pair = {}
        for col_index, coeff in combo.items():
            if not coeff:
                continue
            pair = pairs[col_index // piece]
            slot = by_pair.setdefault(pair, {})
            b = col_index % piece
            slot[b] = self.field.add(slot.get(b, self.field.zero()), coeff)
        zero = model.ring.zero()
        matrix = [[zero] * k for _ in range(k)]
        for (a, b), c in by_pair.items():
            s_ab = model.element(c, j - 2)
            matrix[a][b] = s_ab
            matrix[b][a] = zero - s_ab
        return SkewCertificate(tuple(tuple(row) for row in matrix))

    # -- colon conditions -----------------------------------------------------

    def colon_condition(self, n, k=None):
        """Per-prefix report: every colon element of degree d < n of
        (x_1..x_{kk-1}) : x_kk lies in (x_1..x_{kk-1}) + G_{>=n}."""
        k = self.nforms if k is None else k
        model = self.model
        reports = []
        for kk in range(1, k + 1):
            failures = []
            for d in range(0, n):
                piece = model.piece_dim(d)
                if piece == 0:
                    continue
                ideal_next = LinearSolver(self.field)
                for i in range(kk - 1):
                    for col in model.mult_matrix(i, d):
                        ideal_next.insert(dict(col))
                ideal_here = LinearSolver(self.field)
                if d > 0:
                    for i in range(kk - 1):
                        for col in model.mult_matrix(i, d - 1):
                            ideal_here.insert(dict(col))
                mu = model.mult_matrix(kk - 1, d)
                rel = LinearSolver(self.field, track=True)
                for s, row in enumerate(list(ideal_next.rows.values())):
                    rel.insert(dict(row), tag=("u", s))
                for b in range(piece):
                    combo = rel.insert(dict(mu[b]), tag=("v", b))
                    if combo is None:
                        continue
                    witness = {b: self.field.one()}
                    for tag, cc in combo.items():
                        if tag[0] == "v":
                            witness[tag[1]] = self.field.neg(cc)
                    witness = {a: v for a, v in witness.items() if v}
                    if not ideal_here.contains(witness):
                        failures.append((d, model.element(witness, d)))
            reports.append(ColonReport(kk, not failures, tuple(failures)))
        return reports

    # -- strand truncations ----------------------------------------------------

    def truncated_strand_length(self, k):
        """H_0 length of the degree-k truncated strand on all forms, the
        alternating binomial sum, and higher-homology vanishing."""
        if k < 2:
            raise ValueError("truncation degree must be >= 2")
        d = self.nforms
        h0 = d * self.model.piece_dim(k - 1) - self._rank(d, 2, k)
        alternating = sum(
            (-1) ** (i - 1) * comb(d, i) * self.model.piece_dim(k - i)
            for i in range(1, k + 1))
        higher = all(self.homology_dimension(m, k) == 0
                     for m in range(2, min(d, k) + 1))
        return StrandLengths(h0, alternating, higher)

    def vanishing_propagation(self, i, j, n):
        """Instance check: H_i vanishing in degree j for all prefixes up to n
        forces H_{i+1} vanishing in degree j+1 there too."""
        upto = min(n, self.nforms)
        hypothesis = all(self.homology_dimension(i, j, kk) == 0
                         for kk in range(1, upto + 1))
        if not hypothesis:
            return True
        return all(self.homology_dimension(i + 1, j + 1, kk) == 0
                   for kk in range(1, upto + 1))


@dataclass(frozen=True)
class CycleClass:
    kind: str               # "not_a_cycle" | "boundary" | "nonzero_class"
    certificate: "SkewCertificate | None"
    degree: int

    def is_boundary(self):
        return self.kind == "boundary"


@dataclass(frozen=True)
class ColonReport:
    k: int
    holds: bool
    failures: tuple


class SkewCertificate:
    """A skew-symmetric matrix S with (x_1..x_k) S recovering a boundary."""

    def __init__(self, matrix):
        self.matrix = matrix

    @property
    def size(self):
        return len(self.matrix)

    def is_skew_symmetric(self):
        n = self.size
        for i in range(n):
            if not self.matrix[i][i].is_zero():
                return False
            for j in range(i + 1, n):
                if not (self.matrix[i][j] + self.matrix[j][i]).is_zero():
                    return False
        return True

    def recomposes(self, algebra: GradedAlgebra, forms, vector) -> bool:
        """Check (forms) . S == vector inside the algebra."""
        n = self.size
        for c in range(n):
            acc = algebra.ring.zero()
            for i in range(n):
                acc = acc + forms[i] * self.matrix[i][c]
            if not algebra.nf(acc - vector[c]).is_zero():
                return False
        return True

    def __repr__(self):
        rows = ["[" + ", ".join(str(e) for e in row) + "]"
                for row in self.matrix]
        return "SkewCertificate(%s)" % "; ".join(rows)


@dataclass(frozen=True)
class StrandLengths:
    h0_length: int
    alternating_sum: int
    higher_vanishing: bool


# -- module-level facade ------------------------------------------------------

def homology_dimension(source, forms, i, j) -> int:
    """dim_k of the Koszul homology H_i(forms; G) in internal degree j."""
    return KoszulComplex(source, forms).homology_dimension(i, j)


def classify_cycle(source, forms, vector) -> CycleClass:
    return KoszulComplex(source, forms).classify_cycle(vector)


def colon_condition(source, forms, n):
    return KoszulComplex(source, forms).colon_condition(n)


def truncated_strand_length(source, forms, k) -> StrandLengths:
    return KoszulComplex(source, forms).truncated_strand_length(k)


def vanishing_propagation_check(source, forms, i, j, n) -> bool:
    return KoszulComplex(source, forms).vanishing_propagation(i, j, n)
