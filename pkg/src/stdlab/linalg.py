"""Exact sparse linear algebra over the coefficient fields.

Vectors are dicts mapping column index -> nonzero field value.  The central
object is an incremental row-echelon structure: rows are inserted one at a
time, reduced against existing pivots, and (optionally) tagged so that a
vector found to be dependent can be expressed as a combination of previously
inserted tagged rows.  Over the rationals rows are rescaled to primitive
integer form after every reduction to keep numerator growth down.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def vec_add_scaled(field, dst: dict, src: dict, c) -> None:
    """dst += c * src, in place, dropping zero entries."""
    if not c:
        return
    for j, v in src.items():
        w = field.add(dst.get(j, 0), field.mul(c, v)) if j in dst else field.mul(c, v)
        if w:
            dst[j] = w
        else:
            del dst[j]


def _primitive(row: dict) -> dict:
    """Rescale a Fraction row so entries are integers with content 1."""
    den = 1
    for v in row.values():
        den = den * v.denominator // gcd(den, v.denominator)
    num = 0
    for v in row.values():
        num = gcd(num, v.numerator * den // v.denominator)
    if num in (0, 1) and den == 1:
        return row
    scale = Fraction(den, num)
    return {j: v * scale for j, v in row.items()}


class LinearSolver:
    """Incremental echelon form with optional combination tracking.

    ``insert`` reduces a vector against the stored pivot rows.  If a nonzero
    residual remains it becomes a new pivot row (pivot = least column, scaled
    to 1) and None is returned; otherwise the vector was dependent and, when
    built with ``track=True``, the returned dict expresses it as a combination
    of the previously tagged rows.
    """

    def __init__(self, field, track=False):
        self.field = field
        self.track = track
        self.rows = {}    # pivot column -> row dict (pivot value 1)
        self.combos = {}  # pivot column -> {tag: coeff}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _reduce(self, vec: dict):
        field = self.field
        vec = dict(vec)
        combo = {} if self.track else None
        while True:
            hits = sorted(p for p in vec if p in self.rows)
            if not hits:
                return vec, combo
            for p in hits:
                if p not in vec:
                    continue
                c = field.neg(vec[p])
                vec_add_scaled(field, vec, self.rows[p], c)
                if self.track:
                    vec_add_scaled(field, combo, self.combos[p], c)

    def insert(self, vec: dict, tag=None):
        """Insert a vector; None if it enlarged the span, else the dependence
        combination (empty dict when not tracking)."""
        field = self.field
        if self.track and tag is None:
            raise ValueError("tracked solver requires a tag per insert")
        vec, combo = self._reduce(vec)
        if not vec:
            if self.track:
                return {t: field.neg(c) for t, c in combo.items()}
            return {}
        if field.p is None:
            vec = _primitive(vec)
        p = min(vec)
        c = field.inv(vec[p])
        self.rows[p] = {j: field.mul(v, c) for j, v in vec.items()}
        if self.track:
            combo[tag] = field.add(combo.get(tag, field.zero()), field.one())
            self.combos[p] = {t: field.mul(v, c) for t, v in combo.items() if v}
        return None

    def express(self, vec: dict):
        """Combination of tagged rows equal to ``vec``, or None when ``vec``
        is outside the span.  Never mutates the solver."""
        res, combo = self._reduce(vec)
        if res:
            return None
        return {t: self.field.neg(c) for t, c in combo.items()}

    def contains(self, vec: dict) -> bool:
        res, _ = self._reduce(vec)
        return not res

    def residual(self, vec: dict) -> dict:
        res, _ = self._reduce(vec)
        return res


def rank_of(field, vectors) -> int:
    """Rank of an iterable of sparse vectors."""
    solver = LinearSolver(field)
    for v in vectors:
        solver.insert(v)
    return solver.rank


def span_dims(field, base_vectors, extra_vectors):
    """(dim span(base), dim span(base+extra)) in one elimination pass."""
    solver = LinearSolver(field)
    for v in base_vectors:
        solver.insert(v)
    base_rank = solver.rank
    for v in extra_vectors:
        solver.insert(v)
    return base_rank, solver.rank


def solve_combination(field, columns, target):
    """Express ``target`` in the span of ``columns``; {index: coeff} or None."""
    solver = LinearSolver(field, track=True)
    for i, col in enumerate(columns):
        solver.insert(dict(col), tag=i)
    combo = solver.insert(dict(target), tag=-1)
    if combo is None:
        return None
    return combo
