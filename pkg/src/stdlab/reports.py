"""Machine-readable certificates shared by the polynomial and semigroup paths."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class StandardnessReport:
    """Per-k verdicts for J ∩ I_k = J·I_{k-1}, k = 1..n, with a witness
    element of the difference when some k fails."""
    rows: tuple                  # ((k, equal), ...)
    first_failing_k: "int | None"
    witness: object              # Polynomial, exponent string, or None
    n: int
    forced: bool
    reduction_label: str

    @property
    def passed(self) -> bool:
        return self.first_failing_k is None

    def verdict(self, k: int) -> bool:
        for kk, equal in self.rows:
            if kk == k:
                return equal
        raise KeyError(k)

    def to_dict(self) -> dict:
        return {
            "kind": "standardness",
            "n": self.n,
            "per_k": [{"k": k, "equal": eq} for k, eq in self.rows],
            "first_failing_k": self.first_failing_k,
            "witness": None if self.witness is None else str(self.witness),
            "forced": self.forced,
            "reduction": self.reduction_label,
            "passed": self.passed,
        }


@dataclass(frozen=True)
class ReductionVerdict:
    """Outcome of checking that J reduces a filtration: containment in I_1,
    the least r with J·I_r = I_{r+1} (None when not found within the bound),
    persistence of the equality through the window, and minimality of the
    generator count against the ambient dimension."""
    contained: bool
    reduction_number: "int | None"
    persistent: bool
    generator_count: int
    ambient_dimension: int
    bound: int

    @property
    def is_reduction(self) -> bool:
        return (self.contained and self.reduction_number is not None
                and self.persistent)

    @property
    def is_minimal(self) -> bool:
        return self.is_reduction and self.generator_count == self.ambient_dimension

    def to_dict(self) -> dict:
        return {
            "kind": "reduction",
            "contained": self.contained,
            "reduction_number": self.reduction_number,
            "persistent": self.persistent,
            "generator_count": self.generator_count,
            "ambient_dimension": self.ambient_dimension,
            "bound": self.bound,
            "is_reduction": self.is_reduction,
            "is_minimal": self.is_minimal,
        }


@dataclass(frozen=True)
class AuditRow:
    k: int
    lhs: int
    rhs: int

    @property
    def match(self) -> bool:
        return self.lhs == self.rhs

    def to_dict(self) -> dict:
        return {"k": self.k, "lhs": self.lhs, "rhs": self.rhs,
                "match": self.match}


@dataclass(frozen=True)
class CrossValidation:
    """Agreement record between the ideal-level standardness verdict and the
    Koszul vanishing verdict over the associated graded model."""
    n: int
    ideal_first_fail: "int | None"
    homology_first_nonzero: "int | None"
    cm_asserted: bool

    @property
    def agree(self) -> bool:
        if self.ideal_first_fail is None and self.homology_first_nonzero is None:
            return True
        if self.ideal_first_fail is None or self.homology_first_nonzero is None:
            return False
        return self.ideal_first_fail == self.homology_first_nonzero + 1

    def to_dict(self) -> dict:
        return {
            "kind": "cross_validation",
            "n": self.n,
            "ideal_first_fail": self.ideal_first_fail,
            "homology_first_nonzero": self.homology_first_nonzero,
            "cm_asserted": self.cm_asserted,
            "agree": self.agree,
        }
