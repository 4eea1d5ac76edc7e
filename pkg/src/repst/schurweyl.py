"""Complex tensor powers of a vector space with a marked vector.

For a nonnegatively graded space V with one-dimensional degree-0 part, the
Hilbert series of the t-th tensor power is h(x)^t with polynomial-in-t
coefficients, and the associated graded object factors through symmetric
powers and Schur functors of V/<marked vector>.  This module computes those
series, the finite-dimensional bookkeeping identities they satisfy, and the
integrality constraints on the rank t at which the associated
highest-weight module can degenerate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import deligne
from .exact import BadConstantTermError, ExactPolynomial, ONE, T, TruncatedSeries
from .partitions import Partition, cells, format_partition, hook_lengths, partitions_of


@dataclass(frozen=True)
class UnitalHilbert:
    """Hilbert series coefficients of a graded space whose degree-0 part is
    spanned by the marked vector (so the constant coefficient is 1)."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        if not self.coefficients or self.coefficients[0] != 1:
            raise BadConstantTermError("unital Hilbert series must start with 1")
        if any(c < 0 for c in self.coefficients):
            raise ValueError("Hilbert coefficients must be nonnegative")

    @classmethod
    def ungraded(cls, bar_dim: int) -> "UnitalHilbert":
        """The two-step filtration of an ungraded space: 1 + bar_dim * x."""
        return cls((1, bar_dim))


def tensor_power_hilbert(h: UnitalHilbert, degree: int) -> TruncatedSeries:
    """h(x)^t, truncated at the given degree; at t = n this is the n-fold
    product of h with itself."""
    base = TruncatedSeries((degree,), {
        (k,): c for k, c in enumerate(h.coefficients) if k <= degree
    })
    return base.pow_poly(T)


def schur_dimension(lam: Partition, d: int) -> int:
    """Dimension of the Schur functor of shape lam applied to C^d, via the
    hook-content formula; zero when lam has more than d rows."""
    if len(lam) > d:
        return 0
    num = 1
    for i, j in cells(lam):
        num *= d + (j - i)
    hooks = 1
    for h in hook_lengths(lam).values():
        hooks *= h
    quotient, remainder = divmod(num, hooks)
    assert remainder == 0
    return quotient


@dataclass(frozen=True)
class GradedCheckReport:
    """Outcome of comparing the two Hilbert-series routes for the associated
    graded of a tensor power, degree by degree."""

    bar_dim: int
    degree: int
    passed: bool
    first_failure: int | None

    def to_json(self) -> dict:
        return {
            "check": "graded-decomposition",
            "d": self.bar_dim,
            "D": self.degree,
            "pass": self.passed,
            "firstFailure": self.first_failure,
        }


def graded_decomposition_check(d: int, degree: int) -> GradedCheckReport:
    """Verify, coefficient by coefficient in x and exactly in t, that

        (1 + d x)^t  =  (1 - x)^{-d} * sum_lam schur_dimension(lam, d)
                                        * x^{|lam|} * dim_poly(lam).

    The left side is the Hilbert series of the t-th tensor power of an
    ungraded (d+1)-dimensional space; the right side is the series of its
    associated graded, summed over the Schur-functor decomposition.
    """
    lhs = tensor_power_hilbert(UnitalHilbert.ungraded(d), degree)
    # (1 - x)^{-d}, truncated: coefficients binom(d + j - 1, j)
    sym = TruncatedSeries((degree,), {(0,): 1, (1,): -1}).pow_poly(
        ExactPolynomial.constant(-d))
    layer_sums = []
    for size in range(degree + 1):
        total = ExactPolynomial()
        for lam in partitions_of(size):
            s = schur_dimension(lam, d)
            if s:
                total = total + deligne.dimension_poly(lam).scale(s)
        layer_sums.append(total)
    first_failure = None
    for k in range(degree + 1):
        rhs = ExactPolynomial()
        for j in range(k + 1):
            rhs = rhs + sym.coefficient((j,)) * layer_sums[k - j]
        if lhs.coefficient((k,)) != rhs:
            first_failure = k
            break
    return GradedCheckReport(d, degree, first_failure is None, first_failure)


def degree_one_dimension(v: int) -> ExactPolynomial:
    """Dimension of the first filtration layer of the t-th tensor power of a
    v-dimensional unital space: v + (v-1)(t-1), equivalently 1 + t(v-1)."""
    if v < 1:
        raise ValueError("space dimension must be positive")
    via_quotient = (T - 1).scale(v - 1) + v
    via_series = T.scale(v - 1) + 1
    assert via_quotient == via_series
    return via_quotient


@dataclass(frozen=True)
class VermaWeight:
    """Highest-weight data (t - |lam|, lam_1, ..., lam_{N-1}) for gl_N,
    with the first coordinate carrying the rank parameter."""

    lam: Partition
    space_dim: int

    def __post_init__(self):
        if len(self.lam) > self.space_dim - 1:
            raise ValueError(
                f"partition {format_partition(self.lam)} needs at most "
                f"{self.space_dim - 1} parts for dim V = {self.space_dim}")


def verma_candidates(weight: VermaWeight, t_max: int) -> list[tuple[int, int, int]]:
    """All (t, i, m) with 1 <= i <= N-1, m >= 1, lam_{i-1} >= lam_i + m
    (no constraint for i = 1), and t = |lam| + lam_i + m - i in [0, t_max].

    Degeneration of the module with highest weight (t - |lam|, lam) forces
    t to appear in this list; the converse is not asserted.
    """
    lam = weight.lam
    size = sum(lam)
    found = []
    for i in range(1, weight.space_dim):
        lam_i = lam[i - 1] if i <= len(lam) else 0
        if i == 1:
            m_cap = t_max - size - lam_i + i
        else:
            lam_prev = lam[i - 2] if i - 1 <= len(lam) else 0
            m_cap = min(lam_prev - lam_i, t_max - size - lam_i + i)
        for m in range(1, m_cap + 1):
            t = size + lam_i + m - i
            if 0 <= t <= t_max:
                found.append((t, i, m))
    return sorted(found)


def candidate_t_values(weight: VermaWeight, t_max: int) -> set[int]:
    return {t for t, _, _ in verma_candidates(weight, t_max)}


def irreducible_guaranteed(t: Fraction | int, weight: VermaWeight) -> bool:
    """True when the highest-weight module at this t is certainly
    irreducible: t not a nonnegative integer, or a nonnegative integer
    outside the candidate list.  False only means "not excluded"."""
    t = Fraction(t)
    if t.denominator != 1 or t < 0:
        return True
    return int(t) not in candidate_t_values(weight, int(t))


def interlacing_branch(lam: Partition, space_dim: int, size_bound: int) -> list[Partition]:
    """All mu with at most space_dim - 1 parts, |mu| <= size_bound, and
    mu_i >= lam_i >= mu_{i+1} for every i; each exactly once.

    These index the multiplicity-free restriction of the induced module to
    the Levi subgroup: mu/lam runs over horizontal strips.
    """
    if len(lam) > space_dim - 1:
        raise ValueError("partition has too many parts for this space")
    results: list[Partition] = []
    max_rows = space_dim - 1

    def build(row: int, prefix: list[int], used: int):
        if row > max_rows:
            results.append(tuple(p for p in prefix if p > 0))
            return
        low = lam[row - 1] if row <= len(lam) else 0
        budget = size_bound - used - sum(lam[row:])
        if row == 1:
            high = budget
        else:
            high = min(lam[row - 2] if row - 1 <= len(lam) else 0, budget)
        for value in range(low, high + 1):
            prefix.append(value)
            build(row + 1, prefix, used + value)
            prefix.pop()

    build(1, [], 0)
    return sorted(set(results), key=lambda mu: (sum(mu), mu))
