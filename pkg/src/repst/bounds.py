"""Exact dimension lower bounds for symmetric-group irreducibles.

For mu of size n with d the larger of first-row and first-column lengths,

    hook_dim(mu)  >=  binom(n, d) * (d / n)^d,

an inequality derived by peeling the first row (or column) off the diagram
and bounding the correction factor with the AM-GM inequality.  Everything
here is checked in exact rational arithmetic; only the finite inequalities
are implemented, never their asymptotic consequences.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .partitions import Partition, conjugate, format_partition, partitions_of
from .snoracle import SizeMismatchError, hook_dim


def dimension_lower_bound(n: int, mu: Partition) -> Fraction:
    """binom(n, d) (d/n)^d with d = max(first row, first column) of mu."""
    if n < 1 or sum(mu) != n:
        raise SizeMismatchError(f"{format_partition(mu)} is not a partition of {n} >= 1")
    d = max(mu[0], len(mu))
    return comb(n, d) * Fraction(d, n) ** d


def row_peel_factors(mu: Partition) -> list[Fraction]:
    """The factors 1 + (c_i - 1)/i, i = 1..d, where d is the first-row
    length and c_i the length of column d - i + 1 (columns counted from the
    right, so c_1 is the shortest)."""
    if not mu:
        return []
    d = mu[0]
    cols = conjugate(mu)
    return [1 + Fraction(cols[d - i] - 1, i) for i in range(1, d + 1)]


def amgm_check(mu: Partition) -> bool:
    """Exact check of the two-step estimate behind the bound, first-row case:

        prod_i (1 + (c_i - 1)/i)  <=  prod_i c_i  <=  (n/d)^d.
    """
    if not mu:
        return True
    n = sum(mu)
    d = mu[0]
    factors = row_peel_factors(mu)
    product = Fraction(1)
    for f in factors:
        product *= f
    cols = conjugate(mu)
    col_product = 1
    for c in cols:
        col_product *= c
    return product <= col_product and col_product <= Fraction(n, d) ** d


def peel_identity_holds(mu: Partition) -> bool:
    """Exact form of the row-peeling step: for nonempty mu with first row d,

        hook_dim(mu) * prod_i (1 + (c_i - 1)/i) == hook_dim(mu') * binom(n, d)

    where mu' is mu without its first row."""
    if not mu:
        return True
    n = sum(mu)
    d = mu[0]
    product = Fraction(1)
    for f in row_peel_factors(mu):
        product *= f
    return hook_dim(mu) * product == hook_dim(mu[1:]) * comb(n, d)


@dataclass(frozen=True)
class BoundSweepReport:
    n: int
    partition_count: int
    passed: bool
    min_slack: Fraction
    argmin: Partition

    def to_json(self) -> dict:
        return {
            "check": "bound-sweep",
            "n": self.n,
            "partitions": self.partition_count,
            "pass": self.passed,
            "minSlack": [str(self.min_slack.numerator), str(self.min_slack.denominator)],
            "argmin": format_partition(self.argmin),
        }


def bound_sweep(n: int) -> BoundSweepReport:
    """Check hook_dim(mu) >= dimension_lower_bound(n, mu) for every mu of n,
    reporting the minimum slack (dimension minus bound)."""
    if n < 1:
        raise ValueError("n must be positive")
    min_slack = None
    argmin: Partition = ()
    passed = True
    count = 0
    for mu in partitions_of(n):
        count += 1
        slack = hook_dim(mu) - dimension_lower_bound(n, mu)
        if slack < 0:
            passed = False
        if min_slack is None or slack < min_slack:
            min_slack = slack
            argmin = mu
    return BoundSweepReport(n, count, passed, min_slack, argmin)


def lemma_scan(c: Fraction, k: int, n: int) -> list[Partition]:
    """Partitions of n with hook_dim <= c * n^k whose first row AND first
    column are both shorter than n - k.

    An empty list means the low-dimension irreducibles at this n are all
    hooks-with-long-arm-or-leg; nonempty lists are expected at small n since
    the statement is only eventually true.
    """
    c = Fraction(c)
    threshold = c * Fraction(n) ** k
    violations = []
    for mu in partitions_of(n):
        if hook_dim(mu) <= threshold and mu[0] < n - k and len(mu) < n - k:
            violations.append(mu)
    return violations


def find_threshold(c: Fraction, k: int, n_max: int) -> int | None:
    """Smallest N such that lemma_scan(c, k, n) is empty for every
    N <= n <= n_max, or None if even n_max has violations."""
    threshold = None
    for n in range(n_max, 0, -1):
        if lemma_scan(c, k, n):
            break
        threshold = n
    return threshold
