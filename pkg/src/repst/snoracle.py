"""Classical symmetric-group reference computations.

Hook-length dimensions, Murnaghan-Nakayama characters, and conjugacy-class
sizes for honest S_n.  This module is the ground truth that the rank
interpolations elsewhere are checked against, so it must not import from
them; everything here is textbook S_n combinatorics.

A cycle type records only nontrivial cycles: entry i (0-based) counts
cycles of length i + 2.  Fixed points are implied by the ambient n.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .partitions import Partition, conjugate, format_partition, hook_product

CycleType = tuple[int, ...]


class SizeMismatchError(ValueError):
    """The partition is too small to contain the requested cycles."""


def check_cycle_type(counts) -> CycleType:
    rho = tuple(int(c) for c in counts)
    if any(c < 0 for c in rho):
        raise ValueError(f"cycle counts must be nonnegative: {rho}")
    while rho and rho[-1] == 0:
        rho = rho[:-1]
    return rho


def parse_cycle_type(text: str) -> CycleType:
    """Parse "m1,m2,..." (counts of 2-cycles, 3-cycles, ...); "" is the identity."""
    text = text.strip()
    if not text:
        return ()
    return check_cycle_type(int(piece) for piece in text.split(","))


def format_cycle_type(rho: CycleType) -> str:
    return ",".join(str(c) for c in rho)


def support(rho: CycleType) -> int:
    """Number of points moved: sum of m_i * (i + 1) with cycle length i + 1."""
    return sum(c * (i + 2) for i, c in enumerate(rho))


def cycle_lengths(rho: CycleType) -> tuple[int, ...]:
    """Nontrivial cycle lengths, largest first."""
    lengths = []
    for i, c in enumerate(rho):
        lengths.extend([i + 2] * c)
    return tuple(sorted(lengths, reverse=True))


def cycle_type_of_partition(shape: Partition) -> CycleType:
    """Cycle type of a permutation whose cycle lengths are the parts of shape."""
    counts = [0] * (max(shape, default=1) - 1)
    for part in shape:
        if part >= 2:
            counts[part - 2] += 1
    return check_cycle_type(counts)


def hook_dim(mu: Partition) -> int:
    """Dimension of the irreducible S_{|mu|}-representation: |mu|! / hooks."""
    n = sum(mu)
    quotient, remainder = divmod(factorial(n), hook_product(mu))
    assert remainder == 0, f"hook product does not divide {n}! for {mu}"
    return quotient


def _partition_from_beta(beta: tuple[int, ...]) -> Partition:
    k = len(beta)
    return tuple(p for p in (beta[i] - (k - 1 - i) for i in range(k)) if p > 0)


@lru_cache(maxsize=None)
def _mn_recurse(mu: Partition, lengths: tuple[int, ...]) -> int:
    if not lengths:
        # all remaining cycles are fixed points; the character of the
        # identity is the dimension
        return hook_dim(mu)
    strip, rest = lengths[0], lengths[1:]
    k = len(mu)
    beta = tuple(mu[i] + (k - 1 - i) for i in range(k))
    beta_set = set(beta)
    total = 0
    # removing a border strip of the given length = lowering one beta
    # number by it, provided the slot is free; the sign is the parity of
    # the beta numbers jumped over (= leg length of the strip)
    for b in beta:
        c = b - strip
        if c < 0 or c in beta_set:
            continue
        height = sum(1 for x in beta if c < x < b)
        new_beta = tuple(sorted((beta_set - {b}) | {c}, reverse=True))
        total += (-1) ** height * _mn_recurse(_partition_from_beta(new_beta), rest)
    return total


def character(mu: Partition, rho: CycleType) -> int:
    """Murnaghan-Nakayama character of S_{|mu|} at the class with the given
    nontrivial cycles (padded with fixed points)."""
    rho = check_cycle_type(rho)
    if sum(mu) < support(rho):
        raise SizeMismatchError(f"|{format_partition(mu)}| < moved points {support(rho)}")
    return _mn_recurse(tuple(mu), cycle_lengths(rho))


def class_size(n: int, rho: CycleType) -> int:
    """Number of permutations in S_n with the given nontrivial cycles."""
    rho = check_cycle_type(rho)
    m = support(rho)
    if n < m:
        raise SizeMismatchError(f"n={n} < moved points {m}")
    num = 1
    for j in range(m):
        num *= n - j
    den = 1
    for i, c in enumerate(rho):
        den *= factorial(c) * (i + 2) ** c
    quotient, remainder = divmod(num, den)
    assert remainder == 0
    return quotient


def central_eigenvalue(n: int, rho: CycleType, mu: Partition) -> Fraction:
    """Scalar by which the class sum of type rho acts on the irreducible mu
    of S_n: |class| * character / dimension."""
    if sum(mu) != n:
        raise SizeMismatchError(f"|{format_partition(mu)}| != n={n}")
    return Fraction(class_size(n, rho) * character(mu, rho), hook_dim(mu))


def cycle_types_with_support_up_to(m_max: int) -> list[CycleType]:
    """All cycle types moving at most m_max points, identity included."""
    found: list[CycleType] = []

    def extend(counts: list[int], min_length: int, budget: int):
        found.append(check_cycle_type(counts))
        for length in range(max(min_length, 2), budget + 1):
            while len(counts) < length - 1:
                counts.append(0)
            counts[length - 2] += 1
            extend(counts, length, budget - length)
            counts[length - 2] -= 1
            while counts and counts[-1] == 0:
                counts.pop()

    extend([], 2, m_max)
    return sorted(set(found), key=lambda r: (support(r), r))
