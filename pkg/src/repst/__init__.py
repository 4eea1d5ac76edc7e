"""Exact interpolation of symmetric-group representation data to a formal
complex rank, cross-checked against classical S_n computations.

Subpackages by topic:

  exact       big-rational polynomials in t, binomial-coefficient basis,
              truncated multivariate power series
  partitions  Young diagram primitives
  snoracle    classical S_n dimensions, characters, class sums (the oracle)
  deligne     dimension polynomials, corner-move tensor rule, central-element
              eigenvalues at formal rank
  schurweyl   complex tensor powers, graded decomposition, highest-weight
              degeneration candidates
  groupalg    Hilbert coefficients of the filtered group algebra
  bounds      exact dimension lower bounds
  verify      batch identity sweeps used by the CLI and the acceptance tests
"""

from .exact import (
    BadConstantTermError,
    BinomialBasisPolynomial,
    ExactPolynomial,
    NonDivisibleError,
    NotIntegerValuedError,
    OutOfBoundsError,
    T,
    TruncatedSeries,
    binomial_poly,
    to_binomial_basis,
)
from .partitions import (
    LimitExceededError,
    PadTooSmallError,
    Partition,
    conjugate,
    pad,
    parse_partition,
    partitions_of,
)
from .snoracle import CycleType, SizeMismatchError, character, class_size, hook_dim

__version__ = "0.1.0"
