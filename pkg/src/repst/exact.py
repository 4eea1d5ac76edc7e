"""Exact rational arithmetic: polynomials in one variable t and truncated
multivariate power series whose coefficients are such polynomials.

Everything is built on `fractions.Fraction`; no floating point appears
anywhere.  All identities verified elsewhere in the package are therefore
exact statements about rational numbers, and a mismatch is a bug, never
roundoff.

Representations:

  ExactPolynomial          dense tuple of Fractions, index = power of t
  BinomialBasisPolynomial  dense tuple of Fractions, index j = coefficient
                           of binom(t, j); integer coefficients certify an
                           integer-valued polynomial
  TruncatedSeries          sparse dict mapping exponent tuples to
                           ExactPolynomial, truncated per variable
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping, Sequence, Union

Scalar = Union[int, Fraction]


class NonDivisibleError(ArithmeticError):
    """Exact polynomial division left a nonzero remainder."""


class BadConstantTermError(ValueError):
    """Series operation applied to a series with the wrong constant term."""


class OutOfBoundsError(LookupError):
    """Requested a series coefficient beyond the truncation bounds."""


class NotIntegerValuedError(ValueError):
    """Polynomial is not integer-valued; carries the first bad coefficient."""

    def __init__(self, index: int, value: Fraction):
        super().__init__(f"coefficient of binom(t,{index}) is {value}, not an integer")
        self.index = index
        self.value = value


class ExactPolynomial:
    """Univariate polynomial in t with Fraction coefficients.

    Immutable; trailing zero coefficients are stripped so the leading
    coefficient is nonzero unless the polynomial is zero.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("ExactPolynomial is immutable")

    @classmethod
    def constant(cls, c: Scalar) -> "ExactPolynomial":
        return cls((c,))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial given degree -1."""
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __call__(self, value: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def _coerce(self, other) -> "ExactPolynomial":
        if isinstance(other, ExactPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return ExactPolynomial((other,))
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return ExactPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return ExactPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return ExactPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return ExactPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def exact_div(self, other: "ExactPolynomial") -> "ExactPolynomial":
        """Divide exactly, raising NonDivisibleError on a nonzero remainder."""
        other = self._coerce(other)
        if other.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        den = other.coeffs
        qlen = len(rem) - len(den) + 1
        if qlen <= 0:
            if rem:
                raise NonDivisibleError(f"{self} is not divisible by {other}")
            return ExactPolynomial()
        quot = [Fraction(0)] * qlen
        lead = den[-1]
        for i in range(qlen - 1, -1, -1):
            c = rem[i + len(den) - 1] / lead
            quot[i] = c
            if c:
                for j, d in enumerate(den):
                    rem[i + j] -= c * d
        if any(rem):
            raise NonDivisibleError(f"{self} is not divisible by {other}")
        return ExactPolynomial(quot)

    def scale(self, c: Scalar) -> "ExactPolynomial":
        c = Fraction(c)
        return ExactPolynomial(tuple(a * c for a in self.coeffs))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ExactPolynomial((other,))
        if not isinstance(other, ExactPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"ExactPolynomial({list(self.coeffs)!r})"

    def __str__(self):
        return format_terms(self.coeffs, lambda k: "" if k == 0 else ("t" if k == 1 else f"t^{k}"))


T = ExactPolynomial((0, 1))
ONE = ExactPolynomial((1,))
ZERO = ExactPolynomial()


def format_terms(coeffs: Sequence[Fraction], basis_name) -> str:
    """Render a coefficient sequence against a named basis, high index first."""
    if not any(coeffs):
        return "0"
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        name = basis_name(k)
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if name == "":
            body = str(mag)
        elif mag == 1:
            body = name
        else:
            body = f"{mag}*{name}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def binomial_poly(shift: int, k: int) -> ExactPolynomial:
    """The polynomial binom(t + shift, k) = prod_{j<k} (t + shift - j) / k!."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    p = ONE
    for j in range(k):
        p = p * ExactPolynomial((shift - j, 1))
    return p.scale(Fraction(1, factorial(k)))


def falling_factorial_poly(m: int) -> ExactPolynomial:
    """t (t-1) ... (t-m+1)."""
    p = ONE
    for j in range(m):
        p = p * ExactPolynomial((-j, 1))
    return p


class BinomialBasisPolynomial:
    """A polynomial written as sum_j c_j * binom(t, j).

    Integer c_j certify that the polynomial takes integer values at every
    integer; a fractional c_j witnesses the opposite (at t = j, given that
    values at 0..j-1 are integers).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("BinomialBasisPolynomial is immutable")

    def to_monomial(self) -> ExactPolynomial:
        p = ZERO
        for j, c in enumerate(self.coeffs):
            if c:
                p = p + binomial_poly(0, j).scale(c)
        return p

    @property
    def is_integer_valued(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def first_fractional(self):
        """(index, coefficient) of the first non-integer coefficient, or None."""
        for j, c in enumerate(self.coeffs):
            if c.denominator != 1:
                return j, c
        return None

    def __eq__(self, other):
        if not isinstance(other, BinomialBasisPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("binomial", self.coeffs))

    def __repr__(self):
        return f"BinomialBasisPolynomial({list(self.coeffs)!r})"

    def __str__(self):
        return format_terms(self.coeffs, lambda k: "" if k == 0 else f"binom(t,{k})")


def to_binomial_basis(p: ExactPolynomial) -> BinomialBasisPolynomial:
    """Expand p over binom(t, j) via the forward-difference table at 0, 1, 2, ...

    The j-th coefficient is the j-th forward difference of p at 0; the
    conversion is exact and inverse to BinomialBasisPolynomial.to_monomial.
    """
    if p.is_zero:
        return BinomialBasisPolynomial()
    row = [p(i) for i in range(p.degree + 1)]
    coeffs = [row[0]]
    while len(row) > 1:
        row = [row[i + 1] - row[i] for i in range(len(row) - 1)]
        coeffs.append(row[0])
    return BinomialBasisPolynomial(coeffs)


def lagrange_interpolate(points: Sequence[tuple[Scalar, Scalar]]) -> ExactPolynomial:
    """Unique polynomial of degree < len(points) through the given points.

    Newton's divided-difference form, all arithmetic exact.
    """
    xs = [Fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    ys = [Fraction(y) for _, y in points]
    # divided differences: table[j] holds f[x_i..x_{i+j}] as we sweep
    coeffs = [ys[0]]
    column = list(ys)
    for j in range(1, len(points)):
        column = [
            (column[i + 1] - column[i]) / (xs[i + j] - xs[i])
            for i in range(len(column) - 1)
        ]
        coeffs.append(column[0])
    poly = ZERO
    basis = ONE
    for j, c in enumerate(coeffs):
        poly = poly + basis.scale(c)
        basis = basis * ExactPolynomial((-xs[j], 1))
    return poly


# --- JSON serialization -----------------------------------------------------
#
# Wire format: {"basis": "monomial"|"binomial",
#               "coeffs": [[numerator, denominator], ...]}
# with numerators and denominators as decimal strings (arbitrary precision).


def poly_to_json(p) -> dict:
    if isinstance(p, ExactPolynomial):
        basis = "monomial"
    elif isinstance(p, BinomialBasisPolynomial):
        basis = "binomial"
    else:
        raise TypeError(f"cannot serialize {type(p).__name__}")
    return {
        "basis": basis,
        "coeffs": [[str(c.numerator), str(c.denominator)] for c in p.coeffs],
    }


def poly_from_json(data: Mapping):
    coeffs = [Fraction(int(num), int(den)) for num, den in data["coeffs"]]
    basis = data["basis"]
    if basis == "monomial":
        return ExactPolynomial(coeffs)
    if basis == "binomial":
        return BinomialBasisPolynomial(coeffs)
    raise ValueError(f"unknown basis {basis!r}")


def poly_dumps(p) -> str:
    return json.dumps(poly_to_json(p))


def poly_loads(text: str):
    return poly_from_json(json.loads(text))


# --- Truncated multivariate power series ------------------------------------


def _as_poly(value) -> ExactPolynomial:
    if isinstance(value, ExactPolynomial):
        return value
    return ExactPolynomial((value,))


class TruncatedSeries:
    """Formal power series in several commuting variables, truncated so the
    exponent of variable i never exceeds bounds[i].

    Coefficients are ExactPolynomial in t.  Exponents outside the bounds are
    silently dropped on construction and during arithmetic (that is what
    truncation means); *querying* such a coefficient raises OutOfBoundsError
    because the stored data says nothing about it.

    Binary operations intersect the truncation bounds variable by variable:
    a coefficient of the result is only trustworthy where both operands are.
    """

    __slots__ = ("bounds", "terms")

    def __init__(self, bounds: Sequence[int], terms: Mapping[tuple[int, ...], object] = ()):
        bounds = tuple(int(b) for b in bounds)
        if any(b < 0 for b in bounds):
            raise ValueError("truncation bounds must be nonnegative")
        clean: dict[tuple[int, ...], ExactPolynomial] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exp, coeff in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != len(bounds):
                raise ValueError("exponent length does not match variable count")
            if any(e < 0 for e in exp):
                raise ValueError("negative exponent in truncated series")
            if any(e > b for e, b in zip(exp, bounds)):
                continue
            poly = _as_poly(coeff)
            if not poly.is_zero:
                clean[exp] = poly
        object.__setattr__(self, "bounds", bounds)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @property
    def nvars(self) -> int:
        return len(self.bounds)

    @classmethod
    def constant(cls, bounds: Sequence[int], value) -> "TruncatedSeries":
        return cls(bounds, {(0,) * len(bounds): value})

    @classmethod
    def monomial(cls, bounds: Sequence[int], exponent: Sequence[int], coeff=1) -> "TruncatedSeries":
        return cls(bounds, {tuple(exponent): coeff})

    def coefficient(self, exponent: Sequence[int]) -> ExactPolynomial:
        exp = tuple(int(e) for e in exponent)
        if len(exp) != self.nvars:
            raise OutOfBoundsError(f"exponent {exp} has wrong arity for {self.nvars} variables")
        if any(e < 0 or e > b for e, b in zip(exp, self.bounds)):
            raise OutOfBoundsError(f"exponent {exp} outside truncation bounds {self.bounds}")
        return self.terms.get(exp, ZERO)

    def constant_term(self) -> ExactPolynomial:
        return self.terms.get((0,) * self.nvars, ZERO)

    def _common_bounds(self, other: "TruncatedSeries") -> tuple[int, ...]:
        if self.nvars != other.nvars:
            raise ValueError("series have different variable counts")
        return tuple(min(a, b) for a, b in zip(self.bounds, other.bounds))

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        bounds = self._common_bounds(other)
        merged = dict(self.terms)
        for exp, coeff in other.terms.items():
            prev = merged.get(exp)
            merged[exp] = coeff if prev is None else prev + coeff
        return TruncatedSeries(bounds, merged)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.bounds, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        bounds = self._common_bounds(other)
        out: dict[tuple[int, ...], ExactPolynomial] = {}
        small, large = (self.terms, other.terms)
        if len(small) > len(large):
            small, large = large, small
        for ea, ca in small.items():
            for eb, cb in large.items():
                exp = tuple(x + y for x, y in zip(ea, eb))
                if any(e > b for e, b in zip(exp, bounds)):
                    continue
                prod = ca * cb
                prev = out.get(exp)
                out[exp] = prod if prev is None else prev + prod
        return TruncatedSeries(bounds, out)

    def scale(self, value) -> "TruncatedSeries":
        poly = _as_poly(value)
        return TruncatedSeries(self.bounds, {e: c * poly for e, c in self.terms.items()})

    def __pow__(self, n: int) -> "TruncatedSeries":
        if n < 0:
            raise ValueError("negative series power")
        result = TruncatedSeries.constant(self.bounds, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def exp(self) -> "TruncatedSeries":
        """exp of a series with zero constant term (finite sum under truncation)."""
        if not self.constant_term().is_zero:
            raise BadConstantTermError("exp requires constant term 0")
        result = TruncatedSeries.constant(self.bounds, 1)
        term = TruncatedSeries.constant(self.bounds, 1)
        for k in range(1, sum(self.bounds) + 1):
            term = (term * self).scale(Fraction(1, k))
            if not term.terms:
                break
            result = result + term
        return result

    def log(self) -> "TruncatedSeries":
        """log of a series with constant term 1."""
        if self.constant_term() != ONE:
            raise BadConstantTermError("log requires constant term 1")
        u = self - TruncatedSeries.constant(self.bounds, 1)
        result = TruncatedSeries(self.bounds)
        power = TruncatedSeries.constant(self.bounds, 1)
        for k in range(1, sum(self.bounds) + 1):
            power = power * u
            if not power.terms:
                break
            result = result + power.scale(Fraction((-1) ** (k + 1), k))
        return result

    def pow_poly(self, exponent: ExactPolynomial) -> "TruncatedSeries":
        """h**g(t) for a series h with constant term 1 and polynomial exponent g.

        Expanded as the generalized binomial series
        sum_d binom(g, d) (h - 1)^d, which terminates under truncation and
        agrees with exp(g * log h) as a formal identity.
        """
        if self.constant_term() != ONE:
            raise BadConstantTermError("pow_poly requires constant term 1")
        exponent = _as_poly(exponent)
        u = self - TruncatedSeries.constant(self.bounds, 1)
        result = TruncatedSeries.constant(self.bounds, 1)
        power = TruncatedSeries.constant(self.bounds, 1)
        binom = ONE
        for d in range(1, sum(self.bounds) + 1):
            power = power * u
            if not power.terms:
                break
            binom = (binom * (exponent - (d - 1))).scale(Fraction(1, d))
            result = result + power.scale(binom)
        return result

    def eval_t(self, value: Scalar) -> "TruncatedSeries":
        """Specialize every polynomial coefficient at t = value."""
        return TruncatedSeries(self.bounds, {e: c(value) for e, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.bounds == other.bounds and self.terms == other.terms

    def __repr__(self):
        items = ", ".join(f"{e}: {c}" for e, c in sorted(self.terms.items()))
        return f"TruncatedSeries(bounds={self.bounds}, {{{items}}})"


def convolve_coefficient(a: TruncatedSeries, b: TruncatedSeries,
                         target: Sequence[int]) -> ExactPolynomial:
    """Coefficient of the given exponent in a*b, without forming the product.

    Iterates the sparser factor and looks up the complementary exponent in
    the other; much cheaper than a full multiplication when only one
    coefficient is wanted.
    """
    target = tuple(int(e) for e in target)
    if a.nvars != b.nvars or len(target) != a.nvars:
        raise ValueError("variable counts do not match")
    bounds = tuple(min(x, y) for x, y in zip(a.bounds, b.bounds))
    if any(e < 0 or e > bd for e, bd in zip(target, bounds)):
        raise OutOfBoundsError(f"target {target} outside truncation bounds {bounds}")
    outer, inner = (a, b) if len(a.terms) <= len(b.terms) else (b, a)
    total = ZERO
    for exp, coeff in outer.terms.items():
        rest = tuple(t - e for t, e in zip(target, exp))
        if any(r < 0 for r in rest):
            continue
        match = inner.terms.get(rest)
        if match is not None:
            total = total + coeff * match
    return total
