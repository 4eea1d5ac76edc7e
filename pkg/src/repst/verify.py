"""Batch verification sweeps: every interpolated quantity against its
classical oracle, every polynomial identity at its full documented range.

Each suite returns a SuiteReport listing the individual comparisons that
failed (none, on a correct build).  The CLI exposes these under
`repst verify --suite ...`; the acceptance tests drive them directly.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from . import bounds, deligne, groupalg, partitions, schurweyl, snoracle
from .exact import ExactPolynomial, NotIntegerValuedError, T, TruncatedSeries, binomial_poly
from .partitions import format_partition, partitions_up_to
from .snoracle import format_cycle_type


@dataclass
class Failure:
    check: str
    where: dict
    detail: str

    def to_json(self) -> dict:
        return {"check": self.check, "where": self.where, "detail": self.detail}


@dataclass
class SuiteReport:
    suite: str
    checks: int = 0
    failures: list[Failure] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, ok: bool, check: str, where: dict, detail: str = ""):
        self.checks += 1
        if not ok:
            self.failures.append(Failure(check, where, detail))

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "checks": self.checks,
            "pass": self.passed,
            "failures": [f.to_json() for f in self.failures],
            "elapsed": round(self.elapsed, 3),
        }


def _validity_start(lam, rho=()) -> int:
    """Smallest n at which the padded partition exists and contains the
    cycles: interpolation identities are only claimed from there on."""
    lowest = sum(lam) + (lam[0] if lam else 0)
    return max(lowest, snoracle.support(rho))


def oracle_suite(max_size: int | None = None, max_n: int | None = None,
                 max_m: int | None = None) -> SuiteReport:
    """Interpolated dimensions, central-element eigenvalues, and character
    values against honest S_n, plus integrality certificates.

    With no overrides, each comparison runs over its full documented range
    (dimensions to size 6 / n = 20, central elements to size 4 / moved
    points 5 / n = 10).  Explicit limits apply to every sub-check.
    """
    report = SuiteReport("oracle")
    start = time.time()
    dim_size = max_size if max_size is not None else 6
    dim_n = max_n if max_n is not None else 20
    cen_size = max_size if max_size is not None else 4
    cen_n = max_n if max_n is not None else 10
    cen_m = max_m if max_m is not None else 5

    for lam in partitions_up_to(dim_size):
        poly = deligne.dimension_poly(lam)
        for n in range(_validity_start(lam), dim_n + 1):
            expected = snoracle.hook_dim(partitions.pad(lam, n))
            got = poly(n)
            report.record(got == expected, "dim-oracle",
                          {"lambda": format_partition(lam), "n": n},
                          f"expected {expected}, got {got}")

    for lam in partitions_up_to(dim_size):
        poly = deligne.jm_eigenvalue(lam)
        for n in range(max(_validity_start(lam, (1,)), 2), dim_n + 1):
            expected = snoracle.central_eigenvalue(n, (1,), partitions.pad(lam, n))
            got = poly(n)
            report.record(got == expected, "jm-oracle",
                          {"lambda": format_partition(lam), "n": n},
                          f"expected {expected}, got {got}")

    cycle_types = snoracle.cycle_types_with_support_up_to(cen_m)
    for lam in partitions_up_to(cen_size):
        for rho in cycle_types:
            frob = deligne.frobenius_coefficient(lam, rho)
            omega = deligne.central_eigenvalue_poly(rho, lam)
            for n in range(_validity_start(lam, rho), cen_n + 1):
                mu = partitions.pad(lam, n)
                where = {"lambda": format_partition(lam),
                         "rho": format_cycle_type(rho), "n": n}
                expected_chi = snoracle.character(mu, rho)
                got_chi = frob(n)
                report.record(got_chi == expected_chi, "character-shadow", where,
                              f"expected {expected_chi}, got {got_chi}")
                expected_eig = snoracle.central_eigenvalue(n, rho, mu)
                got_eig = omega(n)
                report.record(got_eig == expected_eig, "central-oracle", where,
                              f"expected {expected_eig}, got {got_eig}")

    for lam in partitions_up_to(dim_size):
        _certify(report, deligne.dimension_poly(lam), "integrality-dim",
                 {"lambda": format_partition(lam)})
    for rho in cycle_types:
        _certify(report, deligne.class_size_poly(rho), "integrality-class-size",
                 {"rho": format_cycle_type(rho)})
    for lam in partitions_up_to(cen_size):
        for rho in cycle_types:
            _certify(report, deligne.central_eigenvalue_poly(rho, lam),
                     "integrality-central",
                     {"lambda": format_partition(lam), "rho": format_cycle_type(rho)})

    stab_types = snoracle.cycle_types_with_support_up_to(min(cen_m, 4))
    for lam in partitions_up_to(min(cen_size, 4)):
        for rho in stab_types:
            same = deligne.frobenius_coefficient(lam, rho) == \
                deligne.frobenius_coefficient(lam, rho, variables=len(lam) + 1)
            report.record(same, "variable-stability",
                          {"lambda": format_partition(lam),
                           "rho": format_cycle_type(rho)},
                          "coefficient changed when adding a variable")

    report.elapsed = time.time() - start
    return report


def _certify(report: SuiteReport, poly: ExactPolynomial, check: str, where: dict):
    try:
        deligne.certify_integer_valued(poly)
        report.record(True, check, where)
    except NotIntegerValuedError as err:
        report.record(False, check, where, str(err))


def pieri_suite(max_size: int | None = None) -> SuiteReport:
    """(t - 1) * dim(lam) = sum of dims over the corner-move decomposition,
    as a polynomial identity, plus symmetry of the decomposition."""
    report = SuiteReport("pieri")
    start = time.time()
    size = max_size if max_size is not None else 8
    decomps = {lam: deligne.pieri(lam) for lam in partitions_up_to(size)}
    for lam, decomp in decomps.items():
        lhs = (T - 1) * deligne.dimension_poly(lam)
        rhs = ExactPolynomial()
        for mu, mult in decomp.items():
            rhs = rhs + deligne.dimension_poly(mu).scale(mult)
        report.record(lhs == rhs, "pieri-dimension",
                      {"lambda": format_partition(lam)},
                      f"expected {lhs}, got {rhs}")
    for lam, decomp in decomps.items():
        for mu, mult in decomp.items():
            if mu not in decomps:
                continue
            back = decomps[mu].get(lam, 0)
            report.record(back == mult, "pieri-symmetry",
                          {"lambda": format_partition(lam), "mu": format_partition(mu)},
                          f"multiplicity {mult} one way, {back} back")
    report.elapsed = time.time() - start
    return report


def stirling_suite(max_m: int | None = None, max_n: int | None = None) -> SuiteReport:
    """Filtered group-algebra Hilbert coefficients: interpolation route
    against elementary symmetric values beyond the nodes, agreement of the
    Gamma-ratio route, factorial row sums, integrality."""
    report = SuiteReport("stirling")
    start = time.time()
    m_cap = max_m if max_m is not None else 6
    n_cap = max_n if max_n is not None else 13
    for m in range(m_cap + 1):
        poly = groupalg.hilbert_coefficient(m)
        table = groupalg.elementary_symmetric_table(m, list(range(1, n_cap)))
        for n in range(2 * m + 1, n_cap + 1):
            expected = table[n - 1][m]
            got = poly(n)
            report.record(got == expected, "stirling-values", {"m": m, "n": n},
                          f"expected {expected}, got {got}")
        gamma = groupalg.hilbert_coefficient_gamma(m)
        report.record(gamma == poly, "gamma-route", {"m": m},
                      f"interpolation gave {poly}, Gamma expansion gave {gamma}")
        _certify(report, poly, "integrality-stirling", {"m": m})
    for n in range(min(9, n_cap) + 1):
        total = sum(groupalg.hilbert_coefficient(m)(n) for m in range(max(n, 1)))
        report.record(total == factorial(n), "stirling-row-sum", {"n": n},
                      f"expected {factorial(n)}, got {total}")
    report.elapsed = time.time() - start
    return report


def bounds_suite(max_n: int | None = None) -> SuiteReport:
    """Appendix inequalities: the dimension lower bound for every partition,
    the AM-GM step, and the long-row-or-column scan window."""
    report = SuiteReport("bounds")
    start = time.time()
    n_cap = max_n if max_n is not None else 18
    for n in range(1, n_cap + 1):
        sweep = bounds.bound_sweep(n)
        report.record(sweep.passed, "dimension-bound", {"n": n},
                      f"min slack {sweep.min_slack} at {format_partition(sweep.argmin)}")
    for n in range(1, min(12, n_cap) + 1):
        for mu in partitions.partitions_of(n):
            report.record(bounds.amgm_check(mu), "amgm",
                          {"mu": format_partition(mu)}, "inequality failed")
    if n_cap >= 15:
        for n in range(10, 16):
            violations = bounds.lemma_scan(Fraction(1), 1, n)
            report.record(not violations, "lemma-scan", {"C": "1", "k": 1, "n": n},
                          f"violations: {[format_partition(v) for v in violations]}")
    report.elapsed = time.time() - start
    return report


def graded_suite(degree: int | None = None) -> SuiteReport:
    """Tensor-power Hilbert series: binomial coefficients of (1+x)^t, the
    graded decomposition identity, the first filtration layer, and integer
    specializations."""
    report = SuiteReport("graded")
    start = time.time()
    deg = degree if degree is not None else 6
    series = schurweyl.tensor_power_hilbert(schurweyl.UnitalHilbert((1, 1)), 10)
    for k in range(11):
        got = series.coefficient((k,))
        expected = binomial_poly(0, k)
        report.record(got == expected, "binomial-series", {"k": k},
                      f"expected {expected}, got {got}")
    for d in (1, 2, 3):
        outcome = schurweyl.graded_decomposition_check(d, deg)
        report.record(outcome.passed, "graded-decomposition",
                      {"d": d, "D": deg},
                      f"first failing degree {outcome.first_failure}")
    for v in range(1, 6):
        poly = schurweyl.degree_one_dimension(v)
        h = schurweyl.tensor_power_hilbert(schurweyl.UnitalHilbert.ungraded(v - 1), 1)
        truncated = h.coefficient((0,)) + h.coefficient((1,))
        report.record(poly == truncated, "degree-one-layer", {"v": v},
                      f"expected {poly}, got {truncated}")
    for coeffs in ((1, 1), (1, 2, 1), (1, 0, 3)):
        h = schurweyl.UnitalHilbert(coeffs)
        power = schurweyl.tensor_power_hilbert(h, 6)
        base = TruncatedSeries((6,), {(k,): c for k, c in enumerate(coeffs)})
        product = TruncatedSeries.constant((6,), 1)
        for n in range(7):
            report.record(power.eval_t(n) == product, "integer-specialization",
                          {"h": ",".join(map(str, coeffs)), "n": n},
                          "t = n specialization differs from the n-fold product")
            product = product * base
    report.elapsed = time.time() - start
    return report


SUITES = {
    "oracle": oracle_suite,
    "pieri": pieri_suite,
    "stirling": stirling_suite,
    "bounds": bounds_suite,
    "graded": graded_suite,
}


def run_suites(name: str, max_size: int | None = None, max_n: int | None = None,
               max_m: int | None = None, degree: int | None = None) -> list[SuiteReport]:
    """Run one named suite, or all of them, with optional range overrides."""
    if name == "all":
        names = list(SUITES)
    elif name in SUITES:
        names = [name]
    else:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'")
    reports = []
    for suite_name in names:
        if suite_name == "oracle":
            reports.append(oracle_suite(max_size, max_n, max_m))
        elif suite_name == "pieri":
            reports.append(pieri_suite(max_size))
        elif suite_name == "stirling":
            reports.append(stirling_suite(max_m, max_n))
        elif suite_name == "bounds":
            reports.append(bounds_suite(max_n))
        elif suite_name == "graded":
            reports.append(graded_suite(degree))
    return reports
