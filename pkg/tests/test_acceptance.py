"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line in ``RESULTS``; the lines are printed in
pytest's terminal summary, or directly when this file is run as a script:

    python3 tests/test_acceptance.py
"""

from __future__ import annotations

import sys
from fractions import Fraction as F

import pytest

from lctkit import (
    chain_report,
    dp,
    dp_from,
    e_sequence,
    from_ideal,
    is_hickel,
    lct,
    li,
    li_from,
    loj_exponent,
    loj_sequence,
    maximal_ideal,
    multiplicity,
    parse_ideal,
    power,
    product,
)
from lctkit.harness import (
    SuiteConfig,
    loj_exponent_bruteforce,
    random_diagonal_ideal,
    random_ideal,
    run_suite,
    trial_rng,
)

pytestmark = pytest.mark.acceptance

RESULTS: dict[str, str] = {}

SEED = 0
m3 = maximal_ideal(3)
I0 = parse_ideal("x^4, y^7, z^14, y^6*z")


def record(key: str, title: str, checks: list[tuple[str, bool]]) -> list[str]:
    failed = [name for name, ok in checks if not ok]
    status = "FAIL" if failed else "PASS"
    detail = f"  failing: {'; '.join(failed)}" if failed else ""
    passed = len(checks) - len(failed)
    RESULTS[key] = f"[{status}] criterion {key}: {title} ({passed}/{len(checks)} checks){detail}"
    return failed


def suite_checks(label: str, config: SuiteConfig) -> list[tuple[str, bool]]:
    report = run_suite(config)
    checks = []
    for name, counts in report.counts.items():
        ok = counts["failed"] == 0 and counts["passed"] == config.trials
        checks.append((f"{label} {name}: {counts['passed']}/{config.trials} trials pass", ok))
    return checks


# -- criterion 1 ------------------------------------------------------------

STATED_DP = F(35437, 85285)


def criterion_1_checks() -> list[tuple[str, bool]]:
    mI0 = product(m3, I0)
    got_dp = dp(mI0)
    return [
        ("loj_sequence(I0) = (4,7,14)", loj_sequence(I0) == (4, 7, 14)),
        ("e_sequence(I0) = (4,28,364)", e_sequence(I0) == (4, 28, 364)),
        ("e_sequence(m3*I0) = (5,37,461)", e_sequence(mI0) == (5, 37, 461)),
        ("li(m3*I0) = 47/120", li(mI0) == F(47, 120)),
        (f"dp(m3*I0) = 35437/85285 (computed {got_dp.numerator}/{got_dp.denominator})",
         got_dp == STATED_DP),
        ("lct(m3*I0) = 4/9", lct(mI0) == F(4, 9)),
        ("is_hickel(I0) = false", is_hickel(I0) is False),
    ]


@pytest.mark.xfail(
    strict=True,
    reason="35437/85285 is not 1/5 + 5/37 + 37/461 = 35427/85285; the stated value is "
    "inconsistent with its own e-sequence (5, 37, 461), which is reproduced exactly",
)
def test_criterion_1_briancon_speder_t0():
    failed = record("1", "t=0 branch: L, e, Li, DP, lct, Hickel", criterion_1_checks())
    assert not failed, failed


def test_criterion_1_dp_is_the_exact_sum_of_its_terms():
    # the e-sequence of the criterion determines DP; this is the value it forces
    assert dp(product(m3, I0)) == F(1, 5) + F(5, 37) + F(37, 461) == F(35427, 85285)


# -- criterion 2 ------------------------------------------------------------


def test_criterion_2_briancon_speder_monomial_part():
    checks = [
        ("lct(m3*<x^4,y^6,z^14>) = 41/90",
         lct(product(m3, parse_ideal("x^4, y^6, z^14"))) == F(41, 90)),
        ("dp_from(5,35,455) = 191/455", dp_from((5, 35, 455)) == F(191, 455)),
        ("li_from(15,15/2,5) = 2/5", li_from((15, F(15, 2), 5)) == F(2, 5)),
    ]
    failed = record("2", "t!=0 monomial part and from-data", checks)
    assert not failed, failed


# -- criterion 3 ------------------------------------------------------------


def test_criterion_3_ideals_with_one_interior_corner():
    I = parse_ideal("x*y^2*z, x^5, y^6, z^5")
    J = parse_ideal("x*y*z, x^5, y^6, z^5")
    checks = [
        ("e(<xy^2z,x^5,y^6,z^5>) = 110", multiplicity(I) == 110),
        ("li(<xy^2z,x^5,y^6,z^5>) = 37/60", li(I) == F(37, 60)),
        ("e(<xyz,x^5,y^6,z^5>) = 85", multiplicity(J) == 85),
        ("li(<xyz,x^5,y^6,z^5>) = 7/10", li(J) == F(7, 10)),
    ]
    failed = record("3", "<x y^2 z, x^5, y^6, z^5> and <x y z, x^5, y^6, z^5>: e and Li", checks)
    assert not failed, failed


# -- criterion 4 ------------------------------------------------------------


def test_criterion_4_diagonal_identities():
    checks = []
    for n in (1, 2, 3):
        bad = 0
        for k in range(200):
            I = random_diagonal_ideal(n, 9, trial_rng(SEED, k))
            target = sum((F(1, r) for r in from_ideal(I).axis_intercepts), F(0))
            same = li(I) == dp(I) == lct(I) == target
            if not (same and all(chain_report(I, power(I, 2)).equalities)):
                bad += 1
        checks.append((f"n={n}: 200 diagonal ideals with Li = DP = lct = sum 1/r_i and "
                       f"chain(I, I^2) all equalities ({bad} bad)", bad == 0))
    failed = record("4", "diagonal identity suite", checks)
    assert not failed, failed


# -- criterion 5 ------------------------------------------------------------


def test_criterion_5_chain_suite():
    checks = []
    for n in (2, 3):
        checks += suite_checks(f"n={n}", SuiteConfig(dimension=n, trials=1000, rng_seed=SEED,
                                                     suites=("chain",)))
    failed = record("5", "chain, subadditivity and L(mI) = L(I)+1 on 1000 ideals per n", checks)
    assert not failed, failed


# -- criterion 6 ------------------------------------------------------------


def test_criterion_6_equality_characterizations():
    checks = []
    for n in (2, 3):
        checks += suite_checks(
            f"n={n}",
            SuiteConfig(dimension=n, trials=1000, rng_seed=SEED,
                        suites=("hickel", "maximal-power", "product-formula")),
        )
        checks += suite_checks(
            f"n={n}",
            SuiteConfig(dimension=n, trials=500, rng_seed=SEED, suites=("dp-monotone",)),
        )
    failed = record("6", "Hickel, power-of-maximal, e/e_(n-1), product formula, DP monotone",
                    checks)
    assert not failed, failed


# -- criterion 7 ------------------------------------------------------------


def _loj_population(max_exponent: int) -> list[tuple]:
    cfg = SuiteConfig(dimension=2, max_exponent=max_exponent)
    pairs = []
    for k in range(200):
        rng = trial_rng(SEED, k)
        pairs.append((random_ideal(cfg, rng), random_ideal(cfg, rng)))
    return pairs


def test_criterion_7_oracle_equivalence():
    # literal equality at max_s = 12 on a population whose exponents all have
    # denominator at most 12, where the search is guaranteed to reach them
    pairs = _loj_population(6)
    max_den = max(loj_exponent(I, J).denominator for I, J in pairs)
    equal = sum(loj_exponent(I, J) == loj_exponent_bruteforce(I, J, 12) for I, J in pairs)
    checks = [
        (f"200 pairs (max exponent 6, largest denominator {max_den}): "
         f"loj_exponent = brute force with max_s = 12 on {equal}", equal == 200 and max_den <= 12),
    ]
    # default population: equality below the search budget, never an undershoot above it
    checks += suite_checks("n=2 default population",
                           SuiteConfig(dimension=2, trials=200, rng_seed=SEED, max_s=12,
                                       suites=("oracle-loj",)))
    for n in (2, 3):
        checks += suite_checks(f"n={n}", SuiteConfig(dimension=n, trials=100, rng_seed=SEED,
                                                     suites=("oracle-covolume", "oracle-colength")))
    failed = record("7", "brute-force Loj exponent, grid covolume, staircase colength", checks)
    assert not failed, failed


# -- criterion 8 ------------------------------------------------------------


def test_criterion_8_exclusions_are_documented():
    # analytic germ invariants are out of scope; their numbers enter only as data
    checks = [
        ("mu*-based values accepted as from-data input",
         dp_from((5, 35, 455)) == F(191, 455) and li_from((15, F(15, 2), 5)) == F(2, 5)),
    ]
    failed = record("8", "excluded analytic results (covered by property suites)", checks)
    assert not failed, failed


def _run_all() -> int:
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]
    for t in tests:
        try:
            t()
        except AssertionError:
            pass
    for key in sorted(RESULTS):
        print(RESULTS[key])
    return 0 if all(line.startswith("[PASS]") for line in RESULTS.values()) else 1


if __name__ == "__main__":
    sys.exit(_run_all())
