"""Brute-force oracles and randomized property suites.

Random ideals come from numpy's PCG64 generator.  Trial ``k`` of a run
with seed ``s`` draws from ``SeedSequence([s, k])``, so a trial can be
replayed on its own and a parallel run gives the same report as a serial
one.  Every suite sees the same population of ideals for a given seed.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

import numpy as np

from .errors import ConsistencyError, InfiniteColength, LctKitError
from .ideal import MonomialIdeal, ideal_sum, maximal_ideal, power, product
from .invariants import (
    chain_report,
    dp,
    e_sequence,
    is_diagonal,
    is_hickel,
    is_power_of_maximal,
    lct,
    li,
    loj_exponent,
    loj_sequence,
    multiplicity,
    projectively_equivalent,
)
from .polyhedron import _axis_intercepts, from_ideal

_SEED_MASK = 2**64 - 1


# -- oracles -----------------------------------------------------------------


def _finite_intercepts(I: MonomialIdeal) -> tuple[int, ...]:
    P = from_ideal(I)
    if not P.has_finite_colength():
        raise InfiniteColength(f"{I} does not have finite colength")
    return P.axis_intercepts


def colength(I: MonomialIdeal) -> int:
    """Number of monomials outside ``I``."""
    r = _axis_intercepts(I.generators, I.dimension)
    if None in r:
        raise InfiniteColength(f"{I} does not have finite colength")
    n = I.dimension
    if n == 1:
        return r[0]
    # need[k'] = smallest last exponent of a generator dividing x^(k', *)
    need = np.full(r[:-1], r[-1], dtype=np.int64)
    for g in I.generators:
        head = g[:-1]
        if all(c < bound for c, bound in zip(head, r[:-1])):
            need[head] = min(need[head], g[-1])
    for axis in range(n - 1):
        need = np.minimum.accumulate(need, axis=axis)
    return int(need.sum())


def approx_covolume(I: MonomialIdeal, resolution: int) -> Fraction:
    """Grid estimate ``#{k : k/s outside the polyhedron} / s^n``."""
    s = resolution
    if s < 1:
        raise ValueError("resolution must be positive")
    r = _finite_intercepts(I)
    n = I.dimension
    facets = from_ideal(I).facets
    if n == 1:
        count = max(-((-s * f.offset) // f.normal[0]) for f in facets)
        return Fraction(count, s)
    grid = np.indices(tuple(s * ri for ri in r[:-1]), dtype=np.int64)
    need = np.zeros(grid.shape[1:], dtype=np.int64)
    for f in facets:
        head = sum(a * grid[i] for i, a in enumerate(f.normal[:-1]))
        # smallest k_n with head + a_n k_n >= s b
        k_n = -((head - s * f.offset) // f.normal[-1])
        need = np.maximum(need, k_n)
    return Fraction(int(need.sum()), s**n)


def loj_exponent_bruteforce(I: MonomialIdeal, J: MonomialIdeal, max_s: int) -> Fraction:
    """Search ``min r/s`` with every generator of ``J^r`` in the polyhedron of ``I^s``."""
    r_max = max(_finite_intercepts(I))
    powers_of_J = {1: J}

    def J_to(r: int) -> MonomialIdeal:
        top = max(k for k in powers_of_J if k <= r)
        while top < r:
            powers_of_J[top + 1] = product(powers_of_J[top], J)
            top += 1
        return powers_of_J[r]

    best = None
    for s in range(1, max_s + 1):
        P = from_ideal(power(I, s))
        # J is inside m and m^(s * r_max) is inside the closure of I^s
        lo, hi = 1, s * r_max
        while lo < hi:
            mid = (lo + hi) // 2
            if all(P.contains(g) for g in J_to(mid).generators):
                hi = mid
            else:
                lo = mid + 1
        candidate = Fraction(lo, s)
        best = candidate if best is None else min(best, candidate)
    return best


# -- configuration and random ideals ---------------------------------------

SUITES = (
    "diagonal",
    "chain",
    "hickel",
    "maximal-power",
    "product-formula",
    "dp-monotone",
    "projective",
    "oracle-loj",
    "oracle-covolume",
    "oracle-colength",
)


@dataclass(frozen=True)
class SuiteConfig:
    dimension: int = 2
    trials: int = 1000
    max_exponent: int = 9
    max_generators: int = 6
    rng_seed: int = 0
    suites: tuple[str, ...] = SUITES
    max_s: int = 12
    workers: int = 1

    def __post_init__(self):
        if self.trials < 1 or self.max_exponent < 1 or self.dimension < 1:
            raise ValueError("trials, max_exponent and dimension must be positive")
        if self.max_s < 1 or self.workers < 1:
            raise ValueError("max_s and workers must be positive")
        if self.max_generators < self.dimension:
            raise ValueError("max_generators must be at least the dimension")
        unknown = set(self.suites) - set(SUITES)
        if unknown:
            raise ValueError(f"unknown suites: {sorted(unknown)}")


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed & _SEED_MASK, trial])))


def random_ideal(config: SuiteConfig, rng: np.random.Generator) -> MonomialIdeal:
    """Pure power on every axis plus up to ``max_generators - n`` random monomials."""
    n, top = config.dimension, config.max_exponent
    gens = []
    for i in range(n):
        e = [0] * n
        e[i] = int(rng.integers(1, top + 1))
        gens.append(tuple(e))
    extra = int(rng.integers(0, config.max_generators - n + 1))
    while extra:
        g = tuple(int(c) for c in rng.integers(0, top + 1, size=n))
        if any(g):
            gens.append(g)
            extra -= 1
    return MonomialIdeal(n, tuple(gens))


def random_diagonal_ideal(n: int, max_exponent: int, rng: np.random.Generator) -> MonomialIdeal:
    return random_ideal(SuiteConfig(dimension=n, max_exponent=max_exponent, max_generators=n), rng)


# -- suites ----------------------------------------------------------------


@dataclass
class _Trial:
    suite: str
    index: int
    violations: list[dict] = field(default_factory=list)
    candidates: list[str] = field(default_factory=list)

    def check(self, ok: bool, relation: str, ideals: Iterable[MonomialIdeal], **values) -> None:
        if not ok:
            self.violations.append(
                {
                    "suite": self.suite,
                    "trial": self.index,
                    "relation": relation,
                    "ideals": [I.to_tuple_text() for I in ideals],
                    "values": {k: _jsonable(v) for k, v in values.items()},
                }
            )

    def note_candidate(self, I: MonomialIdeal) -> None:
        # DP = lct without diagonal closure; logged, never judged
        if dp(I) == lct(I) and not is_diagonal(I):
            self.candidates.append(I.to_tuple_text())


def _jsonable(v):
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, (tuple, list)):
        return [_jsonable(x) for x in v]
    return v


def _suite_diagonal(t: _Trial, config: SuiteConfig, rng) -> None:
    I = random_diagonal_ideal(config.dimension, config.max_exponent, rng)
    r = from_ideal(I).axis_intercepts
    target = sum((Fraction(1, ri) for ri in r), Fraction(0))
    t.check(
        li(I) == dp(I) == lct(I) == target,
        "Li = DP = lct = sum 1/r_i",
        [I],
        li=li(I), dp=dp(I), lct=lct(I), target=target,
    )
    report = chain_report(I, power(I, 2))
    t.check(all(report.equalities), "chain(I, I^2) all equalities", [I], terms=report.terms)


def _suite_chain(t: _Trial, config: SuiteConfig, rng) -> None:
    I = random_ideal(config, rng)
    J = random_ideal(config, rng)
    n = config.dimension
    t.check(li(I) <= dp(I) <= lct(I), "Li <= DP <= lct", [I], li=li(I), dp=dp(I), lct=lct(I))
    report = chain_report(I, J)
    a, b, c, d = report.terms
    t.check(a <= b <= c <= d, "sum 1/(L(I)+L(J)) <= Li(IJ) <= DP(IJ) <= lct(IJ)", [I, J],
            terms=report.terms)
    lI, lJ, lIJ = loj_sequence(I), loj_sequence(J), loj_sequence(product(I, J))
    t.check(all(z <= x + y for x, y, z in zip(lI, lJ, lIJ)), "L(IJ) <= L(I) + L(J)", [I, J],
            l_i=lI, l_j=lJ, l_ij=lIJ)
    lmI = loj_sequence(product(maximal_ideal(n), I))
    t.check(lmI == tuple(x + 1 for x in lI), "L(mI) = L(I) + 1", [I], l_i=lI, l_mi=lmI)
    eI, eJ, eIJ = multiplicity(I), multiplicity(J), multiplicity(product(I, J))
    # float check only; exact roots are irrational
    t.check(
        eIJ ** (1 / n) <= eI ** (1 / n) + eJ ** (1 / n) + 1e-9,
        "e(IJ)^(1/n) <= e(I)^(1/n) + e(J)^(1/n)",
        [I, J],
        e_i=eI, e_j=eJ, e_ij=eIJ,
    )
    t.note_candidate(I)


def _suite_hickel(t: _Trial, config: SuiteConfig, rng) -> None:
    I = random_ideal(config, rng)
    lseq, eseq, e = loj_sequence(I), e_sequence(I), multiplicity(I)
    t.check((li(I) == dp(I)) == is_hickel(I), "Li = DP iff Hickel", [I],
            li=li(I), dp=dp(I), e=e, l_seq=lseq)
    t.check(e <= math.prod(lseq), "e <= prod L", [I], e=e, l_seq=lseq)
    e_prev = eseq[-2] if len(eseq) > 1 else 1
    t.check(Fraction(e, e_prev) <= loj_exponent(I, maximal_ideal(I.dimension)),
            "e/e_(n-1) <= L_0", [I], e_seq=eseq, l_seq=lseq)
    t.check(eseq[0] == lseq[0] and eseq[-1] == e, "e_1 = ord and e_n = e", [I], e_seq=eseq)
    t.note_candidate(I)


def _suite_maximal_power(t: _Trial, config: SuiteConfig, rng) -> None:
    I = random_ideal(config, rng)
    n = config.dimension
    # half the trials use an ideal with closure m^r, where equality must hold
    if rng.integers(0, 2):
        r = int(rng.integers(1, 4))
        high = [g for g in I.generators if sum(g) >= r]
        I = power(maximal_ideal(n), r)
        if high:
            I = ideal_sum(I, MonomialIdeal(n, tuple(high)))
    report = chain_report(I, maximal_ideal(n))
    t.check(all(report.equalities) == is_power_of_maximal(I),
            "full equality in chain(I, m) iff closure(I) = m^r", [I],
            terms=report.terms, equalities=report.equalities)
    t.check(report.equalities[0], "first equality for J = m", [I], terms=report.terms)


def _suite_product_formula(t: _Trial, config: SuiteConfig, rng) -> None:
    I = random_ideal(config, rng)
    n = config.dimension
    eseq = (1,) + e_sequence(I)
    expected = sum(math.comb(n, i) * eseq[i] for i in range(n + 1))
    got = multiplicity(product(maximal_ideal(n), I))
    t.check(got == expected, "e(mI) = sum C(n,i) e_i(I)", [I], e_mi=got, formula=expected)


def _suite_dp_monotone(t: _Trial, config: SuiteConfig, rng) -> None:
    I2 = random_ideal(config, rng)
    n = config.dimension
    mode = int(rng.integers(0, 3))
    if mode == 0:
        small, big = product(I2, maximal_ideal(n)), I2
    elif mode == 1:
        g = tuple(int(c) for c in rng.integers(0, config.max_exponent + 1, size=n))
        if not any(g):
            g = (1,) + (0,) * (n - 1)
        small, big = I2, ideal_sum(I2, MonomialIdeal(n, (g,)))
    else:
        # a lattice point of the polyhedron: same closure after adding it
        gens = I2.generators
        u = gens[int(rng.integers(0, len(gens)))]
        v = gens[int(rng.integers(0, len(gens)))]
        g = tuple(-((-a - b) // 2) for a, b in zip(u, v))
        small, big = I2, ideal_sum(I2, MonomialIdeal(n, (g,)))
    same = from_ideal(small).equals(from_ideal(big))
    t.check(dp(small) <= dp(big), "DP(I1) <= DP(I2) for I1 in I2", [small, big],
            dp_small=dp(small), dp_big=dp(big))
    t.check((dp(small) == dp(big)) == same, "DP equality iff equal polyhedra", [small, big],
            dp_small=dp(small), dp_big=dp(big), same_polyhedron=same)


def _suite_projective(t: _Trial, config: SuiteConfig, rng) -> None:
    I = random_ideal(config, rng)
    k = int(rng.integers(2, 4))
    J = power(I, k)
    witness = projectively_equivalent(I, J)
    t.check(witness == (k, 1), "I and I^k are projectively equivalent", [I], witness=witness)
    if witness:
        a, b = witness
        Ia, Jb = power(I, a), power(J, b)
        t.check(lct(Ia) == lct(Jb) and dp(Ia) == dp(Jb) and li(Ia) == li(Jb),
                "lct, DP, Li agree on I^a and J^b", [I, J])
    report = chain_report(I, J)
    t.check(report.equalities[0], "first equality for projectively equivalent pair", [I, J],
            terms=report.terms)


def _suite_oracle_loj(t: _Trial, config: SuiteConfig, rng) -> None:
    I = random_ideal(config, rng)
    J = random_ideal(config, rng)
    exact = loj_exponent(I, J)
    brute = loj_exponent_bruteforce(I, J, config.max_s)
    if exact.denominator <= config.max_s:
        t.check(exact == brute, "loj_exponent = brute-force search", [I, J],
                exact=exact, brute=brute)
    else:
        t.check(brute >= exact, "brute-force search never undershoots", [I, J],
                exact=exact, brute=brute)


def _suite_oracle_covolume(t: _Trial, config: SuiteConfig, rng) -> None:
    I = random_ideal(config, rng)
    exact = from_ideal(I).covolume()
    gap8 = approx_covolume(I, 8) - exact
    gap32 = approx_covolume(I, 32) - exact
    t.check(0 <= gap32 <= gap8, "grid estimate converges from above", [I],
            covolume=exact, gap8=gap8, gap32=gap32)


def _suite_oracle_colength(t: _Trial, config: SuiteConfig, rng) -> None:
    I = random_ideal(config, rng)
    n = config.dimension
    e = multiplicity(I)
    t.check(colength(I) >= from_ideal(I).covolume(), "colength >= covolume", [I],
            colength=colength(I), e=e)
    gaps = [Fraction(math.factorial(n) * colength(power(I, s)), s**n) - e for s in (4, 8)]
    t.check(0 <= gaps[1] <= gaps[0], "n! colength(I^s)/s^n decreases towards e", [I],
            gap4=gaps[0], gap8=gaps[1])


_SUITE_FUNCS: dict[str, Callable] = {
    "diagonal": _suite_diagonal,
    "chain": _suite_chain,
    "hickel": _suite_hickel,
    "maximal-power": _suite_maximal_power,
    "product-formula": _suite_product_formula,
    "dp-monotone": _suite_dp_monotone,
    "projective": _suite_projective,
    "oracle-loj": _suite_oracle_loj,
    "oracle-covolume": _suite_oracle_covolume,
    "oracle-colength": _suite_oracle_colength,
}


def run_trial(config: SuiteConfig, suite: str, index: int) -> _Trial:
    t = _Trial(suite, index)
    rng = trial_rng(config.rng_seed, index)
    try:
        _SUITE_FUNCS[suite](t, config, rng)
    except (ConsistencyError, LctKitError) as exc:
        t.violations.append(
            {"suite": suite, "trial": index, "relation": "exception",
             "ideals": [], "values": {"error": f"{type(exc).__name__}: {exc}"}}
        )
    return t


def _run_chunk(args) -> list[_Trial]:
    config, suite, indices = args
    return [run_trial(config, suite, i) for i in indices]


@dataclass
class SuiteReport:
    config: SuiteConfig
    counts: dict[str, dict[str, int]]
    violations: list[dict]
    conjecture_candidates: list[str]

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "dimension": self.config.dimension,
            "trials": self.config.trials,
            "seed": self.config.rng_seed,
            "suites": self.counts,
            "violations": self.violations,
            "conjecture_candidates": self.conjecture_candidates,
        }


def run_suite(config: SuiteConfig) -> SuiteReport:
    counts: dict[str, dict[str, int]] = {}
    violations: list[dict] = []
    candidates: set[str] = set()
    for suite in config.suites:
        indices = list(range(config.trials))
        if config.workers > 1:
            step = max(1, len(indices) // (4 * config.workers))
            chunks = [(config, suite, indices[i:i + step]) for i in range(0, len(indices), step)]
            with ProcessPoolExecutor(config.workers) as pool:
                trials = [t for part in pool.map(_run_chunk, chunks) for t in part]
        else:
            trials = _run_chunk((config, suite, indices))
        failed = sum(1 for t in trials if t.violations)
        counts[suite] = {"passed": len(trials) - failed, "failed": failed}
        for t in trials:
            violations.extend(t.violations)
            candidates.update(t.candidates)
    violations.sort(key=lambda v: (v["suite"], v["trial"], v["relation"]))
    return SuiteReport(config, counts, violations, sorted(candidates))
