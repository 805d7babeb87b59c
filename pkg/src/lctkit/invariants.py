"""Singularity invariants of monomial ideals of finite colength.

Everything here is exact: sequences of Łojasiewicz exponents, mixed
multiplicities, the Demailly-Pham number, the Li number and the log
canonical threshold, plus the inequality chain relating them for a
product of two ideals.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .errors import ConsistencyError, DimensionMismatch, InfiniteColength, NonPositiveEntry
from .ideal import MonomialIdeal, maximal_ideal, order, power, product, restrict
from .polyhedron import from_ideal

LCT_CONVENTION = (
    "lct is the Howald value 1/min{t : t(1,...,1) in the Newton polyhedron}; "
    "hence lct(m^r) = n/r"
)


def _require_finite(*ideals: MonomialIdeal) -> None:
    for I in ideals:
        if not from_ideal(I).has_finite_colength():
            raise InfiniteColength(f"{I} does not have finite colength")


def _same_dimension(*ideals: MonomialIdeal) -> int:
    dims = {I.dimension for I in ideals}
    if len(dims) != 1:
        raise DimensionMismatch(f"ideals live in different dimensions {sorted(dims)}")
    return dims.pop()


def skeleton(I: MonomialIdeal) -> MonomialIdeal:
    """Ideal generated by the vertices of the Newton polyhedron of ``I``.

    It has the same integral closure as ``I`` and usually far fewer
    generators, which keeps products small.
    """
    return MonomialIdeal(I.dimension, from_ideal(I).vertices)


def _diagonal_power(n: int, b: int) -> MonomialIdeal:
    # same integral closure as m^b
    return MonomialIdeal(n, tuple(tuple(b * int(i == j) for j in range(n)) for i in range(n)))


def _solve(A: list[list[Fraction]], y: list[Fraction]) -> list[Fraction]:
    """Solve the square system ``A x = y`` exactly."""
    k = len(A)
    M = [list(map(Fraction, row)) + [Fraction(v)] for row, v in zip(A, y)]
    for col in range(k):
        pivot = next((i for i in range(col, k) if M[i][col] != 0), None)
        if pivot is None:
            raise ConsistencyError("interpolation system is singular")
        M[col], M[pivot] = M[pivot], M[col]
        for i in range(k):
            if i != col and M[i][col] != 0:
                f = M[i][col] / M[col][col]
                M[i] = [a - f * b for a, b in zip(M[i], M[col])]
    return [M[i][k] / M[i][i] for i in range(k)]


def _as_positive_int(value: Fraction, what: str) -> int:
    if value.denominator != 1 or value <= 0:
        raise ConsistencyError(f"{what} came out as {value}, expected a positive integer")
    return int(value)


@lru_cache(maxsize=4096)
def loj_sequence(I: MonomialIdeal) -> tuple[int, ...]:
    """Łojasiewicz exponents of ``I`` restricted to generic sections, ascending.

    Entry ``i`` (1-based) is the largest order of a restriction of ``I`` to
    ``n - i + 1`` coordinate variables.
    """
    _require_finite(I)
    n = I.dimension
    return tuple(
        max(order(restrict(I, L)) for L in combinations(range(n), n - i + 1))
        for i in range(1, n + 1)
    )


def loj_exponent(I: MonomialIdeal, J: MonomialIdeal) -> Fraction:
    """Smallest ``r/s`` with ``J^r`` inside the integral closure of ``I^s``."""
    _same_dimension(I, J)
    _require_finite(I)
    P = from_ideal(I)
    return max(P.ray_threshold(v) for v in J.generators)


@lru_cache(maxsize=4096)
def multiplicity(I: MonomialIdeal) -> int:
    _require_finite(I)
    n = I.dimension
    return _as_positive_int(math.factorial(n) * from_ideal(I).covolume(), "multiplicity")


@lru_cache(maxsize=4096)
def e_sequence(I: MonomialIdeal) -> tuple[int, ...]:
    """Mixed multiplicities ``e_1(I), ..., e_n(I)``.

    Interpolates ``b -> e(I m^b) = sum_i C(n, i) e_i(I) b^(n-i)`` at
    ``b = 0, ..., n-1`` using ``e_0 = 1``.
    """
    _require_finite(I)
    n = I.dimension
    base = skeleton(I)
    A, y = [], []
    for b in range(n):
        shifted = base if b == 0 else product(base, _diagonal_power(n, b))
        A.append([math.comb(n, i) * b ** (n - i) for i in range(1, n + 1)])
        y.append(multiplicity(shifted) - b**n)
    seq = tuple(
        _as_positive_int(v, f"e_{i + 1}") for i, v in enumerate(_solve(A, y))
    )
    if seq[0] != order(I):
        raise ConsistencyError(f"e_1 = {seq[0]} differs from ord = {order(I)}")
    return seq


def mixed_multiplicity(ideals: Sequence[MonomialIdeal]) -> int:
    """Mixed multiplicity ``e(I_1, ..., I_n)``; symmetric in its arguments.

    With ``d`` distinct ideals, ``a -> e(I_1^a_1 ... I_d^a_d)`` is a
    homogeneous polynomial of degree ``n`` whose coefficient of ``a^alpha``
    is ``n!/alpha! * e(I_1[alpha_1], ..., I_d[alpha_d])``.  The polynomial is
    recovered exactly from its values at ``alpha + 1``, ``|alpha| = n``.
    """
    ideals = list(ideals)
    if not ideals:
        raise ValueError("need at least one ideal")
    n = _same_dimension(*ideals)
    if len(ideals) != n:
        raise DimensionMismatch(f"need exactly {n} ideals, got {len(ideals)}")
    _require_finite(*ideals)
    counts = Counter(ideals)
    distinct = list(counts)
    d = len(distinct)
    if d == 1:
        return multiplicity(distinct[0])
    skeletons = [skeleton(I) for I in distinct]
    basis = _compositions(n, d)
    A, y = [], []
    for alpha in basis:
        a = [k + 1 for k in alpha]
        A.append([math.prod(ai**bj for ai, bj in zip(a, beta)) for beta in basis])
        prod_ideal = None
        for S, ai in zip(skeletons, a):
            term = skeleton(power(S, ai))
            prod_ideal = term if prod_ideal is None else skeleton(product(prod_ideal, term))
        y.append(multiplicity(prod_ideal))
    coeffs = dict(zip(basis, _solve(A, y)))
    target = tuple(counts[I] for I in distinct)
    weight = Fraction(math.prod(math.factorial(k) for k in target), math.factorial(n))
    return _as_positive_int(coeffs[target] * weight, "mixed multiplicity")


def _compositions(n: int, d: int) -> list[tuple[int, ...]]:
    if d == 1:
        return [(n,)]
    return [(k,) + rest for k in range(n, -1, -1) for rest in _compositions(n - k, d - 1)]


def dp_from(e_seq: Sequence[int]) -> Fraction:
    """``1/e_1 + e_1/e_2 + ... + e_(n-1)/e_n``."""
    seq = [Fraction(e) for e in e_seq]
    if not seq:
        raise ValueError("empty sequence")
    if any(e <= 0 for e in seq):
        raise NonPositiveEntry(f"entries must be positive: {', '.join(map(str, seq))}")
    prev = [Fraction(1)] + seq[:-1]
    return sum((p / e for p, e in zip(prev, seq)), Fraction(0))


def li_from(l_seq: Sequence) -> Fraction:
    seq = [Fraction(v) for v in l_seq]
    if not seq:
        raise ValueError("empty sequence")
    if any(v <= 0 for v in seq):
        raise NonPositiveEntry(f"entries must be positive: {', '.join(map(str, seq))}")
    return sum((1 / v for v in seq), Fraction(0))


def dp(I: MonomialIdeal) -> Fraction:
    return dp_from(e_sequence(I))


def li(I: MonomialIdeal) -> Fraction:
    return li_from(loj_sequence(I))


def lct(I: MonomialIdeal) -> Fraction:
    """Log canonical threshold by Howald's formula.

    Only the diagonal ray is needed, so finite colength is not required.
    """
    return 1 / from_ideal(I).ray_threshold((1,) * I.dimension)


def is_hickel(I: MonomialIdeal) -> bool:
    return multiplicity(I) == math.prod(loj_sequence(I))


def is_power_of_maximal(I: MonomialIdeal) -> bool:
    """True iff the integral closure of ``I`` is ``m^r`` for some ``r``."""
    return multiplicity(I) == order(I) ** I.dimension


def is_diagonal(I: MonomialIdeal) -> bool:
    """True iff ``I`` has the integral closure of ``<x_1^r_1, ..., x_n^r_n>``."""
    _require_finite(I)
    return multiplicity(I) == math.prod(from_ideal(I).axis_intercepts)


def projectively_equivalent(I: MonomialIdeal, J: MonomialIdeal) -> tuple[int, int] | None:
    """Reduced ``(a, b)`` with equal integral closures of ``I^a`` and ``J^b``."""
    _same_dimension(I, J)
    _require_finite(I, J)
    r = from_ideal(I).axis_intercepts
    s = from_ideal(J).axis_intercepts
    ratio = Fraction(s[0], r[0])
    if any(Fraction(si, ri) != ratio for ri, si in zip(r, s)):
        return None
    a, b = ratio.numerator, ratio.denominator
    Pa = from_ideal(skeleton(power(skeleton(I), a)))
    Pb = from_ideal(skeleton(power(skeleton(J), b)))
    return (a, b) if Pa.equals(Pb) else None


def _fmt(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class InvariantReport:
    ideal: MonomialIdeal
    ord: int
    l_sequence: tuple[int, ...]
    e_sequence: tuple[int, ...]
    multiplicity: int
    dp: Fraction
    li: Fraction
    lct: Fraction
    is_hickel: bool
    is_diagonal: bool
    is_power_of_maximal: bool

    def to_dict(self) -> dict:
        return {
            "ideal": self.ideal.to_tuple_text(),
            "ord": self.ord,
            "l_sequence_asc": [_fmt(Fraction(v)) for v in self.l_sequence],
            "l_sequence_desc": [_fmt(Fraction(v)) for v in reversed(self.l_sequence)],
            "e_sequence": list(self.e_sequence),
            "multiplicity": self.multiplicity,
            "dp": _fmt(self.dp),
            "li": _fmt(self.li),
            "lct": _fmt(self.lct),
            "flags": {
                "hickel": self.is_hickel,
                "diagonal": self.is_diagonal,
                "power_of_maximal": self.is_power_of_maximal,
            },
        }


def invariant_report(I: MonomialIdeal) -> InvariantReport:
    _require_finite(I)
    ord_ = order(I)
    lseq = loj_sequence(I)
    eseq = e_sequence(I)
    e = multiplicity(I)
    report = InvariantReport(
        ideal=I,
        ord=ord_,
        l_sequence=lseq,
        e_sequence=eseq,
        multiplicity=e,
        dp=dp_from(eseq),
        li=li_from(lseq),
        lct=lct(I),
        is_hickel=is_hickel(I),
        is_diagonal=is_diagonal(I),
        is_power_of_maximal=is_power_of_maximal(I),
    )
    if eseq[0] != ord_ or eseq[-1] != e or lseq[0] != ord_:
        raise ConsistencyError(f"sequence endpoints disagree for {I}")
    if not report.li <= report.dp <= report.lct:
        raise ConsistencyError(
            f"Li <= DP <= lct fails for {I}: {report.li}, {report.dp}, {report.lct}"
        )
    if (report.li == report.dp) != report.is_hickel:
        raise ConsistencyError(f"Li = DP does not match the Hickel flag for {I}")
    return report


@dataclass(frozen=True)
class ChainReport:
    """Terms of ``sum 1/(L_i(I)+L_i(J)) <= Li(IJ) <= DP(IJ) <= lct(IJ)``."""

    left_sum: Fraction
    li_product: Fraction
    dp_product: Fraction
    lct_product: Fraction
    equalities: tuple[bool, bool, bool]
    projectively_equivalent: tuple[int, int] | None
    j_is_maximal: bool
    ij_is_hickel: bool
    closure_is_maximal_power: bool

    @property
    def terms(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.left_sum, self.li_product, self.dp_product, self.lct_product)

    def to_dict(self) -> dict:
        return {
            "left_sum": _fmt(self.left_sum),
            "li_product": _fmt(self.li_product),
            "dp_product": _fmt(self.dp_product),
            "lct_product": _fmt(self.lct_product),
            "equalities": list(self.equalities),
            "projectively_equivalent": (
                list(self.projectively_equivalent) if self.projectively_equivalent else None
            ),
            "j_is_maximal": self.j_is_maximal,
            "ij_is_hickel": self.ij_is_hickel,
            "closure_is_maximal_power": self.closure_is_maximal_power,
        }


def chain_report(I: MonomialIdeal, J: MonomialIdeal) -> ChainReport:
    """Evaluate the inequality chain for ``(I, J)`` and check its equality cases.

    Raises :class:`ConsistencyError` if any of the proven relations fails.
    """
    n = _same_dimension(I, J)
    _require_finite(I, J)
    IJ = product(I, J)
    lI, lJ, lIJ = loj_sequence(I), loj_sequence(J), loj_sequence(IJ)
    left = sum((Fraction(1, a + b) for a, b in zip(lI, lJ)), Fraction(0))
    li_ij, dp_ij, lct_ij = li_from(lIJ), dp(IJ), lct(IJ)
    witness = projectively_equivalent(I, J)
    j_max = J == maximal_ideal(n)
    report = ChainReport(
        left_sum=left,
        li_product=li_ij,
        dp_product=dp_ij,
        lct_product=lct_ij,
        equalities=(left == li_ij, li_ij == dp_ij, dp_ij == lct_ij),
        projectively_equivalent=witness,
        j_is_maximal=j_max,
        ij_is_hickel=is_hickel(IJ),
        closure_is_maximal_power=is_power_of_maximal(I),
    )
    _check_chain(I, J, report, lI, lJ, lIJ)
    return report


def _check_chain(I, J, report: ChainReport, lI, lJ, lIJ) -> None:
    where = f"I = {I}, J = {J}"
    if not report.left_sum <= report.li_product <= report.dp_product <= report.lct_product:
        raise ConsistencyError(f"chain is not monotone for {where}: {report.terms}")
    if any(c > a + b for a, b, c in zip(lI, lJ, lIJ)):
        raise ConsistencyError(f"L-sequence subadditivity fails for {where}")
    if report.equalities[1] != report.ij_is_hickel:
        raise ConsistencyError(f"second equality does not match IJ Hickel for {where}")
    if report.projectively_equivalent or report.j_is_maximal:
        if tuple(a + b for a, b in zip(lI, lJ)) != lIJ:
            raise ConsistencyError(f"L-sequence additivity fails for {where}")
        if not report.equalities[0]:
            raise ConsistencyError(f"first equality fails for {where}")
    if report.projectively_equivalent and (is_diagonal(I) or is_diagonal(J)):
        if not all(report.equalities):
            raise ConsistencyError(f"diagonal projective pair is not all equalities: {where}")
    if report.j_is_maximal and all(report.equalities) != report.closure_is_maximal_power:
        raise ConsistencyError(f"full equality does not match closure = m^r for {where}")
