"""Monomial ideals as sets of minimal exponent vectors."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionMismatch, EmptyIdeal, ParseError, UnitIdeal, ZeroRestriction

ExponentVector = tuple[int, ...]

ALIASES = "xyzw"

# int64 is exact while all entries stay far below 2**63
_INT64_SAFE = 2**60


def normalize(generators: Iterable[Sequence[int]]) -> tuple[ExponentVector, ...]:
    """Return the divisibility-minimal generators, sorted lexicographically."""
    gens = {tuple(int(c) for c in g) for g in generators}
    if not gens:
        raise EmptyIdeal("ideal has no generators")
    for g in gens:
        if any(c < 0 for c in g):
            raise ValueError(f"negative exponent in {g}")
        if not any(g):
            raise UnitIdeal("generator with all exponents zero gives the unit ideal")
    if len({len(g) for g in gens}) != 1:
        raise DimensionMismatch("generators have different lengths")
    ordered = sorted(gens)
    if len(ordered) < 2:
        return tuple(ordered)
    if max(max(g) for g in ordered) < _INT64_SAFE and len(ordered) > 16:
        return tuple(_minimal_numpy(ordered))
    return tuple(_minimal_python(ordered))


def _minimal_python(ordered: list[ExponentVector]) -> list[ExponentVector]:
    # sort by degree so any divisor of g is seen before g
    kept: list[ExponentVector] = []
    for g in sorted(ordered, key=sum):
        if not any(all(a <= b for a, b in zip(h, g)) for h in kept):
            kept.append(g)
    return sorted(kept)


def _minimal_numpy(ordered: list[ExponentVector]) -> list[ExponentVector]:
    A = np.array(ordered, dtype=np.int64)
    if A.shape[1] == 2:
        # lexicographic sweep: keep points whose second entry drops below all earlier ones
        kept = []
        best = None
        for x, y in A[np.lexsort((A[:, 1], A[:, 0]))]:
            if best is None or y < best:
                kept.append((int(x), int(y)))
                best = y
        return sorted(kept)
    # a proper divisor has strictly smaller degree, so sweep degree levels
    deg = A.sum(axis=1)
    kept = np.empty((0, A.shape[1]), dtype=np.int64)
    for d in np.unique(deg):
        level = A[deg == d]
        if len(kept):
            divided = np.zeros(len(level), dtype=bool)
            step = max(1, 4_000_000 // (len(kept) * A.shape[1]))
            for start in range(0, len(level), step):
                block = level[start:start + step]
                divided[start:start + step] = np.all(
                    kept[None, :, :] <= block[:, None, :], axis=2
                ).any(axis=1)
            level = level[~divided]
        kept = np.concatenate([kept, level])
    return sorted(tuple(int(c) for c in g) for g in kept)


@dataclass(frozen=True)
class MonomialIdeal:
    """A proper monomial ideal of the local ring in ``dimension`` variables.

    ``generators`` is normalized on construction, so two instances compare
    equal exactly when they describe the same ideal.
    """

    dimension: int
    generators: tuple[ExponentVector, ...] = field(compare=True)

    def __post_init__(self):
        if self.dimension < 1:
            raise ValueError("dimension must be positive")
        gens = normalize(self.generators)
        if len(gens[0]) != self.dimension:
            raise DimensionMismatch(
                f"generators have length {len(gens[0])}, dimension is {self.dimension}"
            )
        object.__setattr__(self, "generators", gens)

    @classmethod
    def from_exponents(cls, generators: Iterable[Sequence[int]]) -> MonomialIdeal:
        gens = [tuple(g) for g in generators]
        if not gens:
            raise EmptyIdeal("ideal has no generators")
        return cls(len(gens[0]), tuple(gens))

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __mul__(self, other: MonomialIdeal) -> MonomialIdeal:
        return product(self, other)

    def __pow__(self, s: int) -> MonomialIdeal:
        return power(self, s)

    def __add__(self, other: MonomialIdeal) -> MonomialIdeal:
        return ideal_sum(self, other)

    def contains_monomial(self, k: Sequence[int]) -> bool:
        """True iff x^k lies in the ideal (some generator divides it)."""
        return any(all(a <= b for a, b in zip(g, k)) for g in self.generators)

    def to_text(self) -> str:
        return format_monomials(self)

    def to_tuple_text(self) -> str:
        return ",".join("(" + ",".join(str(c) for c in g) + ")" for g in self.generators)

    def __str__(self):
        return "<" + self.to_text() + ">"


def format_monomials(ideal: MonomialIdeal) -> str:
    n = ideal.dimension
    names = list(ALIASES[:n]) if n <= len(ALIASES) else [f"x{i + 1}" for i in range(n)]
    parts = []
    for g in ideal.generators:
        factors = []
        for name, e in zip(names, g):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        parts.append("*".join(factors))
    return ", ".join(parts)


_TUPLE = re.compile(r"\(([^()]*)\)")
_FACTOR = re.compile(r"(x\d+|[xyzw])(?:\^(\d+))?")


def parse_ideal(text: str, dimension: int | None = None) -> MonomialIdeal:
    """Parse ``"x^4, y^7, z^14, y^6*z"`` or ``"(4,0,0),(0,7,0)"``.

    Variables are ``x1, x2, ...`` or the aliases ``x, y, z, w``; the two
    naming styles cannot be mixed. Without ``dimension`` the ambient
    dimension is the highest variable index used.
    """
    if dimension is not None and dimension < 1:
        raise ParseError("dimension must be positive")
    compact = re.sub(r"\s+", "", text)
    if not compact:
        raise EmptyIdeal("ideal has no generators")
    if "(" in compact or ")" in compact:
        gens = _parse_tuples(compact)
    else:
        gens = _parse_monomials(compact, dimension)
    lengths = {len(g) for g in gens}
    if len(lengths) != 1:
        raise ParseError("tuples have different lengths")
    n = lengths.pop()
    if dimension is not None and n != dimension:
        raise ParseError(f"ideal uses {n} coordinates but dimension {dimension} was given")
    return MonomialIdeal(n, tuple(gens))


def _parse_tuples(compact: str) -> list[ExponentVector]:
    rest = _TUPLE.sub("", compact)
    if rest.strip(",;"):
        raise ParseError(f"unexpected text outside exponent tuples: {rest!r}")
    if re.search(r"\)\(", compact) or re.search(r"[,;]{2}", compact):
        raise ParseError("missing or repeated separator between tuples")
    gens = []
    for body in _TUPLE.findall(compact):
        try:
            coords = tuple(int(c) for c in body.split(","))
        except ValueError:
            raise ParseError(f"bad exponent tuple ({body})") from None
        if any(c < 0 for c in coords):
            raise ParseError(f"negative exponent in ({body})")
        gens.append(coords)
    if not gens:
        raise EmptyIdeal("ideal has no generators")
    return gens


def _parse_monomials(compact: str, dimension: int | None) -> list[ExponentVector]:
    terms = re.split(r"[,;]", compact)
    parsed: list[dict[int, int]] = []
    styles = set()
    for term in terms:
        if not term:
            raise ParseError("empty generator")
        if term == "1":
            raise UnitIdeal("generator 1 gives the unit ideal")
        exps: dict[int, int] = {}
        for chunk in term.split("*"):
            # juxtaposed factors such as "xy^2z" are an implicit product
            if not chunk or _FACTOR.sub("", chunk):
                raise ParseError(f"cannot parse factor {chunk!r}")
            for name, power in _FACTOR.findall(chunk):
                if len(name) == 1:
                    styles.add("alias")
                    idx = ALIASES.index(name)
                else:
                    styles.add("indexed")
                    idx = int(name[1:]) - 1
                    if idx < 0:
                        raise ParseError("variables are numbered from x1")
                k = int(power) if power else 1
                if k < 1:
                    raise ParseError(f"exponent must be at least 1 in {chunk!r}")
                exps[idx] = exps.get(idx, 0) + k
        parsed.append(exps)
    if len(styles) > 1:
        raise ParseError("cannot mix x,y,z,w aliases with x1,x2,... variables")
    n = max(max(e) for e in parsed) + 1
    if dimension is not None:
        if n > dimension:
            raise ParseError(f"variable index {n} exceeds dimension {dimension}")
        n = dimension
    if "alias" in styles and n > len(ALIASES):
        raise ParseError("aliases x,y,z,w are only available up to dimension 4")
    return [tuple(e.get(i, 0) for i in range(n)) for e in parsed]


def _check_same_dimension(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.dimension != J.dimension:
        raise DimensionMismatch(f"dimensions differ: {I.dimension} vs {J.dimension}")


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_same_dimension(I, J)
    sums = {tuple(a + b for a, b in zip(g, h)) for g in I.generators for h in J.generators}
    return MonomialIdeal(I.dimension, tuple(sums))


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_same_dimension(I, J)
    return MonomialIdeal(I.dimension, I.generators + J.generators)


def power(I: MonomialIdeal, s: int) -> MonomialIdeal:
    if s < 1:
        raise ValueError("power must be at least 1")
    result = None
    base = I
    while s:
        if s & 1:
            result = base if result is None else product(result, base)
        s >>= 1
        if s:
            base = product(base, base)
    return result


def maximal_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))


def restrict(I: MonomialIdeal, L: Iterable[int]) -> MonomialIdeal:
    """Image of ``I`` after setting the variables outside ``L`` to zero.

    ``L`` holds 0-based variable indices; the result lives in ``len(L)``
    variables, in increasing index order.
    """
    keep = sorted(set(L))
    if not keep:
        raise ValueError("restriction needs a nonempty set of variables")
    if keep[0] < 0 or keep[-1] >= I.dimension:
        raise IndexError(f"variable index out of range for dimension {I.dimension}")
    outside = [i for i in range(I.dimension) if i not in keep]
    survivors = [
        tuple(g[i] for i in keep) for g in I.generators if all(g[i] == 0 for i in outside)
    ]
    if not survivors:
        raise ZeroRestriction(f"no generator is supported on variables {keep}")
    return MonomialIdeal(len(keep), tuple(survivors))


def order(I: MonomialIdeal) -> int:
    return min(sum(g) for g in I.generators)


def permute(I: MonomialIdeal, perm: Sequence[int]) -> MonomialIdeal:
    """Rename variable ``perm[i]`` to position ``i``."""
    return MonomialIdeal(I.dimension, tuple(tuple(g[p] for p in perm) for g in I.generators))
