"""Monomials and monomial ideals over a fixed, ordered set of variables.

A monomial is a tuple of nonnegative exponents, one per variable.  A
:class:`MonomialIdeal` stores its minimal generators and is immutable;
every operation returns a fresh, minimalized ideal.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

Monomial = tuple[int, ...]

# Exponents are Python ints and cannot overflow; anything beyond this bound
# is almost certainly a bug and is rejected loudly.
MAX_EXPONENT = 2**31 - 1


class DimensionError(ValueError):
    """Raised when monomials or ideals from different ambient rings meet."""


def _check_same(a: Sequence[int], b: Sequence[int]) -> None:
    if len(a) != len(b):
        raise DimensionError(f"ambient size mismatch: {len(a)} vs {len(b)}")


def monomial(exponents: Iterable[int]) -> Monomial:
    """Validate and freeze an exponent vector."""
    m = tuple(int(e) for e in exponents)
    for e in m:
        if e < 0:
            raise ValueError(f"negative exponent in {m}")
        if e > MAX_EXPONENT:
            raise OverflowError(f"exponent {e} exceeds {MAX_EXPONENT}")
    return m


def unit(n: int) -> Monomial:
    return (0,) * n


def variable(n: int, i: int) -> Monomial:
    """The i-th variable (0-based) in a ring with n variables."""
    if not 0 <= i < n:
        raise IndexError(f"variable index {i} out of range for n={n}")
    return tuple(1 if j == i else 0 for j in range(n))


def squarefree(n: int, support: Iterable[int]) -> Monomial:
    s = set(support)
    return tuple(1 if j in s else 0 for j in range(n))


def degree(m: Monomial) -> int:
    return sum(m)


def support(m: Monomial) -> tuple[int, ...]:
    return tuple(i for i, e in enumerate(m) if e)


def lcm(a: Monomial, b: Monomial) -> Monomial:
    _check_same(a, b)
    return tuple(x if x >= y else y for x, y in zip(a, b))


def gcd(a: Monomial, b: Monomial) -> Monomial:
    _check_same(a, b)
    return tuple(x if x <= y else y for x, y in zip(a, b))


def mul(a: Monomial, b: Monomial) -> Monomial:
    _check_same(a, b)
    return tuple(x + y for x, y in zip(a, b))


def divides(a: Monomial, b: Monomial) -> bool:
    _check_same(a, b)
    return all(x <= y for x, y in zip(a, b))


def quotient(a: Monomial, b: Monomial) -> Monomial:
    """a / gcd(a, b): the part of a that b does not absorb."""
    _check_same(a, b)
    return tuple(x - y if x > y else 0 for x, y in zip(a, b))


def _minimal(gens: Iterable[Monomial]) -> frozenset[Monomial]:
    # Sorting by degree means a divisor is always seen before its multiples.
    ordered = sorted(set(gens), key=lambda m: (sum(m), m))
    kept: list[Monomial] = []
    for m in ordered:
        for k in kept:
            if all(x <= y for x, y in zip(k, m)):
                break
        else:
            kept.append(m)
    return frozenset(kept)


def format_monomial(m: Monomial) -> str:
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return "*".join(parts) if parts else "1"


_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str, n: int) -> Monomial:
    """Inverse of :func:`format_monomial`, e.g. ``"x1^2*x3"``."""
    text = text.strip()
    exps = [0] * n
    if text == "1":
        return tuple(exps)
    for factor in text.split("*"):
        match = _FACTOR.match(factor.strip())
        if not match:
            raise ValueError(f"cannot parse factor {factor!r}")
        i = int(match.group(1)) - 1
        if not 0 <= i < n:
            raise DimensionError(f"variable x{i + 1} outside ring with {n} variables")
        exps[i] += int(match.group(2) or 1)
    return monomial(exps)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators.

    The zero ideal has no generators; the unit ideal has the single
    generator ``(0, ..., 0)``.  Equality is equality of minimal
    generating sets, which for monomial ideals is ideal equality.
    """

    n: int
    gens: frozenset[Monomial]

    def __init__(self, n: int, gens: Iterable[Sequence[int]] = ()):
        checked = []
        for g in gens:
            g = monomial(g)
            if len(g) != n:
                raise DimensionError(f"generator {g} has length {len(g)}, expected {n}")
            checked.append(g)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "gens", _minimal(checked))

    @classmethod
    def _trusted(cls, n: int, gens: Iterable[Monomial]) -> "MonomialIdeal":
        # Skips validation for generators built from already-valid monomials.
        obj = object.__new__(cls)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "gens", _minimal(gens))
        return obj

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n)

    @classmethod
    def unit_ideal(cls, n: int) -> "MonomialIdeal":
        return cls(n, [unit(n)])

    @classmethod
    def maximal(cls, n: int) -> "MonomialIdeal":
        return cls(n, [variable(n, i) for i in range(n)])

    @classmethod
    def prime(cls, n: int, variables: Iterable[int]) -> "MonomialIdeal":
        return cls(n, [variable(n, i) for i in variables])

    @classmethod
    def parse(cls, text: str, n: int) -> "MonomialIdeal":
        text = text.strip()
        if not text or text == "0":
            return cls(n)
        return cls(n, [parse_monomial(t, n) for t in text.split(",")])

    def __len__(self) -> int:
        return len(self.gens)

    def __str__(self) -> str:
        if not self.gens:
            return "0"
        return ", ".join(format_monomial(g) for g in self.sorted_gens())

    def sorted_gens(self) -> list[Monomial]:
        """Generators in lexicographic order with x1 > x2 > ... > xn."""
        return sorted(self.gens, key=lambda m: tuple(-e for e in m))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return unit(self.n) in self.gens

    def max_exponents(self) -> Monomial:
        if not self.gens:
            return unit(self.n)
        return tuple(max(col) for col in zip(*self.gens))

    def _same(self, other: "MonomialIdeal") -> None:
        if self.n != other.n:
            raise DimensionError(f"ambient size mismatch: {self.n} vs {other.n}")

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._same(other)
        return MonomialIdeal._trusted(self.n, self.gens | other.gens)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._same(other)
        return MonomialIdeal._trusted(
            self.n,
            (tuple(x + y for x, y in zip(a, b)) for a in self.gens for b in other.gens),
        )

    def __pow__(self, s: int) -> "MonomialIdeal":
        if s < 0:
            raise ValueError("negative power")
        result = MonomialIdeal.unit_ideal(self.n)
        for _ in range(s):
            result = result * self
        return result

    def __and__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._same(other)
        return MonomialIdeal._trusted(
            self.n,
            (tuple(x if x >= y else y for x, y in zip(a, b)) for a in self.gens for b in other.gens),
        )

    def __contains__(self, m: Sequence[int]) -> bool:
        _check_same(m, unit(self.n))
        return any(all(x <= y for x, y in zip(g, m)) for g in self.gens)

    def __le__(self, other: "MonomialIdeal") -> bool:
        """Ideal containment ``self ⊆ other``."""
        self._same(other)
        return all(g in other for g in self.gens)

    def colon(self, m: Sequence[int]) -> "MonomialIdeal":
        _check_same(m, unit(self.n))
        return MonomialIdeal._trusted(
            self.n, (tuple(x - y if x > y else 0 for x, y in zip(g, m)) for g in self.gens)
        )

    def intersect_max_power(self, d: int) -> "MonomialIdeal":
        """``self ∩ m^d`` where m is the ideal of all variables."""
        if d < 1:
            raise ValueError("d must be positive")
        n = self.n
        padded = []
        for g in self.gens:
            short = d - sum(g)
            if short <= 0:
                padded.append(g)
                continue
            for idx in combinations_with_replacement(range(n), short):
                w = list(g)
                for i in idx:
                    w[i] += 1
                padded.append(tuple(w))
        return MonomialIdeal._trusted(n, padded)


# Function-style aliases matching the operation names used elsewhere.

def minimalize(gens: Iterable[Sequence[int]], n: int | None = None) -> MonomialIdeal:
    gens = [monomial(g) for g in gens]
    if n is None:
        if not gens:
            raise ValueError("ambient size needed for an empty generator set")
        n = len(gens[0])
    return MonomialIdeal(n, gens)


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    return I + J


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    return I * J


def power(I: MonomialIdeal, s: int) -> MonomialIdeal:
    return I**s


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    return I & J


def intersect_all(ideals: Iterable[MonomialIdeal]) -> MonomialIdeal:
    """Left fold of pairwise intersections, smallest generating sets first."""
    ideals = sorted(ideals, key=len)
    if not ideals:
        raise ValueError("empty intersection has no ambient ring")
    result = ideals[0]
    for J in ideals[1:]:
        result = result & J
    return result


def colon(I: MonomialIdeal, m: Sequence[int]) -> MonomialIdeal:
    return I.colon(m)


def contains(I: MonomialIdeal, m: Sequence[int]) -> bool:
    return m in I


def intersect_max_power(I: MonomialIdeal, d: int) -> MonomialIdeal:
    return I.intersect_max_power(d)
