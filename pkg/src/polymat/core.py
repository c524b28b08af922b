"""Exact monomial arithmetic, monomial orders, and monomial ideals.

Variables are named x1..xn.  Exponent vectors are plain integer tuples
indexed from 0, so the exponent of x<i> sits at position i-1; every public
surface (permutations, witnesses, text formats) speaks 1-based variable
indices.  Exponents are arbitrary-precision integers.

All values are immutable and hashable and every operation is a pure
function, so they can be shared across worker processes without
coordination.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import AmbientMismatchError, EmptyIdealError


def _check_ambient(n: int, m: int) -> None:
    if n != m:
        raise AmbientMismatchError(f"ambient variable counts differ: {n} vs {m}")


@dataclass(frozen=True)
class Monomial:
    """A monomial given by its exponent vector."""

    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        exps = tuple(int(e) for e in self.exponents)
        if not exps:
            raise ValueError("ambient ring needs at least one variable")
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        object.__setattr__(self, "exponents", exps)

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def degree_of(self, var: int) -> int:
        """Exponent of x<var> (1-based)."""
        return self.exponents[var - 1]

    @property
    def support(self) -> tuple[int, ...]:
        """1-based indices of the variables that occur."""
        return tuple(i + 1 for i, e in enumerate(self.exponents) if e)

    @property
    def is_unit(self) -> bool:
        return self.degree == 0

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    def divides(self, other: Monomial) -> bool:
        _check_ambient(self.n, other.n)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __mul__(self, other: Monomial) -> Monomial:
        _check_ambient(self.n, other.n)
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __str__(self) -> str:
        if self.is_unit:
            return "1"
        parts = []
        for i, e in enumerate(self.exponents):
            if e == 1:
                parts.append(f"x{i + 1}")
            elif e > 1:
                parts.append(f"x{i + 1}^{e}")
        return "*".join(parts)


def unit_monomial(n: int) -> Monomial:
    return Monomial((0,) * n)


def variable_monomial(var: int, n: int) -> Monomial:
    """The monomial x<var> in n variables (var is 1-based)."""
    if not 1 <= var <= n:
        raise ValueError(f"variable index {var} out of range 1..{n}")
    return Monomial(tuple(1 if i == var - 1 else 0 for i in range(n)))


def monomial_gcd(u: Monomial, v: Monomial) -> Monomial:
    _check_ambient(u.n, v.n)
    return Monomial(tuple(min(a, b) for a, b in zip(u.exponents, v.exponents)))


def monomial_lcm(u: Monomial, v: Monomial) -> Monomial:
    _check_ambient(u.n, v.n)
    return Monomial(tuple(max(a, b) for a, b in zip(u.exponents, v.exponents)))


def colon_monomial(u: Monomial, v: Monomial) -> Monomial:
    """u : v = u / gcd(u, v), i.e. coordinatewise max(a_i - b_i, 0)."""
    _check_ambient(u.n, v.n)
    return Monomial(tuple(a - b if a > b else 0 for a, b in zip(u.exponents, v.exponents)))


@dataclass(frozen=True)
class VariableOrder:
    """A permutation of {1..n}; perm[0] names the greatest variable."""

    perm: tuple[int, ...]

    def __post_init__(self) -> None:
        perm = tuple(int(p) for p in self.perm)
        if sorted(perm) != list(range(1, len(perm) + 1)):
            raise ValueError(f"not a permutation of 1..{len(perm)}: {perm}")
        object.__setattr__(self, "perm", perm)

    @classmethod
    def identity(cls, n: int) -> VariableOrder:
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.perm)

    @cached_property
    def positions(self) -> tuple[int, ...]:
        """0-based exponent positions in greatest-to-least scan order."""
        return tuple(p - 1 for p in self.perm)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.perm)


def all_variable_orders(n: int) -> Iterator[VariableOrder]:
    """All n! variable orders, in lexicographic order of their permutations."""
    for perm in itertools.permutations(range(1, n + 1)):
        yield VariableOrder(perm)


def lex_key(m: Monomial, order: VariableOrder):
    """Sort key realizing the graded lexicographic order induced by `order`.

    Total degree decides first; ties scan exponents from the greatest
    variable down, larger exponent winning at the first difference.
    """
    e = m.exponents
    return (m.degree, tuple(e[p] for p in order.positions))


def revlex_key(m: Monomial, order: VariableOrder):
    """Sort key realizing the graded reverse lexicographic order.

    Total degree decides first; ties scan exponents from the least
    variable up, with the *smaller* exponent winning at the first
    difference.
    """
    e = m.exponents
    return (m.degree, tuple(-e[p] for p in reversed(order.positions)))


def _cmp(a, b) -> int:
    return (a > b) - (a < b)


def lex_compare(u: Monomial, v: Monomial, order: VariableOrder) -> int:
    """-1, 0 or 1 as u <, =, > v under the induced lexicographic order."""
    _check_ambient(u.n, v.n)
    _check_ambient(u.n, order.n)
    return _cmp(lex_key(u, order), lex_key(v, order))


def revlex_compare(u: Monomial, v: Monomial, order: VariableOrder) -> int:
    """-1, 0 or 1 as u <, =, > v under the induced reverse lexicographic order."""
    _check_ambient(u.n, v.n)
    _check_ambient(u.n, order.n)
    return _cmp(revlex_key(u, order), revlex_key(v, order))


def canonical_key(m: Monomial):
    """Graded-lex key for the identity variable order; fixes all canonical sorts."""
    return (m.degree, m.exponents)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal, stored as its unique minimal generating set.

    Generators are kept in canonical order (decreasing graded-lex under the
    identity variable order), so structural equality is ideal equality.
    Direct construction validates the invariants; use make_ideal to build
    from an arbitrary generating set.
    """

    n: int
    gens: tuple[Monomial, ...]

    def __post_init__(self) -> None:
        gens = tuple(self.gens)
        if not gens:
            raise EmptyIdealError("an ideal needs at least one generator")
        for g in gens:
            _check_ambient(self.n, g.n)
        keys = [canonical_key(g) for g in gens]
        if any(a <= b for a, b in zip(keys, keys[1:])):
            raise ValueError("generators not in canonical decreasing order")
        for g, h in itertools.permutations(gens, 2):
            if g.divides(h):
                raise ValueError(f"non-minimal generating set: {g} divides {h}")
        object.__setattr__(self, "gens", gens)

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].is_unit

    def is_equigenerated(self) -> int | None:
        """The common generator degree, or None if degrees are mixed."""
        d = self.gens[0].degree
        return d if all(g.degree == d for g in self.gens) else None

    @cached_property
    def exponent_set(self) -> frozenset[tuple[int, ...]]:
        """Generator exponent vectors, for O(1) membership of same-degree monomials."""
        return frozenset(g.exponents for g in self.gens)

    def contains(self, m: Monomial) -> bool:
        """Monomial membership: some generator divides m."""
        _check_ambient(self.n, m.n)
        return any(g.divides(m) for g in self.gens)

    def __contains__(self, m: Monomial) -> bool:
        return self.contains(m)

    def colon(self, v: Monomial) -> MonomialIdeal:
        """The quotient ideal I : v, generated by {g : v for g in G(I)}."""
        _check_ambient(self.n, v.n)
        return make_ideal(self.n, [colon_monomial(g, v) for g in self.gens])

    def localize(self, off: Iterable[int]) -> MonomialIdeal:
        """Substitute x_i -> 1 for every 1-based index i in `off`, then minimalize."""
        off = set(off)
        for i in off:
            if not 1 <= i <= self.n:
                raise ValueError(f"variable index {i} out of range 1..{self.n}")
        zeroed = frozenset(i - 1 for i in off)
        subs = [
            Monomial(tuple(0 if i in zeroed else e for i, e in enumerate(g.exponents)))
            for g in self.gens
        ]
        return make_ideal(self.n, subs)

    def __add__(self, other: MonomialIdeal) -> MonomialIdeal:
        _check_ambient(self.n, other.n)
        return make_ideal(self.n, self.gens + other.gens)

    def __mul__(self, other: MonomialIdeal) -> MonomialIdeal:
        _check_ambient(self.n, other.n)
        return make_ideal(self.n, [g * h for g in self.gens for h in other.gens])

    def __pow__(self, e: int) -> MonomialIdeal:
        if e < 0:
            raise ValueError("exponent must be non-negative")
        result = unit_ideal(self.n)
        for _ in range(e):
            result = result * self
        return result

    def __str__(self) -> str:
        return " + ".join(str(g) for g in self.gens)


def unit_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, (unit_monomial(n),))


def make_ideal(n: int, raw: Iterable[Monomial]) -> MonomialIdeal:
    """Minimalize a generating set: drop duplicates and divisible monomials."""
    mons = list(raw)
    if not mons:
        raise EmptyIdealError("cannot build an ideal from an empty generating set")
    for m in mons:
        _check_ambient(n, m.n)
    # ascending degree: any proper divisor has strictly smaller degree, so a
    # single pass against the kept prefix suffices
    pending = sorted(set(mons), key=canonical_key)
    kept: list[Monomial] = []
    for m in pending:
        if not any(k.divides(m) for k in kept):
            kept.append(m)
    kept.sort(key=canonical_key, reverse=True)
    return MonomialIdeal(n, tuple(kept))


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    return I + J


def ideal_product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    return I * J


def ideal_power(I: MonomialIdeal, e: int) -> MonomialIdeal:
    return I**e
