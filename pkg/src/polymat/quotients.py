"""Linear quotients under variable-induced generator orderings.

A generator sequence is declared by a monomial order kind (lex or revlex)
plus a variable permutation; the sequence lists the minimal generators in
strictly decreasing order, so prefixes are exactly the sets of strictly
greater generators.  The quantified checks sweep all n! permutations with
early exit, reporting the first failing permutation in lexicographic
permutation order.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum

from .betti import has_linear_resolution
from .core import (
    Monomial,
    MonomialIdeal,
    VariableOrder,
    all_variable_orders,
    canonical_key,
    colon_monomial,
    lex_key,
    make_ideal,
    revlex_key,
)
from .errors import BoundExceededError
from .polymatroid import ExchangeWitness, exchange_failure, require_equigenerated

ORDER_KINDS = ("lex", "revlex")
DEFAULT_MAX_PERM_VARS = 8
MAX_PERM_ENV = "POLYMAT_MAX_PERMS"


def induced_key(kind: str, order: VariableOrder):
    """Sort-key function for the monomial order of the given kind."""
    if kind == "lex":
        return lambda m: lex_key(m, order)
    if kind == "revlex":
        return lambda m: revlex_key(m, order)
    raise ValueError(f"unknown order kind {kind!r}")


@dataclass(frozen=True)
class GeneratorSequence:
    """A total ordering of an ideal's minimal generators.

    sort_generators always produces the strictly decreasing sequence for
    its monomial order; free-form sequences may be constructed directly
    (the constructor only checks that seq is a permutation of the
    generators).
    """

    ideal: MonomialIdeal
    order_kind: str
    var_order: VariableOrder
    seq: tuple[Monomial, ...]

    def __post_init__(self) -> None:
        if self.order_kind not in ORDER_KINDS:
            raise ValueError(f"unknown order kind {self.order_kind!r}")
        if len(self.seq) != len(self.ideal.gens) or set(self.seq) != set(self.ideal.gens):
            raise ValueError("sequence is not a permutation of the minimal generators")


@dataclass(frozen=True)
class LQFailure:
    """Where a linear-quotients check breaks: no variable of the prefix
    colon divides blocker : seq[position-1]."""

    position: int  # 1-based index j >= 2 into the sequence
    blocker: Monomial  # an earlier generator whose colon is not covered


def sort_generators(I: MonomialIdeal, kind: str, order: VariableOrder) -> GeneratorSequence:
    """Generators in strictly decreasing induced order (greatest first)."""
    require_equigenerated(I)
    key = induced_key(kind, order)
    seq = tuple(sorted(I.gens, key=key, reverse=True))
    return GeneratorSequence(I, kind, order, seq)


def linear_quotients_failure(
    seq: GeneratorSequence, *, cross_check: bool = False
) -> LQFailure | None:
    """First position where a prefix colon ideal is not variable-generated.

    The prefix colon (u_1..u_{j-1}) : u_j is generated by the monomial
    colons u_i : u_j; it is variable-generated exactly when every such
    colon is divisible by one of the degree-1 colons.  With cross_check
    the materialized colon ideal is minimalized and compared against that
    pairwise test.
    """
    mons = seq.seq
    exps = [m.exponents for m in mons]
    n = seq.ideal.n
    for j in range(1, len(mons)):
        uj = exps[j]
        colons = []
        deg1_vars = set()
        for i in range(j):
            c = tuple(a - b if a > b else 0 for a, b in zip(exps[i], uj))
            colons.append(c)
            if sum(c) == 1:
                deg1_vars.add(c.index(1))
        uncovered = [i for i, c in enumerate(colons) if not any(c[t] for t in deg1_vars)]
        if cross_check:
            prefix_colon = make_ideal(n, [Monomial(c) for c in colons])
            variables_only = all(g.degree == 1 for g in prefix_colon.gens)
            assert variables_only == (not uncovered)
        if uncovered:
            blocker = max((mons[i] for i in uncovered), key=canonical_key)
            return LQFailure(j + 1, blocker)
    return None


def has_linear_quotients(seq: GeneratorSequence) -> bool:
    return linear_quotients_failure(seq) is None


def _max_perm_vars(limit: int | None) -> int:
    if limit is not None:
        return limit
    return int(os.environ.get(MAX_PERM_ENV, DEFAULT_MAX_PERM_VARS))


def lq_all_orders_failure(
    I: MonomialIdeal, kind: str, *, max_vars: int | None = None
) -> tuple[VariableOrder, LQFailure] | None:
    """Sweep all n! variable orders; the first failing one, or None.

    Refuses outright when n exceeds the permutation guard (default 8,
    overridable via the POLYMAT_MAX_PERMS environment variable or the
    max_vars argument).
    """
    require_equigenerated(I)
    bound = _max_perm_vars(max_vars)
    if I.n > bound:
        raise BoundExceededError(
            f"enumerating {I.n}! variable orders exceeds the guard of {bound} variables"
        )
    for order in all_variable_orders(I.n):
        failure = linear_quotients_failure(sort_generators(I, kind, order))
        if failure is not None:
            return order, failure
    return None


def has_lq_all_orders(I: MonomialIdeal, kind: str, *, max_vars: int | None = None) -> bool:
    return lq_all_orders_failure(I, kind, max_vars=max_vars) is None


@dataclass(frozen=True)
class TheoremCheck:
    """Comparison of the exchange property against lex linear quotients
    for every variable ordering; a mismatch would be headline news."""

    polymatroidal: bool
    lex_all_orders: bool
    exchange_witness: ExchangeWitness | None
    lq_witness: tuple[VariableOrder, LQFailure] | None

    @property
    def consistent(self) -> bool:
        return self.polymatroidal == self.lex_all_orders


def theorem_equivalence(I: MonomialIdeal, *, max_vars: int | None = None) -> TheoremCheck:
    witness = exchange_failure(I)
    lq_witness = lq_all_orders_failure(I, "lex", max_vars=max_vars)
    return TheoremCheck(witness is None, lq_witness is None, witness, lq_witness)


class ConjectureOutcome(str, Enum):
    POLYMATROIDAL = "polymatroidal"
    REFUTED = "refuted_by_some_order"
    COUNTEREXAMPLE = "COUNTEREXAMPLE"


@dataclass(frozen=True)
class ConjectureProbe:
    """Outcome of probing one ideal: a counterexample is an ideal with
    revlex linear quotients for every variable ordering that is
    nevertheless not polymatroidal."""

    outcome: ConjectureOutcome
    exchange_witness: ExchangeWitness | None
    refuting_order: VariableOrder | None
    lq_failure: LQFailure | None


def conjecture_probe(I: MonomialIdeal, *, max_vars: int | None = None) -> ConjectureProbe:
    witness = exchange_failure(I)
    if witness is None:
        return ConjectureProbe(ConjectureOutcome.POLYMATROIDAL, None, None, None)
    lq_witness = lq_all_orders_failure(I, "revlex", max_vars=max_vars)
    if lq_witness is not None:
        order, failure = lq_witness
        return ConjectureProbe(ConjectureOutcome.REFUTED, witness, order, failure)
    return ConjectureProbe(ConjectureOutcome.COUNTEREXAMPLE, witness, None, None)


def has_quotients_with_linear_resolution(seq: GeneratorSequence) -> bool:
    """The ideal and every prefix colon ideal have linear resolutions.

    Prefix colon ideals are materialized and minimalized; one generated in
    several degrees counts as not having a linear resolution.  Principal
    colon ideals pass trivially.  A unit prefix colon would need one
    generator to divide another and cannot occur.
    """
    I = seq.ideal
    if not has_linear_resolution(I):
        return False
    mons = seq.seq
    for j in range(1, len(mons)):
        prefix_colon = make_ideal(I.n, [colon_monomial(mons[i], mons[j]) for i in range(j)])
        assert not prefix_colon.is_unit
        if not has_linear_resolution(prefix_colon):
            return False
    return True
