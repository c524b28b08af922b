"""Exchange-property checks for equigenerated monomial ideals.

For same-degree monomials, membership in an equigenerated ideal of that
degree coincides with membership in the generating set itself, so the
candidate swaps below are tested against the generator exponent set.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Monomial, MonomialIdeal
from .errors import NotEquigeneratedError


@dataclass(frozen=True)
class ExchangeWitness:
    """A generator pair and 1-based variable index at which exchange fails.

    For the direct form, `variable` is an index where u has strictly more
    copies than v and no compensating swap lands in the ideal; for the
    symmetric form it is an index where v has strictly more copies than u.
    """

    u: Monomial
    v: Monomial
    variable: int


def require_equigenerated(I: MonomialIdeal) -> int:
    d = I.is_equigenerated()
    if d is None:
        raise NotEquigeneratedError(f"not generated in a single degree: {I}")
    return d


def exchange_failure(I: MonomialIdeal) -> ExchangeWitness | None:
    """First violation of the exchange property, or None if polymatroidal.

    Checks every ordered generator pair (u, v): whenever u has more copies
    of x_i than v, some variable x_j occurring more often in v must make
    x_j * (u / x_i) a member of the ideal.  Pairs run in canonical
    generator order and i ascends, so the witness is deterministic.
    """
    require_equigenerated(I)
    members = I.exponent_set
    n = I.n
    for u in I.gens:
        ue = u.exponents
        for v in I.gens:
            if u == v:
                continue
            ve = v.exponents
            deficient = [j for j in range(n) if ue[j] < ve[j]]
            for i in range(n):
                if ue[i] <= ve[i]:
                    continue
                swapped = list(ue)
                swapped[i] -= 1
                ok = False
                for j in deficient:
                    swapped[j] += 1
                    if tuple(swapped) in members:
                        ok = True
                    swapped[j] -= 1
                    if ok:
                        break
                if not ok:
                    return ExchangeWitness(u, v, i + 1)
    return None


def is_polymatroidal(I: MonomialIdeal) -> bool:
    return exchange_failure(I) is None


def is_matroidal(I: MonomialIdeal) -> bool:
    """Squarefree and polymatroidal."""
    require_equigenerated(I)
    return all(g.is_squarefree for g in I.gens) and is_polymatroidal(I)


def symmetric_exchange_failure(I: MonomialIdeal) -> ExchangeWitness | None:
    """First violation of the dual exchange form, or None.

    For every ordered pair (u, v) and every i where v has more copies of
    x_i than u, some j with fewer copies in v than in u must make
    x_i * (u / x_j) a member of the ideal.
    """
    require_equigenerated(I)
    members = I.exponent_set
    n = I.n
    for u in I.gens:
        ue = u.exponents
        for v in I.gens:
            if u == v:
                continue
            ve = v.exponents
            surplus = [j for j in range(n) if ve[j] < ue[j]]
            for i in range(n):
                if ve[i] <= ue[i]:
                    continue
                swapped = list(ue)
                swapped[i] += 1
                ok = False
                for j in surplus:
                    swapped[j] -= 1
                    if tuple(swapped) in members:
                        ok = True
                    swapped[j] += 1
                    if ok:
                        break
                if not ok:
                    return ExchangeWitness(u, v, i + 1)
    return None


def satisfies_symmetric_exchange(I: MonomialIdeal) -> bool:
    return symmetric_exchange_failure(I) is None
