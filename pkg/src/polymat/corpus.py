"""Corpus enumeration: exhaustive and seeded-random families of ideals.

Every non-empty subset of the degree-d monomials is a minimal generating
set (equal-degree monomials never divide one another), so corpora are
represented as bitmasks over the lex-descending list of degree-d
monomials.  Exhaustive corpora run masks in ascending order; random
corpora draw distinct m-subsets from a seeded generator.  Both are fully
reproducible from the corpus parameters.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from math import comb
from typing import Iterator

from .core import MonomialIdeal
from .errors import BoundExceededError
from .lexsegment import monomials_of_degree

EXHAUSTIVE_BASIS_LIMIT = 20


@dataclass(frozen=True)
class CorpusSpec:
    """Parameters of one corpus; (spec, seed) determines the stream exactly.

    dedupe_isomorphic keeps only the smallest-mask representative of each
    orbit under variable permutations.  It is off by default: the checked
    statements quantify over plain ideals and the documented exhaustive
    counts are the unreduced ones.
    """

    n: int
    d: int
    mode: str = "exhaustive"
    m: int | None = None
    count: int | None = None
    seed: int = 0
    start_mask: int = 1
    dedupe_isomorphic: bool = False

    def __post_init__(self) -> None:
        if self.n < 1 or self.d < 0:
            raise ValueError(f"need n >= 1 and d >= 0, got n={self.n}, d={self.d}")
        if self.mode not in ("exhaustive", "random"):
            raise ValueError(f"unknown corpus mode {self.mode!r}")
        basis = comb(self.n + self.d - 1, self.d)
        if self.mode == "exhaustive":
            if basis > EXHAUSTIVE_BASIS_LIMIT:
                raise BoundExceededError(
                    f"exhaustive mode needs at most {EXHAUSTIVE_BASIS_LIMIT} degree-{self.d} "
                    f"monomials, but n={self.n}, d={self.d} has {basis}"
                )
            if not 1 <= self.start_mask < (1 << basis):
                raise ValueError(f"start mask {self.start_mask} out of range")
        else:
            if self.m is None or not 1 <= self.m <= basis:
                raise ValueError(f"random mode needs 1 <= m <= {basis}, got {self.m}")
            if self.count is None or self.count < 1:
                raise ValueError("random mode needs a positive sample count")
            if self.count > comb(basis, self.m):
                raise BoundExceededError(
                    f"only {comb(basis, self.m)} distinct {self.m}-subsets exist, "
                    f"cannot draw {self.count}"
                )

    def size(self) -> int:
        if self.mode == "exhaustive":
            return (1 << comb(self.n + self.d - 1, self.d)) - self.start_mask
        return self.count

    def to_json_dict(self) -> dict:
        out = {"n": self.n, "d": self.d, "mode": self.mode}
        if self.mode == "exhaustive":
            out["start_mask"] = self.start_mask
        else:
            out.update({"m": self.m, "count": self.count, "seed": self.seed})
        if self.dedupe_isomorphic:
            out["dedupe_isomorphic"] = True
        return out


@dataclass(frozen=True)
class CorpusItem:
    index: int
    mask: int
    ideal: MonomialIdeal


def ideal_from_mask(n: int, d: int, mask: int) -> MonomialIdeal:
    """Rebuild the ideal a bitmask denotes (bit i = i-th lex-descending monomial)."""
    basis = monomials_of_degree(n, d).elems
    gens = tuple(m for i, m in enumerate(basis) if mask >> i & 1)
    return MonomialIdeal(n, gens)


def corpus_masks(spec: CorpusSpec) -> list[int]:
    basis_size = comb(spec.n + spec.d - 1, spec.d)
    if spec.mode == "exhaustive":
        masks = list(range(spec.start_mask, 1 << basis_size))
    else:
        rng = random.Random(spec.seed)
        seen: set[int] = set()
        masks = []
        while len(masks) < spec.count:
            mask = 0
            for i in rng.sample(range(basis_size), spec.m):
                mask |= 1 << i
            if mask not in seen:
                seen.add(mask)
                masks.append(mask)
    if spec.dedupe_isomorphic:
        masks = [m for m in masks if _is_orbit_representative(spec.n, spec.d, m)]
    return masks


def _is_orbit_representative(n: int, d: int, mask: int) -> bool:
    """Whether no variable permutation sends this subset to a smaller mask."""
    basis = monomials_of_degree(n, d).elems
    position = {m.exponents: i for i, m in enumerate(basis)}
    vectors = [basis[i].exponents for i in range(len(basis)) if mask >> i & 1]
    for perm in itertools.permutations(range(n)):
        relabeled = 0
        for vec in vectors:
            relabeled |= 1 << position[tuple(vec[p] for p in perm)]
        if relabeled < mask:
            return False
    return True


def enumerate_corpus(spec: CorpusSpec) -> Iterator[CorpusItem]:
    basis = monomials_of_degree(spec.n, spec.d).elems
    for index, mask in enumerate(corpus_masks(spec)):
        gens = tuple(m for i, m in enumerate(basis) if mask >> i & 1)
        yield CorpusItem(index, mask, MonomialIdeal(spec.n, gens))
