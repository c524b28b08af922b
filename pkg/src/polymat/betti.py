"""Graded Betti numbers of monomial ideals, exactly, over the rationals.

Two independent routes compute the same table.  The default route walks
the lcm lattice of the generators and, at each lattice multidegree a,
takes reduced simplicial homology of the complex whose faces are the
squarefree masks b with x^(a-b) still inside the ideal; the rank of
reduced homology in dimension i-1 there is the Betti number in
homological index i at multidegree a.  The oracle route reads the same
numbers off the multigraded strands of the Taylor complex on the
generators, which costs 2^|G| and is gated accordingly.

Homology ranks are computed by fraction-free integer elimination on
boundary matrices; there is no floating point anywhere in this module,
so agreement between the two routes is exact or not at all.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cache

from .core import MonomialIdeal
from .errors import InvalidComplexError, OracleUnavailableError, UnitIdealError

TAYLOR_GENERATOR_LIMIT = 12


def integer_rank(rows: list[list[int]]) -> int:
    """Matrix rank over the rationals via Bareiss fraction-free elimination."""
    mat = [list(r) for r in rows]
    m = len(mat)
    ncols = len(mat[0]) if m else 0
    prev = 1
    r = 0
    for c in range(ncols):
        if r == m:
            break
        p = next((i for i in range(r, m) if mat[i][c]), None)
        if p is None:
            continue
        if p != r:
            mat[r], mat[p] = mat[p], mat[r]
        piv = mat[r][c]
        for i in range(r + 1, m):
            row = mat[i]
            top = mat[r]
            mic = row[c]
            for j in range(c + 1, ncols):
                row[j] = (piv * row[j] - mic * top[j]) // prev
            row[c] = 0
        prev = piv
        r += 1
    return r


@dataclass(frozen=True)
class SimplicialComplex:
    """An abstract simplicial complex with integer vertex labels.

    Faces are sorted vertex tuples and include the empty face () whenever
    the complex is non-void; a complex with no faces at all is void and
    has zero homology everywhere.
    """

    vertices: tuple[int, ...]
    faces: frozenset[tuple[int, ...]]

    @classmethod
    def from_facets(cls, vertices, facets) -> SimplicialComplex:
        """Close the given facets downward (void if no facets are given)."""
        faces: set[tuple[int, ...]] = set()
        for facet in facets:
            fs = tuple(sorted(set(facet)))
            for k in range(len(fs) + 1):
                faces.update(itertools.combinations(fs, k))
        return cls(tuple(sorted(set(vertices))), frozenset(faces))

    @classmethod
    def from_faces(cls, vertices, faces) -> SimplicialComplex:
        """Build from a full face list, verifying closure under subsets."""
        face_set = {tuple(sorted(set(f))) for f in faces}
        for f in face_set:
            for t in range(len(f)):
                if f[:t] + f[t + 1 :] not in face_set:
                    raise InvalidComplexError(f"face {f} present but {f[:t] + f[t+1:]} missing")
        return cls(tuple(sorted(set(vertices))), frozenset(face_set))


def _ranks_by_card(faces_by_card: dict[int, list], boundary_targets) -> dict[int, int]:
    """Ranks of the boundary maps card -> card-1, given index lookups per card."""
    ranks: dict[int, int] = {}
    for card, cols in faces_by_card.items():
        if card == 0:
            continue
        rows = faces_by_card.get(card - 1, [])
        if not rows or not cols:
            ranks[card] = 0
            continue
        row_index = {f: i for i, f in enumerate(rows)}
        mat = [[0] * len(cols) for _ in rows]
        for ci, face in enumerate(cols):
            for t, target in enumerate(boundary_targets(face)):
                ri = row_index.get(target)
                if ri is not None:
                    mat[ri][ci] = -1 if t % 2 else 1
        ranks[card] = integer_rank(mat)
    return ranks


def _reduced_ranks(faces_by_card: dict[int, list], boundary_targets) -> list[int]:
    """Reduced homology ranks indexed from dimension -1 upward."""
    if not faces_by_card:
        return []
    ranks = _ranks_by_card(faces_by_card, boundary_targets)
    top = max(faces_by_card)
    out = []
    for card in range(top + 1):
        count = len(faces_by_card.get(card, []))
        out.append(count - ranks.get(card, 0) - ranks.get(card + 1, 0))
    return out


def _tuple_boundary(face: tuple) -> list[tuple]:
    return [face[:t] + face[t + 1 :] for t in range(len(face))]


def reduced_homology_ranks(X: SimplicialComplex) -> list[int]:
    """Ranks of reduced rational homology; index k corresponds to dim k-1.

    Entry 0 is the rank in dimension -1 (1 exactly for the complex whose
    only face is the empty face), entry 1 is dimension 0, and so on.
    """
    if not X.faces:
        return []
    by_card: dict[int, list[tuple[int, ...]]] = {}
    for f in X.faces:
        by_card.setdefault(len(f), []).append(f)
    for lst in by_card.values():
        lst.sort()
    if 0 not in by_card:
        raise InvalidComplexError("non-void complex is missing the empty face")
    return _reduced_ranks(by_card, _tuple_boundary)


@dataclass(frozen=True)
class BettiTable:
    """Non-zero graded Betti numbers as sorted (index, degree, value) triples."""

    entries: tuple[tuple[int, int, int], ...]

    @classmethod
    def from_dict(cls, table: dict[tuple[int, int], int]) -> BettiTable:
        return cls(tuple(sorted((i, j, v) for (i, j), v in table.items() if v)))

    def as_dict(self) -> dict[tuple[int, int], int]:
        return {(i, j): v for i, j, v in self.entries}

    def get(self, i: int, j: int) -> int:
        return self.as_dict().get((i, j), 0)

    @property
    def generator_count(self) -> int:
        return sum(v for i, _, v in self.entries if i == 0)

    def is_linear(self, d: int) -> bool:
        """Whether every non-zero entry sits on the strand j = i + d."""
        return all(j == i + d for i, j, _ in self.entries)

    def to_json_dict(self) -> dict:
        return {"betti": [[i, j, v] for i, j, v in self.entries]}

    def triangle(self) -> str:
        """Macaulay-style triangle: rows are j - i, columns homological index."""
        if not self.entries:
            return "(empty)"
        table = self.as_dict()
        imax = max(i for i, _, _ in self.entries)
        offsets = sorted({j - i for i, j, _ in self.entries})
        cols = range(imax + 1)
        totals = [sum(table.get((i, i + t), 0) for t in offsets) for i in cols]
        width = max(len(str(v)) for v in totals + [imax]) + 2
        head = " " * 7 + "".join(str(i).rjust(width) for i in cols)
        lines = [head, "total:".rjust(7) + "".join(str(t).rjust(width) for t in totals)]
        for t in offsets:
            row = [table.get((i, i + t), 0) for i in cols]
            cells = "".join((str(v) if v else ".").rjust(width) for v in row)
            lines.append(f"{t}:".rjust(7) + cells)
        return "\n".join(lines)


def lcm_lattice(I: MonomialIdeal) -> list[tuple[int, ...]]:
    """All coordinatewise maxima of non-empty generator subsets, sorted.

    Computed as the closure of the generator exponent vectors under
    pairwise join, which agrees with enumerating subsets but scales with
    the lattice size instead of 2^|G|.
    """
    gens = [g.exponents for g in I.gens]
    lattice = set(gens)
    frontier = set(gens)
    while frontier:
        fresh = set()
        for a in frontier:
            for g in gens:
                j = tuple(map(max, a, g))
                if j not in lattice:
                    lattice.add(j)
                    fresh.add(j)
        frontier = fresh
    return sorted(lattice)


def _mask_complex_faces(I: MonomialIdeal, alpha: tuple[int, ...]) -> tuple[list[int], list[int]]:
    """Faces (as bitmasks over supp(alpha)) of the Koszul complement complex at alpha."""
    gens = [g.exponents for g in I.gens]
    supp = [i for i, a in enumerate(alpha) if a > 0]
    faces = []
    for mask in range(1 << len(supp)):
        resid = list(alpha)
        for t, i in enumerate(supp):
            if mask >> t & 1:
                resid[i] -= 1
        if any(all(ge <= re for ge, re in zip(g, resid)) for g in gens):
            faces.append(mask)
    return supp, faces


def _is_cone(faces: list[int], width: int) -> bool:
    # a vertex whose star is everything makes the complex contractible
    face_set = set(faces)
    for t in range(width):
        bit = 1 << t
        if all(f | bit in face_set for f in faces):
            return True
    return False


@cache
def graded_betti(I: MonomialIdeal) -> BettiTable:
    """Graded Betti numbers via homology of mask complexes over the lcm lattice."""
    if I.is_unit:
        raise UnitIdealError("the unit ideal has nothing to resolve")
    table: dict[tuple[int, int], int] = {}
    for alpha in lcm_lattice(I):
        supp, faces = _mask_complex_faces(I, alpha)
        # alpha is a multiple of some generator, so the empty mask is a face
        if _is_cone(faces, len(supp)):
            continue
        by_card: dict[int, list[int]] = {}
        for mask in faces:
            by_card.setdefault(mask.bit_count(), []).append(mask)
        for lst in by_card.values():
            lst.sort()

        def mask_boundary(mask: int) -> list[int]:
            bits = [t for t in range(len(supp)) if mask >> t & 1]
            return [mask ^ (1 << t) for t in bits]

        homology = _reduced_ranks(by_card, mask_boundary)
        deg = sum(alpha)
        for i, h in enumerate(homology):
            if h:
                table[(i, deg)] = table.get((i, deg), 0) + h
    return BettiTable.from_dict(table)


def taylor_strand_betti(I: MonomialIdeal) -> BettiTable:
    """The same table from the multigraded strands of the Taylor complex.

    Subsets of the generating set are graded by their lcm; within one
    multidegree the surviving boundary maps have coefficients +-1 exactly
    where dropping a generator keeps the lcm.  The homology of that strand
    in subset-size p gives the Betti number at homological index p - 1.
    """
    if I.is_unit:
        raise UnitIdealError("the unit ideal has nothing to resolve")
    gens = [g.exponents for g in I.gens]
    m = len(gens)
    if m > TAYLOR_GENERATOR_LIMIT:
        raise OracleUnavailableError(
            f"Taylor oracle gated to {TAYLOR_GENERATOR_LIMIT} generators, got {m}"
        )
    lcm_of = [()] * (1 << m)
    strands: dict[tuple[int, ...], list[int]] = {}
    for mask in range(1, 1 << m):
        low = mask & -mask
        t = low.bit_length() - 1
        rest = mask ^ low
        lcm_of[mask] = gens[t] if rest == 0 else tuple(map(max, lcm_of[rest], gens[t]))
        strands.setdefault(lcm_of[mask], []).append(mask)
    table: dict[tuple[int, int], int] = {}
    for alpha, masks in strands.items():
        by_card: dict[int, list[int]] = {}
        for mask in masks:
            by_card.setdefault(mask.bit_count(), []).append(mask)
        for lst in by_card.values():
            lst.sort()

        def subset_boundary(mask: int) -> list[int]:
            bits = [t for t in range(m) if mask >> t & 1]
            return [mask ^ (1 << t) for t in bits]

        ranks = _ranks_by_card(by_card, subset_boundary)
        deg = sum(alpha)
        for card, lst in by_card.items():
            h = len(lst) - ranks.get(card, 0) - ranks.get(card + 1, 0)
            if h:
                key = (card - 1, deg)
                table[key] = table.get(key, 0) + h
    return BettiTable.from_dict(table)


@cache
def has_linear_resolution(I: MonomialIdeal) -> bool:
    """Equigenerated in degree d with every Betti entry on the strand j = i + d.

    The unit ideal counts as having a linear resolution.
    """
    if I.is_unit:
        return True
    d = I.is_equigenerated()
    if d is None:
        return False
    return graded_betti(I).is_linear(d)
