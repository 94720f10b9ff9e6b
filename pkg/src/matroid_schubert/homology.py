"""Simplicial homology with rational coefficients.

Betti numbers are computed from boundary-matrix ranks.  The matrices have
integer entries, so ranks are found by fraction-free elimination on sparse
integer columns; everything is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd

from .util import canonical_key


@dataclass(frozen=True)
class SimplicialComplex:
    """Vertices plus facets; all subsets of facets are faces."""

    vertices: tuple
    facets: tuple[frozenset, ...]

    @classmethod
    def from_facets(cls, vertices, facets) -> "SimplicialComplex":
        verts = tuple(sorted(set(vertices), key=canonical_key))
        uniq = sorted(set(frozenset(f) for f in facets), key=lambda f: -len(f))
        kept: list[frozenset] = []
        for f in uniq:
            if not any(f <= g for g in kept):
                kept.append(f)
        kept.sort(key=canonical_key)
        for f in kept:
            if not f <= set(verts):
                raise ValueError("facet uses unknown vertices")
        return cls(verts, tuple(kept))

    @property
    def dimension(self) -> int:
        return max((len(f) - 1 for f in self.facets), default=-1)

    def simplices(self) -> list[list[tuple[int, ...]]]:
        """Simplices by dimension as sorted tuples of vertex indices."""
        index = {v: i for i, v in enumerate(self.vertices)}
        per_dim: list[set[tuple[int, ...]]] = [set() for _ in range(self.dimension + 1)]
        for facet in self.facets:
            idx = tuple(sorted(index[v] for v in facet))
            for k in range(1, len(idx) + 1):
                for sub in combinations(idx, k):
                    per_dim[k - 1].add(sub)
        return [sorted(s) for s in per_dim]


def _sparse_int_rank(columns: list[dict[int, int]]) -> int:
    """Rank over Q of an integer matrix given as sparse columns.

    Fraction-free column reduction: each column is cross-multiplied against
    the pivot column owning its lowest nonzero row, then gcd-normalized.
    """
    pivots: dict[int, dict[int, int]] = {}
    for col in columns:
        col = dict(col)
        while col:
            low = max(col)
            piv = pivots.get(low)
            if piv is None:
                g = 0
                for v in col.values():
                    g = gcd(g, abs(v))
                if g > 1:
                    col = {k: v // g for k, v in col.items()}
                pivots[low] = col
                break
            a, b = col[low], piv[low]
            new = {k: b * v for k, v in col.items()}
            for k, v in piv.items():
                w = new.get(k, 0) - a * v
                if w:
                    new[k] = w
                elif k in new:
                    del new[k]
            col = new
    return len(pivots)


def betti(K: SimplicialComplex) -> tuple[int, ...]:
    """Rational Betti numbers b_0..b_dim of the complex."""
    if K.dimension < 0:
        return ()
    per_dim = K.simplices()
    ranks = [0] * (len(per_dim) + 1)  # ranks[k] = rank of boundary_k
    for k in range(1, len(per_dim)):
        rows = {s: i for i, s in enumerate(per_dim[k - 1])}
        columns = []
        for simplex in per_dim[k]:
            col: dict[int, int] = {}
            for drop in range(len(simplex)):
                face = simplex[:drop] + simplex[drop + 1 :]
                col[rows[face]] = 1 if drop % 2 == 0 else -1
            columns.append(col)
        ranks[k] = _sparse_int_rank(columns)
    return tuple(
        len(per_dim[k]) - ranks[k] - ranks[k + 1] for k in range(len(per_dim))
    )


def euler_characteristic(dimensions) -> int:
    """Alternating sum of cell counts from a list of cell dimensions."""
    total = 0
    for d in dimensions:
        total += 1 if d % 2 == 0 else -1
    return total


def euler_from_betti(b: tuple[int, ...]) -> int:
    return sum(x if k % 2 == 0 else -x for k, x in enumerate(b))


def sphere_betti(dim: int) -> tuple[int, ...]:
    """Expected Betti vector of the dim-sphere (two points when dim = 0)."""
    if dim < 0:
        raise ValueError("sphere dimension must be >= 0")
    if dim == 0:
        return (2,)
    return (1,) + (0,) * (dim - 1) + (1,)


def is_ball_betti(b: tuple[int, ...]) -> bool:
    """Betti pattern of a contractible space: b_0 = 1, the rest zero."""
    return len(b) >= 1 and b[0] == 1 and all(x == 0 for x in b[1:])
