"""Finite graded posets: construction, thinness, intervals, order complexes.

Element labels are opaque hashables; all internal work uses integer bitmasks
over element indices, so containment and interval queries are O(1) mask ops.
"""

from __future__ import annotations

from typing import Callable, NamedTuple

from .homology import SimplicialComplex
from .util import bits, canonical_key


class Interval(NamedTuple):
    """A closed interval [lower, upper] of a lattice, used as a cell label."""

    lower: object
    upper: object


class GradedPoset:
    """Finite poset with cover relations and per-element ranks.

    ``down[i]`` is the bitmask of elements <= element i (self included);
    ``up[i]`` the dual.  Construct via :func:`poset_from_order` or the
    internal mask constructor.
    """

    def __init__(self, elements, down, ranks):
        self.elements = tuple(elements)
        self.down = tuple(down)
        self.ranks = tuple(ranks)
        n = len(self.elements)
        self._index = {e: i for i, e in enumerate(self.elements)}
        if len(self._index) != n:
            raise ValueError("duplicate element labels")
        up = [0] * n
        for j in range(n):
            for i in bits(self.down[j]):
                up[i] |= 1 << j
        self.up = tuple(up)
        covers = []
        for j in range(n):
            strict = self.down[j] & ~(1 << j)
            for i in bits(strict):
                if self.up[i] & strict == 1 << i:
                    covers.append((i, j))
        self.covers = tuple(sorted(covers))
        self._covers_above = [[] for _ in range(n)]
        self._covers_below = [[] for _ in range(n)]
        for i, j in self.covers:
            self._covers_above[i].append(j)
            self._covers_below[j].append(i)
        key = lambda k: canonical_key(self.elements[k])
        for lst in self._covers_above:
            lst.sort(key=key)
        for lst in self._covers_below:
            lst.sort(key=key)

    # -- basic queries ------------------------------------------------------

    def __len__(self):
        return len(self.elements)

    def __contains__(self, label):
        return label in self._index

    def index(self, label) -> int:
        return self._index[label]

    def rank(self, label) -> int:
        return self.ranks[self._index[label]]

    def le(self, a, b) -> bool:
        return self.down[self._index[b]] >> self._index[a] & 1 == 1

    def lt(self, a, b) -> bool:
        return a != b and self.le(a, b)

    @property
    def max_rank(self) -> int:
        return max(self.ranks, default=-1)

    def elements_of_rank(self, r: int) -> tuple:
        return tuple(e for e, k in zip(self.elements, self.ranks) if k == r)

    def minimal_elements(self) -> tuple:
        return tuple(
            self.elements[i]
            for i in range(len(self.elements))
            if self.down[i] == 1 << i
        )

    def maximal_elements(self) -> tuple:
        return tuple(
            self.elements[i]
            for i in range(len(self.elements))
            if self.up[i] == 1 << i
        )

    def covers_above(self, label) -> tuple:
        return tuple(self.elements[j] for j in self._covers_above[self._index[label]])

    def covers_below(self, label) -> tuple:
        return tuple(self.elements[i] for i in self._covers_below[self._index[label]])

    def is_graded(self) -> bool:
        return all(self.ranks[j] == self.ranks[i] + 1 for i, j in self.covers)

    # -- derived posets -----------------------------------------------------

    def subposet(self, labels, recompute_ranks: bool = False) -> "GradedPoset":
        """Induced subposet on ``labels`` (original order preserved)."""
        keep = {self._index[x] for x in labels}
        order = [i for i in range(len(self.elements)) if i in keep]
        remap = {old: new for new, old in enumerate(order)}
        down = []
        for old in order:
            m = 0
            for i in bits(self.down[old]):
                if i in keep:
                    m |= 1 << remap[i]
            down.append(m)
        elements = [self.elements[i] for i in order]
        if recompute_ranks:
            ranks = _ranks_from_down(down)
        else:
            ranks = [self.ranks[i] for i in order]
        return GradedPoset(elements, down, ranks)

    def relabel(self, fn: Callable) -> "GradedPoset":
        return GradedPoset([fn(e) for e in self.elements], self.down, self.ranks)

    def opposite(self) -> "GradedPoset":
        """Order-reversed poset; ranks recomputed by longest chains."""
        return GradedPoset(self.elements, self.up, _ranks_from_down(self.up))

    def down_set(self, label, strict: bool = False) -> tuple:
        i = self._index[label]
        m = self.down[i] & ~(1 << i) if strict else self.down[i]
        return tuple(self.elements[j] for j in bits(m))

    def up_set(self, label, strict: bool = False) -> tuple:
        i = self._index[label]
        m = self.up[i] & ~(1 << i) if strict else self.up[i]
        return tuple(self.elements[j] for j in bits(m))

    def closed_interval(self, a, b) -> tuple:
        m = self.down[self._index[b]] & self.up[self._index[a]]
        return tuple(self.elements[j] for j in bits(m))

    def maximal_chains(self):
        """Yield maximal chains (tuples of labels), saturated along covers."""
        n = len(self.elements)
        starts = [i for i in range(n) if self.down[i] == 1 << i]
        stack = [(i, [i]) for i in reversed(starts)]
        while stack:
            i, chain = stack.pop()
            above = self._covers_above[i]
            if not above:
                yield tuple(self.elements[k] for k in chain)
            else:
                for j in reversed(above):
                    stack.append((j, chain + [j]))

    def __eq__(self, other):
        return (
            isinstance(other, GradedPoset)
            and self.elements == other.elements
            and self.down == other.down
            and self.ranks == other.ranks
        )

    def __hash__(self):
        return hash((self.elements, self.down, self.ranks))

    def __repr__(self):
        return f"GradedPoset({len(self.elements)} elements, {len(self.covers)} covers)"


def _ranks_from_down(down) -> list[int]:
    n = len(down)
    order = sorted(range(n), key=lambda i: down[i].bit_count())
    ranks = [0] * n
    for i in order:
        below = down[i] & ~(1 << i)
        ranks[i] = max((ranks[j] + 1 for j in bits(below)), default=0)
    return ranks


def poset_from_order(elements, leq: Callable, ranks=None) -> GradedPoset:
    """Build a GradedPoset from a total enumeration and a <= predicate.

    The predicate must be a partial order; antisymmetry violations raise
    (cycle detected) and so do transitivity violations.  Ranks default to
    longest-chain length from a minimal element.
    """
    elements = list(elements)
    n = len(elements)
    down = [0] * n
    for j in range(n):
        for i in range(n):
            if leq(elements[i], elements[j]):
                down[j] |= 1 << i
        if not down[j] >> j & 1:
            raise ValueError(f"leq is not reflexive at {elements[j]!r}")
    for i in range(n):
        for j in bits(down[i] & ~(1 << i)):
            if down[j] >> i & 1:
                raise ValueError("cycle detected: leq is not antisymmetric")
    for j in range(n):
        for i in bits(down[j]):
            if down[i] & ~down[j]:
                raise ValueError("leq is not transitive")
    if ranks is None:
        ranks = _ranks_from_down(down)
    elif len(ranks) != n:
        raise ValueError("ranks length mismatch")
    return GradedPoset(elements, down, ranks)


def is_thin(P: GradedPoset):
    """Whether every rank-2 interval has exactly 4 elements.

    Returns ``(True, None)`` or ``(False, witness)`` where the witness is the
    first offending closed interval as a tuple of labels.
    """
    if not P.is_graded():
        raise ValueError("poset is not graded")
    n = len(P.elements)
    for j in range(n):
        for i in bits(P.down[j] & ~(1 << j)):
            if P.ranks[j] - P.ranks[i] == 2:
                interval = P.down[j] & P.up[i]
                if interval.bit_count() != 4:
                    labels = tuple(P.elements[k] for k in bits(interval))
                    return False, labels
    return True, None


def is_lattice(P: GradedPoset) -> bool:
    """Every pair of elements must have a unique join and a unique meet."""
    n = len(P.elements)
    for i in range(n):
        for j in range(i + 1, n):
            for common in (P.up[i] & P.up[j], P.down[i] & P.down[j]):
                if common == 0:
                    return False
                mins = [
                    k
                    for k in bits(common)
                    if P.down[k] & common == 1 << k
                ]
                maxs = [
                    k
                    for k in bits(common)
                    if P.up[k] & common == 1 << k
                ]
                # join unique <=> the common upper set has one minimum; dual for meet
                if common == P.up[i] & P.up[j] and len(mins) != 1:
                    return False
                if common == P.down[i] & P.down[j] and len(maxs) != 1:
                    return False
    return True


def interval_poset(L: GradedPoset) -> GradedPoset:
    """Poset of closed intervals [F, G] of a lattice.

    [F', G'] <= [F, G] iff F <= F' and G' <= G; the rank of [F, G] is
    rank(G) - rank(F).
    """
    pairs = []
    ranks = []
    n = len(L.elements)
    for i in range(n):
        for j in bits(L.up[i]):
            pairs.append(Interval(L.elements[i], L.elements[j]))
            ranks.append(L.ranks[j] - L.ranks[i])
    order = sorted(range(len(pairs)), key=lambda k: canonical_key(pairs[k]))
    pairs = [pairs[k] for k in order]
    ranks = [ranks[k] for k in order]

    def leq(a: Interval, b: Interval) -> bool:
        return L.le(b.lower, a.lower) and L.le(a.upper, b.upper)

    return poset_from_order(pairs, leq, ranks)


def order_complex(P: GradedPoset) -> SimplicialComplex:
    """Simplicial complex of chains of P; facets are the maximal chains."""
    facets = [frozenset(chain) for chain in P.maximal_chains()]
    return SimplicialComplex.from_facets(P.elements, facets)


def to_dot(P: GradedPoset, name: str = "poset", label_fn=str) -> str:
    """Deterministic DOT rendering of the Hasse diagram (covers point up)."""
    order = sorted(
        range(len(P.elements)), key=lambda i: (P.ranks[i], canonical_key(P.elements[i]))
    )
    pos = {i: k for k, i in enumerate(order)}
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for i in order:
        lines.append(f'  n{pos[i]} [label="{label_fn(P.elements[i])}"];')
    for i, j in sorted(P.covers, key=lambda c: (pos[c[0]], pos[c[1]])):
        lines.append(f"  n{pos[i]} -> n{pos[j]};")
    lines.append("}")
    return "\n".join(lines)
