"""Realizable oriented matroids: covectors, axioms, flats, minors, acyclic flats.

The covectors of a subspace V in Q^E are the signs of its vectors.  They are
generated here from cocircuits (signs of the one-dimensional slices of V cut
out by vanishing patterns) closed under composition, which for realizable
data reproduces the full covector set; the feasibility oracle provides an
independent route used by the verification suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .linalg import Subspace, check_ground_size, vanish_solve
from .sign_vectors import SignVector, compose, sign_of
from .util import CheckRecord, Report, bits, canonical_sorted, mask_of


@dataclass(frozen=True)
class Flat:
    """A flat with its rank (longest-chain length from the minimal flat)."""

    members: frozenset[int]
    rank: int

    def sort_key(self):
        return ("flat", tuple(sorted(self.members)), self.rank)


class OrientedMatroid:
    """Ground size plus covector set; derived data is cached on first use.

    Instances are value objects: equality and hashing use ``(n, covectors)``.
    Mutating attributes after construction is unsupported.
    """

    def __init__(self, n: int, covectors):
        self.n = n
        self.covectors = frozenset(covectors)
        if any(x.n != n for x in self.covectors):
            raise ValueError("covector ground size mismatch")
        if SignVector.zero(n) not in self.covectors:
            raise ValueError("covector set must contain the zero sign vector")

    def __eq__(self, other):
        return (
            isinstance(other, OrientedMatroid)
            and self.n == other.n
            and self.covectors == other.covectors
        )

    def __hash__(self):
        return hash((self.n, self.covectors))

    def __repr__(self):
        return f"OrientedMatroid(n={self.n}, covectors={len(self.covectors)})"

    @cached_property
    def covectors_sorted(self) -> tuple[SignVector, ...]:
        return tuple(canonical_sorted(self.covectors))

    @cached_property
    def cocircuits(self) -> frozenset[SignVector]:
        nonzero = [x for x in self.covectors if not x.is_zero()]
        return frozenset(
            x
            for x in nonzero
            if not any(y.leq(x) and y != x for y in nonzero)
        )

    @cached_property
    def topes(self) -> frozenset[SignVector]:
        return frozenset(
            x
            for x in self.covectors
            if not any(x.leq(y) and y != x for y in self.covectors)
        )

    @cached_property
    def loops(self) -> frozenset[int]:
        full = (1 << self.n) - 1
        m = full
        for x in self.covectors:
            m &= ~x.support_mask
        return frozenset(bits(m))

    @cached_property
    def flat_ranks(self) -> dict[frozenset[int], int]:
        """All flats (zero sets of covectors) with longest-chain ranks."""
        flats = {x.zero_set for x in self.covectors}
        order = sorted(flats, key=lambda f: (len(f), tuple(sorted(f))))
        ranks: dict[frozenset[int], int] = {}
        for f in order:
            below = [ranks[g] for g in ranks if g < f]
            ranks[f] = max(below) + 1 if below else 0
        return ranks

    @cached_property
    def flats(self) -> frozenset[frozenset[int]]:
        return frozenset(self.flat_ranks)

    def rank_of(self, flat: frozenset[int]) -> int:
        return self.flat_ranks[frozenset(flat)]

    @property
    def rank(self) -> int:
        return self.flat_ranks[frozenset(range(self.n))]

    @cached_property
    def acyclic_flats(self) -> tuple[frozenset[int], ...]:
        return tuple(
            f
            for f in sorted(self.flats, key=lambda f: tuple(sorted(f)))
            if is_acyclic_flat(self, f)
        )

    def positive_covector_on(self, flat) -> SignVector:
        """The sign vector that is zero on ``flat`` and + elsewhere."""
        full = (1 << self.n) - 1
        m = mask_of(flat)
        return SignVector(self.n, full & ~m, 0)


def from_subspace(V: Subspace, allow_large: bool = False) -> OrientedMatroid:
    """Oriented matroid of a subspace: signs of its vectors.

    Cocircuits are found by scanning (dim-1)-subsets of the ground set for
    one-dimensional vanishing slices; covectors are the composition closure.
    """
    check_ground_size(V.n, allow_large)
    n, d = V.n, V.dim
    zero = SignVector.zero(n)
    if d == 0:
        return OrientedMatroid(n, {zero})
    cocircuits: set[SignVector] = set()
    for subset in combinations(range(n), d - 1):
        W = vanish_solve(V, subset)
        if W.dim == 1:
            sv = sign_of(W.basis[0])
            cocircuits.add(sv)
            cocircuits.add(-sv)
    covectors: set[SignVector] = {zero} | cocircuits
    frontier = canonical_sorted(cocircuits)
    while frontier:
        new: set[SignVector] = set()
        known = canonical_sorted(covectors)
        for x in frontier:
            for y in known:
                z = compose(x, y)
                if z not in covectors and z not in new:
                    new.add(z)
        covectors |= new
        frontier = canonical_sorted(new)
    return OrientedMatroid(n, covectors)


def check_axioms(covectors) -> Report:
    """Exhaustively verify the covector axioms on a finite sign-vector set.

    Checks membership of zero, closure under negation and composition, and
    elimination: whenever X_i = -Y_i != 0 there is a covector Z with Z_i = 0
    agreeing with X о Y on every coordinate where X and Y do not conflict.
    Every violation found is reported.
    """
    cset = frozenset(covectors)
    records = []
    if not cset:
        return Report((CheckRecord("axiom:zero", "empty set", False, "no covectors"),))
    n = next(iter(cset)).n
    zero = SignVector.zero(n)
    records.append(
        CheckRecord("axiom:zero", str(zero), zero in cset, "" if zero in cset else "missing")
    )
    ordered = canonical_sorted(cset)
    for x in ordered:
        if -x not in cset:
            records.append(CheckRecord("axiom:negation", str(x), False, "negation missing"))
    for x in ordered:
        for y in ordered:
            if compose(x, y) not in cset:
                records.append(
                    CheckRecord(
                        "axiom:composition", f"{x} o {y}", False, "composition missing"
                    )
                )
    for x in ordered:
        for y in ordered:
            sep = (x.plus & y.minus) | (x.minus & y.plus)
            if sep == 0:
                continue
            comp = compose(x, y)
            for i in bits(sep):
                found = False
                for z in cset:
                    if z.sign(i) != 0:
                        continue
                    diff = (z.plus ^ comp.plus) | (z.minus ^ comp.minus)
                    if diff & ~sep == 0:
                        found = True
                        break
                if not found:
                    records.append(
                        CheckRecord(
                            "axiom:elimination",
                            f"{x}, {y} at {i}",
                            False,
                            "no eliminating covector",
                        )
                    )
    if all(r.passed for r in records):
        return Report(
            (
                CheckRecord(
                    "axioms", f"{len(cset)} covectors", True, "zero/negation/composition/elimination"
                ),
            )
        )
    return Report(tuple(records))


def flats_and_ranks(M: OrientedMatroid) -> frozenset[Flat]:
    return frozenset(Flat(f, r) for f, r in M.flat_ranks.items())


def _require_flat(M: OrientedMatroid, flat) -> frozenset[int]:
    f = frozenset(flat)
    if f not in M.flats:
        raise ValueError(f"{sorted(f)} is not a flat")
    return f


def restrict(M: OrientedMatroid, flat) -> OrientedMatroid:
    """Restriction to a flat: covectors projected onto it (reindexed sorted)."""
    f = _require_flat(M, flat)
    coords = sorted(f)
    return OrientedMatroid(len(coords), {x.restrict(coords) for x in M.covectors})


def contract(M: OrientedMatroid, flat) -> OrientedMatroid:
    """Contraction by a flat: covectors vanishing on it (same ground set)."""
    f = _require_flat(M, flat)
    m = mask_of(f)
    return OrientedMatroid(M.n, {x for x in M.covectors if x.support_mask & m == 0})


def reorient(M: OrientedMatroid, coords) -> OrientedMatroid:
    cs = sorted(set(coords))
    return OrientedMatroid(M.n, {x.reorient(cs) for x in M.covectors})


def is_acyclic_flat(M: OrientedMatroid, flat) -> bool:
    """True iff ``flat`` is a flat whose complement carries an all-+ covector."""
    f = frozenset(flat)
    if f not in M.flats:
        return False
    return M.positive_covector_on(f) in M.covectors


def relabel_into(flat, subset) -> frozenset[int]:
    """Translate ``subset`` of ``flat`` into restriction indices (sorted order)."""
    coords = sorted(flat)
    pos = {old: new for new, old in enumerate(coords)}
    return frozenset(pos[i] for i in subset)


TOP = "TOP"


def covector_poset(M: OrientedMatroid, with_top: bool = True):
    """Covectors under containment, optionally with a maximum adjoined.

    With the top adjoined this is a graded lattice; imported lazily to keep
    the poset kit optional for pure sign-vector work.
    """
    from .posets import poset_from_order

    if with_top:
        elements = list(M.covectors_sorted) + [TOP]
        leq = lambda a, b: b is TOP or (a is not TOP and a.leq(b))
    else:
        elements = list(M.covectors_sorted)
        leq = lambda a, b: a.leq(b)
    return poset_from_order(elements, leq)
