"""Cell complex of the nonnegative part of a matroid Schubert variety.

Cells are indexed by pairs of nested acyclic flats [F, G]; the closure order
is the interval order of the lattice of acyclic flats.  This module builds
that complex, cross-checks it against the exact feasibility oracle, certifies
regularity and ball/sphere topology through order-complex homology, and
searches for shellings of pure subcomplexes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .homology import betti, is_ball_betti, sphere_betti
from .linalg import Subspace, project_subspace, sign_feasible, vanish_solve
from .om import OrientedMatroid, from_subspace, is_acyclic_flat, relabel_into, restrict
from .posets import GradedPoset, Interval, interval_poset, order_complex, poset_from_order
from .util import CheckRecord, Report, canonical_key, canonical_sorted


def _fmt_set(s) -> str:
    return "{" + ",".join(str(i) for i in sorted(s)) + "}"


@dataclass(frozen=True)
class TnnCell:
    """Cell [F, G] of the nonnegative complex: F <= G nested acyclic flats."""

    lower: frozenset[int]
    upper: frozenset[int]
    dim: int

    def __post_init__(self):
        if not self.lower <= self.upper:
            raise ValueError("cell flats are not nested")
        if self.dim < 0:
            raise ValueError("cell dimension is negative")

    def sort_key(self):
        return ("tnn", tuple(sorted(self.lower)), tuple(sorted(self.upper)))

    def __str__(self):
        return f"[{_fmt_set(self.lower)},{_fmt_set(self.upper)}]"


@dataclass(frozen=True)
class CellComplexPoset:
    """Cells with dimensions and closure order (a graded poset by dim)."""

    poset: GradedPoset
    loops: frozenset[int] = field(default_factory=frozenset)

    @property
    def cells(self) -> tuple:
        return self.poset.elements

    def dim_of(self, cell) -> int:
        return self.poset.rank(cell)

    @property
    def top_dimension(self) -> int:
        return self.poset.max_rank

    def cells_of_dim(self, k: int) -> tuple:
        return self.poset.elements_of_rank(k)

    def facets(self) -> tuple:
        return self.poset.maximal_elements()

    def is_pure(self) -> bool:
        d = self.top_dimension
        return all(self.poset.rank(c) == d for c in self.facets())

    def top_cell(self):
        tops = self.facets()
        if len(tops) != 1:
            raise ValueError("complex has no unique top cell")
        return tops[0]

    def subcomplex(self, cells) -> "CellComplexPoset":
        keep = set(cells)
        for c in keep:  # a subcomplex must be closed under taking boundaries
            for below in self.poset.down_set(c):
                if below not in keep:
                    raise ValueError("cell set is not downward closed")
        return CellComplexPoset(self.poset.subposet(keep), self.loops)

    def boundary(self) -> "CellComplexPoset":
        """All cells except the unique top cell."""
        top = self.top_cell()
        rest = [c for c in self.cells if c != top]
        return CellComplexPoset(self.poset.subposet(rest), self.loops)

    def zero_locus(self) -> "CellComplexPoset":
        """Cells whose points have a vanishing coordinate: lower flat nonempty."""
        keep = [c for c in self.cells if c.lower]
        return CellComplexPoset(self.poset.subposet(keep), self.loops)

    def strict_lower_poset(self, cell) -> GradedPoset:
        return self.poset.subposet(self.poset.down_set(cell, strict=True))


def las_vergnas_lattice(M: OrientedMatroid) -> GradedPoset:
    """Acyclic flats of M ordered by inclusion."""
    flats = canonical_sorted(M.acyclic_flats)
    return poset_from_order(flats, lambda a, b: a <= b)


def cell_complex_from_lattice(L: GradedPoset, loops=frozenset()) -> CellComplexPoset:
    """Interval poset of a lattice of flats, packaged as a cell complex."""
    ip = interval_poset(L)
    rank_of = {e: r for e, r in zip(ip.elements, ip.ranks)}
    relabeled = ip.relabel(
        lambda iv: TnnCell(iv.lower, iv.upper, rank_of[iv])
    )
    return CellComplexPoset(relabeled, frozenset(loops))


def tnn_cell_poset(M: OrientedMatroid) -> CellComplexPoset:
    """Cell poset of the nonnegative complex of M."""
    return cell_complex_from_lattice(las_vergnas_lattice(M), M.loops)


# -- verification ------------------------------------------------------------


def closure_nesting_report(C: CellComplexPoset) -> Report:
    """Closure order must coincide with nesting F <= F' <= G' <= G,
    and covers must drop dimension by exactly one."""
    records = []
    ok = True
    for c in C.cells:
        for b in C.poset.down_set(c):
            if not (c.lower <= b.lower and b.upper <= c.upper):
                ok = False
                records.append(
                    CheckRecord("closure-nesting", f"{b} <= {c}", False, "not nested")
                )
    graded = C.poset.is_graded()
    records.append(
        CheckRecord(
            "closure-nesting",
            f"{len(C.cells)} cells",
            ok,
            "order matches flat nesting" if ok else "",
        )
    )
    records.append(
        CheckRecord("closure-graded", f"{len(C.cells)} cells", graded,
                    "covers drop dim by 1" if graded else "cover with dim jump")
    )
    return Report(tuple(records))


def verify_strata_oracle(V: Subspace) -> Report:
    """Cross-check cell membership against the exact feasibility oracle.

    A pair of flats (F, G) indexes a cell iff both hold geometrically:
    the projection of V to G admits a vector that is zero on F and positive
    on G - F, and V admits a vector that is zero on G and positive outside.
    The projection side must also agree with acyclicity in the restriction.
    """
    M = from_subspace(V)
    C = tnn_cell_poset(M)
    cells = {(c.lower, c.upper) for c in C.cells}
    records = []
    mismatches = 0
    flats = canonical_sorted(M.flats)
    g_acyclic: dict[frozenset, bool] = {}
    for G in flats:
        g_acyclic[G] = sign_feasible(V, M.positive_covector_on(G)).feasible
    for G in flats:
        proj = project_subspace(V, G)
        MG = restrict(M, G)
        for F in flats:
            if not F <= G:
                continue
            f_in_g = relabel_into(G, F)
            pattern = MG.positive_covector_on(f_in_g)
            inner = sign_feasible(proj, pattern).feasible
            if inner != is_acyclic_flat(MG, f_in_g):
                mismatches += 1
                records.append(
                    CheckRecord(
                        "strata-oracle",
                        f"restriction check F={_fmt_set(F)} G={_fmt_set(G)}",
                        False,
                        "oracle disagrees with restricted acyclicity",
                    )
                )
            geometric = inner and g_acyclic[G]
            combinatorial = (F, G) in cells
            if geometric != combinatorial:
                mismatches += 1
                records.append(
                    CheckRecord(
                        "strata-oracle",
                        f"F={_fmt_set(F)} G={_fmt_set(G)}",
                        False,
                        f"geometric={geometric} cell={combinatorial}",
                    )
                )
    records.append(
        CheckRecord(
            "strata-oracle",
            f"{len(flats)} flats",
            mismatches == 0,
            f"{mismatches} mismatches",
        )
    )
    return Report(tuple(records))


def cell_regularity_report(C: CellComplexPoset) -> Report:
    """Per-cell regularity: every cell of dimension k >= 1 must have a
    boundary whose order complex has the Betti numbers of the (k-1)-sphere."""
    records = []
    for cell in C.cells:
        k = C.dim_of(cell)
        if k < 1:
            continue
        sub = C.strict_lower_poset(cell)
        b = betti(order_complex(sub))
        want = sphere_betti(k - 1)
        records.append(
            CheckRecord(
                "cell-boundary-sphere",
                str(cell),
                b == want,
                f"betti {b}, expected {want}",
            )
        )
    return Report(tuple(records))


def regularity_report(C: CellComplexPoset) -> Report:
    """Homological regularity certificate for a ball-like cell complex.

    Every cell of dimension k >= 1 must have a boundary whose order complex
    has the Betti numbers of the (k-1)-sphere; the whole complex must look
    like a ball, and (when present) its boundary like a sphere.
    """
    records = list(cell_regularity_report(C).records)
    whole = betti(order_complex(C.poset))
    records.append(
        CheckRecord(
            "complex-contractible",
            f"{len(C.cells)} cells",
            is_ball_betti(whole),
            f"betti {whole}",
        )
    )
    d = C.top_dimension
    if d >= 1:
        bd = C.boundary()
        b = betti(order_complex(bd.poset))
        want = sphere_betti(d - 1)
        records.append(
            CheckRecord(
                "boundary-sphere", f"dim {d - 1}", b == want, f"betti {b}, expected {want}"
            )
        )
    return Report(tuple(records))


def boundary_pairing_check(C: CellComplexPoset) -> Report:
    """Facet-pairing conditions on the boundary complex.

    In the boundary, every cell of codimension one must lie below exactly two
    facets; within the zero locus, some codimension-one cell must lie below
    exactly one zero-locus facet.
    """
    records = []
    bd = C.boundary()
    d = bd.top_dimension
    if d < 1:
        records.append(
            CheckRecord("boundary-pairing", "degenerate", True, "boundary dim < 1")
        )
        return Report(tuple(records))
    bad = []
    for cell in bd.cells_of_dim(d - 1):
        above = [c for c in bd.poset.up_set(cell, strict=True) if bd.dim_of(c) == d]
        if len(above) != 2:
            bad.append((cell, len(above)))
    records.append(
        CheckRecord(
            "boundary-pairing",
            f"{len(bd.cells_of_dim(d - 1))} cells of dim {d - 1}",
            not bad,
            "every one under exactly two facets"
            if not bad
            else f"{bad[0][0]} under {bad[0][1]}",
        )
    )
    zl = C.zero_locus()
    dz = zl.top_dimension
    if dz < 1:
        records.append(
            CheckRecord("zero-locus-free-face", "degenerate", True, "zero locus dim < 1")
        )
        return Report(tuple(records))
    found = None
    for cell in zl.cells_of_dim(dz - 1):
        above = [c for c in zl.poset.up_set(cell, strict=True) if zl.dim_of(c) == dz]
        if len(above) == 1:
            found = cell
            break
    records.append(
        CheckRecord(
            "zero-locus-free-face",
            f"dim {dz - 1} within the zero locus",
            found is not None,
            f"witness {found}" if found is not None else "no free face",
        )
    )
    return Report(tuple(records))


# -- shellings ---------------------------------------------------------------


class _ShellingSearch:
    """Backtracking search/verification for the recursive shelling condition.

    A pure d-complex is shellable when d = 0 and it has at most two cells, or
    when its facets can be ordered so each one meets the union of its
    predecessors in a nonempty pure (d-1)-subcomplex whose facets can start a
    shelling of that facet's boundary.  Results are memoized per
    (facet set, required-prefix set).
    """

    def __init__(self, poset: GradedPoset):
        self.poset = poset
        self.memo: dict[tuple[frozenset[int], frozenset[int]], tuple | None] = {}
        self._key = lambda i: canonical_key(poset.elements[i])

    def boundary_facets(self, idx: int) -> frozenset[int]:
        strict = self.poset.down[idx] & ~(1 << idx)
        out = set()
        d = self.poset.ranks[idx]
        for i in _bits(strict):
            if self.poset.up[i] & strict == 1 << i:
                if self.poset.ranks[i] != d - 1:
                    raise ValueError("cell boundary is not pure of codimension one")
                out.add(i)
        return frozenset(out)

    def _closed(self, idx: int) -> int:
        return self.poset.down[idx]

    def shellable(self, facets: frozenset[int], first: frozenset[int]):
        key = (facets, first)
        if key in self.memo:
            return self.memo[key]
        self.memo[key] = result = self._search(facets, first)
        return result

    def _search(self, facets: frozenset[int], first: frozenset[int]):
        if not facets:
            return None
        dims = {self.poset.ranks[i] for i in facets}
        if len(dims) != 1:
            raise ValueError("complex is not pure")
        d = dims.pop()
        if d == 0:
            if len(facets) > 2:
                return None
            order = sorted(first, key=self._key) + sorted(
                facets - first, key=self._key
            )
            return tuple(order)
        return self._extend([], 0, facets, first)

    def _extend(self, placed: list[int], union_mask: int, remaining, first):
        if not remaining:
            return tuple(placed)
        pending_first = remaining & first
        pool = pending_first if pending_first else remaining
        for f in sorted(pool, key=self._key):
            if self._admissible(f, union_mask, not placed):
                result = self._extend(
                    placed + [f], union_mask | self._closed(f), remaining - {f}, first
                )
                if result is not None:
                    return result
        return None

    def _admissible(self, f: int, union_mask: int, is_head: bool) -> bool:
        bfacets = self.boundary_facets(f)
        if is_head:
            if not bfacets:  # a 1-cell with empty boundary cannot occur here
                return self.poset.ranks[f] == 0
            return self.shellable(bfacets, frozenset()) is not None
        inter = self._closed(f) & union_mask
        if inter == 0:
            return False
        d = self.poset.ranks[f]
        ifacets = set()
        for i in _bits(inter):
            if self.poset.up[i] & inter == 1 << i:
                if self.poset.ranks[i] != d - 1:
                    return False  # intersection is not pure of dim d-1
                ifacets.add(i)
        return self.shellable(bfacets, frozenset(ifacets)) is not None


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _facet_indices(C: CellComplexPoset) -> frozenset[int]:
    if not C.cells:
        raise ValueError("empty complex")
    if not C.is_pure():
        raise ValueError("complex is not pure")
    return frozenset(C.poset.index(c) for c in C.facets())


def find_shelling(C: CellComplexPoset, zero_locus_first: bool = False):
    """First valid shelling order under canonical tie-breaking, or None.

    With ``zero_locus_first`` the facets lying in the zero locus are forced to
    the front of the order.
    """
    facets = _facet_indices(C)
    first = frozenset()
    if zero_locus_first:
        first = frozenset(i for i in facets if C.poset.elements[i].lower)
    search = _ShellingSearch(C.poset)
    order = search.shellable(facets, first)
    if order is None:
        return None
    return tuple(C.poset.elements[i] for i in order)


def verify_shelling(C: CellComplexPoset, order) -> bool:
    """Check the recursive shelling condition for an explicit facet order."""
    facets = _facet_indices(C)
    try:
        idx_order = [C.poset.index(c) for c in order]
    except KeyError:
        return False
    if len(idx_order) != len(facets) or set(idx_order) != facets:
        return False
    search = _ShellingSearch(C.poset)
    if not idx_order:
        return False
    d = C.poset.ranks[idx_order[0]]
    if d == 0:
        return len(idx_order) <= 2
    union_mask = 0
    for pos, f in enumerate(idx_order):
        if not search._admissible(f, union_mask, pos == 0):
            return False
        union_mask |= C.poset.down[f]
    return True


def satisfies_property_s(C: CellComplexPoset, order) -> bool:
    """Weak shelling consequence: late facets meet earlier ones through a
    codimension-one wall inside some even-earlier facet."""
    idx = [C.poset.index(c) for c in order]
    d = C.top_dimension
    down = C.poset.down
    for a in range(1, len(idx)):
        for b in range(a):
            inter = down[idx[a]] & down[idx[b]]
            ok = False
            for k in range(a):
                if inter & ~down[idx[k]] == 0:
                    wall = down[idx[k]] & down[idx[a]]
                    top = max(
                        (C.poset.ranks[i] for i in _bits(wall)), default=-1
                    )
                    if top == d - 1:
                        ok = True
                        break
            if not ok:
                return False
    return True


def minor_correspondence_check(V: Subspace) -> Report:
    """Projections and vanishing slices must reproduce sub-cell-posets.

    For each acyclic flat G, the complex of the projection onto G matches the
    cells [F', G'] with G' <= G; for each acyclic flat F, the complex of the
    slice vanishing on F matches the cells with F <= F'.
    """
    M = from_subspace(V)
    C = tnn_cell_poset(M)
    celldims = {(c.lower, c.upper): c.dim for c in C.cells}
    records = []
    for G in M.acyclic_flats:
        sub = from_subspace(project_subspace(V, G))
        CG = tnn_cell_poset(sub)
        coords = sorted(G)
        got = {
            (frozenset(coords[i] for i in c.lower), frozenset(coords[i] for i in c.upper)): c.dim
            for c in CG.cells
        }
        want = {fg: d for fg, d in celldims.items() if fg[1] <= G}
        records.append(
            CheckRecord(
                "minor-projection",
                f"G={_fmt_set(G)}",
                got == want,
                f"{len(got)} cells",
            )
        )
    for F in M.acyclic_flats:
        sub = from_subspace(vanish_solve(V, F))
        CF = tnn_cell_poset(sub)
        got = {(c.lower, c.upper): c.dim for c in CF.cells}
        want = {fg: d for fg, d in celldims.items() if F <= fg[0]}
        records.append(
            CheckRecord(
                "minor-contraction",
                f"F={_fmt_set(F)}",
                got == want,
                f"{len(got)} cells",
            )
        )
    return Report(tuple(records))
