"""Regular cell decomposition of the full real matroid Schubert variety.

Cells are triples (F, G, T): nested flats together with a tope of the minor
supported on G - F.  Tope charts (reoriented copies of the nonnegative
complex) cover the variety; their overlap rule and the resulting closure
order are implemented exactly as tope scans, and homology is computed from
the order complex of the closure poset.
"""

from __future__ import annotations

from dataclasses import dataclass

from .homology import betti
from .linalg import Subspace, reorient_subspace
from .om import OrientedMatroid, from_subspace
from .posets import poset_from_order, order_complex
from .sign_vectors import SignVector, compose
from .tnn import (
    CellComplexPoset,
    _fmt_set,
    regularity_report,
    tnn_cell_poset,
)
from .util import CheckRecord, Report, bits, canonical_sorted, mask_of


@dataclass(frozen=True)
class TripleCell:
    """Cell (F, G, T) of the real variety; T has support exactly G - F."""

    lower: frozenset[int]
    upper: frozenset[int]
    tope: SignVector
    dim: int

    def __post_init__(self):
        if not self.lower <= self.upper:
            raise ValueError("cell flats are not nested")
        if self.tope.support != self.upper - self.lower:
            raise ValueError("tope support must be exactly upper - lower")

    def sort_key(self):
        return (
            "triple",
            tuple(sorted(self.lower)),
            tuple(sorted(self.upper)),
            self.tope.signs(),
        )

    def __str__(self):
        return f"[{_fmt_set(self.lower)},{_fmt_set(self.upper)};{self.tope}]"


@dataclass(frozen=True)
class TopeChart:
    """A tope with its relatively acyclic flats and chart complex."""

    tope: SignVector
    flats: tuple[frozenset[int], ...]
    complex: CellComplexPoset


def relatively_acyclic_flats(M: OrientedMatroid, tope: SignVector):
    """Zero sets of the covectors contained in the tope, canonically sorted."""
    if tope not in M.topes:
        raise ValueError(f"{tope} is not a tope")
    flats = {x.zero_set for x in M.covectors if x.leq(tope)}
    return tuple(canonical_sorted(flats))


def tope_chart(V: Subspace, tope: SignVector, M: OrientedMatroid | None = None) -> CellComplexPoset:
    """Chart complex of a tope: the nonnegative complex after reorienting.

    Negating the tope's negative coordinates carries the chart onto the
    nonnegative part; zero sets are unchanged by reorientation, so the cells
    come out labeled by flats of the original ground set.
    """
    if M is None:
        M = from_subspace(V)
    if tope not in M.topes:
        raise ValueError(f"{tope} is not a tope")
    W = reorient_subspace(V, bits(tope.minus))
    return tnn_cell_poset(from_subspace(W))


def tope_charts(V: Subspace, M: OrientedMatroid | None = None) -> tuple[TopeChart, ...]:
    if M is None:
        M = from_subspace(V)
    out = []
    for T in canonical_sorted(M.topes):
        out.append(
            TopeChart(T, relatively_acyclic_flats(M, T), tope_chart(V, T, M))
        )
    return tuple(out)


def triple_cells(M: OrientedMatroid) -> tuple[TripleCell, ...]:
    """All cells (F, G, T): for each covector X and flat G, the triple with
    F = X^0 intersect G and T the restriction of X to G."""
    seen = {}
    for X in M.covectors:
        z = X.zero_set
        for G in M.flats:
            F = z & G
            T = X.mask_to(G)
            key = (F, G, T)
            if key not in seen:
                seen[key] = TripleCell(
                    F, G, T, M.flat_ranks[G] - M.flat_ranks[F]
                )
    return tuple(canonical_sorted(seen.values()))


def same_chart_cell(F, G, T: SignVector, F2, G2, T2: SignVector) -> bool:
    """Whether chart-cell descriptors (flat pair + ambient tope) coincide.

    They do exactly when the flat pairs agree and the topes agree across
    G - F.
    """
    if (F, G) != (F2, G2):
        return False
    window = G - F
    return T.mask_to(window) == T2.mask_to(window)


def triple_of_chart_cell(M: OrientedMatroid, tope: SignVector, F, G) -> TripleCell:
    """Canonical triple of a chart cell, via the unique covector below the
    tope whose zero set is F."""
    matches = [
        X for X in M.covectors if X.zero_set == F and X.leq(tope)
    ]
    if len(matches) != 1:
        raise ValueError(
            f"expected a unique covector below {tope} with zero set {sorted(F)}, "
            f"found {len(matches)}"
        )
    T = matches[0].mask_to(G)
    return TripleCell(frozenset(F), frozenset(G), T, M.flat_ranks[frozenset(G)] - M.flat_ranks[frozenset(F)])


def chart_tope_of_triple(M: OrientedMatroid, cell: TripleCell) -> SignVector:
    """A tope whose chart contains the given triple cell (first canonical)."""
    f_cov = next(
        X
        for X in M.covectors_sorted
        if X.zero_set == cell.lower and X.mask_to(cell.upper) == cell.tope
    )
    g_cov = next(X for X in M.covectors_sorted if X.zero_set == cell.upper)
    X = compose(g_cov, f_cov)
    return next(T for T in canonical_sorted(M.topes) if X.leq(T))


def yv_complex(V: Subspace, M: OrientedMatroid | None = None) -> CellComplexPoset:
    """Closure poset of the real variety's cell decomposition.

    Cell (F', G', T') lies in the closure of (F, G, T) iff the flats nest as
    F <= F' <= G' <= G and some tope has all four flats relatively acyclic
    while matching T across G - F and T' across G' - F'.
    """
    if M is None:
        M = from_subspace(V)
    cells = triple_cells(M)
    topes = canonical_sorted(M.topes)
    rel = {
        T: frozenset(relatively_acyclic_flats(M, T)) for T in topes
    }

    def leq(a: TripleCell, b: TripleCell) -> bool:
        if a == b:
            return True
        if not (b.lower <= a.lower and a.upper <= b.upper):
            return False
        outer = b.upper - b.lower
        inner = a.upper - a.lower
        for S in topes:
            rs = rel[S]
            if (
                b.lower in rs
                and b.upper in rs
                and a.lower in rs
                and a.upper in rs
                and S.mask_to(outer) == b.tope
                and S.mask_to(inner) == a.tope
            ):
                return True
        return False

    poset = poset_from_order(cells, leq, [c.dim for c in cells])
    return CellComplexPoset(poset, M.loops)


def yv_betti(V: Subspace, M: OrientedMatroid | None = None) -> tuple[int, ...]:
    """Rational Betti numbers of the real variety via its order complex."""
    return betti(order_complex(yv_complex(V, M).poset))


# -- verification ------------------------------------------------------------


def chart_covering_report(V: Subspace, M: OrientedMatroid | None = None) -> Report:
    """Every triple cell must appear in at least one tope chart."""
    if M is None:
        M = from_subspace(V)
    topes = canonical_sorted(M.topes)
    rel = {T: frozenset(relatively_acyclic_flats(M, T)) for T in topes}
    missing = []
    cells = triple_cells(M)
    for cell in cells:
        window = cell.upper - cell.lower
        covered = any(
            cell.lower in rel[S]
            and cell.upper in rel[S]
            and S.mask_to(window) == cell.tope
            for S in topes
        )
        if not covered:
            missing.append(cell)
    return Report(
        (
            CheckRecord(
                "chart-covering",
                f"{len(cells)} cells, {len(topes)} charts",
                not missing,
                "all covered" if not missing else f"uncovered {missing[0]}",
            ),
        )
    )


def chart_overlap_report(V: Subspace, M: OrientedMatroid | None = None) -> Report:
    """Chart cells must coincide exactly per the overlap rule.

    Two chart cells with the same flat pair name the same cell of the variety
    iff their topes project equally across G - F; this is checked against the
    canonical triple labels computed through the unique-covector route.
    """
    if M is None:
        M = from_subspace(V)
    descriptors = []  # (tope, F, G, canonical triple)
    for T in canonical_sorted(M.topes):
        flats = relatively_acyclic_flats(M, T)
        for i, F in enumerate(flats):
            for G in flats[i:]:
                if F <= G:
                    descriptors.append((T, F, G, triple_of_chart_cell(M, T, F, G)))
                elif G <= F:
                    descriptors.append((T, G, F, triple_of_chart_cell(M, T, G, F)))
    buckets: dict[tuple, list] = {}
    for desc in descriptors:
        buckets.setdefault((desc[1], desc[2]), []).append(desc)
    disagreements = 0
    total_pairs = 0
    for (_, _), group in sorted(buckets.items(), key=lambda kv: (tuple(sorted(kv[0][0])), tuple(sorted(kv[0][1])))):
        for i in range(len(group)):
            for j in range(i, len(group)):
                t1, f1, g1, c1 = group[i]
                t2, f2, g2, c2 = group[j]
                total_pairs += 1
                if same_chart_cell(f1, g1, t1, f2, g2, t2) != (c1 == c2):
                    disagreements += 1
    return Report(
        (
            CheckRecord(
                "chart-overlap",
                f"{total_pairs} chart-cell pairs",
                disagreements == 0,
                f"{disagreements} disagreements",
            ),
        )
    )


def chart_regularity_report(V: Subspace, M: OrientedMatroid | None = None) -> Report:
    """Each tope chart must itself be a regular ball complex."""
    records = []
    for chart in tope_charts(V, M):
        rep = regularity_report(chart.complex)
        records.append(
            CheckRecord(
                "chart-ball",
                f"tope {chart.tope}",
                rep.passed,
                f"{len(chart.complex.cells)} cells",
            )
        )
    return Report(tuple(records))


def tnn_embedding_report(V: Subspace, M: OrientedMatroid | None = None) -> Report:
    """Cells carrying the all-positive tope must reproduce the nonnegative
    complex with its closure order (when the empty flat is acyclic)."""
    if M is None:
        M = from_subspace(V)
    if frozenset() not in set(M.acyclic_flats):
        return Report(
            (
                CheckRecord(
                    "tnn-embedding",
                    "skipped",
                    True,
                    "empty flat is not acyclic for this input",
                ),
            )
        )
    yv = yv_complex(V, M)
    acyclic = set(M.acyclic_flats)
    positive_cells = [
        c
        for c in yv.cells
        if c.lower in acyclic
        and c.upper in acyclic
        and c.tope == SignVector(M.n, mask_of(c.upper - c.lower), 0)
    ]
    sub = yv.poset.subposet(positive_cells)
    tnn = tnn_cell_poset(M)
    by_pair = {(c.lower, c.upper): c for c in tnn.cells}
    pairs_yv = {(c.lower, c.upper) for c in positive_cells}
    same_cells = pairs_yv == set(by_pair)
    same_order = True
    if same_cells:
        for a in positive_cells:
            for b in positive_cells:
                ta = by_pair[(a.lower, a.upper)]
                tb = by_pair[(b.lower, b.upper)]
                if sub.le(a, b) != tnn.poset.le(ta, tb):
                    same_order = False
    return Report(
        (
            CheckRecord(
                "tnn-embedding",
                f"{len(positive_cells)} positive cells",
                same_cells and same_order,
                "matches the nonnegative complex"
                if same_cells and same_order
                else "mismatch",
            ),
        )
    )
