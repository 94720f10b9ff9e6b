"""Command-line surface: parse a subspace, run pipelines, emit reports.

Input is a rational matrix file (one row per line, entries like ``2`` or
``-1/3``; blank lines and ``#`` comments ignored).  By default rows are read
as homogeneous equations cutting out the subspace; ``--mode span`` reads them
as spanning vectors.  Output is deterministic: identical input and flags give
byte-identical output.  All coordinates are 0-based.

Exit status: 0 all checks passed / command succeeded, 1 a verification check
failed, 2 input error (unparsable matrix or ground set over the size limit
without --allow-large).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .homology import betti, euler_from_betti, sphere_betti
from .linalg import (
    GroundSetSizeError,
    Subspace,
    check_ground_size,
    kernel_basis,
    parse_matrix_text,
)
from .om import check_axioms, covector_poset, from_subspace
from .posets import is_thin, order_complex, poset_from_order, to_dot
from .real_variety import (
    chart_covering_report,
    chart_overlap_report,
    chart_regularity_report,
    tnn_embedding_report,
    yv_complex,
)
from .tnn import (
    boundary_pairing_check,
    closure_nesting_report,
    find_shelling,
    las_vergnas_lattice,
    minor_correspondence_check,
    regularity_report,
    tnn_cell_poset,
    verify_strata_oracle,
)
from .util import CheckRecord, Report, canonical_sorted

SCHEMA_VERSION = 1

COMMANDS = (
    "covectors",
    "flats",
    "acyclic-flats",
    "cells",
    "verify",
    "homology",
    "shelling",
    "export",
)


@dataclass(frozen=True)
class RunConfig:
    """One CLI invocation: input, mode, command, and output options."""

    input_path: str
    command: str
    variant: str = ""  # tnn | real, for cells/homology
    mode: str = "equations"  # equations | span
    output: str = "human"  # human | structured | dot
    allow_large: bool = False
    zero_locus_first: bool = False


def _load_subspace(config: RunConfig) -> Subspace:
    text = Path(config.input_path).read_text()
    rows = parse_matrix_text(text)
    if not rows:
        raise ValueError("input matrix is empty")
    n = len(rows[0])
    check_ground_size(n, config.allow_large)
    if config.mode == "span":
        return Subspace.from_spanning(n, rows)
    return kernel_basis(rows)


def _set_str(s) -> str:
    return "{" + ",".join(str(i) for i in sorted(s)) + "}"


def _flat_entries(M):
    acyclic = set(M.acyclic_flats)
    return [
        {"members": sorted(f), "rank": M.flat_ranks[f], "acyclic": f in acyclic}
        for f in canonical_sorted(M.flats)
    ]


def _cells_entries(C, with_tope: bool):
    out = []
    for c in C.cells:
        entry = {
            "lower": sorted(c.lower),
            "upper": sorted(c.upper),
            "dim": C.dim_of(c),
        }
        if with_tope:
            entry["tope"] = str(c.tope)
        out.append(entry)
    return out


def _cover_entries(C):
    labels = {c: i for i, c in enumerate(C.cells)}
    return sorted(
        [labels[C.poset.elements[i]], labels[C.poset.elements[j]]]
        for i, j in C.poset.covers
    )


def _verify_reports(V: Subspace) -> Report:
    M = from_subspace(V, allow_large=True)
    C = tnn_cell_poset(M)
    report = check_axioms(M.covectors)

    thin_cov, _ = is_thin(covector_poset(M))
    report = report.merged(
        Report((CheckRecord("covector-poset-thin", f"{len(M.covectors)} covectors", thin_cov),))
    )
    thin_cells, _ = is_thin(C.poset)
    report = report.merged(
        Report((CheckRecord("cell-poset-thin", f"{len(C.cells)} cells", thin_cells),))
    )
    report = report.merged(verify_strata_oracle(V))
    report = report.merged(closure_nesting_report(C))
    report = report.merged(regularity_report(C))
    report = report.merged(boundary_pairing_check(C))
    report = report.merged(minor_correspondence_check(V))
    report = report.merged(chart_covering_report(V, M))
    report = report.merged(chart_overlap_report(V, M))
    report = report.merged(chart_regularity_report(V, M))
    report = report.merged(tnn_embedding_report(V, M))
    return report


def run(config: RunConfig, out=None) -> int:
    """Execute one command; returns the exit status."""
    out = out if out is not None else sys.stdout
    write = lambda s: print(s, file=out)
    try:
        V = _load_subspace(config)
    except GroundSetSizeError as exc:
        write(f"input error: {exc}")
        return 2
    except (OSError, ValueError) as exc:
        write(f"input error: {exc}")
        return 2

    M = from_subspace(V, allow_large=True)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": config.command + (f" {config.variant}" if config.variant else ""),
        "ground_size": V.n,
        "dim": V.dim,
        "loops": sorted(M.loops),
    }

    if config.command == "covectors":
        covs = [str(x) for x in M.covectors_sorted]
        doc["covector_count"] = len(covs)
        doc["covectors"] = covs
        doc["cocircuits"] = [str(x) for x in canonical_sorted(M.cocircuits)]
        doc["topes"] = [str(x) for x in canonical_sorted(M.topes)]
        if config.output == "structured":
            write(json.dumps(doc, indent=2, sort_keys=True))
        else:
            write(f"ground size {V.n}, dim {V.dim}, {len(covs)} covectors")
            for x in covs:
                write(x)
        return 0

    if config.command in ("flats", "acyclic-flats"):
        if config.command == "flats":
            flats = canonical_sorted(M.flats)
            poset = poset_from_order(flats, lambda a, b: a <= b)
        else:
            poset = las_vergnas_lattice(M)
            flats = list(poset.elements)
        if config.output == "dot":
            write(to_dot(poset, name="flats", label_fn=_set_str))
            return 0
        doc["flats"] = _flat_entries(M)
        if config.output == "structured":
            write(json.dumps(doc, indent=2, sort_keys=True))
        else:
            write(f"{len(flats)} {config.command.replace('-', ' ')}")
            for f in flats:
                write(f"{_set_str(f)} rank {M.flat_ranks[f]}")
        return 0

    if config.command == "cells":
        C = tnn_cell_poset(M) if config.variant == "tnn" else yv_complex(V, M)
        doc["cells"] = _cells_entries(C, with_tope=config.variant == "real")
        doc["cover_relations"] = _cover_entries(C)
        if config.output == "dot":
            write(to_dot(C.poset, name="cells"))
            return 0
        if config.output == "structured":
            write(json.dumps(doc, indent=2, sort_keys=True))
        else:
            by_dim = {}
            for c in C.cells:
                by_dim[C.dim_of(c)] = by_dim.get(C.dim_of(c), 0) + 1
            counts = "/".join(str(by_dim[k]) for k in sorted(by_dim))
            write(f"{len(C.cells)} cells by dimension: {counts}")
            for c in C.cells:
                write(f"{c} dim {C.dim_of(c)}")
        return 0

    if config.command == "homology":
        if config.variant == "tnn":
            C = tnn_cell_poset(M)
            total = betti(order_complex(C.poset))
            doc["betti"] = list(total)
            lines = [f"betti of the nonnegative complex: {total}"]
            if C.top_dimension >= 1:
                bd = betti(order_complex(C.boundary().poset))
                doc["betti_boundary"] = list(bd)
                lines.append(f"betti of its boundary: {bd}")
        else:
            from .real_variety import yv_betti

            total = yv_betti(V, M)
            doc["betti"] = list(total)
            lines = [f"betti of the real variety: {total}"]
            b1 = total[1] if len(total) > 1 else 0
            lines.append(f"first betti number {b1}" + (" >= 1" if b1 >= 1 else ""))
        doc["euler_characteristic"] = euler_from_betti(total)
        if config.output == "structured":
            write(json.dumps(doc, indent=2, sort_keys=True))
        else:
            for line in lines:
                write(line)
        return 0

    if config.command == "shelling":
        C = tnn_cell_poset(M)
        if C.top_dimension < 1:
            write("complex is a single cell; nothing to shell")
            return 0
        order = find_shelling(C.boundary(), zero_locus_first=config.zero_locus_first)
        if order is None:
            write("no shelling found")
            return 1
        doc["shelling"] = [str(c) for c in order]
        if config.output == "structured":
            write(json.dumps(doc, indent=2, sort_keys=True))
        else:
            write(f"shelling of the boundary ({len(order)} facets):")
            for c in order:
                write(str(c))
        return 0

    if config.command == "verify":
        report = _verify_reports(V)
        doc["checks"] = [
            {"check": r.check, "subject": r.subject, "passed": r.passed, "detail": r.detail}
            for r in report.records
        ]
        doc["passed"] = report.passed
        if config.output == "structured":
            write(json.dumps(doc, indent=2, sort_keys=True))
        else:
            for line in report.lines():
                write(line)
            write("PASS" if report.passed else "FAIL")
        return 0 if report.passed else 1

    if config.command == "export":
        C = tnn_cell_poset(M)
        R = yv_complex(V, M)
        report = _verify_reports(V)
        doc["covector_count"] = len(M.covectors)
        doc["covectors"] = [str(x) for x in M.covectors_sorted]
        doc["flats"] = _flat_entries(M)
        doc["acyclic_flats"] = [sorted(f) for f in M.acyclic_flats]
        doc["cells_tnn"] = _cells_entries(C, with_tope=False)
        doc["cover_relations_tnn"] = _cover_entries(C)
        doc["cells_real"] = _cells_entries(R, with_tope=True)
        doc["cover_relations_real"] = _cover_entries(R)
        doc["betti_tnn"] = list(betti(order_complex(C.poset)))
        doc["betti_real"] = list(betti(order_complex(R.poset)))
        doc["checks"] = [
            {"check": r.check, "subject": r.subject, "passed": r.passed, "detail": r.detail}
            for r in report.records
        ]
        doc["passed"] = report.passed
        write(json.dumps(doc, indent=2, sort_keys=True))
        return 0 if report.passed else 1

    write(f"input error: unknown command {config.command!r}")
    return 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matschub",
        description="cell structures of (totally nonnegative) matroid Schubert varieties",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument(
        "variant",
        nargs="?",
        default="",
        help="tnn or real (for the cells/homology commands)",
    )
    parser.add_argument("input", help="matrix file")
    parser.add_argument(
        "--mode",
        choices=("equations", "span"),
        default="equations",
        help="rows are equations cutting out V (default) or vectors spanning it",
    )
    parser.add_argument(
        "--format",
        dest="output",
        choices=("human", "structured", "dot"),
        default="human",
    )
    parser.add_argument(
        "--allow-large",
        action="store_true",
        help="override the ground-set size guardrail",
    )
    parser.add_argument(
        "--zero-first",
        action="store_true",
        help="shelling: require the zero-locus facets to come first",
    )
    return parser


def parse_args(argv) -> RunConfig | None:
    parser = build_parser()
    ns = parser.parse_args(argv)
    variant = ns.variant
    if ns.command in ("cells", "homology"):
        if variant not in ("tnn", "real"):
            parser.error(f"{ns.command} requires a variant: tnn or real")
    elif variant:
        parser.error(f"unexpected argument {variant!r} for {ns.command}")
    return RunConfig(
        input_path=ns.input,
        command=ns.command,
        variant=variant,
        mode=ns.mode,
        output=ns.output,
        allow_large=ns.allow_large,
        zero_locus_first=ns.zero_first,
    )


def main(argv=None) -> int:
    config = parse_args(sys.argv[1:] if argv is None else argv)
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
