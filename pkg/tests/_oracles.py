"""Independent oracles and shared instances for the test suite.

Everything here deliberately avoids the library's fast paths: covectors by
exhaustive pattern sweeps and coefficient grids, Betti numbers by dense
Fraction elimination over brute-force chain enumeration.  The instance list
is the fixed menagerie every property/acceptance sweep runs over.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from matroid_schubert import (
    GradedPoset,
    SignVector,
    Subspace,
    kernel_basis,
    sign_feasible,
)
from matroid_schubert.sign_vectors import sign_of

RANDOM_SEED = 20260810
RANDOM_SHAPES = ((3, 1), (4, 1), (4, 2), (5, 2), (6, 3))
GRID_RADIUS = 6  # realizes every covector on all suite instances (checked)


def fs(*xs) -> frozenset[int]:
    return frozenset(xs)


def r5_subspace() -> Subspace:
    return kernel_basis([[1, 1, -1, 0, 0], [0, 0, 1, -1, -1]])


def counterexample_subspace() -> Subspace:
    return kernel_basis([[1, -1, -1, -1]])


def k3_subspace() -> Subspace:
    return kernel_basis([[1, 1, -1]])


def random_subspaces() -> list[Subspace]:
    rng = random.Random(RANDOM_SEED)
    out = []
    for n, n_rows in RANDOM_SHAPES:
        while True:
            rows = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(n_rows)]
            V = kernel_basis(rows)
            if 0 < V.dim < n:
                out.append(V)
                break
    return out


def named_instances() -> list[tuple[str, Subspace]]:
    base = [
        ("r5", r5_subspace()),
        ("counterexample", counterexample_subspace()),
        ("k3", k3_subspace()),
        ("full1", Subspace.full(1)),
        ("full2", Subspace.full(2)),
        ("line2", kernel_basis([[1, 1]])),  # no strictly positive vector
        ("zero2", Subspace.zero(2)),
    ]
    base.extend(
        (f"random{k}", V) for k, V in enumerate(random_subspaces())
    )
    return base


def lp_covectors(V: Subspace) -> set[SignVector]:
    """All sign patterns the feasibility oracle can realize in V."""
    out = set()
    for signs in itertools.product((-1, 0, 1), repeat=V.n):
        p = SignVector.from_signs(signs)
        if sign_feasible(V, p).feasible:
            out.add(p)
    return out


def grid_covectors(V: Subspace, radius: int = GRID_RADIUS) -> set[SignVector]:
    """Signs of integer-coefficient combinations of the basis, |c_i| <= radius."""
    out = set()
    for c in itertools.product(range(-radius, radius + 1), repeat=V.dim):
        out.add(sign_of(V.vector_from_coefficients([Fraction(x) for x in c])))
    return out


def dense_rank(columns: list[dict[int, int]], nrows: int) -> int:
    """Gaussian elimination rank over Q, dense Fractions."""
    rows = [[Fraction(0)] * len(columns) for _ in range(nrows)]
    for j, col in enumerate(columns):
        for i, v in col.items():
            rows[i][j] = Fraction(v)
    rank = 0
    for col in range(len(columns)):
        piv = next((r for r in range(rank, nrows) if rows[r][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pv = rows[rank][col]
        rows[rank] = [x / pv for x in rows[rank]]
        for r in range(nrows):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def brute_force_poset_betti(P: GradedPoset) -> tuple[int, ...]:
    """Betti numbers of the order complex, computed the slow way.

    Chains are enumerated by extending every comparable pair (no maximal-chain
    shortcut); boundary ranks come from dense Fraction elimination.
    """
    n = len(P.elements)
    chains: list[list[tuple[int, ...]]] = [[(i,) for i in range(n)]]
    while True:
        nxt = []
        for chain in chains[-1]:
            last = chain[-1]
            for j in range(n):
                if j != last and P.down[j] >> last & 1:
                    nxt.append(chain + (j,))
        if not nxt:
            break
        chains.append(sorted(nxt))
    ranks = [0] * (len(chains) + 1)
    for k in range(1, len(chains)):
        idx = {s: i for i, s in enumerate(chains[k - 1])}
        cols = []
        for s in chains[k]:
            col = {}
            for drop in range(len(s)):
                face = s[:drop] + s[drop + 1 :]
                col[idx[face]] = 1 if drop % 2 == 0 else -1
            cols.append(col)
        ranks[k] = dense_rank(cols, len(chains[k - 1]))
    return tuple(
        len(chains[k]) - ranks[k] - ranks[k + 1] for k in range(len(chains))
    )
