"""Exact rational linear algebra over Q^E and a sign-feasibility oracle.

Subspaces are stored by their reduced row-echelon basis, which is unique, so
structural equality of `Subspace` values is equality of subspaces.  The
feasibility oracle decides, for a full sign pattern, whether some vector of
the subspace realizes it exactly; infeasibility comes with a Farkas-style
certificate: a linear functional vanishing on the subspace whose coefficients
are >= 0 on the demanded-positive coordinates, <= 0 on the demanded-negative
ones, and not all zero there.

All arithmetic is `fractions.Fraction`; there is no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .sign_vectors import SignVector, sign_of

# Covector enumeration downstream is exponential in the ground set; refuse
# big inputs unless explicitly overridden.
GROUND_SET_LIMIT = 14

Vector = tuple[Fraction, ...]


class GroundSetSizeError(ValueError):
    """Ground set exceeds GROUND_SET_LIMIT and no override was given."""

    def __init__(self, n: int):
        super().__init__(
            f"ground set of size {n} exceeds the limit {GROUND_SET_LIMIT}; "
            "pass allow_large=True (CLI: --allow-large) to override"
        )
        self.n = n


def check_ground_size(n: int, allow_large: bool = False) -> None:
    if n > GROUND_SET_LIMIT and not allow_large:
        raise GroundSetSizeError(n)


def _to_rows(matrix) -> list[list[Fraction]]:
    rows = [[Fraction(x) for x in row] for row in matrix]
    if rows:
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged matrix: rows have differing lengths")
    return rows


def rref(matrix) -> list[tuple[Fraction, ...]]:
    """Reduced row-echelon form; zero rows dropped, pivots normalized to 1."""
    rows = _to_rows(matrix)
    if not rows:
        return []
    ncols = len(rows[0])
    pivot_row = 0
    for col in range(ncols):
        pr = next((r for r in range(pivot_row, len(rows)) if rows[r][col] != 0), None)
        if pr is None:
            continue
        rows[pivot_row], rows[pr] = rows[pr], rows[pivot_row]
        piv = rows[pivot_row][col]
        rows[pivot_row] = [x / piv for x in rows[pivot_row]]
        for r in range(len(rows)):
            if r != pivot_row and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[pivot_row])]
        pivot_row += 1
        if pivot_row == len(rows):
            break
    return [tuple(r) for r in rows[:pivot_row]]


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of Q^n identified by its unique RREF basis."""

    n: int
    basis: tuple[Vector, ...]

    @classmethod
    def from_spanning(cls, n: int, rows) -> "Subspace":
        reduced = rref(rows)
        if reduced and len(reduced[0]) != n:
            raise ValueError(f"rows have length {len(reduced[0])}, expected {n}")
        return cls(n, tuple(reduced))

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, ())

    @classmethod
    def full(cls, n: int) -> "Subspace":
        rows = tuple(
            tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n)
        )
        return cls(n, rows)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(i for i, x in enumerate(row) if x != 0) for row in self.basis)

    def contains(self, v) -> bool:
        vec = [Fraction(x) for x in v]
        if len(vec) != self.n:
            raise ValueError("vector length mismatch")
        for row, p in zip(self.basis, self.pivots):
            if vec[p] != 0:
                f = vec[p]
                vec = [a - f * b for a, b in zip(vec, row)]
        return all(x == 0 for x in vec)

    def vector_from_coefficients(self, coeffs) -> Vector:
        out = [Fraction(0)] * self.n
        for c, row in zip(coeffs, self.basis):
            if c:
                for i, x in enumerate(row):
                    out[i] += c * x
        return tuple(out)


def kernel_basis(equations, n: int | None = None) -> Subspace:
    """Exact null space of the given equation matrix.

    Every row is one homogeneous equation on Q^n; ``n`` defaults to the row
    length.  Ragged input raises ValueError.
    """
    rows = _to_rows(equations)
    if not rows:
        if n is None:
            raise ValueError("cannot infer ground size from an empty matrix")
        return Subspace.full(n)
    width = len(rows[0])
    if n is None:
        n = width
    elif n != width:
        raise ValueError(f"rows have length {width}, expected {n}")
    reduced = rref(rows)
    pivots = [next(i for i, x in enumerate(row) if x != 0) for row in reduced]
    free = [j for j in range(n) if j not in pivots]
    vectors = []
    for j in free:
        v = [Fraction(0)] * n
        v[j] = Fraction(1)
        for row, p in zip(reduced, pivots):
            v[p] = -row[j]
        vectors.append(v)
    return Subspace.from_spanning(n, vectors)


def reorient_subspace(V: Subspace, coords) -> Subspace:
    """Negate the given coordinates of every vector of V."""
    cs = set(coords)
    rows = [
        tuple(-x if i in cs else x for i, x in enumerate(row)) for row in V.basis
    ]
    return Subspace.from_spanning(V.n, rows)


def project_subspace(V: Subspace, coords) -> Subspace:
    """Image of V under the projection onto ``coords`` (sorted order)."""
    cs = sorted(set(coords))
    if cs and (cs[0] < 0 or cs[-1] >= V.n):
        raise IndexError("projection coordinates out of range")
    rows = [tuple(row[i] for i in cs) for row in V.basis]
    return Subspace.from_spanning(len(cs), rows)


def vanish_solve(V: Subspace, coords) -> Subspace:
    """The subspace of vectors of V vanishing on every coordinate in ``coords``."""
    cs = sorted(set(coords))
    if cs and (cs[0] < 0 or cs[-1] >= V.n):
        raise IndexError("vanishing coordinates out of range")
    if not cs or V.dim == 0:
        return Subspace.from_spanning(V.n, V.basis)
    constraints = [[row[i] for row in V.basis] for i in cs]
    coeff_space = kernel_basis(constraints, V.dim)
    vectors = [V.vector_from_coefficients(c) for c in coeff_space.basis]
    return Subspace.from_spanning(V.n, vectors)


@dataclass(frozen=True)
class FeasibilityResult:
    """Outcome of a sign-feasibility query: witness XOR certificate.

    The witness is a vector of V realizing the pattern exactly, scaled so the
    strict coordinates have absolute value >= 1.  The certificate is a
    primitive integer functional vanishing on V, nonnegative on the
    demanded-positive coordinates, nonpositive on the demanded-negative ones,
    and nonzero somewhere among them.
    """

    witness: Vector | None = None
    certificate: Vector | None = None

    def __post_init__(self):
        if (self.witness is None) == (self.certificate is None):
            raise ValueError("exactly one of witness/certificate must be set")

    @property
    def feasible(self) -> bool:
        return self.witness is not None


def _normalize_integral(values: list[Fraction]) -> Vector:
    denom = 1
    for v in values:
        denom = denom * v.denominator // gcd(denom, v.denominator)
    ints = [int(v * denom) for v in values]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    return tuple(Fraction(x) for x in ints)


class _Tableau:
    """Dense phase-1 simplex tableau with Bland's anti-cycling rule."""

    def __init__(self, rows: list[list[Fraction]], rhs: list[Fraction], n_real: int):
        m = len(rows)
        self.m = m
        self.n_real = n_real
        self.ncols = n_real + m  # artificials appended as an identity block
        self.art0 = n_real
        self.rows = []
        for r, (row, b) in enumerate(zip(rows, rhs)):
            art = [Fraction(1 if k == r else 0) for k in range(m)]
            self.rows.append(row + art + [b])
        self.basis = [self.art0 + r for r in range(m)]
        # phase-1 reduced costs: cost 1 on artificials, so r_j = -sum(col j)
        cost = [Fraction(0)] * (self.ncols + 1)
        for row in self.rows:
            for j in range(self.ncols + 1):
                cost[j] -= row[j]
        for r in range(m):
            cost[self.art0 + r] += 1
        self.cost = cost

    def _pivot(self, pr: int, pc: int) -> None:
        piv = self.rows[pr][pc]
        self.rows[pr] = [x / piv for x in self.rows[pr]]
        prow = self.rows[pr]
        for r in range(self.m):
            if r != pr and self.rows[r][pc] != 0:
                f = self.rows[r][pc]
                self.rows[r] = [a - f * b for a, b in zip(self.rows[r], prow)]
        if self.cost[pc] != 0:
            f = self.cost[pc]
            self.cost = [a - f * b for a, b in zip(self.cost, prow)]
        self.basis[pr] = pc

    def solve(self) -> Fraction:
        """Run to optimality; returns the phase-1 objective value."""
        while True:
            enter = next(
                (j for j in range(self.n_real) if self.cost[j] < 0), None
            )
            if enter is None:
                return -self.cost[-1]
            leave = None
            best = None
            for r in range(self.m):
                a = self.rows[r][enter]
                if a > 0:
                    ratio = self.rows[r][-1] / a
                    if (
                        best is None
                        or ratio < best
                        or (ratio == best and self.basis[r] < self.basis[leave])
                    ):
                        best = ratio
                        leave = r
            if leave is None:  # phase-1 objective is bounded; unreachable
                raise RuntimeError("unbounded phase-1 problem")
            self._pivot(leave, enter)

    def solution(self) -> list[Fraction]:
        x = [Fraction(0)] * self.ncols
        for r, j in enumerate(self.basis):
            x[j] = self.rows[r][-1]
        return x

    def multipliers(self) -> list[Fraction]:
        # artificial column r has cost 1, so y_r = 1 - reduced cost there
        return [1 - self.cost[self.art0 + r] for r in range(self.m)]


def sign_feasible(V: Subspace, pattern: SignVector) -> FeasibilityResult:
    """Decide whether some v in V has sign vector exactly ``pattern``.

    Strict constraints are homogenized: since V is a cone, v_i > 0 somewhere
    on V iff v_i >= 1 somewhere, so the query becomes an exact rational LP
    solved by phase-1 simplex with Bland's rule (deterministic output).
    """
    if pattern.n != V.n:
        raise ValueError("pattern length does not match the ground set")
    n, d = V.n, V.dim
    if pattern.is_zero():
        return FeasibilityResult(witness=tuple(Fraction(0) for _ in range(n)))
    if d == 0:
        # only the zero vector: a nonzero pattern is refuted by the indicator
        cert = [Fraction(0)] * n
        for i in range(n):
            cert[i] = Fraction(pattern.sign(i))
        return FeasibilityResult(certificate=tuple(cert))

    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    slack_rows = [i for i in range(n) if pattern.sign(i) != 0]
    n_real = 2 * d + len(slack_rows)
    slack_index = {i: 2 * d + k for k, i in enumerate(slack_rows)}
    for i in range(n):
        s = pattern.sign(i)
        col = [row[i] if s >= 0 else -row[i] for row in V.basis]
        line = col + [-c for c in col] + [Fraction(0)] * len(slack_rows)
        if s == 0:
            rhs.append(Fraction(0))
        else:
            line[slack_index[i]] = Fraction(-1)
            rhs.append(Fraction(1))
        rows.append(line)

    tab = _Tableau(rows, rhs, n_real)
    objective = tab.solve()
    if objective == 0:
        x = tab.solution()
        coeffs = [x[j] - x[d + j] for j in range(d)]
        witness = V.vector_from_coefficients(coeffs)
        assert sign_of(witness) == pattern
        return FeasibilityResult(witness=witness)

    y = tab.multipliers()
    alpha = [y[i] if pattern.sign(i) >= 0 else -y[i] for i in range(n)]
    cert = _normalize_integral(alpha)
    for row in V.basis:  # the functional must vanish on V
        assert sum(a * b for a, b in zip(cert, row)) == 0
    return FeasibilityResult(certificate=cert)


def parse_matrix_text(text: str) -> list[list[Fraction]]:
    """Parse the matrix file format: one row per line, entries like 3 or -1/2.

    Blank lines and '#' comments are ignored.  Raises ValueError with the
    offending line number on malformed input.
    """
    rows: list[list[Fraction]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        row = []
        for token in line.split():
            try:
                row.append(Fraction(token))
            except (ValueError, ZeroDivisionError) as exc:
                raise ValueError(f"line {lineno}: bad rational {token!r}") from exc
        rows.append(row)
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("rows have differing lengths")
    return rows
