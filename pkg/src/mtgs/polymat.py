"""Matrices over F_q[X]: leading positions, orthogonality defect, and
row reduction to weak Popov form (Mulders-Storjohann).

A matrix is in weak Popov form when the leading positions of its rows
are pairwise distinct; such a matrix contains a row of minimal degree
in its row space, which is what the decoder ultimately extracts.

The reduction engine uses a deterministic pair-selection rule so that
operation counts are reproducible: scan leading positions in ascending
order; at the first position claimed by two or more rows, reduce the
row of largest degree by the row of smallest degree, breaking degree
ties by reducing the larger row index with the smaller one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import tick
from .poly import BOTTOM, Polynomial, render_degree

Row = tuple  # tuple[Polynomial, ...]


def row_degree(row):
    """Max entry degree; BOTTOM for an all-zero row."""
    return max((e.degree for e in row), default=BOTTOM)


def leading_position(row) -> int:
    """Largest index attaining the row degree; error on a zero row."""
    d = row_degree(row)
    if d == BOTTOM:
        raise ValueError("all-zero row has no leading position")
    return max(i for i, e in enumerate(row) if e.degree == d)


def row_value(row, width: int) -> int:
    """Termination measure: width * deg + leading position."""
    return width * row_degree(row) + leading_position(row)


class PolyMatrix:
    """Immutable rectangular matrix of :class:`Polynomial` entries."""

    __slots__ = ("field", "rows")

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        if not rows or not rows[0]:
            raise ValueError("empty matrix")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged rows")
        field = rows[0][0].field
        if any(e.field != field for r in rows for e in r):
            raise ValueError("mixed fields")
        self.field = field
        self.rows = rows

    @classmethod
    def identity(cls, field, m: int) -> PolyMatrix:
        one = Polynomial.one(field)
        zero = Polynomial.zero(field)
        return cls([[one if i == j else zero for j in range(m)] for i in range(m)])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def row_degrees(self) -> list:
        return [row_degree(r) for r in self.rows]

    def degree(self):
        """deg V: the sum of the row degrees (BOTTOM if any row is zero)."""
        degs = self.row_degrees()
        return BOTTOM if BOTTOM in degs else sum(degs)

    def scale_columns(self, weights) -> PolyMatrix:
        """Multiply column t by X^weights[t] (free of field operations)."""
        return PolyMatrix(
            [[e.shifted(w) for e, w in zip(row, weights)] for row in self.rows]
        )

    def unscale_columns(self, weights) -> PolyMatrix:
        """Exactly divide column t by X^weights[t]."""
        return PolyMatrix(
            [[e.unshifted(w) for e, w in zip(row, weights)] for row in self.rows]
        )

    def __matmul__(self, other: PolyMatrix) -> PolyMatrix:
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch")
        zero = Polynomial.zero(self.field)
        out = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                acc = zero
                for t in range(self.ncols):
                    acc = acc + self.rows[i][t] * other.rows[t][j]
                row.append(acc)
            out.append(row)
        return PolyMatrix(out)

    def determinant(self) -> Polynomial:
        """Fraction-free (Bareiss) elimination over F_q[X]; test-scale only."""
        if not self.is_square:
            raise ValueError("determinant of a non-square matrix")
        m = self.nrows
        M = [list(r) for r in self.rows]
        zero = Polynomial.zero(self.field)
        prev = Polynomial.one(self.field)
        negate = False
        for pk in range(m - 1):
            if M[pk][pk].is_zero:
                pivot = next(
                    (i for i in range(pk + 1, m) if not M[i][pk].is_zero), None
                )
                if pivot is None:
                    return zero
                M[pk], M[pivot] = M[pivot], M[pk]
                negate = not negate
            for i in range(pk + 1, m):
                for j in range(pk + 1, m):
                    M[i][j] = (M[i][j] * M[pk][pk] - M[i][pk] * M[pk][j]).exact_div(prev)
                M[i][pk] = zero
            prev = M[pk][pk]
        det = M[m - 1][m - 1]
        return -det if negate else det

    def degree_profile(self) -> list[list]:
        return [[e.degree for e in row] for row in self.rows]

    def format_profile(self) -> str:
        """Degree grid with "⊥" marking zero entries, aligned columns."""
        cells = [[render_degree(e.degree) for e in row] for row in self.rows]
        width = max(len(c) for row in cells for c in row)
        return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"PolyMatrix({self.nrows}x{self.ncols} over F_{self.field.p})"


def is_weak_popov(V: PolyMatrix) -> bool:
    """True iff all rows are nonzero with pairwise distinct leading positions."""
    seen = set()
    for row in V.rows:
        if row_degree(row) == BOTTOM:
            return False
        lp = leading_position(row)
        if lp in seen:
            return False
        seen.add(lp)
    return True


def orthogonality_defect(V: PolyMatrix) -> int:
    """deg V - deg det V, computed by direct (Bareiss) elimination."""
    if not V.is_square:
        raise ValueError("orthogonality defect of a non-square matrix")
    det = V.determinant()
    if det.is_zero:
        raise ValueError("zero determinant")
    return V.degree() - det.degree


def _reduce_row(field, target, source, delta: int, alpha: int):
    """target - alpha * X^delta * source, entrywise."""
    return tuple(
        t - s.scalar_mul(alpha).shifted(delta) for t, s in zip(target, source)
    )


def row_reduce_step(V: PolyMatrix, i: int, j: int) -> PolyMatrix:
    """Replace row j by row j minus the leading-term-cancelling multiple of row i."""
    if i == j:
        raise ValueError("cannot reduce a row by itself")
    if not (0 <= i < V.nrows and 0 <= j < V.nrows):
        raise ValueError("row index out of range")
    ri, rj = V.rows[i], V.rows[j]
    di, dj = row_degree(ri), row_degree(rj)
    if di == BOTTOM or dj == BOTTOM:
        raise ValueError("cannot reduce with a zero row")
    lp_i, lp_j = leading_position(ri), leading_position(rj)
    if lp_i != lp_j:
        raise ValueError("rows have different leading positions")
    if di > dj:
        raise ValueError("reducing row must not have larger degree")
    delta = dj - di
    alpha = V.field.div(rj[lp_j].leading_coeff, ri[lp_i].leading_coeff)
    new_row = _reduce_row(V.field, rj, ri, delta, alpha)
    rows = list(V.rows)
    rows[j] = new_row
    return PolyMatrix(rows)


@dataclass
class MinimisationResult:
    reduced: PolyMatrix
    reductions: int
    transform: PolyMatrix | None
    engine_used: str = "mulders_storjohann"


def mulders_storjohann(
    V: PolyMatrix, od: int | None = None, track_transform: bool = False
) -> MinimisationResult:
    """Iterate row reductions until weak Popov form is reached.

    ``od``, when supplied by the caller (e.g. from a closed-form
    orthogonality defect), arms the reduction-count bound
    m*(od + (m+1)/2); the count is asserted against it.  The transform
    accumulates the applied elementary operations into a unimodular U
    with U*V = reduced; it costs extra counted multiplications, so
    benchmark runs leave it off.
    """
    if not V.is_square:
        raise ValueError("minimisation needs a square matrix")
    field = V.field
    m = V.nrows
    rows = [tuple(r) for r in V.rows]
    for r in rows:
        if row_degree(r) == BOTTOM:
            raise ValueError("zero row in minimisation input")
    profiles = [(row_degree(r), leading_position(r)) for r in rows]
    transform = [tuple(r) for r in PolyMatrix.identity(field, m).rows] if track_transform else None
    reductions = 0
    while True:
        by_pos: dict[int, list[int]] = {}
        for idx, (_, lp) in enumerate(profiles):
            by_pos.setdefault(lp, []).append(idx)
        pair = None
        for pos in range(m):
            claimers = by_pos.get(pos)
            if claimers and len(claimers) >= 2:
                src = min(claimers, key=lambda t: (profiles[t][0], t))
                dst = max(claimers, key=lambda t: (profiles[t][0], t))
                pair = (src, dst)
                break
        if pair is None:
            break
        i, j = pair
        di, dj = profiles[i][0], profiles[j][0]
        lp = profiles[j][1]
        delta = dj - di
        alpha = field.div(rows[j][lp].leading_coeff, rows[i][lp].leading_coeff)
        old_value = m * dj + lp
        rows[j] = _reduce_row(field, rows[j], rows[i], delta, alpha)
        if row_degree(rows[j]) == BOTTOM:
            raise ValueError("zero row produced during minimisation")
        profiles[j] = (row_degree(rows[j]), leading_position(rows[j]))
        assert m * profiles[j][0] + profiles[j][1] < old_value, "row value must decrease"
        if track_transform:
            transform[j] = _reduce_row(field, transform[j], transform[i], delta, alpha)
        reductions += 1
    if od is not None:
        assert reductions < m * (od + (m + 1) / 2), (
            f"reduction count {reductions} exceeds bound m*(od+(m+1)/2) with od={od}"
        )
    return MinimisationResult(
        PolyMatrix(rows),
        reductions,
        PolyMatrix(transform) if track_transform else None,
    )


ENGINES = ("mulders_storjohann", "alekhnovich")


def reduce_to_weak_popov(
    V: PolyMatrix,
    engine: str = "mulders_storjohann",
    od: int | None = None,
    track_transform: bool = False,
) -> MinimisationResult:
    """Unimodular-equivalent weak Popov form of V.

    The "alekhnovich" engine slot (divide-and-conquer reduction) is
    mapped onto Mulders-Storjohann; the result reports the engine that
    actually ran.
    """
    if engine not in ENGINES:
        raise ValueError(f"unknown engine {engine!r}")
    return mulders_storjohann(V, od=od, track_transform=track_transform)


def minimal_row(V: PolyMatrix) -> int:
    """Index of a minimal-degree row of a weak-Popov-form matrix."""
    if not is_weak_popov(V):
        raise ValueError("matrix is not in weak Popov form")
    degs = V.row_degrees()
    return degs.index(min(degs))


def module_membership(row, V: PolyMatrix) -> bool:
    """Whether the row lies in the F_q[X]-row space of weak-Popov V.

    Repeated cancellation: while the remainder is nonzero, cancel its
    leading term with the unique row of V sharing its leading position,
    provided that row's degree does not exceed the remainder's.
    """
    if not is_weak_popov(V):
        raise ValueError("membership test needs weak Popov form")
    if len(row) != V.ncols:
        raise ValueError("dimension mismatch")
    field = V.field
    by_pos = {leading_position(r): r for r in V.rows}
    q = tuple(row)
    while row_degree(q) != BOTTOM:
        dq = row_degree(q)
        lp = leading_position(q)
        cand = by_pos.get(lp)
        if cand is None or row_degree(cand) > dq:
            return False
        delta = dq - row_degree(cand)
        alpha = field.div(q[lp].leading_coeff, cand[lp].leading_coeff)
        q = _reduce_row(field, q, cand, delta, alpha)
    return True
