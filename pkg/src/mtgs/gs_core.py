"""Interpolation-module construction and refinement for Guruswami-Sudan
list decoding.

The space of bivariate polynomials passing through the n interpolation
points (alpha_i, r'_i) with multiplicity s and Y-degree at most l is an
F_q[X]-module.  A basis is kept as a square polynomial matrix whose row
t holds the F_q[X]-coefficients of Y^0..Y^l; column t is scaled by
X^(weight_t) so that weak Popov form of the scaled matrix exposes a row
of minimal (1, k-1)-weighted degree.

Two refinements grow a reduced basis without rebuilding from scratch:

* list-size step (s, l) -> (s, l+1): border the basis with the one new
  generator Y^(l-s+1)*(Y-R)^s and re-minimise;
* multiplicity step (s, l) -> (s+1, l+1): new basis G^(s+1) plus every
  old basis row multiplied by (Y-R), then re-minimise.

Both leave the scaled matrix with a small closed-form orthogonality
defect, so re-minimisation is cheap compared to a fresh build.

In re-encoded mode the received word has zeros on the first k
positions, L = prod_{i<k}(X - alpha_i) divides both G and R, and the
whole construction runs on Gbar = G/L, Rbar = R/L with the inverted
column weights (l-t).  Minimal rows are mapped back into the plain
module (multiply the Y^t coefficient by L^(s-t) for t <= s, exactly
divide by L^(t-s) above) so root-finding never sees the transform.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import TYPE_CHECKING

from .poly import BOTTOM, Polynomial, lagrange_interpolate, roots_product
from .polymat import PolyMatrix, minimal_row, reduce_to_weak_popov

if TYPE_CHECKING:  # pragma: no cover
    from .decoder import GRSCode


def column_weights(l: int, k: int) -> tuple[int, ...]:
    """Column weights (t*(k-1)) turning row degree into (1,k-1)-weighted degree."""
    if l < 1 or k < 1:
        raise ValueError("need l >= 1 and k >= 1")
    return tuple(t * (k - 1) for t in range(l + 1))


def reencoded_column_weights(l: int) -> tuple[int, ...]:
    """Column weights (l-t) for the re-encoded module; minimal rows are
    minimal (1,-1)-weighted elements (the uniform offset l cancels in argmin)."""
    if l < 1:
        raise ValueError("need l >= 1")
    return tuple(l - t for t in range(l + 1))


@dataclass
class InterpolationContext:
    """Received-word-dependent polynomials shared by all constructions."""

    code: "GRSCode"
    G: Polynomial
    R: Polynomial
    re_encoded: bool = False
    L: Polynomial | None = None
    G_bar: Polynomial | None = None
    R_bar: Polynomial | None = None

    @classmethod
    def from_received(cls, code, r_prime, re_encoded: bool = False) -> InterpolationContext:
        field = code.field
        G = roots_product(field, code.alphas)
        R = lagrange_interpolate(field, code.alphas, r_prime)
        if not re_encoded:
            return cls(code, G, R)
        if any(int(r_prime[i]) % field.p != 0 for i in range(code.k)):
            raise ValueError("re-encoded context needs zeros on the first k positions")
        L = roots_product(field, code.alphas[: code.k])
        G_bar = G.exact_div(L)
        R_bar = Polynomial.zero(field) if R.is_zero else R.exact_div(L)
        return cls(code, G, R, True, L, G_bar, R_bar)

    @property
    def degenerate(self) -> bool:
        """The received word is itself a codeword: R already has degree < k."""
        return self.R.degree < self.code.k

    @property
    def working_G(self) -> Polynomial:
        return self.G_bar if self.re_encoded else self.G

    @property
    def working_R(self) -> Polynomial:
        return self.R_bar if self.re_encoded else self.R

    def od_unit(self) -> int:
        """Orthogonality-defect contribution per multiplicity unit.

        Equals deg R - (k-1) in plain mode and deg Rbar + 1 re-encoded;
        the two agree, which is why the defects (and hence reduction
        work bounds) are unchanged by re-encoding.
        """
        if self.degenerate:
            raise ValueError("degenerate context: received word is a codeword")
        if self.re_encoded:
            return self.R_bar.degree + 1
        return self.R.degree - (self.code.k - 1)

    def weights(self, l: int) -> tuple[int, ...]:
        if self.re_encoded:
            return reencoded_column_weights(l)
        return column_weights(l, self.code.k)


def basis_od(ctx: InterpolationContext, s: int, l: int) -> int:
    """Closed-form orthogonality defect of the scaled fresh basis:
    (2l-s+1)*s*(deg R-k+1)/2."""
    return (2 * l - s + 1) * s * ctx.od_unit() // 2


def step1_od(ctx: InterpolationContext, s: int) -> int:
    """Closed-form defect after a list-size step: s*(deg R-k+1)."""
    return s * ctx.od_unit()


def step2_od(ctx: InterpolationContext, l: int) -> int:
    """Closed-form defect after a multiplicity step: (l+1)*(deg R-k+1)."""
    return (l + 1) * ctx.od_unit()


def _y_minus_r_power(ctx: InterpolationContext, s: int) -> list[Polynomial]:
    """Coefficients of (Y - R)^s as polynomials in X, index = Y power."""
    field = ctx.code.field
    R = ctx.working_R
    neg_pows = [Polynomial.one(field)]
    negR = -R
    for _ in range(s):
        neg_pows.append(neg_pows[-1] * negR)
    out = []
    for i in range(s + 1):
        if i == s:
            out.append(Polynomial.one(field))
            continue
        c = comb(s, i) % field.p
        out.append(neg_pows[s - i] if c == 1 else neg_pows[s - i].scalar_mul(c))
    return out


def module_basis(ctx: InterpolationContext, s: int, l: int) -> PolyMatrix:
    """The (l+1)x(l+1) lower-triangular basis matrix of the interpolation
    module: row t < s holds G^(s-t)*(Y-R)^t, row t >= s holds
    Y^(t-s)*(Y-R)^s (with the re-encoded variant using Gbar, Rbar and an
    extra L^(t-s) factor on the lower rows)."""
    if not 1 <= s <= l:
        raise ValueError(f"need 1 <= s <= l, got s={s}, l={l}")
    field = ctx.code.field
    zero = Polynomial.zero(field)
    G = ctx.working_G
    G_pows = [Polynomial.one(field)]
    for _ in range(s):
        G_pows.append(G_pows[-1] * G)
    rows = []
    for t in range(s):
        expansion = _y_minus_r_power(ctx, t) if t > 0 else [Polynomial.one(field)]
        row = [zero] * (l + 1)
        for j in range(t + 1):
            term = expansion[j]
            row[j] = G_pows[s - t] if (j == t) else G_pows[s - t] * term
        rows.append(row)
    base = _y_minus_r_power(ctx, s)
    L_pows = None
    if ctx.re_encoded:
        L_pows = [Polynomial.one(field)]
        for _ in range(l - s):
            L_pows.append(L_pows[-1] * ctx.L)
    for t in range(s, l + 1):
        row = [zero] * (l + 1)
        for i in range(s + 1):
            entry = base[i]
            if ctx.re_encoded and t > s:
                entry = L_pows[t - s] if i == s else L_pows[t - s] * base[i]
            row[t - s + i] = entry
        rows.append(row)
    return PolyMatrix(rows)


@dataclass
class InterpolationState:
    """A reduced weighted basis at intermediate parameters (s_hat, l_hat).

    ``BW`` is the column-scaled basis in weak Popov form; ``od`` and
    ``reductions`` describe the minimisation that produced it.
    """

    s_hat: int
    l_hat: int
    BW: PolyMatrix
    ctx: InterpolationContext
    od: int
    reductions: int
    profile_before: str | None = None

    def unweighted(self) -> PolyMatrix:
        return self.BW.unscale_columns(self.ctx.weights(self.l_hat))

    def validate(self) -> None:
        from .polymat import is_weak_popov

        assert is_weak_popov(self.BW), "state basis must be in weak Popov form"
        self.unweighted()  # raises if any column weight fails to divide


def _minimise(C: PolyMatrix, weights, od: int, keep_profiles: bool):
    CW = C.scale_columns(weights)
    before = CW.format_profile() if keep_profiles else None
    result = reduce_to_weak_popov(CW, od=od)
    assert result.reduced.degree() == CW.degree() - od, (
        "reduced degree must drop by exactly the closed-form defect"
    )
    return result, before


def basis_state(
    ctx: InterpolationContext, s: int, l: int, keep_profiles: bool = False
) -> InterpolationState:
    """Build the fresh basis at (s, l), scale, and minimise."""
    if ctx.degenerate:
        raise ValueError("degenerate input: received word is a codeword")
    A = module_basis(ctx, s, l)
    od = basis_od(ctx, s, l)
    result, before = _minimise(A, ctx.weights(l), od, keep_profiles)
    return InterpolationState(s, l, result.reduced, ctx, od, result.reductions, before)


def initial_state(ctx: InterpolationContext, keep_profiles: bool = False) -> InterpolationState:
    return basis_state(ctx, 1, 1, keep_profiles=keep_profiles)


def refine_list_size(state: InterpolationState, keep_profiles: bool = False) -> InterpolationState:
    """(s, l) -> (s, l+1): border with the one new generator and re-minimise."""
    ctx = state.ctx
    s, l = state.s_hat, state.l_hat
    field = ctx.code.field
    zero = Polynomial.zero(field)
    B = state.unweighted()
    base = _y_minus_r_power(ctx, s)
    if ctx.re_encoded:
        L_pow = ctx.L ** (l + 1 - s)
        base = [L_pow if i == s else L_pow * base[i] for i in range(s + 1)]
    bottom = [zero] * (l + 2)
    for i in range(s + 1):
        bottom[l + 1 - s + i] = base[i]
    rows = [row + (zero,) for row in B.rows]
    rows.append(tuple(bottom))
    od = step1_od(ctx, s)
    result, before = _minimise(PolyMatrix(rows), ctx.weights(l + 1), od, keep_profiles)
    return InterpolationState(s, l + 1, result.reduced, ctx, od, result.reductions, before)


def refine_multiplicity(state: InterpolationState, keep_profiles: bool = False) -> InterpolationState:
    """(s, l) -> (s+1, l+1): G^(s+1) over the old rows times (Y-R)."""
    ctx = state.ctx
    s, l = state.s_hat, state.l_hat
    field = ctx.code.field
    zero = Polynomial.zero(field)
    B = state.unweighted()
    G = ctx.working_G
    R = ctx.working_R
    rows = [(G ** (s + 1),) + (zero,) * (l + 1)]
    for b in B.rows:
        rb = [R * e for e in b]
        row = [-rb[0]]
        for j in range(1, l + 1):
            row.append(b[j - 1] - rb[j])
        row.append(b[l])
        rows.append(tuple(row))
    od = step2_od(ctx, l)
    result, before = _minimise(PolyMatrix(rows), ctx.weights(l + 1), od, keep_profiles)
    return InterpolationState(s + 1, l + 1, result.reduced, ctx, od, result.reductions, before)


class BivariatePoly:
    """Q(X, Y) kept as a list of F_q[X] coefficients indexed by Y power."""

    __slots__ = ("field", "y_coeffs")

    def __init__(self, y_coeffs):
        y_coeffs = list(y_coeffs)
        while y_coeffs and y_coeffs[-1].is_zero:
            y_coeffs.pop()
        if not y_coeffs:
            raise ValueError("zero bivariate polynomial")
        self.field = y_coeffs[0].field
        self.y_coeffs = tuple(y_coeffs)

    @property
    def y_degree(self) -> int:
        return len(self.y_coeffs) - 1

    def weighted_degree(self, y_weight: int):
        """max over nonzero coefficients of deg c_t + t*y_weight."""
        return max(
            c.degree + t * y_weight
            for t, c in enumerate(self.y_coeffs)
            if not c.is_zero
        )

    def eval_y(self, f: Polynomial) -> Polynomial:
        """Q(X, f(X)) by Horner in Y."""
        acc = self.y_coeffs[-1]
        for t in range(len(self.y_coeffs) - 2, -1, -1):
            acc = acc * f + self.y_coeffs[t]
        return acc

    def __eq__(self, other) -> bool:
        return isinstance(other, BivariatePoly) and self.y_coeffs == other.y_coeffs

    def __hash__(self) -> int:
        return hash(self.y_coeffs)

    def __str__(self) -> str:
        parts = []
        for t in range(self.y_degree, -1, -1):
            c = self.y_coeffs[t]
            if c.is_zero:
                continue
            prefix = f"({c})" if len(c.coeffs) > 1 else str(c)
            if t == 0:
                parts.append(prefix)
            elif t == 1:
                parts.append(f"{prefix}*Y")
            else:
                parts.append(f"{prefix}*Y^{t}")
        return " + ".join(parts)


def minimal_row_poly(state: InterpolationState) -> BivariatePoly:
    """The minimal-degree row with column weights divided out, raw
    (not mapped back through the re-encoding isomorphism)."""
    idx = minimal_row(state.BW)
    w = state.ctx.weights(state.l_hat)
    return BivariatePoly(
        [e.unshifted(wt) for e, wt in zip(state.BW.rows[idx], w)]
    )


def minimal_interpolation_poly(state: InterpolationState) -> BivariatePoly:
    """A minimal (1,k-1)-weighted-degree element of the interpolation
    module at (s_hat, l_hat); in re-encoded mode the extracted row is
    mapped back so the result always lives in the plain module."""
    raw = minimal_row_poly(state)
    ctx = state.ctx
    if not ctx.re_encoded:
        return raw
    s = state.s_hat
    L_pows = [Polynomial.one(ctx.code.field)]
    for _ in range(max(s, state.l_hat - s)):
        L_pows.append(L_pows[-1] * ctx.L)
    coeffs = []
    for t, e in enumerate(raw.y_coeffs):
        if t <= s:
            coeffs.append(e if t == s else e * L_pows[s - t])
        else:
            try:
                coeffs.append(e.exact_div(L_pows[t - s]))
            except ValueError as exc:
                raise AssertionError(
                    "re-encoding map-back must divide exactly"
                ) from exc
    return BivariatePoly(coeffs)
