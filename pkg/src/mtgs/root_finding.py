"""Y-root extraction for interpolation polynomials and distance
filtering of the resulting codeword candidates.

The root finder is the plain recursive Roth-Ruckenstein procedure: at
each level strip the largest common X power, read the candidate next
message coefficients off the roots of Q(0, Y), substitute
Q <- Q(X, X*Y + gamma) and recurse one level deeper, up to depth k.
Every branch that survives to depth k is verified against the original
polynomial before it is emitted, which guards against spurious branches
in degenerate recursions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from .gs_core import BivariatePoly
from .poly import Polynomial, univariate_roots

if TYPE_CHECKING:  # pragma: no cover
    from .decoder import GRSCode


@dataclass
class RootCandidate:
    """A decoded message polynomial with its codeword and distance."""

    f: Polynomial
    codeword: tuple[int, ...]
    distance: int


def _strip_x_power(coeffs: list[Polynomial]) -> list[Polynomial]:
    """Divide out the largest X power dividing every Y coefficient."""
    shifts = []
    for c in coeffs:
        if c.is_zero:
            continue
        shifts.append(next(i for i, v in enumerate(c.coeffs) if v != 0))
    m = min(shifts)
    if m == 0:
        return coeffs
    return [c if c.is_zero else c.unshifted(m) for c in coeffs]


def _mul_xy_plus_gamma(acc: list[Polynomial], gamma: int, field) -> list[Polynomial]:
    zero = Polynomial.zero(field)
    out = [zero] * (len(acc) + 1)
    for j, a in enumerate(acc):
        out[j + 1] = out[j + 1] + a.shifted(1)
        out[j] = out[j] + a.scalar_mul(gamma)
    return out


def _substitute(coeffs: list[Polynomial], gamma: int, field) -> list[Polynomial]:
    """Q(X, X*Y + gamma) by Horner in Y."""
    acc = [coeffs[-1]]
    for c in reversed(coeffs[:-1]):
        acc = _mul_xy_plus_gamma(acc, gamma, field)
        acc[0] = acc[0] + c
    return acc


def _coeff_key(f: Polynomial, k: int) -> tuple[int, ...]:
    return tuple(f.coefficient(i) for i in range(k))


def roth_ruckenstein(Q: BivariatePoly, k: int) -> list[Polynomial]:
    """All f with deg f < k and Q(X, f(X)) = 0, lexicographic order."""
    if all(c.is_zero for c in Q.y_coeffs):
        raise ValueError("zero interpolation polynomial")
    field = Q.field
    found: dict[tuple[int, ...], Polynomial] = {}

    def recurse(coeffs: list[Polynomial], depth: int, prefix: list[int]) -> None:
        if depth == k:
            f = Polynomial(field, prefix)
            if Q.eval_y(f).is_zero:
                found[_coeff_key(f, k)] = f
            return
        coeffs = _strip_x_power(coeffs)
        q0 = Polynomial(field, [c.coefficient(0) for c in coeffs])
        assert not q0.is_zero, "Q(0, Y) cannot vanish after X-power stripping"
        for gamma in univariate_roots(q0):
            recurse(_substitute(coeffs, gamma, field), depth + 1, prefix + [gamma])

    recurse(list(Q.y_coeffs), 0, [])
    roots = [found[key] for key in sorted(found)]
    assert len(roots) <= max(Q.y_degree, 0), "more roots than the Y-degree allows"
    return roots


def filter_by_distance(
    roots: list[Polynomial], code: "GRSCode", received, tau: int
) -> list[RootCandidate]:
    """Keep roots whose codeword is within Hamming distance tau of the
    received word, sorted by distance then coefficient order."""
    if tau < 0:
        raise ValueError("negative decoding radius")
    received = tuple(int(x) for x in received)
    out = []
    for f in roots:
        cw = code.encode(f)
        dist = sum(1 for a, b in zip(cw, received) if a != b)
        if dist <= tau:
            out.append(RootCandidate(f, cw, dist))
    out.sort(key=lambda c: (c.distance, _coeff_key(c.f, code.k)))
    return out
