"""Parameter engine, decoding schedules, the re-encoding transform, and
the decoding loops: multi-trial refinement and the single-shot
Lee-O'Sullivan baseline.

A triple (s, l, tau) is permissible when the margin
(l+1)s(n-tau) - C(l+1,2)(k-1) - C(s+1,2)n is positive; then an
interpolation polynomial for multiplicity s, list size l and radius tau
exists.  The multi-trial decoder walks a schedule of refinement steps
from (1, 1) to the target (s, l), attempting root-finding at chosen
points with the current intermediate radius; the first non-empty
candidate list wins.  The Lee-O'Sullivan baseline builds the full basis
at the target parameters directly and decodes once.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from math import comb

from .field import OpCounter, count_ops
from .gs_core import (
    InterpolationContext,
    InterpolationState,
    basis_state,
    minimal_interpolation_poly,
    refine_list_size,
    refine_multiplicity,
)
from .field import PrimeField
from .poly import Polynomial, lagrange_interpolate
from .root_finding import RootCandidate, filter_by_distance, roth_ruckenstein


@dataclass(frozen=True)
class GRSCode:
    """A generalised Reed-Solomon code: length-n evaluations of degree-<k
    messages at distinct nonzero points, scaled by nonzero column
    multipliers."""

    q: int
    n: int
    k: int
    alphas: tuple[int, ...]
    ws: tuple[int, ...]

    def __post_init__(self):
        field = PrimeField(self.q)
        object.__setattr__(self, "alphas", tuple(int(a) % self.q for a in self.alphas))
        object.__setattr__(self, "ws", tuple(int(w) % self.q for w in self.ws))
        if not self.n < self.q:
            raise ValueError("need n < q")
        if not 1 <= self.k <= self.n:
            raise ValueError("need 1 <= k <= n")
        if len(self.alphas) != self.n or len(self.ws) != self.n:
            raise ValueError("need n evaluation points and n column multipliers")
        if len(set(self.alphas)) != self.n:
            raise ValueError("evaluation points must be distinct")
        if any(a == 0 for a in self.alphas):
            raise ValueError("evaluation points must be nonzero")
        if any(w == 0 for w in self.ws):
            raise ValueError("column multipliers must be nonzero")
        object.__setattr__(self, "_field", field)

    @classmethod
    def consecutive(cls, q: int, n: int, k: int) -> GRSCode:
        """Evaluation points 1..n, all-one column multipliers."""
        return cls(q, n, k, tuple(range(1, n + 1)), (1,) * n)

    @property
    def field(self) -> PrimeField:
        return self._field

    @property
    def d(self) -> int:
        """Minimum distance n - k + 1 (GRS codes are MDS)."""
        return self.n - self.k + 1

    def encode(self, f: Polynomial) -> tuple[int, ...]:
        """(w_0 f(alpha_0), ..., w_{n-1} f(alpha_{n-1}))."""
        if f.field != self.field:
            raise ValueError("mixed fields")
        if not f.degree < self.k:
            raise ValueError("message degree must be below k")
        field = self.field
        return tuple(field.mul(w, f.eval(a)) for a, w in zip(self.alphas, self.ws))


def encode(code: GRSCode, f: Polynomial) -> tuple[int, ...]:
    return code.encode(f)


# parameter engine


def permissibility_margin(code: GRSCode, s: int, l: int, tau: int) -> int:
    """Coefficient surplus of the interpolation system; positive means a
    suitable polynomial exists for (s, l, tau)."""
    return (
        (l + 1) * s * (code.n - tau)
        - comb(l + 1, 2) * (code.k - 1)
        - comb(s + 1, 2) * code.n
    )


def is_permissible(code: GRSCode, s: int, l: int, tau: int) -> bool:
    return s >= 1 and l >= 1 and tau >= 0 and permissibility_margin(code, s, l, tau) > 0


def decoding_radius(code: GRSCode, s: int, l: int) -> int:
    """Largest tau for which (s, l, tau) is permissible; -1 if none."""
    if not 1 <= s <= l:
        raise ValueError("need 1 <= s <= l")
    best = -1
    for tau in range(code.n + 1):
        if permissibility_margin(code, s, l, tau) > 0:
            best = tau
        else:
            break  # margin is strictly decreasing in tau
    return best


def within_johnson_bound(code: GRSCode, tau: int) -> bool:
    """tau < n - sqrt(n(k-1)), checked with exact integer arithmetic."""
    if tau < 0:
        return False
    rem = code.n - tau
    return rem > 0 and rem * rem > code.n * (code.k - 1)


def minimal_parameters(code: GRSCode, target_tau: int) -> tuple[int, int] | None:
    """Lexicographically minimal (l, s) reaching decoding radius >= target."""
    if not within_johnson_bound(code, target_tau):
        return None
    l_cap = 4 * code.n * code.n  # parameters stay in O(n^2) below the Johnson radius
    for l in range(1, l_cap + 1):
        for s in range(1, l + 1):
            if decoding_radius(code, s, l) >= target_tau:
                return s, l
    return None


# schedules


class Step(Enum):
    S1 = "S1"
    S2 = "S2"
    ROOT = "Root"


class RootPolicy(Enum):
    EVERY_INCREASE = "every-increase"
    FINAL_ONLY = "final-only"


@dataclass(frozen=True)
class DecodingSchedule:
    """An ordered list of refinement and root-finding steps leading from
    (1, 1) to (target_s, target_l)."""

    steps: tuple[Step, ...]
    target_s: int
    target_l: int

    def __post_init__(self):
        if not 1 <= self.target_s <= self.target_l:
            raise ValueError("need 1 <= target_s <= target_l")
        n1 = sum(1 for s in self.steps if s is Step.S1)
        n2 = sum(1 for s in self.steps if s is Step.S2)
        if n1 != self.target_l - self.target_s:
            raise ValueError("schedule needs exactly target_l - target_s S1 steps")
        if n2 != self.target_s - 1:
            raise ValueError("schedule needs exactly target_s - 1 S2 steps")
        for a, b in zip(self.steps, self.steps[1:]):
            if a is Step.ROOT and b is Step.ROOT:
                raise ValueError("adjacent Root steps are redundant")


def build_schedule(
    code: GRSCode, target_tau: int, policy: RootPolicy = RootPolicy.EVERY_INCREASE
) -> DecodingSchedule:
    """Greedy step sequence towards the minimal (s, l) for target_tau.

    At each state the refinement (respecting remaining step budgets)
    with the larger next intermediate radius is taken; on ties the
    multiplicity step is preferred while its budget lasts, since it is
    cheapest while l is still small.  Under EVERY_INCREASE a Root is
    placed at (1, 1) and after every strict radius increase; FINAL_ONLY
    emits a single Root at the end.
    """
    params = minimal_parameters(code, target_tau)
    if params is None:
        raise ValueError(f"target radius {target_tau} exceeds Johnson bound")
    target_s, target_l = params
    s, l = 1, 1
    tau_now = decoding_radius(code, 1, 1)
    radii_seen = {tau_now}
    steps: list[Step] = []
    if policy is RootPolicy.EVERY_INCREASE:
        steps.append(Step.ROOT)
    while (s, l) != (target_s, target_l):
        options = []
        if (target_l - target_s) - (l - s) > 0:
            options.append((decoding_radius(code, s, l + 1), 0, Step.S1, s, l + 1))
        if target_s - s > 0:
            options.append((decoding_radius(code, s + 1, l + 1), 1, Step.S2, s + 1, l + 1))
        tau_next, _, step, s, l = max(options, key=lambda t: (t[0], t[1]))
        if tau_next < tau_now:
            raise RuntimeError(
                f"greedy path lets the intermediate radius drop at ({s},{l})"
            )
        steps.append(step)
        if policy is RootPolicy.EVERY_INCREASE and tau_next > tau_now:
            steps.append(Step.ROOT)
        tau_now = tau_next
        radii_seen.add(tau_now)
    if not steps or steps[-1] is not Step.ROOT:
        steps.append(Step.ROOT)
    for v in range(min(radii_seen) + 1, tau_now):
        if v not in radii_seen and minimal_parameters(code, v) is not None:
            raise RuntimeError(f"greedy path skipped achievable radius {v}")
    return DecodingSchedule(tuple(steps), target_s, target_l)


# re-encoding transform


def re_encode(code: GRSCode, r) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Subtract the codeword agreeing with r on the first k positions.

    Returns (transformed received word, subtracted codeword).  The
    transformed word is zero on the first k positions, which makes
    L(X) = prod_{i<k}(X - alpha_i) divide the interpolation polynomial R.
    """
    if len(r) != code.n:
        raise ValueError("received word has wrong length")
    field = code.field
    firstk = [field.div(int(ri), wi) for ri, wi in zip(r[: code.k], code.ws[: code.k])]
    h = lagrange_interpolate(field, code.alphas[: code.k], firstk)
    c_hat = code.encode(h)
    transformed = tuple(field.sub(int(a), b) for a, b in zip(r, c_hat))
    assert all(v == 0 for v in transformed[: code.k])
    return transformed, c_hat


# decode results and reports


@dataclass
class TrialReport:
    """One schedule step's record; serializable as a JSON line."""

    step: str
    s_hat: int
    l_hat: int
    tau_hat: int
    od: int | None
    reductions: int | None
    mul_count: int
    add_count: int
    inv_count: int
    outcome: str
    profile: str | None = None

    def to_json(self) -> str:
        return json.dumps(
            {
                "step": self.step,
                "s_hat": self.s_hat,
                "l_hat": self.l_hat,
                "tau_hat": self.tau_hat,
                "od": self.od,
                "reductions": self.reductions,
                "mul_count": self.mul_count,
                "add_count": self.add_count,
                "inv_count": self.inv_count,
                "outcome": self.outcome,
            }
        )


@dataclass
class DecodeResult:
    candidates: list[RootCandidate]
    stopped_at: tuple[int, int, int]
    trial_reports: list[TrialReport]
    ops: OpCounter


# decoding loops


def _unit_received(code: GRSCode, r) -> tuple[int, ...]:
    field = code.field
    return tuple(field.div(int(ri), wi) for ri, wi in zip(r, code.ws))


def _coeff_key(f: Polynomial, k: int) -> tuple[int, ...]:
    return tuple(f.coefficient(i) for i in range(k))


def _translate_back(code: GRSCode, candidates, c_hat):
    """Shift candidates for the transformed word back by the subtracted
    codeword; distances are invariant under the common shift."""
    field = code.field
    out = []
    for cand in candidates:
        cw = tuple(field.add(a, b) for a, b in zip(cand.codeword, c_hat))
        firstk = [field.div(c, w) for c, w in zip(cw[: code.k], code.ws[: code.k])]
        f = lagrange_interpolate(field, code.alphas[: code.k], firstk)
        out.append(RootCandidate(f, cw, cand.distance))
    out.sort(key=lambda c: (c.distance, _coeff_key(c.f, code.k)))
    return out


def _degenerate_result(code, ctx, work_r, c_hat, ops) -> DecodeResult:
    """The received word is a codeword: return it without interpolation."""
    f0 = ctx.R if not ctx.R.is_zero else Polynomial.zero(code.field)
    cw = code.encode(f0)
    dist = sum(1 for a, b in zip(cw, work_r) if a != b)
    candidates = [RootCandidate(f0, cw, dist)]
    if c_hat is not None:
        candidates = _translate_back(code, candidates, c_hat)
    tau0 = decoding_radius(code, 1, 1)
    snap = ops.snapshot()
    report = TrialReport(
        "Init", 1, 1, tau0, None, None,
        snap.mul_count, snap.add_count, snap.inv_count, "codeword",
    )
    return DecodeResult(candidates, (1, 1, tau0), [report], snap)


def _step_report(kind, state: InterpolationState, tau_hat, ops, outcome, profile=None):
    snap = ops.snapshot()
    return TrialReport(
        kind, state.s_hat, state.l_hat, tau_hat,
        state.od, state.reductions,
        snap.mul_count, snap.add_count, snap.inv_count, outcome, profile,
    )


def multi_trial_decode(
    code: GRSCode,
    r,
    schedule: DecodingSchedule,
    use_reencoding: bool = False,
    collect_profiles: bool = False,
) -> DecodeResult:
    """Run the schedule, breaking at the first Root step that finds
    codewords within the intermediate radius."""
    if len(r) != code.n:
        raise ValueError("received word has wrong length")
    reports: list[TrialReport] = []
    with count_ops() as ops:
        if use_reencoding:
            work_r, c_hat = re_encode(code, r)
        else:
            work_r, c_hat = tuple(int(x) % code.q for x in r), None
        r_prime = _unit_received(code, work_r)
        ctx = InterpolationContext.from_received(code, r_prime, re_encoded=use_reencoding)
        if ctx.degenerate:
            return _degenerate_result(code, ctx, work_r, c_hat, ops)
        state = basis_state(ctx, 1, 1, keep_profiles=collect_profiles)
        tau_hat = decoding_radius(code, 1, 1)
        reports.append(_step_report("Init", state, tau_hat, ops, "ok", state.profile_before))
        for step in schedule.steps:
            if step is Step.S1:
                state = refine_list_size(state, keep_profiles=collect_profiles)
                tau_hat = decoding_radius(code, state.s_hat, state.l_hat)
                reports.append(
                    _step_report("S1", state, tau_hat, ops, "ok", state.profile_before)
                )
            elif step is Step.S2:
                state = refine_multiplicity(state, keep_profiles=collect_profiles)
                tau_hat = decoding_radius(code, state.s_hat, state.l_hat)
                reports.append(
                    _step_report("S2", state, tau_hat, ops, "ok", state.profile_before)
                )
            else:
                tau_hat = decoding_radius(code, state.s_hat, state.l_hat)
                Q = minimal_interpolation_poly(state)
                candidates = filter_by_distance(
                    roth_ruckenstein(Q, code.k), code, work_r, tau_hat
                )
                outcome = "found" if candidates else "empty"
                reports.append(_step_report("Root", state, tau_hat, ops, outcome))
                if candidates:
                    if c_hat is not None:
                        candidates = _translate_back(code, candidates, c_hat)
                    return DecodeResult(
                        candidates, (state.s_hat, state.l_hat, tau_hat), reports, ops.snapshot()
                    )
        if (state.s_hat, state.l_hat) != (schedule.target_s, schedule.target_l):
            raise ValueError("schedule did not end at its target parameters")
        return DecodeResult(
            [], (state.s_hat, state.l_hat, tau_hat), reports, ops.snapshot()
        )


def lee_osullivan_decode(
    code: GRSCode,
    r,
    s: int,
    l: int,
    use_reencoding: bool = False,
    collect_profiles: bool = False,
) -> DecodeResult:
    """Single-shot decoding: build the full basis at (s, l) directly,
    minimise once, and root-find at tau(s, l)."""
    if not 1 <= s <= l:
        raise ValueError("need 1 <= s <= l")
    tau = decoding_radius(code, s, l)
    if tau < 0:
        raise ValueError(f"parameters ({s},{l}) admit no positive-margin radius")
    if len(r) != code.n:
        raise ValueError("received word has wrong length")
    reports: list[TrialReport] = []
    with count_ops() as ops:
        if use_reencoding:
            work_r, c_hat = re_encode(code, r)
        else:
            work_r, c_hat = tuple(int(x) % code.q for x in r), None
        r_prime = _unit_received(code, work_r)
        ctx = InterpolationContext.from_received(code, r_prime, re_encoded=use_reencoding)
        if ctx.degenerate:
            return _degenerate_result(code, ctx, work_r, c_hat, ops)
        state = basis_state(ctx, s, l, keep_profiles=collect_profiles)
        reports.append(_step_report("Init", state, tau, ops, "ok", state.profile_before))
        Q = minimal_interpolation_poly(state)
        candidates = filter_by_distance(roth_ruckenstein(Q, code.k), code, work_r, tau)
        outcome = "found" if candidates else "empty"
        reports.append(_step_report("Root", state, tau, ops, outcome))
        if candidates and c_hat is not None:
            candidates = _translate_back(code, candidates, c_hat)
        return DecodeResult(candidates, (s, l, tau), reports, ops.snapshot())
