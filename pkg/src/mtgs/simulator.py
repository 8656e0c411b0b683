"""Monte-Carlo harness comparing decoder operation counts.

For every error weight in the configured range, a batch of random
(message, codeword, received) instances is generated; each configured
decoder variant runs on the *same* instance so the comparison carries
no cross-decoder sampling noise.  Instance generation is a pure
function of (seed, epsilon, trial_index), so runs are reproducible and
trials can be distributed across processes and merged afterwards.
"""

from __future__ import annotations

import csv
import hashlib
import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .decoder import (
    DecodingSchedule,
    GRSCode,
    RootPolicy,
    build_schedule,
    lee_osullivan_decode,
    minimal_parameters,
    multi_trial_decode,
)
from .poly import Polynomial

CSV_HEADER = (
    "epsilon,trial,decoder,reencoded,mul_count,add_count,inv_count,"
    "success,list_size,s_hat,l_hat,tau_hat"
)

DECODER_KINDS = ("multitrial", "lee_osullivan")


@dataclass(frozen=True)
class DecoderSpec:
    kind: str
    reencode: bool = False
    tau: int | None = None  # lee_osullivan target radius

    def __post_init__(self):
        if self.kind not in DECODER_KINDS:
            raise ValueError(f"unknown decoder kind {self.kind!r}")
        if self.kind == "lee_osullivan" and self.tau is None:
            raise ValueError("lee_osullivan decoder needs a target tau")

    @property
    def decoder_id(self) -> str:
        base = self.kind if self.tau is None else f"{self.kind}_tau{self.tau}"
        return base + ("_re" if self.reencode else "")


@dataclass(frozen=True)
class ExperimentConfig:
    q: int
    n: int
    k: int
    target_tau: int
    decoders: tuple[DecoderSpec, ...]
    trials_per_epsilon: int
    epsilon_min: int
    epsilon_max: int
    seed: int
    alphas: tuple[int, ...] | str = "consecutive"
    ws: tuple[int, ...] | str = "all-one"

    def __post_init__(self):
        if self.trials_per_epsilon < 1:
            raise ValueError("need at least one trial per epsilon")
        if not 0 <= self.epsilon_min <= self.epsilon_max <= self.target_tau:
            raise ValueError("epsilon range must lie within [0, target_tau]")
        if not self.decoders:
            raise ValueError("need at least one decoder")

    def code(self) -> GRSCode:
        alphas = (
            tuple(range(1, self.n + 1)) if self.alphas == "consecutive" else tuple(self.alphas)
        )
        ws = (1,) * self.n if self.ws == "all-one" else tuple(self.ws)
        return GRSCode(self.q, self.n, self.k, alphas, ws)

    @classmethod
    def from_json(cls, obj) -> ExperimentConfig:
        """Build from the JSON config layout (see README)."""
        if isinstance(obj, (str, bytes)):
            obj = json.loads(obj)
        code = obj["code"]
        decoders = tuple(
            DecoderSpec(
                kind=d["kind"],
                reencode=bool(d.get("reencode", False)),
                tau=d.get("tau"),
            )
            for d in obj["decoders"]
        )
        lo, hi = obj["epsilon_range"]
        alphas = code.get("alphas", "consecutive")
        ws = code.get("ws", "all-one")
        return cls(
            q=code["q"],
            n=code["n"],
            k=code["k"],
            target_tau=obj["target_tau"],
            decoders=decoders,
            trials_per_epsilon=obj["trials_per_epsilon"],
            epsilon_min=lo,
            epsilon_max=hi,
            seed=obj["seed"],
            alphas=alphas if isinstance(alphas, str) else tuple(alphas),
            ws=ws if isinstance(ws, str) else tuple(ws),
        )


@dataclass
class TrialRecord:
    epsilon: int
    trial_index: int
    decoder_id: str
    reencoded: bool
    mul_count: int
    add_count: int
    inv_count: int
    success: bool
    list_size: int
    s_hat: int
    l_hat: int
    tau_hat: int


def _substream(seed: int, epsilon: int, trial_index: int) -> random.Random:
    # hash-derived subseed: deterministic across processes and runs
    material = f"{seed}/{epsilon}/{trial_index}".encode()
    return random.Random(int.from_bytes(hashlib.sha256(material).digest()[:16], "big"))


def random_instance(code: GRSCode, epsilon: int, seed: int, trial_index: int):
    """Uniform message, error of weight exactly epsilon: distinct uniform
    positions, uniform nonzero values.  Deterministic in its arguments."""
    if not 0 <= epsilon <= code.n:
        raise ValueError("error weight exceeds the code length")
    rng = _substream(seed, epsilon, trial_index)
    f = Polynomial(code.field, [rng.randrange(code.q) for _ in range(code.k)])
    codeword = code.encode(f)
    received = list(codeword)
    for pos in rng.sample(range(code.n), epsilon):
        received[pos] = (received[pos] + rng.randrange(1, code.q)) % code.q
    return f, codeword, tuple(received)


def _decode_one(spec: DecoderSpec, code: GRSCode, schedule: DecodingSchedule, r):
    if spec.kind == "multitrial":
        return multi_trial_decode(code, r, schedule, use_reencoding=spec.reencode)
    params = minimal_parameters(code, spec.tau)
    if params is None:
        raise ValueError(f"lee_osullivan tau={spec.tau} exceeds Johnson bound")
    s, l = params
    return lee_osullivan_decode(code, r, s, l, use_reencoding=spec.reencode)


def _run_epsilon(config: ExperimentConfig, epsilon: int) -> list[TrialRecord]:
    code = config.code()
    schedule = build_schedule(code, config.target_tau, RootPolicy.EVERY_INCREASE)
    records = []
    for trial in range(config.trials_per_epsilon):
        f, _, received = random_instance(code, epsilon, config.seed, trial)
        for spec in config.decoders:
            result = _decode_one(spec, code, schedule, received)
            success = any(c.f == f for c in result.candidates)
            s_hat, l_hat, tau_hat = result.stopped_at
            records.append(
                TrialRecord(
                    epsilon,
                    trial,
                    spec.decoder_id,
                    spec.reencode,
                    result.ops.mul_count,
                    result.ops.add_count,
                    result.ops.inv_count,
                    success,
                    len(result.candidates),
                    s_hat,
                    l_hat,
                    tau_hat,
                )
            )
    return records


def run_experiment(config: ExperimentConfig, threads: int = 1) -> list[TrialRecord]:
    """All trial records, ordered by (epsilon, trial, decoder)."""
    epsilons = list(range(config.epsilon_min, config.epsilon_max + 1))
    if threads <= 1:
        batches = [_run_epsilon(config, e) for e in epsilons]
    else:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            batches = list(pool.map(_run_epsilon, [config] * len(epsilons), epsilons))
    records = [rec for batch in batches for rec in batch]
    records.sort(key=lambda r: (r.epsilon, r.trial_index, r.decoder_id))
    return records


def write_csv(records: list[TrialRecord], path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_HEADER.split(","))
        for r in records:
            writer.writerow(
                [
                    r.epsilon,
                    r.trial_index,
                    r.decoder_id,
                    str(r.reencoded).lower(),
                    r.mul_count,
                    r.add_count,
                    r.inv_count,
                    str(r.success).lower(),
                    r.list_size,
                    r.s_hat,
                    r.l_hat,
                    r.tau_hat,
                ]
            )


def mean_mul_counts(records: list[TrialRecord]) -> dict[tuple[str, int], float]:
    """Mean mul_count keyed by (decoder_id, epsilon)."""
    sums: dict[tuple[str, int], list[int]] = {}
    for r in records:
        sums.setdefault((r.decoder_id, r.epsilon), []).append(r.mul_count)
    return {key: sum(v) / len(v) for key, v in sums.items()}


def format_summary(records: list[TrialRecord]) -> str:
    """Per-epsilon mean mul_count table, one column per decoder."""
    means = mean_mul_counts(records)
    decoders = sorted({d for d, _ in means})
    epsilons = sorted({e for _, e in means})
    width = max(12, max(len(d) for d in decoders) + 2)
    lines = ["epsilon" + "".join(d.rjust(width) for d in decoders)]
    for e in epsilons:
        cells = "".join(
            (f"{means[(d, e)]:.1f}" if (d, e) in means else "-").rjust(width)
            for d in decoders
        )
        lines.append(f"{e:7d}{cells}")
    return "\n".join(lines)
