"""Streaming Monte Carlo: inject channel errors, decode frame by frame, classify.

Only Alice's transmitted qubits are exposed to noise; Bob's ebit halves are
assumed noiseless.
"""

from __future__ import annotations

import enum
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np
from scipy.stats import beta

from .decoder import (
    SyndromeTable,
    build_syndrome_table,
    constraint_length,
    decode_lookup,
    is_passively_corrected,
    single_qubit_errors,
    syndrome_of,
)
from .gf2poly import LaurentPoly
from .pauli import PauliElement, compose
from .stabilizer import GrandfatherCode

__all__ = [
    "SingleQubitAlternating",
    "Depolarizing",
    "Custom",
    "NoiseModel",
    "ResidualClass",
    "TrialResult",
    "SimReport",
    "sample_error",
    "decode_stream",
    "run_trial",
    "estimate_logical_rate",
    "parse_noise",
]

_LETTERS = "XYZ"


@dataclass(frozen=True)
class SingleQubitAlternating:
    """One uniformly chosen non-identity single-qubit Pauli in every even frame."""

    name = "alternating"


@dataclass(frozen=True)
class Depolarizing:
    """Each qubit of each frame independently suffers X, Y or Z with probability p/3 each."""

    p: float
    name = "depolarizing"

    def __post_init__(self) -> None:
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"probability {self.p} outside [0, 1]")


@dataclass(frozen=True)
class Custom:
    """Per frame, at most one listed error (moved into that frame), drawn with its probability."""

    entries: tuple[tuple[PauliElement, float], ...]
    name = "custom"

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(self.entries))
        total = 0.0
        for e, p in self.entries:
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"probability {p} outside [0, 1]")
            total += p
        if total > 1.0 + 1e-12:
            raise ValueError(f"probabilities sum to {total} > 1")


NoiseModel = SingleQubitAlternating | Depolarizing | Custom


class ResidualClass(enum.Enum):
    CLEAN = "clean"
    LOGICAL_FAILURE = "logical_failure"
    DETECTED_UNCORRECTABLE = "detected_uncorrectable"


@dataclass(frozen=True)
class TrialResult:
    frames: int
    injected: PauliElement
    estimated: PauliElement
    residual_class: ResidualClass


@dataclass
class SimReport:
    """Aggregate of independent trials.

    ``failure_rate`` counts every trial that did not end CLEAN, i.e. logical
    failures plus detected-uncorrectable ones; the interval is Clopper-Pearson.
    """

    noise: str
    trials: int
    frames: int
    clean: int
    failures: int
    detected: int
    failure_rate: float
    ci_low: float
    ci_high: float
    seed: int
    wall_time: float = field(default=0.0, compare=False)

    FIELDS = (
        "noise",
        "trials",
        "frames",
        "clean",
        "failures",
        "detected",
        "failure_rate",
        "ci_low",
        "ci_high",
        "seed",
        "wall_time",
    )

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)

    def csv_header(self) -> str:
        return ",".join(self.FIELDS)

    def csv_row(self) -> str:
        d = self.to_dict()
        return ",".join(str(d[k]) for k in self.FIELDS)


def sample_error(noise: NoiseModel, n: int, nframes: int, rng: np.random.Generator) -> PauliElement:
    """Draw a channel error on frames ``0 .. nframes-1``."""
    z: list[list[int]] = [[] for _ in range(n)]
    x: list[list[int]] = [[] for _ in range(n)]

    def put(t: int, q: int, letter: str) -> None:
        if letter in "ZY":
            z[q].append(t)
        if letter in "XY":
            x[q].append(t)

    if isinstance(noise, SingleQubitAlternating):
        for t in range(0, nframes, 2):
            choice = int(rng.integers(3 * n))
            put(t, choice // 3, _LETTERS[choice % 3])
    elif isinstance(noise, Depolarizing):
        if noise.p > 0:
            hits = rng.random((nframes, n)) < noise.p
            letters = rng.integers(3, size=(nframes, n))
            for t, q in zip(*np.nonzero(hits)):
                put(int(t), int(q), _LETTERS[letters[t, q]])
    elif isinstance(noise, Custom):
        probs = np.array([p for _, p in noise.entries] + [0.0])
        probs[-1] = max(0.0, 1.0 - probs[:-1].sum())
        acc = PauliElement.identity(n)
        draws = rng.choice(len(probs), size=nframes, p=probs / probs.sum())
        for t, d in enumerate(draws):
            if d < len(noise.entries):
                e = noise.entries[d][0]
                span = e.frames()
                if span is not None:
                    acc = compose(acc, e.shift(t - span[0]))
        return acc
    else:
        raise TypeError(f"unknown noise model {noise!r}")
    return PauliElement(n, [LaurentPoly(e) for e in z], [LaurentPoly(e) for e in x])


def _table_for(code: GrandfatherCode) -> SyndromeTable:
    return build_syndrome_table(code, single_qubit_errors(code.params.n))


def decode_stream(
    code: GrandfatherCode,
    error: PauliElement,
    nframes: int,
    table: SyndromeTable | None = None,
    stride: int = 2,
    phase: int = 0,
) -> TrialResult:
    """Sliding-window lookup decoding of ``error`` on frames ``0 .. nframes-1``.

    The decoder visits frames ``phase, phase + stride, ...`` in order. The word
    for frame ``t`` reads generator copies begun at ``t, t-1, ...``; once an
    estimate is chosen its syndrome is cleared before moving on. Copies begun
    at ``t`` also overlap frame ``t+1``, so a single-frame table can only
    resolve errors spaced at least one frame apart: hence ``stride=2``.

    Residual classes: CLEAN when the residual lies in the passive group,
    DETECTED_UNCORRECTABLE when a lookup failed or syndrome remains,
    LOGICAL_FAILURE when the residual is invisible to the stabilizer but not
    passive.
    """
    if stride < 1:
        raise ValueError("stride must be at least 1")
    if table is None:
        table = _table_for(code)
    m = table.length
    ngen = table.num_generators
    window = range(-(m - 1), nframes + m - 1)
    bits = dict(syndrome_of(code, error, window).bits)
    estimate = PauliElement.identity(code.params.n)
    failed_lookup = False
    for t in range(phase, nframes, stride):
        keys = [(g, t - s) for g in range(ngen) for s in range(m)]
        word = tuple(bits[k] for k in keys)
        if not any(word):
            continue
        est = decode_lookup(table, word)
        if est is None:
            failed_lookup = True
            continue
        if not est.is_identity():
            estimate = compose(estimate, est.shift(t))
        for k, b in zip(keys, word):
            bits[k] ^= b
    residual = compose(error, estimate)
    if residual.is_identity() or is_passively_corrected(code, residual):
        cls = ResidualClass.CLEAN
    elif failed_lookup or not syndrome_of(code, residual).is_zero():
        cls = ResidualClass.DETECTED_UNCORRECTABLE
    else:
        cls = ResidualClass.LOGICAL_FAILURE
    return TrialResult(nframes, error, estimate, cls)


def run_trial(
    code: GrandfatherCode,
    noise: NoiseModel,
    nframes: int,
    seed: int | np.random.SeedSequence,
    table: SyndromeTable | None = None,
    stride: int = 2,
) -> TrialResult:
    m = constraint_length(code)
    if nframes < m:
        raise ValueError(f"need at least {m} frames, got {nframes}")
    rng = np.random.default_rng(seed)
    error = sample_error(noise, code.params.n, nframes, rng)
    return decode_stream(code, error, nframes, table, stride=stride)


def _run_chunk(args) -> list[ResidualClass]:
    code, noise, nframes, seeds, stride = args
    table = _table_for(code)
    return [run_trial(code, noise, nframes, s, table, stride).residual_class for s in seeds]


def estimate_logical_rate(
    code: GrandfatherCode,
    noise: NoiseModel,
    nframes: int,
    trials: int,
    seed: int,
    workers: int = 1,
    stride: int = 2,
) -> SimReport:
    """Run ``trials`` independent trials; per-trial seeds are spawned from ``seed``.

    Results do not depend on ``workers``.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    start = time.perf_counter()
    seeds = np.random.SeedSequence(seed).spawn(trials)
    if workers > 1:
        chunks = [seeds[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = [
                c
                for part in pool.map(
                    _run_chunk, [(code, noise, nframes, ch, stride) for ch in chunks]
                )
                for c in part
            ]
    else:
        results = _run_chunk((code, noise, nframes, seeds, stride))
    clean = sum(r is ResidualClass.CLEAN for r in results)
    failures = sum(r is ResidualClass.LOGICAL_FAILURE for r in results)
    detected = sum(r is ResidualClass.DETECTED_UNCORRECTABLE for r in results)
    bad = failures + detected
    lo, hi = clopper_pearson(bad, trials)
    return SimReport(
        noise=describe_noise(noise),
        trials=trials,
        frames=nframes,
        clean=clean,
        failures=failures,
        detected=detected,
        failure_rate=bad / trials,
        ci_low=lo,
        ci_high=hi,
        seed=seed,
        wall_time=round(time.perf_counter() - start, 6),
    )


def clopper_pearson(k: int, n: int, level: float = 0.95) -> tuple[float, float]:
    alpha = 1.0 - level
    lo = 0.0 if k == 0 else float(beta.ppf(alpha / 2, k, n - k + 1))
    hi = 1.0 if k == n else float(beta.ppf(1 - alpha / 2, k + 1, n - k))
    return lo, hi


def describe_noise(noise: NoiseModel) -> str:
    if isinstance(noise, Depolarizing):
        return f"depolarizing:{noise.p}"
    if isinstance(noise, Custom):
        return "custom:" + ";".join(f"{e.format()}={p}" for e, p in noise.entries)
    return noise.name


def parse_noise(text: str, n: int | None = None) -> NoiseModel:
    """``alternating``, ``depolarizing:<p>``, or ``custom:<frames>=<p>;<frames>=<p>``."""
    head, _, rest = text.partition(":")
    head = head.strip().lower()
    if head in ("alternating", "single-qubit-alternating"):
        return SingleQubitAlternating()
    if head in ("depolarizing", "depol"):
        try:
            return Depolarizing(float(rest))
        except ValueError:
            raise ValueError(f"bad depolarizing probability {rest!r}") from None
    if head == "custom":
        entries: list[tuple[PauliElement, float]] = []
        for item in filter(None, (s.strip() for s in rest.split(";"))):
            frames, _, p = item.rpartition("=")
            entries.append((PauliElement.parse(frames, width=n), float(p)))
        return Custom(tuple(entries))
    raise ValueError(f"unknown noise model {text!r}")
