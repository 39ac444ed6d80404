"""Syndromes, table-lookup decoding, and the passive-group membership test."""

from __future__ import annotations

import csv
import enum
import io
import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from . import _gf2
from .pauli import PauliElement, compose, symplectic_product_poly
from .stabilizer import GrandfatherCode

__all__ = [
    "Syndrome",
    "SyndromeTable",
    "TableCollisionError",
    "PairStatus",
    "PairReport",
    "CorrectabilityReport",
    "generators",
    "constraint_length",
    "syndrome_of",
    "syndrome_word",
    "single_qubit_errors",
    "build_syndrome_table",
    "decode_lookup",
    "passive_witness",
    "is_passively_corrected",
    "check_correctable_set",
]

log = logging.getLogger(__name__)

DEFAULT_SLACK = 4
MAX_SLACK = 64


def generators(code: GrandfatherCode) -> list[PauliElement]:
    """Alice-local stabilizer rows, each shifted so its support starts at frame 0."""
    out = []
    for row in code.local_stabilizer:
        span = row.frames()
        if span is not None:
            out.append(row.shift(-span[0]))
    return out


def constraint_length(code: GrandfatherCode) -> int:
    """Frames spanned by the longest stabilizer generator."""
    spans = [g.frames() for g in generators(code)]
    return max((s[1] - s[0] + 1 for s in spans if s), default=1)


def _local(code: GrandfatherCode, error: PauliElement) -> PauliElement:
    n, c = code.params.n, code.params.c
    if error.width == n:
        return error
    if error.width == n + c:
        bob = error.columns(0, c)
        if not bob.is_identity():
            raise ValueError("channel errors act on Alice's qubits only")
        return error.columns(c, c + n)
    raise ValueError(f"error width {error.width} is neither n={n} nor c+n={c + n}")


@dataclass(frozen=True)
class Syndrome:
    """Anticommutation bits keyed by ``(generator index, start frame)``.

    Bit ``(g, u)`` is 1 when the error anticommutes with generator ``g``
    begun at frame ``u``. Keys outside ``window`` are not recorded.
    """

    bits: dict[tuple[int, int], int]
    window: range
    num_generators: int

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.bits.get(key, 0)

    def is_zero(self) -> bool:
        return not any(self.bits.values())

    def ones(self) -> list[tuple[int, int]]:
        return sorted(k for k, v in self.bits.items() if v)

    def word(self, frame: int, length: int) -> tuple[int, ...]:
        """Lookup key for ``frame``: per generator, copies begun at ``frame, frame-1, ...``."""
        return tuple(
            self[(g, frame - s)] for g in range(self.num_generators) for s in range(length)
        )


def syndrome_of(
    code: GrandfatherCode, error: PauliElement, window: range | None = None
) -> Syndrome:
    """Measure every generator copy starting in ``window`` against ``error``.

    Without a window, every start frame that can overlap the error is covered.
    """
    e = _local(code, error)
    gens = generators(code)
    if window is None:
        span = e.frames()
        m = constraint_length(code)
        window = range(span[0] - m + 1, span[1] + 1) if span else range(0)
    bits = {(g, u): 0 for g in range(len(gens)) for u in window}
    for g, gen in enumerate(gens):
        for u in symplectic_product_poly(gen, e).support:
            if u in window:
                bits[(g, u)] = 1
    return Syndrome(bits, window, len(gens))


def syndrome_word(code: GrandfatherCode, error: PauliElement, frame: int = 0) -> tuple[int, ...]:
    """Lookup key of ``error`` as seen from ``frame``."""
    m = constraint_length(code)
    syn = syndrome_of(code, error, range(frame - m + 1, frame + 1))
    return syn.word(frame, m)


def bits_to_str(bits: Sequence[int]) -> str:
    return "".join(str(b) for b in bits)


def single_qubit_errors(n: int, frame: int = 0) -> list[tuple[str, PauliElement]]:
    """All ``3n`` single-qubit errors of one frame, labelled ``X1, Y1, Z1, X2, ...``."""
    return [
        (f"{letter}{q}", PauliElement.single(n, q, letter, frame))
        for q in range(1, n + 1)
        for letter in "XYZ"
    ]


class TableCollisionError(ValueError):
    """Two errors share a syndrome and their product is not passively corrected."""

    def __init__(self, first: PauliElement, second: PauliElement, key: tuple[int, ...]) -> None:
        super().__init__(
            f"errors {first.format()} and {second.format()} share syndrome {bits_to_str(key)} "
            "and differ by more than a passive-group element"
        )
        self.first = first
        self.second = second
        self.key = key


@dataclass
class SyndromeTable:
    """Map from syndrome words to error estimates supported on frame 0."""

    length: int
    num_generators: int
    entries: dict[tuple[int, ...], PauliElement] = field(default_factory=dict)
    labels: dict[tuple[int, ...], str] = field(default_factory=dict)

    @property
    def key_width(self) -> int:
        return self.length * self.num_generators

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, key: object) -> bool:
        return key in self.entries

    def rows(self) -> list[tuple[str, str]]:
        """``(label, bits)`` for every nonzero key, in insertion order."""
        return [
            (self.labels.get(k, self.entries[k].format()), bits_to_str(k))
            for k in self.entries
            if any(k)
        ]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["error", "syndrome"])
        w.writerows(self.rows())
        return buf.getvalue()


def build_syndrome_table(
    code: GrandfatherCode,
    errors: Iterable[PauliElement | tuple[str, PauliElement]],
) -> SyndromeTable:
    """Tabulate syndrome words for ``errors``.

    Each error's full syndrome must fall inside the frame-0 word. A repeated
    key is accepted only when the two errors differ by a passive-group element;
    the first error listed is kept.
    """
    gens = generators(code)
    m = constraint_length(code)
    n = code.params.n
    table = SyndromeTable(m, len(gens))
    zero = (0,) * table.key_width
    table.entries[zero] = PauliElement.identity(n)
    table.labels[zero] = "I"
    for item in errors:
        label, err = item if isinstance(item, tuple) else (None, item)
        err = _local(code, err)
        full = syndrome_of(code, err)
        outside = [k for k in full.ones() if not 0 <= -k[1] < m]
        if outside:
            raise ValueError(
                f"syndrome of {err.format()} reaches start frames outside the frame-0 window"
            )
        key = full.word(0, m)
        if key in table.entries:
            prev = table.entries[key]
            if is_passively_corrected(code, compose(prev, err)):
                continue
            raise TableCollisionError(prev, err, key)
        table.entries[key] = err
        table.labels[key] = label if label is not None else err.format()
    return table


def decode_lookup(table: SyndromeTable, bits: Sequence[int] | str) -> PauliElement | None:
    """Estimate for a syndrome word; ``None`` signals a detected but uncorrectable error."""
    key = tuple(int(b) for b in bits)
    if len(key) != table.key_width:
        raise ValueError(f"syndrome has {len(key)} bits, table expects {table.key_width}")
    return table.entries.get(key)


def _encode(e: PauliElement, index: dict[tuple[int, int, int], int]) -> int:
    v = 0
    for q in range(e.width):
        for kind, poly in ((0, e.z[q]), (1, e.x[q])):
            for t in poly.support:
                key = (t, q, kind)
                if key not in index:
                    index[key] = len(index)
                v |= 1 << index[key]
    return v


def passive_witness(
    code: GrandfatherCode,
    e: PauliElement,
    slack: int = DEFAULT_SLACK,
    max_slack: int = MAX_SLACK,
) -> list[tuple[int, int]] | None:
    """Express ``e`` as a product of shifted passive generators.

    Returns ``(row index into code.passive_rows, shift)`` pairs, or ``None``
    when no combination exists within ``max_slack`` frames around ``e``.
    """
    e = _local(code, e)
    span = e.frames()
    if span is None:
        return []
    rows = [r for r in code.passive_rows]
    while True:
        index: dict[tuple[int, int, int], int] = {}
        target = _encode(e, index)
        shifts: list[tuple[int, int]] = []
        vectors: list[int] = []
        for i, row in enumerate(rows):
            rspan = row.frames()
            if rspan is None:
                continue
            for k in range(span[0] - slack - rspan[1], span[1] + slack - rspan[0] + 1):
                shifts.append((i, k))
                vectors.append(_encode(row.shift(k), index))
        sol = _gf2.solve(vectors, target)
        if sol is not None:
            return [shifts[i] for i in sol]
        if slack >= max_slack:
            log.debug("no passive decomposition of %s within %d frames", e.format(), slack)
            return None
        slack = min(2 * slack, max_slack)


def is_passively_corrected(
    code: GrandfatherCode,
    e: PauliElement,
    slack: int = DEFAULT_SLACK,
    max_slack: int = MAX_SLACK,
) -> bool:
    """Whether ``e`` lies in the group generated by the isotropic, gauge and classical rows."""
    e = _local(code, e)
    if e.is_identity():
        return True
    # passive elements commute with every stabilizer copy
    if not syndrome_of(code, e).is_zero():
        return False
    return passive_witness(code, e, slack, max_slack) is not None


class PairStatus(enum.Enum):
    DETECTED = "detected"
    DEGENERATE = "degenerate"
    VIOLATION = "violation"


@dataclass(frozen=True)
class PairReport:
    first: int
    second: int
    status: PairStatus


@dataclass
class CorrectabilityReport:
    errors: list[PauliElement]
    pairs: list[PairReport]

    @property
    def correctable(self) -> bool:
        return all(p.status is not PairStatus.VIOLATION for p in self.pairs)

    def counts(self) -> dict[PairStatus, int]:
        out = {s: 0 for s in PairStatus}
        for p in self.pairs:
            out[p.status] += 1
        return out


def classify_difference(code: GrandfatherCode, diff: PauliElement) -> PairStatus:
    """Classify ``E_a E_b`` by the active/passive correctability condition."""
    diff = _local(code, diff)
    for g in code.active_rows:
        if symplectic_product_poly(g, diff):
            return PairStatus.DETECTED
    if is_passively_corrected(code, diff):
        return PairStatus.DEGENERATE
    return PairStatus.VIOLATION


def check_correctable_set(
    code: GrandfatherCode, errors: Sequence[PauliElement]
) -> CorrectabilityReport:
    """Classify every unordered pair of ``errors``."""
    errs = [_local(code, e) for e in errors]
    pairs = []
    for i in range(len(errs)):
        for j in range(i + 1, len(errs)):
            status = classify_difference(code, compose(errs[i], errs[j]))
            pairs.append(PairReport(i, j, status))
    return CorrectabilityReport(errs, pairs)
