"""Finite-depth periodic gates acting on generator columns.

Every gate acts on the same qubit of every frame, so on the polynomial
representation it is a column operation applied to all rows at once.
Qubit indices are 1-based and count Alice's qubits only.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field, replace

from .gf2poly import LaurentPoly
from .pauli import PauliElement
from .stabilizer import GrandfatherCode, PolyMatrix

__all__ = [
    "Hadamard",
    "Cnot",
    "Swap",
    "GateOp",
    "Circuit",
    "apply_gate",
    "apply_circuit",
    "invert",
    "conjugate_pauli",
]


@dataclass(frozen=True)
class Hadamard:
    targets: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "targets", tuple(self.targets))
        if not self.targets:
            raise ValueError("H needs at least one target")
        if len(set(self.targets)) != len(self.targets):
            raise ValueError("H targets repeated")

    def indices(self) -> tuple[int, ...]:
        return self.targets

    def __str__(self) -> str:
        return "H " + " ".join(map(str, self.targets))


@dataclass(frozen=True)
class Cnot:
    """CNOT from ``control`` of each frame to ``target`` of the frames picked out by ``f``."""

    control: int
    target: int
    f: LaurentPoly = field(default_factory=lambda: LaurentPoly((0,)))

    def __post_init__(self) -> None:
        if self.control == self.target:
            raise ValueError("control equals target")

    def indices(self) -> tuple[int, ...]:
        return (self.control, self.target)

    def __str__(self) -> str:
        return f"CNOT {self.control} {self.target} {self.f.format()}"


@dataclass(frozen=True)
class Swap:
    i: int
    j: int

    def __post_init__(self) -> None:
        if self.i == self.j:
            raise ValueError("swap of a qubit with itself")

    def indices(self) -> tuple[int, ...]:
        return (self.i, self.j)

    def __str__(self) -> str:
        return f"SWAP {self.i} {self.j}"


GateOp = Hadamard | Cnot | Swap


@dataclass(frozen=True)
class Circuit:
    """Gates in program order on ``width`` qubits per frame."""

    width: int
    gates: tuple[GateOp, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "gates", tuple(self.gates))
        for g in self.gates:
            for q in g.indices():
                if not 1 <= q <= self.width:
                    raise ValueError(f"{g}: qubit {q} outside 1..{self.width}")

    def __len__(self) -> int:
        return len(self.gates)

    def __iter__(self):
        return iter(self.gates)


def _apply_to_row(row: PauliElement, gate: GateOp, offset: int) -> PauliElement:
    z = list(row.z)
    x = list(row.x)
    for q in gate.indices():
        if not 0 <= q - 1 + offset < row.width:
            raise IndexError(f"{gate}: qubit {q} (offset {offset}) outside width {row.width}")
    if isinstance(gate, Hadamard):
        for q in gate.targets:
            i = q - 1 + offset
            z[i], x[i] = x[i], z[i]
    elif isinstance(gate, Cnot):
        i = gate.control - 1 + offset
        j = gate.target - 1 + offset
        x[j] = x[j] + gate.f * x[i]
        z[i] = z[i] + gate.f.reciprocal() * z[j]
    elif isinstance(gate, Swap):
        i = gate.i - 1 + offset
        j = gate.j - 1 + offset
        z[i], z[j] = z[j], z[i]
        x[i], x[j] = x[j], x[i]
    else:
        raise TypeError(f"not a gate: {gate!r}")
    return PauliElement(row.width, z, x)


def apply_gate(m: PolyMatrix, gate: GateOp, alice_offset: int = 0) -> PolyMatrix:
    """Transform every row of ``m``; ``alice_offset`` skips Bob's leading columns."""
    return PolyMatrix(m.width, tuple(_apply_to_row(r, gate, alice_offset) for r in m.rows))


def _apply_all(m: PolyMatrix, gates: Iterable[GateOp], offset: int) -> PolyMatrix:
    for g in gates:
        m = apply_gate(m, g, offset)
    return m


def apply_circuit(code: GrandfatherCode, circ: Circuit) -> GrandfatherCode:
    """Encode (or decode) every matrix of ``code`` with ``circ``."""
    p = code.params
    if circ.width != p.n:
        raise ValueError(f"circuit width {circ.width} != n = {p.n}")
    return replace(
        code,
        stabilizer=_apply_all(code.stabilizer, circ, p.c),
        s_e=_apply_all(code.s_e, circ, 0),
        s_i=_apply_all(code.s_i, circ, 0),
        s_g=_apply_all(code.s_g, circ, 0),
        s_c=_apply_all(code.s_c, circ, 0),
    )


def invert(circ: Circuit) -> Circuit:
    """Decoding circuit: every gate here is self-inverse, so reverse the order."""
    return Circuit(circ.width, tuple(reversed(circ.gates)))


def conjugate_pauli(e: PauliElement, circ: Circuit, alice_offset: int = 0) -> PauliElement:
    """Push a Pauli sequence through ``circ``."""
    if e.width - alice_offset != circ.width:
        raise ValueError(f"element width {e.width} does not fit circuit width {circ.width}")
    for g in circ:
        e = _apply_to_row(e, g, alice_offset)
    return e
