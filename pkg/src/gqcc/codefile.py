"""Line-oriented text format describing a code and its encoding circuit.

::

    # comments run to end of line
    code example
    params n=5 k=1 l=1 r=1 c=1
    circuit:
    H 2
    CNOT 2 3 D
    SWAP 1 4
    errors:
    X1 = XIIII
    IZIZI IIZII

``errors:`` is optional; ``errors: single-qubit`` names every one-frame
single-qubit error. Gate indices are 1-based over Alice's qubits.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .circuit import Circuit, Cnot, GateOp, Hadamard, Swap, apply_circuit
from .decoder import single_qubit_errors
from .gf2poly import LaurentPoly, PolyParseError
from .pauli import PauliElement
from .stabilizer import CodeParams, GrandfatherCode, initial_code

__all__ = [
    "CodeSpec",
    "CodefileError",
    "parse_codefile",
    "format_codefile",
    "load_codefile",
    "load_example",
]

SINGLE_QUBIT = "single-qubit"


class CodefileError(ValueError):
    """Syntax or semantic problem, located by 1-based line and column."""

    def __init__(self, message: str, line: int, column: int = 1) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


@dataclass(frozen=True)
class CodeSpec:
    name: str
    params: CodeParams
    circuit: Circuit
    # None: nothing declared; SINGLE_QUBIT: the standard one-frame set
    errors: tuple[tuple[str, PauliElement], ...] | str | None = None

    def initial_code(self) -> GrandfatherCode:
        return initial_code(self.params)

    def encoded_code(self) -> GrandfatherCode:
        return apply_circuit(self.initial_code(), self.circuit)

    def error_set(self) -> list[tuple[str, PauliElement]]:
        """Declared errors, defaulting to identity plus all single-qubit errors."""
        n = self.params.n
        if self.errors is None or self.errors == SINGLE_QUBIT:
            return [("I", PauliElement.identity(n))] + single_qubit_errors(n)
        return list(self.errors)


_PARAM = re.compile(r"^([a-z])=(\S*)$")
_LABEL = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


def _tokens(line: str) -> list[tuple[str, int]]:
    return [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", line)]


def _int(tok: str, lineno: int, col: int, what: str) -> int:
    if not re.fullmatch(r"[+-]?[0-9]{1,9}", tok):
        raise CodefileError(f"{what} must be an integer, got {tok!r}", lineno, col)
    return int(tok)


def _parse_gate(toks: list[tuple[str, int]], lineno: int, n: int) -> GateOp:
    op, opcol = toks[0]
    args = toks[1:]
    kind = op.upper()

    def index(tok: str, col: int) -> int:
        q = _int(tok, lineno, col, "qubit index")
        if not 1 <= q <= n:
            raise CodefileError(f"qubit index {q} outside 1..n = 1..{n}", lineno, col)
        return q

    if kind == "H":
        if not args:
            raise CodefileError("H needs at least one qubit index", lineno, opcol)
        qs = [index(t, c) for t, c in args]
        if len(set(qs)) != len(qs):
            raise CodefileError("H lists a qubit twice", lineno, opcol)
        return Hadamard(tuple(qs))
    if kind == "CNOT":
        if len(args) < 3:
            raise CodefileError("CNOT expects: CNOT <control> <target> <poly>", lineno, opcol)
        i = index(*args[0])
        j = index(*args[1])
        if i == j:
            raise CodefileError("control equals target", lineno, args[1][1])
        poly_col = args[2][1]
        try:
            f = LaurentPoly.parse("".join(t for t, _ in args[2:]))
        except PolyParseError as exc:
            raise CodefileError(str(exc), lineno, poly_col + exc.column) from None
        if f.is_zero():
            raise CodefileError("CNOT polynomial must be nonzero", lineno, poly_col)
        return Cnot(i, j, f)
    if kind == "SWAP":
        if len(args) != 2:
            raise CodefileError("SWAP expects two qubit indices", lineno, opcol)
        i = index(*args[0])
        j = index(*args[1])
        if i == j:
            raise CodefileError("SWAP of a qubit with itself", lineno, args[1][1])
        return Swap(i, j)
    raise CodefileError(f"unknown gate {op!r} (expected H, CNOT or SWAP)", lineno, opcol)


def _parse_error_line(
    text: str, lineno: int, col: int, n: int, idx: int
) -> tuple[str, PauliElement]:
    label, eq, body = text.partition("=")
    if eq:
        label = label.strip()
        if not _LABEL.match(label):
            raise CodefileError(f"bad error label {label!r}", lineno, col)
    else:
        label, body = "", text
    try:
        e = PauliElement.parse(body, width=n)
    except ValueError as exc:
        raise CodefileError(f"bad error operator: {exc}", lineno, col) from None
    if not body.split():
        raise CodefileError("empty error operator", lineno, col)
    return label or f"E{idx}", e


def parse_codefile(text: str) -> CodeSpec:
    """Parse codefile text; every problem surfaces as :class:`CodefileError`."""
    name: str | None = None
    params: CodeParams | None = None
    gates: list[GateOp] = []
    errors: list[tuple[str, PauliElement]] | str | None = None
    section: str | None = None
    circuit_line = 0

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        toks = _tokens(line)
        if not toks:
            continue
        head, col = toks[0]
        low = head.lower()
        if low == "code":
            if name is not None:
                raise CodefileError("duplicate 'code' line", lineno, col)
            if len(toks) != 2:
                raise CodefileError("expected: code <name>", lineno, col)
            name = toks[1][0]
            section = None
        elif low == "params":
            if params is not None:
                raise CodefileError("duplicate 'params' line", lineno, col)
            values: dict[str, int] = {}
            for tok, tcol in toks[1:]:
                m = _PARAM.match(tok)
                if not m or m.group(1) not in "nklrc":
                    raise CodefileError(f"expected <n|k|l|r|c>=<int>, got {tok!r}", lineno, tcol)
                if m.group(1) in values:
                    raise CodefileError(f"parameter {m.group(1)} given twice", lineno, tcol)
                v = _int(m.group(2), lineno, tcol + 2, f"parameter {m.group(1)}")
                values[m.group(1)] = v
            missing = [k for k in "nklrc" if k not in values]
            if missing:
                raise CodefileError(f"missing parameter(s) {', '.join(missing)}", lineno, col)
            if values["n"] > 64:
                raise CodefileError("n above 64 is not supported", lineno, col)
            try:
                params = CodeParams(**values)
            except ValueError as exc:
                raise CodefileError(str(exc), lineno, col) from None
            section = None
        elif low == "circuit:":
            if len(toks) != 1:
                raise CodefileError("'circuit:' takes no arguments", lineno, toks[1][1])
            if circuit_line:
                raise CodefileError("duplicate 'circuit:' section", lineno, col)
            if params is None:
                raise CodefileError("'params' must precede 'circuit:'", lineno, col)
            circuit_line = lineno
            section = "circuit"
        elif low == "errors:":
            if errors is not None:
                raise CodefileError("duplicate 'errors:' section", lineno, col)
            if params is None:
                raise CodefileError("'params' must precede 'errors:'", lineno, col)
            if len(toks) == 1:
                errors = []
                section = "errors"
            elif len(toks) == 2 and toks[1][0].lower() == SINGLE_QUBIT:
                errors = SINGLE_QUBIT
                section = None
            else:
                raise CodefileError(f"expected 'errors:' or 'errors: {SINGLE_QUBIT}'", lineno, col)
        elif section == "circuit":
            assert params is not None
            gates.append(_parse_gate(toks, lineno, params.n))
        elif section == "errors":
            assert params is not None and isinstance(errors, list)
            errors.append(
                _parse_error_line(line[col - 1 :], lineno, col, params.n, len(errors) + 1)
            )
        else:
            raise CodefileError(f"unexpected {head!r} outside a section", lineno, col)

    last = max(1, len(text.splitlines()))
    if name is None:
        raise CodefileError("missing 'code <name>' line", last)
    if params is None:
        raise CodefileError("missing 'params' line", last)
    if not circuit_line:
        raise CodefileError("missing 'circuit:' section", last)
    circ = Circuit(params.n, tuple(gates))
    return CodeSpec(name, params, circ, tuple(errors) if isinstance(errors, list) else errors)


def format_codefile(spec: CodeSpec) -> str:
    """Canonical text for ``spec``; :func:`parse_codefile` inverts it."""
    p = spec.params
    lines = [
        f"code {spec.name}",
        f"params n={p.n} k={p.k} l={p.l} r={p.r} c={p.c}",
        "circuit:",
    ]
    lines.extend(str(g) for g in spec.circuit)
    if spec.errors == SINGLE_QUBIT:
        lines.append(f"errors: {SINGLE_QUBIT}")
    elif spec.errors is not None:
        lines.append("errors:")
        for label, e in spec.errors:
            lines.append(f"{label} = {e.format()}")
    return "\n".join(lines) + "\n"


def load_codefile(path: str) -> CodeSpec:
    with open(path, encoding="utf-8") as fh:
        return parse_codefile(fh.read())


def example_text() -> str:
    """Codefile for the bundled [5,1,1;1,1] example code."""
    from importlib.resources import files

    return files("gqcc").joinpath("data/example.qcc").read_text(encoding="utf-8")


def load_example() -> CodeSpec:
    return parse_codefile(example_text())
