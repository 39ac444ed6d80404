import random

import pytest
import reference
from hypothesis import given, settings
from hypothesis import strategies as st
from strategies import gates

from gqcc.circuit import Circuit
from gqcc.codefile import (
    CodefileError,
    CodeSpec,
    format_codefile,
    load_example,
    parse_codefile,
)
from gqcc.pauli import PauliElement
from gqcc.stabilizer import CodeParams

HEADER = "code t\nparams n=5 k=1 l=1 r=1 c=1\ncircuit:\n"


def test_example_transcription(params, code):
    spec = parse_codefile(reference.CODEFILE)
    assert spec.name == "example"
    assert spec.params == params
    assert spec.circuit == reference.CIRCUIT
    assert len(spec.circuit) == 16
    assert spec.encoded_code() == code


def test_bundled_example_matches(code):
    spec = load_example()
    assert spec.circuit == reference.CIRCUIT
    assert spec.encoded_code() == code


def test_round_trip():
    spec = parse_codefile(reference.CODEFILE)
    text = format_codefile(spec)
    assert parse_codefile(text) == spec
    assert format_codefile(parse_codefile(text)) == text


def test_empty_circuit():
    spec = parse_codefile(HEADER)
    assert len(spec.circuit) == 0
    assert spec.encoded_code() == spec.initial_code()


def test_error_section():
    spec = parse_codefile(HEADER + "errors:\nX1 = XIIII\nIZIZI IIZII\n@-1 IIIIZ\n")
    labels = [label for label, _ in spec.error_set()]
    assert labels == ["X1", "E2", "E3"]
    assert spec.error_set()[2][1] == PauliElement.single(5, 5, "Z", frame=-1)
    assert parse_codefile(format_codefile(spec)) == spec


def test_default_error_set():
    spec = parse_codefile(HEADER + "errors: single-qubit\n")
    assert len(spec.error_set()) == 16
    assert parse_codefile(format_codefile(spec)) == spec


@pytest.mark.parametrize(
    "body, line, fragment",
    [
        ("CNOT 2 2 D", 4, "control equals target"),
        ("H 6", 4, "outside 1..n"),
        ("CNOT 1 2 D^x", 4, "bad polynomial term"),
        ("CNOT 1 2", 4, "CNOT expects"),
        ("SWAP 1", 4, "SWAP expects"),
        ("TOFFOLI 1 2 3", 4, "unknown gate"),
        ("H 1 1", 4, "twice"),
        ("CNOT 1 2 0", 4, "nonzero"),
    ],
)
def test_gate_diagnostics(body, line, fragment):
    with pytest.raises(CodefileError) as info:
        parse_codefile(HEADER + body + "\n")
    assert info.value.line == line
    assert fragment in info.value.message


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("code a\nparams n=3 k=1 l=1 r=1 c=1\ncircuit:\n", "a = n-k-l-c-r"),
        ("code a\nparams n=3 k=1\ncircuit:\n", "missing parameter"),
        ("code a\nparams n=3 k=x l=0 r=0 c=0\ncircuit:\n", "must be an integer"),
        ("params n=1 k=0 l=0 r=0 c=0\ncircuit:\n", "missing 'code"),
        ("code a\ncircuit:\n", "'params' must precede"),
        ("code a\nparams n=1 k=0 l=0 r=0 c=0\n", "missing 'circuit:'"),
        ("code a\nH 1\n", "outside a section"),
    ],
)
def test_structure_diagnostics(text, fragment):
    with pytest.raises(CodefileError) as info:
        parse_codefile(text)
    assert fragment in info.value.message
    assert info.value.line >= 1


def test_column_points_at_token():
    with pytest.raises(CodefileError) as info:
        parse_codefile(HEADER + "CNOT 1  7 D\n")
    assert (info.value.line, info.value.column) == (4, 9)


def test_comments_and_blank_lines():
    spec = parse_codefile(
        "# hi\n\ncode x # name\nparams n=2 k=1 l=0 r=0 c=0\ncircuit:\n  H 1 # g\n"
    )
    assert spec.circuit.gates[0].targets == (1,)


@given(st.lists(gates(4), max_size=8))
def test_round_trip_random_circuits(gs):
    spec = CodeSpec("r", CodeParams(4, 1, 0, 1, 1), Circuit(4, tuple(gs)))
    assert parse_codefile(format_codefile(spec)) == spec


def _mutate(text: str, rng: random.Random) -> str:
    alphabet = "HCNOTSWAPD^+-=:@#0123456789 \nXYZIklnrc"
    chars = list(text)
    for _ in range(rng.randint(1, 6)):
        op = rng.random()
        pos = rng.randrange(len(chars) + 1)
        if op < 0.4 and chars:
            del chars[min(pos, len(chars) - 1)]
        elif op < 0.8:
            chars.insert(pos, rng.choice(alphabet))
        else:
            lines = "".join(chars).split("\n")
            rng.shuffle(lines)
            chars = list("\n".join(lines))
    return "".join(chars)


def test_fuzz_never_crashes():
    rng = random.Random(20240611)
    base = reference.CODEFILE + "errors:\nX1 = XIIII\n"
    outcomes = {"ok": 0, "diagnostic": 0}
    for _ in range(10_000):
        text = _mutate(base, rng)
        try:
            parse_codefile(text)
            outcomes["ok"] += 1
        except CodefileError as exc:
            assert exc.line >= 1
            outcomes["diagnostic"] += 1
    assert outcomes["ok"] > 0 and outcomes["diagnostic"] > 0


@settings(max_examples=300)
@given(st.text(max_size=200))
def test_arbitrary_text(text):
    try:
        parse_codefile(text)
    except CodefileError as exc:
        assert exc.line >= 1
