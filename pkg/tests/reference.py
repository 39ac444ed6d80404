"""Matrices, gate listing and syndrome table of the [5,1,1;1,1] example code,
transcribed by hand from the published displays (h = 1+D)."""

from gqcc.circuit import Circuit, Cnot, Hadamard, Swap
from gqcc.gf2poly import LaurentPoly
from gqcc.stabilizer import PolyMatrix

P = LaurentPoly.parse
h = "1+D"
h_inv = "1+D^-1"

INITIAL_STABILIZER = PolyMatrix.from_blocks(
    z=[[1, 1, 0, 0, 0, 0], [0, 0, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0]],
    x=[[0, 0, 0, 0, 0, 0], [1, 1, 0, 0, 0, 0], [0, 0, 0, 0, 0, 0]],
)
INITIAL_S_E = PolyMatrix.from_blocks(
    z=[[1, 0, 0, 0, 0], [0, 0, 0, 0, 0]], x=[[0, 0, 0, 0, 0], [1, 0, 0, 0, 0]]
)
INITIAL_S_I = PolyMatrix.from_blocks(z=[[0, 1, 0, 0, 0]], x=[[0, 0, 0, 0, 0]])
INITIAL_S_G = PolyMatrix.from_blocks(
    z=[[0, 0, 1, 0, 0], [0, 0, 0, 0, 0]], x=[[0, 0, 0, 0, 0], [0, 0, 1, 0, 0]]
)
INITIAL_S_C = PolyMatrix.from_blocks(z=[[0, 0, 0, 1, 0]], x=[[0, 0, 0, 0, 0]])

ENCODED_STABILIZER = PolyMatrix.from_blocks(
    z=[[1, 0, 0, 0, 0, 0], [0, h, "D", 0, 1, h], [0, 0, 0, "D", "D", "D"]],
    x=[[0, h, 0, "D", 1, h], [1, 0, 0, 0, 0, 0], [0, 0, 1, 0, 1, 1]],
)
ENCODED_S_E = PolyMatrix.from_blocks(
    z=[[0, 0, 0, 0, 0], [h, "D", 0, 1, h]], x=[[h, 0, "D", 1, h], [0, 0, 0, 0, 0]]
)
ENCODED_S_I = PolyMatrix.from_blocks(z=[[0, 0, "D", "D", "D"]], x=[[0, 1, 0, 1, 1]])
ENCODED_S_G = PolyMatrix.from_blocks(
    z=[[0, "D^-1", 1, "D^-1", 0], [0, "D^-1", 0, 0, 0]],
    x=[[0, 0, 0, 0, 0], [0, 0, 1, 0, 0]],
)
ENCODED_S_C = PolyMatrix.from_blocks(z=[[1, h_inv, 0, h_inv, 0]], x=[[0, 0, 0, 0, 0]])

GATES = (
    Hadamard((2,)),
    Cnot(2, 3, P("D")),
    Cnot(2, 4, P("1+D")),
    Cnot(2, 5, P("D")),
    Hadamard((3, 4, 5)),
    Cnot(2, 3, P("D")),
    Cnot(2, 5, P("D")),
    Hadamard((2,)),
    Cnot(1, 2, P("D")),
    Cnot(1, 4, P("1+D")),
    Cnot(1, 5, P("1+D")),
    Hadamard((1, 2, 3, 4, 5)),
    Cnot(1, 3, P("D")),
    Cnot(1, 4, P("1+D")),
    Cnot(1, 5, P("1+D")),
    Swap(1, 4),
)
CIRCUIT = Circuit(5, GATES)

# Pauli form of the entanglement and isotropic generators (two frames each)
ACTIVE_GENERATORS = [
    ("XIIXX", "XIXIX"),
    ("ZIIZZ", "ZZIIZ"),
    ("IXIXX", "IIZZZ"),
]

SINGLE_QUBIT_SYNDROMES = {
    "X1": "001100",
    "Y1": "111100",
    "Z1": "110000",
    "X2": "000100",
    "Y2": "000110",
    "Z2": "000010",
    "X3": "000001",
    "Y3": "010001",
    "Z3": "010000",
    "X4": "001001",
    "Y4": "101011",
    "Z4": "100010",
    "X5": "001101",
    "Y5": "111111",
    "Z5": "110010",
}

# passive-group display over three consecutive frames
PASSIVE_DISPLAY = [
    ("IIIII", "IXIXX", "IIZZZ"),
    ("IZIZI", "IIZII", "IIIII"),
    ("IZIII", "IIXII", "IIIII"),
    ("IZIZI", "ZZIZI", "IIIII"),
]
PASSIVE_MIN_WEIGHTS = (2, 3)

CODEFILE = """\
# [5,1,1;1,1] example
code example
params n=5 k=1 l=1 r=1 c=1
circuit:
H 2
CNOT 2 3 D
CNOT 2 4 1+D
CNOT 2 5 D
H 3 4 5
CNOT 2 3 D
CNOT 2 5 D
H 2
CNOT 1 2 D
CNOT 1 4 1+D
CNOT 1 5 1+D
H 1 2 3 4 5
CNOT 1 3 D
CNOT 1 4 1+D
CNOT 1 5 1+D
SWAP 1 4
"""
