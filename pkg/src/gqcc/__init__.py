"""Grandfather quantum convolutional codes over binary Laurent polynomials."""

from .circuit import (
    Circuit,
    Cnot,
    Hadamard,
    Swap,
    apply_circuit,
    apply_gate,
    conjugate_pauli,
    invert,
)
from .codefile import CodefileError, CodeSpec, format_codefile, parse_codefile
from .decoder import (
    PairStatus,
    SyndromeTable,
    build_syndrome_table,
    check_correctable_set,
    decode_lookup,
    is_passively_corrected,
    syndrome_of,
)
from .gf2poly import LaurentPoly
from .pauli import PauliElement, compose, symplectic_product_poly, weight
from .simulator import (
    Custom,
    Depolarizing,
    ResidualClass,
    SimReport,
    SingleQubitAlternating,
    estimate_logical_rate,
    run_trial,
)
from .stabilizer import (
    CodeParams,
    GrandfatherCode,
    PolyMatrix,
    alice_restriction,
    build_initial_stabilizer,
    build_initial_subgroups,
    initial_code,
    validate_symplectic,
)

__version__ = "0.1.0"
