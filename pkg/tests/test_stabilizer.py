from dataclasses import replace

import pytest
import reference
from hypothesis import given
from hypothesis import strategies as st

from gqcc.gf2poly import ONE, ZERO
from gqcc.pauli import PauliElement, symplectic_product_poly
from gqcc.stabilizer import (
    CodeParams,
    PolyMatrix,
    alice_restriction,
    build_initial_stabilizer,
    build_initial_subgroups,
    initial_code,
    validate_symplectic,
)


@st.composite
def code_params(draw):
    n = draw(st.integers(1, 7))
    c = draw(st.integers(0, n))
    r = draw(st.integers(0, n - c))
    l = draw(st.integers(0, n - c - r))  # noqa: E741
    k = draw(st.integers(0, n - c - r - l))
    return CodeParams(n=n, k=k, l=l, r=r, c=c)


def test_params_ancillas():
    assert CodeParams(5, 1, 1, 1, 1).a == 1
    with pytest.raises(ValueError, match="a = n-k-l-c-r"):
        CodeParams(3, 1, 1, 1, 1)
    with pytest.raises(ValueError):
        CodeParams(5, -1, 0, 0, 0)


def test_initial_stabilizer_example(params):
    assert build_initial_stabilizer(params) == reference.INITIAL_STABILIZER


def test_initial_stabilizer_without_ebits():
    m = build_initial_stabilizer(CodeParams(n=4, k=1, l=1, r=0, c=0))
    assert m.width == 4
    assert len(m) == 2
    assert m[0] == PauliElement.single(4, 1, "Z")
    assert m[1] == PauliElement.single(4, 2, "Z")


def test_initial_stabilizer_single_qubit():
    m = build_initial_stabilizer(CodeParams(n=1, k=0, l=0, r=0, c=0))
    assert m.rows == (PauliElement.single(1, 1, "Z"),)


def test_initial_subgroups_example(params):
    s_e, s_i, s_g, s_c = build_initial_subgroups(params)
    assert s_e == reference.INITIAL_S_E
    assert s_i == reference.INITIAL_S_I
    assert s_g == reference.INITIAL_S_G
    assert s_c == reference.INITIAL_S_C


def test_empty_gauge_and_classical():
    _, _, s_g, s_c = build_initial_subgroups(CodeParams(n=3, k=1, l=0, r=0, c=1))
    assert len(s_g) == 0 and len(s_c) == 0
    assert s_g.width == 3


def test_validate_symplectic(unencoded, code):
    assert validate_symplectic(unencoded.stabilizer)
    assert validate_symplectic(code.stabilizer)
    # drop Bob's X from the XX ebit row: Alice's lone X now anticommutes with ZZ
    rows = list(unencoded.stabilizer.rows)
    row = rows[1]
    rows[1] = PauliElement(row.width, row.z, (row.x[0] + ONE,) + row.x[1:])
    assert not validate_symplectic(PolyMatrix(6, tuple(rows)))


def test_commuting_mutation_passes_symplectic_but_not_structure(unencoded):
    # ZZ -> YZ still commutes with XX, so only the layout check catches it
    rows = list(unencoded.stabilizer.rows)
    row = rows[0]
    rows[0] = PauliElement(row.width, row.z, (row.x[0] + ONE,) + row.x[1:])
    mutated = PolyMatrix(6, tuple(rows))
    assert validate_symplectic(mutated)
    bad = replace(unencoded, stabilizer=mutated)
    assert bad.structure_problems()
    assert unencoded.structure_problems() == []


def test_validate_catches_self_anticommuting_row():
    row = PauliElement.from_frames({0: "X", 1: "Z"})
    assert not validate_symplectic(PolyMatrix(1, (row,)))


def test_alice_restriction(params, unencoded, code):
    top = PolyMatrix(6, unencoded.stabilizer.rows[:2])
    assert alice_restriction(top, params) == reference.INITIAL_S_E
    assert alice_restriction(PolyMatrix(6, (PauliElement.identity(6),)), params)[0].is_identity()
    local = alice_restriction(code.stabilizer, params)
    assert PolyMatrix(5, local.rows[:2]) == reference.ENCODED_S_E
    assert PolyMatrix(5, local.rows[2:]) == reference.ENCODED_S_I
    with pytest.raises(ValueError):
        alice_restriction(reference.INITIAL_S_E, params)


def test_shift_equivalence():
    m = reference.ENCODED_S_I
    shifted = PolyMatrix(5, tuple(r.shift(3) for r in m))
    assert shifted != m
    assert shifted.shift_equivalent(m)
    assert not reference.ENCODED_S_C.shift_equivalent(m)


def test_format_layout():
    text = reference.ENCODED_S_C.format()
    assert text == "[ 1 D^-1+1 0 D^-1+1 0 | 0 0 0 0 0 ]"


@given(code_params())
def test_initial_objects_are_consistent(p):
    m = build_initial_stabilizer(p)
    assert m.width == p.c + p.n
    assert len(m) == 2 * p.c + p.a == p.num_generators
    assert validate_symplectic(m)
    code = initial_code(p)
    assert code.structure_problems() == []
    s_e, s_i, s_g, s_c = build_initial_subgroups(p)
    assert (len(s_e), len(s_i), len(s_g), len(s_c)) == (2 * p.c, p.a, 2 * p.r, p.l)
    rows = list(s_e) + list(s_i) + list(s_g) + list(s_c)
    pairs = {(j, j + p.c) for j in range(p.c)}
    off = 2 * p.c + p.a
    pairs |= {(off + j, off + j + p.r) for j in range(p.r)}
    for i, a in enumerate(rows):
        for j, b in enumerate(rows):
            expect = ONE if (i, j) in pairs or (j, i) in pairs else ZERO
            assert symplectic_product_poly(a, b) == expect
    # Bob's column j pairs with Alice's ebit half j
    assert alice_restriction(PolyMatrix(m.width, m.rows[: 2 * p.c]), p) == s_e
