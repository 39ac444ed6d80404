import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import reference  # noqa: E402

from gqcc.circuit import apply_circuit  # noqa: E402
from gqcc.decoder import build_syndrome_table, single_qubit_errors  # noqa: E402
from gqcc.pauli import PauliElement  # noqa: E402
from gqcc.stabilizer import CodeParams, initial_code  # noqa: E402

EXAMPLE_PARAMS = CodeParams(n=5, k=1, l=1, r=1, c=1)


@pytest.fixture(scope="session")
def params():
    return EXAMPLE_PARAMS


@pytest.fixture(scope="session")
def unencoded():
    return initial_code(EXAMPLE_PARAMS)


@pytest.fixture(scope="session")
def code(unencoded):
    return apply_circuit(unencoded, reference.CIRCUIT)


@pytest.fixture(scope="session")
def table(code):
    return build_syndrome_table(code, single_qubit_errors(5))


@pytest.fixture(scope="session")
def passive_elements():
    return [
        PauliElement.from_frames(dict(enumerate(frames)), width=5)
        for frames in reference.PASSIVE_DISPLAY
    ]


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
