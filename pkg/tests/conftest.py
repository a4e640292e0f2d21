import importlib.resources

import pytest

from hypforge import builder, cayley, clifford, tableio


@pytest.fixture(scope="session")
def chain():
    return clifford.operator_chain()


@pytest.fixture(scope="session")
def oct_table():
    return cayley.cd_generate(3)


@pytest.fixture(scope="session")
def sed_spinor():
    return builder.spinor_pipeline()


@pytest.fixture(scope="session")
def gen_table():
    return builder.spinor_pipeline(emit_gen=True)


@pytest.fixture(scope="session")
def golden_table():
    ref = importlib.resources.files("hypforge") / "data" / "canonical_sedenion.json"
    return tableio.table_from_json(ref.read_text())
