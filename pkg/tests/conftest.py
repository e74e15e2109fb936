import pytest

from classprod import build_group, cayley_rows
from classprod.scan import BUILTIN_SPECS

# groups small enough for the naive oracles
ORACLE_SPECS = (
    "cyclic:1",
    "cyclic:6",
    "cyclic:12",
    "sym:3",
    "sym:4",
    "dihedral:4",
    "dihedral:6",
    "alt:4",
    "q8",
    "es:3",
)


@pytest.fixture(scope="session")
def groups():
    return {spec: build_group(spec) for spec in BUILTIN_SPECS}


@pytest.fixture(scope="session")
def oracle_tables():
    return {spec: cayley_rows(build_group(spec)) for spec in ORACLE_SPECS}
