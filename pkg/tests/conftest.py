import pytest

from rahmanisort import warm_kernels


@pytest.fixture(scope="session", autouse=True)
def warmed_kernels():
    # compile every kernel once up front so no test pays for JIT inside a
    # timed or budgeted section
    warm_kernels()
