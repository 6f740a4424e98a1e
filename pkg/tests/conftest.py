import pytest

from e8forms.chevalley import LieAlgebra
from e8forms.roots import RootSystem


@pytest.fixture(scope="session")
def e8():
    # shared across tests; the adjoint table is the expensive part
    return LieAlgebra(RootSystem("E8"))
