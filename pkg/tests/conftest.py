import pytest

from cospow.exact import EvalContext


@pytest.fixture(scope="session")
def ctx():
    """Shared 256-bit context; tolerance 2^-128."""
    return EvalContext(256)


@pytest.fixture(scope="session")
def ctx_hi():
    """Higher-precision context for convergence sweeps."""
    return EvalContext(384)
