import pytest

from grouptensor import group_from_spec, tensor_square


@pytest.fixture(scope="session")
def groups():
    """Groups by spec string, built once per session."""
    cache = {}

    def get(spec: str):
        if spec not in cache:
            cache[spec] = group_from_spec(spec)
        return cache[spec]

    return get


@pytest.fixture(scope="session")
def tensors(groups):
    """Tensor squares by spec string (backed by the module-level memo)."""

    def get(spec: str):
        return tensor_square(groups(spec))

    return get
