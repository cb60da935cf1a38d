import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile(
    "repo",
    deadline=None,
    derandomize=True,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")


@pytest.fixture(params=["numba", "numpy"])
def backend(request, monkeypatch):
    """Run the test once per kernel backend."""
    if request.param == "numpy":
        monkeypatch.setenv("HYPERCHROM_DISABLE_JIT", "1")
    else:
        monkeypatch.delenv("HYPERCHROM_DISABLE_JIT", raising=False)
    return request.param
