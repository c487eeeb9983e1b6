import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from emdkit._kernels import warmup


@pytest.fixture(scope="session", autouse=True)
def _compiled_kernels():
    # JIT-compile (or load from cache) outside any timed region
    warmup()


def corr(a, b) -> float:
    """Pearson correlation, 0.0 when either side is constant."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.std() == 0.0 or b.std() == 0.0:
        return 0.0
    return float(np.corrcoef(a, b)[0, 1])
