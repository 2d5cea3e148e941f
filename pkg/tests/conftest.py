import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from spechtcomb import _pykernels  # noqa: E402

try:
    from spechtcomb import _ckernels
except ImportError:  # pragma: no cover - extension not built
    _ckernels = None

BACKENDS = [pytest.param(_pykernels, id="python")]
if _ckernels is not None:
    BACKENDS.append(pytest.param(_ckernels, id="cython"))


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param
