import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from binary_k1.fields import GF, QQ  # noqa: E402

F101 = GF(101)
FIELDS = [QQ, F101]


@pytest.fixture(params=FIELDS, ids=["Q", "F101"])
def field(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[key])
