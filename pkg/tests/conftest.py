from __future__ import annotations

import pytest

from srkit.field import FieldSpec, QQ

GF2 = FieldSpec.gf(2)
GF3 = FieldSpec.gf(3)

# filled by tests/test_acceptance.py, printed at the end of the run
ACCEPTANCE: dict[int, tuple[str, str]] = {}


@pytest.fixture(params=[QQ, GF2], ids=["QQ", "GF2"])
def fld(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        status, title = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:>2}: {status}  {title}")
