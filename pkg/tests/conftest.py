import pytest

from tdrl import _purepy

try:
    from tdrl import _kernels
except ImportError:  # extension not built
    _kernels = None

BACKENDS = [_purepy] + ([_kernels] if _kernels is not None else [])


@pytest.fixture(params=BACKENDS, ids=lambda m: m.NAME)
def backend(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, name, ok, seconds, budget in sorted(RESULTS):
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"{status}  [{number:2d}] {name}  ({seconds:.2f}s / budget {budget:g}s)")
