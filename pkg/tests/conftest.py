import sys

import pytest


@pytest.fixture(scope="session")
def skimage_samples():
    pytest.importorskip("skimage")
    from imply_afa.imaging import samples
    return samples


def pytest_terminal_summary(terminalreporter):
    # print the per-criterion lines collected by the acceptance suite
    module = next((m for name, m in list(sys.modules.items()) if name.endswith("test_acceptance")), None)
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        terminalreporter.write_line(results[number])
