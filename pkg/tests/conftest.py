import os

import pytest

EXTENDED = os.environ.get("KAPSUPP_EXTENDED") == "1"

# criterion number -> (passed, detail), filled by the acceptance tests
CRITERIA: dict = {}


def pytest_collection_modifyitems(config, items):
    if EXTENDED:
        return
    skip = pytest.mark.skip(reason="extended run, set KAPSUPP_EXTENDED=1")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(CRITERIA, key=lambda k: (int(str(k).split(".")[0]), str(k))):
        ok, detail = CRITERIA[key]
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'}  {detail}")


@pytest.fixture
def criterion():
    """Record a pass/fail line for an acceptance criterion and print it."""

    def record(key, ok, detail=""):
        CRITERIA[key] = (bool(ok), detail)
        print(f"criterion {key}: {'PASS' if ok else 'FAIL'}  {detail}")
        return ok

    return record


@pytest.fixture(scope="session")
def cache_dir(tmp_path_factory):
    """Census cache; KAPSUPP_CACHE_DIR reuses graphs across runs."""
    path = os.environ.get("KAPSUPP_CACHE_DIR")
    return path if path else str(tmp_path_factory.mktemp("census"))


@pytest.fixture(scope="session")
def catalog():
    from kapsupp.catalog import load_catalog

    return load_catalog()
