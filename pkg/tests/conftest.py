import pytest


def pytest_addoption(parser):
    parser.addoption(
        "--heavy",
        action="store_true",
        default=False,
        help="run the flagged heavy paths (n=5 rank/kernel, n=6 cells, order-3 series); expect minutes",
    )


def pytest_configure(config):
    config.addinivalue_line("markers", "heavy: opt-in heavy verification paths")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--heavy"):
        return
    skip = pytest.mark.skip(reason="heavy path: pass --heavy to run")
    for item in items:
        if "heavy" in item.keywords:
            item.add_marker(skip)
