import pytest


def pytest_addoption(parser):
    parser.addoption(
        "--run-slow", action="store_true", default=False,
        help="run the long exhaustive scans (n=7 tables, icosidodecahedron, "
             "the n=6 conjecture search)")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-slow"):
        return
    if config.getoption("-m"):
        return  # an explicit marker expression overrides the default skip
    skip = pytest.mark.skip(reason="slow scan: rerun with --run-slow or -m slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)
