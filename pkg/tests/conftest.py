import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "extended: long-running table rows (opt in with -m extended)"
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("-m"):
        return
    if os.environ.get("HOFFMAN_EXTENDED"):
        return
    skip = pytest.mark.skip(reason="extended row; run with -m extended or HOFFMAN_EXTENDED=1")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip)
