from importlib import resources
from pathlib import Path

import pytest

from gradstage.script import parse_script

DATA_DIR = Path(__file__).parent / "data"


def bundled_demo_bytes() -> bytes:
    return (
        resources.files("gradstage").joinpath("data/demo_performance.evt").read_bytes()
    )


@pytest.fixture(scope="session")
def demo_events():
    return parse_script(bundled_demo_bytes())
