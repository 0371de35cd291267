import json
from pathlib import Path

import pytest

from gbmoments.partitions import ColoredPairPartition, colored_from_json

FIXTURES = Path(__file__).parent / "fixtures"


def load_fixture(name: str):
    with open(FIXTURES / name) as fh:
        return json.load(fh)


@pytest.fixture
def twelve_point() -> ColoredPairPartition:
    return colored_from_json(load_fixture("twelve_point.json"))


@pytest.fixture
def twelve_point_expected() -> dict:
    return load_fixture("twelve_point_expected.json")
