import os
import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

SEED = int(os.environ.get("FREELANG_SEED", "20101"))


@pytest.fixture
def rng():
    return random.Random(SEED)


def pytest_report_header(config):
    return f"FREELANG_SEED={SEED}"


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is None or not acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in acceptance.format_results():
        terminalreporter.write_line(line)
