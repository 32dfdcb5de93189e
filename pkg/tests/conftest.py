import pytest

from rlbwt_merge.text import TextCollection

ANIMALS_1 = ["CAT", "DOG", "ELEPHANT", "FOX", "HORSE", "PIG"]
ANIMALS_2 = ["FISH", "FROG", "LIZARD", "SNAKE"]
GATTACA = ["GATTACAT", "GATACAT", "GATTAGATA"]
GATTACA_RC = ["ATGTAATC", "ATGTATC", "TATCTAATC"]

_acceptance_lines = []


@pytest.fixture
def acceptance_log():
    return _acceptance_lines


@pytest.fixture
def animals():
    return (TextCollection.from_strings(ANIMALS_1, 1),
            TextCollection.from_strings(ANIMALS_2, 2))


@pytest.fixture
def fig2():
    return (TextCollection.from_strings(GATTACA, 1),
            TextCollection.from_strings(GATTACA_RC, 2))


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
