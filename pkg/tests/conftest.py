import itertools

import pytest

from efsynth import Sample

LEXICON_P = ("stviil", "stviie")
LEXICON_N = ("ktvive", "stpiie")


def words(alphabet, max_len, min_len=1):
    for n in range(min_len, max_len + 1):
        for letters in itertools.product(alphabet, repeat=n):
            yield "".join(letters)


@pytest.fixture
def lexicon():
    return Sample(LEXICON_P, LEXICON_N)


def pytest_terminal_summary(terminalreporter):
    import test_acceptance
    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
