from itertools import product

import pytest

from generators import fixed_point_prefix, left_special_prefix
from language import certify, morse_complexity, scan_language, sturmian_complexity
from models import (
    BINARY,
    FIBONACCI_DIRECTIVE,
    PI_OVER_FOUR_DIRECTIVE,
    Certification,
    LanguageTable,
    Substitution,
)
from morse import morse_prefix

PREFIX_LEN = 2 ** 14
TABLE_LEN = 160
PI_OVER_FOUR_LEN = 32763


@pytest.fixture(scope='session')
def fibonacci_prefix() -> str:
    return fixed_point_prefix(Substitution.fibonacci(), '0', PREFIX_LEN)


@pytest.fixture(scope='session')
def fibonacci_l() -> str:
    return left_special_prefix(FIBONACCI_DIRECTIVE, PREFIX_LEN)


@pytest.fixture(scope='session')
def fibonacci_table(fibonacci_prefix) -> LanguageTable:
    return certify(scan_language(fibonacci_prefix, TABLE_LEN), sturmian_complexity)


@pytest.fixture(scope='session')
def pi4_l() -> str:
    return left_special_prefix(PI_OVER_FOUR_DIRECTIVE, PI_OVER_FOUR_LEN)


@pytest.fixture(scope='session')
def pi4_table(pi4_l) -> LanguageTable:
    return certify(scan_language(pi4_l, TABLE_LEN), sturmian_complexity)


@pytest.fixture(scope='session')
def morse_word() -> str:
    return morse_prefix(2 ** 16)


@pytest.fixture(scope='session')
def morse_table(morse_word) -> LanguageTable:
    return certify(scan_language(morse_word, TABLE_LEN), morse_complexity)


@pytest.fixture(scope='session')
def full_shift_table():
    '''Factory for the table of every binary word up to a given length.'''

    def make(max_len: int) -> LanguageTable:
        blocks = tuple(
            frozenset(''.join(w) for w in product('01', repeat=k))
            for k in range(max_len + 1)
        )
        return LanguageTable(BINARY, max_len, blocks, 0, Certification.CERTIFIED)

    return make
