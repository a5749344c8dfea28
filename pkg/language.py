import logging
from collections.abc import Callable
from dataclasses import replace

from errors import (
    BlockNotInLanguageError,
    CertificationError,
    DepthRangeError,
    HorizonError,
    InsufficientPrefixError,
)
from models import Alphabet, Certification, LanguageTable

logger = logging.getLogger(__name__)

MIN_SCAN_LEN = 4096
SCAN_LEN_FACTOR = 64
MAX_SCAN_DOUBLINGS = 6


def default_scan_len(max_len: int) -> int:
    return max(MIN_SCAN_LEN, SCAN_LEN_FACTOR * max_len)


def scan_language(prefix: str, max_len: int, alphabet: Alphabet | None = None) -> LanguageTable:
    '''Collect every k-block (k <= max_len) occurring in prefix.'''
    if max_len < 1:
        raise ValueError(f'max_len must be >= 1, got {max_len}')
    if len(prefix) < max_len:
        raise InsufficientPrefixError(len(prefix), max_len)

    alphabet = alphabet or Alphabet.from_word(prefix)
    if not alphabet.spells(prefix):
        raise ValueError(f'prefix uses letters outside {alphabet.letters}')

    # Blocks at the top length, then shorter ones as their prefixes plus the
    # short blocks that only fit in the final stretch of the prefix.
    top = {prefix[i:i + max_len] for i in range(len(prefix) - max_len + 1)}
    blocks_by_len = [frozenset()] * (max_len + 1)
    blocks_by_len[max_len] = frozenset(top)
    tail_start = len(prefix) - max_len + 1
    for k in range(max_len - 1, 0, -1):
        shorter = {b[:k] for b in blocks_by_len[k + 1]}
        shorter.update(prefix[i:i + k] for i in range(tail_start, len(prefix) - k + 1))
        blocks_by_len[k] = frozenset(shorter)
    blocks_by_len[0] = frozenset({''})

    logger.info('scanned %d-letter prefix up to length %d', len(prefix), max_len)
    return LanguageTable(
        alphabet=alphabet,
        max_len=max_len,
        blocks_by_len=tuple(blocks_by_len),
        source_prefix_len=len(prefix),
        certification=Certification.HEURISTIC,
    )


def certify(table: LanguageTable, expected_complexity: Callable[[int], int]) -> LanguageTable:
    for k in range(1, table.max_len + 1):
        observed = table.complexity(k)
        expected = expected_complexity(k)
        if observed != expected:
            raise CertificationError(k, observed, expected)
    logger.debug('certified table up to length %d', table.max_len)
    return replace(table, certification=Certification.CERTIFIED)


def scan_until_stable(
    generate: Callable[[int], str],
    max_len: int,
    alphabet: Alphabet | None = None,
) -> LanguageTable:
    '''
    Scan longer and longer prefixes until the block counts survive one
    doubling unchanged. The result stays Heuristic.
    '''
    scan_len = default_scan_len(max_len)
    table = scan_language(generate(scan_len), max_len, alphabet)
    for _ in range(MAX_SCAN_DOUBLINGS):
        scan_len *= 2
        bigger = scan_language(generate(scan_len), max_len, alphabet)
        if bigger.counts() == table.counts():
            return bigger
        logger.debug('block counts still growing at scan length %d', scan_len)
        table = bigger
    logger.warning('block counts did not stabilize after %d doublings', MAX_SCAN_DOUBLINGS)
    return table


# ----------------------------------------------------------------------
#  Complexity functions
# ----------------------------------------------------------------------

def sturmian_complexity(n: int) -> int:
    return n + 1


def morse_complexity(n: int) -> int:
    '''
    Complexity of the Morse language. For n >= 3 write n = 2^r + q + 1 with
    0 < q <= 2^r; then p(n) = 3*2^r + 4q when 2q <= 2^r, else 4*2^r + 2q.
    '''
    if n < 0:
        raise ValueError(f'n must be >= 0, got {n}')
    if n <= 2:
        return (1, 2, 4)[n]
    r = (n - 2).bit_length() - 1
    q = n - 1 - 2 ** r
    if 2 * q <= 2 ** r:
        return 3 * 2 ** r + 4 * q
    return 4 * 2 ** r + 2 * q


# ----------------------------------------------------------------------
#  Extension queries
# ----------------------------------------------------------------------

def _require_extendable(table: LanguageTable, w: str):
    if len(w) + 1 > table.max_len:
        raise HorizonError(len(w) + 1, table.max_len)
    if w not in table:
        raise BlockNotInLanguageError(w)


def left_extensions(table: LanguageTable, w: str) -> frozenset[str]:
    _require_extendable(table, w)
    return frozenset(a for a in table.alphabet if a + w in table)


def right_extensions(table: LanguageTable, w: str) -> frozenset[str]:
    _require_extendable(table, w)
    return frozenset(a for a in table.alphabet if w + a in table)


def _check_length(table: LanguageTable, n: int):
    if not 1 <= n <= table.max_len - 1:
        raise DepthRangeError(n, 1, table.max_len - 1)


def left_special_blocks(table: LanguageTable, n: int) -> frozenset[str]:
    _check_length(table, n)
    return frozenset(w for w in table.blocks(n) if len(left_extensions(table, w)) >= 2)


def right_special_blocks(table: LanguageTable, n: int) -> frozenset[str]:
    _check_length(table, n)
    return frozenset(w for w in table.blocks(n) if len(right_extensions(table, w)) >= 2)


def is_balanced(table: LanguageTable, n: int, letter: str = '1') -> bool:
    weights = {w.count(letter) for w in table.blocks(n)}
    return not weights or max(weights) - min(weights) <= 1


def has_BBb(w: str) -> bool:
    '''True when w contains a factor B·B·b with b the first letter of B.'''
    size = len(w)
    for i in range(size):
        for k in range(1, (size - i - 1) // 2 + 1):
            if w[i + 2 * k] == w[i] and w[i:i + k] == w[i + k:i + 2 * k]:
                return True
    return False


def closure_violations(table: LanguageTable) -> list[str]:
    '''Blocks breaking factor closure or right-extension closure.'''
    bad = []
    for k in range(2, table.max_len + 1):
        shorter = table.blocks(k - 1)
        for w in table.blocks(k):
            if w[1:] not in shorter or w[:-1] not in shorter:
                bad.append(w)
    for k in range(1, table.max_len):
        for w in table.blocks(k):
            if not table.count_with_prefix(w, k + 1):
                bad.append(w)
    return bad
