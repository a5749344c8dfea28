import logging

from errors import BlockNotInLanguageError, DepthRangeError, HorizonError, InsufficientPrefixError
from models import FollowerSet, LanguageTable, SignificanceVerdict, Verdict

logger = logging.getLogger(__name__)


def default_horizon(length: int) -> int:
    return 2 * length + 8


def _check_block(table: LanguageTable, w: str, H: int | None) -> int:
    '''Validate w against the table and return the horizon to search.'''
    if w not in table:
        raise BlockNotInLanguageError(w)
    capacity = table.max_len - len(w)
    if H is None:
        return capacity
    if H > capacity:
        raise HorizonError(len(w) + H, table.max_len)
    return H


def follower_horizon(table: LanguageTable, w: str, H: int) -> FollowerSet:
    _check_block(table, w, H)
    followers = frozenset(b[len(w):] for b in table.find_with_prefix(w, len(w) + H))
    return FollowerSet(base=w, horizon=H, followers=followers)


def is_significant(table: LanguageTable, w: str, H: int | None = None) -> SignificanceVerdict:
    '''
    Search for a witness v, |v| <= H, with tail(w)·v in the language and
    w·v outside it. Shortest witness first, then lexicographic.

    H=None searches up to the capacity of the table.
    '''
    if not w:
        raise ValueError('significance is defined for nonempty blocks')
    H = _check_block(table, w, H)
    if len(w) == 1:
        return SignificanceVerdict(w, Verdict.SIGNIFICANT_WITNESSED, H, witness='')

    tail = w[1:]
    for h in range(1, H + 1):
        # fol_h(w) is contained in fol_h(tail), so a witness exists iff the counts differ
        if table.count_with_prefix(tail, len(tail) + h) > table.count_with_prefix(w, len(w) + h):
            after_tail = {b[len(tail):] for b in table.find_with_prefix(tail, len(tail) + h)}
            after_w = {b[len(w):] for b in table.find_with_prefix(w, len(w) + h)}
            witness = min(after_tail - after_w)
            return SignificanceVerdict(w, Verdict.SIGNIFICANT_WITNESSED, H, witness=witness)
    return SignificanceVerdict(w, Verdict.NOT_SIGNIFICANT_UP_TO, H)


def sig(table: LanguageTable, w: str, H: int | None = None) -> str:
    '''Longest suffix of w judged significant at horizon H.'''
    if not w:
        raise ValueError('sig is defined for nonempty blocks')
    _check_block(table, w, H)
    for k in range(len(w), 1, -1):
        if is_significant(table, w[-k:], H).significant:
            return w[-k:]
    return w[-1:]


# ----------------------------------------------------------------------
#  Closed forms
# ----------------------------------------------------------------------

def sturmian_significant_blocks(l_prefix: str, n: int) -> frozenset[str]:
    if n < 1:
        raise ValueError(f'n must be >= 1, got {n}')
    if n == 1:
        return frozenset({'0', '1'})
    if len(l_prefix) < n - 1:
        raise InsufficientPrefixError(len(l_prefix), n - 1, 'left special prefix')
    spine = l_prefix[:n - 1]
    return frozenset({'0' + spine, '1' + spine})


def sturmian_sig(l_prefix: str, w: str) -> str:
    '''Longest suffix of w of the form x·L_{k-1}.'''
    if not w:
        raise ValueError('sig is defined for nonempty blocks')
    if len(l_prefix) < len(w) - 1:
        raise InsufficientPrefixError(len(l_prefix), len(w) - 1, 'left special prefix')
    for k in range(len(w), 1, -1):
        if w[-k + 1:] == l_prefix[:k - 1]:
            return w[-k:]
    return w[-1:]


def morse_is_significant(table: LanguageTable, w: str) -> bool:
    '''A Morse block a·tail is significant iff 0·tail and 1·tail are both blocks.'''
    if not table.certified:
        raise ValueError('the Morse significance rule needs a certified Morse table')
    if w not in table:
        raise BlockNotInLanguageError(w)
    if len(w) > table.max_len - 1:
        raise HorizonError(len(w) + 1, table.max_len)
    if len(w) <= 1:
        return True
    tail = w[1:]
    return '0' + tail in table and '1' + tail in table


def morse_sig(table: LanguageTable, w: str) -> str:
    for k in range(len(w), 1, -1):
        if morse_is_significant(table, w[-k:]):
            return w[-k:]
    return w[-1:]


# ----------------------------------------------------------------------
#  Depth probe
# ----------------------------------------------------------------------

def significant_depths(
    table: LanguageTable,
    prefix: str,
    p: int,
    Nmax: int,
    H: int,
) -> list[int]:
    '''
    Depths N <= Nmax at which the N-block ending at position p,
    prefix[p-N+1..p], is witnessed significant.
    '''
    if p - Nmax < 0 or p >= len(prefix):
        raise DepthRangeError(p, Nmax, len(prefix) - 1)
    if Nmax + H > table.max_len:
        raise HorizonError(Nmax + H, table.max_len)

    depths = [
        N for N in range(1, Nmax + 1)
        if is_significant(table, prefix[p - N + 1:p + 1], H).significant
    ]
    logger.debug('position %d: significant depths %s', p, depths)
    return depths
