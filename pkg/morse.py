import logging

from errors import BlockNotInLanguageError, InsufficientPrefixError
from generators import apply, fixed_point_prefix
from language import has_BBb
from models import AncestorChain, LanguageTable, OneCutting, RecognizabilityResult, Substitution

logger = logging.getLogger(__name__)

MORSE = Substitution.morse()
ONE_BLOCKS = ('01', '10')
STOP_BLOCKS = ('0101', '1010')


def dual(letter: str) -> str:
    return '1' if letter == '0' else '0'


def morse_prefix(m: int) -> str:
    return fixed_point_prefix(MORSE, '0', m)


def syntactic_cuttings(w: str) -> list[OneCutting]:
    '''
    Every way of cutting w into 1-blocks, trying bars at even offsets first,
    then at odd offsets. A dangling first letter belongs to the 1-block
    ending with it, so its ancestor letter is its dual; a dangling last letter
    starts a 1-block whose ancestor letter is itself.
    '''
    cuttings = []
    for offset in (0, 1):
        if offset > len(w):
            break
        head = w[:offset]
        rest = w[offset:]
        pairs = tuple(rest[i:i + 2] for i in range(0, len(rest) - 1, 2))
        if any(pair not in ONE_BLOCKS for pair in pairs):
            continue
        trailing = rest[2 * len(pairs):]

        ancestor = [dual(head)] if head else []
        ancestor += [pair[0] for pair in pairs]
        if trailing:
            ancestor.append(trailing)
        cuttings.append(
            OneCutting(
                prefix_suffix=head or None,
                one_blocks=pairs,
                trailing_prefix=trailing or None,
                ancestor=''.join(ancestor),
            )
        )
    return cuttings


def one_cuttings(w: str, table: LanguageTable | None = None) -> list[OneCutting]:
    if not w or has_BBb(w) or (table is not None and w not in table):
        raise BlockNotInLanguageError(w)
    cuttings = syntactic_cuttings(w)
    if not cuttings:
        raise BlockNotInLanguageError(w)
    return cuttings


def ancestor_chain(w: str) -> AncestorChain:
    '''
    Desubstitute w repeatedly. Stops once the ancestor is shorter than 4 or
    is one of the ambiguous blocks 0101, 1010; a block with two cuttings
    before that point is returned as the branch point.
    '''
    chain = []
    current = w
    while True:
        cuttings = one_cuttings(current)
        if len(cuttings) != 1:
            logger.debug('ancestor chain of %s branches at %s', w, current)
            return AncestorChain(tuple(chain), branch_point=current, branches=tuple(cuttings))
        current = cuttings[0].ancestor
        chain.append(current)
        if len(current) < 4 or current in STOP_BLOCKS:
            return AncestorChain(tuple(chain))


def image_covers(cutting: OneCutting, w: str) -> bool:
    '''zeta(ancestor) contains w starting at the offset of the first bar.'''
    image = apply(MORSE, cutting.ancestor)
    return image[cutting.offset:cutting.offset + len(w)] == w


def dangling_letter_is_dual(w: str) -> bool:
    '''
    When the tail of w has a unique cutting with a bar right after its first
    letter, the first letter of w must be the dual of that letter.
    '''
    if len(w) < 2:
        return True
    cuttings = syntactic_cuttings(w[1:])
    if len(cuttings) != 1 or cuttings[0].offset != 1:
        return True
    return w[0] == dual(w[1])


def recognizability_index_check(K: int, sample_len: int) -> RecognizabilityResult:
    '''
    Whether (K+1)-blocks seen at even positions (the bars of the 1-cutting)
    never reappear at odd positions in the first sample_len letters of the
    Morse sequence.
    '''
    if K < 0:
        raise ValueError(f'K must be >= 0, got {K}')
    need = 16 * (K + 1)
    if sample_len < need:
        raise InsufficientPrefixError(sample_len, need, 'sample')

    omega = morse_prefix(sample_len)
    width = K + 1
    first_even = {}
    for n in range(0, sample_len - width + 1, 2):
        first_even.setdefault(omega[n:n + width], n)

    checked = 0
    for m in range(1, sample_len - width + 1, 2):
        checked += 1
        n = first_even.get(omega[m:m + width])
        if n is not None:
            logger.info('K=%d fails: block %s at bar %d and at %d', K, omega[m:m + width], n, m)
            return RecognizabilityResult(K, False, checked, (n, m))
    return RecognizabilityResult(K, True, checked)
