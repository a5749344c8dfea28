import logging
from fractions import Fraction

import numpy as np

from errors import DirectiveExhaustedError, NotProlongableError
from models import DirectiveSpec, RationalSlope, Substitution

logger = logging.getLogger(__name__)


# ----------------------------------------------------------------------
#  Mechanical sequences
# ----------------------------------------------------------------------

def _floor_line(slope: RationalSlope, i: int) -> int:
    # floor(alpha * i + beta) in integers only
    num = slope.alpha_num * i * slope.beta_den + slope.beta_num * slope.alpha_den
    return num // (slope.alpha_den * slope.beta_den)


def _ceil_line(slope: RationalSlope, i: int) -> int:
    num = slope.alpha_num * i * slope.beta_den + slope.beta_num * slope.alpha_den
    return -(-num // (slope.alpha_den * slope.beta_den))


def lower_mechanical(slope: RationalSlope, n: int) -> str:
    '''x_i = floor(alpha(i+1) + beta) - floor(alpha*i + beta), i < n'''
    if n < 1:
        raise ValueError(f'n must be >= 1, got {n}')
    return ''.join(
        str(_floor_line(slope, i + 1) - _floor_line(slope, i)) for i in range(n)
    )


def upper_mechanical(slope: RationalSlope, n: int) -> str:
    '''x'_i = ceil(alpha(i+1) + beta) - ceil(alpha*i + beta), i < n'''
    if n < 1:
        raise ValueError(f'n must be >= 1, got {n}')
    return ''.join(
        str(_ceil_line(slope, i + 1) - _ceil_line(slope, i)) for i in range(n)
    )


# ----------------------------------------------------------------------
#  Standard sequences and the left special sequence
# ----------------------------------------------------------------------

def _next_standard(spec: DirectiveSpec, k: int, before: str, last: str) -> str:
    d = spec.term(k)
    if d is None:
        raise DirectiveExhaustedError(k, len(spec.terms))
    return last * d + before


def standard_sequence(spec: DirectiveSpec, k: int) -> str:
    '''s_k of s_{-1} = 1, s_0 = 0, s_n = s_{n-1}^{d_n} s_{n-2}.'''
    if k < -1:
        raise ValueError(f'k must be >= -1, got {k}')
    before, last = '1', '0'
    if k == -1:
        return before
    for n in range(1, k + 1):
        before, last = last, _next_standard(spec, n, before, last)
    return last


def left_special_prefix(spec: DirectiveSpec, m: int) -> str:
    '''First m letters of the left special sequence l = lim s_n.'''
    if m <= 0:
        return ''
    before, last = '1', '0'
    n = 0
    while n < 1 or len(last) < m:
        n += 1
        before, last = last, _next_standard(spec, n, before, last)
    return last[:m]


def slope_convergents(spec: DirectiveSpec, depth: int) -> list[Fraction]:
    '''Convergents of alpha = [0; 1 + d_1, d_2, ..., d_depth].'''
    partial = []
    for i in range(1, depth + 1):
        d = spec.term(i)
        if d is None:
            raise DirectiveExhaustedError(i, len(spec.terms))
        partial.append(d + 1 if i == 1 else d)

    convergents = []
    h_prev, h = 1, 0
    k_prev, k = 0, 1
    for a in partial:
        h_prev, h = h, a * h + h_prev
        k_prev, k = k, a * k + k_prev
        convergents.append(Fraction(h, k))
    return convergents


# ----------------------------------------------------------------------
#  Substitutions
# ----------------------------------------------------------------------

def apply(sub: Substitution, w: str) -> str:
    return ''.join(sub.images[a] for a in w)


def fixed_point_prefix(sub: Substitution, seed: str, m: int) -> str:
    if m < 1:
        raise ValueError(f'm must be >= 1, got {m}')
    image = sub.images[seed]
    if image == seed:
        return seed * m
    if not image.startswith(seed) or len(image) < 2:
        raise NotProlongableError(seed, image)

    w = seed
    while len(w) < m:
        w = apply(sub, w)
    logger.debug('fixed point of %s from %r: %d letters', sub.images, seed, len(w))
    return w[:m]


def incidence_matrix(sub: Substitution) -> np.ndarray:
    '''M[a, b] = number of occurrences of letter a in the image of b.'''
    letters = sub.alphabet.letters
    index = {a: i for i, a in enumerate(letters)}
    matrix = np.zeros((len(letters), len(letters)), dtype=np.int64)
    for b, image in sub.images.items():
        for a in image:
            matrix[index[a], index[b]] += 1
    return matrix


def is_primitive(sub: Substitution) -> bool:
    reach = (incidence_matrix(sub) > 0).astype(np.int64)
    d = len(sub.alphabet)
    bound = max(d * sub.max_image_len, (d - 1) ** 2 + 1)
    power = reach
    for _ in range(bound):
        if power.all():
            return True
        power = np.minimum(power @ reach, 1)
    return False
