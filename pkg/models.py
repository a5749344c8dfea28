from bisect import bisect_left
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import cached_property
from pathlib import Path

from errors import ConfigError

Block = str

DAGGER = '†'


@dataclass(frozen=True)
class Alphabet:
    letters: tuple[str, ...]

    def __post_init__(self):
        if not self.letters:
            raise ValueError('alphabet must not be empty')
        if len(set(self.letters)) != len(self.letters):
            raise ValueError(f'duplicate letters in alphabet: {self.letters}')
        if any(len(a) != 1 for a in self.letters):
            raise ValueError(f'letters must be single characters: {self.letters}')

    @classmethod
    def from_word(cls, word: str) -> 'Alphabet':
        letters = set(word)
        if letters <= set(BINARY.letters):
            return BINARY
        return cls(tuple(sorted(letters)))

    def __contains__(self, letter) -> bool:
        return letter in self.letters

    def __iter__(self):
        return iter(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def spells(self, w: str) -> bool:
        return all(a in self.letters for a in w)


BINARY = Alphabet(('0', '1'))


class Certification(str, Enum):
    CERTIFIED = 'certified'
    HEURISTIC = 'heuristic'


@dataclass(frozen=True)
class LanguageTable:
    '''
    All blocks of each length 0..max_len seen in a scanned prefix.

    blocks_by_len[k] holds the k-blocks; index 0 holds the empty block.
    '''

    alphabet: Alphabet
    max_len: int
    blocks_by_len: tuple[frozenset[str], ...]
    source_prefix_len: int
    certification: Certification = Certification.HEURISTIC

    def blocks(self, k: int) -> frozenset[str]:
        if 0 <= k <= self.max_len:
            return self.blocks_by_len[k]
        return frozenset()

    def __contains__(self, w) -> bool:
        return len(w) <= self.max_len and w in self.blocks_by_len[len(w)]

    def complexity(self, k: int) -> int:
        return len(self.blocks(k))

    def counts(self) -> list[int]:
        return [len(self.blocks_by_len[k]) for k in range(1, self.max_len + 1)]

    @property
    def certified(self) -> bool:
        return self.certification == Certification.CERTIFIED

    # ------------------------------------------------------------------
    #  Prefix-range lookups
    # ------------------------------------------------------------------

    @cached_property
    def _sorted(self) -> tuple[tuple[str, ...], ...]:
        return tuple(tuple(sorted(bs)) for bs in self.blocks_by_len)

    def _range(self, prefix: str, length: int) -> tuple[int, int]:
        ordered = self._sorted[length]
        lo = bisect_left(ordered, prefix)
        hi = bisect_left(ordered, prefix + '\U0010ffff', lo)
        return lo, hi

    def find_with_prefix(self, prefix: str, length: int) -> tuple[str, ...]:
        '''Sorted blocks of the given length that start with prefix.'''
        if not 0 <= length <= self.max_len:
            return ()
        lo, hi = self._range(prefix, length)
        return self._sorted[length][lo:hi]

    def count_with_prefix(self, prefix: str, length: int) -> int:
        if not 0 <= length <= self.max_len:
            return 0
        lo, hi = self._range(prefix, length)
        return hi - lo


@dataclass(frozen=True)
class DirectiveSpec:
    terms: tuple[int, ...]
    period: tuple[int, ...] = ()

    def __post_init__(self):
        if not self.terms and not self.period:
            raise ValueError('directive needs at least one term')
        if self.terms and self.terms[0] < 0:
            raise ValueError(f'd_1 must be >= 0, got {self.terms[0]}')
        if any(d <= 0 for d in self.terms[1:]):
            raise ValueError(f'd_i must be > 0 for i > 1: {self.terms}')
        if any(d <= 0 for d in self.period):
            raise ValueError(f'periodic terms must be > 0: {self.period}')

    @property
    def available(self) -> int | None:
        '''Number of usable terms, None when a periodic tail makes it unbounded.'''
        return None if self.period else len(self.terms)

    def term(self, i: int) -> int | None:
        '''d_i (1-based), or None once the directive runs out.'''
        if i <= len(self.terms):
            return self.terms[i - 1]
        if not self.period:
            return None
        return self.period[(i - len(self.terms) - 1) % len(self.period)]

    def __str__(self):
        parts = [str(d) for d in self.terms]
        if self.period:
            parts.append('(' + ','.join(str(d) for d in self.period) + ')')
        return ','.join(parts)


FIBONACCI_DIRECTIVE = DirectiveSpec((), (1,))
PI_OVER_FOUR_DIRECTIVE = DirectiveSpec((0, 3, 1, 1, 1, 15, 2, 72))


@dataclass(frozen=True)
class RationalSlope:
    alpha_num: int
    alpha_den: int
    beta_num: int = 0
    beta_den: int = 1

    def __post_init__(self):
        if self.alpha_den <= 0 or self.beta_den <= 0:
            raise ValueError('denominators must be positive')
        if not (0 <= self.alpha <= 1 and 0 <= self.beta <= 1):
            raise ValueError(f'slope and intercept must lie in [0, 1]: {self.alpha}, {self.beta}')

    @classmethod
    def of(cls, alpha: Fraction | int, beta: Fraction | int = 0) -> 'RationalSlope':
        alpha, beta = Fraction(alpha), Fraction(beta)
        return cls(alpha.numerator, alpha.denominator, beta.numerator, beta.denominator)

    @property
    def alpha(self) -> Fraction:
        return Fraction(self.alpha_num, self.alpha_den)

    @property
    def beta(self) -> Fraction:
        return Fraction(self.beta_num, self.beta_den)


@dataclass(frozen=True)
class Substitution:
    alphabet: Alphabet
    images: dict[str, str]

    def __post_init__(self):
        missing = [a for a in self.alphabet if a not in self.images]
        if missing:
            raise ValueError(f'no image for letters {missing}')
        for a, image in self.images.items():
            if a not in self.alphabet:
                raise ValueError(f'image given for unknown letter {a!r}')
            if not image:
                raise ValueError(f'empty image for {a!r}')
            if not self.alphabet.spells(image):
                raise ValueError(f'image of {a!r} leaves the alphabet: {image!r}')

    @classmethod
    def from_images(cls, images: dict[str, str]) -> 'Substitution':
        letters = set(images) | {c for image in images.values() for c in image}
        return cls(Alphabet.from_word(''.join(letters)), dict(images))

    @classmethod
    def morse(cls) -> 'Substitution':
        return cls(BINARY, {'0': '01', '1': '10'})

    @classmethod
    def fibonacci(cls) -> 'Substitution':
        return cls(BINARY, {'0': '01', '1': '0'})

    @property
    def max_image_len(self) -> int:
        return max(len(image) for image in self.images.values())

    def __eq__(self, other):
        if not isinstance(other, Substitution):
            return NotImplemented
        return self.alphabet == other.alphabet and self.images == other.images

    def __hash__(self):
        return hash((self.alphabet, tuple(sorted(self.images.items()))))


@dataclass(frozen=True)
class FollowerSet:
    base: str
    horizon: int
    followers: frozenset[str]


class Verdict(str, Enum):
    SIGNIFICANT_WITNESSED = 'significant-witnessed'
    NOT_SIGNIFICANT_UP_TO = 'not-significant-up-to'


@dataclass(frozen=True)
class SignificanceVerdict:
    block: str
    verdict: Verdict
    horizon: int
    witness: str | None = None

    @property
    def significant(self) -> bool:
        return self.verdict == Verdict.SIGNIFICANT_WITNESSED


class Provenance(str, Enum):
    GENERIC = 'generic'
    STURMIAN_CLOSED_FORM = 'sturmian-closed-form'
    MORSE_RULE = 'morse-rule'


@dataclass(frozen=True, order=True)
class Arrow:
    source: str
    target: str

    @property
    def letter(self) -> str:
        return self.target[-1]


@dataclass(frozen=True)
class HBDiagram:
    vertices: frozenset[str]
    arrows: frozenset[Arrow]
    depth_bound: int
    provenance: Provenance
    horizon: int | None = None
    system: str = ''

    @cached_property
    def _out(self) -> dict[str, tuple[Arrow, ...]]:
        out: dict[str, list[Arrow]] = {}
        for arrow in sorted(self.arrows):
            out.setdefault(arrow.source, []).append(arrow)
        return {v: tuple(arrows) for v, arrows in out.items()}

    def out_arrows(self, v: str) -> tuple[Arrow, ...]:
        return self._out.get(v, ())

    def successors(self, v: str) -> tuple[str, ...]:
        return tuple(a.target for a in self.out_arrows(v))

    def out_degree(self, v: str) -> int:
        return len(self.out_arrows(v))

    def is_frontier(self, arrow: Arrow) -> bool:
        return len(arrow.target) > self.depth_bound

    @property
    def frontier(self) -> frozenset[str]:
        return frozenset(a.target for a in self.arrows if self.is_frontier(a))

    @property
    def roots(self) -> tuple[str, ...]:
        return tuple(sorted(v for v in self.vertices if len(v) == 1))

    def vertices_of_length(self, k: int) -> tuple[str, ...]:
        return tuple(sorted(v for v in self.vertices if len(v) == k))

    @property
    def sorted_vertices(self) -> list[str]:
        return sorted(self.vertices, key=lambda v: (len(v), v))

    @property
    def sorted_arrows(self) -> list[Arrow]:
        return sorted(self.arrows, key=lambda a: (len(a.source), a.source, a.target))


@dataclass(frozen=True)
class DiagramPath:
    vertices: tuple[str, ...]

    def __post_init__(self):
        if not self.vertices:
            raise ValueError('a path has at least one vertex')

    @property
    def length(self) -> int:
        '''Number of vertices, not arrows.'''
        return len(self.vertices)

    @property
    def rooted(self) -> bool:
        return len(self.vertices[0]) == 1

    @property
    def terminal(self) -> str:
        return self.vertices[-1]

    def __str__(self):
        return '→'.join(self.vertices)


@dataclass(frozen=True)
class DiagramComparison:
    missing_vertices: frozenset[str] = frozenset()
    extra_vertices: frozenset[str] = frozenset()
    missing_arrows: frozenset[Arrow] = frozenset()
    extra_arrows: frozenset[Arrow] = frozenset()

    @property
    def equal(self) -> bool:
        return not (self.missing_vertices or self.extra_vertices
                    or self.missing_arrows or self.extra_arrows)

    def __bool__(self):
        return self.equal


@dataclass(frozen=True)
class BijectionReport:
    n: int
    path_count: int
    block_count: int
    collisions: dict[str, tuple[DiagramPath, ...]] = field(default_factory=dict)
    missing: frozenset[str] = frozenset()
    extra: frozenset[str] = frozenset()

    @property
    def ok(self) -> bool:
        return not (self.collisions or self.missing or self.extra)


@dataclass(frozen=True)
class OneCutting:
    prefix_suffix: str | None
    one_blocks: tuple[str, ...]
    trailing_prefix: str | None
    ancestor: str

    @property
    def offset(self) -> int:
        return 0 if self.prefix_suffix is None else 1

    def reassemble(self) -> str:
        return (self.prefix_suffix or '') + ''.join(self.one_blocks) + (self.trailing_prefix or '')

    def daggered(self) -> str:
        '''The cutting written with daggers at the bars, e.g. 0†01†10†10†0.'''
        parts = ([self.prefix_suffix] if self.prefix_suffix else []) + list(self.one_blocks)
        if self.trailing_prefix:
            parts.append(self.trailing_prefix)
        return DAGGER.join(parts)


@dataclass(frozen=True)
class AncestorChain:
    blocks: tuple[str, ...]
    branch_point: str | None = None
    branches: tuple[OneCutting, ...] = ()

    @property
    def complete(self) -> bool:
        return self.branch_point is None


@dataclass(frozen=True)
class RecognizabilityResult:
    K: int
    holds: bool
    positions_checked: int
    counterexample: tuple[int, int] | None = None

    def __bool__(self):
        return self.holds


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ''


class SystemKind(str, Enum):
    FIBONACCI = 'fibonacci'
    STURMIAN = 'sturmian'
    MORSE = 'morse'
    SUBSTITUTION = 'substitution'


OUTPUT_FORMATS = ('dot', 'json', 'report')
BUILDERS = ('auto', 'generic', 'sturmian', 'morse')


@dataclass(frozen=True)
class JobConfig:
    system: SystemKind = SystemKind.FIBONACCI
    directive: DirectiveSpec | None = None
    images: tuple[tuple[str, str], ...] | None = None
    seed: str = '0'
    depth: int = 8
    horizon: int | None = None
    scan_len: int | None = None
    outputs: tuple[str, ...] = ('report',)
    out: Path | None = None
    builder: str = 'auto'

    @property
    def resolved_horizon(self) -> int:
        if self.horizon is not None:
            return self.horizon
        return 2 * (self.depth + 1) + 8

    @property
    def table_len(self) -> int:
        '''Longest block length a depth-N diagram build looks at.'''
        return self.depth + 1 + self.resolved_horizon

    @property
    def resolved_scan_len(self) -> int:
        if self.scan_len is not None:
            return self.scan_len
        return max(4096, 64 * self.table_len)

    @property
    def image_map(self) -> dict[str, str]:
        return dict(self.images or ())

    def validate(self) -> 'JobConfig':
        if self.depth < 1:
            raise ConfigError('depth', f'must be >= 1, got {self.depth}')
        if self.resolved_horizon < 1:
            raise ConfigError('horizon', f'must be >= 1, got {self.resolved_horizon}')
        if self.scan_len is not None and self.scan_len < self.table_len:
            raise ConfigError(
                'scan_len',
                f'must be >= depth + 1 + horizon = {self.table_len}, got {self.scan_len}',
            )
        if self.system == SystemKind.STURMIAN and self.directive is None:
            raise ConfigError('directive', 'required for system sturmian')
        if self.system == SystemKind.SUBSTITUTION:
            if not self.images:
                raise ConfigError('images', 'required for system substitution')
            if self.seed not in self.image_map:
                raise ConfigError('seed', f'{self.seed!r} has no image')
        for fmt in self.outputs:
            if fmt not in OUTPUT_FORMATS:
                raise ConfigError('format', f'unknown output format {fmt!r}')
        if self.builder not in BUILDERS:
            raise ConfigError('builder', f'unknown builder {self.builder!r}')
        if self.builder == 'sturmian' and self.system not in (SystemKind.FIBONACCI, SystemKind.STURMIAN):
            raise ConfigError('builder', f'sturmian builder does not apply to {self.system.value}')
        if self.builder == 'morse' and self.system != SystemKind.MORSE:
            raise ConfigError('builder', f'morse builder does not apply to {self.system.value}')
        return self
