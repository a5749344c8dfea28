import logging
from collections.abc import Callable
from functools import cached_property

from diagram import build_generic, build_morse, build_sturmian
from generators import fixed_point_prefix, left_special_prefix
from language import certify, morse_complexity, scan_language, scan_until_stable, sturmian_complexity
from models import (
    FIBONACCI_DIRECTIVE,
    DirectiveSpec,
    HBDiagram,
    JobConfig,
    LanguageTable,
    Substitution,
    SystemKind,
)

logger = logging.getLogger(__name__)

DEFAULT_DEPTH = 8
DEFAULT_SEED = '0'


class SystemLoader:
    '''
    Handles:
    - Generating a prefix of the sequence a job describes
    - Scanning (and certifying, when the complexity is known) its language
    - Picking and running the matching diagram builder
    '''

    def __init__(self, config: JobConfig):
        self.config = config.validate()

    @property
    def kind(self) -> SystemKind:
        return self.config.system

    @property
    def is_sturmian(self) -> bool:
        return self.kind in (SystemKind.FIBONACCI, SystemKind.STURMIAN)

    @property
    def directive(self) -> DirectiveSpec | None:
        if self.kind == SystemKind.FIBONACCI:
            return FIBONACCI_DIRECTIVE
        return self.config.directive

    @property
    def substitution(self) -> Substitution | None:
        if self.kind == SystemKind.FIBONACCI:
            return Substitution.fibonacci()
        if self.kind == SystemKind.MORSE:
            return Substitution.morse()
        if self.kind == SystemKind.SUBSTITUTION:
            return Substitution.from_images(self.config.image_map)
        return None

    @property
    def expected_complexity(self) -> Callable[[int], int] | None:
        if self.is_sturmian:
            return sturmian_complexity
        if self.kind == SystemKind.MORSE:
            return morse_complexity
        return None

    def sequence_prefix(self, m: int) -> str:
        '''First m letters of the sequence whose language the job studies.'''
        if self.kind == SystemKind.STURMIAN:
            return left_special_prefix(self.directive, m)
        seed = self.config.seed if self.kind == SystemKind.SUBSTITUTION else DEFAULT_SEED
        return fixed_point_prefix(self.substitution, seed, m)

    def left_special(self, m: int) -> str:
        if not self.is_sturmian:
            raise ValueError(f'{self.kind.value} has no left special sequence')
        return left_special_prefix(self.directive, m)

    def load_table(self, max_len: int | None = None) -> LanguageTable:
        '''Scan the job's prefix; certify it when the complexity is known.'''
        max_len = max_len or self.config.table_len
        expected = self.expected_complexity
        if expected is None:
            return scan_until_stable(self.sequence_prefix, max_len)
        scan_len = max(self.config.resolved_scan_len, max_len)
        table = scan_language(self.sequence_prefix(scan_len), max_len)
        return certify(table, expected)

    @cached_property
    def table(self) -> LanguageTable:
        return self.load_table()

    @property
    def builder(self) -> str:
        if self.config.builder != 'auto':
            return self.config.builder
        if self.is_sturmian:
            return 'sturmian'
        if self.kind == SystemKind.MORSE:
            return 'morse'
        return 'generic'

    def build_diagram(self) -> HBDiagram:
        N = self.config.depth
        H = self.config.resolved_horizon
        name = self.kind.value
        match self.builder:
            case 'sturmian':
                return build_sturmian(self.left_special(N), N, system=name)
            case 'morse':
                return build_morse(self.table, N, H, system=name)
            case _:
                return build_generic(self.table, N, H, system=name)


def get_loader(config: JobConfig | None = None) -> SystemLoader:
    return SystemLoader(config or JobConfig(depth=DEFAULT_DEPTH))


def main():
    loader = get_loader()
    d = loader.build_diagram()
    for arrow in d.sorted_arrows:
        print(arrow.source, '->', arrow.target)


if __name__ == '__main__':
    main()
