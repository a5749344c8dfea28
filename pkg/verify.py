import logging
from collections.abc import Callable

from diagram import build_generic, build_morse, build_sturmian, diagram_equal, is_acyclic, spine_projection
from errors import HBError
from language import (
    closure_violations,
    has_BBb,
    is_balanced,
    left_extensions,
    left_special_blocks,
    right_special_blocks,
)
from models import CheckResult, HBDiagram, LanguageTable, SystemKind
from morse import (
    STOP_BLOCKS,
    ancestor_chain,
    dangling_letter_is_dual,
    image_covers,
    one_cuttings,
    recognizability_index_check,
)
from paths import count_rooted_paths, iterated_sig_holds, rooted_paths, unique_double_extension, verify_bijection
from significance import is_significant, morse_is_significant, morse_sig, sig, sturmian_significant_blocks
from systems import SystemLoader

logger = logging.getLogger(__name__)

CUTTING_MAX_LEN = 12
SIGLEM_MAX_LEN = 12
ITERATED_SIG_MAX_LEN = 10
AGREEMENT_MAX_LEN = 14
RECOGNIZABILITY_SAMPLE = 2 ** 14


def _result(name: str, offenders: list, total: int | None = None) -> CheckResult:
    if offenders:
        shown = ', '.join(str(o) for o in offenders[:5])
        more = f' (+{len(offenders) - 5} more)' if len(offenders) > 5 else ''
        return CheckResult(name, False, f'{len(offenders)} offenders: {shown}{more}')
    return CheckResult(name, True, f'{total} checked' if total is not None else '')


class PropertySuite:
    '''The lemma checks for one system, sharing its table and diagram.'''

    def __init__(self, loader: SystemLoader):
        self.loader = loader
        self.config = loader.config
        self.N = loader.config.depth
        self.H = loader.config.resolved_horizon

    @property
    def table(self) -> LanguageTable:
        return self.loader.table

    def diagram(self) -> HBDiagram:
        if not hasattr(self, '_diagram'):
            self._diagram = self.loader.build_diagram()
        return self._diagram

    def significant_blocks(self, max_len: int) -> list[str]:
        return [
            w for k in range(1, max_len + 1)
            for w in sorted(self.table.blocks(k))
            if is_significant(self.table, w, self.H).significant
        ]

    # ------------------------------------------------------------------
    #  Language
    # ------------------------------------------------------------------

    def check_language_closure(self) -> CheckResult:
        return _result('language closure', closure_violations(self.table), self.table.max_len)

    def check_certification(self) -> CheckResult:
        if self.table.certified:
            return CheckResult('certification', True, f'complexity matches up to {self.table.max_len}')
        return CheckResult('certification', False, 'table is heuristic')

    def check_special_blocks(self) -> CheckResult:
        l = self.loader.left_special(self.table.max_len)
        bad = []
        for n in range(1, self.table.max_len):
            left = left_special_blocks(self.table, n)
            right = right_special_blocks(self.table, n)
            if left != {l[:n]} or right != {l[:n][::-1]}:
                bad.append(n)
        return _result('special blocks', bad, self.table.max_len - 1)

    def check_balance(self) -> CheckResult:
        bad = [n for n in range(1, self.table.max_len + 1) if not is_balanced(self.table, n)]
        return _result('balance', bad, self.table.max_len)

    def check_no_BBb(self) -> CheckResult:
        bad = [w for k in range(1, self.table.max_len + 1) for w in self.table.blocks(k) if has_BBb(w)]
        return _result('no BBb', sorted(bad))

    # ------------------------------------------------------------------
    #  Significance
    # ------------------------------------------------------------------

    def check_consecutive_significance(self) -> CheckResult:
        # dropping the last letter lengthens a witness by at most one letter
        found = self.significant_blocks(self.N + 1)
        bad = [
            w for w in found
            if len(w) >= 2 and not is_significant(self.table, w[:-1], self.H + 1).significant
        ]
        return _result('consecutive significance', bad, len(found))

    def check_left_extendability(self) -> CheckResult:
        found = [w for w in self.significant_blocks(self.N + 1) if len(w) >= 2]
        bad = [w for w in found if len(left_extensions(self.table, w[1:])) < 2]
        return _result('left extendability', bad, len(found))

    def check_sig_composition(self) -> CheckResult:
        limit = min(SIGLEM_MAX_LEN, self.N + 1)
        bad, total = [], 0
        for k in range(2, limit + 1):
            for w in sorted(self.table.blocks(k)):
                total += 1
                if sig(self.table, sig(self.table, w[:-1], self.H) + w[-1], self.H) != sig(self.table, w, self.H):
                    bad.append(w)
        return _result('sig composition', bad, total)

    def check_sturmian_significance(self) -> CheckResult:
        # lengths whose default horizon still fits in the table; searched at full capacity
        limit = min(AGREEMENT_MAX_LEN, max(1, (self.table.max_len - 8) // 3))
        l = self.loader.left_special(limit)
        bad = []
        for n in range(1, limit + 1):
            oracle = frozenset(w for w in self.table.blocks(n) if is_significant(self.table, w).significant)
            if oracle != sturmian_significant_blocks(l, n):
                bad.append(n)
        return _result('closed-form significance', bad, limit)

    def check_morse_sig(self) -> CheckResult:
        d = self.diagram()
        bad = [
            f'{a.source}->{a.target}'
            for a in d.sorted_arrows
            if morse_sig(self.table, a.source + a.letter) != a.target
        ]
        return _result('Morse rule sig', bad, len(d.arrows))

    def check_morse_significance(self) -> CheckResult:
        limit = min(10, self.N + 1)
        bad, total = [], 0
        for k in range(1, limit + 1):
            for w in sorted(self.table.blocks(k)):
                total += 1
                if is_significant(self.table, w, self.H).significant != morse_is_significant(self.table, w):
                    bad.append(w)
        return _result('Morse significance rule', bad, total)

    # ------------------------------------------------------------------
    #  Diagram and paths
    # ------------------------------------------------------------------

    def check_arrow_soundness(self) -> CheckResult:
        d = self.diagram()
        bad = [
            f'{a.source}->{a.target}'
            for a in d.sorted_arrows
            if a.source + a.letter not in self.table
            or sig(self.table, a.source + a.letter, self.H) != a.target
        ]
        return _result('arrow soundness', bad, len(d.arrows))

    def check_builders_agree(self) -> CheckResult:
        if self.config.system == SystemKind.MORSE:
            d = build_morse(self.table, self.N, self.H)
        else:
            d = build_sturmian(self.loader.left_special(self.N), self.N)
        generic = build_generic(self.table, self.N, self.H)
        diff = diagram_equal(d, generic, self.N)
        offenders = sorted(diff.missing_vertices | diff.extra_vertices) + sorted(
            f'{a.source}->{a.target}' for a in diff.missing_arrows | diff.extra_arrows
        )
        return _result(f'builders agree (H={self.H})', offenders, len(d.vertices))

    def check_acyclic(self) -> CheckResult:
        return CheckResult('no cycles', is_acyclic(self.diagram()))

    def check_spines(self) -> CheckResult:
        l = self.loader.left_special(self.N)
        d = self.diagram()
        bad = [x for x in '01' if spine_projection(d, x, self.N) != x + l[:self.N - 1]]
        return _result('spines spell l', bad, 2)

    def check_unique_double_extension(self) -> CheckResult:
        l = self.loader.left_special(self.N)
        d = self.diagram()
        bad = [n for n in range(2, self.N + 1) if unique_double_extension(d, n) != l[:n - 1][::-1]]
        return _result('unique double extension', bad, self.N - 1)

    def check_iterated_sig(self) -> CheckResult:
        d = self.diagram()
        bad, total = [], 0
        for n in range(1, min(ITERATED_SIG_MAX_LEN, self.N) + 1):
            for path in rooted_paths(d, n):
                total += 1
                if not iterated_sig_holds(path, self.table, self.H):
                    bad.append(str(path))
        return _result('iterated sig', bad, total)

    def check_projection_bijection(self) -> CheckResult:
        d = self.diagram()
        bad = []
        for n in range(1, self.N + 1):
            report = verify_bijection(d, self.table, n)
            if not report.ok:
                bad.append(f'n={n}: collisions={list(report.collisions)} missing={sorted(report.missing)}')
        return _result('path projection bijection', bad, self.N)

    def check_complexity_via_paths(self) -> CheckResult:
        d = self.diagram()
        expected = self.loader.expected_complexity or self.table.complexity
        bad = [
            f'n={n}: {count_rooted_paths(d, n)} != {expected(n)}'
            for n in range(1, self.N + 1)
            if count_rooted_paths(d, n) != expected(n)
        ]
        return _result('complexity via paths', bad, self.N)

    # ------------------------------------------------------------------
    #  Morse combinatorics
    # ------------------------------------------------------------------

    def check_cuttings(self) -> CheckResult:
        bad, total = [], 0
        for k in range(1, min(CUTTING_MAX_LEN, self.table.max_len) + 1):
            for w in sorted(self.table.blocks(k)):
                total += 1
                cuttings = one_cuttings(w, self.table)
                if k >= 5 or '00' in w or '11' in w:
                    if len(cuttings) != 1:
                        bad.append(w)
                elif w in STOP_BLOCKS or w in ('010', '101'):
                    if len(cuttings) != 2:
                        bad.append(w)
                if any(c.reassemble() != w or not image_covers(c, w) for c in cuttings):
                    bad.append(w)
                if len(cuttings) == 1 and cuttings[0].ancestor not in self.table:
                    bad.append(w)
                if not dangling_letter_is_dual(w):
                    bad.append(w)
        return _result('1-cuttings', sorted(set(bad)), total)

    def check_ancestor_chain(self) -> CheckResult:
        chain = ancestor_chain('00110100')
        return CheckResult('ancestor chain', chain.blocks == ('10110', '001'), ' '.join(chain.blocks))

    def check_recognizability(self) -> CheckResult:
        at_three = recognizability_index_check(3, RECOGNIZABILITY_SAMPLE)
        at_two = recognizability_index_check(2, RECOGNIZABILITY_SAMPLE)
        return CheckResult(
            'recognizability index 3',
            at_three.holds and not at_two.holds,
            f'K=2 counterexample at {at_two.counterexample}',
        )

    # ------------------------------------------------------------------

    def checks(self) -> list[Callable[[], CheckResult]]:
        common = [
            self.check_consecutive_significance,
            self.check_left_extendability,
            self.check_sig_composition,
            self.check_arrow_soundness,
            self.check_iterated_sig,
            self.check_projection_bijection,
            self.check_complexity_via_paths,
            self.check_acyclic,
        ]
        if self.table.certified:
            common = [self.check_certification, self.check_language_closure] + common
        if self.loader.is_sturmian:
            return common + [
                self.check_special_blocks,
                self.check_balance,
                self.check_sturmian_significance,
                self.check_builders_agree,
                self.check_spines,
                self.check_unique_double_extension,
            ]
        if self.config.system == SystemKind.MORSE:
            return common + [
                self.check_no_BBb,
                self.check_morse_significance,
                self.check_morse_sig,
                self.check_builders_agree,
                self.check_cuttings,
                self.check_ancestor_chain,
                self.check_recognizability,
            ]
        return common

    def run(self) -> list[CheckResult]:
        results = []
        for check in self.checks():
            try:
                result = check()
            except HBError as e:
                result = CheckResult(check.__name__.removeprefix('check_').replace('_', ' '), False, str(e))
            logger.info('%s: %s', result.name, 'ok' if result.passed else 'FAILED')
            results.append(result)
        return results


def run_suite(loader: SystemLoader) -> list[CheckResult]:
    return PropertySuite(loader).run()
