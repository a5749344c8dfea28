import logging
from collections import defaultdict

from errors import DepthBoundError, StructuralError
from models import BijectionReport, DiagramPath, HBDiagram, LanguageTable
from significance import sig

logger = logging.getLogger(__name__)


def project(path: DiagramPath) -> str:
    '''Last letter of each vertex, in order.'''
    return ''.join(v[-1] for v in path.vertices)


def check_safe_depth(d: HBDiagram, n: int):
    '''
    Refuse n when a frontier arrow can be taken within n-1 steps of a
    length-1 vertex, since rooted length-n paths would then be undercounted.
    '''
    if n < 1:
        raise ValueError(f'n must be >= 1, got {n}')
    layer = set(d.roots)
    seen = set(layer)
    for _ in range(n - 1):
        ahead = set()
        for v in layer:
            for arrow in d.out_arrows(v):
                if d.is_frontier(arrow):
                    raise DepthBoundError(n, d.depth_bound)
                ahead.add(arrow.target)
        layer = ahead - seen
        seen |= ahead


def count_rooted_paths(d: HBDiagram, n: int) -> int:
    check_safe_depth(d, n)
    counts = {v: 1 for v in d.roots}
    for _ in range(n - 1):
        ahead = defaultdict(int)
        for v, c in counts.items():
            for target in d.successors(v):
                ahead[target] += c
        counts = ahead
    return sum(counts.values())


def rooted_paths(d: HBDiagram, n: int) -> list[DiagramPath]:
    '''Rooted paths with n vertices, ordered by their vertex labels.'''
    check_safe_depth(d, n)
    found = []

    def extend(trail: list[str]):
        if len(trail) == n:
            found.append(DiagramPath(tuple(trail)))
            return
        for target in d.successors(trail[-1]):
            trail.append(target)
            extend(trail)
            trail.pop()

    for root in d.roots:
        extend([root])
    return sorted(found, key=lambda p: p.vertices)


def verify_bijection(d: HBDiagram, table: LanguageTable, n: int) -> BijectionReport:
    '''Projection of rooted length-n paths against the n-blocks of the table.'''
    by_projection = defaultdict(list)
    paths = rooted_paths(d, n)
    for path in paths:
        by_projection[project(path)].append(path)

    blocks = table.blocks(n)
    projections = set(by_projection)
    report = BijectionReport(
        n=n,
        path_count=len(paths),
        block_count=len(blocks),
        collisions={w: tuple(ps) for w, ps in sorted(by_projection.items()) if len(ps) > 1},
        missing=frozenset(blocks - projections),
        extra=frozenset(projections - blocks),
    )
    if not report.ok:
        logger.warning(
            'bijection fails at n=%d: %d collisions, %d missing, %d extra',
            n, len(report.collisions), len(report.missing), len(report.extra),
        )
    return report


def unique_double_extension(d: HBDiagram, n: int) -> str:
    '''
    Projection of the one rooted path with n-1 vertices whose last vertex
    has two outgoing arrows.
    '''
    if n < 2:
        raise ValueError(f'n must be >= 2, got {n}')
    doubled = [p for p in rooted_paths(d, n - 1) if d.out_degree(p.terminal) == 2]
    if len(doubled) != 1:
        raise StructuralError(
            f'expected exactly one doubly extendable path of length {n - 1}, '
            f'found {len(doubled)}: {[str(p) for p in doubled]}'
        )
    return project(doubled[0])


def iterated_sig_holds(path: DiagramPath, table: LanguageTable, H: int | None = None) -> bool:
    '''Each vertex equals sig of the projection up to and including it.'''
    word = project(path)
    return all(
        v == sig(table, word[:i + 1], H) for i, v in enumerate(path.vertices)
    )
