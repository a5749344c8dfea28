import logging

import networkx as nx

from errors import DepthRangeError, HorizonError, InsufficientPrefixError, StructuralError
from language import has_BBb
from models import Arrow, DiagramComparison, HBDiagram, LanguageTable, Provenance
from morse import syntactic_cuttings
from significance import default_horizon, is_significant, morse_is_significant, sig

logger = logging.getLogger(__name__)


def _log_built(d: HBDiagram):
    logger.info(
        'built %s diagram: %d vertices, %d arrows, %d frontier targets',
        d.provenance.value, len(d.vertices), len(d.arrows), len(d.frontier),
    )
    for target in sorted(d.frontier):
        logger.debug('frontier target %s', target)


def _check_capacity(table: LanguageTable, N: int, H: int):
    if N < 1:
        raise ValueError(f'depth bound must be >= 1, got {N}')
    if N + 1 + H > table.max_len:
        raise HorizonError(N + 1 + H, table.max_len)


def build_generic(table: LanguageTable, N: int, H: int | None = None, system: str = '') -> HBDiagram:
    '''
    Vertices: every block of length <= N witnessed significant at horizon H.
    Arrows: a -> sig(a·c) for every letter c with a·c in the language.
    Targets longer than N are kept and reported as frontier.
    '''
    H = default_horizon(N + 1) if H is None else H
    _check_capacity(table, N, H)

    vertices = {
        w
        for k in range(1, N + 1)
        for w in table.blocks(k)
        if is_significant(table, w, H).significant
    }
    arrows = {
        Arrow(a, sig(table, a + c, H))
        for a in vertices
        for c in table.alphabet
        if a + c in table
    }
    d = HBDiagram(frozenset(vertices), frozenset(arrows), N, Provenance.GENERIC, H, system)
    _log_built(d)
    return d


def build_sturmian(l_prefix: str, N: int, system: str = '') -> HBDiagram:
    '''The closed-form Sturmian diagram read off the left special sequence.'''
    if N < 1:
        raise ValueError(f'depth bound must be >= 1, got {N}')
    if len(l_prefix) < N:
        raise InsufficientPrefixError(len(l_prefix), N, 'left special prefix')
    l = l_prefix[:N]
    first = l[0]
    other = '1' if first == '0' else '0'

    vertices = {'0', '1'} | {x + l[:n] for n in range(1, N) for x in '01'}

    # base arrows at the two letters
    arrows = {Arrow(first, other), Arrow(first, first + first), Arrow(other, other + first)}

    # spines xL_n -> xL_{n+1}
    for n in range(1, N):
        for x in '01':
            arrows.add(Arrow(x + l[:n], x + l[:n + 1]))

    # cross arrows out of right special vertices, each resolved against the
    # previous right special vertex
    cross = {first: other}
    previous = first
    for k in range(2, N + 1):
        v = l[:k][::-1]
        if v[1:] != l[:k - 1]:
            continue
        if v[0] != previous[0]:
            target = previous + l[len(previous) - 1]
        else:
            target = cross[previous]
        cross[v] = target
        arrows.add(Arrow(v, target))
        previous = v

    d = HBDiagram(frozenset(vertices), frozenset(arrows), N, Provenance.STURMIAN_CLOSED_FORM, None, system)
    _log_built(d)
    return d


def build_morse(table: LanguageTable, N: int, H: int | None = None, system: str = 'morse') -> HBDiagram:
    '''
    Vertices from the Morse significance rule; arrow targets from the
    generic sig oracle. Extensions are pre-filtered with the no-BBb property
    and the existence of a 1-cutting; the filter must agree with the table.
    '''
    if not table.certified:
        raise ValueError('build_morse needs a certified Morse table')
    H = default_horizon(N + 1) if H is None else H
    _check_capacity(table, N, H)

    vertices = {
        w
        for k in range(1, N + 1)
        for w in table.blocks(k)
        if morse_is_significant(table, w)
    }
    arrows = set()
    for a in vertices:
        for c in table.alphabet:
            w = a + c
            plausible = not has_BBb(w) and bool(syntactic_cuttings(w))
            if w not in table:
                continue
            if not plausible:
                raise StructuralError(f'{w} is in the language but fails the Morse filter')
            arrows.add(Arrow(a, sig(table, w, H)))

    d = HBDiagram(frozenset(vertices), frozenset(arrows), N, Provenance.MORSE_RULE, H, system)
    _log_built(d)
    return d


def diagram_equal(a: HBDiagram, b: HBDiagram, up_to_len: int) -> DiagramComparison:
    '''Compare vertices and arrows whose endpoints have length <= up_to_len.'''
    limit = min(a.depth_bound, b.depth_bound)
    if not 1 <= up_to_len <= limit:
        raise DepthRangeError(up_to_len, 1, limit)

    def restrict(d: HBDiagram):
        vertices = frozenset(v for v in d.vertices if len(v) <= up_to_len)
        arrows = frozenset(
            x for x in d.arrows
            if len(x.source) <= up_to_len and len(x.target) <= up_to_len
        )
        return vertices, arrows

    va, aa = restrict(a)
    vb, ab = restrict(b)
    return DiagramComparison(
        missing_vertices=va - vb,
        extra_vertices=vb - va,
        missing_arrows=aa - ab,
        extra_arrows=ab - aa,
    )


# ----------------------------------------------------------------------
#  Graph queries
# ----------------------------------------------------------------------

def as_graph(d: HBDiagram) -> nx.MultiDiGraph:
    G = nx.MultiDiGraph()
    for v in d.sorted_vertices:
        G.add_node(v, frontier=False)
    for target in sorted(d.frontier):
        G.add_node(target, frontier=True)
    for arrow in d.sorted_arrows:
        G.add_edge(arrow.source, arrow.target, label=arrow.letter)
    return G


def is_acyclic(d: HBDiagram) -> bool:
    return nx.is_directed_acyclic_graph(as_graph(d))


def longest_backward_path(d: HBDiagram, v: str) -> int:
    '''Number of arrows on the longest path ending at v.'''
    G = as_graph(d)
    sub = G.subgraph(nx.ancestors(G, v) | {v})
    return nx.dag_longest_path_length(sub)


def spine_projection(d: HBDiagram, x: str, k: int) -> str:
    '''Last letters along the spine rooted at the letter x, k vertices long.'''
    v = x
    letters = [x]
    for _ in range(k - 1):
        ahead = [t for t in d.successors(v) if len(t) == len(v) + 1 and t.startswith(v)]
        if len(ahead) != 1:
            raise StructuralError(f'no unique spine arrow out of {v}')
        v = ahead[0]
        letters.append(v[-1])
    return ''.join(letters)


def right_special_vertices(d: HBDiagram) -> list[str]:
    '''Vertices (length <= N) with two outgoing arrows.'''
    return [v for v in d.sorted_vertices if d.out_degree(v) == 2]
