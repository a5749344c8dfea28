import pytest

from diagram import (
    as_graph,
    build_generic,
    build_morse,
    build_sturmian,
    diagram_equal,
    is_acyclic,
    longest_backward_path,
    right_special_vertices,
    spine_projection,
)
from errors import DepthRangeError, HorizonError, InsufficientPrefixError
from language import scan_language
from models import Arrow, Provenance

FIBONACCI_CROSS_ARROWS = {
    Arrow('0', '1'),
    Arrow('10', '00'),
    Arrow('0010', '101'),
    Arrow('1010010', '00100'),
    Arrow('001001010010', '10100101'),
}

PI_OVER_FOUR_CROSS_ARROWS = {
    Arrow('1', '0'),
    Arrow('11', '0'),
    Arrow('111', '0'),
    Arrow('0111', '1111'),
    Arrow('11110111', '01110'),
}

MORSE_ARROWS = {
    Arrow('1101', '1010'),
    Arrow('0010', '0101'),
    Arrow('0011001', '110010'),
    Arrow('0100110', '001100'),
    Arrow('1011001', '110011'),
    Arrow('1100110', '001101'),
}


def spines(l: str, N: int) -> set[Arrow]:
    return {Arrow(x + l[:n], x + l[:n + 1]) for n in range(1, N) for x in '01'}


@pytest.fixture(scope='module')
def fibonacci_diagram(fibonacci_l):
    return build_sturmian(fibonacci_l, 12, system='fibonacci')


@pytest.fixture(scope='module')
def morse_diagram(morse_table):
    return build_generic(morse_table, 8, 128, system='morse')


class TestBuildSturmian:
    def test_fibonacci_vertices(self, fibonacci_diagram, fibonacci_l):
        expected = {'0', '1'} | {x + fibonacci_l[:n] for n in range(1, 12) for x in '01'}
        assert fibonacci_diagram.vertices == expected

    def test_fibonacci_arrows(self, fibonacci_diagram, fibonacci_l):
        base = {Arrow('0', '00'), Arrow('1', '10')}
        assert fibonacci_diagram.arrows == base | spines(fibonacci_l, 12) | FIBONACCI_CROSS_ARROWS

    def test_fibonacci_frontier(self, fibonacci_diagram, fibonacci_l):
        assert fibonacci_diagram.frontier == {'0' + fibonacci_l[:12], '1' + fibonacci_l[:12]}
        assert fibonacci_diagram.provenance == Provenance.STURMIAN_CLOSED_FORM

    def test_pi_over_four_arrows(self, pi4_l):
        d = build_sturmian(pi4_l, 9)
        base = {Arrow('1', '11'), Arrow('0', '01')}
        assert d.arrows == base | spines(pi4_l, 9) | PI_OVER_FOUR_CROSS_ARROWS

    def test_short_left_special_prefix(self):
        with pytest.raises(InsufficientPrefixError):
            build_sturmian('0100', 12)

    def test_depth_must_be_positive(self, fibonacci_l):
        with pytest.raises(ValueError):
            build_sturmian(fibonacci_l, 0)


class TestBuildGeneric:
    def test_fibonacci_matches_closed_form(self, fibonacci_table, fibonacci_diagram):
        generic = build_generic(fibonacci_table, 12, 64)
        assert diagram_equal(generic, fibonacci_diagram, 12).equal
        assert generic.frontier == fibonacci_diagram.frontier
        assert generic.provenance == Provenance.GENERIC
        assert generic.horizon == 64

    def test_pi_over_four_matches_closed_form(self, pi4_table, pi4_l):
        for N, H in ((9, 28), (12, 34)):
            generic = build_generic(pi4_table, N, H)
            assert diagram_equal(generic, build_sturmian(pi4_l, N), N).equal

    def test_morse_arrows(self, morse_diagram):
        assert MORSE_ARROWS <= morse_diagram.arrows

    def test_morse_vertex_counts(self, morse_diagram):
        counts = [len(morse_diagram.vertices_of_length(k)) for k in range(1, 9)]
        assert counts == [2, 4, 4, 8, 4, 8, 8, 4]

    def test_morse_keeps_11001_not_11010(self, morse_diagram):
        assert '11001' in morse_diagram.vertices
        assert '11010' not in morse_diagram.vertices

    def test_horizon_must_fit_table(self, fibonacci_table):
        with pytest.raises(HorizonError):
            build_generic(fibonacci_table, 12, 200)


class TestBuildMorse:
    def test_matches_generic(self, morse_table, morse_diagram):
        d = build_morse(morse_table, 8, 128)
        assert diagram_equal(d, morse_diagram, 8).equal
        assert d.provenance == Provenance.MORSE_RULE

    def test_needs_certified_table(self, morse_word):
        table = scan_language(morse_word[:8192], 40)
        with pytest.raises(ValueError):
            build_morse(table, 4, 20)


class TestDiagramEqual:
    def test_reports_differences(self, fibonacci_diagram, fibonacci_l):
        shallow = build_sturmian(fibonacci_l, 6)
        diff = diagram_equal(fibonacci_diagram, shallow, 6)
        assert diff.equal
        assert not diagram_equal(fibonacci_diagram, build_sturmian(fibonacci_l[1:], 6), 6)

    def test_beyond_shared_depth(self, fibonacci_diagram, fibonacci_l):
        with pytest.raises(DepthRangeError):
            diagram_equal(fibonacci_diagram, build_sturmian(fibonacci_l, 6), 7)


class TestGraphQueries:
    def test_graph_flags_frontier(self, fibonacci_diagram):
        G = as_graph(fibonacci_diagram)
        frontier = {v for v, data in G.nodes(data=True) if data['frontier']}
        assert frontier == fibonacci_diagram.frontier
        assert G.number_of_edges() == len(fibonacci_diagram.arrows)
        assert G['0']['1'][0]['label'] == '1'

    def test_truncated_diagrams_have_no_cycles(self, fibonacci_diagram, morse_diagram):
        assert is_acyclic(fibonacci_diagram)
        assert is_acyclic(morse_diagram)

    def test_longest_backward_path(self, fibonacci_diagram):
        assert longest_backward_path(fibonacci_diagram, '0') == 0
        assert longest_backward_path(fibonacci_diagram, '00') == 3

    def test_spine_spells_l(self, fibonacci_diagram, fibonacci_l):
        assert spine_projection(fibonacci_diagram, '0', 12) == '0' + fibonacci_l[:11]
        assert spine_projection(fibonacci_diagram, '1', 12) == '1' + fibonacci_l[:11]

    def test_right_special_vertices(self, fibonacci_diagram):
        assert right_special_vertices(fibonacci_diagram) == [
            '0', '10', '0010', '1010010', '001001010010',
        ]
