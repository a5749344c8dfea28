import pytest

from errors import BlockNotInLanguageError, DepthRangeError, HorizonError
from language import scan_language
from models import Verdict
from significance import (
    default_horizon,
    follower_horizon,
    is_significant,
    morse_is_significant,
    morse_sig,
    sig,
    significant_depths,
    sturmian_sig,
    sturmian_significant_blocks,
)

SAMPLED_POSITIONS = [1024 + 460 * i for i in range(32)]


class TestFollowerHorizon:
    def test_followers_of_one(self, fibonacci_table):
        fol = follower_horizon(fibonacci_table, '1', 2)
        assert fol.followers == {'00', '01'}
        assert fol.horizon == 2

    def test_tail_followers_contain_block_followers(self, fibonacci_table):
        for w in ('0010', '1001', '01001'):
            assert follower_horizon(fibonacci_table, w, 6).followers <= \
                follower_horizon(fibonacci_table, w[1:], 6).followers


class TestIsSignificant:
    def test_letters_are_significant(self, fibonacci_table):
        verdict = is_significant(fibonacci_table, '1')
        assert verdict.significant
        assert verdict.witness == ''

    def test_fibonacci_001_is_witnessed(self, fibonacci_table):
        verdict = is_significant(fibonacci_table, '001')
        assert verdict.verdict == Verdict.SIGNIFICANT_WITNESSED
        assert '01' + verdict.witness in fibonacci_table
        assert '001' + verdict.witness not in fibonacci_table

    def test_fibonacci_010_is_not_significant(self, fibonacci_table):
        verdict = is_significant(fibonacci_table, '010')
        assert verdict.verdict == Verdict.NOT_SIGNIFICANT_UP_TO
        assert verdict.horizon == fibonacci_table.max_len - 3
        assert verdict.witness is None

    def test_witness_is_shortest_then_smallest(self, fibonacci_table):
        assert is_significant(fibonacci_table, '10').witness == '101'

    def test_missing_block(self, fibonacci_table):
        with pytest.raises(BlockNotInLanguageError):
            is_significant(fibonacci_table, '11')

    def test_horizon_beyond_table(self, fibonacci_table):
        with pytest.raises(HorizonError):
            is_significant(fibonacci_table, '010', fibonacci_table.max_len)

    def test_empty_block(self, fibonacci_table):
        with pytest.raises(ValueError):
            is_significant(fibonacci_table, '')

    def test_full_shift_has_only_letters(self, full_shift_table):
        table = full_shift_table(8)
        for w in ('00', '01', '110', '1010'):
            assert not is_significant(table, w).significant

    def test_default_horizon(self):
        assert default_horizon(9) == 26


class TestSig:
    def test_fibonacci_example(self, fibonacci_table):
        assert sig(fibonacci_table, '0100') == '00'

    def test_matches_closed_form_on_fibonacci(self, fibonacci_table, fibonacci_l):
        for k in range(1, 13):
            for w in fibonacci_table.blocks(k):
                assert sig(fibonacci_table, w) == sturmian_sig(fibonacci_l, w)

    def test_sig_of_a_letter(self, morse_table):
        assert sig(morse_table, '0') == '0'

    @pytest.mark.parametrize('name', ['fibonacci_table', 'morse_table'])
    def test_sig_composes_letter_by_letter(self, request, name):
        table = request.getfixturevalue(name)
        for k in range(1, 13):
            for w in table.blocks(k):
                for c in '01':
                    if w + c in table:
                        assert sig(table, sig(table, w) + c) == sig(table, w + c)

    def test_full_shift_sig_is_last_letter(self, full_shift_table):
        assert sig(full_shift_table(6), '0110') == '0'


class TestSturmianClosedForms:
    def test_significant_blocks(self, fibonacci_l):
        assert sturmian_significant_blocks(fibonacci_l, 1) == {'0', '1'}
        assert sturmian_significant_blocks(fibonacci_l, 4) == {'0010', '1010'}

    def test_oracle_agrees_on_fibonacci(self, fibonacci_table, fibonacci_l):
        for n in range(1, 16):
            found = {w for w in fibonacci_table.blocks(n) if is_significant(fibonacci_table, w).significant}
            assert found == sturmian_significant_blocks(fibonacci_l, n)

    def test_oracle_agrees_on_pi_over_four(self, pi4_table, pi4_l):
        for n in range(1, 10):
            found = {w for w in pi4_table.blocks(n) if is_significant(pi4_table, w).significant}
            assert found == sturmian_significant_blocks(pi4_l, n)

    def test_sturmian_sig(self, fibonacci_l):
        assert sturmian_sig(fibonacci_l, '0100') == '00'
        assert sturmian_sig(fibonacci_l, '1') == '1'

    def test_n_must_be_positive(self, fibonacci_l):
        with pytest.raises(ValueError):
            sturmian_significant_blocks(fibonacci_l, 0)


class TestMorseSignificance:
    def test_11001_is_significant(self, morse_table):
        assert morse_is_significant(morse_table, '11001')
        assert is_significant(morse_table, '11001').significant

    def test_11010_is_not_significant(self, morse_table):
        assert '11010' in morse_table
        assert not morse_is_significant(morse_table, '11010')
        assert not is_significant(morse_table, '11010').significant

    def test_rule_agrees_with_oracle(self, morse_table):
        for k in range(1, 10):
            for w in morse_table.blocks(k):
                assert morse_is_significant(morse_table, w) == is_significant(morse_table, w).significant

    def test_morse_sig(self, morse_table):
        assert morse_sig(morse_table, '10100') == '0100'
        assert sig(morse_table, '10100') == '0100'

    def test_rule_needs_certified_table(self, morse_word):
        table = scan_language(morse_word[:4096], 10)
        with pytest.raises(ValueError):
            morse_is_significant(table, '0110')


class TestSignificantDepths:
    def test_fibonacci_depths_are_prefixes_of_l(self, fibonacci_table, fibonacci_prefix, fibonacci_l):
        for p in SAMPLED_POSITIONS:
            depths = significant_depths(fibonacci_table, fibonacci_prefix, p, 64, 96)
            assert depths[0] == 1
            assert any(N > 16 for N in depths)
            for N in range(2, 65):
                assert (N in depths) == (fibonacci_prefix[p - N + 2:p + 1] == fibonacci_l[:N - 1])

    def test_constant_sequence_only_records_one(self):
        zeros = '0' * 64
        table = scan_language(zeros, 24)
        assert significant_depths(table, zeros, 40, 12, 12) == [1]

    def test_morse_depths_reach_past_sixteen(self, morse_table, morse_word):
        for p in SAMPLED_POSITIONS:
            depths = significant_depths(morse_table, morse_word, p, 64, 96)
            assert any(N > 16 for N in depths)

    def test_position_too_early(self, fibonacci_table, fibonacci_prefix):
        with pytest.raises(DepthRangeError):
            significant_depths(fibonacci_table, fibonacci_prefix, 10, 64, 96)

    def test_horizon_too_long(self, fibonacci_table, fibonacci_prefix):
        with pytest.raises(HorizonError):
            significant_depths(fibonacci_table, fibonacci_prefix, 1000, 64, 100)
