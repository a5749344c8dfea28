from pathlib import Path

import pytest

from errors import ConfigError
from models import DirectiveSpec, SystemKind
from parsers.config import (
    parse_config_file,
    parse_config_line,
    parse_directive,
    parse_images,
    parse_job_config,
)


class TestParseDirective:
    def test_finite_terms(self):
        assert parse_directive('0,3,1,1') == DirectiveSpec((0, 3, 1, 1))

    def test_periodic_only(self):
        assert parse_directive('(1)') == DirectiveSpec((), (1,))

    def test_terms_then_period(self):
        assert parse_directive('0, (2, 1)') == DirectiveSpec((0,), (2, 1))

    def test_whitespace_is_ignored(self):
        assert parse_directive(' 0, 3 ,1 ') == DirectiveSpec((0, 3, 1))

    def test_garbage(self):
        for text in ('', 'a', '0,,1', '0,-1', '(1'):
            with pytest.raises(ConfigError) as e:
                parse_directive(text)
            assert e.value.field == 'directive'

    def test_zero_after_first_term(self):
        with pytest.raises(ConfigError, match='d_i must be > 0'):
            parse_directive('0,0')


class TestParseImages:
    def test_colon_form(self):
        assert parse_images('0:01,1:10') == {'0': '01', '1': '10'}

    def test_arrow_form(self):
        assert parse_images('0->01 1->0') == {'0': '01', '1': '0'}

    def test_duplicate_letter(self):
        with pytest.raises(ConfigError, match='given twice'):
            parse_images('0:01,0:10')

    def test_empty(self):
        with pytest.raises(ConfigError, match='no images'):
            parse_images('  ')

    def test_malformed_part(self):
        with pytest.raises(ConfigError, match='cannot parse'):
            parse_images('0=01')


class TestParseConfigLine:
    def test_key_value(self):
        assert parse_config_line('depth = 12') == ('depth', '12')

    def test_key_is_case_insensitive(self):
        assert parse_config_line('System=morse') == ('system', 'morse')

    def test_comment_and_blank(self):
        assert parse_config_line('# just a comment') is None
        assert parse_config_line('   ') is None
        assert parse_config_line('horizon = 64  # long enough for Morse') == ('horizon', '64')

    def test_unknown_key(self):
        with pytest.raises(ConfigError) as e:
            parse_config_line('colour = red')
        assert e.value.field == 'colour'

    def test_missing_equals(self):
        with pytest.raises(ConfigError, match='expected key = value'):
            parse_config_line('depth 12')


class TestParseConfigFile:
    def test_later_lines_win(self, tmp_path: Path):
        path = tmp_path / 'job.cfg'
        path.write_text('system = morse\n\n# deeper run\ndepth = 8\ndepth = 10\n')
        assert parse_config_file(path) == {'system': 'morse', 'depth': '10'}

    def test_error_names_the_line(self, tmp_path: Path):
        path = tmp_path / 'job.cfg'
        path.write_text('system = morse\nnot a setting\n')
        with pytest.raises(ConfigError, match='job.cfg line 2'):
            parse_config_file(path)


    def test_unreadable_file(self, tmp_path: Path):
        with pytest.raises(ConfigError) as e:
            parse_config_file(tmp_path / 'missing.cfg')
        assert e.value.field == 'config'
        assert 'missing.cfg' in e.value.message


class TestParseJobConfig:
    def test_defaults(self):
        config = parse_job_config({})
        assert config.system == SystemKind.FIBONACCI
        assert config.depth == 8
        assert config.outputs == ('report',)

    def test_full_sturmian_job(self):
        config = parse_job_config({
            'system': 'Sturmian',
            'directive': '0,3,1,1,1,15,2,72',
            'depth': '9',
            'horizon': '290',
            'scan_len': '32763',
            'format': 'dot, json',
            'out': 'runs/pi4',
            'builder': 'generic',
        })
        assert config.system == SystemKind.STURMIAN
        assert str(config.directive) == '0,3,1,1,1,15,2,72'
        assert config.resolved_horizon == 290
        assert config.outputs == ('dot', 'json')
        assert config.out == Path('runs/pi4')
        assert config.builder == 'generic'

    def test_images_are_sorted(self):
        config = parse_job_config({'system': 'substitution', 'images': '1:10,0:01'})
        assert config.images == (('0', '01'), ('1', '10'))
        assert config.seed == '0'

    def test_unknown_system(self):
        with pytest.raises(ConfigError, match='unknown system'):
            parse_job_config({'system': 'rudin-shapiro'})

    def test_bad_integer(self):
        with pytest.raises(ConfigError) as e:
            parse_job_config({'depth': 'eight'})
        assert e.value.field == 'depth'

    def test_result_is_validated(self):
        with pytest.raises(ConfigError) as e:
            parse_job_config({'system': 'sturmian'})
        assert e.value.field == 'directive'
