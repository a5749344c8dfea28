import re
from pathlib import Path

from errors import ConfigError
from models import DirectiveSpec, JobConfig, SystemKind

CONFIG_KEYS = (
    'system', 'directive', 'images', 'seed', 'depth', 'horizon',
    'scan_len', 'format', 'out', 'builder',
)


def parse_directive(text: str) -> DirectiveSpec:
    '''Directive terms, optionally ending in a parenthesised periodic tail: 0,3,1 or 0,(2,1)'''

    text = re.sub(r'\s+', '', text)
    m = re.fullmatch(r'((?:\d+,)*\d+)?(?:,?\(((?:\d+,)*\d+)\))?', text)
    if not text or not m:
        raise ConfigError('directive', f'cannot parse {text!r}')
    terms = tuple(int(d) for d in m.group(1).split(',')) if m.group(1) else ()
    period = tuple(int(d) for d in m.group(2).split(',')) if m.group(2) else ()
    try:
        return DirectiveSpec(terms, period)
    except ValueError as e:
        raise ConfigError('directive', str(e)) from e


def parse_images(text: str) -> dict[str, str]:
    '''Substitution images in the form: 0:01,1:10'''

    images = {}
    for part in filter(None, re.split(r'[,\s]+', text.strip())):
        m = re.fullmatch(r'(\w)(?::|->)(\w+)', part)
        if not m:
            raise ConfigError('images', f'cannot parse {part!r}')
        letter, image = m.groups()
        if letter in images:
            raise ConfigError('images', f'letter {letter!r} given twice')
        images[letter] = image
    if not images:
        raise ConfigError('images', 'no images given')
    return images


def parse_config_line(line: str):
    '''key = value, with # comments; returns None for blank lines'''

    line = re.sub(r'#.*$', '', line).strip()
    if not line:
        return None
    m = re.fullmatch(r'([A-Za-z_]+)\s*=\s*(.*)', line)
    if not m:
        raise ConfigError('config', f'expected key = value, got {line!r}')
    key, value = m.group(1).lower(), m.group(2).strip()
    if key not in CONFIG_KEYS:
        raise ConfigError(key, 'unknown config key')
    return key, value


def parse_config_file(path) -> dict[str, str]:
    try:
        with open(path) as f:
            lines = [ln.strip() for ln in f]
    except OSError as e:
        raise ConfigError('config', f'{path}: {e.strerror}') from e

    values = {}
    for num, ln in enumerate(lines, start=1):
        try:
            entry = parse_config_line(ln)
        except ConfigError as e:
            raise ConfigError(e.field, f'{Path(path).name} line {num}: {e.message}') from e
        if entry:
            key, value = entry
            values[key] = value
    return values


def _parse_int(field: str, text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ConfigError(field, f'expected an integer, got {text!r}') from None


def parse_job_config(values: dict[str, str]) -> JobConfig:
    '''Build a validated JobConfig from raw key/value strings; absent keys keep their defaults.'''

    kwargs = {}
    if 'system' in values:
        try:
            kwargs['system'] = SystemKind(values['system'].lower())
        except ValueError:
            known = ', '.join(k.value for k in SystemKind)
            raise ConfigError('system', f'unknown system {values["system"]!r} (expected one of {known})') from None
    if values.get('directive'):
        kwargs['directive'] = parse_directive(values['directive'])
    if values.get('images'):
        kwargs['images'] = tuple(sorted(parse_images(values['images']).items()))
    if values.get('seed'):
        kwargs['seed'] = values['seed']
    for key in ('depth', 'horizon', 'scan_len'):
        if values.get(key):
            kwargs[key] = _parse_int(key, values[key])
    if values.get('format'):
        kwargs['outputs'] = tuple(filter(None, re.split(r'[,\s]+', values['format'])))
    if values.get('out'):
        kwargs['out'] = Path(values['out'])
    if values.get('builder'):
        kwargs['builder'] = values['builder']
    return JobConfig(**kwargs).validate()
