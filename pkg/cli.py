import argparse
import logging
import sys
from collections.abc import Callable
from dataclasses import replace

import pandas as pd

from errors import ConfigError, HBError
from exporters import (
    complexity_frame,
    diagram_report,
    diagram_to_json,
    diagram_to_dot,
    frame_to_text,
    run_fields,
    run_header,
    suite_frame,
    to_json,
    write_output,
)
from models import BUILDERS, OUTPUT_FORMATS, JobConfig, SystemKind
from parsers.config import CONFIG_KEYS, parse_config_file, parse_job_config
from paths import count_rooted_paths
from significance import is_significant, sig
from systems import SystemLoader
from verify import run_suite

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

LOG_FORMAT = '%(levelname)s %(name)s: %(message)s'


def _emit(config: JobConfig, command: str, renderers: dict[str, Callable[[], str]]):
    '''Write every requested format; one file per format when several go to --out.'''
    unavailable = [fmt for fmt in config.outputs if fmt not in renderers]
    if unavailable:
        raise ConfigError(
            'format',
            f'{command} cannot write {", ".join(unavailable)} (choose from {", ".join(renderers)})',
        )
    for fmt in config.outputs:
        out = config.out
        if out is not None and len(config.outputs) > 1:
            out = out.with_suffix(f'.{fmt}')
        write_output(renderers[fmt](), out)


def _provenance(loader: SystemLoader) -> str:
    return {'sturmian': 'sturmian-closed-form', 'morse': 'morse-rule'}.get(loader.builder, 'generic')


# ----------------------------------------------------------------------
#  Commands
# ----------------------------------------------------------------------

def cmd_gen(config: JobConfig, length: int) -> int:
    loader = SystemLoader(config)
    provenance = 'directive' if config.system == SystemKind.STURMIAN else 'fixed-point'
    sequence = loader.sequence_prefix(length)
    _emit(config, 'gen', {
        'report': lambda: f'{run_header(config, provenance)}\n{sequence}\n',
        'json': lambda: to_json({**run_fields(config, provenance), 'length': length, 'sequence': sequence}),
    })
    return EXIT_OK


def cmd_lang(config: JobConfig) -> int:
    loader = SystemLoader(config)
    table = loader.table
    frame = complexity_frame(table, loader.expected_complexity)
    provenance = table.certification.value
    _emit(config, 'lang', {
        'report': lambda: run_header(config, provenance) + '\n' + frame_to_text(frame),
        'json': lambda: to_json({**run_fields(config, provenance), 'rows': frame.to_dict(orient='records')}),
    })
    return EXIT_OK


def cmd_sig(config: JobConfig, block: str) -> int:
    loader = SystemLoader(config)
    table = loader.table
    H = config.resolved_horizon
    verdict = is_significant(table, block, H)
    form = sig(table, block, H)
    fields = {
        'block': block,
        'verdict': verdict.verdict.value,
        'witness': verdict.witness,
        'sig': form,
    }

    def report() -> str:
        lines = [run_header(config, 'generic')]
        lines += [f'{k}: {"" if v is None else v}' for k, v in fields.items()]
        return '\n'.join(lines) + '\n'

    _emit(config, 'sig', {
        'report': report,
        'json': lambda: to_json({**run_fields(config, 'generic'), **fields}),
    })
    return EXIT_OK


def cmd_diagram(config: JobConfig) -> int:
    loader = SystemLoader(config)
    d = loader.build_diagram()
    header = run_header(config, d.provenance.value)
    _emit(config, 'diagram', {
        'dot': lambda: diagram_to_dot(d, comment=header.removeprefix('# ')),
        'json': lambda: diagram_to_json(d, config.resolved_scan_len),
        'report': lambda: header + '\n' + diagram_report(d),
    })
    return EXIT_OK


def cmd_paths(config: JobConfig, n: int) -> int:
    if n < 1:
        raise ConfigError('n', f'must be >= 1, got {n}')
    if n > config.depth:
        logger.info('raising depth from %d to %d to count paths of length %d', config.depth, n, n)
        config = replace(config, depth=n)
    loader = SystemLoader(config)
    d = loader.build_diagram()
    expected = loader.expected_complexity or loader.table.complexity

    rows = []
    for k in range(1, n + 1):
        count = count_rooted_paths(d, k)
        rows.append({'n': k, 'paths': count, 'expected': expected(k), 'match': count == expected(k)})
    provenance = _provenance(loader)
    frame = pd.DataFrame(rows)
    _emit(config, 'paths', {
        'report': lambda: run_header(config, provenance) + '\n' + frame_to_text(frame),
        'json': lambda: to_json({**run_fields(config, provenance), 'counts': rows}),
    })
    return EXIT_OK if all(r['match'] for r in rows) else EXIT_FAILED


def cmd_verify(config: JobConfig) -> int:
    loader = SystemLoader(config)
    results = run_suite(loader)
    frame = suite_frame(results)
    passed = sum(r.passed for r in results)
    provenance = _provenance(loader)

    def report() -> str:
        summary = f'{passed}/{len(results)} checks passed\n'
        return run_header(config, provenance) + '\n' + frame_to_text(frame) + summary

    _emit(config, 'verify', {
        'report': report,
        'json': lambda: to_json({
            **run_fields(config, provenance),
            'checks': [{'name': r.name, 'passed': r.passed, 'detail': r.detail} for r in results],
        }),
    })
    return EXIT_OK if passed == len(results) else EXIT_FAILED


# ----------------------------------------------------------------------
#  Argument handling
# ----------------------------------------------------------------------

def config_from_args(args: argparse.Namespace) -> JobConfig:
    '''Config file values first, command-line flags on top.'''
    values = parse_config_file(args.config) if args.config else {}
    for key in CONFIG_KEYS:
        flag = getattr(args, key, None)
        if flag is None:
            continue
        values[key] = ','.join(flag) if isinstance(flag, list) else str(flag)
    return parse_job_config(values)


def _add_job_args(parser: argparse.ArgumentParser):
    parser.add_argument('--config', default=None, help='key = value file; flags override it')
    parser.add_argument('--system', choices=[k.value for k in SystemKind], default=None)
    parser.add_argument('--directive', default=None, help='e.g. 0,3,1,1 or (1) or 0,(2,1)')
    parser.add_argument('--images', default=None, help='substitution images, e.g. 0:01,1:10')
    parser.add_argument('--seed', default=None, help='letter the fixed point grows from')
    parser.add_argument('--depth', type=int, default=None, help='depth bound N')
    parser.add_argument('--horizon', type=int, default=None, help='follower horizon H')
    parser.add_argument('--scan-len', dest='scan_len', type=int, default=None, help='scanned prefix length M')
    parser.add_argument('--format', choices=OUTPUT_FORMATS, action='append', default=None)
    parser.add_argument('--out', default=None, help='output file (stdout when omitted)')
    parser.add_argument('--builder', choices=BUILDERS, default=None)
    parser.add_argument('-v', '--verbose', action='count', default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='hb', description='HB diagrams of Sturmian and Morse subshifts')
    commands = parser.add_subparsers(dest='command', required=True)

    gen = commands.add_parser('gen', help='print a prefix of the sequence')
    _add_job_args(gen)
    gen.add_argument('--len', dest='length', type=int, required=True)
    gen.set_defaults(func=lambda args, config: cmd_gen(config, args.length))

    lang = commands.add_parser('lang', help='complexity and special blocks per length')
    _add_job_args(lang)
    lang.set_defaults(func=lambda args, config: cmd_lang(config))

    sig_ = commands.add_parser('sig', help='significance verdict and sig of one block')
    _add_job_args(sig_)
    sig_.add_argument('--block', required=True)
    sig_.set_defaults(func=lambda args, config: cmd_sig(config, args.block))

    diagram = commands.add_parser('diagram', help='build the HB diagram up to the depth bound')
    _add_job_args(diagram)
    diagram.set_defaults(func=lambda args, config: cmd_diagram(config))

    paths = commands.add_parser('paths', help='count rooted paths against the complexity')
    _add_job_args(paths)
    paths.add_argument('--n', type=int, required=True)
    paths.set_defaults(func=lambda args, config: cmd_paths(config, args.n))

    verify = commands.add_parser('verify', help='run the property suite')
    _add_job_args(verify)
    verify.set_defaults(func=lambda args, config: cmd_verify(config))

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)

    try:
        config = config_from_args(args)
        return args.func(args, config)
    except ConfigError as e:
        print(f'config error: {e}', file=sys.stderr)
    except HBError as e:
        print(f'error: {e}', file=sys.stderr)
    return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
