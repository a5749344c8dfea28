import json
import sys
from collections.abc import Callable
from pathlib import Path

import pandas as pd
from graphviz import Digraph

from language import left_special_blocks, right_special_blocks
from models import Arrow, CheckResult, HBDiagram, JobConfig, LanguageTable, Provenance


def run_fields(config: JobConfig, provenance: str) -> dict:
    return {
        'system': config.system.value,
        'depth': config.depth,
        'horizon': config.resolved_horizon,
        'scan_len': config.resolved_scan_len,
        'provenance': provenance,
    }


def run_header(config: JobConfig, provenance: str) -> str:
    '''Reproducibility line embedded in every text output.'''
    return '# ' + ' '.join(f'{k}={v}' for k, v in run_fields(config, provenance).items())


def to_json(data: dict) -> str:
    return json.dumps(data, indent=2) + '\n'


# ----------------------------------------------------------------------
#  JSON
# ----------------------------------------------------------------------

def diagram_to_dict(d: HBDiagram, scan_len: int | None = None) -> dict:
    return {
        'system': d.system,
        'depth': d.depth_bound,
        'horizon': d.horizon,
        'scan_len': scan_len,
        'provenance': d.provenance.value,
        'vertices': d.sorted_vertices,
        'arrows': [
            {'from': a.source, 'to': a.target, 'letter': a.letter}
            for a in d.sorted_arrows
        ],
        'frontier': sorted(d.frontier, key=lambda v: (len(v), v)),
    }


def diagram_to_json(d: HBDiagram, scan_len: int | None = None) -> str:
    return to_json(diagram_to_dict(d, scan_len))


def diagram_from_dict(data: dict) -> HBDiagram:
    arrows = set()
    for entry in data['arrows']:
        arrow = Arrow(entry['from'], entry['to'])
        if arrow.letter != entry['letter']:
            raise ValueError(f'arrow {entry} does not emit the last letter of its target')
        arrows.add(arrow)
    return HBDiagram(
        vertices=frozenset(data['vertices']),
        arrows=frozenset(arrows),
        depth_bound=data['depth'],
        provenance=Provenance(data['provenance']),
        horizon=data.get('horizon'),
        system=data.get('system', ''),
    )


def diagram_from_json(text: str) -> HBDiagram:
    return diagram_from_dict(json.loads(text))


# ----------------------------------------------------------------------
#  DOT and text
# ----------------------------------------------------------------------

def diagram_to_dot(d: HBDiagram, comment: str = '') -> str:
    dot = Digraph('hb_diagram', comment=comment or None)
    dot.attr('node', shape='plaintext')
    for v in d.sorted_vertices:
        dot.node(v)
    for v in sorted(d.frontier, key=lambda v: (len(v), v)):
        dot.node(v, style='dashed', shape='box')
    for a in d.sorted_arrows:
        dot.edge(a.source, a.target, label=a.letter)
    return dot.source


def diagram_report(d: HBDiagram) -> str:
    lines = []
    for k in range(1, d.depth_bound + 1):
        lines.append(f'length {k}: ' + ' '.join(d.vertices_of_length(k)))
    lines.append('arrows:')
    for a in d.sorted_arrows:
        mark = '  (frontier)' if d.is_frontier(a) else ''
        lines.append(f'  {a.source} -> {a.target} [{a.letter}]{mark}')
    return '\n'.join(lines) + '\n'


def complexity_frame(table: LanguageTable, expected: Callable[[int], int] | None = None) -> pd.DataFrame:
    rows = []
    for n in range(1, table.max_len):
        row = {
            'n': n,
            'blocks': table.complexity(n),
            'left_special': len(left_special_blocks(table, n)),
            'right_special': len(right_special_blocks(table, n)),
        }
        if expected is not None:
            row['expected'] = expected(n)
        rows.append(row)
    return pd.DataFrame(rows)


def suite_frame(results: list[CheckResult]) -> pd.DataFrame:
    return pd.DataFrame(
        [{'check': r.name, 'passed': r.passed, 'detail': r.detail} for r in results]
    )


def frame_to_text(df: pd.DataFrame) -> str:
    with pd.option_context('display.max_rows', None, 'display.width', None,
                           'display.max_columns', None, 'display.max_colwidth', None):
        return df.to_string(index=False) + '\n'


def write_output(text: str, out: Path | None = None):
    if out is None:
        sys.stdout.write(text)
        return
    out = Path(out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text)
