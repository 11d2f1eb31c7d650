import os
import logging
from typing import Dict, List, Optional

import pandas as pd
import ujson

import config

logger = logging.getLogger(__name__)

JSON_INDENT = 2
FORMATS = ('json', 'text')


class ReportGenerator:
    """
    Renders report dictionaries as JSON or as plain-text tables
    """

    def __init__(self, output_dir: str = None):
        self.output_dir = output_dir or config.OUTPUT_DIR

    def render_json(self, report: Dict) -> str:
        """
        Serialize a report with sorted keys and a fixed indent

        Args:
            report: JSON-ready dict; scalars already in canonical text

        Returns:
            The JSON text, newline terminated, identical across runs
        """
        return ujson.dumps(report, sort_keys=True, indent=JSON_INDENT, ensure_ascii=False,
                           escape_forward_slashes=False) + '\n'

    def render_text(self, report: Dict) -> str:
        """
        Render a report as text, with tables for the parts that have rows

        Classification reports, Hopf verification reports and graded
        dimensions get dedicated layouts; anything else is flattened into a
        key/value table.
        """
        if 'hopf_classification' in report:
            sections = self._classification_sections(report)
        elif 'checks' in report and 'dim' in report:
            sections = self._hopf_sections(report)
        elif 'graded' in report or 'dims' in report:
            sections = self._graded_sections(report)
        else:
            sections = [('', self._key_value_table(report))]
        blocks = []
        for title, body in sections:
            blocks.append(f"{title}\n{'-' * len(title)}\n{body}" if title else body)
        return '\n\n'.join(blocks) + '\n'

    def render(self, report: Dict, fmt: str = 'json') -> str:
        if fmt not in FORMATS:
            raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")
        return self.render_json(report) if fmt == 'json' else self.render_text(report)

    def write(self, text: str, out_path: str) -> str:
        """
        Write rendered text, creating the directory when needed

        Args:
            text: rendered report
            out_path: target file; relative names go under the output directory

        Returns:
            Path written
        """
        if not os.path.isabs(out_path) and not os.path.dirname(out_path):
            out_path = os.path.join(self.output_dir, out_path)
        directory = os.path.dirname(out_path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(out_path, 'w', encoding='utf-8') as f:
            f.write(text)
        logger.info(f"Report written to {out_path}")
        return out_path

    def emit(self, report: Dict, fmt: str = 'json', out_path: Optional[str] = None) -> str:
        """Render, and write when out_path is given; returns the rendered text"""
        text = self.render(report, fmt)
        if out_path:
            self.write(text, out_path)
        return text

    def _classification_sections(self, report: Dict) -> List[tuple]:
        p = report['p']
        sections = [(f"Classification over H_{{{p},-1}} (scope: {report['scope']})",
                     self._key_value_table({
                         'schema': report['schema'],
                         'one-dimensional simples': report['simple_modules']['one_dim'],
                         'two-dimensional simples': report['simple_modules']['two_dim'],
                     }))]

        sizes = report['index_sets']['sizes']
        sections.append(('Index sets', self._table(
            [{'set': name, 'size': size} for name, size in sorted(sizes.items())])))

        congruences = [{
            'system': name,
            'shape': record['shape'],
            'solutions': record['count'],
            'closed form': {True: 'agrees', False: 'differs', None: '-'}[record['agrees']],
        } for name, record in sorted(report['congruences'].items())]
        sections.append(('Congruence systems', self._table(congruences)))

        nichols = [{
            'object': e['object'],
            'row': e['row'] or '-',
            'dim': e['dim'] if e['dim'] is not None else '?',
            'formula': e['formula'] or '-',
            'evidence': e['evidence_level'],
        } for e in report['nichols']]
        sections.append(('Finite Nichols algebras', self._table(nichols)))

        for title, key in (('Hopf algebras over simple objects', 'hopf_classification'),
                           ('Hopf algebras over sums', 'hopf_semisimple')):
            rows = [{
                'algebra': h['algebra'],
                'reason': h['reason'],
                'lifting': h['lifting'],
                'parameters': h['parameters'],
                'dim': h['dim'] if h['dim'] is not None else '?',
                'evidence': h['evidence_level'],
            } for h in report[key]]
            sections.append((title, self._table(rows)))

        if report['undetermined']:
            sections.append(('Undetermined', '\n'.join(report['undetermined'])))
        if report.get('large_prime'):
            sections.append(('Prime p > 5', self._key_value_table(report['large_prime'])))
        if report['open_flags']:
            sections.append(('Open flags', self._key_value_table(report['open_flags'])))
        sections.append(('Notes', '\n'.join(report['notes'])))
        return sections

    def _hopf_sections(self, report: Dict) -> List[tuple]:
        rows = [{
            'axiom': name,
            'pass': check['pass'],
            'witness': check.get('witness') or '-',
        } for name, check in report['checks'].items()]
        head = {k: report.get(k) for k in ('algebra', 'dim', 'mode', 'antipode_order', 'passed')}
        return [(str(report.get('algebra', 'Hopf algebra')), self._key_value_table(head)),
                ('Axioms', self._table(rows))]

    def _graded_sections(self, report: Dict) -> List[tuple]:
        graded = report.get('graded', report)
        rows = [{'degree': n, 'dim': d} for n, d in enumerate(graded['dims'])]
        rest = {k: v for k, v in report.items() if k not in ('graded', 'dims')}
        rest.update({k: graded[k] for k in ('total', 'status') if k in graded})
        return [('', self._key_value_table(rest)), ('Graded dimensions', self._table(rows))]

    @staticmethod
    def _table(rows: List[Dict]) -> str:
        if not rows:
            return '(none)'
        return pd.DataFrame(rows).to_string(index=False)

    @staticmethod
    def _key_value_table(data: Dict) -> str:
        flat = pd.json_normalize(data, sep='.').iloc[0] if data else pd.Series(dtype=object)
        if flat.empty:
            return '(empty)'
        frame = pd.DataFrame({'key': flat.index, 'value': [str(v) for v in flat.values]})
        return frame.to_string(index=False)
