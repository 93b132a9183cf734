"""
Report Rendering
Every command produces one JSON document; the table format is rendered
from that document and never recomputed.
"""

import json
from fractions import Fraction
from typing import Any, Callable, Dict, List, Sequence

from i18n import t


def render_json(document: dict) -> str:
    """Canonical, byte-stable JSON."""
    return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def table(headers: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    """Left-aligned columns separated by two spaces, with a rule under the header."""
    cells = [[str(h) for h in headers]] + [["" if c is None else str(c) for c in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(headers))]
    lines = ['  '.join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
    lines.insert(1, '  '.join('-' * w for w in widths))
    return '\n'.join(lines)


def _verdict_word(holds: bool) -> str:
    return t('verdict_holds') if holds else t('verdict_fails')


def _witness_text(witness: Any) -> str:
    if not witness:
        return ""
    parts = []
    for key in sorted(witness):
        value = witness[key]
        if isinstance(value, list):
            value = '{' + ', '.join(str(v) for v in value) + '}'
        parts.append(f"{key}={value}")
    return '; '.join(parts)


def _verdict_rows(verdicts: Sequence[dict]) -> List[list]:
    return [[v['relation'], _verdict_word(v['holds']), v.get('mode', ''), _witness_text(v.get('witness'))]
            for v in verdicts]


def _check(doc: dict) -> str:
    lines = [t('label_triple', name=doc['triple'])]
    verdicts = [doc['verdict']] if 'verdict' in doc else [doc['verdicts'][k] for k in sorted(doc['verdicts'])]
    headers = [t('header_relation'), t('header_verdict'), t('header_mode'), t('header_witness')]
    lines.append(table(headers, _verdict_rows(verdicts)))
    if doc.get('violations'):
        lines.append(t('label_violations', items='; '.join(doc['violations'])))
    return '\n'.join(lines)


def _covspec_torus(doc: dict) -> str:
    headers = [t('header_q'), t('header_value'), t('header_decimal'), t('header_multiplicity'),
               t('header_rank'), t('header_index')]
    rows = [[e['q'], e['value'], e['decimal'], e['multiplicity'], e['rank'], e['index']] for e in doc['entries']]
    lines = [t('label_lattice', name=doc['lattice']), table(headers, rows)]
    for e in doc['entries']:
        if e.get('finding'):
            lines.append(t('label_finding', text=e['finding']))
    return '\n'.join(lines)


def _covspec_heisenberg(doc: dict) -> str:
    spectrum = doc['covspec']
    headers = [t('header_q'), t('header_value')]
    lines = [t('label_datum', name=doc['datum']),
             table(headers, list(zip(spectrum['entries'], spectrum['values'])))]
    if spectrum.get('symbolic'):
        lines.append(t('label_symbolic', tag=spectrum['symbolic']['tag'], condition=spectrum['symbolic']['condition']))
    if spectrum.get('boundary'):
        lines.append(t('label_boundary'))
    if 'comparison' in doc:
        lines.append(t('label_equal', value=_verdict_word(doc['comparison']['equal'])))
        lines.append(doc['comparison']['explanation'])
    return '\n'.join(lines)


def _theta(doc: dict) -> str:
    counts = doc['theta']['counts']
    other = doc.get('compare', {}).get('counts')
    headers = [t('header_norm'), t('header_count')] + ([t('header_compare')] if other is not None else [])
    norms = sorted(set(counts) | set(other or {}), key=Fraction)
    rows = []
    for norm in norms:
        row = [norm, counts.get(norm, 0)]
        if other is not None:
            row.append(other.get(norm, 0))
        rows.append(row)
    lines = [t('label_lattice', name=doc['lattice']), t('label_bound', bound=doc['theta']['bound']),
             table(headers, rows)]
    if other is not None:
        first = doc['compare'].get('first_difference')
        lines.append(t('label_first_difference', norm=first) if first else t('label_theta_agree'))
    return '\n'.join(lines)


def _jumpset(doc: dict) -> str:
    headers = [t('header_jump'), t('header_order'), t('header_multiplicity')]
    rows = [[j['value'], j['subgroup_order'], j['multiplicity']] for j in doc['jumps']['jumps']]
    return '\n'.join([t('label_length_map', name=doc['length_map']), table(headers, rows)])


def _catalog_list(doc: dict) -> str:
    headers = [t('header_id'), t('header_kind'), t('header_description')]
    return table(headers, [[e['id'], e['kind'], e['description']] for e in doc['entries']])


def _catalog_entry(doc: dict) -> str:
    entry = doc['entry']
    rows = [[key, json.dumps(value, sort_keys=True, ensure_ascii=False)] for key, value in entry['expected'].items()]
    lines = [f"{entry['id']} ({entry['kind']}): {entry['description']}", entry['provenance'],
             table([t('header_check'), t('header_expected')], rows)]
    return '\n'.join(lines)


def _catalog_check(doc: dict) -> str:
    headers = [t('header_id'), t('header_check'), t('header_expected'), t('header_actual'), t('header_status')]
    rows = []
    for report in doc['reports']:
        for r in report['results']:
            rows.append([report['entry'], r['name'], json.dumps(r['expected'], sort_keys=True, ensure_ascii=False),
                         json.dumps(r['actual'], sort_keys=True, ensure_ascii=False),
                         t('status_ok') if r['passed'] else t('status_mismatch')])
    return table(headers, rows)


def _validate(doc: dict) -> str:
    if not doc['violations']:
        return t('validation_clean')
    headers = [t('header_check'), t('header_detail')]
    rows = [[v.get('axiom') or v.get('check'), v['detail']] for v in doc['violations']]
    return table(headers, rows)


RENDERERS: Dict[str, Callable[[dict], str]] = {
    'check': _check,
    'covspec-torus': _covspec_torus,
    'covspec-heisenberg': _covspec_heisenberg,
    'theta': _theta,
    'jumpset': _jumpset,
    'catalog-list': _catalog_list,
    'catalog-entry': _catalog_entry,
    'catalog-check': _catalog_check,
    'validate': _validate,
}


def render_table(document: dict) -> str:
    return RENDERERS[document['report']](document) + "\n"


def render(document: dict, fmt: str) -> str:
    if fmt == 'table':
        return render_table(document)
    return render_json(document)
