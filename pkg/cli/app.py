"""
Command-Line Front End
Parses a verb and its options, runs one computation and writes one report
to standard output.

Usage:
    covspec check --relation jump --catalog ecs-s16
    covspec covspec-torus --lattice torus.json --format table
    covspec catalog check --all
"""

import argparse
import logging
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence

from pydantic import ValidationError

from catalog import KINDS, get_catalog
from equivalence import (
    RELATIONS,
    EquivalenceVerdict,
    Triple,
    decide,
    implication_audit,
    jump_equivalent,
    jump_equivalent_full,
    order_equivalent,
)
from heisenberg import covspec_equal_heisenberg, covspec_heisenberg, validate_heisenberg, with_known_delta
from i18n import set_language, t
from lattice import compare_theta, covering_spectrum_torus, theta_prefix
from lengthmaps import LengthMap, jump_set, jump_set_bruteforce, validate
from utils.config import override_settings
from utils.errors import CapacityError, DomainError, InputValidationError
from utils.rationals import format_fraction, to_fraction

from .loaders import load
from .reports import render

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INVALID = 2
EXIT_CAPACITY = 3

RELATION_CHOICES = list(RELATIONS) + ['jump-full', 'all']
LOG_FORMAT = '[%(name)s] %(message)s'


class _StderrHandler(logging.StreamHandler):
    """Always writes to the current sys.stderr, so redirected streams are honoured."""

    @property
    def stream(self):
        return sys.stderr

    @stream.setter
    def stream(self, _value):
        pass


def configure_logging(verbose: bool = False):
    root = logging.getLogger()
    if not any(isinstance(h, _StderrHandler) for h in root.handlers):
        handler = _StderrHandler()
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        root.addHandler(handler)
    root.setLevel(logging.DEBUG if verbose else logging.WARNING)


# Input resolution

def _resolve(kind: str, path: Optional[str], entry_id: Optional[str]) -> Any:
    """A domain object from a file, or from the catalog entry `entry_id`."""
    if path is not None:
        return load(kind, path)
    catalog = get_catalog()
    entry = catalog.get(entry_id)
    if entry.kind != kind:
        raise InputValidationError(f"catalog entry '{entry_id}' is a {entry.kind}, not a {kind}", key='catalog')
    return catalog.build(entry_id)


def _length_map(obj: Any) -> LengthMap:
    # catalog length-map entries wrap their map in an example record
    return getattr(obj, 'length_map', obj)


def _ambient_summary(triple: Triple) -> dict:
    summary = {'kind': triple.classes.kind, 'degree': triple.classes.degree}
    stability = triple.classes.to_dict().get('stability')
    if stability:
        summary['stability'] = stability
    return summary


def _decide(triple: Triple, relation: str, deduplicate: bool) -> EquivalenceVerdict:
    if relation == 'order':
        return order_equivalent(triple, deduplicate=deduplicate)
    if relation == 'jump':
        return jump_equivalent(triple, deduplicate=deduplicate)
    if relation == 'jump-full':
        return jump_equivalent_full(triple, deduplicate=deduplicate)
    return decide(triple, relation)


# Verbs

def cmd_check(args: argparse.Namespace) -> dict:
    triple = _resolve('triple', args.triple, args.catalog)
    document = {'report': 'check', 'triple': triple.name, 'ambient': _ambient_summary(triple)}
    if args.relation == 'all':
        audit = implication_audit(triple).to_dict()
        document['verdicts'] = audit['verdicts']
        document['violations'] = audit['violations']
    else:
        document['verdict'] = _decide(triple, args.relation, not args.no_dedup).to_dict()
    return document


def cmd_covspec_torus(args: argparse.Namespace) -> dict:
    lattice = _resolve('lattice', args.lattice, args.catalog)
    report = covering_spectrum_torus(lattice, with_multiplicity=not args.no_multiplicity)
    return {'report': 'covspec-torus', **report.to_dict()}


def cmd_covspec_heisenberg(args: argparse.Namespace) -> dict:
    datum = _resolve('heisenberg', args.datum, args.catalog)
    if args.delta_z is not None:
        datum = with_known_delta(datum, args.delta_z)
    document = {'report': 'covspec-heisenberg', 'datum': datum.name,
                'covspec': covspec_heisenberg(datum).to_dict()}
    if args.compare is not None or args.compare_catalog is not None:
        other = _resolve('heisenberg', args.compare, args.compare_catalog)
        if args.delta_z is not None:
            other = with_known_delta(other, args.delta_z)
        comparison = covspec_equal_heisenberg(datum, other).to_dict()
        comparison['datum'] = other.name
        document['comparison'] = comparison
    return document


def cmd_theta(args: argparse.Namespace) -> dict:
    lattice = _resolve('lattice', args.lattice, args.catalog)
    document = {'report': 'theta', 'lattice': lattice.name, 'theta': theta_prefix(lattice, args.bound).to_dict()}
    if args.compare is not None or args.compare_catalog is not None:
        other = _resolve('lattice', args.compare, args.compare_catalog)
        first = compare_theta(lattice, other, args.bound)
        document['compare'] = {
            'lattice': other.name,
            'counts': theta_prefix(other, args.bound).to_dict()['counts'],
            'first_difference': format_fraction(first) if first is not None else None,
        }
    return document


def cmd_jumpset(args: argparse.Namespace) -> dict:
    m = _length_map(_resolve('length-map', args.lengthmap, args.catalog))
    violations = validate(m)
    if violations:
        raise DomainError(f"{m.name or 'length map'} is not a length map: {violations[0].detail}")
    if args.bruteforce:
        report, method = jump_set_bruteforce(m), 'bruteforce'
    else:
        report, method = jump_set(m, with_multiplicity=not args.no_multiplicity), 'iterative'
    return {'report': 'jumpset', 'length_map': m.name, 'method': method, 'jumps': report.to_dict()}


def cmd_validate(args: argparse.Namespace) -> dict:
    if args.lengthmap is not None:
        m = load('length-map', args.lengthmap)
        return {'report': 'validate', 'kind': 'length-map', 'name': m.name,
                'violations': [v.to_dict() for v in validate(m)]}
    if args.triple is not None:
        triple = load('triple', args.triple)
        failures = triple.validate(seed=args.seed)
        violations = [{'check': 'conjugation-stability', 'element': g.to_list(), 'conjugator': s.to_list(),
                       'detail': f"label of {g} changes under conjugation by {s}"} for g, s in failures]
        return {'report': 'validate', 'kind': 'triple', 'name': triple.name, 'violations': violations}
    if args.heisenberg is not None:
        datum = load('heisenberg', args.heisenberg)
        return {'report': 'validate', 'kind': 'heisenberg', 'name': datum.name,
                'violations': [v.to_dict() for v in validate_heisenberg(datum)]}
    # a lattice that loads is positive definite; load raises otherwise
    lattice = load('lattice', args.lattice)
    return {'report': 'validate', 'kind': 'lattice', 'name': lattice.name, 'violations': []}


def cmd_catalog(args: argparse.Namespace) -> dict:
    catalog = get_catalog()
    if args.catalog_verb == 'list':
        return {'report': 'catalog-list', 'entries': [e.summary() for e in catalog.entries(args.kind)]}
    if args.catalog_verb == 'get':
        return {'report': 'catalog-entry', 'entry': catalog.get(args.id).to_dict()}
    if args.all:
        ids = [e.id for e in catalog.entries() if args.include_slow or not e.slow]
    elif args.ids:
        ids = args.ids
    else:
        raise InputValidationError("catalog check needs entry ids or --all", key='ids')
    reports = [catalog.run_checks(entry_id).to_dict() for entry_id in ids]
    return {'report': 'catalog-check', 'passed': all(r['passed'] for r in reports), 'reports': reports}


COMMANDS: Dict[str, Callable[[argparse.Namespace], dict]] = {
    'check': cmd_check,
    'covspec-torus': cmd_covspec_torus,
    'covspec-heisenberg': cmd_covspec_heisenberg,
    'theta': cmd_theta,
    'jumpset': cmd_jumpset,
    'validate': cmd_validate,
    'catalog': cmd_catalog,
}


# Parser

def _rational(text: str):
    try:
        return to_fraction(text)
    except InputValidationError:
        raise argparse.ArgumentTypeError(f"not a rational number: '{text}'") from None


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=('json', 'table'), default='json', help="report format")
    common.add_argument('--lang', default=None, help="language of table output and error lines")
    common.add_argument('--element-cap', type=int, default=None, help="largest group or ambient enumerated")
    common.add_argument('--subset-cap', type=int, default=None, help="largest label count walked exhaustively")
    common.add_argument('--closed-set-cap', type=int, default=None, help="most closed label sets visited")
    common.add_argument('--full-quantifier-cap', type=int, default=None,
                        help="largest label count for the unrestricted jump check")
    common.add_argument('--vector-cap', type=int, default=None, help="most lattice vectors enumerated")
    common.add_argument('-v', '--verbose', action='store_true', help="debug logging on stderr")
    return common


def _source(parser: argparse.ArgumentParser, flag: str, help_text: str, catalog_dest: str = 'catalog'):
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument(flag, metavar='FILE', default=None, help=help_text)
    group.add_argument('--catalog', dest=catalog_dest, metavar='ID', default=None, help="catalog entry id")


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog='covspec',
        description="Covering spectra of flat tori and Heisenberg manifolds, and equivalence of subgroup pairs.")
    verbs = parser.add_subparsers(dest='verb', required=True, metavar='VERB')

    check = verbs.add_parser('check', parents=[common], help="decide equivalence relations of a triple")
    _source(check, '--triple', "triple file")
    check.add_argument('--relation', choices=RELATION_CHOICES, default='all')
    check.add_argument('--no-dedup', action='store_true', help="quantify over raw labels, not atoms")

    torus = verbs.add_parser('covspec-torus', parents=[common], help="covering spectrum of a flat torus")
    _source(torus, '--lattice', "lattice file")
    torus.add_argument('--no-multiplicity', action='store_true')

    heis = verbs.add_parser('covspec-heisenberg', parents=[common], help="covering spectrum of a Heisenberg manifold")
    _source(heis, '--datum', "Heisenberg datum file")
    other = heis.add_mutually_exclusive_group()
    other.add_argument('--compare', metavar='FILE', default=None)
    other.add_argument('--compare-catalog', metavar='ID', default=None)
    heis.add_argument('--delta-z', type=_rational, default=None, help="known central length q, replacing the file's")

    theta = verbs.add_parser('theta', parents=[common], help="theta series prefix of a lattice")
    _source(theta, '--lattice', "lattice file")
    theta.add_argument('--bound', type=_rational, required=True, help="largest squared norm counted")
    other = theta.add_mutually_exclusive_group()
    other.add_argument('--compare', metavar='FILE', default=None)
    other.add_argument('--compare-catalog', metavar='ID', default=None)

    jumps = verbs.add_parser('jumpset', parents=[common], help="jump set of a length map")
    _source(jumps, '--lengthmap', "length-map file")
    jumps.add_argument('--no-multiplicity', action='store_true')
    jumps.add_argument('--bruteforce', action='store_true', help="definitional evaluation")

    check_file = verbs.add_parser('validate', parents=[common], help="validate an input file")
    target = check_file.add_mutually_exclusive_group(required=True)
    target.add_argument('--lengthmap', metavar='FILE', default=None)
    target.add_argument('--triple', metavar='FILE', default=None)
    target.add_argument('--heisenberg', metavar='FILE', default=None)
    target.add_argument('--lattice', metavar='FILE', default=None)
    check_file.add_argument('--seed', type=int, default=0, help="seed of the conjugation spot check")

    catalog = verbs.add_parser('catalog', help="list, show and check catalog entries")
    catalog_verbs = catalog.add_subparsers(dest='catalog_verb', required=True, metavar='ACTION')
    listing = catalog_verbs.add_parser('list', parents=[common])
    listing.add_argument('--kind', choices=KINDS, default=None)
    get = catalog_verbs.add_parser('get', parents=[common])
    get.add_argument('id')
    run = catalog_verbs.add_parser('check', parents=[common])
    run.add_argument('ids', nargs='*')
    run.add_argument('--all', action='store_true')
    run.add_argument('--include-slow', action='store_true')

    return parser


# Entry point

def _error_line(key: str, error: Exception) -> str:
    return t(key, message=str(error))


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run one command.

    Returns:
        Exit code: 0 on success, 1 when a catalog check mismatches, 2 on invalid input or a violated
        precondition, 3 when a capacity limit is exceeded
    """
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_INVALID

    configure_logging(args.verbose)
    if args.lang:
        set_language(args.lang)
    caps = {'element_cap': args.element_cap, 'subset_cap': args.subset_cap,
            'closed_set_cap': args.closed_set_cap, 'full_quantifier_cap': args.full_quantifier_cap,
            'vector_cap': args.vector_cap}

    try:
        with override_settings(**caps):
            logger.debug("Running %s", args.verb)
            document = COMMANDS[args.verb](args)
    except CapacityError as e:
        print(_error_line('error_capacity', e), file=sys.stderr)
        return EXIT_CAPACITY
    except (InputValidationError, ValidationError) as e:
        print(_error_line('error_validation', e), file=sys.stderr)
        return EXIT_INVALID
    except DomainError as e:
        print(_error_line('error_domain', e), file=sys.stderr)
        return EXIT_INVALID

    sys.stdout.write(render(document, args.format))
    if document['report'] == 'catalog-check' and not document['passed']:
        return EXIT_CHECK_FAILED
    return EXIT_OK


def main(argv: Optional[List[str]] = None):
    sys.exit(run(argv))
