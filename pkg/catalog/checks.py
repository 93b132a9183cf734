"""
Catalog Checks
Named computations on catalog objects, each returning a JSON value that is
compared verbatim with the entry's expected block.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Callable, Dict, List, Optional, Tuple

from equivalence import (
    Triple,
    are_conjugate,
    decide,
    implication_audit,
    intersection_core,
    is_reduced,
    witness_length_map,
)
from groups import FiniteGroup, closure, element_order, order_statistics
from heisenberg import covspec_equal_heisenberg, covspec_heisenberg, validate_heisenberg
from lattice import LatticeForm, compare_theta, covering_spectrum_torus
from lengthmaps import jump_set
from utils.errors import DomainError, InputValidationError
from utils.rationals import format_fraction

logger = logging.getLogger(__name__)

THETA_BOUND = 100

CheckFunction = Callable[[Any, Optional[Any]], Any]

# name -> (object kind, function(object, partner object))
_CHECKS: Dict[str, Tuple[str, CheckFunction]] = {}


def register_check(name: str, kind: str):
    def decorator(fn: CheckFunction) -> CheckFunction:
        _CHECKS[name] = (kind, fn)
        return fn
    return decorator


def available_checks(kind: Optional[str] = None) -> List[str]:
    return sorted(name for name, (k, _) in _CHECKS.items() if kind is None or k == kind)


def run_check(name: str, obj: Any, partner: Any = None) -> Any:
    """
    Evaluate one named check.

    Raises:
        InputValidationError: unknown check name
        DomainError: the check needs a partner and none was given
    """
    try:
        _, fn = _CHECKS[name]
    except KeyError:
        raise InputValidationError(f"unknown check '{name}'", key='check') from None
    return fn(obj, partner)


@dataclass
class CheckResult:
    name: str
    expected: Any
    actual: Any

    @property
    def passed(self) -> bool:
        return self.expected == self.actual

    def to_dict(self) -> dict:
        return {'name': self.name, 'expected': self.expected, 'actual': self.actual, 'passed': self.passed}


@dataclass
class CheckReport:
    """Expected against actual for every check of one entry."""
    entry: str
    results: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> List[CheckResult]:
        return [r for r in self.results if not r.passed]

    def to_dict(self) -> dict:
        return {
            'entry': self.entry,
            'passed': self.passed,
            'results': [r.to_dict() for r in self.results],
        }


def _need_partner(partner: Any, name: str):
    if partner is None:
        raise DomainError(f"check '{name}' needs a partner entry")


# Triples

def _relation_check(relation: str):
    def check(t: Triple, _partner=None) -> bool:
        return decide(t, relation).holds
    return check


for _relation in ('gassmann', 'kronecker', 'order', 'jump'):
    register_check(_relation, 'triple')(_relation_check(_relation))


@register_check('order_H', 'triple')
def check_order_h(t: Triple, _partner=None) -> int:
    return t.H.order


@register_check('order_Hprime', 'triple')
def check_order_hp(t: Triple, _partner=None) -> int:
    return t.Hp.order


def _ambient(t: Triple) -> FiniteGroup:
    if t.ambient is None:
        raise DomainError(f"{t.name}: ambient is not enumerated")
    return t.ambient


@register_check('ambient_order', 'triple')
def check_ambient_order(t: Triple, _partner=None) -> int:
    return _ambient(t).order


@register_check('index', 'triple')
def check_index(t: Triple, _partner=None) -> List[int]:
    G = _ambient(t)
    return [G.order // t.H.order, G.order // t.Hp.order]


def _statistics(group: FiniteGroup) -> Dict[str, int]:
    return {str(k): v for k, v in order_statistics(group).items()}


@register_check('order_statistics_H', 'triple')
def check_statistics_h(t: Triple, _partner=None) -> Dict[str, int]:
    return _statistics(t.H)


@register_check('order_statistics_Hprime', 'triple')
def check_statistics_hp(t: Triple, _partner=None) -> Dict[str, int]:
    return _statistics(t.Hp)


@register_check('implication_violations', 'triple')
def check_implications(t: Triple, _partner=None) -> int:
    return len(implication_audit(t).violations)


@register_check('conjugate', 'triple')
def check_conjugate(t: Triple, _partner=None) -> bool:
    return are_conjugate(_ambient(t), t.H, t.Hp)


@register_check('reduced', 'triple')
def check_reduced(t: Triple, _partner=None) -> bool:
    return is_reduced(t)


@register_check('core_order', 'triple')
def check_core_order(t: Triple, _partner=None) -> int:
    return intersection_core(t).order


@register_check('jump_witness_S', 'triple')
def check_jump_witness(t: Triple, _partner=None) -> Optional[List[str]]:
    verdict = decide(t, 'jump')
    if verdict.holds:
        return None
    return [str(label) for label in verdict.witness['S']]


@register_check('order_witness_indices', 'triple')
def check_order_witness(t: Triple, _partner=None) -> Optional[List[int]]:
    """[H : <H ∩ S>] and [H' : <H' ∩ S>] at the order witness S."""
    verdict = decide(t, 'order')
    if verdict.holds:
        return None
    w = verdict.witness
    return [t.H.order // w['order_H'], t.Hp.order // w['order_Hprime']]


@register_check('top_order_generates', 'triple')
def check_top_order(t: Triple, _partner=None) -> List[bool]:
    """Whether the elements of largest order generate H, and H'."""
    result = []
    for group in (t.H, t.Hp):
        top = max(element_order(g) for g in group.elements)
        generated = closure(group, [g for g in group.elements if element_order(g) == top])
        result.append(generated.order == group.order)
    return result


@register_check('witness_map_jumps', 'triple')
def check_witness_map(t: Triple, _partner=None) -> Optional[Dict[str, List[str]]]:
    """Jump sets of the 0/2/3/4 map of the jump witness, restricted to H and H'."""
    verdict = decide(t, 'jump')
    if verdict.holds:
        return None
    m = witness_length_map(t, verdict.witness['S'], verdict.witness['T'])
    return {
        side: [format_fraction(v) for v in jump_set(m.restrict(group), with_multiplicity=False).values]
        for side, group in (('H', t.H), ('Hprime', t.Hp))
    }


@register_check('complement_classes_generate', 'triple')
def check_complement_classes(t: Triple, _partner=None) -> List[bool]:
    """Whether the classes meeting notes['complement'] generate H, and H'."""
    complement = t.notes.get('complement')
    if complement is None:
        raise DomainError(f"{t.name}: no complement recorded")
    labels = {t.classes.label(g) for g in complement.elements}
    result = []
    for group in (t.H, t.Hp):
        generated = closure(group, [g for g in group.elements if t.classes.label(g) in labels])
        result.append(generated.order == group.order)
    return result


# Lattices

@lru_cache(maxsize=64)
def _spectrum(L: LatticeForm):
    return covering_spectrum_torus(L)


@register_check('covspec_q', 'lattice')
def check_covspec_q(L: LatticeForm, _partner=None) -> List[str]:
    return [format_fraction(q) for q in _spectrum(L).q_values]


@register_check('covspec_values', 'lattice')
def check_covspec_values(L: LatticeForm, _partner=None) -> List[str]:
    return _spectrum(L).values


@register_check('multiplicities', 'lattice')
def check_multiplicities(L: LatticeForm, _partner=None) -> List[Optional[int]]:
    return _spectrum(L).multiplicities


@register_check('ranks', 'lattice')
def check_ranks(L: LatticeForm, _partner=None) -> List[int]:
    return [e.rank for e in _spectrum(L).entries]


@register_check('theta_matches_partner', 'lattice')
def check_theta(L: LatticeForm, partner: Optional[LatticeForm] = None) -> bool:
    _need_partner(partner, 'theta_matches_partner')
    return compare_theta(L, partner, THETA_BOUND) is None


@register_check('covspec_matches_partner', 'lattice')
def check_covspec_partner(L: LatticeForm, partner: Optional[LatticeForm] = None) -> bool:
    _need_partner(partner, 'covspec_matches_partner')
    return _spectrum(L).q_values == _spectrum(partner).q_values


@register_check('jumps_beyond_partner', 'lattice')
def check_extra_jumps(L: LatticeForm, partner: Optional[LatticeForm] = None) -> List[str]:
    """Squared jump values of L missing from the partner's spectrum."""
    _need_partner(partner, 'jumps_beyond_partner')
    other = set(_spectrum(partner).q_values)
    return [format_fraction(q) for q in _spectrum(L).q_values if q not in other]


# Heisenberg data

@register_check('heisenberg_violations', 'heisenberg')
def check_heisenberg_violations(d, _partner=None) -> int:
    return len(validate_heisenberg(d))


@register_check('heisenberg_entries', 'heisenberg')
def check_heisenberg_entries(d, _partner=None) -> List[str]:
    return [format_fraction(q) for q in covspec_heisenberg(d).rational_entries]


@register_check('covspec_equal_partner', 'heisenberg')
def check_heisenberg_partner(d, partner=None) -> bool:
    _need_partner(partner, 'covspec_equal_partner')
    return covspec_equal_heisenberg(d, partner).equal


# Length maps

@register_check('restricted_order', 'length-map')
def check_restricted(example, _partner=None) -> int:
    return example.restricted.order


@register_check('intersected_order', 'length-map')
def check_intersected(example, _partner=None) -> int:
    return len(example.intersected)
