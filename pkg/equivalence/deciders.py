"""
Equivalence Deciders
Gassmann-Sunada, Kronecker, order and jump equivalence of subgroup pairs,
plus the implication audit and reduced-triple helpers.
"""

import itertools
import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from groups import FiniteGroup, QuotientGroup, closure, normal_core, subgroup_from_elements
from utils.config import get_settings
from utils.errors import CapacityError, DomainError

from .base import ClassLabel
from .engine import LabelAnalysis, analyse
from .systems import EnumeratedClasses
from .triple import Triple

logger = logging.getLogger(__name__)

RELATIONS = ('gassmann', 'kronecker', 'order', 'jump')


def _jsonable(value: Any) -> Any:
    if isinstance(value, ClassLabel):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    return value


@dataclass
class EquivalenceVerdict:
    """
    Outcome of one decider.

    When holds is False, `witness` carries the separating data; labels in it
    are ClassLabel objects until serialized.
    """
    relation: str
    holds: bool
    witness: Optional[Dict[str, Any]] = None
    mode: str = 'direct'
    atoms: Optional[int] = None

    def to_dict(self) -> dict:
        result = {
            'relation': self.relation,
            'holds': self.holds,
            'witness': _jsonable(self.witness) if self.witness is not None else None,
            'mode': self.mode,
        }
        if self.atoms is not None:
            result['atoms'] = self.atoms
        return result


def classes_meeting(t: Triple) -> List[ClassLabel]:
    """Labels occurring in H ∪ H', identity excluded, in label order."""
    return list(analyse(t).labels)


def _label_counts(t: Triple) -> Tuple[Dict[ClassLabel, int], Dict[ClassLabel, int]]:
    analysis = analyse(t)
    count_h = {l: len(v) for l, v in analysis.members['H'].items()}
    count_hp = {l: len(v) for l, v in analysis.members['Hp'].items()}
    return count_h, count_hp


def gassmann_equivalent(t: Triple) -> EquivalenceVerdict:
    """#(H ∩ C) = #(H' ∩ C) for every label C."""
    count_h, count_hp = _label_counts(t)
    for label in classes_meeting(t):
        a, b = count_h.get(label, 0), count_hp.get(label, 0)
        if a != b:
            return EquivalenceVerdict('gassmann', False, {'label': label, 'count_H': a, 'count_Hprime': b})
    return EquivalenceVerdict('gassmann', True)


def kronecker_equivalent(t: Triple) -> EquivalenceVerdict:
    """H and H' meet exactly the same labels."""
    count_h, count_hp = _label_counts(t)
    for label in classes_meeting(t):
        in_h, in_hp = label in count_h, label in count_hp
        if in_h != in_hp:
            return EquivalenceVerdict('kronecker', False, {'label': label, 'meets': 'H' if in_h else 'Hprime'})
    return EquivalenceVerdict('kronecker', True)


def order_equivalent(t: Triple, deduplicate: bool = True) -> EquivalenceVerdict:
    """
    |<H ∩ S>| = |<H' ∩ S>| for every conjugation-stable S.

    The failure witness is the first subset in (size, label) order; above
    subset_cap it is a failing subset of the same size.
    """
    analysis = analyse(t, deduplicate=deduplicate)
    for mask, pair in analysis.walk():
        order_h, order_hp = analysis.orders(pair)
        if order_h != order_hp:
            witness = {'S': analysis.labels_of(mask), 'order_H': order_h, 'order_Hprime': order_hp}
            return EquivalenceVerdict('order', False, witness, mode=analysis.mode, atoms=analysis.atom_count)
    return EquivalenceVerdict('order', True, mode=analysis.mode, atoms=analysis.atom_count)


def _jump_witness(analysis: LabelAnalysis, mask: int, pair, atom: int) -> Dict[str, Any]:
    bigger = analysis.join_pair(pair, atom)
    small_h, small_hp = analysis.orders(pair)
    big_h, big_hp = analysis.orders(bigger)
    return {
        'S': analysis.labels_of(mask),
        'C': analysis.atom_labels[atom],
        'T': analysis.labels_of(mask | 1 << atom),
        'order_H_S': small_h,
        'order_H_T': big_h,
        'order_Hprime_S': small_hp,
        'order_Hprime_T': big_hp,
    }


def jump_equivalent(t: Triple, deduplicate: bool = True) -> EquivalenceVerdict:
    """
    <H ∩ S> = <H ∩ T> iff <H' ∩ S> = <H' ∩ T> for all S ⊆ T.

    Evaluated by joins: for every S and every atom C outside S,
    <H ∩ C> ⊆ <H ∩ S> iff <H' ∩ C> ⊆ <H' ∩ S>. Witness is (S, C) with
    T = S ∪ C.
    """
    analysis = analyse(t, deduplicate=deduplicate)
    for mask, pair in analysis.walk():
        for atom in range(analysis.atom_count):
            if mask >> atom & 1:
                continue
            inside_h, inside_hp = analysis.atom_inside(pair, atom)
            if inside_h != inside_hp:
                witness = _jump_witness(analysis, mask, pair, atom)
                return EquivalenceVerdict('jump', False, witness, mode=analysis.mode, atoms=analysis.atom_count)
    return EquivalenceVerdict('jump', True, mode=analysis.mode, atoms=analysis.atom_count)


def jump_equivalent_full(t: Triple, deduplicate: bool = True) -> EquivalenceVerdict:
    """
    Unrestricted form: for all subsets S, T (not only S ⊆ T),
    <H ∩ S> = <H ∩ T> iff <H' ∩ S> = <H' ∩ T>.

    Raises:
        CapacityError: more atoms than the full_quantifier_cap setting
    """
    analysis = analyse(t, deduplicate=deduplicate)
    k = analysis.atom_count
    cap = get_settings().full_quantifier_cap
    if k > cap:
        raise CapacityError('full_quantifier_cap', cap, k, detail=f"k'={k}")
    pairs = list(analysis.subsets_by_size())
    for (mask_s, pair_s), (mask_t, pair_t) in itertools.combinations(pairs, 2):
        if (pair_s[0] == pair_t[0]) != (pair_s[1] == pair_t[1]):
            witness = {
                'S': analysis.labels_of(mask_s),
                'T': analysis.labels_of(mask_t),
                'orders_S': analysis.orders(pair_s),
                'orders_T': analysis.orders(pair_t),
            }
            return EquivalenceVerdict('jump', False, witness, mode='full', atoms=k)
    return EquivalenceVerdict('jump', True, mode='full', atoms=k)


DECIDERS = {
    'gassmann': gassmann_equivalent,
    'kronecker': kronecker_equivalent,
    'order': order_equivalent,
    'jump': jump_equivalent,
}


def decide(t: Triple, relation: str) -> EquivalenceVerdict:
    try:
        decider = DECIDERS[relation]
    except KeyError:
        raise DomainError(f"unknown relation '{relation}'") from None
    return decider(t)


@dataclass
class AuditReport:
    """All four verdicts of a triple and any broken implication."""
    triple: str
    verdicts: Dict[str, EquivalenceVerdict]
    violations: List[str] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            'triple': self.triple,
            'verdicts': {name: v.to_dict() for name, v in self.verdicts.items()},
            'violations': list(self.violations),
        }


IMPLICATIONS = (('order', 'jump'), ('jump', 'kronecker'), ('gassmann', 'kronecker'))


def implication_audit(t: Triple) -> AuditReport:
    """
    Evaluate all four relations and flag broken implications
    (order => jump => Kronecker, Gassmann => Kronecker).
    """
    verdicts = {name: DECIDERS[name](t) for name in RELATIONS}
    violations = []
    for stronger, weaker in IMPLICATIONS:
        if verdicts[stronger].holds and not verdicts[weaker].holds:
            violations.append(f"{stronger} holds but {weaker} fails")
    if violations:
        logger.warning("%s: inconsistent verdicts: %s", t.name or 'triple', '; '.join(violations))
    return AuditReport(t.name, verdicts, violations)


def _enumerated_ambient(t: Triple) -> FiniteGroup:
    if not isinstance(t.classes, EnumeratedClasses):
        raise DomainError(f"{t.name or 'triple'}: operation needs an enumerated ambient")
    return t.classes.group


def intersection_core(t: Triple) -> FiniteGroup:
    """Largest normal subgroup of G inside H ∩ H'."""
    G = _enumerated_ambient(t)
    meet = subgroup_from_elements(G, t.H.element_set & t.Hp.element_set, name="H∩H'")
    return normal_core(G, meet)


def is_reduced(t: Triple) -> bool:
    """True iff H ∩ H' contains no nontrivial normal subgroup of G."""
    return intersection_core(t).order == 1


def reduce_triple(t: Triple) -> Tuple[Triple, FiniteGroup]:
    """
    (G/N, H/N, H'/N) for N the normal core of H ∩ H'.

    Returns:
        (reduced triple, N)
    """
    N = intersection_core(t)
    return quotient_triple(t, N), N


def quotient_triple(t: Triple, N: FiniteGroup) -> Triple:
    """
    (G/N, HN/N, H'N/N) with G/N realized on its cosets.

    Raises:
        InputValidationError: N is not normal in G
    """
    G = _enumerated_ambient(t)
    Q = QuotientGroup(G, N, name=f"{G.name}/{N.name or 'N'}")
    group = Q.as_permutation_group()
    H_image = Q.image(t.H, name=f"{t.H.name}/N")
    Hp_image = Q.image(t.Hp, name=f"{t.Hp.name}/N")
    logger.debug("%s: quotient of order %d", t.name or 'triple', group.order)
    return Triple(EnumeratedClasses(group), H_image, Hp_image, name=f"{t.name}/N")


def are_conjugate(G: FiniteGroup, H: FiniteGroup, Hp: FiniteGroup) -> bool:
    """True iff g H g^-1 = H' for some g in G (search over the conjugates of H)."""
    if H.order != Hp.order:
        return False
    target = Hp.element_set
    start = H.element_set
    seen = {start}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        if current == target:
            return True
        for s in G.generators:
            s_inv = s.inverse()
            conj = frozenset(s * x * s_inv for x in current)
            if conj not in seen:
                seen.add(conj)
                queue.append(conj)
    return False


def verify_witness(t: Triple, verdict: EquivalenceVerdict) -> bool:
    """Re-evaluate a failure witness on fresh element data."""
    if verdict.holds or verdict.witness is None:
        return False
    w = verdict.witness
    system = t.classes

    def generated(group: FiniteGroup, labels) -> frozenset:
        wanted = set(labels)
        return closure(group, [g for g in group.elements if system.label(g) in wanted]).element_set

    def count(group: FiniteGroup) -> int:
        return sum(1 for g in group.elements if system.label(g) == w['label'])

    if verdict.relation == 'gassmann':
        return count(t.H) != count(t.Hp)
    if verdict.relation == 'kronecker':
        return (count(t.H) > 0) != (count(t.Hp) > 0)
    if verdict.relation == 'order':
        return len(generated(t.H, w['S'])) != len(generated(t.Hp, w['S']))
    if verdict.relation == 'jump':
        same_h = generated(t.H, w['S']) == generated(t.H, w['T'])
        same_hp = generated(t.Hp, w['S']) == generated(t.Hp, w['T'])
        return same_h != same_hp
    return False
