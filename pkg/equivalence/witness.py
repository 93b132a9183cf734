"""
Separating length maps built from a class-subset witness.
"""

from fractions import Fraction
from typing import Iterable

from lengthmaps import LengthMap
from utils.errors import DomainError

from .base import ClassLabel
from .engine import analyse
from .triple import Triple

WITNESS_VALUES = {'identity': Fraction(0), 'S': Fraction(2), 'T': Fraction(3), 'rest': Fraction(4)}


def witness_length_map(t: Triple, S: Iterable[ClassLabel], T: Iterable[ClassLabel]) -> LengthMap:
    """
    m = 0 on the identity, 2 on S, 3 on T - S and 4 elsewhere.

    The map lives on H ∪ H' with 4 as default, so it can be restricted to
    either subgroup. When (S, T) separates H from H', exactly one of the
    two restrictions has 3 as a jump.

    Raises:
        DomainError: S is not contained in T, S or T is not closed under inverses,
            or a restriction of the map fails the length-map axioms
    """
    S, T = frozenset(S), frozenset(T)
    if not S <= T:
        raise DomainError("S must be contained in T")
    system = t.classes
    analysis = analyse(t)
    values = {}
    for group in (t.H, t.Hp):
        for g in group.elements:
            if g in values:
                continue
            label = system.label(g)
            if g.is_identity():
                values[g] = WITNESS_VALUES['identity']
            elif label in S:
                values[g] = WITNESS_VALUES['S']
            elif label in T:
                values[g] = WITNESS_VALUES['T']
            else:
                values[g] = WITNESS_VALUES['rest']
    for subset, name in ((S, 'S'), (T, 'T')):
        for label in subset:
            for side in ('H', 'Hp'):
                for g in analysis.members[side].get(label, ()):
                    if system.label(g.inverse()) not in subset:
                        raise DomainError(f"{name} is not closed under inverses at label {label}")
    m = LengthMap(None, values, default=WITNESS_VALUES['rest'], name=f"witness({t.name})")
    for group in (t.H, t.Hp):
        m.restrict(group)
    return m
