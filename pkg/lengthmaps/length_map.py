"""
Length Map Module
Conjugation-invariant length functions on finite groups and their axioms.

A length map m satisfies
    (i)   m(1) = 0 and m(g) > 0 for g != 1
    (ii)  m(h g h^-1) = m(g)
    (iii) m(g^k) <= |k| m(g)
All values are exact Fractions.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Tuple

from groups import FiniteGroup, Permutation
from utils.errors import DomainError, InputValidationError
from utils.rationals import RationalLike, format_fraction, to_fraction

logger = logging.getLogger(__name__)


class LengthMap:
    """
    Exact length values on the elements of a domain group.

    Args:
        domain: Group the map lives on. May be None for maps defined on an
            element universe that is not a group (values plus `default`);
            such maps must be restricted before filtrations are taken.
        values: element -> length
        default: Length of any element missing from `values`
        name: Label for reports
    """

    def __init__(self, domain: Optional[FiniteGroup], values: Mapping[Permutation, RationalLike],
                 default: Optional[RationalLike] = None, name: str = ""):
        self.domain = domain
        self._values: Dict[Permutation, Fraction] = {g: to_fraction(v) for g, v in values.items()}
        self.default = to_fraction(default) if default is not None else None
        self.name = name

    def __call__(self, g: Permutation) -> Fraction:
        value = self._values.get(g)
        if value is not None:
            return value
        if self.default is not None and (self.domain is None or g in self.domain):
            return self.default
        raise DomainError(f"length of {g} is undefined in {self.name or 'length map'}")

    @property
    def elements(self) -> Tuple[Permutation, ...]:
        """Domain elements, or the explicitly valued ones when there is no domain."""
        if self.domain is not None:
            return self.domain.elements
        return tuple(sorted(self._values))

    def require_domain(self) -> FiniteGroup:
        if self.domain is None:
            raise DomainError(f"{self.name or 'length map'} has no domain group; restrict it first")
        return self.domain

    def image(self) -> List[Fraction]:
        """Distinct values taken on the domain, sorted."""
        return sorted({self(g) for g in self.elements})

    def positive_values(self) -> List[Fraction]:
        return sorted({self(g) for g in self.elements if not g.is_identity()})

    def restrict(self, H: FiniteGroup, name: Optional[str] = None) -> "LengthMap":
        """
        Same values on the subgroup H.

        Conjugation invariance on H is checked against H's own generators, so
        a domainless map only restricts to subgroups where it is a length map.

        Raises:
            DomainError: H is not inside the domain, a value is missing, or the
                restriction violates an axiom
        """
        if self.domain is not None and not H.element_set <= self.domain.element_set:
            raise DomainError(f"{H.name or 'subgroup'} is not contained in the domain of {self.name or 'length map'}")
        values = {h: self(h) for h in H.elements}
        restricted = LengthMap(H, values, name=name or f"{self.name}|{H.name}")
        violations = validate(restricted)
        if violations:
            first = violations[0]
            raise DomainError(f"restriction of {self.name or 'length map'} to {H.name or 'subgroup'} "
                              f"violates the {first.axiom} axiom: {first.detail}")
        return restricted

    def to_dict(self) -> dict:
        """Length-map file representation: element index -> "p/q"."""
        domain = self.require_domain()
        return {
            'name': self.name,
            'group': domain.to_dict(),
            'values': {str(i): format_fraction(self(g)) for i, g in enumerate(domain.elements)},
        }

    def __repr__(self) -> str:
        size = len(self.elements)
        return f"<LengthMap '{self.name}' elements={size} values={[format_fraction(v) for v in self.image()]}>"


@dataclass(frozen=True)
class Violation:
    """One failed length-map axiom."""
    axiom: str
    elements: Tuple[Permutation, ...]
    detail: str

    def to_dict(self) -> dict:
        return {
            'axiom': self.axiom,
            'elements': [g.to_list() for g in self.elements],
            'detail': self.detail,
        }


def _power_violations(m: LengthMap, g: Permutation) -> Iterable[Violation]:
    base = m(g)
    order = g.order
    power = g
    for j in range(2, order):
        power = power * g
        bound = min(j, order - j) * base
        value = m(power)
        if value > bound:
            yield Violation('power', (g, power),
                            f"m(g^{j}) = {format_fraction(value)} > {min(j, order - j)}*{format_fraction(base)}")


def validate(m: LengthMap, conjugators: Optional[Iterable[Permutation]] = None) -> List[Violation]:
    """
    Check the three length-map axioms on every element.

    Conjugation invariance is checked against `conjugators` (default: the
    domain's generators).

    Returns:
        Empty list when m is a length map, otherwise the violations found
    """
    violations: List[Violation] = []
    elements = m.elements
    if conjugators is None:
        conjugators = m.domain.generators if m.domain is not None else ()
    conjugators = [(s, s.inverse()) for s in conjugators]

    for g in elements:
        value = m(g)
        if g.is_identity():
            if value != 0:
                violations.append(Violation('positivity', (g,), f"m(1) = {format_fraction(value)}"))
            continue
        if value <= 0:
            violations.append(Violation('positivity', (g,), f"m(g) = {format_fraction(value)} <= 0"))
        for s, s_inv in conjugators:
            conj = s * g * s_inv
            if m(conj) != value:
                violations.append(Violation('conjugation', (g, conj),
                                            f"{format_fraction(value)} != {format_fraction(m(conj))}"))
        violations.extend(_power_violations(m, g))

    if violations:
        logger.debug("%s: %d axiom violations", m.name or 'length map', len(violations))
    return violations


def is_length_map(m: LengthMap) -> bool:
    return not validate(m)


def constant_length_map(G: FiniteGroup, value: RationalLike = 1, name: Optional[str] = None) -> LengthMap:
    """value on every non-identity element."""
    value = to_fraction(value)
    values = {g: (Fraction(0) if g.is_identity() else value) for g in G.elements}
    return LengthMap(G, values, name=name or f"const({format_fraction(value)})")


def length_map_from_function(G: FiniteGroup, fn: Callable[[Permutation], RationalLike],
                             name: str = "") -> LengthMap:
    return LengthMap(G, {g: fn(g) for g in G.elements}, name=name)


def length_map_from_labels(domain: Optional[FiniteGroup], labeller: Callable[[Permutation], object],
                           values: Mapping[object, RationalLike], elements: Optional[Iterable[Permutation]] = None,
                           default: Optional[RationalLike] = None, name: str = "") -> LengthMap:
    """
    Length by label: m(g) = values[labeller(g)], identity 0.

    Elements whose label is missing from `values` take `default`.
    """
    universe = domain.elements if elements is None else elements
    table = {}
    for g in universe:
        if g.is_identity():
            table[g] = Fraction(0)
            continue
        label = labeller(g)
        if label in values:
            table[g] = values[label]
        elif default is None:
            raise DomainError(f"no length for label {label} and no default")
    return LengthMap(domain, table, default=default, name=name)


def length_map_from_dict(domain: FiniteGroup, data: Mapping[str, RationalLike], name: str = "") -> LengthMap:
    """
    Build from an index -> value mapping over domain.elements.

    Raises:
        DomainError: an index is out of range or an element has no value
    """
    elements = domain.elements
    values = {}
    for key, value in data.items():
        try:
            index = int(key)
        except ValueError:
            raise InputValidationError(f"element index '{key}' is not an integer", key=f'values.{key}') from None
        if not 0 <= index < len(elements):
            raise DomainError(f"element index {index} out of range 0..{len(elements) - 1}")
        values[elements[index]] = value
    if len(values) != len(elements):
        raise DomainError(f"length map gives {len(values)} values for {len(elements)} elements")
    return LengthMap(domain, values, name=name)
