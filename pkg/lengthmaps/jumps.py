"""
Filtrations and Jump Sets
Fil^δ = <g : m(g) < δ>, the iterative jump set algorithm, its brute-force
oracle and basis multiplicities.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional

from groups import FiniteGroup, Permutation, closure, join, symmetric_group
from utils.config import get_settings
from utils.errors import CapacityError, DomainError
from utils.rationals import RationalLike, format_fraction, to_fraction

from .length_map import LengthMap

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class JumpEntry:
    value: Fraction
    subgroup_order: int
    multiplicity: Optional[int] = None

    def to_dict(self) -> dict:
        return {
            'value': format_fraction(self.value),
            'subgroup_order': self.subgroup_order,
            'multiplicity': self.multiplicity,
        }


@dataclass
class JumpReport:
    """
    Jumps in increasing order with the order of the filtration group just
    above each jump; `terminal` is the last filtration group (the domain).
    """
    jumps: List[JumpEntry] = field(default_factory=list)
    terminal: Optional[FiniteGroup] = None

    @property
    def values(self) -> List[Fraction]:
        return [j.value for j in self.jumps]

    @property
    def multiplicities(self) -> List[Optional[int]]:
        return [j.multiplicity for j in self.jumps]

    def to_dict(self) -> dict:
        return {
            'jumps': [j.to_dict() for j in self.jumps],
            'terminal_order': self.terminal.order if self.terminal is not None else None,
        }


def _below(m: LengthMap, delta: Fraction, strict: bool) -> List[Permutation]:
    if strict:
        return [g for g in m.elements if m(g) < delta]
    return [g for g in m.elements if m(g) <= delta]


def filtration_at(m: LengthMap, delta: RationalLike) -> FiniteGroup:
    """Fil^δ: the subgroup generated by all elements of length strictly less than δ."""
    domain = m.require_domain()
    delta = to_fraction(delta)
    return closure(domain, _below(m, delta, strict=True), name=f"Fil^{format_fraction(delta)}")


def closed_filtration_at(m: LengthMap, delta: RationalLike) -> FiniteGroup:
    """<g : m(g) <= δ>, the filtration just above δ."""
    domain = m.require_domain()
    delta = to_fraction(delta)
    return closure(domain, _below(m, delta, strict=False), name=f"Fil^{format_fraction(delta)}+")


def jump_set(m: LengthMap, with_multiplicity: bool = True) -> JumpReport:
    """
    Iterative jump set algorithm.

    δ1 is the least length of a non-identity element; each next δ is the
    least length outside <g : m(g) <= δ_i>, until that subgroup is the
    whole domain.
    """
    domain = m.require_domain()
    current = closure(domain, [], name="Fil^0")
    report = JumpReport(terminal=current)
    while current.order < domain.order:
        delta = min(m(g) for g in domain.elements if g not in current)
        new = [g for g in domain.elements if m(g) <= delta and g not in current]
        below = current
        current = join(current, new, name=f"Fil^{format_fraction(delta)}+")
        multiplicity = _multiplicity(m, delta, below, current) if with_multiplicity else None
        report.jumps.append(JumpEntry(delta, current.order, multiplicity))
        logger.debug("%s: jump at %s, subgroup order %d", m.name or 'length map',
                     format_fraction(delta), current.order)
    report.terminal = current
    return report


def jump_set_bruteforce(m: LengthMap) -> JumpReport:
    """
    Definitional evaluation: v is a jump iff <m < v> is strictly smaller
    than <m <= v>, over all distinct positive values v.
    """
    domain = m.require_domain()
    report = JumpReport(terminal=closure(domain, []))
    for value in m.positive_values():
        lower = filtration_at(m, value)
        upper = closed_filtration_at(m, value)
        if lower.order < upper.order:
            report.jumps.append(JumpEntry(value, upper.order))
        report.terminal = upper
    return report


def _multiplicity(m: LengthMap, delta: Fraction, below: FiniteGroup, above: FiniteGroup) -> int:
    """
    Fewest length-δ elements to add to `below` to generate `above`.

    Breadth-first over the intermediate subgroups reachable by adding one
    candidate at a time; candidates with equal <below, g> are interchangeable.
    """
    settings = get_settings()
    candidates: Dict[frozenset, Permutation] = {}
    for g in m.elements:
        if m(g) == delta and g not in below:
            extended = join(below, [g])
            candidates.setdefault(extended.element_set, g)
    frontier: Dict[frozenset, FiniteGroup] = {below.element_set: below}
    target = above.element_set
    visited = 0
    for depth in range(1, settings.multiplicity_cap + 1):
        nxt: Dict[frozenset, FiniteGroup] = {}
        for group in frontier.values():
            for g in candidates.values():
                if g in group:
                    continue
                bigger = join(group, [g])
                if bigger.element_set == target:
                    return depth
                if bigger.element_set not in nxt:
                    visited += 1
                    if visited > settings.closed_set_cap:
                        raise CapacityError('closed_set_cap', settings.closed_set_cap, visited,
                                            detail=f"multiplicity search at {format_fraction(delta)}")
                    nxt[bigger.element_set] = bigger
        if not nxt:
            break
        frontier = nxt
    raise CapacityError('multiplicity_cap', settings.multiplicity_cap, settings.multiplicity_cap + 1,
                        detail=f"jump {format_fraction(delta)}")


def jump_multiplicity(m: LengthMap, delta: RationalLike) -> int:
    """
    Minimal number of elements of length δ needed to pass from Fil^δ to
    the filtration just above δ.

    Raises:
        DomainError: δ is not a jump of m
    """
    delta = to_fraction(delta)
    below = filtration_at(m, delta)
    above = closed_filtration_at(m, delta)
    if below.order == above.order:
        raise DomainError(f"{format_fraction(delta)} is not a jump of {m.name or 'length map'}")
    return _multiplicity(m, delta, below, above)


@dataclass
class RestrictionExample:
    """An instance where filtering inside H differs from intersecting the ambient filtration with H."""
    length_map: LengthMap
    H: FiniteGroup
    delta: Fraction
    restricted: FiniteGroup
    intersected: frozenset

    def to_dict(self) -> dict:
        result = self.length_map.to_dict()
        result.update({
            'subgroup': self.H.to_dict(),
            'delta': format_fraction(self.delta),
            'restricted_order': self.restricted.order,
            'intersected_order': len(self.intersected),
        })
        return result


def restriction_counterexample() -> RestrictionExample:
    """
    S3 with transpositions of length 1 and 3-cycles of length 2, H = A3,
    δ = 3/2: Fil^δ of the restriction is trivial while Fil^δ(S3) ∩ H = H.
    """
    G = symmetric_group(3)
    m = LengthMap(G, {g: (0 if g.is_identity() else 1 if g.order == 2 else 2) for g in G.elements}, name="S3")
    H = closure(G, [Permutation.from_cycles(3, (0, 1, 2))], name="A3")
    delta = Fraction(3, 2)
    restricted = filtration_at(m.restrict(H), delta)
    intersected = filtration_at(m, delta).element_set & H.element_set
    return RestrictionExample(m, H, delta, restricted, intersected)
