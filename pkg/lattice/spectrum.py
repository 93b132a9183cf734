"""
Covering Spectra of Flat Tori

The torus E/L has covering spectrum 1/2 * Jump of the norm filtration of L.
Values are kept as squared norms q (spectrum value 1/2 * sqrt(q)); a
squared norm q is a jump when the vectors of norm2 <= q span strictly more
than those of norm2 < q.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import groupby
from typing import List, Optional, Sequence, Tuple

from utils.config import get_settings
from utils.rationals import decimal_half_sqrt, format_fraction, render_half_sqrt

from .enumeration import short_vectors
from .form import LatticeForm
from .sublattice import Basis, Sublattice, hnf_rows, quotient_invariants

logger = logging.getLogger(__name__)


@dataclass
class CovSpecEntry:
    """
    One jump of the norm filtration.

    multiplicity is the fewest norm-q vectors that extend the sublattice
    below the jump to the one above it; smith_bound is the number of
    generators of the quotient, a lower bound for it.
    """
    q: Fraction
    multiplicity: Optional[int]
    smith_bound: Optional[int]
    rank: int
    index: Optional[int]
    basis: Basis
    finding: Optional[str] = None

    def to_dict(self) -> dict:
        result = {
            'q': format_fraction(self.q),
            'value': render_half_sqrt(self.q),
            'decimal': decimal_half_sqrt(self.q),
            'multiplicity': self.multiplicity,
            'smith_bound': self.smith_bound,
            'rank': self.rank,
            'index': self.index if self.index is not None else 'infinite',
            'basis': [list(row) for row in self.basis],
        }
        if self.finding:
            result['finding'] = self.finding
        return result


@dataclass
class CovSpecReport:
    lattice: str
    entries: List[CovSpecEntry] = field(default_factory=list)
    bound_used: Fraction = Fraction(0)

    @property
    def q_values(self) -> List[Fraction]:
        return [e.q for e in self.entries]

    @property
    def multiplicities(self) -> List[Optional[int]]:
        return [e.multiplicity for e in self.entries]

    @property
    def values(self) -> List[str]:
        return [render_half_sqrt(e.q) for e in self.entries]

    def to_dict(self) -> dict:
        return {
            'lattice': self.lattice,
            'entries': [e.to_dict() for e in self.entries],
            'bound_used': format_fraction(self.bound_used),
        }


def _initial_bound(L: LatticeForm) -> Fraction:
    return min(L.gram[i][i] for i in range(L.rank))


def _minimal_extension(n: int, below: Basis, target: Basis, candidates: Sequence[Tuple[int, ...]],
                       limit: int) -> Optional[int]:
    """
    Fewest candidates whose addition to `below` spans `target`, searching
    breadth-first over intermediate sublattices. None when more than `limit`
    candidates would be needed.
    """
    frontier = {below}
    for depth in range(1, limit + 1):
        nxt = set()
        for basis in frontier:
            for v in candidates:
                grown = hnf_rows(list(basis) + [v], n)
                if grown == basis:
                    continue
                if grown == target:
                    return depth
                nxt.add(grown)
        if not nxt:
            return None
        frontier = nxt
    return None


def _greedy_extension(n: int, below: Basis, target: Basis, candidates: Sequence[Tuple[int, ...]]) -> int:
    current = below
    used = 0
    for v in candidates:
        grown = hnf_rows(list(current) + [v], n)
        if grown != current:
            current = grown
            used += 1
            if current == target:
                break
    return used


def _jump_multiplicity(L: LatticeForm, below: Basis, above: Basis, level: List[Tuple[int, ...]],
                       q: Fraction) -> Tuple[int, int, Optional[str]]:
    """(multiplicity, smith bound, finding)"""
    n = L.rank
    free, torsion = quotient_invariants(Sublattice(L, below), Sublattice(L, above))
    bound = free + len(torsion)
    # one of each ±v pair
    candidates = [v for v in level if v > tuple(-x for x in v)]
    greedy = _greedy_extension(n, below, above, candidates)
    if greedy == bound:
        return greedy, bound, None
    settings = get_settings()
    exact = _minimal_extension(n, below, above, candidates, min(greedy, settings.multiplicity_cap))
    multiplicity = exact if exact is not None else greedy
    finding = None
    if multiplicity != bound:
        finding = (f"q={format_fraction(q)}: {multiplicity} vectors of this norm are needed, "
                   f"quotient has {bound} generators")
        logger.warning("%s: %s", L.name or 'lattice', finding)
    return multiplicity, bound, finding


def covering_spectrum_torus(L: LatticeForm, with_multiplicity: bool = True) -> CovSpecReport:
    """
    Jump iteration on squared norms.

    Vectors are enumerated by increasing norm2; the bound starts at the
    smallest diagonal gram entry and doubles until the generated
    sublattice is all of ℤ^n.

    Raises:
        CapacityError: enumeration exceeds vector_cap
    """
    n = L.rank
    report = CovSpecReport(L.name)
    full = hnf_rows([tuple(int(i == j) for j in range(n)) for i in range(n)], n)
    current: Basis = ()
    processed = Fraction(0)
    bound = _initial_bound(L)
    while current != full:
        vectors = short_vectors(L, bound)
        for q, group in groupby(vectors, key=lambda item: item[0]):
            if q <= processed:
                continue
            level = [v for _, v in group]
            grown = hnf_rows(list(current) + level, n)
            if grown != current:
                if with_multiplicity:
                    multiplicity, smith, finding = _jump_multiplicity(L, current, grown, level, q)
                else:
                    multiplicity, smith, finding = None, None, None
                sub = Sublattice(L, grown)
                report.entries.append(CovSpecEntry(q, multiplicity, smith, sub.rank, sub.index, grown, finding))
                logger.debug("%s: jump at q=%s, rank %d", L.name or 'lattice', format_fraction(q), sub.rank)
                current = grown
            processed = q
            if current == full:
                break
        report.bound_used = bound
        if current != full:
            processed = max(processed, bound)
            bound *= 2
            logger.debug("%s: doubling enumeration bound to %s", L.name or 'lattice', format_fraction(bound))
    return report


def successive_minima(L: LatticeForm) -> List[Fraction]:
    """Squared successive minima: jump values repeated by their rank increments."""
    minima: List[Fraction] = []
    rank = 0
    for entry in covering_spectrum_torus(L, with_multiplicity=False).entries:
        minima.extend([entry.q] * (entry.rank - rank))
        rank = entry.rank
    return minima


def jump_chain_oracle(L: LatticeForm, bound: Optional[Fraction] = None) -> List[Tuple[Fraction, Basis]]:
    """
    Direct evaluation: at every distinct norm q up to `bound`, compare the
    span of norm2 < q with the span of norm2 <= q from scratch.
    """
    n = L.rank
    if bound is None:
        bound = covering_spectrum_torus(L, with_multiplicity=False).q_values[-1]
    vectors = short_vectors(L, bound)
    norms = sorted({q for q, _ in vectors})
    jumps = []
    for q in norms:
        strict = hnf_rows([v for norm, v in vectors if norm < q], n)
        closed = hnf_rows([v for norm, v in vectors if norm <= q], n)
        if strict != closed:
            jumps.append((q, closed))
    return jumps


def spectrum_equal(first: CovSpecReport, second: CovSpecReport) -> bool:
    return first.q_values == second.q_values
