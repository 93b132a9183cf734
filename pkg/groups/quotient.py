"""
Quotient Group Module
G/N by coset enumeration, realized as a permutation group on the cosets.
"""

import logging
from typing import Callable, Dict, List, Optional, Tuple

from utils.errors import InputValidationError

from .finite_group import FiniteGroup, Subgroup, closure, is_normal
from .permutation import Permutation

logger = logging.getLogger(__name__)


class QuotientGroup:
    """
    The quotient of an enumerable group by a normal subgroup.

    Cosets are indexed in increasing order of their canonical representative,
    which is the lexicographically smallest element of the coset.
    """

    def __init__(self, parent: FiniteGroup, normal: FiniteGroup, name: Optional[str] = None):
        if not is_normal(parent, normal):
            raise InputValidationError(f"{normal.name or 'subgroup'} is not normal in {parent.name or 'the group'}")
        self.parent = parent
        self.normal = normal
        self.name = name or f"{parent.name}/{normal.name}"
        self._projection: Dict[Permutation, int] = {}
        self.cosets: List[Permutation] = []
        normal_elements = normal.elements
        for g in parent.elements:
            if g in self._projection:
                continue
            index = len(self.cosets)
            self.cosets.append(g)
            for n in normal_elements:
                self._projection[g * n] = index
        self._table: Optional[Tuple[Tuple[int, ...], ...]] = None
        self._group: Optional[FiniteGroup] = None
        logger.debug("Quotient %s: %d cosets", self.name, len(self.cosets))

    @property
    def order(self) -> int:
        return len(self.cosets)

    def coset_of(self, g: Permutation) -> int:
        """Index of the coset gN."""
        return self._projection[g]

    def multiply(self, i: int, j: int) -> int:
        return self._projection[self.cosets[i] * self.cosets[j]]

    @property
    def table(self) -> Tuple[Tuple[int, ...], ...]:
        """Multiplication table on coset indices (built on first access)."""
        if self._table is None:
            n = len(self.cosets)
            self._table = tuple(tuple(self.multiply(i, j) for j in range(n)) for i in range(n))
        return self._table

    def _action(self, g: Permutation) -> Permutation:
        return Permutation._trusted(tuple(self._projection[g * rep] for rep in self.cosets))

    def as_permutation_group(self) -> FiniteGroup:
        """G/N acting on its cosets by left multiplication (faithful since N is normal)."""
        if self._group is None:
            gens = [self._action(s) for s in self.parent.generators]
            self._group = FiniteGroup(len(self.cosets), gens, name=self.name)
        return self._group

    def project(self, g: Permutation) -> Permutation:
        """The image of g in as_permutation_group()."""
        return self._action(g)

    def image(self, H: FiniteGroup, name: Optional[str] = None) -> Subgroup:
        """HN/N as a subgroup of as_permutation_group()."""
        group = self.as_permutation_group()
        return closure(group, [self.project(h) for h in H.generators], name=name or f"{H.name}/{self.normal.name}")

    def __repr__(self) -> str:
        return f"<QuotientGroup '{self.name}' order={self.order}>"


def quotient(G: FiniteGroup, N: FiniteGroup, name: Optional[str] = None) -> Tuple[QuotientGroup, Callable[[Permutation], Permutation]]:
    """
    G/N together with the projection into its permutation realization.

    Raises:
        InputValidationError: N is not normal in G
    """
    Q = QuotientGroup(G, N, name=name)
    return Q, Q.project
