"""
Base Class System Module
Abstract labelling of ambient conjugacy classes.

A class system assigns every element of the ambient group a label such that
conjugate elements get equal labels. The deciders only ever look at labels
of elements of H and H', so ambients like S16 or S64 never need to be
enumerated.
"""

import random
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Iterable, List, Sequence, Tuple

from groups import Permutation
from utils.errors import DomainError


@dataclass(frozen=True, order=True)
class ClassLabel:
    """
    Opaque, totally ordered token naming a conjugation-stable set of elements.

    Equality and ordering use (kind, key) only; element_order is carried
    for reports.
    """
    kind: str
    key: Tuple
    element_order: int = field(default=1, compare=False)

    def __str__(self) -> str:
        if self.kind == 'identity':
            return "1"
        if self.kind == 'cycle-type':
            lengths: List[str] = []
            for length in sorted(set(self.key), reverse=True):
                count = self.key.count(length)
                lengths.append(f"{length}^{count}" if count > 1 else str(length))
            return '.'.join(lengths)
        if self.kind == 'class':
            return f"C{self.key[0]}[o{self.element_order}]"
        return '/'.join(str(part) for part in self.key)

    def to_dict(self) -> dict:
        return {
            'kind': self.kind,
            'key': list(self.key),
            'order': self.element_order,
            'text': str(self),
        }


IDENTITY_LABEL = ClassLabel('identity', ())


class ClassSystem(ABC):
    """
    Abstract base class for ambient conjugacy labellings.

    Each concrete system must implement:
    - kind: short name used in triple files
    - degree: permutation degree of the ambient
    - _label: label of a non-identity element
    - conjugators: elements used by spot checks of conjugation stability
    """

    @property
    @abstractmethod
    def kind(self) -> str:
        """System kind as written in triple files."""
        pass

    @property
    @abstractmethod
    def degree(self) -> int:
        """Degree of the ambient permutation group."""
        pass

    @abstractmethod
    def _label(self, g: Permutation) -> ClassLabel:
        pass

    @abstractmethod
    def conjugators(self) -> Sequence[Permutation]:
        """Elements generating (a group containing) the ambient's conjugation action."""
        pass

    @abstractmethod
    def to_dict(self) -> dict:
        pass

    def label(self, g: Permutation) -> ClassLabel:
        """
        Label of g; the identity always gets IDENTITY_LABEL.

        Raises:
            DomainError: g has the wrong degree for this system
        """
        if g.degree != self.degree:
            raise DomainError(f"{self.kind} system of degree {self.degree} cannot label {g}")
        if g.is_identity():
            return IDENTITY_LABEL
        return self._label(g)

    def spot_check(self, elements: Iterable[Permutation], seed: int = 0,
                   samples: int = 32) -> List[Tuple[Permutation, Permutation]]:
        """
        Check label(g) == label(s g s^-1) on a seeded sample.

        Returns:
            List of (element, conjugator) pairs where the label changed
        """
        pool = sorted(set(elements))
        rng = random.Random(seed)
        if len(pool) > samples:
            pool = rng.sample(pool, samples)
        failures = []
        for g in pool:
            before = self.label(g)
            for s in self.conjugators():
                if self.label(g.conjugate_by(s)) != before:
                    failures.append((g, s))
        return failures

    def __repr__(self) -> str:
        return f"<{self.__class__.__name__} kind='{self.kind}' degree={self.degree}>"
