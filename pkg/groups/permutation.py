"""
Permutation Module
Elements of finite permutation groups on the points {0, ..., degree-1}.

Composition convention: (p * q)(i) = p(q(i)), i.e. q is applied first.
With this convention left translation g -> (x -> g*x) is a homomorphism,
which is what the regular representation relies on.
"""

import functools
import math
from typing import Iterable, List, Sequence, Tuple

from utils.errors import DomainError, InputValidationError


@functools.total_ordering
class Permutation:
    """
    Immutable permutation stored as its image sequence.

    Ordering is lexicographic on (degree, images); every report sorts
    elements with it so outputs are deterministic.
    """

    __slots__ = ('images', '_hash')

    def __init__(self, images: Sequence[int]):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise InputValidationError(f"images are not a bijection on 0..{len(images) - 1}: {list(images)}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def _trusted(cls, images: Tuple[int, ...]) -> "Permutation":
        """Build from an image tuple already known to be a bijection."""
        perm = object.__new__(cls)
        perm.images = images
        perm._hash = hash(images)
        return perm

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls._trusted(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, *cycles: Iterable[int]) -> "Permutation":
        """
        Build a permutation from disjoint cycles.

        Usage:
            Permutation.from_cycles(4, (0, 1), (2, 3))
        """
        images = list(range(degree))
        touched = set()
        for cycle in cycles:
            cycle = [int(p) for p in cycle]
            for point in cycle:
                if point < 0 or point >= degree or point in touched:
                    raise InputValidationError(f"bad cycle {cycle} for degree {degree}")
                touched.add(point)
            for i, point in enumerate(cycle):
                images[point] = cycle[(i + 1) % len(cycle)]
        return cls._trusted(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if len(self.images) != len(other.images):
            raise DomainError(f"cannot compose degree {self.degree} with degree {other.degree}")
        return Permutation._trusted(tuple(map(self.images.__getitem__, other.images)))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, image in enumerate(self.images):
            inv[image] = i
        return Permutation._trusted(tuple(inv))

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        k %= self.order
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate_by(self, h: "Permutation") -> "Permutation":
        """h * self * h^-1"""
        return h * self * h.inverse()

    def is_identity(self) -> bool:
        return all(i == image for i, image in enumerate(self.images))

    def cycles(self) -> List[Tuple[int, ...]]:
        """Disjoint cycles of length >= 2, each starting at its smallest point."""
        seen = [False] * len(self.images)
        result = []
        for start in range(len(self.images)):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            point = self.images[start]
            while point != start:
                cycle.append(point)
                seen[point] = True
                point = self.images[point]
            if len(cycle) > 1:
                result.append(tuple(cycle))
        return result

    def cycle_type(self) -> Tuple[int, ...]:
        """Sorted multiset of all cycle lengths, fixed points included."""
        seen = [False] * len(self.images)
        lengths = []
        for start in range(len(self.images)):
            if seen[start]:
                continue
            length = 0
            point = start
            while not seen[point]:
                seen[point] = True
                point = self.images[point]
                length += 1
            lengths.append(length)
        return tuple(sorted(lengths, reverse=True))

    @property
    def order(self) -> int:
        return element_order(self)

    def to_list(self) -> List[int]:
        return list(self.images)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        if len(self.images) != len(other.images):
            return len(self.images) < len(other.images)
        return self.images < other.images

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return f"<Permutation () degree={self.degree}>"
        text = ''.join('(' + ' '.join(str(p) for p in c) + ')' for c in cycles)
        return f"<Permutation {text} degree={self.degree}>"


def element_order(g: Permutation) -> int:
    """Least k >= 1 with g^k = identity: the lcm of the cycle lengths."""
    return math.lcm(1, *g.cycle_type())
