"""
Finite Group Module
Permutation groups given by generators, with lazily enumerated elements.

Element enumeration uses Dimino's coset algorithm and is refused above the
configured element cap. Elements are always reported in lexicographic
order of their image sequences.
"""

import logging
from collections import Counter, deque
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from utils.config import get_settings
from utils.errors import CapacityError, DomainError, InputValidationError

from .permutation import Permutation, element_order

logger = logging.getLogger(__name__)


def _enforce_cap(size: int, cap: int, name: str):
    if size > cap:
        raise CapacityError('element_cap', cap, size, detail=name)


def extend_closure(elements: List[Permutation], seen: set, gens: List[Permutation],
                   new_generator: Permutation, cap: int, name: str = ""):
    """
    Dimino step: extend the closed group `elements` by `new_generator`.

    `elements` must already be a union of right cosets of itself (i.e. a
    subgroup) and `gens` its generators. Both containers are updated in place.
    """
    if new_generator in seen:
        return
    gens.append(new_generator)
    base = list(elements)
    identity = base[0]
    reps = [identity]
    pos = 0
    while pos < len(reps):
        rep = reps[pos]
        for s in gens:
            x = rep * s
            if x in seen:
                continue
            reps.append(x)
            _enforce_cap(len(elements) + len(base), cap, name)
            coset = [k * x for k in base]
            elements.extend(coset)
            seen.update(coset)
        pos += 1


def dimino(identity: Permutation, generators: Iterable[Permutation], cap: Optional[int] = None,
           name: str = "") -> Tuple[List[Permutation], List[Permutation]]:
    """
    Enumerate the group generated by `generators`.

    Returns:
        (elements in discovery order, non-redundant generators used)
    """
    cap = cap if cap is not None else get_settings().element_cap
    elements = [identity]
    seen = {identity}
    gens: List[Permutation] = []
    for g in generators:
        extend_closure(elements, seen, gens, g, cap, name)
    return elements, gens


class FiniteGroup:
    """
    A finite permutation group of a fixed degree.

    Elements are materialized on first access and cached; the group value
    never changes afterwards.
    """

    def __init__(self, degree: int, generators: Sequence[Permutation], name: Optional[str] = None):
        if degree < 0:
            raise InputValidationError(f"negative degree {degree}")
        for g in generators:
            if g.degree != degree:
                raise InputValidationError(f"generator {g} has degree {g.degree}, expected {degree}")
        self.degree = degree
        self.generators: Tuple[Permutation, ...] = tuple(generators)
        self.name = name or ""
        self._elements: Optional[Tuple[Permutation, ...]] = None
        self._element_set: Optional[frozenset] = None
        self._index: Optional[Dict[Permutation, int]] = None
        self._classes = None

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def _materialize(self):
        elements, _ = dimino(self.identity, self.generators, name=self.name)
        elements.sort()
        self._elements = tuple(elements)
        self._element_set = frozenset(elements)
        logger.debug("Enumerated %s: %d elements", self.name or "group", len(elements))

    @property
    def elements(self) -> Tuple[Permutation, ...]:
        """All elements, sorted lexicographically on images."""
        if self._elements is None:
            self._materialize()
        return self._elements

    @property
    def element_set(self) -> frozenset:
        if self._element_set is None:
            self._materialize()
        return self._element_set

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return self.order

    def __contains__(self, g: Permutation) -> bool:
        return g in self.element_set

    def __iter__(self):
        return iter(self.elements)

    def index_of(self, g: Permutation) -> int:
        """Position of g in the sorted element list."""
        if self._index is None:
            self._index = {e: i for i, e in enumerate(self.elements)}
        try:
            return self._index[g]
        except KeyError:
            raise DomainError(f"{g} is not an element of {self.name or 'the group'}") from None

    def same_elements(self, other: "FiniteGroup") -> bool:
        return self.degree == other.degree and self.element_set == other.element_set

    def to_dict(self) -> dict:
        """Group file representation."""
        return {
            'name': self.name,
            'degree': self.degree,
            'generators': [g.to_list() for g in self.generators],
        }

    def __repr__(self) -> str:
        size = len(self._elements) if self._elements is not None else '?'
        return f"<{self.__class__.__name__} '{self.name}' degree={self.degree} order={size}>"


class Subgroup(FiniteGroup):
    """A subgroup of an enumerable parent group (or of a standalone group)."""

    def __init__(self, parent: FiniteGroup, generators: Sequence[Permutation],
                 name: Optional[str] = None, elements: Optional[Iterable[Permutation]] = None):
        super().__init__(parent.degree, generators, name=name)
        self.parent = parent
        if elements is not None:
            ordered = sorted(elements)
            self._elements = tuple(ordered)
            self._element_set = frozenset(ordered)


def group_from_dict(data: dict) -> FiniteGroup:
    """Inverse of FiniteGroup.to_dict()."""
    degree = int(data['degree'])
    gens = [Permutation(images) for images in data.get('generators', [])]
    return FiniteGroup(degree, gens, name=data.get('name'))


def closure(parent: FiniteGroup, gens: Iterable[Permutation], name: Optional[str] = None) -> Subgroup:
    """
    Smallest subgroup of `parent` containing `gens`.

    Raises:
        DomainError: a generator lies outside the parent
        CapacityError: the closure exceeds the element cap
    """
    gens = list(gens)
    for g in gens:
        if g.degree != parent.degree or g not in parent:
            raise DomainError(f"generator {g} is not an element of {parent.name or 'the parent group'}")
    elements, used = dimino(parent.identity, gens, name=name or "")
    return Subgroup(parent, used, name=name, elements=elements)


def join(group: FiniteGroup, extra: Iterable[Permutation], name: Optional[str] = None) -> Subgroup:
    """
    Subgroup generated by an already enumerated group and extra elements.

    Reuses the enumerated elements of `group` as the Dimino starting block.
    """
    parent = group.parent if isinstance(group, Subgroup) else group
    cap = get_settings().element_cap
    elements = list(group.elements)
    seen = set(elements)
    gens = list(group.generators)
    for g in extra:
        extend_closure(elements, seen, gens, g, cap, name or "")
    if len(elements) == group.order:
        return group if isinstance(group, Subgroup) else Subgroup(parent, gens, name=name, elements=elements)
    return Subgroup(parent, gens, name=name, elements=elements)


def subgroup_from_elements(parent: FiniteGroup, elements: Iterable[Permutation],
                           name: Optional[str] = None) -> Subgroup:
    """
    Wrap an element set that should already be a subgroup.

    A small generating set is chosen greedily in sorted order.

    Raises:
        InputValidationError: the set is not closed
    """
    members = sorted(set(elements))
    target = frozenset(members)
    if not members or parent.identity not in target:
        raise InputValidationError(f"{name or 'element set'} does not contain the identity")
    cap = get_settings().element_cap
    closed = [parent.identity]
    seen = {parent.identity}
    gens: List[Permutation] = []
    for g in members:
        if g not in seen:
            extend_closure(closed, seen, gens, g, cap, name or "")
            if len(seen) > len(target):
                break
    if seen != target:
        raise InputValidationError(f"{name or 'element set'} is not closed under multiplication")
    return Subgroup(parent, gens, name=name, elements=members)


def conjugacy_classes(G: FiniteGroup) -> Tuple[Tuple[Permutation, ...], ...]:
    """
    Partition of G into conjugacy classes.

    Classes are orbits of conjugation by the generators, ordered by
    (representative order, class size, representative); the representative
    is the lexicographically smallest member, and the identity class comes first.
    """
    if G._classes is not None:
        return G._classes
    gens = [(s, s.inverse()) for s in G.generators]
    assigned = set()
    classes = []
    for g in G.elements:
        if g in assigned:
            continue
        orbit = {g}
        queue = deque([g])
        while queue:
            x = queue.popleft()
            for s, s_inv in gens:
                y = s * x * s_inv
                if y not in orbit:
                    orbit.add(y)
                    queue.append(y)
        assigned.update(orbit)
        classes.append(tuple(sorted(orbit)))
    classes.sort(key=lambda c: (element_order(c[0]), len(c), c[0]))
    G._classes = tuple(classes)
    logger.debug("%s: %d conjugacy classes", G.name or "group", len(classes))
    return G._classes


def class_index(G: FiniteGroup) -> Dict[Permutation, int]:
    """Element -> position of its class in conjugacy_classes(G)."""
    index = {}
    for i, cls in enumerate(conjugacy_classes(G)):
        for g in cls:
            index[g] = i
    return index


def order_statistics(H: FiniteGroup) -> Dict[int, int]:
    """Element order d -> number of elements of order d, sorted by d."""
    counts = Counter(element_order(g) for g in H.elements)
    return dict(sorted(counts.items()))


def is_normal(G: FiniteGroup, N: FiniteGroup) -> bool:
    """True iff N is a subgroup of G stable under conjugation by G's generators."""
    if not N.element_set <= G.element_set:
        return False
    n_gens = N.generators or (N.identity,)
    for s in G.generators:
        s_inv = s.inverse()
        for n in n_gens:
            if s * n * s_inv not in N:
                return False
    return True


def normal_core(G: FiniteGroup, S: FiniteGroup) -> Subgroup:
    """
    Largest normal subgroup of G contained in the subgroup S.

    Computed as the intersection of the conjugates of S under G.
    """
    core = set(S.elements)
    conjugates_seen = {frozenset(core)}
    queue = deque([frozenset(core)])
    while queue:
        current = queue.popleft()
        for s in G.generators:
            s_inv = s.inverse()
            conj = frozenset(s * x * s_inv for x in current)
            if conj not in conjugates_seen:
                conjugates_seen.add(conj)
                queue.append(conj)
                core &= conj
    return subgroup_from_elements(G, core, name=f"core({S.name})")
