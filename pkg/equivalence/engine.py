"""
Label Analysis Engine
Shared machinery behind the order and jump deciders.

Subsets of labels are quantified through "atoms": inverse-closed label
blocks, merged when they generate the same pair of subgroups
(<H ∩ C>, <H' ∩ C>). Since <H ∩ S> is the join of the single-block
contributions, every quantity the deciders need depends on atoms only.

Subsets are bitmasks over atom indices. Atoms are ordered by their
smallest label, so lexicographic order on atom index tuples follows
label order.
"""

import itertools
import logging
from collections import defaultdict
from typing import Dict, Iterator, List, Optional, Tuple

from groups import FiniteGroup, Permutation, closure, join
from utils.config import get_settings
from utils.errors import CapacityError

from .base import IDENTITY_LABEL, ClassLabel
from .triple import Triple

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


class SubgroupTable:
    """Interned subgroups of one group with memoized joins and containments."""

    def __init__(self, group: FiniteGroup):
        self.group = group
        self._ids: Dict[frozenset, int] = {}
        self._members: List[FiniteGroup] = []
        self._joins: Dict[Pair, int] = {}
        self._contains: Dict[Pair, bool] = {}
        self.trivial = self.intern(closure(group, []))

    def intern(self, subgroup: FiniteGroup) -> int:
        key = subgroup.element_set
        if key not in self._ids:
            self._ids[key] = len(self._members)
            self._members.append(subgroup)
        return self._ids[key]

    def generated(self, elements) -> int:
        return self.intern(closure(self.group, list(elements)))

    def __getitem__(self, i: int) -> FiniteGroup:
        return self._members[i]

    def __len__(self) -> int:
        return len(self._members)

    def order(self, i: int) -> int:
        return self._members[i].order

    def contains(self, outer: int, inner: int) -> bool:
        """True iff subgroup `inner` lies in subgroup `outer`."""
        if outer == inner:
            return True
        key = (outer, inner)
        if key not in self._contains:
            self._contains[key] = self._members[inner].element_set <= self._members[outer].element_set
        return self._contains[key]

    def join(self, a: int, b: int) -> int:
        if self.contains(a, b):
            return a
        if self.contains(b, a):
            return b
        key = (a, b) if a < b else (b, a)
        if key not in self._joins:
            self._joins[key] = self.intern(join(self._members[a], self._members[b].generators))
        return self._joins[key]


class LabelAnalysis:
    """
    Labels, per-label elements and atoms of a triple.

    Args:
        triple: The triple to analyse
        deduplicate: Merge blocks with equal generated pairs (default).
            Without it every inverse-closed block is its own atom.
    """

    def __init__(self, triple: Triple, deduplicate: bool = True):
        self.triple = triple
        self.deduplicate = deduplicate
        system = triple.classes
        self.members: Dict[str, Dict[ClassLabel, List[Permutation]]] = {}
        inverse_of: Dict[ClassLabel, ClassLabel] = {}
        for side, group in (('H', triple.H), ('Hp', triple.Hp)):
            buckets: Dict[ClassLabel, List[Permutation]] = defaultdict(list)
            for g in group.elements:
                label = system.label(g)
                if label == IDENTITY_LABEL:
                    continue
                buckets[label].append(g)
                if label not in inverse_of:
                    inverse_of[label] = system.label(g.inverse())
            self.members[side] = dict(buckets)
        self.labels: List[ClassLabel] = sorted(inverse_of)

        # inverse-closed blocks: a label together with the label of its inverses
        blocks: List[Tuple[ClassLabel, ...]] = []
        placed = set()
        for label in self.labels:
            if label in placed:
                continue
            block = tuple(sorted({label, inverse_of[label]}))
            placed.update(block)
            blocks.append(block)

        self.h_table = SubgroupTable(triple.H)
        self.hp_table = SubgroupTable(triple.Hp)
        atoms: Dict[Pair, List[ClassLabel]] = {}
        order: List[Pair] = []
        for block in blocks:
            pair = (
                self.h_table.generated(g for l in block for g in self.members['H'].get(l, ())),
                self.hp_table.generated(g for l in block for g in self.members['Hp'].get(l, ())),
            )
            if not deduplicate:
                pair_key = pair + (len(order),)
            else:
                pair_key = pair
            if pair_key not in atoms:
                atoms[pair_key] = []
                order.append(pair_key)
            atoms[pair_key].extend(block)
        self.atom_labels: List[Tuple[ClassLabel, ...]] = [tuple(sorted(atoms[k])) for k in order]
        self.atom_pairs: List[Pair] = [k[:2] for k in order]
        self.empty_pair: Pair = (self.h_table.trivial, self.hp_table.trivial)
        logger.debug("%s: %d labels, %d blocks, %d atoms", triple.name or 'triple',
                     len(self.labels), len(blocks), len(self.atom_pairs))

    @property
    def atom_count(self) -> int:
        return len(self.atom_pairs)

    def labels_of(self, mask: int) -> Tuple[ClassLabel, ...]:
        """All labels in the atoms selected by `mask`, sorted."""
        return tuple(sorted(l for i in indices(mask) for l in self.atom_labels[i]))

    def join_pair(self, pair: Pair, atom: int) -> Pair:
        a, b = self.atom_pairs[atom]
        return self.h_table.join(pair[0], a), self.hp_table.join(pair[1], b)

    def pair_of(self, mask: int) -> Pair:
        pair = self.empty_pair
        for i in indices(mask):
            pair = self.join_pair(pair, i)
        return pair

    def orders(self, pair: Pair) -> Tuple[int, int]:
        return self.h_table.order(pair[0]), self.hp_table.order(pair[1])

    def atom_inside(self, pair: Pair, atom: int) -> Tuple[bool, bool]:
        """(<H∩C> ⊆ first, <H'∩C> ⊆ second) for atom C."""
        a, b = self.atom_pairs[atom]
        return self.h_table.contains(pair[0], a), self.hp_table.contains(pair[1], b)

    def subsets_by_size(self) -> Iterator[Tuple[int, Pair]]:
        """
        Every subset of atoms with its generated pair, in (size, lex) order.

        Only the previous size level is kept in memory.
        """
        k = self.atom_count
        previous: Dict[int, Pair] = {0: self.empty_pair}
        yield 0, self.empty_pair
        for size in range(1, k + 1):
            current: Dict[int, Pair] = {}
            for combo in itertools.combinations(range(k), size):
                mask = 0
                for i in combo:
                    mask |= 1 << i
                last = combo[-1]
                pair = self.join_pair(previous[mask ^ (1 << last)], last)
                current[mask] = pair
                yield mask, pair
            previous = current

    def closed_sets(self) -> Iterator[Tuple[int, Pair]]:
        """
        One subset per closed set of the joint closure operator, i.e. per
        distinct generated pair, walked level by level.

        The mask yielded for a pair generates it with the fewest atoms, so
        the first failing subset has the same size as in the exhaustive
        walk. Within a level, masks come in atom index order.

        Raises:
            CapacityError: more closed sets than closed_set_cap
        """
        cap = get_settings().closed_set_cap
        level: List[Tuple[int, Pair]] = [(0, self.empty_pair)]
        seen = {self.empty_pair}
        visited = 0
        while level:
            upcoming: Dict[Pair, int] = {}
            for mask, pair in level:
                visited += 1
                if visited > cap:
                    raise CapacityError('closed_set_cap', cap, visited, detail=f"k'={self.atom_count}")
                yield mask, pair
                for i in range(self.atom_count):
                    if mask >> i & 1:
                        continue
                    bigger = self.join_pair(pair, i)
                    if bigger in seen:
                        continue
                    candidate = mask | 1 << i
                    if bigger not in upcoming or indices(candidate) < indices(upcoming[bigger]):
                        upcoming[bigger] = candidate
            seen.update(upcoming)
            level = sorted(((mask, pair) for pair, mask in upcoming.items()), key=lambda item: indices(item[0]))
        logger.debug("%s: %d closed sets", self.triple.name or 'triple', visited)

    def walk(self) -> Iterator[Tuple[int, Pair]]:
        """Exhaustive subsets when k' <= subset_cap, closed sets otherwise."""
        if self.atom_count <= get_settings().subset_cap:
            return self.subsets_by_size()
        logger.debug("k'=%d above subset_cap: walking closed sets", self.atom_count)
        return self.closed_sets()

    @property
    def mode(self) -> str:
        return 'exhaustive' if self.atom_count <= get_settings().subset_cap else 'closed-sets'


def indices(mask: int) -> Tuple[int, ...]:
    result = []
    i = 0
    while mask:
        if mask & 1:
            result.append(i)
        mask >>= 1
        i += 1
    return tuple(result)


def analyse(triple: Triple, deduplicate: bool = True) -> LabelAnalysis:
    """Cached LabelAnalysis of a triple."""
    key = ('analysis', deduplicate)
    cached: Optional[LabelAnalysis] = triple._cache.get(key)
    if cached is None:
        cached = LabelAnalysis(triple, deduplicate=deduplicate)
        triple._cache[key] = cached
    return cached
