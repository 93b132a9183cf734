"""
Group Constructions
Named groups, direct and semidirect products, and regular representations.

Semidirect products are materialized through the regular representation of
the abstract product set N x K, so no faithful small-degree action has to
be chosen per example.
"""

import itertools
import logging
from collections import deque
from typing import Dict, Mapping, Optional, Tuple

from utils.errors import InputValidationError

from .finite_group import FiniteGroup
from .permutation import Permutation

logger = logging.getLogger(__name__)


def cyclic_group(n: int) -> FiniteGroup:
    """C_n generated by the n-cycle (0 1 ... n-1)."""
    if n < 1:
        raise InputValidationError(f"cyclic group order must be positive, got {n}")
    gens = [Permutation.from_cycles(n, range(n))] if n > 1 else []
    return FiniteGroup(n, gens, name=f"C{n}")


def symmetric_group(n: int) -> FiniteGroup:
    gens = []
    if n >= 2:
        gens.append(Permutation.from_cycles(n, (0, 1)))
    if n >= 3:
        gens.append(Permutation.from_cycles(n, range(n)))
    return FiniteGroup(n, gens, name=f"S{n}")


def alternating_group(n: int) -> FiniteGroup:
    """A_n generated by the 3-cycles (0 1 i)."""
    gens = [Permutation.from_cycles(n, (0, 1, i)) for i in range(2, n)]
    return FiniteGroup(n, gens, name=f"A{n}")


class ProductGroup(FiniteGroup):
    """
    A x B acting on the disjoint union of the two point sets.

    Generators are A's generators followed by B's, embedded.
    """

    def __init__(self, left: FiniteGroup, right: FiniteGroup, name: Optional[str] = None):
        self.left = left
        self.right = right
        gens = [self.embed_left(g) for g in left.generators] + [self.embed_right(g) for g in right.generators]
        super().__init__(left.degree + right.degree, gens, name=name or f"{left.name}x{right.name}")

    def embed_left(self, g: Permutation) -> Permutation:
        offset = self.left.degree
        return Permutation._trusted(g.images + tuple(range(offset, offset + self.right.degree)))

    def embed_right(self, g: Permutation) -> Permutation:
        offset = self.left.degree
        return Permutation._trusted(tuple(range(offset)) + tuple(i + offset for i in g.images))

    def pair(self, a: Permutation, b: Permutation) -> Permutation:
        """The element (a, b)."""
        return self.embed_left(a) * self.embed_right(b)


def direct_product(A: FiniteGroup, B: FiniteGroup, name: Optional[str] = None) -> ProductGroup:
    """A x B as a permutation group of degree deg(A) + deg(B)."""
    return ProductGroup(A, B, name=name)


def _indexed(group: FiniteGroup) -> Tuple[Tuple[Permutation, ...], Dict[Permutation, int]]:
    elements = group.elements
    return elements, {e: i for i, e in enumerate(elements)}


def extend_to_automorphism(N: FiniteGroup, generator_images: Mapping[Permutation, Permutation]) -> Tuple[int, ...]:
    """
    Extend images of N's generators to an automorphism of N.

    Returns:
        Tuple mapping element index -> image element index (sorted element order)

    Raises:
        InputValidationError: the images do not define an automorphism
    """
    elements, index = _indexed(N)
    images = {}
    for s in N.generators:
        target = generator_images.get(s, s)
        if target not in index:
            raise InputValidationError(f"image {target} of generator {s} lies outside {N.name}")
        images[s] = target
    phi = {N.identity: N.identity}
    queue = deque([N.identity])
    while queue:
        x = queue.popleft()
        for s in N.generators:
            y = x * s
            image = phi[x] * images[s]
            if y in phi:
                if phi[y] != image:
                    raise InputValidationError(f"generator images do not define a homomorphism of {N.name}")
            else:
                phi[y] = image
                queue.append(y)
    table = tuple(index[phi[e]] for e in elements)
    if len(set(table)) != len(table):
        raise InputValidationError(f"generator images do not define a bijection of {N.name}")
    return table


def _compose(a: Tuple[int, ...], b: Tuple[int, ...]) -> Tuple[int, ...]:
    """(a o b)[i] = a[b[i]]"""
    return tuple(a[i] for i in b)


def semidirect_product(N: FiniteGroup, K: FiniteGroup,
                       action: Mapping[Permutation, Mapping[Permutation, Permutation]],
                       name: Optional[str] = None) -> FiniteGroup:
    """
    N x| K with K acting on N through `action`.

    Args:
        N: Normal factor
        K: Complement
        action: For each generator k of K, the images of N's generators under
            the automorphism n -> k n k^-1. Generators missing from the
            mapping act trivially.

    Returns:
        The product as left translations of the set N x K, points ordered
        (n index, k index), degree |N| * |K|.

    Raises:
        InputValidationError: the action is not a homomorphism K -> Aut(N)
    """
    n_elements, n_index = _indexed(N)
    k_elements, k_index = _indexed(K)
    identity_aut = tuple(range(len(n_elements)))

    generator_auts = {k: extend_to_automorphism(N, action.get(k, {})) for k in K.generators}
    auts: Dict[Permutation, Tuple[int, ...]] = {K.identity: identity_aut}
    queue = deque([K.identity])
    while queue:
        k = queue.popleft()
        for s in K.generators:
            y = k * s
            aut = _compose(auts[k], generator_auts[s])
            if y in auts:
                if auts[y] != aut:
                    raise InputValidationError(f"action does not respect the relations of {K.name}")
            else:
                auts[y] = aut
                queue.append(y)

    n_count, k_count = len(n_elements), len(k_elements)
    k_auts = [auts[k] for k in k_elements]
    # n_mult[a][b] = index of n_a * n_b; k_mult likewise
    n_mult = [[n_index[a * b] for b in n_elements] for a in n_elements]
    k_mult = [[k_index[a * b] for b in k_elements] for a in k_elements]

    def translation(n_i: int, k_j: int) -> Permutation:
        aut = k_auts[k_j]
        images = [0] * (n_count * k_count)
        row = n_mult[n_i]
        k_row = k_mult[k_j]
        for a, b in itertools.product(range(n_count), range(k_count)):
            images[a * k_count + b] = row[aut[a]] * k_count + k_row[b]
        return Permutation._trusted(tuple(images))

    gens = [translation(n_index[n], k_index[K.identity]) for n in N.generators]
    gens += [translation(n_index[N.identity], k_index[k]) for k in K.generators]
    product = FiniteGroup(n_count * k_count, gens, name=name or f"{N.name}:{K.name}")
    logger.debug("Built %s of degree %d", product.name, product.degree)
    return product


class RegularRepresentation:
    """
    Left-regular embedding of H into the symmetric group on |H| points.

    Point i is the i-th element of H in sorted order.
    """

    def __init__(self, H: FiniteGroup, name: Optional[str] = None):
        self.source = H
        self._elements, self._index = _indexed(H)
        gens = [self(g) for g in H.generators]
        self.image = FiniteGroup(len(self._elements), gens, name=name or f"reg({H.name})")

    def __call__(self, g: Permutation) -> Permutation:
        return Permutation._trusted(tuple(self._index[g * e] for e in self._elements))

    def __repr__(self) -> str:
        return f"<RegularRepresentation of '{self.source.name}' degree={len(self._elements)}>"


def regular_representation(H: FiniteGroup, name: Optional[str] = None) -> RegularRepresentation:
    return RegularRepresentation(H, name=name)
