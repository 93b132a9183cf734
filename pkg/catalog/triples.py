"""
Catalog Triples
Every subgroup triple of the equivalence examples, built from the
constructions in the groups package.

Products of small groups are realized through their regular
representations, so an element of order d becomes |H|/d disjoint d-cycles
and cycle types decide conjugacy in the symmetric ambient.
"""

import itertools
import logging
from typing import List, Sequence, Tuple

from equivalence import CycleTypeClasses, EnumeratedClasses, Triple, custom_system, reduce_triple
from groups import (
    FiniteGroup,
    Permutation,
    alternating_group,
    closure,
    cyclic_group,
    direct_product,
    linear,
    regular_representation,
    semidirect_product,
    subgroup_from_elements,
)
from lattice.conway_sloane import H_GENERATORS, H_PRIME_GENERATORS
from lengthmaps import RestrictionExample, restriction_counterexample
from utils.errors import InputValidationError

logger = logging.getLogger(__name__)


def _regular(group: FiniteGroup, name: str) -> FiniteGroup:
    return regular_representation(group, name=name).image


def a4_triple() -> Triple:
    """(A4, V4, C2): a jump triple whose subgroups have different orders."""
    G = alternating_group(4)
    v1 = Permutation.from_cycles(4, (0, 1), (2, 3))
    v2 = Permutation.from_cycles(4, (0, 2), (1, 3))
    V4 = closure(G, [v1, v2], name="V4")
    C2 = closure(G, [v1], name="C2")
    return Triple(EnumeratedClasses(G), V4, C2, name="a4")


def c2a4_triple_and_quotient() -> Tuple[Triple, Triple]:
    """
    (C2 x A4, C2 x V4, C2 x C2), which is not reduced, and its reduction
    by C2 x {1}, which is (A4, V4, C2) again.
    """
    C2, A4 = cyclic_group(2), alternating_group(4)
    G = direct_product(C2, A4, name="C2xA4")
    z = G.embed_left(C2.generators[0])
    v1 = G.embed_right(Permutation.from_cycles(4, (0, 1), (2, 3)))
    v2 = G.embed_right(Permutation.from_cycles(4, (0, 2), (1, 3)))
    H = closure(G, [z, v1, v2], name="C2xV4")
    Hp = closure(G, [z, v1], name="C2xC2")
    product = Triple(EnumeratedClasses(G), H, Hp, name="c2a4")
    reduced, N = reduce_triple(product)
    reduced.name = "c2a4-quotient"
    reduced.notes['core_order'] = N.order
    logger.debug("c2a4: divided out a normal core of order %d", N.order)
    return product, reduced


def todd_triple() -> Triple:
    """C8 x C2 and C8 x| C2 (generator acting by fifth powers) inside S16."""
    C8, C2 = cyclic_group(8), cyclic_group(2)
    x, k = C8.generators[0], C2.generators[0]
    H = direct_product(C8, C2, name="C8xC2")
    Hp = semidirect_product(C8, C2, {k: {x: x ** 5}}, name="C8:C2")
    return Triple(CycleTypeClasses(16), _regular(H, "C8xC2"), _regular(Hp, "C8:C2"), name="todd")


def ecs_groups() -> Tuple[FiniteGroup, FiniteGroup]:
    """
    N x <c> and N x| <c> for N = C4 x C2 = <a, b>, where c fixes a and
    sends b to a^2 b.
    """
    N = direct_product(cyclic_group(4), cyclic_group(2), name="C4xC2")
    a, b = N.generators
    C = cyclic_group(2)
    c = C.generators[0]
    H = direct_product(N, C, name="NxC2")
    Hp = semidirect_product(N, C, {c: {a: a, b: a ** 2 * b}}, name="N:C2")
    return H, Hp


def ecs_triples() -> Tuple[Triple, Triple]:
    """The S16 triple and its S64 extension by an extra C4 factor."""
    H, Hp = ecs_groups()
    small = Triple(CycleTypeClasses(16), _regular(H, "H"), _regular(Hp, "H'"), name="ecs-s16")
    C4 = cyclic_group(4)
    H4 = direct_product(H, C4, name="HxC4")
    Hp4 = direct_product(Hp, C4, name="H'xC4")
    large = Triple(CycleTypeClasses(64), _regular(H4, "HxC4"), _regular(Hp4, "H'xC4"), name="ecs-s64")
    return small, large


def komatsu_triple(p: int = 3) -> Triple:
    """
    C_p^3 against the Heisenberg group mod p, both of exponent p, inside S_{p^3}.

    Raises:
        InputValidationError: p is not an odd prime
    """
    linear.require_prime_field(p)
    if p == 2:
        raise InputValidationError("Komatsu triples need an odd prime", key='p')
    Cp = cyclic_group(p)
    base = direct_product(Cp, Cp, name=f"C{p}^2")
    a, b = base.generators
    K = cyclic_group(p)
    c = K.generators[0]
    abelian = direct_product(base, Cp, name=f"C{p}^3")
    heisenberg = semidirect_product(base, K, {c: {a: a, b: a * b}}, name=f"Heis({p})")
    return Triple(CycleTypeClasses(p ** 3), _regular(abelian, f"C{p}^3"), _regular(heisenberg, f"Heis({p})"),
                  name=f"komatsu-{p}")


def gl_group(q: int, d: int) -> FiniteGroup:
    """GL(d, q) acting on the q^d - 1 nonzero vectors."""
    linear.require_prime_field(q)
    gens = [linear.nonzero_action(m, q, d) for m in linear.gl_generators(d, q)]
    return FiniteGroup(q ** d - 1, gens, name=f"GL({d},{q})")


def _fixes_first_coordinate(g: Permutation, vectors: Sequence[Sequence[int]]) -> bool:
    """x1(g v) = x1(v) for every nonzero v."""
    return all(vectors[g(i)][0] == v[0] for i, v in enumerate(vectors))


def gl_triple(q: int = 2, d: int = 3) -> Triple:
    """
    (GL(V), stabilizer of e1, stabilizer of the first coordinate functional).

    For (q, d) = (2, 2) the two stabilizers are conjugate; the triple is
    built anyway and the case is recorded in its notes.

    Raises:
        InputValidationError: q is not prime or d < 2
        CapacityError: |GL(d, q)| exceeds element_cap
    """
    if d < 2:
        raise InputValidationError(f"dimension must be at least 2, got {d}", key='d')
    G = gl_group(q, d)
    vectors = linear.all_vectors(q, d)[1:]
    e1 = linear.index_of(linear.basis_vectors(d)[0], q) - 1
    H = subgroup_from_elements(G, [g for g in G if g(e1) == e1], name="Stab(e1)")
    Hp = subgroup_from_elements(
        G, [g for g in G if _fixes_first_coordinate(g, vectors)], name="Stab(x1)")
    t = Triple(EnumeratedClasses(G), H, Hp, name=f"gl-{q}-{d}")
    if (q, d) == (2, 2):
        t.notes['excluded_case'] = "(q, d) = (2, 2): the stabilizers are conjugate"
    return t


def affine_group(q: int, d: int) -> FiniteGroup:
    """V x| GL(V) acting on the q^d points of V."""
    linear.require_prime_field(q)
    zero = (0,) * d
    gens = [linear.translation(e, q) for e in linear.basis_vectors(d)]
    gens += [linear.affine_permutation(m, zero, q, d) for m in linear.gl_generators(d, q)]
    return FiniteGroup(q ** d, gens, name=f"AGL({d},{q})")


def _linear_image(g: Permutation, point: int, q: int, d: int) -> Tuple[int, ...]:
    """L(v) for g = (x -> Lx + t), read off as g(v) - g(0)."""
    moved = linear.vector_of(g(point), q, d)
    shift = linear.vector_of(g(0), q, d)
    return tuple((x - y) % q for x, y in zip(moved, shift))


def affine_triple(q: int = 2, d: int = 3) -> Triple:
    """
    (V x| GL(V), V x| H, V x| H') for the stabilizers of gl_triple.

    notes['complement'] is {0} x| H; the classes it meets generate V x| H
    but not V x| H'.
    """
    if d < 2 or (q, d) == (2, 2):
        raise InputValidationError(f"affine triple needs d >= 2 and (q, d) != (2, 2), got ({q}, {d})")
    G = affine_group(q, d)
    e1 = linear.index_of(linear.basis_vectors(d)[0], q)
    points = range(q ** d)

    def fixes_functional(g: Permutation) -> bool:
        return all(_linear_image(g, i, q, d)[0] == linear.vector_of(i, q, d)[0] for i in points)

    e1_vector = linear.vector_of(e1, q, d)
    VH = subgroup_from_elements(G, [g for g in G if _linear_image(g, e1, q, d) == e1_vector], name="VxStab(e1)")
    VHp = subgroup_from_elements(G, [g for g in G if fixes_functional(g)], name="VxStab(x1)")
    complement = subgroup_from_elements(G, [g for g in VH if g(0) == 0], name="Stab(e1)")
    t = Triple(EnumeratedClasses(G), VH, VHp, name=f"affine-{q}-{d}")
    t.notes['complement'] = complement
    return t


# Labelled tetrahedron: vertices 0..3, edges in lexicographic order
EDGES: Tuple[Tuple[int, int], ...] = tuple(itertools.combinations(range(4), 2))
DEFAULT_EDGE_SUBSET: Tuple[Tuple[int, int], ...] = ((0, 1), (2, 3), (0, 2))


def valid_edge_subsets() -> List[Tuple[Tuple[int, int], ...]]:
    """Three-edge subsets containing two non-adjacent edges."""
    result = []
    for subset in itertools.combinations(EDGES, 3):
        if any(not set(e) & set(f) for e, f in itertools.combinations(subset, 2)):
            result.append(subset)
    return result


def _even_weight_vectors() -> List[Tuple[int, ...]]:
    return [v for v in linear.all_vectors(2, len(EDGES)) if sum(v) % 2 == 0]


def tetrahedron_group() -> Tuple[FiniteGroup, List[Tuple[int, ...]]]:
    """
    W x| A4 acting on W, the even-weight vectors of F_2^E.

    Returns:
        (group of order 384, the points of W in index order)
    """
    W = _even_weight_vectors()
    position = {w: i for i, w in enumerate(W)}
    edge_index = {e: i for i, e in enumerate(EDGES)}

    def translate(shift: Sequence[int]) -> Permutation:
        return Permutation._trusted(tuple(position[linear.add(w, shift, 2)] for w in W))

    def rotate(pi: Permutation) -> Permutation:
        target = [edge_index[tuple(sorted((pi(i), pi(j))))] for i, j in EDGES]
        images = []
        for w in W:
            moved = [0] * len(EDGES)
            for e, bit in enumerate(w):
                moved[target[e]] = bit
            images.append(position[tuple(moved)])
        return Permutation._trusted(tuple(images))

    last = len(EDGES) - 1
    shifts = [tuple(int(k == i or k == last) for k in range(len(EDGES))) for i in range(last)]
    gens = [translate(s) for s in shifts] + [rotate(pi) for pi in alternating_group(4).generators]
    return FiniteGroup(len(W), gens, name="W:A4"), W


def tetrahedron_triple(edge_subset: Sequence[Tuple[int, int]] = DEFAULT_EDGE_SUBSET) -> Triple:
    """
    H = translations vanishing on edge 01; H' = translations whose
    coordinates over `edge_subset` sum to zero.

    Raises:
        InputValidationError: edge_subset has no pair of non-adjacent edges
    """
    edge_subset = tuple(tuple(sorted(e)) for e in edge_subset)
    if tuple(sorted(edge_subset)) not in {tuple(sorted(s)) for s in valid_edge_subsets()}:
        raise InputValidationError(f"edge subset {edge_subset} needs three edges, two of them non-adjacent")
    G, W = tetrahedron_group()
    position = {w: i for i, w in enumerate(W)}
    selected = [EDGES.index(e) for e in edge_subset]

    def translation_of(shift: Tuple[int, ...]) -> Permutation:
        return Permutation._trusted(tuple(position[linear.add(w, shift, 2)] for w in W))

    H = closure(G, [translation_of(w) for w in W if w[0] == 0], name="W_e")
    Hp = closure(G, [translation_of(w) for w in W if sum(w[i] for i in selected) % 2 == 0], name="W_E'")
    t = Triple(EnumeratedClasses(G), H, Hp, name="tetrahedron")
    t.notes['edge_subset'] = [f"{i}{j}" for i, j in edge_subset]
    return t


def translation_triple(q: int = 2, d1: int = 1, d2: int = 2, d: int = 3) -> Triple:
    """
    Two translation subgroups of V x| GL(V), spanned by the first d1 and
    the first d2 basis vectors, compared through the translation labeller.
    """
    for name, value in (('d1', d1), ('d2', d2)):
        if not 1 <= value <= d:
            raise InputValidationError(f"{name} must lie in 1..{d}, got {value}", key=name)
    classes = custom_system('affine-translation', q=q, d=d)
    basis = linear.basis_vectors(d)
    V1 = FiniteGroup(q ** d, [linear.translation(e, q) for e in basis[:d1]], name=f"V{d1}")
    V2 = FiniteGroup(q ** d, [linear.translation(e, q) for e in basis[:d2]], name=f"V{d2}")
    return Triple(classes, V1, V2, name=f"translation-{q}-{d1}-{d2}")


def _coordinate_translation(a: Sequence[int], m: int) -> Permutation:
    """Point i*m + x moves to i*m + (x + a_i) mod m."""
    return Permutation._trusted(tuple(i * m + (x + a[i]) % m for i in range(4) for x in range(m)))


def _klein_multiplication(s: int, m: int) -> Permutation:
    """Left multiplication by the V4 element s on coordinates; V4 = {1, σ, τ, ρ} is XOR on 0..3."""
    return Permutation._trusted(tuple((s ^ i) * m + x for i in range(4) for x in range(m)))


def klein_torus_group(m: int) -> FiniteGroup:
    """(ℤ/m)^4 x| V4, the group ring ℤ[V4] mod m extended by V4."""
    units = [tuple(int(i == j) for j in range(4)) for i in range(4)]
    gens = [_coordinate_translation(u, m) for u in units]
    gens += [_klein_multiplication(s, m) for s in (1, 2)]
    return FiniteGroup(4 * m, gens, name=f"(Z/{m})^4:V4")


def remark_torus_triple(m: int) -> Triple:
    """Images of H = <3A, σ+τ+ρ, 1+ρ-τ> and H' = <3A, 1+σ+τ, 1+ρ-τ> modulo mA."""
    G = klein_torus_group(m)
    threes = [tuple(3 * int(i == j) for j in range(4)) for i in range(4)]
    H = closure(G, [_coordinate_translation(v, m) for v in threes + list(H_GENERATORS)], name=f"H/{m}A")
    Hp = closure(G, [_coordinate_translation(v, m) for v in threes + list(H_PRIME_GENERATORS)], name=f"H'/{m}A")
    return Triple(EnumeratedClasses(G), H, Hp, name=f"remark-tori-mod{m}")


def remark_tori_quotients() -> Tuple[Triple, Triple]:
    return remark_torus_triple(3), remark_torus_triple(9)


def restriction_example() -> RestrictionExample:
    return restriction_counterexample()
