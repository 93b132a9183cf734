import random

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st
from sympy.combinatorics import Permutation as SymPermutation
from sympy.combinatorics.perm_groups import PermutationGroup

from catalog import tetrahedron_group
from groups import (
    FiniteGroup,
    Permutation,
    alternating_group,
    closure,
    conjugacy_classes,
    cyclic_group,
    direct_product,
    group_from_dict,
    is_normal,
    join,
    normal_core,
    order_statistics,
    quotient,
    regular_representation,
    semidirect_product,
    subgroup_from_elements,
    symmetric_group,
)
from groups.linear import gl_generators, nonzero_action
from utils.config import override_settings
from utils.errors import CapacityError, DomainError, InputValidationError


def sympy_group(G: FiniteGroup) -> PermutationGroup:
    return PermutationGroup([SymPermutation(g.to_list()) for g in G.generators] or
                            [SymPermutation(list(range(max(G.degree, 1))))])


# Permutations

def test_images_must_be_a_bijection():
    with pytest.raises(InputValidationError):
        Permutation([0, 0, 1])
    with pytest.raises(InputValidationError):
        Permutation([1, 2, 3])


def test_composition_applies_right_factor_first():
    p = Permutation([1, 2, 0])
    q = Permutation([1, 0, 2])
    pq = p * q
    assert all(pq(i) == p(q(i)) for i in range(3))


def test_cycle_type_includes_fixed_points():
    g = Permutation.from_cycles(6, (0, 1), (2, 3, 4))
    assert g.cycle_type() == (3, 2, 1)
    assert g.order == 6
    assert g.cycles() == [(0, 1), (2, 3, 4)]


def test_overlapping_cycles_rejected():
    with pytest.raises(InputValidationError):
        Permutation.from_cycles(4, (0, 1), (1, 2))


@given(st.permutations(list(range(7))), st.integers(min_value=-20, max_value=20))
@settings(derandomize=True, max_examples=60)
def test_power_agrees_with_repeated_product(images, k):
    g = Permutation(images)
    expected = Permutation.identity(7)
    step = g if k >= 0 else g.inverse()
    for _ in range(abs(k)):
        expected = expected * step
    assert g ** k == expected


def test_conjugation_preserves_cycle_type():
    g = Permutation.from_cycles(5, (0, 1, 2))
    h = Permutation.from_cycles(5, (0, 4), (1, 3))
    assert g.conjugate_by(h).cycle_type() == g.cycle_type()


# Groups against the sympy oracle

@pytest.mark.parametrize("G", [symmetric_group(4), symmetric_group(5), alternating_group(5),
                               cyclic_group(12), direct_product(symmetric_group(3), cyclic_group(4))],
                         ids=lambda G: G.name)
def test_order_and_class_count_match_sympy(G):
    oracle = sympy_group(G)
    assert G.order == oracle.order()
    assert len(conjugacy_classes(G)) == len(oracle.conjugacy_classes())


def test_elements_are_sorted_and_identity_class_first():
    G = symmetric_group(4)
    assert list(G.elements) == sorted(G.elements)
    classes = conjugacy_classes(G)
    assert classes[0] == (G.identity,)
    assert sum(len(c) for c in classes) == 24


def test_gl_3_2_on_nonzero_vectors_has_order_168():
    gens = [nonzero_action(m, 2, 3) for m in gl_generators(3, 2)]
    G = FiniteGroup(7, gens, name="GL(3,2)")
    assert G.order == 168
    assert G.order == sympy_group(G).order()


def test_gl_generators_reject_composite_field():
    with pytest.raises(InputValidationError):
        gl_generators(2, 4)


def test_element_cap_is_enforced():
    with override_settings(element_cap=100):
        with pytest.raises(CapacityError) as info:
            symmetric_group(6).elements
    assert info.value.cap_name == 'element_cap'
    assert info.value.limit == 100


# Subgroups

def test_closure_rejects_outside_generator():
    G = alternating_group(4)
    with pytest.raises(DomainError):
        closure(G, [Permutation.from_cycles(4, (0, 1))])


def test_join_extends_enumerated_subgroup():
    G = symmetric_group(4)
    V = closure(G, [Permutation.from_cycles(4, (0, 1), (2, 3)), Permutation.from_cycles(4, (0, 2), (1, 3))])
    A = join(V, [Permutation.from_cycles(4, (0, 1, 2))])
    assert V.order == 4
    assert A.same_elements(alternating_group(4))


def test_subgroup_from_elements_requires_closure():
    G = symmetric_group(3)
    t = Permutation.from_cycles(3, (0, 1))
    assert subgroup_from_elements(G, [G.identity, t]).order == 2
    with pytest.raises(InputValidationError):
        subgroup_from_elements(G, [G.identity, Permutation.from_cycles(3, (0, 1, 2))])


def test_normality_and_core():
    S4 = symmetric_group(4)
    A4 = alternating_group(4)
    assert is_normal(S4, A4)
    stabilizer = closure(S4, [Permutation.from_cycles(4, (0, 1)), Permutation.from_cycles(4, (0, 1, 2))])
    assert not is_normal(S4, stabilizer)
    assert normal_core(S4, stabilizer).order == 1
    assert normal_core(S4, A4).order == 12


def test_order_statistics_of_a4():
    assert order_statistics(alternating_group(4)) == {1: 1, 2: 3, 3: 8}


def test_group_file_round_trip_keeps_elements():
    G = alternating_group(5)
    assert group_from_dict(G.to_dict()).same_elements(G)


# Quotients and constructions

def test_quotient_s4_by_klein_four():
    S4 = symmetric_group(4)
    V = closure(S4, [Permutation.from_cycles(4, (0, 1), (2, 3)), Permutation.from_cycles(4, (0, 2), (1, 3))])
    Q, project = quotient(S4, V)
    assert Q.order == 6
    image = Q.as_permutation_group()
    assert image.order == 6
    assert project(V.generators[0]).is_identity()
    assert Q.image(alternating_group(4)).order == 3


def test_quotient_by_non_normal_subgroup_rejected():
    S3 = symmetric_group(3)
    with pytest.raises(InputValidationError):
        quotient(S3, closure(S3, [Permutation.from_cycles(3, (0, 1))]))


def test_regular_representation_cycle_structure():
    C = direct_product(cyclic_group(4), cyclic_group(2))
    reg = regular_representation(C)
    assert reg.image.degree == 8
    assert reg.image.order == 8
    for g in C.elements:
        d = g.order
        assert reg(g).cycle_type() == (d,) * (8 // d)


def test_semidirect_product_c3_by_c2_is_s3():
    N, K = cyclic_group(3), cyclic_group(2)
    r, s = N.generators[0], K.generators[0]
    G = semidirect_product(N, K, {s: {r: r.inverse()}})
    assert G.order == 6
    assert len(conjugacy_classes(G)) == 3


def test_semidirect_product_rejects_non_homomorphism():
    N, K = cyclic_group(3), cyclic_group(2)
    r, s = N.generators[0], K.generators[0]
    with pytest.raises(InputValidationError):
        semidirect_product(N, K, {s: {r: r * r * r}})


def test_quotient_coset_arithmetic_matches_projection():
    S4 = symmetric_group(4)
    V = closure(S4, [Permutation.from_cycles(4, (0, 1), (2, 3)), Permutation.from_cycles(4, (0, 2), (1, 3))])
    Q, project = quotient(S4, V)
    assert len(Q.table) == Q.order
    for g in S4.elements:
        for h in S4.elements:
            i, j = Q.coset_of(g), Q.coset_of(h)
            assert Q.coset_of(g * h) == Q.multiply(i, j) == Q.table[i][j]
            assert project(g * h) == project(g) * project(h)


@pytest.mark.parametrize("N,K", [(cyclic_group(3), cyclic_group(2)), (cyclic_group(4), cyclic_group(4)),
                                 (alternating_group(4), cyclic_group(3))],
                         ids=lambda G: G.name)
def test_trivial_action_gives_the_direct_product(N, K):
    semidirect = semidirect_product(N, K, {})
    direct = direct_product(N, K)
    assert semidirect.order == direct.order
    assert order_statistics(semidirect) == order_statistics(direct)


# Properties over random subgroups

def random_subgroup(seed: int, max_degree: int = 5) -> FiniteGroup:
    rng = random.Random(seed)
    n = rng.randint(3, max_degree)
    G = symmetric_group(n)
    gens = []
    for _ in range(rng.randint(1, 3)):
        images = list(range(n))
        rng.shuffle(images)
        gens.append(Permutation(images))
    return closure(G, gens, name=f"random-{seed}")


@given(st.integers(min_value=0, max_value=10 ** 6))
@settings(derandomize=True, max_examples=40, deadline=None)
def test_closure_is_idempotent(seed):
    H = random_subgroup(seed)
    again = closure(H.parent, H.elements)
    assert again.same_elements(H)
    assert closure(H.parent, again.generators).same_elements(H)


@given(st.integers(min_value=0, max_value=10 ** 6))
@settings(derandomize=True, max_examples=20, deadline=None)
def test_regular_representation_is_a_faithful_homomorphism(seed):
    H = random_subgroup(seed, max_degree=4)
    reg = regular_representation(H)
    assert reg.image.order == H.order
    images = {reg(g) for g in H.elements}
    assert len(images) == H.order
    for g in H.elements:
        for h in H.elements:
            assert reg(g * h) == reg(g) * reg(h)


def test_tetrahedron_ambient_matches_sympy():
    G, W = tetrahedron_group()
    oracle = sympy_group(G)
    assert len(W) == 32
    assert G.order == oracle.order() == 384
    assert len(conjugacy_classes(G)) == len(oracle.conjugacy_classes())
