import random

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from catalog import (
    a4_triple,
    c2a4_triple_and_quotient,
    ecs_triples,
    gl_triple,
    tetrahedron_triple,
    valid_edge_subsets,
)
from equivalence import (
    RELATIONS,
    ClassLabel,
    CustomClasses,
    CycleTypeClasses,
    EnumeratedClasses,
    Triple,
    analyse,
    are_conjugate,
    classes_meeting,
    custom_system,
    decide,
    gassmann_equivalent,
    implication_audit,
    intersection_core,
    is_reduced,
    jump_equivalent,
    jump_equivalent_full,
    kronecker_equivalent,
    order_equivalent,
    quotient_triple,
    reduce_triple,
    registered_labellers,
    verify_witness,
)
from groups import Permutation, closure, cyclic_group, symmetric_group
from utils.config import override_settings
from utils.errors import CapacityError, DomainError, InputValidationError


def random_permutation(rng: random.Random, n: int) -> Permutation:
    images = list(range(n))
    rng.shuffle(images)
    return Permutation(images)


def random_triple(seed: int, n: int = 5, enumerated: bool = True) -> Triple:
    """Two random subgroups of S_n with one or two generators each."""
    rng = random.Random(seed)
    G = symmetric_group(n)
    H = closure(G, [random_permutation(rng, n) for _ in range(rng.randint(1, 2))], name="H")
    Hp = closure(G, [random_permutation(rng, n) for _ in range(rng.randint(1, 2))], name="H'")
    classes = EnumeratedClasses(G) if enumerated else CycleTypeClasses(n)
    return Triple(classes, H, Hp, name=f"random-{seed}")


@pytest.fixture
def s3_conjugate_pair():
    G = symmetric_group(3)
    H = closure(G, [Permutation.from_cycles(3, (0, 1))], name="<(0 1)>")
    Hp = closure(G, [Permutation.from_cycles(3, (1, 2))], name="<(1 2)>")
    return Triple(EnumeratedClasses(G), H, Hp, name="s3")


# Class systems

def test_labels_are_conjugation_stable():
    classes = CycleTypeClasses(5)
    g = Permutation.from_cycles(5, (0, 1, 2), (3, 4))
    s = Permutation.from_cycles(5, (0, 4, 1))
    assert classes.label(g) == classes.label(g.conjugate_by(s))
    assert str(classes.label(g)) == "3.2"


def test_enumerated_label_rejects_foreign_element():
    classes = EnumeratedClasses(cyclic_group(4))
    with pytest.raises(DomainError):
        classes.label(Permutation.from_cycles(4, (0, 1)))


def test_custom_labeller_requires_stability_tag():
    with pytest.raises(InputValidationError):
        CustomClasses('bare', 3, lambda g: ClassLabel('custom', tuple(g.images)), stability="")


def test_unknown_labeller_rejected():
    assert 'affine-translation' in registered_labellers()
    with pytest.raises(InputValidationError):
        custom_system('no-such-labeller')


def test_affine_translation_labeller_records_stability():
    classes = custom_system('affine-translation', q=2, d=2)
    assert classes.degree == 4
    assert classes.to_dict()['stability']


def test_spot_check_catches_unstable_labelling():
    G = symmetric_group(3)
    unstable = CustomClasses('images', 3, lambda g: ClassLabel('custom', tuple(g.images)),
                             stability="claimed", conjugators=G.generators)
    H = closure(G, [Permutation.from_cycles(3, (0, 1))])
    t = Triple(unstable, H, H, name="unstable")
    failures = t.validate(seed=1)
    assert failures
    assert all(unstable.label(g) != unstable.label(g.conjugate_by(s)) for g, s in failures)


def test_triple_degree_mismatch_rejected():
    with pytest.raises(InputValidationError):
        Triple(CycleTypeClasses(4), symmetric_group(3), symmetric_group(4))


# Deciders

def test_conjugate_subgroups_satisfy_every_relation(s3_conjugate_pair):
    audit = implication_audit(s3_conjugate_pair)
    assert all(v.holds for v in audit.verdicts.values())
    assert audit.consistent


def test_a4_triple_is_jump_but_not_gassmann():
    t = a4_triple()
    gassmann = gassmann_equivalent(t)
    assert not gassmann.holds
    assert verify_witness(t, gassmann)
    assert jump_equivalent(t).holds
    assert kronecker_equivalent(t).holds
    order = order_equivalent(t)
    assert not order.holds
    assert verify_witness(t, order)


def test_kronecker_failure_names_the_missing_label():
    G = symmetric_group(4)
    H = closure(G, [Permutation.from_cycles(4, (0, 1), (2, 3))])
    Hp = closure(G, [Permutation.from_cycles(4, (0, 1))])
    verdict = kronecker_equivalent(Triple(CycleTypeClasses(4), H, Hp))
    assert not verdict.holds
    assert verdict.witness['meets'] == 'Hprime'
    assert verdict.to_dict()['witness']['label'] == "2.1^2"


def test_ecs_s16_jump_witness_is_the_involutions():
    small, _ = ecs_triples()
    verdict = jump_equivalent(small)
    assert gassmann_equivalent(small).holds
    assert not verdict.holds
    assert [str(label) for label in verdict.witness['S']] == ['2^8']
    assert verify_witness(small, verdict)
    assert set(verdict.witness['S']) < set(verdict.witness['T'])


def test_decide_rejects_unknown_relation(s3_conjugate_pair):
    with pytest.raises(DomainError):
        decide(s3_conjugate_pair, 'isomorphic')


def test_verdict_serialization_uses_label_text():
    document = jump_equivalent(ecs_triples()[0]).to_dict()
    assert document['relation'] == 'jump'
    assert document['holds'] is False
    assert document['mode'] == 'exhaustive'
    assert all(isinstance(label, str) for label in document['witness']['S'])


def test_classes_meeting_excludes_identity():
    labels = classes_meeting(a4_triple())
    assert labels
    assert all(label.kind != 'identity' for label in labels)


def test_deduplication_merges_equivalent_blocks():
    t = ecs_triples()[0]
    assert analyse(t).atom_count <= analyse(t, deduplicate=False).atom_count


# Reduced triples and conjugacy

def test_c2a4_reduces_to_a4():
    product, reduced = c2a4_triple_and_quotient()
    assert not is_reduced(product)
    assert intersection_core(product).order == 2
    assert is_reduced(reduced)
    assert reduced.ambient.order == 12
    again, N = reduce_triple(product)
    assert N.order == 2
    assert jump_equivalent(again).holds
    assert not jump_equivalent(product).holds


def test_reduction_needs_enumerated_ambient():
    t = Triple(CycleTypeClasses(3), symmetric_group(3), symmetric_group(3))
    with pytest.raises(DomainError):
        is_reduced(t)


def test_gl_stabilizers_conjugate_only_in_excluded_case():
    t = gl_triple(2, 3)
    assert not are_conjugate(t.ambient, t.H, t.Hp)
    small = gl_triple(2, 2)
    assert are_conjugate(small.ambient, small.H, small.Hp)


# Engine modes and oracles

def test_closed_set_walk_agrees_with_exhaustive_subsets():
    t = ecs_triples()[0]
    exhaustive = jump_equivalent(t)
    with override_settings(subset_cap=1):
        walked = jump_equivalent(t)
    assert walked.mode == 'closed-sets'
    assert walked.holds == exhaustive.holds
    assert verify_witness(t, walked)


def test_closed_set_cap_is_enforced():
    t = ecs_triples()[0]
    with override_settings(subset_cap=1, closed_set_cap=1):
        with pytest.raises(CapacityError) as info:
            order_equivalent(t)
    assert info.value.cap_name == 'closed_set_cap'


def test_full_quantifier_cap_comes_from_settings():
    G = symmetric_group(4)
    S4 = closure(G, G.generators, name="S4")
    t = Triple(EnumeratedClasses(G), S4, S4, name="s4")
    assert jump_equivalent_full(t, deduplicate=False).holds
    with override_settings(full_quantifier_cap=3):
        with pytest.raises(CapacityError) as info:
            jump_equivalent_full(t, deduplicate=False)
    assert info.value.cap_name == 'full_quantifier_cap'
    assert (info.value.limit, info.value.observed) == (3, 4)


@given(st.integers(min_value=0, max_value=10 ** 6))
@settings(derandomize=True, max_examples=40, deadline=None)
def test_cycle_type_and_enumerated_labels_agree_on_symmetric_groups(seed):
    n = 4 + seed % 3
    by_class = random_triple(seed, n, enumerated=True)
    by_type = random_triple(seed, n, enumerated=False)
    for relation in RELATIONS:
        assert decide(by_class, relation).holds == decide(by_type, relation).holds


@given(st.integers(min_value=0, max_value=10 ** 6))
@settings(derandomize=True, max_examples=40, deadline=None)
def test_restricted_jump_quantifier_matches_full_quantifier(seed):
    t = random_triple(seed)
    assert jump_equivalent(t).holds == jump_equivalent_full(t).holds


@given(st.integers(min_value=0, max_value=10 ** 6))
@settings(derandomize=True, max_examples=40, deadline=None)
def test_closed_sets_match_exhaustive_on_random_triples(seed):
    t = random_triple(seed, 6, enumerated=False)
    expected = {r: decide(t, r).holds for r in ('order', 'jump')}
    with override_settings(subset_cap=1):
        assert {r: decide(t, r).holds for r in ('order', 'jump')} == expected


def witness_atom_count(t: Triple, labels) -> int:
    analysis = analyse(t)
    return sum(1 for atom in analysis.atom_labels if set(atom) <= set(labels))


@given(st.integers(min_value=0, max_value=10 ** 6))
@settings(derandomize=True, max_examples=40, deadline=None)
def test_closed_set_witnesses_are_as_small_as_exhaustive_ones(seed):
    t = random_triple(seed, 6, enumerated=False)
    for relation in ('order', 'jump'):
        exhaustive = decide(t, relation)
        with override_settings(subset_cap=1):
            walked = decide(t, relation)
        if exhaustive.holds:
            continue
        assert verify_witness(t, walked)
        assert witness_atom_count(t, walked.witness['S']) == witness_atom_count(t, exhaustive.witness['S'])


@given(st.integers(min_value=0, max_value=10 ** 6))
@settings(derandomize=True, max_examples=40, deadline=None)
def test_deduplication_does_not_change_verdicts(seed):
    t = random_triple(seed, 5, enumerated=False)
    assert order_equivalent(t).holds == order_equivalent(t, deduplicate=False).holds
    assert jump_equivalent(t).holds == jump_equivalent(t, deduplicate=False).holds


@pytest.mark.slow
def test_implication_audit_is_clean_on_seeded_random_triples():
    for seed in range(100):
        t = random_triple(seed, 5 + seed % 2, enumerated=seed % 3 == 0)
        audit = implication_audit(t)
        assert audit.violations == [], t.name
        for verdict in audit.verdicts.values():
            if not verdict.holds:
                assert verify_witness(t, verdict)


@pytest.mark.parametrize("edge_subset", valid_edge_subsets(), ids=lambda s: '-'.join(f"{i}{j}" for i, j in s))
def test_every_valid_edge_subset_gives_order_without_gassmann(edge_subset):
    t = tetrahedron_triple(edge_subset)
    assert t.H.order == t.Hp.order == 16
    assert order_equivalent(t).holds
    gassmann = gassmann_equivalent(t)
    assert not gassmann.holds
    assert verify_witness(t, gassmann)


# Properties over random triples

@given(st.integers(min_value=0, max_value=10 ** 6))
@settings(derandomize=True, max_examples=40, deadline=None)
def test_every_relation_is_symmetric(seed):
    t = random_triple(seed, 5, enumerated=seed % 2 == 0)
    swapped = t.swapped()
    assert (swapped.H, swapped.Hp) == (t.Hp, t.H)
    for relation in RELATIONS:
        assert decide(swapped, relation).holds == decide(t, relation).holds


@given(st.integers(min_value=0, max_value=10 ** 6))
@settings(derandomize=True, max_examples=40, deadline=None)
def test_gassmann_pairs_have_equal_orders_and_index(seed):
    t = random_triple(seed, 5)
    if gassmann_equivalent(t).holds:
        assert t.H.order == t.Hp.order
        assert t.ambient.order // t.H.order == t.ambient.order // t.Hp.order
        assert kronecker_equivalent(t).holds


@given(st.integers(min_value=0, max_value=10 ** 6))
@settings(derandomize=True, max_examples=30, deadline=None)
def test_dividing_out_the_core_keeps_the_verdicts(seed):
    t = random_triple(seed, 4)
    N = intersection_core(t)
    reduced = quotient_triple(t, N)
    assert is_reduced(reduced)
    assert reduced.ambient.order * N.order == t.ambient.order
    for relation in ('gassmann', 'kronecker'):
        assert decide(reduced, relation).holds == decide(t, relation).holds
    if jump_equivalent(t).holds:
        assert jump_equivalent(reduced).holds
