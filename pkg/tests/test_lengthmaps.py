import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from catalog import ecs_triples
from equivalence import jump_equivalent, witness_length_map
from groups import FiniteGroup, Permutation, closure, conjugacy_classes, cyclic_group, is_normal, symmetric_group
from lengthmaps import (
    LengthMap,
    closed_filtration_at,
    constant_length_map,
    filtration_at,
    is_length_map,
    jump_multiplicity,
    jump_set,
    jump_set_bruteforce,
    length_map_from_dict,
    length_map_from_function,
    restriction_counterexample,
    validate,
)
from utils.config import override_settings
from utils.errors import CapacityError, DomainError, InputValidationError


def random_group(rng: random.Random) -> FiniteGroup:
    """A random subgroup of S_n, n <= 5, so its order stays below 200."""
    n = rng.randint(3, 5)
    G = symmetric_group(n)
    gens = []
    for _ in range(rng.randint(1, 3)):
        images = list(range(n))
        rng.shuffle(images)
        gens.append(Permutation(images))
    return closure(G, gens, name=f"random<S{n}>")


def random_length_map(seed: int) -> LengthMap:
    """
    Class function with values in [1, 2), equal on a class and on the class
    of its inverses; such a map always satisfies the axioms.
    """
    rng = random.Random(seed)
    G = random_group(rng)
    index = {}
    for i, cls in enumerate(conjugacy_classes(G)):
        for g in cls:
            index[g] = i
    block_value = {}
    values = {}
    for g in G.elements:
        if g.is_identity():
            values[g] = 0
            continue
        block = frozenset((index[g], index[g.inverse()]))
        if block not in block_value:
            block_value[block] = 1 + Fraction(rng.randint(0, 7), 8)
        values[g] = block_value[block]
    return LengthMap(G, values, name=f"random-{seed}")


# Axioms

def test_constant_map_is_valid():
    assert is_length_map(constant_length_map(symmetric_group(4), 3))


def test_positivity_violation():
    G = cyclic_group(3)
    m = length_map_from_function(G, lambda g: 0)
    assert {v.axiom for v in validate(m)} == {'positivity'}


def test_conjugation_violation():
    G = symmetric_group(3)
    t = Permutation.from_cycles(3, (0, 1))
    m = length_map_from_function(G, lambda g: 0 if g.is_identity() else (1 if g == t else 2))
    assert 'conjugation' in {v.axiom for v in validate(m)}


def test_power_violation_reports_both_elements():
    G = cyclic_group(4)
    r = G.generators[0]
    m = length_map_from_function(G, lambda g: 0 if g.is_identity() else (5 if g == r * r else 1))
    violations = [v for v in validate(m) if v.axiom == 'power']
    assert violations
    assert violations[0].to_dict()['elements'][1] == (r * r).to_list()


@given(st.integers(min_value=0, max_value=10 ** 6))
@settings(derandomize=True, max_examples=50, deadline=None)
def test_valid_maps_are_inverse_symmetric(seed):
    m = random_length_map(seed)
    assert validate(m) == []
    assert all(m(g) == m(g.inverse()) for g in m.elements)


# Filtrations and jumps

def test_constant_map_on_s3_has_one_jump_of_multiplicity_two():
    report = jump_set(constant_length_map(symmetric_group(3), 1))
    assert report.values == [1]
    assert report.jumps[0].subgroup_order == 6
    assert report.multiplicities == [2]
    assert report.to_dict()['terminal_order'] == 6


def test_cyclic_group_jumps_through_its_subgroups():
    G = cyclic_group(6)
    by_order = {1: 0, 2: 1, 3: 2, 6: 3}
    m = length_map_from_function(G, lambda g: by_order[g.order], name="C6")
    assert validate(m) == []
    report = jump_set(m)
    assert [str(v) for v in report.values] == ['1', '2']
    assert [j.subgroup_order for j in report.jumps] == [2, 6]
    assert report.multiplicities == [1, 1]


def test_filtration_is_strict_below_and_closed_at_delta():
    m = constant_length_map(symmetric_group(3), 1)
    assert filtration_at(m, 1).order == 1
    assert closed_filtration_at(m, 1).order == 6


def test_multiplicity_of_non_jump_rejected():
    m = constant_length_map(symmetric_group(3), 1)
    with pytest.raises(DomainError):
        jump_multiplicity(m, 2)


def test_multiplicity_cap_is_enforced():
    m = constant_length_map(symmetric_group(3), 1)
    with override_settings(multiplicity_cap=1):
        with pytest.raises(CapacityError) as info:
            jump_set(m)
    assert info.value.cap_name == 'multiplicity_cap'


def test_multiplicities_can_be_skipped():
    report = jump_set(constant_length_map(symmetric_group(4), 1), with_multiplicity=False)
    assert report.multiplicities == [None]


@given(st.integers(min_value=0, max_value=10 ** 6))
@settings(derandomize=True, max_examples=40, deadline=None)
def test_filtrations_are_nested_normal_subgroups(seed):
    m = random_length_map(seed)
    deltas = m.positive_values() + [Fraction(3)]
    steps = [filtration_at(m, delta) for delta in deltas]
    for lower, upper in zip(steps, steps[1:]):
        assert lower.element_set <= upper.element_set
    for step in steps:
        assert is_normal(m.domain, step)
    assert steps[-1].order == m.domain.order


@given(st.integers(min_value=0, max_value=10 ** 6))
@settings(derandomize=True, max_examples=40, deadline=None)
def test_smallest_positive_length_is_the_first_jump(seed):
    m = random_length_map(seed)
    values = jump_set(m, with_multiplicity=False).values
    positive = m.positive_values()
    assert values[:1] == positive[:1]
    assert set(values) <= set(positive)


@pytest.mark.slow
@given(st.integers(min_value=0, max_value=10 ** 6))
@settings(derandomize=True, max_examples=200, deadline=None)
def test_iterative_jump_set_matches_bruteforce(seed):
    m = random_length_map(seed)
    fast = jump_set(m, with_multiplicity=False)
    slow = jump_set_bruteforce(m)
    assert fast.values == slow.values
    assert [j.subgroup_order for j in fast.jumps] == [j.subgroup_order for j in slow.jumps]
    assert fast.terminal.order == m.domain.order


# Restriction

def test_restriction_differs_from_intersection():
    example = restriction_counterexample()
    assert example.restricted.order == 1
    assert len(example.intersected) == 3
    assert example.to_dict()['delta'] == '3/2'


def test_restriction_to_foreign_subgroup_rejected():
    m = constant_length_map(cyclic_group(4), 1)
    with pytest.raises(DomainError):
        m.restrict(symmetric_group(4))


def test_restriction_revalidates_on_the_subgroup():
    S3 = symmetric_group(3)
    swap = Permutation.from_cycles(3, (0, 1))
    values = {g: (0 if g.is_identity() else 1 if g == swap else 2) for g in S3.elements}
    m = LengthMap(None, values, default=2, name="uneven")
    with pytest.raises(DomainError):
        m.restrict(S3)
    C2 = closure(S3, [swap], name="C2")
    assert m.restrict(C2).image() == [0, 1]


def test_restriction_of_a_length_map_stays_valid():
    m = random_length_map(7)
    H = closure(m.domain, m.domain.generators[:1], name="H")
    assert is_length_map(m.restrict(H))


def test_domainless_map_must_be_restricted_first():
    m = LengthMap(None, {Permutation.identity(2): 0}, default=1)
    with pytest.raises(DomainError):
        jump_set(m)


# File format

def test_length_map_from_dict_checks_indices():
    G = cyclic_group(3)
    assert length_map_from_dict(G, {'0': 0, '1': 1, '2': 1}).image() == [0, 1]
    with pytest.raises(DomainError):
        length_map_from_dict(G, {'0': 0, '1': 1, '5': 1})
    with pytest.raises(DomainError):
        length_map_from_dict(G, {'0': 0, '1': 1})
    with pytest.raises(InputValidationError):
        length_map_from_dict(G, {'zero': 0, '1': 1, '2': 1})


def test_to_dict_rebuilds_the_same_values():
    m = constant_length_map(symmetric_group(3), '3/2', name="S3")
    data = m.to_dict()
    rebuilt = length_map_from_dict(m.domain, data['values'], name=data['name'])
    assert all(rebuilt(g) == m(g) for g in m.elements)


# Witness maps

def test_ecs_witness_map_separates_the_jump_sets():
    small, _ = ecs_triples()
    verdict = jump_equivalent(small)
    m = witness_length_map(small, verdict.witness['S'], verdict.witness['T'])
    on_h = jump_set(m.restrict(small.H), with_multiplicity=False).values
    on_hp = jump_set(m.restrict(small.Hp), with_multiplicity=False).values
    assert on_h == [2, 3]
    assert on_hp == [2]


def test_witness_map_needs_nested_sets():
    small, _ = ecs_triples()
    verdict = jump_equivalent(small)
    with pytest.raises(DomainError):
        witness_length_map(small, verdict.witness['T'], verdict.witness['S'])
