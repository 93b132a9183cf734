import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from catalog.lattices import conway_sloane_heisenberg, torus_3_2
from heisenberg import (
    HeisenbergDatum,
    Known,
    Symbolic,
    covspec_equal_heisenberg,
    covspec_heisenberg,
    heisenberg_from_dict,
    standard_symplectic,
    transport_form,
    validate_heisenberg,
    with_known_delta,
)
from lattice import LatticeForm, covering_spectrum_torus, identity_form
from utils.errors import DomainError, InputValidationError


def torus_datum(delta_z, name="T(3,2)") -> HeisenbergDatum:
    """Heisenberg manifold over S1(3) x S1(2), where deltaT = 4."""
    return HeisenbergDatum(torus_3_2(), standard_symplectic(1), 1, delta_z, name=name)


# Validation

def test_standard_datum_is_valid():
    assert validate_heisenberg(torus_datum(Symbolic('z'))) == []


def test_symmetric_omega_is_not_skew():
    d = HeisenbergDatum(torus_3_2(), [[0, 1], [1, 0]], 1, Known(1))
    assert {v.check for v in validate_heisenberg(d)} == {'skew'}


def test_fractional_pairing_breaks_integrality():
    d = HeisenbergDatum(torus_3_2(), [[0, '1/2'], ['-1/2', 0]], 1, Known(1))
    violations = validate_heisenberg(d)
    assert [v.check for v in violations] == ['integrality']
    assert '1/2' in violations[0].detail


def test_odd_rank_and_bad_scale():
    omega = [[0, 1, 0], [-1, 0, 0], [0, 0, 0]]
    d = HeisenbergDatum(identity_form(3), omega, 0, Known(1))
    checks = {v.check for v in validate_heisenberg(d)}
    assert {'dimension', 'nondegenerate', 'scale'} <= checks


def test_omega_shape_must_match_lattice():
    with pytest.raises(InputValidationError):
        HeisenbergDatum(identity_form(4), standard_symplectic(1), 1, Known(1))


def test_invalid_datum_has_no_covering_spectrum():
    d = HeisenbergDatum(torus_3_2(), [[0, '1/2'], ['-1/2', 0]], 1, Known(1), name="half")
    with pytest.raises(DomainError, match='integrality'):
        covspec_heisenberg(d)
    with pytest.raises(DomainError):
        covspec_equal_heisenberg(torus_datum(Known(1)), d)


def test_transport_form_is_integral_on_integer_bases():
    omega = transport_form(standard_symplectic(1), [[2, 1], [1, 1]])
    assert omega == ((0, 1), (-1, 0))


# Central-length branches

def test_short_central_length_is_added():
    spectrum = covspec_heisenberg(torus_datum(Known(1)))
    assert spectrum.rational_entries == (1, 4, 9)
    assert spectrum.to_dict()['values'] == ['1/2', '1', '3/2']
    assert not spectrum.boundary


def test_long_central_length_leaves_the_torus_spectrum():
    spectrum = covspec_heisenberg(torus_datum(Known(9)))
    assert spectrum.rational_entries == (4, 9)
    assert not spectrum.boundary


def test_central_length_equal_to_torus_minimum_is_a_boundary_case():
    spectrum = covspec_heisenberg(torus_datum(Known(4)))
    assert spectrum.rational_entries == (4, 9)
    assert spectrum.boundary
    assert spectrum.to_dict()['boundary'] is True


def test_symbolic_central_length_is_conditional():
    spectrum = covspec_heisenberg(torus_datum(Symbolic('deltaZ')))
    assert spectrum.rational_entries == (4, 9)
    assert spectrum.delta_t == 4
    assert spectrum.to_dict()['symbolic'] == {'tag': 'deltaZ', 'condition': 'included iff deltaZ < 4'}


def test_with_known_delta_keeps_the_lattice():
    d = with_known_delta(torus_datum(Symbolic('deltaZ')), '1/4')
    assert d.delta_z == Known(Fraction(1, 4))
    assert covspec_heisenberg(d).rational_entries == (Fraction(1, 4), 4, 9)


# Comparisons

@pytest.mark.parametrize("row,equal", [('row1', False), ('row2', False), ('row3', True)])
def test_conway_sloane_heisenberg_pairs(row, equal):
    first, second = conway_sloane_heisenberg(row)
    assert validate_heisenberg(first) == []
    assert validate_heisenberg(second) == []
    comparison = covspec_equal_heisenberg(first, second)
    assert comparison.equal is equal
    assert 'deltaZ' in comparison.explanation


def test_known_central_lengths_compare_exact_sets():
    short = covspec_equal_heisenberg(torus_datum(Known(1)), torus_datum(Known(2)))
    assert not short.equal
    long = covspec_equal_heisenberg(torus_datum(Known(5)), torus_datum(Known(9)))
    assert long.equal


def test_incomparable_central_lengths_are_rejected():
    with pytest.raises(DomainError):
        covspec_equal_heisenberg(torus_datum(Known(1)), torus_datum(Symbolic('z')))
    with pytest.raises(DomainError):
        covspec_equal_heisenberg(torus_datum(Symbolic('a')), torus_datum(Symbolic('b')))


# File format

def test_datum_file_round_trip():
    d = torus_datum(Known('1/4'))
    rebuilt = heisenberg_from_dict(d.to_dict())
    assert rebuilt.lattice == d.lattice
    assert rebuilt.omega == d.omega
    assert rebuilt.delta_z == d.delta_z
    assert rebuilt.name == d.name


def test_central_length_needs_a_kind():
    data = torus_datum(Known(1)).to_dict()
    data['deltaZ'] = {'approximate': 1}
    with pytest.raises(InputValidationError):
        heisenberg_from_dict(data)


# Properties

@given(st.fractions(min_value=Fraction(1, 100), max_value=20, max_denominator=12))
@settings(derandomize=True, max_examples=60, deadline=None)
def test_known_central_length_branches_agree_with_the_torus(delta_z):
    spectrum = covspec_heisenberg(torus_datum(Known(delta_z)))
    torus = (Fraction(4), Fraction(9))
    if delta_z < 4:
        assert spectrum.rational_entries == (delta_z,) + torus
    else:
        assert spectrum.rational_entries == torus
    assert spectrum.boundary == (delta_z == 4)
    assert spectrum.delta_t == 4


def random_lattice_datum(rng: random.Random, name: str) -> HeisenbergDatum:
    """Gram B B^T of a random nonsingular 2x2 integer matrix, with c = 1 and shared tag deltaZ."""
    while True:
        rows = [[rng.randint(-3, 3) for _ in range(2)] for _ in range(2)]
        if rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0] != 0:
            break
    gram = [[sum(a * b for a, b in zip(u, v)) for v in rows] for u in rows]
    return HeisenbergDatum(LatticeForm(gram, name=name), standard_symplectic(1), 1, Symbolic('deltaZ'), name=name)


@pytest.mark.parametrize("seed", range(20))
def test_shared_symbolic_tag_compares_torus_spectra(seed):
    rng = random.Random(seed)
    first = random_lattice_datum(rng, "first")
    second = random_lattice_datum(rng, "second") if seed % 4 else first
    comparison = covspec_equal_heisenberg(first, second)
    torus_first = covering_spectrum_torus(first.lattice, with_multiplicity=False).q_values
    torus_second = covering_spectrum_torus(second.lattice, with_multiplicity=False).q_values
    assert comparison.equal == (torus_first == torus_second)
    if second is first:
        assert comparison.equal
    assert covspec_heisenberg(first).symbolic_entry == 'deltaZ'
