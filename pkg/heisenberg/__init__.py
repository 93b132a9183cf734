# Heisenberg Package
from .datum import (
    CentralLength,
    HeisenbergDatum,
    HeisenbergViolation,
    Known,
    Symbolic,
    heisenberg_from_dict,
    standard_symplectic,
    transport_form,
    validate_heisenberg,
)
from .spectrum import (
    CovSpecSet,
    HeisenbergComparison,
    conway_sloane_heisenberg_pair,
    covspec_equal_heisenberg,
    covspec_heisenberg,
    with_known_delta,
)

__all__ = [
    'CentralLength',
    'Known',
    'Symbolic',
    'HeisenbergDatum',
    'HeisenbergViolation',
    'validate_heisenberg',
    'standard_symplectic',
    'transport_form',
    'heisenberg_from_dict',
    'CovSpecSet',
    'HeisenbergComparison',
    'covspec_heisenberg',
    'covspec_equal_heisenberg',
    'conway_sloane_heisenberg_pair',
    'with_known_delta',
]
