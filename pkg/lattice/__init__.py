# Lattice Package
# Exact quadratic forms on Z^n, sublattices, short vectors and torus covering spectra

from .form import LatticeForm, diagonal_form, direct_sum_form, identity_form, lattice_from_dict
from .sublattice import (
    Sublattice,
    extend_by_vector,
    hnf_rows,
    quotient_invariants,
    smith_invariants,
    sublattice_generated,
    unimodular_transform,
)
from .enumeration import ThetaPrefix, compare_theta, short_vectors, theta_prefix
from .spectrum import (
    CovSpecEntry,
    CovSpecReport,
    covering_spectrum_torus,
    jump_chain_oracle,
    spectrum_equal,
    successive_minima,
)
from .conway_sloane import (
    TABLE_WEIGHTS,
    conway_sloane_pair,
    conway_sloane_sublattices,
    five_dimensional_pair,
    group_ring_form,
)

__all__ = [
    'LatticeForm',
    'lattice_from_dict',
    'diagonal_form',
    'identity_form',
    'direct_sum_form',
    'Sublattice',
    'sublattice_generated',
    'hnf_rows',
    'smith_invariants',
    'quotient_invariants',
    'extend_by_vector',
    'unimodular_transform',
    'ThetaPrefix',
    'short_vectors',
    'theta_prefix',
    'compare_theta',
    'CovSpecEntry',
    'CovSpecReport',
    'covering_spectrum_torus',
    'successive_minima',
    'jump_chain_oracle',
    'spectrum_equal',
    'TABLE_WEIGHTS',
    'group_ring_form',
    'conway_sloane_sublattices',
    'conway_sloane_pair',
    'five_dimensional_pair',
]
