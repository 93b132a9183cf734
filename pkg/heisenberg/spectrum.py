"""
Heisenberg Covering Spectra

CovSpec(X) = {δ_Z} ∪ CovSpec(T) when δ_Z < δ_T = min CovSpec(T), and
CovSpec(T) otherwise. All values are squared (1/2 * sqrt(q) convention).
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from lattice import CovSpecReport, conway_sloane_sublattices, covering_spectrum_torus
from utils.errors import DomainError
from utils.rationals import RationalLike, format_fraction, render_half_sqrt

from .datum import (
    CentralLength,
    HeisenbergDatum,
    Known,
    Symbolic,
    standard_symplectic,
    transport_form,
    validate_heisenberg,
)

logger = logging.getLogger(__name__)


@dataclass
class CovSpecSet:
    """
    Exact entries plus, for symbolic δ_Z, the tag of a conditional entry
    (present iff δ_Z < δ_T).
    """
    rational_entries: Tuple[Fraction, ...]
    symbolic_entry: Optional[str] = None
    boundary: bool = False
    torus: Optional[CovSpecReport] = field(default=None, repr=False, compare=False)

    @property
    def delta_t(self) -> Fraction:
        return self.torus.q_values[0]

    def to_dict(self) -> dict:
        result = {
            'entries': [format_fraction(q) for q in self.rational_entries],
            'values': [render_half_sqrt(q) for q in self.rational_entries],
            'symbolic': None,
            'boundary': self.boundary,
        }
        if self.symbolic_entry is not None:
            result['symbolic'] = {
                'tag': self.symbolic_entry,
                'condition': f"included iff deltaZ < {format_fraction(self.delta_t)}",
            }
        return result


def covspec_heisenberg(d: HeisenbergDatum) -> CovSpecSet:
    """
    Apply the central-length branch to the torus covering spectrum.

    A known δ_Z equal to δ_T falls in the "otherwise" branch and is flagged
    as a boundary case.

    Raises:
        DomainError: the datum fails validate_heisenberg
    """
    _require_valid(d)
    torus = covering_spectrum_torus(d.lattice)
    values = tuple(torus.q_values)
    delta_t = values[0]
    if isinstance(d.delta_z, Symbolic):
        return CovSpecSet(values, symbolic_entry=d.delta_z.tag, torus=torus)
    delta_z = d.delta_z.q
    if delta_z < delta_t:
        return CovSpecSet((delta_z,) + values, torus=torus)
    boundary = delta_z == delta_t
    if boundary:
        logger.warning("%s: deltaZ equals deltaT = %s", d.name or 'heisenberg datum', format_fraction(delta_t))
    return CovSpecSet(values, boundary=boundary, torus=torus)


@dataclass
class HeisenbergComparison:
    equal: bool
    explanation: str

    def to_dict(self) -> dict:
        return {'equal': self.equal, 'explanation': self.explanation}


def covspec_equal_heisenberg(d1: HeisenbergDatum, d2: HeisenbergDatum) -> HeisenbergComparison:
    """
    Compare covering spectra of two Heisenberg manifolds.

    With a shared symbolic δ_Z the answer is the comparison of the torus
    spectra: equal tori give equal sets in either branch, and unequal tori
    stay unequal whichever branch each side takes.

    Raises:
        DomainError: one δ_Z is known and the other symbolic, the tags differ,
            or either datum fails validate_heisenberg
    """
    _require_valid(d1)
    _require_valid(d2)
    z1, z2 = d1.delta_z, d2.delta_z
    if isinstance(z1, Symbolic) != isinstance(z2, Symbolic):
        raise DomainError("incomparable central lengths: one known, one symbolic")
    if isinstance(z1, Symbolic):
        if z1.tag != z2.tag:
            raise DomainError(f"incomparable central lengths: tags '{z1.tag}' and '{z2.tag}'")
        t1 = covering_spectrum_torus(d1.lattice, with_multiplicity=False).q_values
        t2 = covering_spectrum_torus(d2.lattice, with_multiplicity=False).q_values
        if t1 == t2:
            return HeisenbergComparison(True, f"shared deltaZ '{z1.tag}' and equal torus covering spectra")
        return HeisenbergComparison(False, f"shared deltaZ '{z1.tag}' but torus covering spectra differ: "
                                           f"{_render(t1)} vs {_render(t2)}")
    s1, s2 = covspec_heisenberg(d1), covspec_heisenberg(d2)
    if s1.rational_entries == s2.rational_entries:
        return HeisenbergComparison(True, f"both spectra are {_render(s1.rational_entries)}")
    return HeisenbergComparison(False, f"{_render(s1.rational_entries)} vs {_render(s2.rational_entries)}")


def _require_valid(d: HeisenbergDatum) -> None:
    violations = validate_heisenberg(d)
    if violations:
        first = violations[0]
        raise DomainError(f"{d.name or 'heisenberg datum'} fails the {first.check} check: {first.detail}")


def _render(values: Sequence[Fraction]) -> str:
    return '{' + ', '.join(render_half_sqrt(q) for q in values) + '}'


def conway_sloane_heisenberg_pair(weights: Sequence[RationalLike],
                                  delta_z: CentralLength = Symbolic('deltaZ')) -> Tuple[HeisenbergDatum, HeisenbergDatum]:
    """
    Heisenberg data over the H and H' lattices: the standard symplectic form
    on the group-ring coordinates (1, σ, τ, ρ), c = 1, shared δ_Z.
    """
    H, Hp = conway_sloane_sublattices(weights)
    omega = standard_symplectic(2)
    label = '-'.join(str(w) for w in weights)
    first = HeisenbergDatum(H.form(name=f"H[{label}]"), transport_form(omega, H.basis), Fraction(1), delta_z,
                            name=f"heis-H[{label}]")
    second = HeisenbergDatum(Hp.form(name=f"H'[{label}]"), transport_form(omega, Hp.basis), Fraction(1), delta_z,
                             name=f"heis-H'[{label}]")
    return first, second


def with_known_delta(d: HeisenbergDatum, q: RationalLike) -> HeisenbergDatum:
    return HeisenbergDatum(d.lattice, d.omega, d.c, Known(q), name=d.name)
