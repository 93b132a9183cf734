"""
Heisenberg Datum Module
A lattice L in a symplectic inner product space, the central scale c and
the central length δ_Z.

δ_Z is an input: either a known squared value (spectrum convention
1/2 * sqrt(q)) or a symbolic tag shared by isospectral partners.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

import sympy

from lattice import LatticeForm, lattice_from_dict
from utils.errors import InputValidationError
from utils.rationals import RationalLike, format_fraction, from_sympy, sympy_rational, to_fraction

Omega = Tuple[Tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class Known:
    q: Fraction

    def __post_init__(self):
        object.__setattr__(self, 'q', to_fraction(self.q))

    def to_dict(self) -> dict:
        return {'known': format_fraction(self.q)}


@dataclass(frozen=True)
class Symbolic:
    tag: str

    def to_dict(self) -> dict:
        return {'symbolic': self.tag}


CentralLength = Union[Known, Symbolic]


@dataclass(frozen=True)
class HeisenbergViolation:
    check: str
    detail: str

    def to_dict(self) -> dict:
        return {'check': self.check, 'detail': self.detail}


@dataclass
class HeisenbergDatum:
    """
    Γ = L x cℤ inside H(V).

    omega is the symplectic form in the coordinates of L's basis.
    """
    lattice: LatticeForm
    omega: Omega
    c: Fraction
    delta_z: CentralLength
    name: str = ""

    def __post_init__(self):
        self.omega = tuple(tuple(to_fraction(x) for x in row) for row in self.omega)
        self.c = to_fraction(self.c)
        n = self.lattice.rank
        if len(self.omega) != n or any(len(row) != n for row in self.omega):
            raise InputValidationError(f"omega must be {n}x{n} to match the lattice", key='omega')

    def to_dict(self) -> dict:
        return {
            'name': self.name,
            'lattice': self.lattice.to_dict(),
            'omega': [[format_fraction(x) for x in row] for row in self.omega],
            'c': format_fraction(self.c),
            'deltaZ': self.delta_z.to_dict(),
        }


def validate_heisenberg(d: HeisenbergDatum) -> List[HeisenbergViolation]:
    """Skewness, nondegeneracy and ω(b_i, b_j) ∈ cℤ on the lattice basis."""
    violations = []
    n = len(d.omega)
    if n % 2:
        violations.append(HeisenbergViolation('dimension', f"rank {n} is odd"))
    for i in range(n):
        for j in range(i, n):
            if d.omega[i][j] != -d.omega[j][i]:
                violations.append(HeisenbergViolation('skew', f"omega[{i}][{j}] != -omega[{j}][{i}]"))
    det = sympy.Matrix([[sympy_rational(x) for x in row] for row in d.omega]).det()
    if det == 0:
        violations.append(HeisenbergViolation('nondegenerate', "omega is singular"))
    if d.c <= 0:
        violations.append(HeisenbergViolation('scale', f"c = {format_fraction(d.c)} is not positive"))
    else:
        for i in range(n):
            for j in range(i + 1, n):
                ratio = d.omega[i][j] / d.c
                if ratio.denominator != 1:
                    violations.append(HeisenbergViolation(
                        'integrality', f"omega(b{i}, b{j}) / c = {format_fraction(ratio)} is not an integer"))
    return violations


def standard_symplectic(n: int) -> Omega:
    """[[0, I], [-I, 0]] on ℝ^{2n}."""
    size = 2 * n
    rows = [[Fraction(0)] * size for _ in range(size)]
    for i in range(n):
        rows[i][n + i] = Fraction(1)
        rows[n + i][i] = Fraction(-1)
    return tuple(tuple(row) for row in rows)


def transport_form(omega: Sequence[Sequence[RationalLike]], basis: Sequence[Sequence[int]]) -> Omega:
    """The form in the coordinates of `basis` (rows): B ω B^T."""
    B = sympy.Matrix(basis)
    W = sympy.Matrix([[sympy_rational(to_fraction(x)) for x in row] for row in omega])
    product = B * W * B.T
    return tuple(tuple(from_sympy(product[i, j]) for j in range(product.cols))
                 for i in range(product.rows))


def central_length_from_dict(data: dict) -> CentralLength:
    if 'known' in data:
        return Known(to_fraction(data['known']))
    if 'symbolic' in data:
        return Symbolic(str(data['symbolic']))
    raise InputValidationError("deltaZ needs a 'known' or 'symbolic' entry", key='deltaZ')


def heisenberg_from_dict(data: dict, name: Optional[str] = None) -> HeisenbergDatum:
    return HeisenbergDatum(
        lattice=lattice_from_dict(data['lattice']),
        omega=data['omega'],
        c=to_fraction(data['c']),
        delta_z=central_length_from_dict(data['deltaZ']),
        name=name or data.get('name', ""),
    )
