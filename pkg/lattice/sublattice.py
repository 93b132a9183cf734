"""
Sublattices of ℤ^n in Hermite normal form.

sympy's hermite_normal_form works on columns, so generator vectors are
passed as columns and the result is transposed back into row form. The
returned basis is canonical: two generating sets span the same sublattice
exactly when their bases are equal.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

import sympy
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import hermite_normal_form, invariant_factors

from utils.errors import InputValidationError
from utils.rationals import from_sympy, to_fraction

from .form import LatticeForm

Basis = Tuple[Tuple[int, ...], ...]


def hnf_rows(vectors: Iterable[Sequence[int]], n: int) -> Basis:
    """Canonical row basis of the ℤ-span of `vectors` in ℤ^n."""
    columns = [list(v) for v in vectors if any(v)]
    for v in columns:
        if len(v) != n:
            raise InputValidationError(f"vector {v} does not have {n} coordinates")
    if not columns:
        return ()
    matrix = DomainMatrix([[ZZ(v[i]) for v in columns] for i in range(n)], (n, len(columns)), ZZ)
    reduced = hermite_normal_form(matrix).to_Matrix()
    rows = [tuple(int(reduced[i, j]) for i in range(n)) for j in range(reduced.cols)]
    return tuple(row for row in rows if any(row))


def smith_invariants(rows: Sequence[Sequence[int]]) -> Tuple[int, ...]:
    """Nonzero invariant factors of an integer matrix."""
    if not rows or not rows[0]:
        return ()
    matrix = DomainMatrix([[ZZ(x) for x in row] for row in rows], (len(rows), len(rows[0])), ZZ)
    return tuple(abs(int(d)) for d in invariant_factors(matrix) if d != 0)


def coordinates_in(basis: Basis, vectors: Sequence[Sequence[int]]) -> List[Tuple[int, ...]]:
    """
    Coordinates of `vectors` (each in the span of `basis`) with respect to
    the rows of `basis`, via X = V B^T (B B^T)^-1.

    Raises:
        InputValidationError: a vector is not an integral combination
    """
    if not vectors:
        return []
    B = sympy.Matrix(basis)
    V = sympy.Matrix(vectors)
    X = V * B.T * (B * B.T).inv()
    result = []
    for i in range(X.rows):
        row = []
        for j in range(X.cols):
            value = from_sympy(X[i, j])
            if value.denominator != 1:
                raise InputValidationError(f"vector {list(vectors[i])} is not in the integral span of the basis")
            row.append(int(value))
        result.append(tuple(row))
    if sympy.Matrix(result) * B != V:
        raise InputValidationError("vectors are not in the span of the basis")
    return result


@dataclass(frozen=True)
class Sublattice:
    """Sublattice of a LatticeForm, stored by its HNF row basis."""
    parent: LatticeForm
    basis: Basis

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def is_full_rank(self) -> bool:
        return self.rank == self.parent.rank

    @property
    def index(self) -> Optional[int]:
        """[ℤ^n : sublattice], or None while rank deficient."""
        if not self.is_full_rank:
            return None
        return abs(int(sympy.Matrix(self.basis).det()))

    def __contains__(self, v: Sequence[int]) -> bool:
        return hnf_rows(list(self.basis) + [tuple(v)], self.parent.rank) == self.basis

    def contains_sublattice(self, other: "Sublattice") -> bool:
        return hnf_rows(list(self.basis) + list(other.basis), self.parent.rank) == self.basis

    def form(self, name: Optional[str] = None) -> LatticeForm:
        """The sublattice as a lattice in its own HNF basis."""
        return self.parent.change_basis(self.basis, name=name)

    def to_dict(self) -> dict:
        return {
            'rank': self.rank,
            'index': self.index if self.index is not None else 'infinite',
            'basis': [list(row) for row in self.basis],
        }


def sublattice_generated(L: LatticeForm, vectors: Iterable[Sequence[int]]) -> Sublattice:
    return Sublattice(L, hnf_rows(vectors, L.rank))


def quotient_invariants(lower: Sublattice, upper: Sublattice) -> Tuple[int, Tuple[int, ...]]:
    """
    Structure of upper / lower as (free rank, torsion invariants != 1).

    Requires lower ⊆ upper.
    """
    X = coordinates_in(upper.basis, lower.basis)
    torsion = tuple(d for d in smith_invariants(X) if d != 1)
    return upper.rank - lower.rank, torsion


def extend_by_vector(L: LatticeForm, v: Sequence, name: Optional[str] = None) -> LatticeForm:
    """
    L' = L + ℤv for a rational vector v given in L's coordinates,
    as a lattice in a reduced basis of L'.
    """
    n = L.rank
    v = [to_fraction(x) for x in v]
    if len(v) != n:
        raise InputValidationError(f"vector has {len(v)} coordinates, lattice has rank {n}")
    d = math.lcm(*(x.denominator for x in v))
    scaled = [tuple(d if i == j else 0 for j in range(n)) for i in range(n)]
    scaled.append(tuple(int(x * d) for x in v))
    basis = hnf_rows(scaled, n)
    rational_basis = [[Fraction(x, d) for x in row] for row in basis]
    return L.change_basis(rational_basis, name=name or f"{L.name}+v")


def unimodular_transform(L: LatticeForm, U: Sequence[Sequence[int]]) -> LatticeForm:
    """
    Same lattice in another basis.

    Raises:
        InputValidationError: det U is not ±1
    """
    det = sympy.Matrix(U).det()
    if abs(det) != 1:
        raise InputValidationError(f"basis change has determinant {det}, expected ±1")
    return L.change_basis(U, name=L.name)
