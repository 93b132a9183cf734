"""
Linear and affine groups over a prime field F_q, as permutation groups.

Vectors of F_q^d are indexed by their base-q digits, first coordinate least
significant: index(v) = v[0] + v[1]*q + ... . Matrices are tuples of rows
and act on column vectors.
"""

from typing import List, Sequence, Tuple

import sympy

from utils.errors import InputValidationError

from .permutation import Permutation

Vector = Tuple[int, ...]
Matrix = Tuple[Tuple[int, ...], ...]


def require_prime_field(q: int):
    if not sympy.isprime(q):
        raise InputValidationError(f"q must be prime, got {q}")


def vector_of(index: int, q: int, d: int) -> Vector:
    digits = []
    for _ in range(d):
        index, digit = divmod(index, q)
        digits.append(digit)
    return tuple(digits)


def index_of(vector: Sequence[int], q: int) -> int:
    index = 0
    for digit in reversed(vector):
        index = index * q + digit % q
    return index


def all_vectors(q: int, d: int) -> List[Vector]:
    """F_q^d in index order."""
    return [vector_of(i, q, d) for i in range(q ** d)]


def apply(matrix: Matrix, vector: Sequence[int], q: int) -> Vector:
    return tuple(sum(a * x for a, x in zip(row, vector)) % q for row in matrix)


def add(u: Sequence[int], v: Sequence[int], q: int) -> Vector:
    return tuple((a + b) % q for a, b in zip(u, v))


def elementary_matrix(d: int, i: int, j: int, value: int = 1) -> Matrix:
    """Identity with `value` added at (i, j); a diagonal entry is replaced when i == j."""
    rows = [[int(r == c) for c in range(d)] for r in range(d)]
    if i == j:
        rows[i][i] = value
    else:
        rows[i][j] = value
    return tuple(tuple(row) for row in rows)


def gl_generators(d: int, q: int) -> List[Matrix]:
    """Transvections I + E_ij and diag(a, 1, ..., 1) with a a primitive root; they generate GL(d, q)."""
    require_prime_field(q)
    gens = [elementary_matrix(d, i, j) for i in range(d) for j in range(d) if i != j]
    if q > 2:
        gens.append(elementary_matrix(d, 0, 0, int(sympy.primitive_root(q))))
    return gens


def affine_permutation(matrix: Matrix, shift: Sequence[int], q: int, d: int) -> Permutation:
    """x -> matrix*x + shift on the q^d points of F_q^d."""
    images = tuple(index_of(add(apply(matrix, v, q), shift, q), q) for v in all_vectors(q, d))
    return Permutation._trusted(images)


def translation(shift: Sequence[int], q: int) -> Permutation:
    d = len(shift)
    return affine_permutation(elementary_matrix(d, 0, 0, 1), shift, q, d)


def nonzero_action(matrix: Matrix, q: int, d: int) -> Permutation:
    """matrix acting on the q^d - 1 nonzero vectors; point i is the vector of index i + 1."""
    images = tuple(index_of(apply(matrix, v, q), q) - 1 for v in all_vectors(q, d)[1:])
    return Permutation._trusted(images)


def translation_vector(g: Permutation, q: int, d: int):
    """The shift t if g is x -> x + t on F_q^d, otherwise None."""
    shift = vector_of(g(0), q, d)
    for i, v in enumerate(all_vectors(q, d)):
        if g(i) != index_of(add(v, shift, q), q):
            return None
    return shift


def basis_vectors(d: int) -> List[Vector]:
    return [tuple(int(i == j) for j in range(d)) for i in range(d)]
