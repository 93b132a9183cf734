"""
Lattice Form Module
ℤ^n with an exact rational positive definite Gram matrix.
"""

from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

import sympy

from utils.errors import InputValidationError
from utils.rationals import RationalLike, format_fraction, from_sympy, sympy_rational, to_fraction

Gram = Tuple[Tuple[Fraction, ...], ...]


def _as_gram(rows: Sequence[Sequence[RationalLike]]) -> Gram:
    return tuple(tuple(to_fraction(x) for x in row) for row in rows)


def _sympy_matrix(rows: Sequence[Sequence[Fraction]]) -> sympy.Matrix:
    return sympy.Matrix([[sympy_rational(Fraction(x)) for x in row] for row in rows])


class LatticeForm:
    """
    The lattice ℤ^n with inner product <u, v> = u^T gram v.

    Raises:
        InputValidationError: gram is not square, not symmetric or not
            positive definite (checked exactly by leading principal minors)
    """

    def __init__(self, gram: Sequence[Sequence[RationalLike]], name: Optional[str] = None):
        self.gram: Gram = _as_gram(gram)
        self.name = name or ""
        self._validate()

    def _validate(self):
        n = len(self.gram)
        if any(len(row) != n for row in self.gram):
            raise InputValidationError(f"gram matrix of {self.name or 'lattice'} is not square", key='gram')
        for i in range(n):
            for j in range(i):
                if self.gram[i][j] != self.gram[j][i]:
                    raise InputValidationError(
                        f"gram matrix of {self.name or 'lattice'} is not symmetric at ({i}, {j})", key='gram')
        matrix = _sympy_matrix(self.gram)
        for k in range(1, n + 1):
            if matrix[:k, :k].det() <= 0:
                raise InputValidationError(
                    f"gram matrix of {self.name or 'lattice'} is not positive definite (minor {k})", key='gram')

    @property
    def rank(self) -> int:
        return len(self.gram)

    def inner(self, u: Sequence[int], v: Sequence[int]) -> Fraction:
        return sum((self.gram[i][j] * u[i] * v[j]
                    for i in range(self.rank) for j in range(self.rank) if u[i] and v[j]), Fraction(0))

    def norm2(self, v: Sequence[int]) -> Fraction:
        return self.inner(v, v)

    def determinant(self) -> Fraction:
        return from_sympy(_sympy_matrix(self.gram).det())

    def change_basis(self, basis: Sequence[Sequence[RationalLike]], name: Optional[str] = None) -> "LatticeForm":
        """
        Gram matrix of the vectors `basis` (rows, in current coordinates):
        B * gram * B^T.
        """
        B = _sympy_matrix(_as_gram(basis))
        product = B * _sympy_matrix(self.gram) * B.T
        rows = [[from_sympy(product[i, j]) for j in range(product.cols)] for i in range(product.rows)]
        return LatticeForm(rows, name=name or self.name)

    def scaled(self, factor: RationalLike) -> "LatticeForm":
        c = to_fraction(factor)
        return LatticeForm([[c * x for x in row] for row in self.gram], name=f"{format_fraction(c)}*{self.name}")

    def to_dict(self) -> dict:
        """Lattice file representation."""
        return {
            'name': self.name,
            'rank': self.rank,
            'gram': [[format_fraction(x) for x in row] for row in self.gram],
        }

    def __eq__(self, other) -> bool:
        if not isinstance(other, LatticeForm):
            return NotImplemented
        return self.gram == other.gram

    def __hash__(self) -> int:
        return hash(self.gram)

    def __repr__(self) -> str:
        return f"<LatticeForm '{self.name}' rank={self.rank}>"


def lattice_from_dict(data: dict) -> LatticeForm:
    gram = data['gram']
    rank = data.get('rank', len(gram))
    if rank != len(gram):
        raise InputValidationError(f"rank {rank} does not match a {len(gram)}-row gram matrix", key='rank')
    return LatticeForm(gram, name=data.get('name'))


def diagonal_form(values: Iterable[RationalLike], name: Optional[str] = None) -> LatticeForm:
    """Orthogonal lattice with the given squared basis lengths."""
    values = [to_fraction(v) for v in values]
    n = len(values)
    return LatticeForm([[values[i] if i == j else 0 for j in range(n)] for i in range(n)], name=name)


def identity_form(n: int) -> LatticeForm:
    return diagonal_form([1] * n, name=f"Z^{n}")


def direct_sum_form(first: LatticeForm, second: LatticeForm, name: Optional[str] = None) -> LatticeForm:
    n, m = first.rank, second.rank
    rows: List[List[Fraction]] = []
    for i in range(n):
        rows.append(list(first.gram[i]) + [Fraction(0)] * m)
    for i in range(m):
        rows.append([Fraction(0)] * n + list(second.gram[i]))
    return LatticeForm(rows, name=name or f"{first.name}+{second.name}")
