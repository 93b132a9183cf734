"""
Isospectral rank-4 lattices from the Klein four-group ring.

A = ℤ[V4] in coordinates (1, σ, τ, ρ). The primitive idempotents e1..e4
diagonalize V4, and x = a + bσ + cτ + dρ has e-coordinates
(a+b+c+d, a+b-c-d, a-b+c-d, a-b-c+d). The inner product makes the e_i
orthogonal with <e_i, e_i> = weight_i / 3.
"""

from fractions import Fraction
from typing import List, Sequence, Tuple

from utils.errors import InputValidationError
from utils.rationals import RationalLike, to_fraction

from .form import LatticeForm, diagonal_form
from .sublattice import Sublattice, extend_by_vector, sublattice_generated

CHARACTER_ROWS = (
    (1, 1, 1, 1),
    (1, 1, -1, -1),
    (1, -1, 1, -1),
    (1, -1, -1, 1),
)

# 3A plus sigma+tau+rho, 1+rho-tau
H_GENERATORS = ((0, 1, 1, 1), (1, 0, -1, 1))
# 3A plus 1+sigma+tau, 1+rho-tau
H_PRIME_GENERATORS = ((1, 1, 1, 0), (1, 0, -1, 1))

TABLE_WEIGHTS = {
    'row1': (1, 4, 10, 13),
    'row2': (2, 8, 14, 20),
    'row3': (1, 7, 13, 19),
}


def three_a(scale: int = 3) -> List[Tuple[int, ...]]:
    return [tuple(scale if i == j else 0 for j in range(4)) for i in range(4)]


def group_ring_form(weights: Sequence[RationalLike], name: str = "Z[V4]") -> LatticeForm:
    """
    Gram matrix of ℤ^4 = ℤ[V4] for the given 3<e_i, e_i> values: P^T diag(w/3) P.

    Raises:
        InputValidationError: a weight is not positive
    """
    w = [to_fraction(x) for x in weights]
    if len(w) != 4 or any(x <= 0 for x in w):
        raise InputValidationError(f"need four positive weights, got {list(weights)}")
    scale = [x / 3 for x in w]
    gram = [[sum((scale[k] * CHARACTER_ROWS[k][i] * CHARACTER_ROWS[k][j] for k in range(4)), Fraction(0))
             for j in range(4)] for i in range(4)]
    return LatticeForm(gram, name=name)


def conway_sloane_sublattices(weights: Sequence[RationalLike]) -> Tuple[Sublattice, Sublattice]:
    """H and H' as index-9 sublattices of ℤ[V4]."""
    ambient = group_ring_form(weights)
    H = sublattice_generated(ambient, three_a() + list(H_GENERATORS))
    Hp = sublattice_generated(ambient, three_a() + list(H_PRIME_GENERATORS))
    return H, Hp


def conway_sloane_pair(weights: Sequence[RationalLike]) -> Tuple[LatticeForm, LatticeForm]:
    """H and H' as lattices in their own HNF bases."""
    H, Hp = conway_sloane_sublattices(weights)
    label = '-'.join(str(to_fraction(x)) for x in weights)
    return H.form(name=f"H[{label}]"), Hp.form(name=f"H'[{label}]")


# squared lengths of the orthogonal basis, all below 5/4
FIVE_DIM_NORMS = (Fraction(1), Fraction(51, 50), Fraction(26, 25), Fraction(53, 50), Fraction(27, 25))


def five_dimensional_pair() -> Tuple[LatticeForm, LatticeForm]:
    """
    Orthogonal rank-5 lattice L and L' = L + ℤv with v = (e1 + ... + e5)/2.

    norm2(v) = 13/10 exceeds every basis norm, so L' has a jump at 13/10
    that does not raise the rank.
    """
    base = diagonal_form(FIVE_DIM_NORMS, name="L5")
    extended = extend_by_vector(base, [Fraction(1, 2)] * 5, name="L5'")
    return base, extended
