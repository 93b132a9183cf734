"""
Short Vector Enumeration
Fincke-Pohst search guided by a floating Cholesky factor, with every
candidate accepted or rejected on its exact rational norm.
"""

import logging
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import numpy as np

from utils.config import get_settings
from utils.errors import CapacityError, InputValidationError
from utils.rationals import RationalLike, format_fraction, to_fraction

from .form import LatticeForm

logger = logging.getLogger(__name__)

# relative slack on float bounds; exact recheck removes false positives
_SLACK = 1e-9

Vector = Tuple[int, ...]


def _pohst_coefficients(L: LatticeForm) -> Tuple[np.ndarray, np.ndarray]:
    """
    Diagonal d_i and upper coefficients mu_ij with
    norm2(x) = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2.
    """
    gram = np.array([[float(x) for x in row] for row in L.gram])
    R = np.linalg.cholesky(gram).T
    diag = np.diag(R) ** 2
    mu = R / np.diag(R)[:, None]
    return diag, mu


def short_vectors(L: LatticeForm, bound: RationalLike) -> List[Tuple[Fraction, Vector]]:
    """
    All v != 0 with norm2(v) <= bound, sorted by (norm2, v).

    Raises:
        InputValidationError: bound is not positive
        CapacityError: more vectors than vector_cap
    """
    bound = to_fraction(bound)
    if bound <= 0:
        raise InputValidationError(f"enumeration bound must be positive, got {format_fraction(bound)}")
    cap = get_settings().vector_cap
    n = L.rank
    diag, mu = _pohst_coefficients(L)
    limit = float(bound) * (1 + _SLACK) + _SLACK
    x = [0] * n
    found: List[Tuple[Fraction, Vector]] = []

    def search(i: int, remaining: float):
        center = -sum(mu[i, j] * x[j] for j in range(i + 1, n))
        radius = math.sqrt(max(remaining, 0.0) / diag[i])
        for value in range(math.ceil(center - radius), math.floor(center + radius) + 1):
            x[i] = value
            spent = diag[i] * (value - center) ** 2
            if spent > remaining:
                continue
            if i == 0:
                vector = tuple(x)
                if any(vector):
                    norm = L.norm2(vector)
                    if norm <= bound:
                        found.append((norm, vector))
                        if len(found) > cap:
                            raise CapacityError('vector_cap', cap, len(found), detail=L.name)
            else:
                search(i - 1, remaining - spent)
        x[i] = 0

    search(n - 1, limit)
    found.sort()
    logger.debug("%s: %d vectors with norm2 <= %s", L.name or 'lattice', len(found), format_fraction(bound))
    return found


@dataclass
class ThetaPrefix:
    """Vector counts per exact squared norm up to `bound`."""
    bound: Fraction
    counts: Dict[Fraction, int] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            'bound': format_fraction(self.bound),
            'counts': {format_fraction(k): v for k, v in self.counts.items()},
        }


def theta_prefix(L: LatticeForm, bound: RationalLike) -> ThetaPrefix:
    """Counts of lattice vectors by squared norm, norm 0 included."""
    bound = to_fraction(bound)
    if bound < 0:
        raise InputValidationError(f"theta bound must be non-negative, got {format_fraction(bound)}")
    counts = Counter({Fraction(0): 1})
    if bound > 0:
        counts.update(norm for norm, _ in short_vectors(L, bound))
    return ThetaPrefix(bound, dict(sorted(counts.items())))


def compare_theta(first: LatticeForm, second: LatticeForm, bound: RationalLike) -> Optional[Fraction]:
    """Smallest squared norm whose counts differ, or None if the prefixes agree."""
    a = theta_prefix(first, bound).counts
    b = theta_prefix(second, bound).counts
    for norm in sorted(set(a) | set(b)):
        if a.get(norm, 0) != b.get(norm, 0):
            return norm
    return None
