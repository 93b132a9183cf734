"""
Concrete class systems: enumerated ambients, cycle types in S_n, and
registered custom labellers.
"""

import logging
from typing import Callable, Dict, Optional, Sequence

from groups import FiniteGroup, Permutation, class_index, element_order, symmetric_group
from groups import linear
from utils.errors import DomainError, InputValidationError

from .base import ClassLabel, ClassSystem

logger = logging.getLogger(__name__)


class EnumeratedClasses(ClassSystem):
    """Labels are conjugacy class indices of an enumerated ambient."""

    def __init__(self, group: FiniteGroup):
        self.group = group
        self._index: Optional[Dict[Permutation, int]] = None

    @property
    def kind(self) -> str:
        return 'enumerated'

    @property
    def degree(self) -> int:
        return self.group.degree

    def _label(self, g: Permutation) -> ClassLabel:
        if self._index is None:
            self._index = class_index(self.group)
        try:
            return ClassLabel('class', (self._index[g],), element_order(g))
        except KeyError:
            raise DomainError(f"{g} is not an element of {self.group.name or 'the ambient'}") from None

    def conjugators(self) -> Sequence[Permutation]:
        return self.group.generators

    def to_dict(self) -> dict:
        return {'kind': self.kind, 'group': self.group.to_dict()}


class CycleTypeClasses(ClassSystem):
    """
    Conjugacy in S_n: two permutations are conjugate exactly when they
    have the same cycle type.
    """

    def __init__(self, degree: int):
        if degree < 1:
            raise InputValidationError(f"cycle-type ambient needs a positive degree, got {degree}")
        self._degree = degree

    @property
    def kind(self) -> str:
        return 'cycle-type'

    @property
    def degree(self) -> int:
        return self._degree

    def _label(self, g: Permutation) -> ClassLabel:
        return ClassLabel('cycle-type', g.cycle_type(), element_order(g))

    def conjugators(self) -> Sequence[Permutation]:
        return symmetric_group(self._degree).generators

    def to_dict(self) -> dict:
        return {'kind': self.kind, 'degree': self._degree}


class CustomClasses(ClassSystem):
    """
    A user-supplied labelling.

    The labelling is trusted; `stability` names the argument for why it is
    constant on ambient conjugacy classes and is recorded in every report.
    """

    def __init__(self, name: str, degree: int, labeller: Callable[[Permutation], ClassLabel],
                 stability: str, params: Optional[dict] = None,
                 conjugators: Sequence[Permutation] = ()):
        if not stability:
            raise InputValidationError(f"custom labeller '{name}' needs a stability tag")
        self.name = name
        self._degree = degree
        self._labeller = labeller
        self.stability = stability
        self.params = dict(params or {})
        self._conjugators = tuple(conjugators)

    @property
    def kind(self) -> str:
        return 'custom'

    @property
    def degree(self) -> int:
        return self._degree

    def _label(self, g: Permutation) -> ClassLabel:
        return self._labeller(g)

    def conjugators(self) -> Sequence[Permutation]:
        return self._conjugators

    def to_dict(self) -> dict:
        return {
            'kind': self.kind,
            'labeller': self.name,
            'params': dict(sorted(self.params.items())),
            'stability': self.stability,
        }


# Custom labeller registry: name -> factory(**params) -> CustomClasses
_LABELLERS: Dict[str, Callable[..., CustomClasses]] = {}


def register_labeller(name: str):
    """Decorator registering a CustomClasses factory under `name`."""
    def decorator(factory: Callable[..., CustomClasses]):
        _LABELLERS[name] = factory
        return factory
    return decorator


def registered_labellers() -> list:
    return sorted(_LABELLERS)


def custom_system(name: str, **params) -> CustomClasses:
    """
    Build a registered custom class system.

    Raises:
        InputValidationError: unknown labeller or bad parameters
    """
    factory = _LABELLERS.get(name)
    if factory is None:
        raise InputValidationError(f"unknown labeller '{name}'", key='labeller')
    try:
        return factory(**params)
    except TypeError as e:
        raise InputValidationError(f"bad parameters for labeller '{name}': {e}", key='params') from e


@register_labeller('affine-translation')
def affine_translation_classes(q: int, d: int) -> CustomClasses:
    """
    V x| GL(V) acting on V = F_q^d.

    Every nontrivial translation gets the single label 'translation'; other
    elements are labelled by cycle type, which is invariant under any
    conjugation.
    """
    linear.require_prime_field(q)
    if d < 1:
        raise InputValidationError(f"dimension must be positive, got {d}")
    degree = q ** d

    def labeller(g: Permutation) -> ClassLabel:
        if linear.translation_vector(g, q, d) is not None:
            return ClassLabel('custom', ('translation',), q)
        return ClassLabel('custom', ('affine',) + g.cycle_type(), element_order(g))

    conjugators = [linear.translation(e, q) for e in linear.basis_vectors(d)]
    zero = (0,) * d
    conjugators += [linear.affine_permutation(m, zero, q, d) for m in linear.gl_generators(d, q)]
    logger.debug("affine-translation labeller q=%d d=%d (%d conjugators)", q, d, len(conjugators))
    return CustomClasses(
        'affine-translation', degree, labeller,
        stability="all nontrivial translations are conjugate in V x| GL(V)",
        params={'q': q, 'd': d},
        conjugators=conjugators,
    )
