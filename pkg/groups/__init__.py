# Groups Package
# Finite permutation groups: elements, closure, conjugacy, quotients, products

from .permutation import Permutation, element_order
from .finite_group import (
    FiniteGroup,
    Subgroup,
    class_index,
    closure,
    conjugacy_classes,
    group_from_dict,
    is_normal,
    join,
    normal_core,
    order_statistics,
    subgroup_from_elements,
)
from .quotient import QuotientGroup, quotient
from .constructions import (
    ProductGroup,
    RegularRepresentation,
    alternating_group,
    cyclic_group,
    direct_product,
    regular_representation,
    semidirect_product,
    symmetric_group,
)

__all__ = [
    'Permutation',
    'element_order',
    'FiniteGroup',
    'Subgroup',
    'closure',
    'join',
    'subgroup_from_elements',
    'conjugacy_classes',
    'class_index',
    'order_statistics',
    'is_normal',
    'normal_core',
    'group_from_dict',
    'QuotientGroup',
    'quotient',
    'ProductGroup',
    'RegularRepresentation',
    'cyclic_group',
    'symmetric_group',
    'alternating_group',
    'direct_product',
    'semidirect_product',
    'regular_representation',
]
