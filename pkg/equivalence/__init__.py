# Equivalence Package
# Class systems, subgroup triples and the four equivalence deciders

from .base import IDENTITY_LABEL, ClassLabel, ClassSystem
from .systems import (
    CustomClasses,
    CycleTypeClasses,
    EnumeratedClasses,
    custom_system,
    register_labeller,
    registered_labellers,
)
from .triple import Triple
from .engine import LabelAnalysis, analyse
from .deciders import (
    RELATIONS,
    AuditReport,
    EquivalenceVerdict,
    are_conjugate,
    classes_meeting,
    decide,
    gassmann_equivalent,
    implication_audit,
    intersection_core,
    is_reduced,
    jump_equivalent,
    jump_equivalent_full,
    kronecker_equivalent,
    order_equivalent,
    quotient_triple,
    reduce_triple,
    verify_witness,
)
from .witness import witness_length_map

__all__ = [
    'ClassLabel',
    'ClassSystem',
    'IDENTITY_LABEL',
    'EnumeratedClasses',
    'CycleTypeClasses',
    'CustomClasses',
    'custom_system',
    'register_labeller',
    'registered_labellers',
    'Triple',
    'LabelAnalysis',
    'analyse',
    'RELATIONS',
    'EquivalenceVerdict',
    'AuditReport',
    'classes_meeting',
    'gassmann_equivalent',
    'kronecker_equivalent',
    'order_equivalent',
    'jump_equivalent',
    'jump_equivalent_full',
    'decide',
    'implication_audit',
    'verify_witness',
    'intersection_core',
    'is_reduced',
    'reduce_triple',
    'quotient_triple',
    'are_conjugate',
    'witness_length_map',
]
