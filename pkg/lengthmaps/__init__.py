# Length Maps Package
from .length_map import (
    LengthMap,
    Violation,
    constant_length_map,
    is_length_map,
    length_map_from_dict,
    length_map_from_function,
    length_map_from_labels,
    validate,
)
from .jumps import (
    JumpEntry,
    JumpReport,
    RestrictionExample,
    closed_filtration_at,
    filtration_at,
    jump_multiplicity,
    jump_set,
    jump_set_bruteforce,
    restriction_counterexample,
)

__all__ = [
    'LengthMap',
    'Violation',
    'validate',
    'is_length_map',
    'constant_length_map',
    'length_map_from_function',
    'length_map_from_labels',
    'length_map_from_dict',
    'JumpEntry',
    'JumpReport',
    'filtration_at',
    'closed_filtration_at',
    'jump_set',
    'jump_set_bruteforce',
    'jump_multiplicity',
    'RestrictionExample',
    'restriction_counterexample',
]
