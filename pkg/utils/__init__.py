# Utilities Package
from .config import Settings, get_settings, override_settings
from .errors import CapacityError, CovspecError, DomainError, InputValidationError
from .rationals import (
    decimal_half_sqrt,
    format_fraction,
    render_half_sqrt,
    to_fraction,
)

__all__ = [
    'Settings',
    'get_settings',
    'override_settings',
    'CovspecError',
    'DomainError',
    'InputValidationError',
    'CapacityError',
    'to_fraction',
    'format_fraction',
    'render_half_sqrt',
    'decimal_half_sqrt',
]
