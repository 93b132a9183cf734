"""
Subgroup triples (G, H, H') with G given only through a class system.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from groups import FiniteGroup
from utils.errors import InputValidationError

from .base import ClassSystem


@dataclass
class Triple:
    """
    Two subgroups H, Hp of a common ambient, compared through `classes`.

    H and Hp are permutation groups of the ambient's degree; their closure
    is enforced by construction (they are generated groups).
    """
    classes: ClassSystem
    H: FiniteGroup
    Hp: FiniteGroup
    name: str = ""
    notes: Dict[str, Any] = field(default_factory=dict)
    _cache: Dict[Any, Any] = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        for side, group in (('H', self.H), ('Hprime', self.Hp)):
            if group.degree != self.classes.degree:
                raise InputValidationError(
                    f"{side} has degree {group.degree}, ambient has degree {self.classes.degree}", key=side)

    @property
    def ambient(self) -> Optional[FiniteGroup]:
        """The enumerated ambient group, when the class system has one."""
        return getattr(self.classes, 'group', None)

    def swapped(self) -> "Triple":
        return Triple(self.classes, self.Hp, self.H, name=f"{self.name}~", notes=dict(self.notes))

    def validate(self, seed: int = 0) -> list:
        """Spot-check conjugation stability of the labelling on H and Hp."""
        elements = set(self.H.elements) | set(self.Hp.elements)
        return self.classes.spot_check(elements, seed=seed)

    def to_dict(self) -> dict:
        """Triple file representation."""
        return {
            'name': self.name,
            'ambient': self.classes.to_dict(),
            'H': self.H.to_dict(),
            'Hprime': self.Hp.to_dict(),
        }

    def __repr__(self) -> str:
        return f"<Triple '{self.name}' {self.classes.kind} |H|={self.H.order} |H'|={self.Hp.order}>"
