"""
Catalog Entry Module
A named, reproducible example together with the verdicts it must produce.
"""

from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Optional

KINDS = ('triple', 'lattice', 'heisenberg', 'length-map')


@dataclass
class CatalogEntry:
    """
    One catalog example.

    The object is built on first access and kept; `expected` maps check
    names (see catalog.checks) to the JSON value the check must return.
    `partner` names the entry that pair checks compare against.
    """
    id: str
    kind: str
    builder: Callable[[], Any]
    expected: Dict[str, Any] = field(default_factory=dict)
    provenance: str = ""
    description: str = ""
    partner: Optional[str] = None
    slow: bool = False
    _object: Any = field(default=None, init=False, repr=False, compare=False)

    @property
    def object(self) -> Any:
        if self._object is None:
            self._object = self.builder()
        return self._object

    @property
    def is_built(self) -> bool:
        return self._object is not None

    def summary(self) -> dict:
        """Listing row: everything except the built object."""
        return {
            'id': self.id,
            'kind': self.kind,
            'description': self.description,
            'provenance': self.provenance,
            'partner': self.partner,
            'slow': self.slow,
        }

    def to_dict(self) -> dict:
        """Full representation; the object uses its own file format."""
        result = self.summary()
        result['expected'] = dict(sorted(self.expected.items()))
        result['object'] = self.object.to_dict()
        return result

    def __repr__(self) -> str:
        return f"<CatalogEntry '{self.id}' {self.kind}>"
