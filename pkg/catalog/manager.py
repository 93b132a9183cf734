"""
Catalog Manager
Registers catalog entries by id, builds them on demand and runs their
expected checks.
"""

import logging
from typing import Dict, List, Optional

from utils.errors import InputValidationError

from .base import KINDS, CatalogEntry
from .checks import CheckReport, CheckResult, run_check

logger = logging.getLogger(__name__)


class CatalogManager:
    """
    Holds catalog entries.

    Entries are built lazily on first access and cached on the entry, so
    `catalog list` never pays for construction.
    """

    def __init__(self):
        self._entries: Dict[str, CatalogEntry] = {}

    def register(self, entry: CatalogEntry):
        """
        Register an entry.

        Raises:
            InputValidationError: unknown kind or duplicate id
        """
        if entry.kind not in KINDS:
            raise InputValidationError(f"entry '{entry.id}' has unknown kind '{entry.kind}'")
        if entry.id in self._entries:
            raise InputValidationError(f"duplicate catalog id '{entry.id}'")
        self._entries[entry.id] = entry
        logger.debug("Registered: %s", entry)

    @property
    def ids(self) -> List[str]:
        return list(self._entries)

    def entries(self, kind: Optional[str] = None) -> List[CatalogEntry]:
        return [e for e in self._entries.values() if kind is None or e.kind == kind]

    def get(self, entry_id: str) -> CatalogEntry:
        """
        Raises:
            InputValidationError: no entry with this id
        """
        try:
            return self._entries[entry_id]
        except KeyError:
            raise InputValidationError(f"unknown catalog id '{entry_id}'", key='catalog') from None

    def build(self, entry_id: str):
        """The entry's object, built on first use."""
        entry = self.get(entry_id)
        if not entry.is_built:
            logger.debug("Building %s", entry_id)
        return entry.object

    def partner_of(self, entry_id: str):
        entry = self.get(entry_id)
        return self.build(entry.partner) if entry.partner else None

    def run_checks(self, entry_id: str, names: Optional[List[str]] = None) -> CheckReport:
        """
        Evaluate the entry's expected checks (or the `names` subset).

        A mismatch is reported, and logged as a warning, never raised.
        """
        entry = self.get(entry_id)
        obj = self.build(entry_id)
        partner = self.partner_of(entry_id)
        report = CheckReport(entry_id)
        for name in names or sorted(entry.expected):
            expected = entry.expected.get(name)
            actual = run_check(name, obj, partner)
            report.results.append(CheckResult(name, expected, actual))
        for failure in report.failures:
            logger.warning("%s: check '%s' expected %r, got %r", entry_id, failure.name, failure.expected,
                           failure.actual)
        return report

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, entry_id: str) -> bool:
        return entry_id in self._entries
