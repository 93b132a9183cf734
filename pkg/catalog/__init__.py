# Catalog Package
# Reproducible examples with their expected verdicts and spectra

from typing import Optional

from .base import KINDS, CatalogEntry
from .checks import CheckReport, CheckResult, available_checks, register_check, run_check
from .manager import CatalogManager
from .entries import register_default_entries
from .lattices import conway_sloane_heisenberg, conway_sloane_lattices, flat_torus_5d, torus_3_2
from .triples import (
    DEFAULT_EDGE_SUBSET,
    a4_triple,
    affine_group,
    affine_triple,
    c2a4_triple_and_quotient,
    ecs_groups,
    ecs_triples,
    gl_group,
    gl_triple,
    klein_torus_group,
    komatsu_triple,
    remark_tori_quotients,
    remark_torus_triple,
    restriction_example,
    tetrahedron_group,
    tetrahedron_triple,
    todd_triple,
    translation_triple,
    valid_edge_subsets,
)

# Global instance
_catalog: Optional[CatalogManager] = None


def get_catalog() -> CatalogManager:
    """Get the global catalog with the default entries registered."""
    global _catalog
    if _catalog is None:
        _catalog = register_default_entries(CatalogManager())
    return _catalog


__all__ = [
    'KINDS',
    'CatalogEntry',
    'CatalogManager',
    'CheckReport',
    'CheckResult',
    'available_checks',
    'register_check',
    'run_check',
    'register_default_entries',
    'get_catalog',
    'a4_triple',
    'c2a4_triple_and_quotient',
    'todd_triple',
    'ecs_groups',
    'ecs_triples',
    'komatsu_triple',
    'gl_group',
    'gl_triple',
    'affine_group',
    'affine_triple',
    'DEFAULT_EDGE_SUBSET',
    'valid_edge_subsets',
    'tetrahedron_group',
    'tetrahedron_triple',
    'translation_triple',
    'klein_torus_group',
    'remark_torus_triple',
    'remark_tori_quotients',
    'restriction_example',
    'torus_3_2',
    'conway_sloane_lattices',
    'conway_sloane_heisenberg',
    'flat_torus_5d',
]
