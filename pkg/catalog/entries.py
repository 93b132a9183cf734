"""
Default catalog contents: every example with the verdicts and spectra it
must reproduce.
"""

from functools import lru_cache

from .base import CatalogEntry
from .lattices import conway_sloane_heisenberg, conway_sloane_lattices, flat_torus_5d, torus_3_2
from .manager import CatalogManager
from .triples import (
    a4_triple,
    affine_triple,
    c2a4_triple_and_quotient,
    ecs_triples,
    gl_triple,
    komatsu_triple,
    remark_torus_triple,
    restriction_example,
    tetrahedron_triple,
    todd_triple,
    translation_triple,
)

# constructors returning pairs are shared by two entries
_c2a4 = lru_cache(maxsize=None)(c2a4_triple_and_quotient)
_ecs = lru_cache(maxsize=None)(ecs_triples)
_conway_sloane = lru_cache(maxsize=None)(conway_sloane_lattices)
_heisenberg = lru_cache(maxsize=None)(conway_sloane_heisenberg)
_five = lru_cache(maxsize=None)(flat_torus_5d)

TODD_STATISTICS = {'1': 1, '2': 3, '4': 4, '8': 8}
ECS_STATISTICS = {'1': 1, '2': 7, '4': 8}

CONWAY_SLOANE_SPECTRA = {
    'row1': (['12', '20', '24', '28'], ['12', '20', '28']),
    'row2': (['20', '36', '40', '52'], ['20', '36', '48', '52']),
    'row3': (['16', '32', '40'], ['16', '32', '40']),
}
ROW3_MULTIPLICITIES = ([1, 2, 1], [1, 1, 2])

FIVE_DIM_BASE = ['1', '51/50', '26/25', '53/50', '27/25']


def _triple_entries():
    yield CatalogEntry(
        'a4', 'triple', a4_triple,
        expected={'jump': True, 'gassmann': False, 'kronecker': True, 'order': False,
                  'index': [3, 6], 'implication_violations': 0},
        provenance="reduced triples: the smallest jump triple (A4, V4, C2)",
        description="A4 with its Klein four subgroup and an order-2 subgroup")
    yield CatalogEntry(
        'c2a4', 'triple', lambda: _c2a4()[0],
        expected={'jump': False, 'kronecker': True, 'gassmann': False, 'reduced': False,
                  'core_order': 2, 'ambient_order': 24, 'implication_violations': 0},
        provenance="reduced triples: (C2xA4, C2xV4, C2xC2) is not a jump triple",
        description="non-reduced product triple")
    yield CatalogEntry(
        'c2a4-quotient', 'triple', lambda: _c2a4()[1],
        expected={'jump': True, 'reduced': True, 'ambient_order': 12, 'index': [3, 6]},
        provenance="reduced triples: dividing out C2x{1} gives a jump triple",
        description="reduction of c2a4 by the normal core of H ∩ H'")
    yield CatalogEntry(
        'todd', 'triple', todd_triple,
        expected={'gassmann': True, 'order': True, 'jump': True, 'kronecker': True,
                  'order_statistics_H': TODD_STATISTICS, 'order_statistics_Hprime': TODD_STATISTICS},
        provenance="Gassmann triples from regular representations: Todd's C8xC2 and C8:C2 in S16",
        description="Todd's non-isomorphic Gassmann pair")
    yield CatalogEntry(
        'ecs-s16', 'triple', lambda: _ecs()[0],
        expected={'gassmann': True, 'jump': False, 'order': False, 'jump_witness_S': ['2^8'],
                  'witness_map_jumps': {'H': ['2', '3'], 'Hprime': ['2']},
                  'order_statistics_H': ECS_STATISTICS, 'order_statistics_Hprime': ECS_STATISTICS,
                  'implication_violations': 0},
        provenance="modified Todd construction: N x <c> against N x| <c> in S16",
        description="Gassmann triple that is not a jump triple")
    yield CatalogEntry(
        'ecs-s64', 'triple', lambda: _ecs()[1],
        expected={'gassmann': True, 'jump': True, 'order': False, 'order_witness_indices': [4, 2],
                  'top_order_generates': [True, True], 'implication_violations': 0},
        provenance="modified Todd construction: (H x C4, H' x C4) in S64",
        description="jump triple that is not order equivalent")
    yield CatalogEntry(
        'komatsu-3', 'triple', komatsu_triple,
        expected={'gassmann': True, 'order': True, 'jump': True,
                  'order_statistics_H': {'1': 1, '3': 26}, 'order_statistics_Hprime': {'1': 1, '3': 26}},
        provenance="Komatsu triples: two groups of order 27 and exponent 3",
        description="C3^3 against the Heisenberg group mod 3 in S27")
    yield CatalogEntry(
        'affine-2-3', 'triple', affine_triple,
        expected={'gassmann': True, 'jump': False, 'ambient_order': 1344, 'index': [7, 7],
                  'complement_classes_generate': [True, False], 'implication_violations': 0},
        provenance="affine groups: (VxGL(V), VxH, VxH') is Gassmann but not jump",
        description="non-reduced Gassmann triple of index 7")
    yield CatalogEntry(
        'gl-2-3', 'triple', gl_triple,
        expected={'gassmann': True, 'order': True, 'jump': True, 'ambient_order': 168,
                  'order_H': 24, 'order_Hprime': 24, 'conjugate': False, 'implication_violations': 0},
        provenance="linear groups: stabilizers of a vector and of a functional",
        description="GL(3,2) on nonzero vectors")
    yield CatalogEntry(
        'gl-2-2', 'triple', lambda: gl_triple(2, 2),
        expected={'gassmann': True, 'ambient_order': 6, 'conjugate': True},
        provenance="linear groups: the excluded case (q, d) = (2, 2)",
        description="GL(2,2), where the stabilizers are conjugate")
    yield CatalogEntry(
        'tetrahedron', 'triple', tetrahedron_triple,
        expected={'order': True, 'jump': True, 'gassmann': False, 'ambient_order': 384,
                  'order_H': 16, 'order_Hprime': 16, 'implication_violations': 0},
        provenance="order equivalence: W x| A4 acting on a tetrahedron's edges",
        description="order equivalent but not Gassmann")
    yield CatalogEntry(
        'translation-2-1-2', 'triple', translation_triple,
        expected={'jump': True, 'gassmann': False, 'kronecker': True, 'order': False,
                  'order_H': 2, 'order_Hprime': 4},
        provenance="translation subgroups of VxGL(V) of different dimensions",
        description="jump triple that is not Gassmann, ambient never enumerated")
    yield CatalogEntry(
        'remark-tori-mod3', 'triple', lambda: remark_torus_triple(3),
        expected={'gassmann': True, 'jump': True, 'order': True, 'ambient_order': 324},
        provenance="isospectral flat tori: H/3A and H'/3A in G/3A",
        description="group ring of V4 mod 3")
    yield CatalogEntry(
        'remark-tori-mod9', 'triple', lambda: remark_torus_triple(9),
        expected={'jump': False, 'ambient_order': 26244},
        provenance="isospectral flat tori: H/9A and H'/9A in G/9A",
        description="group ring of V4 mod 9", slow=True)
    yield CatalogEntry(
        'restriction-s3', 'length-map', restriction_example,
        expected={'restricted_order': 1, 'intersected_order': 3},
        provenance="restricting a length map to a subgroup",
        description="S3: filtering inside A3 differs from intersecting with A3")


def _lattice_entries():
    yield CatalogEntry(
        'torus-3-2', 'lattice', torus_3_2,
        expected={'covspec_q': ['4', '9'], 'covspec_values': ['1', '3/2'], 'multiplicities': [1, 1],
                  'ranks': [1, 2]},
        provenance="covering spectrum of a product of circles of lengths 3 and 2",
        description="S1(3) x S1(2)")
    for row, (spectrum_h, spectrum_hp) in CONWAY_SLOANE_SPECTRA.items():
        same = spectrum_h == spectrum_hp
        for side, spectrum, partner_side in (('H', spectrum_h, 'Hprime'), ('Hprime', spectrum_hp, 'H')):
            expected = {'covspec_q': spectrum, 'theta_matches_partner': True, 'covspec_matches_partner': same}
            if row == 'row3':
                expected['multiplicities'] = ROW3_MULTIPLICITIES[side == 'Hprime']
            index = 0 if side == 'H' else 1
            yield CatalogEntry(
                f'conway-sloane-{row}-{side}', 'lattice',
                lambda row=row, index=index: _conway_sloane(row)[index],
                expected=expected,
                provenance=f"isospectral flat tori of Conway and Sloane, weights {row}",
                description=f"{side} lattice in Z[V4]",
                partner=f'conway-sloane-{row}-{partner_side}')
    yield CatalogEntry(
        'flat-torus-5d-base', 'lattice', lambda: _five()[0],
        expected={'covspec_q': FIVE_DIM_BASE, 'ranks': [1, 2, 3, 4, 5]},
        provenance="a jump that does not raise the rank: the orthogonal lattice L",
        description="orthogonal rank-5 lattice with norms in [1, 5/4)")
    yield CatalogEntry(
        'flat-torus-5d-extended', 'lattice', lambda: _five()[1],
        expected={'covspec_q': FIVE_DIM_BASE + ['13/10'], 'ranks': [1, 2, 3, 4, 5, 5],
                  'multiplicities': [1, 1, 1, 1, 1, 1], 'jumps_beyond_partner': ['13/10']},
        provenance="a jump that does not raise the rank: L' = L + Zv",
        description="L extended by half the sum of its basis",
        partner='flat-torus-5d-base')


def _heisenberg_entries():
    for row in CONWAY_SLOANE_SPECTRA:
        same = row == 'row3'
        for index, (side, partner_side) in enumerate((('H', 'Hprime'), ('Hprime', 'H'))):
            yield CatalogEntry(
                f'heisenberg-conway-sloane-{row}-{side}', 'heisenberg',
                lambda row=row, index=index: _heisenberg(row)[index],
                expected={'heisenberg_violations': 0, 'covspec_equal_partner': same},
                provenance=f"isospectral Heisenberg manifolds over the {row} lattices",
                description=f"Heisenberg datum over {side} with symbolic deltaZ",
                partner=f'heisenberg-conway-sloane-{row}-{partner_side}')


def register_default_entries(manager: CatalogManager) -> CatalogManager:
    for group in (_triple_entries(), _lattice_entries(), _heisenberg_entries()):
        for entry in group:
            manager.register(entry)
    return manager
