"""
Catalog Lattices
Flat tori and Heisenberg data of the covering spectrum examples.
"""

from typing import Tuple

from heisenberg import HeisenbergDatum, conway_sloane_heisenberg_pair
from lattice import LatticeForm, TABLE_WEIGHTS, conway_sloane_pair, diagonal_form, five_dimensional_pair


def torus_3_2() -> LatticeForm:
    """S¹(3) x S¹(2): circles of lengths 3 and 2."""
    return diagonal_form([9, 4], name="S1(3)xS1(2)")


def conway_sloane_lattices(row: str) -> Tuple[LatticeForm, LatticeForm]:
    return conway_sloane_pair(TABLE_WEIGHTS[row])


def conway_sloane_heisenberg(row: str) -> Tuple[HeisenbergDatum, HeisenbergDatum]:
    """Heisenberg data over the row's lattices, sharing the symbolic central length 'deltaZ'."""
    return conway_sloane_heisenberg_pair(TABLE_WEIGHTS[row])


def flat_torus_5d() -> Tuple[LatticeForm, LatticeForm]:
    return five_dimensional_pair()
