"""
Input File Loaders
pydantic schemas for the group, triple, lattice, Heisenberg and length-map
file formats, and their conversion into domain objects.

A file may also be the output of `catalog get`: the domain object is then
read from its "object" key.
"""

import json
import logging
from typing import Any, Dict, List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from equivalence import CycleTypeClasses, EnumeratedClasses, Triple, custom_system
from groups import FiniteGroup, Permutation
from heisenberg import HeisenbergDatum, Known, Symbolic
from lattice import LatticeForm
from lengthmaps import LengthMap, length_map_from_dict
from utils.errors import InputValidationError

logger = logging.getLogger(__name__)

Rational = Union[int, str]


class GroupModel(BaseModel):
    model_config = ConfigDict(extra='forbid')

    name: str = ""
    degree: int = Field(ge=0)
    generators: List[List[int]] = Field(default_factory=list)

    def build(self) -> FiniteGroup:
        return FiniteGroup(self.degree, [Permutation(images) for images in self.generators], name=self.name)


class AmbientModel(BaseModel):
    kind: Literal['enumerated', 'cycle-type', 'custom']
    group: Optional[GroupModel] = None
    degree: Optional[int] = Field(default=None, gt=0)
    labeller: Optional[str] = None
    params: Dict[str, Any] = Field(default_factory=dict)
    stability: Optional[str] = None

    def build(self):
        if self.kind == 'enumerated':
            if self.group is None:
                raise InputValidationError("enumerated ambient needs a 'group'", key='ambient.group')
            return EnumeratedClasses(self.group.build())
        if self.kind == 'cycle-type':
            if self.degree is None:
                raise InputValidationError("cycle-type ambient needs a 'degree'", key='ambient.degree')
            return CycleTypeClasses(self.degree)
        if self.labeller is None:
            raise InputValidationError("custom ambient needs a 'labeller'", key='ambient.labeller')
        return custom_system(self.labeller, **self.params)


class TripleModel(BaseModel):
    name: str = ""
    ambient: AmbientModel
    H: GroupModel
    Hprime: GroupModel

    def build(self) -> Triple:
        classes = self.ambient.build()
        H, Hp = self.H.build(), self.Hprime.build()
        if isinstance(classes, EnumeratedClasses):
            G = classes.group
            for side, group in (('H', H), ('Hprime', Hp)):
                for g in group.generators:
                    if g not in G:
                        raise InputValidationError(f"generator {g.to_list()} is not in the ambient", key=side)
        return Triple(classes, H, Hp, name=self.name)


class LatticeModel(BaseModel):
    name: str = ""
    rank: Optional[int] = None
    gram: List[List[Rational]]

    def build(self) -> LatticeForm:
        if self.rank is not None and self.rank != len(self.gram):
            raise InputValidationError(f"rank {self.rank} does not match a {len(self.gram)}-row gram", key='rank')
        return LatticeForm(self.gram, name=self.name)


class CentralLengthModel(BaseModel):
    model_config = ConfigDict(extra='forbid')

    known: Optional[Rational] = None
    symbolic: Optional[str] = None

    def build(self):
        if (self.known is None) == (self.symbolic is None):
            raise InputValidationError("deltaZ needs exactly one of 'known' and 'symbolic'", key='deltaZ')
        return Known(self.known) if self.known is not None else Symbolic(self.symbolic)


class HeisenbergModel(BaseModel):
    name: str = ""
    lattice: LatticeModel
    omega: List[List[Rational]]
    c: Rational
    deltaZ: CentralLengthModel

    def build(self) -> HeisenbergDatum:
        return HeisenbergDatum(self.lattice.build(), self.omega, self.c, self.deltaZ.build(), name=self.name)


class LengthMapModel(BaseModel):
    """Values keyed by element index in the sorted element list of `group`."""
    name: str = ""
    group: GroupModel
    values: Dict[str, Rational]

    def build(self) -> LengthMap:
        return length_map_from_dict(self.group.build(), self.values, name=self.name or self.group.name)


MODELS = {
    'group': GroupModel,
    'triple': TripleModel,
    'lattice': LatticeModel,
    'heisenberg': HeisenbergModel,
    'length-map': LengthMapModel,
}


def read_json(path: str) -> Any:
    """
    Raises:
        InputValidationError: unreadable file or malformed JSON
    """
    try:
        with open(path, 'r', encoding='utf-8') as f:
            return json.load(f)
    except FileNotFoundError:
        raise InputValidationError("file not found", path=path) from None
    except json.JSONDecodeError as e:
        raise InputValidationError(f"malformed JSON at line {e.lineno}, column {e.colno}", path=path) from e


def _first_key(error: ValidationError) -> str:
    details = error.errors()
    if not details:
        return ""
    return '.'.join(str(part) for part in details[0]['loc'])


def load(kind: str, path: str):
    """
    Parse `path` as a `kind` file and build the domain object.

    Raises:
        InputValidationError: schema violation (with the offending key) or
            an invalid object
    """
    data = read_json(path)
    if isinstance(data, dict) and data.get('report') == 'catalog-entry':
        data = data.get('entry', {})
    if isinstance(data, dict) and 'object' in data and 'kind' in data:
        if data['kind'] != kind:
            raise InputValidationError(f"catalog entry of kind '{data['kind']}', expected '{kind}'",
                                       path=path, key='kind')
        data = data['object']
    try:
        model = MODELS[kind].model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]['msg'] if e.errors() else str(e)
        raise InputValidationError(first, path=path, key=_first_key(e)) from e
    try:
        obj = model.build()
    except InputValidationError as e:
        raise InputValidationError(str(e), path=path, key=e.key) from e
    logger.debug("Loaded %s from %s", kind, path)
    return obj
