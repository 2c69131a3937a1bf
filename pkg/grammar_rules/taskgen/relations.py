"""
Word-order relation definitions.

A relation is matched on a (dependent, head) token pair: the dependent by POS and/or
dependency relation, the head by POS. `orientation` names the member whose position
decides the label: "before" means that member precedes the other one.

The deprel strings follow SUD conventions and can be overridden from JSON, e.g.

    {
      "adjective-noun": {"wals_code": "87A", "dependent_upos": ["ADJ"],
                         "deprel_contains": "mod", "head_upos": ["NOUN"]},
      "object-verb": {"deprel_equals": "comp:obj"}
    }
"""

import json
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Mapping, Optional

from ..treebank import Token
from .exceptions import TaskConfigurationError

ORIENTATIONS = ("dependent", "head")


@dataclass(frozen=True)
class RelationSpec:
    name: str
    wals_code: str = ""
    dependent_upos: tuple[str, ...] = ()
    deprel_equals: Optional[str] = None
    deprel_contains: Optional[str] = None
    head_upos: tuple[str, ...] = ()
    orientation: str = "dependent"

    def __post_init__(self):
        if not (self.dependent_upos or self.deprel_equals or self.deprel_contains):
            raise TaskConfigurationError(
                f"Relation '{self.name}' needs a dependent POS or deprel constraint."
            )
        if not self.head_upos:
            raise TaskConfigurationError(
                f"Relation '{self.name}' needs a head POS constraint."
            )
        if self.orientation not in ORIENTATIONS:
            raise TaskConfigurationError(
                f"Relation '{self.name}': orientation must be one of {ORIENTATIONS}."
            )

    def matches_dependent(self, token: Token) -> bool:
        if self.dependent_upos and token.upos not in self.dependent_upos:
            return False
        deprel = token.deprel or ""
        if self.deprel_equals is not None and deprel != self.deprel_equals:
            return False
        if self.deprel_contains is not None and self.deprel_contains not in deprel:
            return False
        return True

    def matches_head(self, token: Token) -> bool:
        return token.upos in self.head_upos

    def matches(self, dependent: Token, head: Token) -> bool:
        return self.matches_dependent(dependent) and self.matches_head(head)

    def is_before(self, dependent: Token, head: Token) -> bool:
        """True when the oriented member precedes the other member."""
        if self.orientation == "dependent":
            return dependent.id < head.id
        return head.id < dependent.id


DEFAULT_RELATIONS: dict[str, RelationSpec] = {
    spec.name: spec
    for spec in (
        RelationSpec(
            name="subject-verb",
            wals_code="82A",
            deprel_equals="subj",
            head_upos=("VERB", "AUX"),
        ),
        RelationSpec(
            name="object-verb",
            wals_code="83A",
            deprel_equals="comp:obj",
            head_upos=("VERB",),
        ),
        RelationSpec(
            name="adposition-noun",
            wals_code="85A",
            dependent_upos=("NOUN",),
            head_upos=("ADP",),
            orientation="head",
        ),
        RelationSpec(
            name="adjective-noun",
            wals_code="87A",
            dependent_upos=("ADJ",),
            deprel_contains="mod",
            head_upos=("NOUN",),
        ),
        RelationSpec(
            name="numeral-noun",
            wals_code="89A",
            dependent_upos=("NUM",),
            head_upos=("NOUN",),
        ),
    )
}

_FIELD_NAMES = {f.name for f in fields(RelationSpec)}
_TUPLE_FIELDS = {"dependent_upos", "head_upos"}


def _tag_tuple(name: str, key: str, value) -> tuple[str, ...]:
    # A single tag may be written as a plain string.
    if isinstance(value, str):
        return (value,)
    if not isinstance(value, (list, tuple)) or not all(isinstance(v, str) for v in value):
        raise TaskConfigurationError(
            f"'{key}' for relation '{name}' must be a tag or a list of tags."
        )
    return tuple(value)


def load_relation_specs(
    overrides: Optional[Mapping | str | Path] = None,
) -> dict[str, RelationSpec]:
    """
    Merge relation overrides into the defaults.

    Args:
      overrides: None, a mapping of relation name to field overrides, or the path of a
        JSON file holding such a mapping. Unknown relation names define new relations.

    Raises:
      TaskConfigurationError: On unknown fields or an unreadable override file.
    """
    relations = dict(DEFAULT_RELATIONS)
    if overrides is None:
        return relations

    if isinstance(overrides, (str, Path)):
        try:
            overrides = json.loads(Path(overrides).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as e:
            raise TaskConfigurationError(
                f"Cannot read relation overrides '{overrides}': {e}"
            )

    if not isinstance(overrides, Mapping):
        raise TaskConfigurationError("Relation overrides must be a JSON object.")

    for name, values in overrides.items():
        if not isinstance(values, Mapping):
            raise TaskConfigurationError(
                f"Override for relation '{name}' must be an object."
            )
        unknown = set(values) - _FIELD_NAMES
        if unknown:
            raise TaskConfigurationError(
                f"Unknown fields for relation '{name}': {', '.join(sorted(unknown))}"
            )
        cleaned = {
            key: _tag_tuple(name, key, value) if key in _TUPLE_FIELDS else value
            for key, value in values.items()
            if key != "name"
        }
        if name in relations:
            relations[name] = replace(relations[name], **cleaned)
        else:
            relations[name] = RelationSpec(name=name, **cleaned)

    return relations
