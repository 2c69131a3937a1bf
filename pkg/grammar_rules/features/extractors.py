"""
Syntactic, lexical and semantic feature extractors.

Each extractor returns a list of Feature records for one focus set. POS tags, deprels
and morphological attributes are lowercased and ASCII-folded in feature names; lemmas
and words keep their original casing and script.
"""

import unicodedata
from dataclasses import dataclass
from enum import StrEnum
from typing import Iterable, Mapping, Optional

from .exceptions import FeatureSelectionError
from .focus import FocusSet
from .lexicon import SparseLexicon

BINARY = "binary"
NUMERIC = "numeric"


class FeatureFamily(StrEnum):
    SYNTACTIC = "syn"
    LEXICAL = "lex"
    SEMANTIC = "sem"


_FAMILY_ALIASES = {
    "syn": FeatureFamily.SYNTACTIC,
    "syntactic": FeatureFamily.SYNTACTIC,
    "lex": FeatureFamily.LEXICAL,
    "lexical": FeatureFamily.LEXICAL,
    "sem": FeatureFamily.SEMANTIC,
    "semantic": FeatureFamily.SEMANTIC,
}


def parse_families(value: str | Iterable[str]) -> frozenset[FeatureFamily]:
    """Parse "syn,lex" (or a list of names) into a set of feature families."""
    items = value.split(",") if isinstance(value, str) else list(value)
    families = set()
    for item in items:
        item = str(item).strip().lower()
        if not item:
            continue
        if item not in _FAMILY_ALIASES:
            raise FeatureSelectionError(
                f"Unknown feature family '{item}', expected syn, lex or sem."
            )
        families.add(_FAMILY_ALIASES[item])
    return frozenset(families)


@dataclass(frozen=True)
class Feature:
    name: str
    value: float = 1.0
    kind: str = BINARY
    display: Optional[str] = None

    @property
    def label(self) -> str:
        return self.display or self.name


def normalize(text: str) -> str:
    """Lowercased ASCII rendering used for POS, deprel and attribute names."""
    folded = unicodedata.normalize("NFKD", text).encode("ascii", "ignore").decode("ascii")
    return (folded or text).lower()


def syntactic_features(
    focus: FocusSet,
    excluded_attributes: Optional[Mapping[str, Iterable[str]]] = None,
) -> list[Feature]:
    """
    POS, morphology and dependency-relation features for every focus role.

    Args:
      focus: The focus set of one instance.
      excluded_attributes: role -> attributes that must not become features (the
        attribute being predicted on the focus members).
    """
    excluded_attributes = excluded_attributes or {}
    features = []
    for role, token in focus.tokens():
        skip = set(excluded_attributes.get(role, ()))
        if token.upos:
            features.append(Feature(f"{role}-is-{normalize(token.upos)}"))
        for attr, value in token.morph:
            if attr in skip:
                continue
            features.append(Feature(f"{role}-{normalize(attr)}-is-{normalize(value)}"))
        if token.deprel:
            features.append(Feature(f"{role}-deprel-is-{normalize(token.deprel)}"))
    return features


def lexical_features(focus: FocusSet) -> list[Feature]:
    """One lemma feature per focus role that has a lemma."""
    return [
        Feature(f"{role}-lemma-is-{token.lemma}")
        for role, token in focus.tokens()
        if token.lemma
    ]


def semantic_features(focus: FocusSet, lexicon: SparseLexicon) -> list[Feature]:
    """Numeric features for the positive lexicon dimensions of each focus word."""
    features = []
    for role, token in focus.tokens():
        vector = lexicon.lookup(token)
        if vector is None:
            continue
        for column in map(int, vector.nonzero()[0]):
            features.append(
                Feature(
                    name=f"{role}-dim{lexicon.dims[column]}",
                    value=float(vector[column]),
                    kind=NUMERIC,
                    display=f"{role}-word-is-like={lexicon.label(column)}",
                )
            )
    return features


def family_names(families: Iterable[str]) -> str:
    """Families as a stable comma list in syn, lex, sem order, e.g. "syn,lex"."""
    order = list(FeatureFamily)
    return ",".join(f.value for f in sorted(parse_families(families), key=order.index))
