"""
In-memory treebank model.

Tokens, sentences and corpora are frozen dataclasses so a parsed corpus can be shared
between readers without copying. Only basic syntactic-word rows are represented:
multiword-token ranges and empty nodes never reach these types.
"""

from dataclasses import dataclass, field
from typing import Optional

from .exceptions import SplitError

SPLITS = ("train", "valid", "test")


@dataclass(frozen=True)
class Token:
    id: int
    form: str
    lemma: Optional[str] = None
    upos: Optional[str] = None
    morph: tuple[tuple[str, str], ...] = ()
    head: int = 0
    deprel: Optional[str] = None

    def feature(self, attribute: str) -> Optional[str]:
        """Return the value of a morphological attribute, or None if unmarked."""
        for attr, value in self.morph:
            if attr == attribute:
                return value
        return None

    def has_feature(self, attribute: str) -> bool:
        return self.feature(attribute) is not None

    @property
    def is_root(self) -> bool:
        return self.head == 0


@dataclass(frozen=True)
class Sentence:
    tokens: tuple[Token, ...]
    text: Optional[str] = None
    sent_id: Optional[str] = None

    def __len__(self):
        return len(self.tokens)

    def token(self, token_id: int) -> Token:
        # ids are 1..n without gaps, so the id doubles as an index
        return self.tokens[token_id - 1]

    def children(self, token_id: int) -> list[Token]:
        return [t for t in self.tokens if t.head == token_id]


@dataclass(frozen=True)
class Corpus:
    sentences: tuple[Sentence, ...] = field(default_factory=tuple)
    language: str = "und"
    treebank_id: str = ""
    split: str = "train"

    def __post_init__(self):
        if self.split not in SPLITS:
            raise SplitError(f"Unknown split '{self.split}', expected one of {SPLITS}.")

    def __len__(self):
        return len(self.sentences)

    def __iter__(self):
        return iter(self.sentences)
