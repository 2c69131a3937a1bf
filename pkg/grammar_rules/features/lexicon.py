"""
Sparse non-negative word vectors and their human-readable dimension labels.

The file format is one word per line followed by its D values, space separated:

    hotel 0.0 0.93 0.0
    restaurante 0.0 0.88 0.1

Each dimension is labeled by its top-k words. Dimensions that are zero for every word
carry no information and are dropped.
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import numpy as np

from ..treebank import Token
from .exceptions import LexiconFormatError

logger = logging.getLogger(__name__)

DEFAULT_TOP_K = 5


@dataclass(frozen=True)
class SparseLexicon:
    index: dict[str, int] = field(default_factory=dict)
    # (n_words, n_kept_dims); column j belongs to original dimension dims[j]
    vectors: np.ndarray = field(default_factory=lambda: np.zeros((0, 0)))
    dims: tuple[int, ...] = ()
    dim_labels: tuple[tuple[str, ...], ...] = ()
    k: int = DEFAULT_TOP_K

    def __len__(self):
        return len(self.index)

    def __contains__(self, word: str) -> bool:
        return word in self.index

    def vector(self, word: str) -> Optional[np.ndarray]:
        row = self.index.get(word)
        return None if row is None else self.vectors[row]

    def lookup(self, token: Token) -> Optional[np.ndarray]:
        """Vector for a token: surface form first, then lowercased form, then lemma."""
        for candidate in (token.form, token.form.lower(), token.lemma):
            vector = self.vector(candidate) if candidate else None
            if vector is not None:
                return vector
        return None

    def label(self, column: int) -> str:
        return "{" + ",".join(self.dim_labels[column]) + "}"


def load_sparse_lexicon(path: str | Path, k: int = DEFAULT_TOP_K) -> SparseLexicon:
    """
    Read a sparse lexicon file and label each dimension by its k strongest words.

    Ties between equal values are broken by lexicographic word order; only words with a
    positive value can label a dimension.

    Raises:
      LexiconFormatError: On a row with the wrong number of values or a negative value.
    """
    words: list[str] = []
    rows: list[list[float]] = []
    n_dims = None

    with open(path, "r", encoding="utf-8") as f:
        for line_number, line in enumerate(f, start=1):
            parts = line.split()
            if not parts:
                continue
            word, raw_values = parts[0], parts[1:]
            if n_dims is None:
                n_dims = len(raw_values)
                if n_dims == 0:
                    raise LexiconFormatError(line_number, f"no values for word '{word}'")
            if len(raw_values) != n_dims:
                raise LexiconFormatError(
                    line_number, f"expected {n_dims} values, found {len(raw_values)}"
                )
            try:
                values = [float(v) for v in raw_values]
            except ValueError as e:
                raise LexiconFormatError(line_number, f"non-numeric value ({e})")
            if any(v < 0 or not np.isfinite(v) for v in values):
                raise LexiconFormatError(line_number, "values must be finite and >= 0")
            words.append(word)
            rows.append(values)

    if not rows:
        return SparseLexicon(k=k)

    matrix = np.asarray(rows, dtype=float)
    kept = np.nonzero(matrix.max(axis=0) > 0)[0]
    matrix = matrix[:, kept]

    # Rank of every word in lexicographic order, for tie-breaking.
    word_rank = np.empty(len(words), dtype=np.int64)
    word_rank[np.argsort(np.array(words, dtype=object), kind="stable")] = np.arange(
        len(words)
    )

    dim_labels = tuple(
        _top_words(matrix[:, j], words, word_rank, k) for j in range(len(kept))
    )

    logger.info(
        "Loaded lexicon %s: %d words, %d/%d informative dimensions",
        path,
        len(words),
        len(kept),
        n_dims,
    )
    return SparseLexicon(
        index={word: i for i, word in enumerate(words)},
        vectors=matrix,
        dims=tuple(int(d) for d in kept),
        dim_labels=dim_labels,
        k=k,
    )


def _top_words(
    column: np.ndarray,
    words: list[str],
    word_rank: np.ndarray,
    k: int,
) -> tuple[str, ...]:
    positive = np.nonzero(column > 0)[0]
    if len(positive) > k:
        kth_value = np.partition(column[positive], len(positive) - k)[len(positive) - k]
        positive = positive[column[positive] >= kth_value]
    # lexsort: last key is primary
    order = np.lexsort((word_rank[positive], -column[positive]))
    return tuple(words[i] for i in positive[order][:k])
