"""
Reading and writing CoNLL-U / SUD treebanks.

Only the ten basic columns are understood. Multiword-token ranges ("1-2") and empty
nodes ("3.1") are dropped, DEPS and MISC are ignored, and "_" becomes an absent value.
"""

import io
import logging
import random
import re
from pathlib import Path
from typing import IO, Iterable, Optional

from .exceptions import ConlluParseError, SplitError, TreebankNotFoundError
from .models import SPLITS, Corpus, Sentence, Token

logger = logging.getLogger(__name__)

N_COLUMNS = 10
UNDERSCORE = "_"

# es_ancora-sud-train.conllu -> ("es_ancora", "es")
TREEBANK_NAME_PATTERN = re.compile(r"^(?P<treebank>(?P<lang>[a-z]{2,3})_[A-Za-z0-9]+)")


def parse_conllu(
    stream: IO[str] | Iterable[str] | str,
    split: str = "train",
    language: str = "und",
    treebank_id: str = "",
) -> Corpus:
    """
    Parse CoNLL-U text into a Corpus.

    Args:
      stream: A text stream, an iterable of lines or the whole document as a string.
      split: The split the corpus is tagged with (train, valid or test).
      language: ISO code recorded on the corpus.
      treebank_id: Treebank name recorded on the corpus.

    Returns:
      Corpus whose sentences all have ids 1..n and at least one root.

    Raises:
      ConlluParseError: On a malformed row, carrying the offending line number.
    """
    if isinstance(stream, str):
        stream = io.StringIO(stream)

    sentences: list[Sentence] = []
    rows: list[tuple[int, Token]] = []
    text = None
    sent_id = None
    first_line = 0

    for line_number, raw in enumerate(stream, start=1):
        line = raw.rstrip("\r\n")

        if not line.strip():
            if rows:
                sentences.append(_build_sentence(rows, text, sent_id, first_line))
            rows, text, sent_id = [], None, None
            continue

        if line.startswith("#"):
            key, sep, value = line[1:].partition("=")
            if sep and key.strip() == "text":
                text = value.strip()
            elif sep and key.strip() == "sent_id":
                sent_id = value.strip()
            continue

        columns = line.split("\t")
        if len(columns) != N_COLUMNS:
            raise ConlluParseError(
                line_number, f"expected {N_COLUMNS} columns, found {len(columns)}"
            )

        token = _parse_row(columns, line_number)
        if token is None:
            continue
        if not rows:
            first_line = line_number
        rows.append((line_number, token))

    if rows:
        sentences.append(_build_sentence(rows, text, sent_id, first_line))

    logger.debug("Parsed %d sentences (%s, %s)", len(sentences), treebank_id, split)
    return Corpus(
        sentences=tuple(sentences),
        language=language,
        treebank_id=treebank_id,
        split=split,
    )


def _absent(value: str) -> Optional[str]:
    return None if value == UNDERSCORE else value


def _parse_row(columns: list[str], line_number: int) -> Optional[Token]:
    raw_id = columns[0]

    # Multiword-token ranges and empty nodes are not syntactic words.
    if "-" in raw_id or "." in raw_id:
        return None

    try:
        token_id = int(raw_id)
    except ValueError:
        raise ConlluParseError(line_number, f"non-integer token id '{raw_id}'")
    if token_id < 1:
        raise ConlluParseError(line_number, f"token id {token_id} is below 1")

    try:
        head = int(columns[6])
    except ValueError:
        raise ConlluParseError(line_number, f"non-integer head '{columns[6]}'")
    if head < 0:
        raise ConlluParseError(line_number, f"head {head} out of range")
    if head == token_id:
        raise ConlluParseError(line_number, f"token {token_id} is its own head")

    return Token(
        id=token_id,
        form=columns[1],
        lemma=_absent(columns[2]),
        upos=_absent(columns[3]),
        morph=parse_feats(columns[5], line_number),
        head=head,
        deprel=_absent(columns[7]),
    )


def parse_feats(feats: str, line_number: int = 0) -> tuple[tuple[str, str], ...]:
    """Parse a FEATS column ("Case=Nom|Number=Sing") into sorted (attr, value) pairs."""
    if feats == UNDERSCORE or not feats:
        return ()
    pairs = []
    for item in feats.split("|"):
        attr, sep, value = item.partition("=")
        if not sep or not attr or not value:
            raise ConlluParseError(line_number, f"malformed feature '{item}'")
        pairs.append((attr, value))
    return tuple(sorted(pairs, key=lambda pair: pair[0].lower()))


def _build_sentence(
    rows: list[tuple[int, Token]],
    text: Optional[str],
    sent_id: Optional[str],
    first_line: int,
) -> Sentence:
    n = len(rows)
    for expected, (line_number, token) in enumerate(rows, start=1):
        if token.id != expected:
            raise ConlluParseError(
                line_number, f"expected token id {expected}, found {token.id}"
            )
        if token.head > n:
            raise ConlluParseError(
                line_number, f"head {token.head} out of range for {n}-token sentence"
            )

    tokens = tuple(token for _, token in rows)
    if not any(token.is_root for token in tokens):
        raise ConlluParseError(first_line, "sentence has no root (no token with head 0)")

    return Sentence(tokens=tokens, text=text, sent_id=sent_id)


def serialize_conllu(corpus: Corpus) -> str:
    """Write a corpus back out as CoNLL-U text (XPOS, DEPS and MISC as "_")."""
    blocks = []
    for index, sentence in enumerate(corpus.sentences, start=1):
        lines = [f"# sent_id = {sentence.sent_id or index}"]
        if sentence.text is not None:
            lines.append(f"# text = {sentence.text}")
        for token in sentence.tokens:
            feats = "|".join(f"{attr}={value}" for attr, value in token.morph)
            lines.append(
                "\t".join(
                    [
                        str(token.id),
                        token.form,
                        token.lemma or UNDERSCORE,
                        token.upos or UNDERSCORE,
                        UNDERSCORE,
                        feats or UNDERSCORE,
                        str(token.head),
                        token.deprel or UNDERSCORE,
                        UNDERSCORE,
                        UNDERSCORE,
                    ]
                )
            )
        blocks.append("\n".join(lines) + "\n")
    return "\n".join(blocks) + ("\n" if blocks else "")


def describe_treebank(path: str | Path) -> tuple[str, str]:
    """Return (language, treebank_id) guessed from a SUD-style file name."""
    name = Path(path).name
    m = TREEBANK_NAME_PATTERN.match(name)
    if not m:
        return "und", Path(path).stem
    return m.group("lang"), m.group("treebank")


def read_conllu(
    path: str | Path,
    split: str = "train",
    language: Optional[str] = None,
    treebank_id: Optional[str] = None,
) -> Corpus:
    """Read a CoNLL-U file from disk, tagging the corpus with its split."""
    guessed_language, guessed_treebank = describe_treebank(path)
    try:
        with open(path, "r", encoding="utf-8") as f:
            return parse_conllu(
                f,
                split=split,
                language=language or guessed_language,
                treebank_id=treebank_id or guessed_treebank,
            )
    except FileNotFoundError:
        raise TreebankNotFoundError(f"Treebank file not found: {path}")


def load_split(
    train_path: str | Path,
    valid_path: str | Path,
    test_path: str | Path,
) -> tuple[Corpus, Corpus, Corpus]:
    """Load the standard train/valid/test files of one treebank."""
    paths = dict(zip(SPLITS, (train_path, valid_path, test_path)))

    # Fail before parsing anything if one of the files is missing.
    for path in paths.values():
        if not Path(path).is_file():
            raise TreebankNotFoundError(f"Treebank file not found: {path}")

    train, valid, test = (read_conllu(path, split=split) for split, path in paths.items())
    return train, valid, test


def split_corpus(
    corpus: Corpus,
    fractions: tuple[float, float, float] = (0.8, 0.1, 0.1),
    seed: int = 0,
) -> tuple[Corpus, Corpus, Corpus]:
    """
    Shuffle an unsplit corpus with a seeded RNG and cut it into train/valid/test.

    Raises:
      SplitError: If there are not three non-negative fractions summing to 1.
    """
    if len(fractions) != 3 or any(f < 0 for f in fractions):
        raise SplitError(f"Expected three non-negative split fractions, got {fractions}.")
    if abs(sum(fractions) - 1.0) > 1e-9:
        raise SplitError(f"Split fractions must sum to 1, got {sum(fractions)}.")

    order = list(range(len(corpus.sentences)))
    random.Random(seed).shuffle(order)

    n = len(order)
    n_train = int(round(fractions[0] * n))
    n_valid = int(round(fractions[1] * n))
    cuts = {
        "train": order[:n_train],
        "valid": order[n_train : n_train + n_valid],
        "test": order[n_train + n_valid :],
    }

    return tuple(
        Corpus(
            sentences=tuple(corpus.sentences[i] for i in sorted(cuts[split])),
            language=corpus.language,
            treebank_id=corpus.treebank_id,
            split=split,
        )
        for split in SPLITS
    )
