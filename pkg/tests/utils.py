import json
import os
import random

from grammar_rules.features import FeatureSpace, FeatureVector, matrix_from_vectors
from grammar_rules.features.extractors import BINARY, NUMERIC
from grammar_rules.treebank import (
    Corpus,
    PlantedRule,
    Sentence,
    Token,
    generate_synthetic,
    serialize_conllu,
)

# "Los libros rojos llegaron ." with one multiword-free analysis
SAMPLE_CONLLU = """# sent_id = s1
# text = los libros rojos llegaron
1\tlos\tel\tDET\t_\tGender=Masc|Number=Plur\t2\tdet\t_\t_
2\tlibros\tlibro\tNOUN\t_\tGender=Masc|Number=Plur\t4\tsubj\t_\t_
3\trojos\trojo\tADJ\t_\tNumber=Plur|Gender=Masc\t2\tmod\t_\t_
4\tllegaron\tllegar\tVERB\t_\tMood=Ind|VerbForm=Fin\t0\troot\t_\t_

# sent_id = s2
1\tprimer\tprimero\tADJ\t_\tNumType=Ord\t2\tmod\t_\t_
2\tlibro\tlibro\tNOUN\t_\tCase=Nom\t0\troot\t_\t_
"""


def token(id, form, upos, head, deprel, lemma=None, **feats):
    """Token with FEATS given as keyword arguments, sorted like the reader sorts them."""
    morph = tuple(sorted(feats.items(), key=lambda pair: pair[0].lower()))
    return Token(
        id=id,
        form=form,
        lemma=lemma or form,
        upos=upos,
        morph=morph,
        head=head,
        deprel=deprel,
    )


def sentence(*tokens, sent_id=None):
    return Sentence(tokens=tuple(tokens), sent_id=sent_id)


def corpus(*sentences, split="train", treebank_id="xx_test", language="xx"):
    return Corpus(
        sentences=tuple(sentences),
        language=language,
        treebank_id=treebank_id,
        split=split,
    )


def planted_corpus(n_sentences=2000, seed=7, **rule_fields):
    return generate_synthetic(PlantedRule(**rule_fields), n_sentences, seed)


def write_planted_treebank(
    directory, name="planted.conllu", n_sentences=2000, seed=7, **rule_fields
):
    path = os.path.join(directory, name)
    with open(path, "w", encoding="utf-8") as f:
        f.write(serialize_conllu(planted_corpus(n_sentences, seed, **rule_fields)))
    return path


def write_config(directory, data, name="config.json"):
    path = os.path.join(directory, name)
    with open(path, "w", encoding="utf-8") as f:
        json.dump(data, f)
    return path


def binary_space(n_features):
    names = tuple(f"f{i:02d}" for i in range(n_features))
    return FeatureSpace(names=names, kinds=(BINARY,) * n_features, display=names)


def numeric_space(n_features):
    names = tuple(f"x{i:02d}" for i in range(n_features))
    return FeatureSpace(names=names, kinds=(NUMERIC,) * n_features, display=names)


def matrix_from_rows(rows, y, labels=("a", "b"), space=None, task=None):
    """Matrix from per-row {feature id: value} dicts."""
    if space is None:
        n_features = 1 + max((max(row) for row in rows if row), default=0)
        space = binary_space(n_features)
    vectors = [FeatureVector(tuple(sorted(row.items()))) for row in rows]
    return matrix_from_vectors(vectors, list(y), tuple(labels), space, task)


def random_binary_matrix(rng: random.Random, n_rows, n_features, n_labels=2, density=0.4):
    labels = tuple("abcdefgh"[:n_labels])
    rows = [
        {j: 1.0 for j in range(n_features) if rng.random() < density}
        for _ in range(n_rows)
    ]
    y = [rng.randrange(n_labels) for _ in range(n_rows)]
    return matrix_from_rows(rows, y, labels, binary_space(n_features))
