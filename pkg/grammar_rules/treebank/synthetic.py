"""
Synthetic corpora with a planted word-order rule.

Every generated sentence holds exactly one dependent/head pair of the planted relation,
ordered by whether the dependent carries the controlling morphological value. All other
annotation is drawn so that no other feature separates the two orders.
"""

import random
from dataclasses import dataclass

from .models import Corpus, Sentence, Token

NOUNS = [
    ("libros", "libro", "Masc", "Plur"),
    ("casa", "casa", "Fem", "Sing"),
    ("perro", "perro", "Masc", "Sing"),
    ("ciudades", "ciudad", "Fem", "Plur"),
    ("árbol", "árbol", "Masc", "Sing"),
    ("mesas", "mesa", "Fem", "Plur"),
]
MARKED_ADJECTIVES = ["primero", "segundo", "tercero", "cuarto", "quinto"]
PLAIN_ADJECTIVES = ["rojo", "grande", "nuevo", "viejo", "pequeño", "solemne"]
DETERMINERS = ["el", "un", "este"]
VERBS = [("llegaron", "llegar"), ("cayó", "caer"), ("brilla", "brillar")]


@dataclass(frozen=True)
class PlantedRule:
    relation: str = "adjective-noun"
    dependent_upos: str = "ADJ"
    head_upos: str = "NOUN"
    deprel: str = "mod"
    attribute: str = "NumType"
    value: str = "Ord"
    order_if_marked: str = "before"
    order_otherwise: str = "after"
    marked_share: float = 0.4

    @property
    def description(self) -> str:
        return (
            f"{self.dependent_upos} {self.order_if_marked} {self.head_upos} "
            f"iff {self.attribute}={self.value}, else {self.order_otherwise}"
        )


def generate_synthetic(rule: PlantedRule, n_sentences: int, seed: int) -> Corpus:
    """
    Generate a corpus in which the planted rule decides every pair's order.

    The result is a pure function of (rule, n_sentences, seed).
    """
    rng = random.Random(seed)
    sentences = tuple(
        _generate_sentence(rule, rng, index) for index in range(1, n_sentences + 1)
    )
    return Corpus(
        sentences=sentences,
        language="xx",
        treebank_id=f"synthetic_{rule.relation}",
        split="train",
    )


def _morph(*pairs: tuple[str, str]) -> tuple[tuple[str, str], ...]:
    # Same ordering the CoNLL-U reader produces.
    return tuple(sorted(pairs, key=lambda pair: pair[0].lower()))


def _generate_sentence(rule: PlantedRule, rng: random.Random, index: int) -> Sentence:
    form, lemma, gender, number = rng.choice(NOUNS)
    marked = rng.random() < rule.marked_share
    order = rule.order_if_marked if marked else rule.order_otherwise
    dependent_lemma = rng.choice(MARKED_ADJECTIVES if marked else PLAIN_ADJECTIVES)

    dependent_morph = [("Gender", gender), ("Number", number)]
    if marked:
        dependent_morph.append((rule.attribute, rule.value))

    with_determiner = rng.random() < 0.5
    verb_form, verb_lemma = rng.choice(VERBS)

    # Surface layout, before ids are assigned: [det] dep head verb / [det] head dep verb
    layout = []
    if with_determiner:
        layout.append("det")
    layout.extend(["dep", "head"] if order == "before" else ["head", "dep"])
    layout.append("verb")
    ids = {role: position for position, role in enumerate(layout, start=1)}

    specs = {
        "det": dict(
            form=rng.choice(DETERMINERS),
            upos="DET",
            morph=_morph(("Gender", gender), ("Number", number)),
            head=ids["head"],
            deprel="det",
        ),
        "dep": dict(
            form=dependent_lemma,
            upos=rule.dependent_upos,
            morph=_morph(*dependent_morph),
            head=ids["head"],
            deprel=rule.deprel,
        ),
        "head": dict(
            form=form,
            lemma=lemma,
            upos=rule.head_upos,
            morph=_morph(("Gender", gender), ("Number", number)),
            head=ids["verb"],
            deprel="subj",
        ),
        "verb": dict(
            form=verb_form,
            lemma=verb_lemma,
            upos="VERB",
            morph=_morph(("Mood", "Ind"), ("VerbForm", "Fin")),
            head=0,
            deprel="root",
        ),
    }

    tokens = []
    for role in layout:
        spec = dict(specs[role])
        spec.setdefault("lemma", spec["form"])
        tokens.append(Token(id=ids[role], **spec))

    return Sentence(
        tokens=tuple(tokens),
        text=" ".join(token.form for token in tokens),
        sent_id=f"synthetic-{index}",
    )
