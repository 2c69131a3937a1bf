from .models import SPLITS, Corpus, Sentence, Token
from .conllu import (
    describe_treebank,
    load_split,
    parse_conllu,
    parse_feats,
    read_conllu,
    serialize_conllu,
    split_corpus,
)
from .synthetic import PlantedRule, generate_synthetic
from .exceptions import ConlluParseError, SplitError, TreebankNotFoundError
