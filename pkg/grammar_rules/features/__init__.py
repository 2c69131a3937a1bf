from .focus import MAX_CHILDREN, FocusSet, collect_focus
from .extractors import (
    BINARY,
    NUMERIC,
    Feature,
    FeatureFamily,
    lexical_features,
    normalize,
    family_names,
    parse_families,
    semantic_features,
    syntactic_features,
)
from .lexicon import DEFAULT_TOP_K, SparseLexicon, load_sparse_lexicon
from .space import (
    UNKNOWN_LABEL,
    FeatureMatrix,
    FeatureSpace,
    FeatureVector,
    build_matrix,
    instance_features,
    matrix_from_vectors,
    vectorize,
)
from .exceptions import FeatureSelectionError, LexiconFormatError, NoInstancesError
