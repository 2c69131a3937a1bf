from .models import (
    AFTER,
    AGREE,
    AGREEMENT_ATTRIBUTES,
    BEFORE,
    DISAGREE,
    Dataset,
    Task,
    TaskInstance,
)
from .relations import DEFAULT_RELATIONS, RelationSpec, load_relation_specs
from .extract import build_dataset, extract_agreement, extract_case, extract_word_order
from .exceptions import TaskConfigurationError
