from .exceptions import (
    ConfigError,
    ConfigurationError,
    EmptyDataError,
    GrammarRulesError,
)
from .config import CrossEvalConfig, ExtractConfig, TreebankPaths, load_config
from .pipeline import (
    ExtractionResult,
    run_ablation,
    run_cross_eval,
    run_extraction,
    write_artifacts,
)
