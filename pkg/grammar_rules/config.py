"""
Run configuration.

A run is described by one JSON file, optionally overridden by command-line flags:

    {
      "treebank": {"train": "es-train.conllu",
                   "valid": "es-dev.conllu",
                   "test": "es-test.conllu"},
      "task": "word-order",
      "key": "adjective-noun",
      "features": ["syn", "lex"],
      "grid": "default",
      "alpha": 0.01,
      "seed": 0,
      "out": "out/es-adjective-noun"
    }

An unsplit corpus is given as {"path": "corpus.conllu", "split": [0.8, 0.1, 0.1]}.
Relative paths are resolved against the directory of the configuration file.
Validation collects every problem before raising a single ConfigError.
"""

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, ClassVar, Mapping, Optional

from .dtree import DEFAULT_GRID, InvalidTrainParamsError, TrainParams
from .evaluation import DEFAULT_TAU
from .exceptions import ConfigError, ConfigurationError
from .features import DEFAULT_TOP_K, FeatureFamily, family_names, parse_families
from .report import DEFAULT_FORMATS, parse_formats
from .ruleset import DEFAULT_ALPHA, DEFAULT_EXAMPLES_PER_RULE
from .taskgen import AGREEMENT_ATTRIBUTES, RelationSpec, Task, load_relation_specs
from .treebank import Corpus, load_split, read_conllu, split_corpus

logger = logging.getLogger(__name__)

DEFAULT_SPLIT = (0.8, 0.1, 0.1)

KNOWN_KEYS = {
    "treebank",
    "treebanks",
    "task",
    "key",
    "features",
    "lexicon",
    "top_k",
    "grid",
    "alpha",
    "tau",
    "seed",
    "examples_per_rule",
    "out",
    "formats",
    "relations",
}


@dataclass(frozen=True)
class TreebankPaths:
    train: Optional[Path] = None
    valid: Optional[Path] = None
    test: Optional[Path] = None
    # Unsplit corpus, cut with `split` fractions
    path: Optional[Path] = None
    split: tuple[float, float, float] = DEFAULT_SPLIT

    @classmethod
    def from_dict(
        cls,
        data: Any,
        errors: list[str],
        base_dir: Optional[Path] = None,
        label: str = "treebank",
    ) -> Optional["TreebankPaths"]:
        """Validate a treebank entry, appending problems to `errors`."""
        if isinstance(data, str):
            data = {"path": data}
        if not isinstance(data, Mapping):
            errors.append(f"'{label}' must be an object or a path")
            return None

        def resolve(key: str) -> Optional[Path]:
            value = data.get(key)
            if value is None:
                return None
            path = Path(value)
            if base_dir is not None and not path.is_absolute():
                path = base_dir / path
            if not path.is_file():
                errors.append(f"'{label}.{key}': file not found: {value}")
            return path

        if "path" in data:
            split = data.get("split", DEFAULT_SPLIT)
            if (
                not isinstance(split, (list, tuple))
                or len(split) != 3
                or not all(isinstance(f, (int, float)) and f >= 0 for f in split)
                or abs(sum(split) - 1.0) > 1e-9
            ):
                errors.append(
                    f"'{label}.split' must be three non-negative fractions summing to 1"
                )
                split = DEFAULT_SPLIT
            return cls(path=resolve("path"), split=tuple(float(f) for f in split))

        missing = [key for key in ("train", "valid", "test") if not data.get(key)]
        if missing:
            errors.append(
                f"'{label}' needs 'train', 'valid' and 'test' paths "
                f"(or 'path'); missing: {', '.join(missing)}"
            )
            return None
        return cls(train=resolve("train"), valid=resolve("valid"), test=resolve("test"))

    def load(self, seed: int = 0) -> tuple[Corpus, Corpus, Corpus]:
        if self.path is not None:
            return split_corpus(read_conllu(self.path), self.split, seed)
        return load_split(self.train, self.valid, self.test)


@dataclass(frozen=True)
class ExtractConfig:
    task: Task
    key: str
    treebank: Optional[TreebankPaths] = None
    treebanks: tuple[tuple[str, TreebankPaths], ...] = ()
    features: frozenset[FeatureFamily] = frozenset({FeatureFamily.SYNTACTIC})
    lexicon: Optional[Path] = None
    top_k: int = DEFAULT_TOP_K
    grid: tuple[TrainParams, ...] = DEFAULT_GRID
    alpha: float = DEFAULT_ALPHA
    tau: float = DEFAULT_TAU
    seed: int = 0
    examples_per_rule: int = DEFAULT_EXAMPLES_PER_RULE
    out: Path = Path("out")
    formats: tuple[str, ...] = DEFAULT_FORMATS
    relations: dict[str, RelationSpec] = field(default_factory=load_relation_specs)

    REQUIRE_TREEBANK: ClassVar[bool] = True
    MIN_TREEBANKS: ClassVar[int] = 0

    @property
    def feature_names(self) -> str:
        return family_names(self.features)

    @classmethod
    def from_dict(
        cls,
        data: Mapping[str, Any],
        base_dir: Optional[Path] = None,
    ) -> "ExtractConfig":
        """
        Validate a configuration mapping.

        Raises:
          ConfigError: Listing every problem found.
        """
        errors: list[str] = []
        if not isinstance(data, Mapping):
            raise ConfigError(["configuration must be a JSON object"])

        unknown = set(data) - KNOWN_KEYS
        if unknown:
            errors.append(f"unknown key(s): {', '.join(sorted(unknown))}")

        def guarded(parse, default):
            try:
                return parse()
            except ConfigurationError as e:
                errors.append(str(e))
            except (TypeError, ValueError) as e:
                errors.append(str(e))
            return default

        task = None
        if "task" not in data:
            errors.append("missing 'task' (word-order, case or agreement)")
        else:
            task = guarded(lambda: Task.parse(data["task"]), None)

        relations = guarded(
            lambda: load_relation_specs(
                _resolve_optional(data.get("relations"), base_dir)
            ),
            load_relation_specs(),
        )

        key = data.get("key")
        if not key or not isinstance(key, str):
            errors.append("missing 'key' (relation, POS tag or agreement attribute)")
        elif task == Task.WORD_ORDER and key not in relations:
            errors.append(
                f"unknown relation '{key}', expected one of: {', '.join(sorted(relations))}"
            )
        elif task == Task.AGREEMENT and key not in AGREEMENT_ATTRIBUTES:
            errors.append(
                f"agreement attribute must be one of {', '.join(AGREEMENT_ATTRIBUTES)}"
            )

        features = guarded(
            lambda: parse_families(data.get("features", "syn")), frozenset()
        )
        if not features:
            errors.append("no feature families selected")

        lexicon = data.get("lexicon")
        if lexicon is not None:
            lexicon = _resolve_optional(lexicon, base_dir)
            if not Path(lexicon).is_file():
                errors.append(f"lexicon file not found: {data.get('lexicon')}")
        if FeatureFamily.SEMANTIC in features and lexicon is None:
            errors.append(
                "semantic features need a sparse lexicon: set 'lexicon' or pass --lexicon"
            )

        grid = guarded(lambda: _parse_grid(data.get("grid", "default")), DEFAULT_GRID)
        if not grid:
            errors.append("'grid' must hold at least one configuration")

        alpha = _number(data, "alpha", DEFAULT_ALPHA, errors, low=0.0, high=1.0)
        tau = _number(data, "tau", DEFAULT_TAU, errors, low=0.0)
        seed = _integer(data, "seed", 0, errors)
        top_k = _integer(data, "top_k", DEFAULT_TOP_K, errors, low=1)
        examples = _integer(data, "examples_per_rule", DEFAULT_EXAMPLES_PER_RULE, errors)
        formats = guarded(
            lambda: parse_formats(data.get("formats", DEFAULT_FORMATS)), DEFAULT_FORMATS
        )

        treebank = None
        if "treebank" in data:
            treebank = TreebankPaths.from_dict(data["treebank"], errors, base_dir)
        elif cls.REQUIRE_TREEBANK:
            errors.append("missing 'treebank'")

        treebanks = []
        entries = data.get("treebanks", {})
        if not isinstance(entries, Mapping):
            errors.append("'treebanks' must map names to treebank objects")
            entries = {}
        for name, entry in entries.items():
            paths = TreebankPaths.from_dict(entry, errors, base_dir, f"treebanks.{name}")
            if paths is not None:
                treebanks.append((name, paths))
        if len(entries) < cls.MIN_TREEBANKS:
            errors.append(
                f"'treebanks' needs at least {cls.MIN_TREEBANKS} entries, got {len(entries)}"
            )

        if errors:
            raise ConfigError(errors)

        return cls(
            task=task,
            key=key,
            treebank=treebank,
            treebanks=tuple(treebanks),
            features=features,
            lexicon=lexicon,
            top_k=top_k,
            grid=grid,
            alpha=alpha,
            tau=tau,
            seed=seed,
            examples_per_rule=examples,
            out=_resolve_optional(data.get("out", "out"), base_dir),
            formats=formats,
            relations=relations,
        )


@dataclass(frozen=True)
class CrossEvalConfig(ExtractConfig):
    REQUIRE_TREEBANK: ClassVar[bool] = False
    MIN_TREEBANKS: ClassVar[int] = 2


def _resolve_optional(value: Any, base_dir: Optional[Path]):
    """Resolve a relative path string against base_dir; pass mappings through."""
    if value is None or isinstance(value, Mapping):
        return value
    path = Path(value)
    if base_dir is not None and not path.is_absolute():
        path = base_dir / path
    return path


def _parse_grid(value: Any) -> tuple[TrainParams, ...]:
    if value == "default":
        return DEFAULT_GRID
    if not isinstance(value, list):
        raise ConfigurationError("'grid' must be \"default\" or a list of objects")
    try:
        return tuple(TrainParams.from_dict(item) for item in value)
    except InvalidTrainParamsError as e:
        raise ConfigurationError(f"invalid grid entry: {e}")
    except (AttributeError, TypeError):
        raise ConfigurationError("grid entries must be objects")


def _number(data, key, default, errors, low=None, high=None) -> float:
    value = data.get(key, default)
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        errors.append(f"'{key}' must be a number")
        return default
    if (low is not None and value < low) or (high is not None and value > high):
        bounds = f"[{low}, {high}]" if high is not None else f">= {low}"
        errors.append(f"'{key}' must be {bounds}, got {value}")
        return default
    return float(value)


def _integer(data, key, default, errors, low=0) -> int:
    value = data.get(key, default)
    if isinstance(value, bool) or not isinstance(value, int) or value < low:
        errors.append(f"'{key}' must be an integer >= {low}")
        return default
    return value


def load_config(
    path: str | Path,
    overrides: Optional[Mapping[str, Any]] = None,
    config_class: type[ExtractConfig] = ExtractConfig,
) -> ExtractConfig:
    """
    Read a JSON configuration file and apply flag overrides (None values are ignored).

    Raises:
      ConfigError: If the file cannot be read or the configuration is invalid.
    """
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise ConfigError([f"configuration file not found: {path}"])
    except json.JSONDecodeError as e:
        raise ConfigError([f"configuration file is not valid JSON: {e}"])

    if not isinstance(data, dict):
        raise ConfigError(["configuration must be a JSON object"])
    for key, value in (overrides or {}).items():
        if value is not None:
            data[key] = value

    config = config_class.from_dict(data, base_dir=path.parent)
    logger.info("Loaded configuration %s: %s/%s", path, config.task.value, config.key)
    return config
