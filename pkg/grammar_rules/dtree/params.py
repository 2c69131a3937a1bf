from dataclasses import asdict, dataclass
from typing import Any, Mapping

from .exceptions import InvalidTrainParamsError

GINI = "gini"
ENTROPY = "entropy"
CRITERIA = (GINI, ENTROPY)

GRID_DEPTHS = (3, 4, 5, 6, 7, 8, 9, 10, 15, 20)


@dataclass(frozen=True)
class TrainParams:
    criterion: str = GINI
    max_depth: int = 3
    min_leaf: int = 1
    # Depth 0 yields a single-leaf tree, i.e. the frequency baseline.
    allow_depth_zero: bool = False

    def __post_init__(self):
        if self.criterion not in CRITERIA:
            raise InvalidTrainParamsError(
                f"Unknown criterion '{self.criterion}', expected one of {CRITERIA}."
            )
        min_depth = 0 if self.allow_depth_zero else 1
        if not isinstance(self.max_depth, int) or self.max_depth < min_depth:
            raise InvalidTrainParamsError(
                f"max_depth must be an integer >= {min_depth}, got {self.max_depth!r}."
            )
        if not isinstance(self.min_leaf, int) or self.min_leaf < 1:
            raise InvalidTrainParamsError(
                f"min_leaf must be an integer >= 1, got {self.min_leaf!r}."
            )

    def to_dict(self) -> dict:
        data = asdict(self)
        data.pop("allow_depth_zero")
        return data

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "TrainParams":
        unknown = set(data) - {"criterion", "max_depth", "min_leaf"}
        if unknown:
            raise InvalidTrainParamsError(
                f"Unknown training parameter(s): {', '.join(sorted(unknown))}"
            )
        return cls(
            criterion=data.get("criterion", GINI),
            max_depth=data.get("max_depth", 3),
            min_leaf=data.get("min_leaf", 1),
        )

    @property
    def sort_key(self) -> tuple:
        """Preference order among equally accurate configurations."""
        return (self.max_depth, CRITERIA.index(self.criterion), self.min_leaf)


def baseline_params(criterion: str = GINI) -> TrainParams:
    return TrainParams(criterion=criterion, max_depth=0, allow_depth_zero=True)


DEFAULT_GRID = tuple(
    TrainParams(criterion=criterion, max_depth=depth)
    for depth in GRID_DEPTHS
    for criterion in CRITERIA
)
