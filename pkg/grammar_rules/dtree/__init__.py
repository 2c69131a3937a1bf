from .params import (
    CRITERIA,
    ENTROPY,
    GINI,
    GRID_DEPTHS,
    DEFAULT_GRID,
    TrainParams,
    baseline_params,
)
from .impurity import impurity, row_impurity
from .split import GAIN_TOLERANCE, Split, best_split, binary_mask
from .tree import (
    DecisionTree,
    Node,
    Prediction,
    apply,
    grow,
    predict,
    predict_matrix,
    score,
    tree_from_dict,
    tree_to_dict,
)
from .search import GridResult, grid_search
from .exceptions import (
    EmptyNodeError,
    EmptyTrainingSetError,
    GridSearchError,
    InvalidTrainParamsError,
)
