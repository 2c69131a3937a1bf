from .core import SafeText, get_matching_tags, process_loop, process_text
from .resolve import resolve_formatted_tag, resolve_segment, resolve_tag, split_expression
from .parse import evaluate_condition, get_nested_attr, parse_value
from .formatting import format_value
from .exceptions import (
    BadTagException,
    BadTemplateModeError,
    EmptyDataException,
    MissingDataException,
)
