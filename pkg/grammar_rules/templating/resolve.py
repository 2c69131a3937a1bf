import re

from .exceptions import BadTagException, MissingDataException
from .formatting import format_value
from .parse import evaluate_condition, get_nested_attr

BAD_SEGMENT_PATTERN = re.compile(r"^[#%]*$")
SEGMENT_PATTERN = re.compile(r"^(\w+(?:__\w+)*)(?:\[(.*?)\])?$")


def resolve_formatted_tag(expr: str, context: dict):
    """
    Resolve a template tag expression and return its final value.

    Supported features:

      1. Simple replacements, e.g. {{ task }}.

      2. Nested attributes and dictionary values, following "." or "__" paths,
         e.g. {{ evaluation.model_accuracy }} or {{ evaluation__model_accuracy }}.

      3. Lists and tuples: a segment applied to a list is applied to every item, e.g.
         {{ rules.label }}; a numeric segment indexes the list, e.g. {{ rules.0.label }}.

      4. Filtering with square brackets, e.g. {{ rules[significant=True].label }}.

      5. A pipe operator (|) selecting a format, e.g. {{ p_value | .3g }},
         {{ label | upper }} or {{ positives | length }}.

    Raises:
      BadTagException: When the tag contains stray curly braces or too many pipes.
      MissingDataException: When a segment cannot be found.
    """
    if "{" in expr or "}" in expr:
        raise BadTagException(
            f"Bad format in tag '{expr}': unexpected curly brace detected."
        )

    format_parts = expr.split("|")
    if len(format_parts) > 2:
        raise BadTagException(f"Bad format in tag '{expr}': too many pipe operators.")
    value_expr = format_parts[0].strip()

    format_expr = None
    if len(format_parts) == 2:
        format_expr = format_parts[1].strip()
        if (format_expr.startswith('"') and format_expr.endswith('"')) or (
            format_expr.startswith("'") and format_expr.endswith("'")
        ):
            format_expr = format_expr[1:-1]

    value = resolve_tag(value_expr, context=context)

    if format_expr:
        value = format_value(value, format_expr)

    return value


def resolve_tag(expr: str, context: dict):
    """
    Resolve a dotted tag expression against the context.

    Returns:
      The resolved value; an empty string if the expression is empty or any segment
      resolves to None.
    """
    segments = split_expression(expr)
    if not segments or not segments[0]:
        return ""

    if any(bool(BAD_SEGMENT_PATTERN.fullmatch(s)) for s in segments):
        raise BadTagException(f"Bad characters in tag segments: {segments}")

    current = context
    for seg in segments:
        current = resolve_segment(current, seg)
        if current is None:
            return ""
    return current


def split_expression(expr: str) -> list[str]:
    """
    Split a dotted expression into segments, ignoring periods inside square brackets
    (e.g. "rules[p_value=0.5].label").
    """
    return re.split(r"\.(?![^\[]*\])", expr)


def resolve_segment(current, segment: str):
    """
    Resolve a single segment of a dotted tag expression.

    A segment is an attribute name (possibly chained with "__") with an optional filter
    in square brackets. Applied to a list or tuple, a numeric segment indexes it and any
    other segment is resolved on every item, flattening nested lists.

    Raises:
      BadTagException: If the segment is malformed or has unmatched brackets.
      MissingDataException: If an attribute or index is not found.
    """
    if segment.count("[") != segment.count("]"):
        raise BadTagException(f"Unmatched square brackets in segment: '{segment}'")

    m = SEGMENT_PATTERN.match(segment.strip())
    if not m:
        raise BadTagException(f"Segment '{segment}' is malformed")
    attr_name, filter_expr = m.group(1), m.group(2)

    if isinstance(current, (list, tuple)):
        if attr_name.isdigit() and filter_expr is None:
            try:
                return current[int(attr_name)]
            except IndexError:
                raise MissingDataException(
                    f"Index {attr_name} out of bounds for list of length {len(current)}"
                )
        results = []
        for item in current:
            res = resolve_segment(item, segment)
            if isinstance(res, list):
                results.extend(res)
            else:
                results.append(res)
        return results

    try:
        value = get_nested_attr(current, attr_name)
    except (AttributeError, KeyError, IndexError):
        raise MissingDataException(f"{segment} not found in {type(current).__name__}")

    if filter_expr:
        items = list(value) if isinstance(value, (list, tuple)) else [value]
        conditions = [cond.strip() for cond in filter_expr.split(",")]
        value = [
            item for item in items if all(evaluate_condition(item, c) for c in conditions)
        ]
    return value
