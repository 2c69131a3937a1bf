"""
Core templating functions.

process_text() resolves template tags (delimited by {{ and }}) using the provided
context. In "normal" mode every tag is replaced inline, list results joined by a
delimiter. In "table" mode the text must contain exactly one tag; a list result yields
one output string per item.

An optional escape function is applied to every resolved value before it is inserted,
except to SafeText values, which are already rendered markup.
"""

import re
from typing import Callable, Iterable, Optional

from .exceptions import BadTemplateModeError, EmptyDataException
from .resolve import resolve_formatted_tag

TAG_PATTERN = re.compile(r"\{\{(.*?)\}\}")


class SafeText(str):
    """Rendered text that must not be escaped again."""

    pass


def get_matching_tags(text: str):
    return list(TAG_PATTERN.finditer(text))


def _to_text(value, escape: Optional[Callable[[str], str]]) -> str:
    if value is None:
        return ""
    if escape is None or isinstance(value, SafeText):
        return str(value)
    return escape(str(value))


def process_text(
    text: str,
    context: dict,
    mode: str = "normal",
    delimiter: str = ", ",
    fail_if_empty: bool = False,
    escape: Optional[Callable[[str], str]] = None,
):
    """
    Process text containing template tags.

    Args:
      text: Template text.
      context: Values available to the tags.
      mode: "normal" or "table" (see module docstring).
      delimiter: Joins list values in normal mode.
      fail_if_empty: Raise EmptyDataException when a tag resolves to "" or None.
      escape: Applied to each resolved value (e.g. html.escape).
    """
    if mode not in ("normal", "table"):
        raise BadTemplateModeError(f"Unknown template mode '{mode}'.")

    matches = get_matching_tags(text)

    if mode == "table" and len(matches) != 1:
        raise BadTemplateModeError(
            "Table mode supports mixed text with exactly one placeholder."
        )

    if not matches:
        return text

    result_parts = []
    last_index = 0
    for m in matches:
        start, end = m.span()
        before = text[last_index:start]
        result_parts.append(before)

        raw_expr = m.group(1).strip()
        value = resolve_formatted_tag(expr=raw_expr, context=context)

        if fail_if_empty and value in ("", None):
            raise EmptyDataException(
                f"Processed value for '{raw_expr}' is empty, but it is required."
            )

        if isinstance(value, (list, tuple)):
            if mode == "table":
                after = text[end:]
                return [before + _to_text(x, escape) + after for x in value]
            replacement = delimiter.join(_to_text(x, escape) for x in value)
        else:
            replacement = _to_text(value, escape)

        result_parts.append(replacement)
        last_index = end

    result_parts.append(text[last_index:])
    return "".join(result_parts)


def process_loop(
    template: str,
    items: Iterable,
    loop_variable: str,
    context: Optional[dict] = None,
    delimiter: str = "",
    escape: Optional[Callable[[str], str]] = None,
) -> SafeText:
    """
    Render a template once per item, with the item bound to `loop_variable`, and join
    the results. The output is SafeText, so it can be embedded in an escaped template.
    """
    context = context or {}
    rendered = [
        process_text(template, {**context, loop_variable: item}, escape=escape)
        for item in items
    ]
    return SafeText(delimiter.join(rendered))
