from .exceptions import BadTagException


def format_value(value, format_expr: str):
    """
    Format a resolved value.

    Options for format_expr:
        upper, lower, title   string case
        length                length of a string or list
        percent               a fraction rendered as e.g. '68.1%'
        .2f, .3g, d, ...      any Python format spec

    List values are formatted item by item (except for 'length').
    """
    if format_expr == "length":
        if not isinstance(value, (str, list, tuple)):
            raise BadTagException(
                f"Cannot apply 'length' format to non-string/list value: {value}"
            )
        return len(value)

    if isinstance(value, (list, tuple)):
        return [format_value(item, format_expr) for item in value]

    try:
        if format_expr == "upper":
            return str(value).upper()
        if format_expr == "lower":
            return str(value).lower()
        if format_expr == "title":
            return str(value).title()
        if format_expr == "percent":
            return f"{float(value) * 100:.1f}%"
        return format(value, format_expr)
    except Exception as e:
        raise BadTagException(
            f"Error formatting value '{value}' with format '{format_expr}': {e}"
        )
