import re

CONDITION_PATTERN = re.compile(r"(\w+)\s*=\s*(.+)")


def get_nested_attr(obj, attr: str):
    """
    Retrieve an attribute from an object or dictionary using a chain of lookups
    separated by "__". Numeric parts index into lists and tuples.

    Returns:
      The attribute value, or None once an intermediate value is None.

    Raises:
      AttributeError, KeyError, IndexError: If a part cannot be found.
    """
    for part in attr.split("__"):
        if obj is None:
            return None
        if part.isdigit() and isinstance(obj, (list, tuple)):
            obj = obj[int(part)]
        elif isinstance(obj, dict):
            obj = obj[part]
        else:
            obj = getattr(obj, part)
    return obj


def evaluate_condition(item, condition: str) -> bool:
    """Evaluate a condition in the form "attribute=value" against an item."""
    m = CONDITION_PATTERN.match(condition)
    if not m:
        return False
    attr_chain, value_str = m.groups()
    expected_value = parse_value(value_str)
    try:
        actual_value = get_nested_attr(item, attr_chain)
    except (AttributeError, KeyError, IndexError):
        return False
    return str(actual_value) == str(expected_value)


def parse_value(val_str: str):
    """Convert a string to a Python value (bool, int, float, or str)."""
    val_str = val_str.strip()
    if val_str.lower() == "true":
        return True
    if val_str.lower() == "false":
        return False
    try:
        return int(val_str)
    except ValueError:
        pass
    try:
        return float(val_str)
    except ValueError:
        pass
    if (val_str.startswith('"') and val_str.endswith('"')) or (
        val_str.startswith("'") and val_str.endswith("'")
    ):
        return val_str[1:-1]
    return val_str
