from typing import Iterable

from .exceptions import UnknownFormatError

JSON = "json"
MARKDOWN = "md"
HTML = "html"
XLSX = "xlsx"
PPTX = "pptx"

FORMATS = (JSON, MARKDOWN, HTML, XLSX, PPTX)
DEFAULT_FORMATS = (JSON, MARKDOWN, HTML)

FILE_NAMES = {
    JSON: "rules.json",
    MARKDOWN: "rules.md",
    HTML: "rules.html",
    XLSX: "rules.xlsx",
    PPTX: "rules.pptx",
}


def parse_formats(value: str | Iterable[str]) -> tuple[str, ...]:
    """Parse "json,md" (or a list) into known formats; "all" means json, md and html."""
    items = value.split(",") if isinstance(value, str) else list(value)
    formats = []
    for item in items:
        item = str(item).strip().lower()
        if not item:
            continue
        if item == "all":
            expanded = DEFAULT_FORMATS
        elif item in FORMATS:
            expanded = (item,)
        else:
            raise UnknownFormatError(
                f"Unknown output format '{item}', expected one of: "
                f"{', '.join(FORMATS)}, all"
            )
        formats.extend(f for f in expanded if f not in formats)
    if not formats:
        raise UnknownFormatError("no output format selected")
    return tuple(formats)
