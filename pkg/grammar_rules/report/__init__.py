from .formats import DEFAULT_FORMATS, FILE_NAMES, FORMATS, parse_formats
from .json_report import SCHEMA_VERSION, emit_json, rule_to_dict, rules_from_json
from .markdown_report import emit_markdown
from .html_report import emit_html
from .office import emit_pptx, emit_xlsx, get_workbook_class
from .views import NO_RULES_NOTICE, mark_html, mark_markdown
from .exceptions import ReportSchemaError, UnknownFormatError

EMITTERS = {
    "json": emit_json,
    "md": emit_markdown,
    "html": emit_html,
    "xlsx": emit_xlsx,
    "pptx": emit_pptx,
}
