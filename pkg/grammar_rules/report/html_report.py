import html
from functools import partial
from typing import Mapping, Optional

from ..evaluation import EvalReport
from ..ruleset import Rule
from ..templating import SafeText, process_loop, process_text
from . import templates
from .views import (
    NO_RULES_NOTICE,
    document_subtitle,
    document_title,
    mark_html,
    metric_rows,
    rule_view,
    split_rules,
)

escape = partial(html.escape, quote=True)


def _render(template: str, context: dict) -> SafeText:
    return SafeText(process_text(template, context, escape=escape))


def emit_html(
    rules: list[Rule],
    evaluation: Optional[EvalReport] = None,
    metadata: Optional[Mapping] = None,
) -> bytes:
    """
    Render rules as a single self-contained HTML page (inline styles, no external
    resources). The markup is also well-formed XML.
    """
    significant, uncertain = split_rules(rules)

    metrics = process_loop(
        templates.HTML_METRIC, metric_rows(evaluation), "metric", escape=escape
    )

    if significant:
        rules_html = SafeText("".join(_render_rule(rule) for rule in significant))
    else:
        rules_html = _render(templates.HTML_NOTICE, {"notice": NO_RULES_NOTICE})

    if uncertain:
        items = process_loop(
            templates.HTML_UNCERTAIN,
            [rule_view(rule, mark_html) for rule in uncertain],
            "rule",
            escape=escape,
        )
        uncertain_html = _render(templates.HTML_UNCERTAIN_LIST, {"items": items})
    else:
        uncertain_html = SafeText(templates.HTML_NONE)

    document = process_text(
        templates.HTML_DOCUMENT,
        {
            "title": document_title(evaluation, metadata),
            "subtitle": document_subtitle(metadata),
            "metrics": metrics,
            "rules": rules_html,
            "uncertain": uncertain_html,
        },
        escape=escape,
    )
    return document.encode("utf-8")


def _render_rule(rule: Rule) -> SafeText:
    view = rule_view(rule, mark_html)
    return _render(
        templates.HTML_RULE,
        {
            "rule": view,
            "conditions": process_loop(
                templates.HTML_CONDITION, view.conditions, "condition", escape=escape
            ),
            "positives": _examples(view.positives),
            "negatives": _examples(view.negatives),
        },
    )


def _examples(examples) -> SafeText:
    if not examples:
        return SafeText(templates.HTML_NONE)
    items = process_loop(templates.HTML_EXAMPLE, examples, "example", escape=escape)
    return _render(templates.HTML_EXAMPLES, {"items": items})
