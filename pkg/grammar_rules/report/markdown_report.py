from typing import Mapping, Optional

from ..evaluation import EvalReport
from ..ruleset import Rule
from ..templating import process_loop, process_text
from . import templates
from .views import (
    NO_RULES_NOTICE,
    document_subtitle,
    document_title,
    mark_markdown,
    metric_rows,
    rule_view,
    split_rules,
)


def emit_markdown(
    rules: list[Rule],
    evaluation: Optional[EvalReport] = None,
    metadata: Optional[Mapping] = None,
) -> bytes:
    """
    Render rules as a CommonMark document.

    Significant rules get a section each, titled by their conditions; cannot-decide
    rules are listed briefly under "Uncertain".
    """
    significant, uncertain = split_rules(rules)

    metrics = metric_rows(evaluation)
    metrics_text = (
        templates.MARKDOWN_METRICS_HEADER
        + process_loop(templates.MARKDOWN_METRIC, metrics, "metric")
        if metrics
        else templates.MARKDOWN_NONE
    )

    if significant:
        rules_text = "\n".join(_render_rule(rule) for rule in significant)
    else:
        rules_text = process_text(templates.MARKDOWN_NOTICE, {"notice": NO_RULES_NOTICE})

    if uncertain:
        uncertain_text = process_loop(
            templates.MARKDOWN_UNCERTAIN,
            [rule_view(rule, mark_markdown) for rule in uncertain],
            "rule",
        )
    else:
        uncertain_text = templates.MARKDOWN_NONE

    document = process_text(
        templates.MARKDOWN_DOCUMENT,
        {
            "title": document_title(evaluation, metadata),
            "subtitle": document_subtitle(metadata) or "Extracted rules.",
            "metrics": metrics_text,
            "rules": rules_text,
            "uncertain": uncertain_text,
        },
    )
    return document.encode("utf-8")


def _render_rule(rule: Rule) -> str:
    view = rule_view(rule, mark_markdown)
    return process_text(
        templates.MARKDOWN_RULE,
        {
            "rule": view,
            "conditions": process_loop(
                templates.MARKDOWN_CONDITION, view.conditions, "condition"
            ),
            "positives": _examples(view.positives),
            "negatives": _examples(view.negatives),
        },
    )


def _examples(examples) -> str:
    if not examples:
        return templates.MARKDOWN_NONE
    return process_loop(templates.MARKDOWN_EXAMPLE, examples, "example")
