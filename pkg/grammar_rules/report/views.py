"""
Presentation views shared by the text emitters.

Views turn rules and an evaluation report into plain values for the templates. Focus
words of every example are marked by a format-specific function: the first focus id is
the dependent, the second (if any) the head.
"""

import html
from dataclasses import dataclass
from typing import Callable, Mapping, Optional

from ..evaluation import EvalReport
from ..ruleset import ExampleRef, Rule
from ..templating import SafeText

NO_RULES_NOTICE = "No significant rules were found."

Marker = Callable[[ExampleRef], str]


def mark_markdown(example: ExampleRef) -> str:
    """Dependent in bold, head underlined."""
    roles = _roles(example)
    words = []
    for token_id, form in enumerate(example.forms, start=1):
        role = roles.get(token_id)
        if role == "dep":
            words.append(f"**{form}**")
        elif role == "head":
            words.append(f"<u>{form}</u>")
        else:
            words.append(form)
    return " ".join(words)


def mark_html(example: ExampleRef) -> SafeText:
    roles = _roles(example)
    words = []
    for token_id, form in enumerate(example.forms, start=1):
        role = roles.get(token_id)
        text = html.escape(form)
        words.append(f'<mark class="{role}">{text}</mark>' if role else text)
    return SafeText(" ".join(words))


def _roles(example: ExampleRef) -> dict[int, str]:
    return dict(zip(example.focus_ids, ("dep", "head")))


@dataclass(frozen=True)
class ExampleView:
    marked: str
    label: str
    sent_id: str


@dataclass(frozen=True)
class RuleView:
    title: str
    label: str
    majority_label: str
    p_value: float
    n: int
    support_text: str
    conditions: tuple[str, ...]
    positives: tuple[ExampleView, ...]
    negatives: tuple[ExampleView, ...]


@dataclass(frozen=True)
class Metric:
    name: str
    value: str


def rule_view(rule: Rule, mark: Marker) -> RuleView:
    return RuleView(
        title=rule.condition_text,
        label=rule.label,
        majority_label=rule.majority_label,
        p_value=rule.p_value,
        n=rule.n,
        support_text=", ".join(f"{label}: {count}" for label, count in rule.support),
        conditions=tuple(c.text for c in rule.conditions) or ("(no conditions)",),
        positives=tuple(_example_view(e, mark) for e in rule.positives),
        negatives=tuple(_example_view(e, mark) for e in rule.negatives),
    )


def _example_view(example: ExampleRef, mark: Marker) -> ExampleView:
    return ExampleView(
        marked=mark(example),
        label=example.label,
        sent_id=example.sent_id or str(example.sentence_index),
    )


def metric_rows(evaluation: Optional[EvalReport]) -> list[Metric]:
    if evaluation is None:
        return []
    rows = [
        Metric("Model accuracy", _percent(evaluation.model_accuracy)),
        Metric(
            "Baseline accuracy",
            f"{_percent(evaluation.baseline_accuracy)} ({evaluation.baseline_label})",
        ),
        Metric("Gain", f"{evaluation.gain * 100:+.1f} points"),
    ]
    if evaluation.entropy is not None:
        rows.append(Metric("Prediction entropy", f"{evaluation.entropy:.4f} bits"))
    if evaluation.arm is not None:
        rows.append(
            Metric("ARM", f"{_percent(evaluation.arm)} (tau = {evaluation.tau:g})")
        )
    if evaluation.validation_accuracy is not None:
        rows.append(
            Metric("Validation accuracy", _percent(evaluation.validation_accuracy))
        )
    if evaluation.params:
        params = evaluation.params
        rows.append(
            Metric(
                "Tree",
                f"{params['criterion']}, max depth {params['max_depth']}, "
                f"min leaf {params['min_leaf']}",
            )
        )
    rows.append(Metric("Test instances", str(evaluation.n_test)))
    rows.append(
        Metric(
            "Training sentences",
            f"{evaluation.n_train_sentences} ({evaluation.resource} resource)",
        )
    )
    return rows


def _percent(value: float) -> str:
    return f"{value * 100:.1f}%"


def document_title(
    evaluation: Optional[EvalReport], metadata: Optional[Mapping] = None
) -> str:
    metadata = metadata or {}
    task = evaluation.task if evaluation else metadata.get("task", "")
    key = evaluation.task_key if evaluation else metadata.get("task_key", "")
    title = " / ".join(str(part).replace("_", " ") for part in (task, key) if part)
    return f"Grammar rules: {title}" if title else "Grammar rules"


def document_subtitle(metadata: Optional[Mapping] = None) -> str:
    metadata = metadata or {}
    return " · ".join(
        f"{key}: {metadata[key]}"
        for key in ("treebank", "language", "features", "seed")
        if metadata.get(key) not in (None, "")
    )


def split_rules(rules: list[Rule]) -> tuple[list[Rule], list[Rule]]:
    """(significant, cannot-decide) rules, each in input order."""
    return (
        [rule for rule in rules if rule.significant],
        [rule for rule in rules if not rule.significant],
    )
