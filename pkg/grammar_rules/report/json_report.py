"""
JSON rule documents.

Layout (keys in this order):

    schema_version   int
    metadata         run metadata, keys sorted
    task, task_key   from the evaluation report (or metadata)
    params           training parameters of the tree, or null
    evaluation       EvalReport fields plus "gain", or null
    rules            significant rules, in leaf order
    uncertain_rules  cannot-decide rules, in leaf order
    notice           only present when no rule is significant
"""

import json
from typing import Any, Mapping, Optional

from ..evaluation import EvalReport
from ..ruleset import Condition, ExampleRef, Rule
from .exceptions import ReportSchemaError
from .views import NO_RULES_NOTICE, split_rules

SCHEMA_VERSION = 1


def emit_json(
    rules: list[Rule],
    evaluation: Optional[EvalReport] = None,
    metadata: Optional[Mapping[str, Any]] = None,
) -> bytes:
    metadata = dict(sorted((metadata or {}).items()))
    significant, uncertain = split_rules(rules)

    document: dict[str, Any] = {
        "schema_version": SCHEMA_VERSION,
        "metadata": metadata,
        "task": evaluation.task if evaluation else metadata.get("task"),
        "task_key": evaluation.task_key if evaluation else metadata.get("task_key"),
        "params": evaluation.params if evaluation else None,
        "evaluation": evaluation.to_dict() if evaluation else None,
        "rules": [rule_to_dict(rule) for rule in significant],
        "uncertain_rules": [rule_to_dict(rule) for rule in uncertain],
    }
    if not significant:
        document["notice"] = NO_RULES_NOTICE

    return (json.dumps(document, ensure_ascii=False, indent=2) + "\n").encode("utf-8")


def rule_to_dict(rule: Rule) -> dict:
    return {
        "leaf_id": rule.leaf_id,
        "text": rule.text,
        "label": rule.label,
        "majority_label": rule.majority_label,
        "significant": rule.significant,
        "p_value": rule.p_value,
        "support": [{"label": label, "count": count} for label, count in rule.support],
        "conditions": [
            {
                "feature": c.feature,
                "display": c.display,
                "test": c.test,
                "threshold": c.threshold,
                "text": c.text,
            }
            for c in rule.conditions
        ],
        "positives": [_example_to_dict(e) for e in rule.positives],
        "negatives": [_example_to_dict(e) for e in rule.negatives],
    }


def _example_to_dict(example: ExampleRef) -> dict:
    return {
        "sentence_index": example.sentence_index,
        "sent_id": example.sent_id,
        "text": example.text,
        "forms": list(example.forms),
        "focus_ids": list(example.focus_ids),
        "label": example.label,
    }


def rules_from_json(document: bytes | str | Mapping[str, Any]) -> list[Rule]:
    """
    Rebuild the rules of an emit_json document, significant and uncertain together,
    ordered by leaf id.

    Raises:
      ReportSchemaError: If the document has another schema version or lacks rules.
    """
    if isinstance(document, (bytes, str)):
        document = json.loads(document)
    if document.get("schema_version") != SCHEMA_VERSION:
        raise ReportSchemaError(
            f"Unsupported schema version {document.get('schema_version')!r}"
        )
    try:
        items = list(document["rules"]) + list(document.get("uncertain_rules", []))
        rules = [_rule_from_dict(item) for item in items]
    except (KeyError, TypeError) as e:
        raise ReportSchemaError(f"Malformed rule in document: {e}")
    return sorted(rules, key=lambda rule: rule.leaf_id)


def _rule_from_dict(data: Mapping[str, Any]) -> Rule:
    return Rule(
        conditions=tuple(
            Condition(
                feature=c["feature"],
                display=c["display"],
                test=c["test"],
                threshold=c.get("threshold"),
            )
            for c in data["conditions"]
        ),
        label=data["label"],
        majority_label=data["majority_label"],
        p_value=data["p_value"],
        support=tuple((s["label"], s["count"]) for s in data["support"]),
        leaf_id=data["leaf_id"],
        positives=tuple(_example_from_dict(e) for e in data["positives"]),
        negatives=tuple(_example_from_dict(e) for e in data["negatives"]),
    )


def _example_from_dict(data: Mapping[str, Any]) -> ExampleRef:
    return ExampleRef(
        sentence_index=data["sentence_index"],
        forms=tuple(data["forms"]),
        focus_ids=tuple(data["focus_ids"]),
        label=data["label"],
        sent_id=data.get("sent_id"),
    )
