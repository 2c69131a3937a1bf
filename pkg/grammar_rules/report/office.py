"""
Office exports: an XLSX workbook (openpyxl, optional extra) and a PPTX deck (python-pptx).
"""

import io
from typing import Mapping, Optional

from pptx import Presentation
from pptx.util import Inches, Pt

from ..evaluation import EvalReport
from ..ruleset import ExampleRef, Rule
from ..templating import process_text
from .views import NO_RULES_NOTICE, document_title, metric_rows, split_rules

TITLE_LAYOUT = 0
TITLE_ONLY_LAYOUT = 5
MAX_TABLE_EXAMPLES = 5


def get_workbook_class():
    """
    Returns the Workbook class from openpyxl, imported lazily.

    Raises:
        ImportError: If openpyxl is not installed in the environment
    """
    try:
        from openpyxl import Workbook
    except ImportError:
        raise ImportError(
            "openpyxl is not installed. Install the 'xlsx' extra to export workbooks."
        )

    return Workbook


def emit_xlsx(
    rules: list[Rule],
    evaluation: Optional[EvalReport] = None,
    metadata: Optional[Mapping] = None,
) -> bytes:
    """Workbook with the sheets Rules, Examples and Evaluation."""
    Workbook = get_workbook_class()
    workbook = Workbook()

    sheet = workbook.active
    sheet.title = "Rules"
    sheet.append(["Leaf", "Conditions", "Label", "Majority", "p-value", "n", "Support"])
    for rule in rules:
        sheet.append(
            [
                rule.leaf_id,
                rule.condition_text,
                rule.label,
                rule.majority_label,
                rule.p_value,
                rule.n,
                _support_text(rule),
            ]
        )

    examples = workbook.create_sheet("Examples")
    examples.append(["Leaf", "Kind", "Sentence", "Focus ids", "Label", "Sentence id"])
    for rule in rules:
        for kind, refs in (("positive", rule.positives), ("negative", rule.negatives)):
            for example in refs:
                examples.append(
                    [
                        rule.leaf_id,
                        kind,
                        example.text,
                        " ".join(str(i) for i in example.focus_ids),
                        example.label,
                        example.sent_id,
                    ]
                )

    summary = workbook.create_sheet("Evaluation")
    summary.append(["Metric", "Value"])
    summary.append(["Title", document_title(evaluation, metadata)])
    for metric in metric_rows(evaluation):
        summary.append([metric.name, metric.value])
    if not any(rule.significant for rule in rules):
        summary.append(["Notice", NO_RULES_NOTICE])

    buffer = io.BytesIO()
    workbook.save(buffer)
    return buffer.getvalue()


def emit_pptx(
    rules: list[Rule],
    evaluation: Optional[EvalReport] = None,
    metadata: Optional[Mapping] = None,
) -> bytes:
    """A title slide with the metrics, then one slide per significant rule."""
    prs = Presentation()
    significant, _ = split_rules(rules)

    title_slide = prs.slides.add_slide(prs.slide_layouts[TITLE_LAYOUT])
    title_slide.shapes.title.text = document_title(evaluation, metadata)
    lines = [f"{metric.name}: {metric.value}" for metric in metric_rows(evaluation)]
    if not significant:
        lines.append(NO_RULES_NOTICE)
    title_slide.placeholders[1].text = "\n".join(lines)

    for rule in significant:
        slide = prs.slides.add_slide(prs.slide_layouts[TITLE_ONLY_LAYOUT])
        slide.shapes.title.text = rule.condition_text

        box = slide.shapes.add_textbox(Inches(0.5), Inches(1.4), Inches(9), Inches(1.2))
        frame = box.text_frame
        frame.word_wrap = True
        frame.text = process_text(
            "{{ rule.label | upper }}: support {{ support }}, p = {{ rule.p_value | .3g }}",
            {"rule": rule, "support": _support_text(rule)},
        )
        for condition in rule.conditions:
            paragraph = frame.add_paragraph()
            paragraph.text = condition.text
            paragraph.level = 1

        if rule.positives:
            _add_examples_table(slide, rule.positives[:MAX_TABLE_EXAMPLES])

    buffer = io.BytesIO()
    prs.save(buffer)
    return buffer.getvalue()


def _support_text(rule: Rule) -> str:
    return ", ".join(f"{label}: {count}" for label, count in rule.support)


def _add_examples_table(slide, examples: tuple[ExampleRef, ...]):
    rows = len(examples) + 1
    shape = slide.shapes.add_table(
        rows, 2, Inches(0.5), Inches(2.8), Inches(9), Inches(0.4) * rows
    )
    table = shape.table
    table.columns[0].width = Inches(7.5)
    table.columns[1].width = Inches(1.5)
    table.cell(0, 0).text = "Example"
    table.cell(0, 1).text = "Label"

    # one output per example: table mode expands the single placeholder over the list
    labels = process_text("{{ examples.label }}", {"examples": examples}, mode="table")
    for row, (example, label) in enumerate(zip(examples, labels), start=1):
        _write_marked(table.cell(row, 0), example)
        table.cell(row, 1).text = label


def _write_marked(cell, example: ExampleRef):
    """Dependent in bold, head underlined, as separate runs."""
    roles = dict(zip(example.focus_ids, ("dep", "head")))
    paragraph = cell.text_frame.paragraphs[0]
    for token_id, form in enumerate(example.forms, start=1):
        run = paragraph.add_run()
        run.text = form if token_id == len(example.forms) else form + " "
        run.font.size = Pt(12)
        if roles.get(token_id) == "dep":
            run.font.bold = True
        elif roles.get(token_id) == "head":
            run.font.underline = True
