import importlib.util
import io
import json
import unittest
import xml.etree.ElementTree as ET

from pptx import Presentation

from grammar_rules.evaluation import EvalReport
from grammar_rules.report import (
    DEFAULT_FORMATS,
    EMITTERS,
    FILE_NAMES,
    NO_RULES_NOTICE,
    ReportSchemaError,
    UnknownFormatError,
    emit_html,
    emit_json,
    emit_markdown,
    emit_pptx,
    emit_xlsx,
    mark_html,
    mark_markdown,
    parse_formats,
    rules_from_json,
)
from grammar_rules.ruleset import ABSENT, AT_LEAST, PRESENT, Condition, ExampleRef, Rule

HAS_OPENPYXL = importlib.util.find_spec("openpyxl") is not None


def example(index, forms, focus_ids, label):
    return ExampleRef(
        sentence_index=index,
        forms=tuple(forms),
        focus_ids=tuple(focus_ids),
        label=label,
        sent_id=f"s{index}",
    )


def sample_rules():
    ordinal = Condition("dep-numtype-is-ord", "dep-numtype-is-ord", PRESENT)
    return [
        Rule(
            conditions=(Condition("dep-numtype-is-ord", "dep-numtype-is-ord", ABSENT),),
            label="cannot-decide",
            majority_label="after",
            p_value=0.21,
            support=(("after", 6), ("before", 4)),
            leaf_id=1,
        ),
        Rule(
            conditions=(
                ordinal,
                Condition("dep-dim3", "dep-word-is-like=<x&y>", AT_LEAST, 0.45),
            ),
            label="before",
            majority_label="before",
            p_value=0.000123,
            support=(("after", 1), ("before", 30)),
            leaf_id=3,
            positives=(example(4, ["el", "primer", "<libro>"], [2, 3], "before"),),
            negatives=(example(9, ["casa", "tercera", "&"], [2, 1], "after"),),
        ),
    ]


def sample_evaluation():
    return EvalReport(
        task="word_order",
        task_key="adjective-noun",
        model_accuracy=0.95,
        baseline_accuracy=0.6,
        baseline_label="after",
        n_test=200,
        n_train_sentences=1600,
        resource="mid",
        params={"criterion": "gini", "max_depth": 3, "min_leaf": 1},
        validation_accuracy=0.97,
        entropy=0.98,
    )


METADATA = {"treebank": "synthetic_adjective-noun", "language": "xx", "seed": 7}


class TestMarkers(unittest.TestCase):
    def test_markdown(self):
        ref = example(0, ["el", "primer", "libro"], [2, 3], "before")
        self.assertEqual(mark_markdown(ref), "el **primer** <u>libro</u>")

    def test_html(self):
        ref = example(0, ["a&b", "libro"], [1], "after")
        self.assertEqual(mark_html(ref), '<mark class="dep">a&amp;b</mark> libro')


class TestFormats(unittest.TestCase):
    def test_parse(self):
        self.assertEqual(parse_formats("json, md"), ("json", "md"))
        self.assertEqual(parse_formats("all"), DEFAULT_FORMATS)
        self.assertEqual(parse_formats(["pptx", "json", "pptx"]), ("pptx", "json"))
        with self.assertRaises(UnknownFormatError):
            parse_formats("json,pdf")
        with self.assertRaises(UnknownFormatError):
            parse_formats("")

    def test_every_format_has_an_emitter(self):
        self.assertEqual(set(EMITTERS), set(FILE_NAMES))


class TestJsonReport(unittest.TestCase):
    def test_document(self):
        document = json.loads(emit_json(sample_rules(), sample_evaluation(), METADATA))
        self.assertEqual(
            list(document),
            [
                "schema_version",
                "metadata",
                "task",
                "task_key",
                "params",
                "evaluation",
                "rules",
                "uncertain_rules",
            ],
        )
        self.assertEqual(list(document["metadata"]), ["language", "seed", "treebank"])
        self.assertEqual(document["task_key"], "adjective-noun")
        self.assertAlmostEqual(document["evaluation"]["gain"], 0.35)
        self.assertEqual([rule["leaf_id"] for rule in document["rules"]], [3])
        self.assertEqual(
            document["rules"][0]["text"],
            "dep-numtype-is-ord AND dep-word-is-like=<x&y> ≥ 0.45 → before",
        )
        self.assertEqual(
            document["rules"][0]["support"],
            [{"label": "after", "count": 1}, {"label": "before", "count": 30}],
        )
        self.assertEqual(document["uncertain_rules"][0]["label"], "cannot-decide")

    def test_notice_without_significant_rules(self):
        document = json.loads(emit_json(sample_rules()[:1]))
        self.assertEqual(document["notice"], NO_RULES_NOTICE)
        self.assertIsNone(document["evaluation"])
        self.assertEqual(document["rules"], [])

    def test_deterministic(self):
        first = emit_json(sample_rules(), sample_evaluation(), METADATA)
        shuffled = dict(reversed(METADATA.items()))
        second = emit_json(sample_rules(), sample_evaluation(), shuffled)
        self.assertEqual(first, second)

    def test_rules_from_json(self):
        rules = sample_rules()
        self.assertEqual(rules_from_json(emit_json(rules, sample_evaluation())), rules)

    def test_schema_errors(self):
        with self.assertRaises(ReportSchemaError):
            rules_from_json({"schema_version": 99, "rules": []})
        with self.assertRaises(ReportSchemaError):
            rules_from_json({"schema_version": 1})
        with self.assertRaises(ReportSchemaError):
            rules_from_json({"schema_version": 1, "rules": [{"leaf_id": 1}]})


class TestMarkdownReport(unittest.TestCase):
    def test_sections(self):
        data = emit_markdown(sample_rules(), sample_evaluation(), METADATA)
        text = data.decode("utf-8")
        self.assertTrue(text.startswith("# Grammar rules: word order / adjective-noun\n"))
        for heading in ("## Evaluation", "## Rules", "## Uncertain"):
            self.assertIn(heading, text)
        self.assertIn("### dep-numtype-is-ord AND dep-word-is-like=<x&y> ≥ 0.45", text)
        self.assertIn("- Label: **before**", text)
        self.assertIn("- p-value: 0.000123", text)
        self.assertIn("| Model accuracy | 95.0% |", text)
        self.assertIn("| Baseline accuracy | 60.0% (after) |", text)
        self.assertIn("1. el **primer** <u><libro></u> (before)", text)
        self.assertIn("1. <u>casa</u> **tercera** & (after)", text)
        self.assertIn("- _NOT (dep-numtype-is-ord)_: majority after", text)

    def test_no_rules(self):
        text = emit_markdown([]).decode("utf-8")
        self.assertIn(f"_{NO_RULES_NOTICE}_", text)
        self.assertIn("# Grammar rules\n", text)


class TestHtmlReport(unittest.TestCase):
    def test_well_formed_and_escaped(self):
        data = emit_html(sample_rules(), sample_evaluation(), METADATA)
        root = ET.fromstring(data)
        self.assertEqual(root.tag, "html")

        text = data.decode("utf-8")
        self.assertIn("dep-word-is-like=&lt;x&amp;y&gt; ≥ 0.45", text)
        self.assertIn('<mark class="head">&lt;libro&gt;</mark>', text)
        self.assertIn('<mark class="dep">tercera</mark> &amp;', text)
        self.assertNotIn("<x&y>", text)
        self.assertNotIn("http", text)

    def test_no_rules(self):
        data = emit_html(sample_rules()[:1])
        ET.fromstring(data)
        self.assertIn(NO_RULES_NOTICE, data.decode("utf-8"))


class TestOfficeReports(unittest.TestCase):
    def test_pptx(self):
        prs = Presentation(io.BytesIO(emit_pptx(sample_rules(), sample_evaluation())))
        slides = list(prs.slides)
        # title slide plus one slide per significant rule
        self.assertEqual(len(slides), 2)
        self.assertEqual(
            slides[0].shapes.title.text, "Grammar rules: word order / adjective-noun"
        )
        self.assertTrue(slides[1].shapes.title.text.startswith("dep-numtype-is-ord AND"))
        tables = [shape.table for shape in slides[1].shapes if shape.has_table]
        self.assertEqual(len(tables), 1)
        self.assertEqual(tables[0].cell(1, 0).text, "el primer <libro>")
        self.assertEqual(tables[0].cell(1, 1).text, "before")

    def test_pptx_without_rules(self):
        prs = Presentation(io.BytesIO(emit_pptx([])))
        slides = list(prs.slides)
        self.assertEqual(len(slides), 1)
        self.assertIn(NO_RULES_NOTICE, slides[0].placeholders[1].text)

    @unittest.skipUnless(HAS_OPENPYXL, "openpyxl is not installed")
    def test_xlsx(self):
        from openpyxl import load_workbook

        data = emit_xlsx(sample_rules(), sample_evaluation())
        workbook = load_workbook(io.BytesIO(data))
        self.assertEqual(workbook.sheetnames, ["Rules", "Examples", "Evaluation"])
        rules = list(workbook["Rules"].iter_rows(values_only=True))
        self.assertEqual(len(rules), 3)
        self.assertEqual(rules[2][2], "before")
        examples = list(workbook["Examples"].iter_rows(values_only=True))
        self.assertEqual(examples[1][1:3], ("positive", "el primer <libro>"))


if __name__ == "__main__":
    unittest.main()
