"""Templates of the Markdown and HTML rule reports."""

MARKDOWN_DOCUMENT = """# {{ title }}

{{ subtitle }}

## Evaluation

{{ metrics }}
## Rules

{{ rules }}
## Uncertain

{{ uncertain }}"""

MARKDOWN_METRICS_HEADER = "| Metric | Value |\n|---|---|\n"
MARKDOWN_METRIC = "| {{ metric.name }} | {{ metric.value }} |\n"

MARKDOWN_RULE = """### {{ rule.title }}

- Label: **{{ rule.label }}**
- Support: {{ rule.support_text }} (n = {{ rule.n }})
- p-value: {{ rule.p_value | .3g }}

Conditions:

{{ conditions }}
Examples following the rule:

{{ positives }}
Exceptions:

{{ negatives }}
"""

MARKDOWN_CONDITION = "- {{ condition }}\n"
MARKDOWN_EXAMPLE = "1. {{ example.marked }} ({{ example.label }})\n"
MARKDOWN_UNCERTAIN = (
    "- _{{ rule.title }}_: majority {{ rule.majority_label }}, "
    "support {{ rule.support_text }}, p = {{ rule.p_value | .3g }}\n"
)
MARKDOWN_NONE = "_None._\n"
MARKDOWN_NOTICE = "_{{ notice }}_\n"

HTML_STYLE = """body { font-family: sans-serif; max-width: 60em; margin: 2em auto; color: #222; }
table.metrics th { text-align: left; padding-right: 1em; }
section.rule { border-left: 4px solid #3a6ea5; padding-left: 1em; margin-bottom: 2em; }
mark.dep { background: #ffe08a; font-weight: bold; }
mark.head { background: #bfe3ff; text-decoration: underline; }
.uncertain { color: #777; }
.notice { font-style: italic; }
span.label { color: #555; font-size: 0.9em; }"""

HTML_DOCUMENT = (
    """<!DOCTYPE html>
<html lang="en">
<head>
<meta charset="utf-8"/>
<title>{{ title }}</title>
<style>
"""
    + HTML_STYLE
    + """
</style>
</head>
<body>
<h1>{{ title }}</h1>
<p class="meta">{{ subtitle }}</p>
<h2>Evaluation</h2>
<table class="metrics">
{{ metrics }}</table>
<h2>Rules</h2>
{{ rules }}<h2 class="uncertain">Uncertain</h2>
{{ uncertain }}</body>
</html>
"""
)

HTML_METRIC = "<tr><th>{{ metric.name }}</th><td>{{ metric.value }}</td></tr>\n"

HTML_RULE = """<section class="rule">
<h3>{{ rule.title }}</h3>
<p>Label: <strong>{{ rule.label }}</strong>, support {{ rule.support_text }} \
(n = {{ rule.n }}), p = {{ rule.p_value | .3g }}</p>
<ul class="conditions">
{{ conditions }}</ul>
<h4>Examples following the rule</h4>
{{ positives }}<h4>Exceptions</h4>
{{ negatives }}</section>
"""

HTML_CONDITION = "<li>{{ condition }}</li>\n"
HTML_EXAMPLES = '<ol class="examples">\n{{ items }}</ol>\n'
HTML_EXAMPLE = (
    '<li>{{ example.marked }} <span class="label">{{ example.label }}</span></li>\n'
)
HTML_UNCERTAIN_LIST = '<ul class="uncertain">\n{{ items }}</ul>\n'
HTML_UNCERTAIN = (
    "<li>{{ rule.title }}: majority {{ rule.majority_label }}, "
    "support {{ rule.support_text }}, p = {{ rule.p_value | .3g }}</li>\n"
)
HTML_NONE = '<p class="notice">None.</p>\n'
HTML_NOTICE = '<p class="notice">{{ notice }}</p>\n'
