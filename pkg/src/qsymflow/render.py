"""Text rendering of elements, tensors, tables, oracle checks and suite summaries."""

from jinja2 import Environment, StrictUndefined

from .qsym import QSymElement, TensorElement
from .schemas import ElementModel, ProductCheck, SuiteResult, TableModel, TensorModel

_env = Environment(undefined=StrictUndefined, trim_blocks=True, lstrip_blocks=True, keep_trailing_newline=False)

ELEMENT_TEMPLATE = _env.from_string("{% if label %}{{ label }} = {% endif %}{{ body }}")

TABLE_TEMPLATE = _env.from_string(
    """{{ kind }} (n={{ n }}{% if nu is not none %}, nu={{ nu }}{% endif %})
{{ "".ljust(row_width) }}{% for c in columns %} | {{ c.ljust(widths[loop.index0]) }}{% endfor %}

{% for label, row in body %}
{{ label.ljust(row_width) }}{% for e in row %} | {{ e.ljust(widths[loop.index0]) }}{% endfor %}

{% endfor %}"""
)

CHECK_TEMPLATE = _env.from_string(
    """oracle check {{ check.basis }} {{ check.alpha }} * {{ check.beta }} in {{ check.nvars }} variables: {{ "PASS" if check.passed else "FAIL" }}
{% for d in check.diffs %}
  {{ d.comp }}: rule {{ d.rule }} | oracle {{ d.oracle }}
{% endfor %}"""
)

SUITE_TEMPLATE = _env.from_string(
    """{{ result.suite }}: {{ "PASS" if result.passed else "FAIL" }} ({{ result.total - result.failed }}/{{ result.total }} cases)
{% for case in failures %}
  - {{ case.case_id }}{% for key, value in case.log.items() %} {{ key }}={{ value }}{% endfor %}

{% endfor %}"""
)


def render_element(x: QSymElement, label: str = "") -> str:
    return ELEMENT_TEMPLATE.render(label=label, body=str(x))


def render_tensor(x: TensorElement, label: str = "") -> str:
    return ELEMENT_TEMPLATE.render(label=label, body=str(x))


def render_table(table: TableModel) -> str:
    rows = list(zip(table.rows, table.entries))
    widths = [
        max([len(c)] + [len(row[j]) for _, row in rows])
        for j, c in enumerate(table.columns)
    ]
    row_width = max([len(r) for r in table.rows] + [0])
    return TABLE_TEMPLATE.render(
        kind=table.kind, n=table.n, nu=table.nu, columns=table.columns, widths=widths, row_width=row_width, body=rows
    ).rstrip()


def render_check(check: ProductCheck) -> str:
    return CHECK_TEMPLATE.render(check=check).rstrip()


def render_suite(result: SuiteResult) -> str:
    return SUITE_TEMPLATE.render(result=result, failures=result.failures()).rstrip()


def as_json(x) -> str:
    """JSON wire form of an element, tensor or schema model."""
    if isinstance(x, QSymElement):
        x = ElementModel.from_element(x)
    elif isinstance(x, TensorElement):
        x = TensorModel.from_tensor(x)
    return x.model_dump_json(indent=2)
