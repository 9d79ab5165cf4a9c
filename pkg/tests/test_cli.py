import json

import pytest

from qsymflow.cli import main
from qsymflow.coeff import q, t
from qsymflow.exceptions import BasisMismatchError, ParseError
from qsymflow.oracle import verify_product
from qsymflow.qsym import M_TAG, BasisTag, QSymElement
from qsymflow.render import as_json, render_check, render_suite, render_table
from qsymflow.schemas import CaseResult, SuiteResult
from qsymflow.syntax import parse_element, parse_point
from qsymflow.tables import table_as_element_rows, transition_table


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out.strip()


def test_parse_inline_elements():
    x = parse_element("2*L[1,2] - (q + t)*L[3]")
    assert x.coefficient((1, 2)) == 2 and x.coefficient((3,)) == -q - t
    assert parse_element("M[]") == QSymElement.unit(BasisTag(name="M"))
    assert parse_element("K[2,1](nu=3)").basis == BasisTag(name="K", nu=3)


def test_printed_and_json_forms_parse_back():
    tag = BasisTag(name="D")
    x = QSymElement(tag, {(2, 1): -1, (3,): (q + t) / q, (1, 1, 1): 2})
    assert parse_element(str(x)) == x
    assert parse_element(as_json(x)) == x


@pytest.mark.parametrize("text", ["D[2,0]", "Z[1]", "D[1] D[2]", "D[1] + x*D[2]", "K[1]", "{\"basis\": 3}", "D[1] extra"])
def test_parse_failures(text):
    with pytest.raises(ParseError):
        parse_element(text)


def test_mixed_bases_rejected():
    with pytest.raises(BasisMismatchError):
        parse_element("D[1] + M[1]")


def test_parse_point():
    assert parse_point("q=1/2,t=-1") == {"q": 0.5, "t": -1}
    assert parse_point("q=0") == {"q": 0}
    with pytest.raises(ParseError):
        parse_point("q=1,q=2")


def test_expand(capsys):
    code, out = run(capsys, "expand", "G[1,2,1]", "--to", "L", "--at", "q=0")
    assert code == 0 and out == "L[1,2,1]"
    code, out = run(capsys, "expand", "M[]", "--to", "D")
    assert code == 0 and out == "D[]"
    code, out = run(capsys, "expand", "D[2,1]", "--to", "M")
    assert code == 0 and "M[2,1]" in out and "M[3]" in out


def test_mul_with_oracle(capsys):
    code, out = run(capsys, "mul", "M[1]", "M[1]", "--check-oracle")
    assert code == 0 and out == "M[2] + 2*M[1,1]"
    code, out = run(capsys, "mul", "D[1]", "D[1]", "--basis", "L", "--output", "json")
    assert code == 0 and json.loads(out)["basis"] == "L"


def test_usage_errors(capsys):
    assert main(["mul", "D[1]", "M[1]"]) == 2
    assert main(["expand", "D[1", "--to", "M"]) == 2
    assert main(["verify", "no-such-suite"]) == 2
    assert main(["table", "L-to-K", "--n", "3"]) == 2
    assert main(["expand", "D[2,1]", "--to", "M", "--at", "q=0"]) == 2
    with pytest.raises(SystemExit) as info:
        main(["table", "wt"])
    assert info.value.code == 2


def test_comul_and_antipode(capsys):
    code, out = run(capsys, "comul", "M[1,2]")
    assert code == 0 and out == "M[] ⊗ M[1,2] + M[1] ⊗ M[2] + M[1,2] ⊗ M[]"
    code, out = run(capsys, "antipode", "M[1,2]")
    assert code == 0 and out == "M[3] + M[2,1]"


def test_verify(capsys):
    code, out = run(capsys, "verify", "positivity", "--max-grade", "3", "--output", "json")
    assert code == 0
    assert json.loads(out)["passed"] is True


def test_tables(capsys):
    code, out = run(capsys, "table", "wt", "--n", "4", "--output", "json")
    table = json.loads(out)
    assert code == 0
    assert table["rows"] == ["{}", "{1}", "{2}", "{3}", "{1,2}", "{1,3}", "{2,3}", "{1,2,3}"]
    assert table["entries"][5] == ["1", "2", "2"]
    g_to_l = transition_table("G-to-L", 3)
    assert all(g_to_l.entries[i][i] == "1" for i in range(len(g_to_l.rows)))


def test_kappa_tables_are_inverse():
    forward = table_as_element_rows(transition_table("L-to-K", 3, 2))
    backward = table_as_element_rows(transition_table("K-to-L", 3, 2))
    for alpha, row in forward.items():
        total = QSymElement(BasisTag(name="L"))
        for beta, c in row.terms.items():
            total = total + backward[beta].scale(c)
        assert total == QSymElement.basis_element(BasisTag(name="L"), alpha)


@pytest.mark.parametrize("n", [3, 4])
def test_hall_littlewood_tables_are_inverse(n):
    forward = table_as_element_rows(transition_table("L-to-G", n))
    backward = table_as_element_rows(transition_table("G-to-L", n))
    for alpha, row in forward.items():
        total = QSymElement(BasisTag(name="L"))
        for beta, c in row.terms.items():
            total = total + backward[beta].scale(c)
        assert total == QSymElement.basis_element(BasisTag(name="L"), alpha)


def test_fundamental_to_hall_littlewood_table():
    table = transition_table("L-to-G", 3)
    assert table.rows == ["{}", "{1}", "{2}", "{1,2}"]
    assert table.entries[0] == ["1", "q", "q", "q^3"]
    assert table.entries[1] == ["0", "1", "0", "q^2"]
    assert table.entries[2] == ["0", "0", "1", "q"]

def test_render_weight_table():
    lines = render_table(transition_table("wt", 3)).splitlines()
    assert lines[0] == "wt (n=3)"
    assert len(lines) == 6
    assert [cell.strip() for cell in lines[1].split("|")] == ["", "1", "2"]
    assert [cell.strip() for cell in lines[3].split("|")] == ["{1}", "1", "2"]
    assert [cell.strip() for cell in lines[5].split("|")] == ["{1,2}", "1", "2"]


def test_render_check_and_suite():
    check = verify_product(M_TAG, (1,), (1,))
    assert render_check(check) == "oracle check M [1] * [1] in 2 variables: PASS"

    result = SuiteResult(
        suite="demo",
        cases=[
            CaseResult(case_id="a", passed=True, log={}, metrics={}),
            CaseResult(case_id="b", passed=False, log={"error": "boom"}, metrics={}),
        ],
    )
    assert render_suite(result) == "demo: FAIL (1/2 cases)\n  - b error=boom"
