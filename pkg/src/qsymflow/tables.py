"""
Weight tables and transition matrices in grade n.

Rows and columns are indexed by subsets of [n-1] in (size, lex) order; entry (I, J) is the
coefficient of the column basis element on comp(J) in the expansion of the row basis
element on comp(I).
"""

from typing import Callable, Dict, Optional

from .coeff import format_ratfunc, parse_ratfunc
from .combinat import Subset, comp_of, set_of, subsets, wt
from .exceptions import QSymError
from .load_basis import load_basis
from .qsym import M_TAG, BasisTag, QSymElement, convert, to_M
from .schemas import TableModel

TABLE_KINDS = ("wt", "L-to-K", "K-to-L", "G-to-L", "L-to-G", "D-to-M")
NEEDS_NU = ("L-to-K", "K-to-L")
G_TAG = BasisTag(name="G")


def _label(S) -> str:
    return "{" + ",".join(map(str, sorted(S))) + "}"


def _by_rule(tag: BasisTag, rule: str) -> Callable[[Subset, int], Dict[Subset, object]]:
    """Rows read straight off a basis rule: "expand" into its route basis, "collect" out of it."""
    basis = load_basis(tag)

    def row(I: Subset, n: int):
        terms = getattr(basis, f"{rule}_term")(comp_of(I, n))
        return {set_of(alpha): c for alpha, c in terms.items()}

    return row


def _by_conversion(source: BasisTag, target: BasisTag) -> Callable[[Subset, int], Dict[Subset, object]]:
    def row(I: Subset, n: int):
        x = QSymElement.basis_element(source, comp_of(I, n))
        y = to_M(x) if target == M_TAG else convert(x, target)
        return {set_of(alpha): c for alpha, c in y.terms.items()}

    return row


def transition_table(kind: str, n: int, nu: Optional[int] = None) -> TableModel:
    if kind not in TABLE_KINDS:
        raise QSymError(f"unknown table {kind!r}, expected one of {list(TABLE_KINDS)}")
    if n < 0:
        raise QSymError("the grade n must be nonnegative")
    labels = subsets(max(n - 1, 0))
    if kind == "wt":
        columns = list(range(1, n))
        entries = [[str(wt(I, i)) for i in columns] for I in labels]
        return TableModel(kind=kind, n=n, rows=[_label(I) for I in labels], columns=[str(i) for i in columns], entries=entries)

    if kind in NEEDS_NU:
        if nu is None:
            raise QSymError(f"table {kind} needs --nu")
        K = load_basis("K", nu=nu)
        raw = K.l_to_k_row if kind == "L-to-K" else K.k_to_l_row

        def row_of(I, n):
            return {set_of(alpha): c for alpha, c in raw(I, n).items()}
    elif kind == "G-to-L":
        row_of = _by_rule(G_TAG, "expand")
    elif kind == "L-to-G":
        row_of = _by_rule(G_TAG, "collect")
    else:
        row_of = _by_conversion(BasisTag(name="D"), M_TAG)

    entries = []
    for I in labels:
        row = row_of(I, n)
        entries.append([format_ratfunc(row.get(J, 0)) for J in labels])
    return TableModel(
        kind=kind,
        n=n,
        nu=nu if kind in NEEDS_NU else None,
        rows=[_label(I) for I in labels],
        columns=[_label(J) for J in labels],
        entries=entries,
    )


def table_as_element_rows(table: TableModel):
    """Rows of a transition table as elements of the column basis, for checking tables against conversion."""
    column_basis = {"L-to-K": "K", "K-to-L": "L", "G-to-L": "L", "L-to-G": "G", "D-to-M": "M"}
    if table.kind not in column_basis:
        raise QSymError(f"table {table.kind} has no column basis")
    name = column_basis[table.kind]
    tag = BasisTag(name=name, nu=table.nu if name == "K" else None)
    labels = subsets(max(table.n - 1, 0))
    return {
        comp_of(I, table.n): QSymElement(tag, {comp_of(J, table.n): parse_ratfunc(e) for J, e in zip(labels, row)})
        for I, row in zip(labels, table.entries)
    }
