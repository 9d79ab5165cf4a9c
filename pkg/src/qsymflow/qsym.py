"""
The graded Hopf algebra QSym over Q(q, t).

Elements are sparse maps from compositions to RatFunc coefficients tagged with a basis.
Per-basis rules live in `qsymflow.bases`; this module holds the element types and the
basis-independent operations built on top of them.
"""

import logging
from collections import defaultdict
from typing import Dict, Iterable, Literal, Mapping, Optional, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from .coeff import ONE, ZERO, RatFunc, Scalar, accumulate, const, format_ratfunc, q, substitute, t
from .combinat import (
    Composition,
    check_composition,
    coarsenings,
    comp_of,
    reverse,
    sort_key,
    subsets,
)
from .exceptions import BasisMismatchError

logger = logging.getLogger(__name__)

BasisName = Literal["M", "L", "E", "LambdaStar", "Eta", "EtaQ", "D", "G", "Mq", "K"]
BASIS_NAMES: Tuple[str, ...] = ("M", "L", "E", "LambdaStar", "Eta", "EtaQ", "D", "G", "Mq", "K")


class BasisTag(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: BasisName
    nu: Optional[int] = None

    @model_validator(mode="after")
    def check_nu(self):
        if self.name == "K":
            if self.nu is None or self.nu < 2:
                raise ValueError("the K basis needs an integer ν >= 2")
        elif self.nu is not None:
            raise ValueError(f"basis {self.name} takes no ν")
        return self

    def __str__(self):
        return f"K(nu={self.nu})" if self.name == "K" else self.name


M_TAG = BasisTag(name="M")
L_TAG = BasisTag(name="L")


def _format_terms(items, render) -> str:
    if not items:
        return "0"
    out = []
    for key, c in items:
        text = format_ratfunc(c)
        body = render(key)
        if text == "1":
            term = body
        elif text == "-1":
            term = f"-{body}"
        elif any(op in text.lstrip("-") for op in "+-/ "):
            term = f"({text})*{body}"
        else:
            term = f"{text}*{body}"
        if out:
            out.append(f" - {term[1:]}" if term.startswith("-") else f" + {term}")
        else:
            out.append(term)
    return "".join(out)


class QSymElement:
    def __init__(self, basis: BasisTag, terms: Optional[Mapping[Iterable[int], Scalar]] = None):
        self.basis = basis
        self.terms: Dict[Composition, RatFunc] = {}
        for alpha, c in (terms or {}).items():
            accumulate(self.terms, check_composition(alpha), c)

    @classmethod
    def basis_element(cls, basis: BasisTag, alpha: Iterable[int], coeff: Scalar = 1) -> "QSymElement":
        return cls(basis, {tuple(alpha): coeff})

    @classmethod
    def unit(cls, basis: BasisTag) -> "QSymElement":
        return cls(basis, {(): ONE})

    def _check(self, other: "QSymElement") -> None:
        if self.basis != other.basis:
            raise BasisMismatchError(f"elements in different bases: {self.basis} and {other.basis}")

    def __add__(self, other: "QSymElement") -> "QSymElement":
        self._check(other)
        out = QSymElement(self.basis, self.terms)
        for alpha, c in other.terms.items():
            accumulate(out.terms, alpha, c)
        return out

    def __neg__(self) -> "QSymElement":
        return self.scale(-1)

    def __sub__(self, other: "QSymElement") -> "QSymElement":
        return self + (-other)

    def scale(self, c: Scalar) -> "QSymElement":
        c = const(c)
        return QSymElement(self.basis, {alpha: c * v for alpha, v in self.terms.items()})

    def __mul__(self, other: "QSymElement") -> "QSymElement":
        return mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, QSymElement):
            return NotImplemented
        return self.basis == other.basis and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, alpha: Iterable[int]) -> RatFunc:
        return self.terms.get(tuple(alpha), ZERO)

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: sort_key(kv[0]))

    def grades(self) -> Tuple[int, ...]:
        return tuple(sorted({sum(alpha) for alpha in self.terms}))

    def grade_part(self, n: int) -> "QSymElement":
        return QSymElement(self.basis, {a: c for a, c in self.terms.items() if sum(a) == n})

    def counit(self) -> RatFunc:
        return self.coefficient(())

    def map_coefficients(self, f) -> "QSymElement":
        return QSymElement(self.basis, {a: f(c) for a, c in self.terms.items()})

    def __str__(self):
        prefix = self.basis.name
        suffix = f"(nu={self.basis.nu})" if self.basis.nu is not None else ""
        return _format_terms(self.items(), lambda a: f"{prefix}[{','.join(map(str, a))}]{suffix}")

    def __repr__(self):
        return f"QSymElement({self.basis}, {self})"


class TensorElement:
    def __init__(
        self,
        left: BasisTag,
        right: BasisTag,
        terms: Optional[Mapping[Tuple[Iterable[int], Iterable[int]], Scalar]] = None,
    ):
        self.left, self.right = left, right
        self.terms: Dict[Tuple[Composition, Composition], RatFunc] = {}
        for (a, b), c in (terms or {}).items():
            accumulate(self.terms, (check_composition(a), check_composition(b)), c)

    @classmethod
    def simple(cls, x: QSymElement, y: QSymElement) -> "TensorElement":
        terms = {(a, b): ca * cb for a, ca in x.terms.items() for b, cb in y.terms.items()}
        return cls(x.basis, y.basis, terms)

    def _check(self, other: "TensorElement") -> None:
        if (self.left, self.right) != (other.left, other.right):
            raise BasisMismatchError("tensors in different bases")

    def __add__(self, other: "TensorElement") -> "TensorElement":
        self._check(other)
        out = TensorElement(self.left, self.right, self.terms)
        for key, c in other.terms.items():
            accumulate(out.terms, key, c)
        return out

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + other.scale(-1)

    def scale(self, c: Scalar) -> "TensorElement":
        c = const(c)
        return TensorElement(self.left, self.right, {k: c * v for k, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return (self.left, self.right, self.terms) == (other.left, other.right, other.terms)

    def __bool__(self):
        return bool(self.terms)

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: (sort_key(kv[0][0]), sort_key(kv[0][1])))

    def map_coefficients(self, f) -> "TensorElement":
        return TensorElement(self.left, self.right, {k: f(c) for k, c in self.terms.items()})

    def __str__(self):
        def render(key):
            a, b = key
            return f"{self.left.name}[{','.join(map(str, a))}] ⊗ {self.right.name}[{','.join(map(str, b))}]"

        return _format_terms(self.items(), render)

    def __repr__(self):
        return f"TensorElement({self.left} ⊗ {self.right}, {self})"


def _basis(tag: BasisTag):
    from .load_basis import load_basis

    return load_basis(tag)


# Basis changes

def to_M(x: QSymElement) -> QSymElement:
    return _basis(x.basis).to_M(x)


def from_M(x: QSymElement, target: BasisTag) -> QSymElement:
    if x.basis != M_TAG:
        raise BasisMismatchError(f"from_M expects an M-expansion, got {x.basis}")
    return _basis(target).from_M(x)


def convert(x: QSymElement, target: BasisTag) -> QSymElement:
    if x.basis == target:
        return x
    source, goal = _basis(x.basis), _basis(target)
    if source.via == "L" and target == L_TAG:
        return source.to_via(x)
    if goal.via == "L" and x.basis == L_TAG:
        return goal.from_via(x)
    return goal.from_M(source.to_M(x))


def tensor_convert(x: TensorElement, left: BasisTag, right: Optional[BasisTag] = None) -> TensorElement:
    """Apply convert on both tensor factors."""
    right = right or left
    out = TensorElement(left, right)
    left_cache: Dict[Composition, QSymElement] = {}
    right_cache: Dict[Composition, QSymElement] = {}
    for (a, b), c in x.terms.items():
        if a not in left_cache:
            left_cache[a] = convert(QSymElement.basis_element(x.left, a), left)
        if b not in right_cache:
            right_cache[b] = convert(QSymElement.basis_element(x.right, b), right)
        out = out + TensorElement.simple(left_cache[a], right_cache[b]).scale(c)
    return out


# Hopf structure

def mul(x: QSymElement, y: QSymElement, basis: Optional[BasisTag] = None) -> QSymElement:
    basis = basis or x.basis
    if x.basis != basis or y.basis != basis:
        raise BasisMismatchError(f"product rule of {basis} asked for {x.basis} · {y.basis}")
    return _basis(basis).product(x, y)


def comul(x: QSymElement, basis: Optional[BasisTag] = None) -> TensorElement:
    basis = basis or x.basis
    if x.basis != basis:
        raise BasisMismatchError(f"coproduct rule of {basis} asked for {x.basis}")
    return _basis(basis).coproduct(x)


def counit(x: QSymElement) -> RatFunc:
    return x.counit()


def antipode_M(x: QSymElement) -> QSymElement:
    """S(M_α) = (-1)^{ℓ(α)} Σ_{γ ⪰ α^r} M_γ."""
    if x.basis != M_TAG:
        raise BasisMismatchError(f"antipode_M expects the M basis, got {x.basis}")
    out: Dict[Composition, RatFunc] = {}
    for alpha, c in x.terms.items():
        sign = -c if len(alpha) % 2 else c
        for gamma in coarsenings(reverse(alpha)):
            accumulate(out, gamma, sign)
    return QSymElement(M_TAG, out)


def antipode(x: QSymElement) -> QSymElement:
    return convert(antipode_M(to_M(x)), x.basis)


def tensor_mul(x: TensorElement, y: TensorElement) -> TensorElement:
    """(a ⊗ b)(c ⊗ d) = ac ⊗ bd."""
    out = TensorElement(x.left, x.right)
    for (a, b), c1 in x.terms.items():
        for (c, d), c2 in y.terms.items():
            left = mul(QSymElement.basis_element(x.left, a), QSymElement.basis_element(y.left, c))
            right = mul(QSymElement.basis_element(x.right, b), QSymElement.basis_element(y.right, d))
            out = out + TensorElement.simple(left, right).scale(c1 * c2)
    return out


def counit_left(x: TensorElement) -> QSymElement:
    """(ε ⊗ id)(x)."""
    return QSymElement(x.right, {b: c for (a, b), c in x.terms.items() if not a})


def counit_right(x: TensorElement) -> QSymElement:
    """(id ⊗ ε)(x)."""
    return QSymElement(x.left, {a: c for (a, b), c in x.terms.items() if not b})


def mul_antipode_id(x: TensorElement) -> QSymElement:
    """m ∘ (S ⊗ id) on a tensor in the M basis."""
    total = QSymElement(M_TAG)
    for (a, b), c in x.terms.items():
        left = antipode_M(QSymElement.basis_element(M_TAG, a))
        total = total + mul(left, QSymElement.basis_element(M_TAG, b)).scale(c)
    return total


def comul_left(x: TensorElement) -> Dict[Tuple[Composition, Composition, Composition], RatFunc]:
    """(Δ ⊗ id)(x) flattened to triples."""
    out: Dict[Tuple[Composition, Composition, Composition], RatFunc] = {}
    for (a, b), c in x.terms.items():
        for (a1, a2), c1 in comul(QSymElement.basis_element(x.left, a)).terms.items():
            accumulate(out, (a1, a2, b), c * c1)
    return out


def comul_right(x: TensorElement) -> Dict[Tuple[Composition, Composition, Composition], RatFunc]:
    """(id ⊗ Δ)(x) flattened to triples."""
    out: Dict[Tuple[Composition, Composition, Composition], RatFunc] = {}
    for (a, b), c in x.terms.items():
        for (b1, b2), c1 in comul(QSymElement.basis_element(x.right, b)).terms.items():
            accumulate(out, (a, b1, b2), c * c1)
    return out


# Specialization

def specialize(x, q_value: Optional[Scalar] = None, t_value: Optional[Scalar] = None):
    """Substitute q and/or t coefficient-wise in an element or tensor."""
    qv = q if q_value is None else q_value
    tv = t if t_value is None else t_value
    return x.map_coefficients(lambda c: substitute(c, qv, tv))


# D ↔ L transitions

TRANSITION_DIRECTIONS = ("L-to-D", "D-to-L", "M-to-D")
D_TAG = BasisTag(name="D")


def transitions_DL(direction: str, n: int) -> Dict[Composition, QSymElement]:
    """Rows of the closed-form transitions between D(q, t) and L or M in grade n."""
    if direction not in TRANSITION_DIRECTIONS:
        raise ValueError(f"unknown direction {direction!r}, expected one of {TRANSITION_DIRECTIONS}")
    full = frozenset(range(1, n))
    rows: Dict[Composition, QSymElement] = {}
    if direction == "M-to-D":
        for alpha in (comp_of(S, n) for S in subsets(max(n - 1, 0))):
            terms = {beta: q ** (n - len(alpha)) * t ** (len(alpha) - len(beta)) for beta in coarsenings(alpha)}
            rows[alpha] = QSymElement(D_TAG, terms)
        return rows
    for I in subsets(max(n - 1, 0)):
        terms = defaultdict(lambda: ZERO)
        for J in subsets(max(n - 1, 0)):
            if direction == "L-to-D":
                c = t ** len(I - J) * (q + t) ** len(full - (I | J))
                terms[comp_of(J, n)] += c
            else:
                sign = (-1) ** (len(J - I) + len(I - J))
                c = sign * t ** len(I - J) * (q + t) ** len(I & J) / q ** max(n - 1, 0)
                terms[comp_of(J, n)] += c
        tag = D_TAG if direction == "L-to-D" else L_TAG
        rows[comp_of(I, n)] = QSymElement(tag, terms)
    return rows


def expand_by_rows(x: QSymElement, rows_of, target: BasisTag) -> QSymElement:
    """Expand x through per-composition rows {α: row(α)} in the target basis."""
    out = QSymElement(target)
    for alpha, c in x.terms.items():
        row = rows_of(sum(alpha))[alpha]
        if row.basis != target:
            raise BasisMismatchError(f"row of {alpha} is in {row.basis}, expected {target}")
        out = out + row.scale(c)
    return out

