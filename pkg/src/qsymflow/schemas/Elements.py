from fractions import Fraction
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from qsymflow.coeff import format_ratfunc, parse_ratfunc
from qsymflow.combinat import subset_key
from qsymflow.qsym import BasisTag, QSymElement, TensorElement
from qsymflow.scf import ClassFunction


class SubsetModel(BaseModel):
    n: int
    elems: List[int]

    @model_validator(mode="after")
    def check_elems(self):
        if self.n < 0:
            raise ValueError("ambient grade must be nonnegative")
        if sorted(set(self.elems)) != list(self.elems):
            raise ValueError("elements must be strictly increasing")
        if any(not 1 <= x <= self.n - 1 for x in self.elems):
            raise ValueError(f"elements must lie in [1, {self.n - 1}]")
        return self

    def to_subset(self) -> frozenset:
        return frozenset(self.elems)

    @classmethod
    def from_subset(cls, S, n: int) -> "SubsetModel":
        return cls(n=n, elems=sorted(S))


class TermModel(BaseModel):
    comp: List[int]
    coeff: str

    @field_validator("comp")
    def positive_parts(cls, v):
        if any(p < 1 for p in v):
            raise ValueError("composition parts must be positive")
        return v


class ElementModel(BaseModel):
    basis: str
    nu: Optional[int] = None
    terms: List[TermModel]

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "basis": "D",
                "nu": None,
                "terms": [{"comp": [2, 1], "coeff": "q + t"}],
            }
        }
    )

    def to_element(self):
        tag = BasisTag(name=self.basis, nu=self.nu)
        out = QSymElement(tag)
        for term in self.terms:
            out = out + QSymElement.basis_element(tag, term.comp, parse_ratfunc(term.coeff))
        return out

    @classmethod
    def from_element(cls, x) -> "ElementModel":
        return cls(
            basis=x.basis.name,
            nu=x.basis.nu,
            terms=[TermModel(comp=list(a), coeff=format_ratfunc(c)) for a, c in x.items()],
        )


class TensorTermModel(BaseModel):
    comp: List[List[int]]
    coeff: str

    @field_validator("comp")
    def two_factors(cls, v):
        if len(v) != 2:
            raise ValueError("a tensor term pairs exactly two compositions")
        return v


class TensorModel(BaseModel):
    basis: str
    nu: Optional[int] = None
    right_basis: Optional[str] = None
    right_nu: Optional[int] = None
    terms: List[TensorTermModel]

    def to_tensor(self):
        left = BasisTag(name=self.basis, nu=self.nu)
        right = BasisTag(name=self.right_basis, nu=self.right_nu) if self.right_basis else left
        out = TensorElement(left, right)
        for term in self.terms:
            a, b = term.comp
            out = out + TensorElement(left, right, {(tuple(a), tuple(b)): parse_ratfunc(term.coeff)})
        return out

    @classmethod
    def from_tensor(cls, x) -> "TensorModel":
        same = x.left == x.right
        return cls(
            basis=x.left.name,
            nu=x.left.nu,
            right_basis=None if same else x.right.name,
            right_nu=None if same else x.right.nu,
            terms=[TensorTermModel(comp=[list(a), list(b)], coeff=format_ratfunc(c)) for (a, b), c in x.items()],
        )


class ValueModel(BaseModel):
    subset: List[int]
    value: str

    @field_validator("value")
    def rational(cls, v):
        Fraction(v)
        return v


class ClassFunctionModel(BaseModel):
    nu: int
    n: int
    values: List[ValueModel]

    def to_classfunction(self):
        return ClassFunction.graded(self.nu, self.n, {frozenset(v.subset): Fraction(v.value) for v in self.values})

    @classmethod
    def from_classfunction(cls, phi) -> "ClassFunctionModel":
        ordered = sorted(phi.values.items(), key=lambda kv: subset_key(kv[0]))
        return cls(
            nu=phi.nu,
            n=phi.grade,
            values=[ValueModel(subset=sorted(K), value=str(v)) for K, v in ordered],
        )


class DiffEntry(BaseModel):
    comp: List[int]
    rule: str
    oracle: str


class ProductCheck(BaseModel):
    basis: str
    alpha: List[int]
    beta: List[int]
    nvars: int
    passed: bool
    diffs: List[DiffEntry]
