"""
Brute-force verification through honest polynomials in finitely many commuting variables.

A quasisymmetric function of degree d is determined by its truncation to d variables, so
products are checked by expanding both factors, multiplying the polynomials and reading the
M-expansion off the monomials x_1^{γ_1} ... x_ℓ^{γ_ℓ}.
"""

import logging
from collections import defaultdict
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Mapping, Optional, Tuple

from .coeff import ZERO, evaluate, format_ratfunc, to_rat
from .combinat import Composition, check_composition, compositions
from .exceptions import CompositionError, NotQuasisymmetricError
from .qsym import M_TAG, BasisTag, QSymElement, mul, to_M
from .schemas import DiffEntry, ProductCheck

logger = logging.getLogger(__name__)

Exponent = Tuple[int, ...]


class TruncPoly:
    """Sparse polynomial in x_1..x_nvars; terms above max_degree are dropped."""

    def __init__(self, nvars: int, terms: Optional[Mapping[Exponent, object]] = None, max_degree: Optional[int] = None):
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        self.nvars = nvars
        self.max_degree = max_degree
        self.terms: Dict[Exponent, object] = {}
        for e, c in (terms or {}).items():
            if len(e) != nvars or min(e, default=0) < 0:
                raise ValueError(f"bad exponent vector {e} for {nvars} variables")
            if c and (max_degree is None or sum(e) <= max_degree):
                self.terms[tuple(e)] = c

    def __add__(self, other: "TruncPoly") -> "TruncPoly":
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms[e] + c if e in terms else c
        return TruncPoly(self.nvars, terms, self._bound(other))

    def __mul__(self, other: "TruncPoly") -> "TruncPoly":
        self._check(other)
        bound = self._bound(other)
        terms: Dict[Exponent, object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                if bound is not None and sum(e) > bound:
                    continue
                terms[e] = terms[e] + c1 * c2 if e in terms else c1 * c2
        return TruncPoly(self.nvars, terms, bound)

    def scale(self, c) -> "TruncPoly":
        return TruncPoly(self.nvars, {e: c * v for e, v in self.terms.items()}, self.max_degree)

    def __eq__(self, other):
        if not isinstance(other, TruncPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def degree_part(self, d: int) -> "TruncPoly":
        return TruncPoly(self.nvars, {e: c for e, c in self.terms.items() if sum(e) == d}, self.max_degree)

    def degrees(self) -> Tuple[int, ...]:
        return tuple(sorted({sum(e) for e in self.terms}))

    def _check(self, other: "TruncPoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError(f"polynomials in {self.nvars} and {other.nvars} variables")

    def _bound(self, other: "TruncPoly") -> Optional[int]:
        bounds = [b for b in (self.max_degree, other.max_degree) if b is not None]
        return min(bounds) if bounds else None

    def __repr__(self):
        return f"TruncPoly(nvars={self.nvars}, {len(self.terms)} terms)"


def expand_M(alpha: Composition, nvars: int, max_degree: Optional[int] = None) -> TruncPoly:
    """M_α in nvars variables: Σ over i_1 < ... < i_ℓ of x_{i_1}^{α_1} ... x_{i_ℓ}^{α_ℓ}."""
    alpha = check_composition(alpha)
    if nvars < len(alpha):
        raise CompositionError(f"M_{alpha} vanishes in {nvars} variables")
    terms = {}
    for positions in combinations(range(nvars), len(alpha)):
        e = [0] * nvars
        for i, part in zip(positions, alpha):
            e[i] = part
        terms[tuple(e)] = 1
    return TruncPoly(nvars, terms, max_degree)


def expand(x: QSymElement, nvars: int) -> TruncPoly:
    """Any element, through its M-expansion."""
    total = TruncPoly(nvars)
    for alpha, c in to_M(x).terms.items():
        total = total + expand_M(alpha, nvars).scale(c)
    return total


def _leading(gamma: Composition, nvars: int) -> Exponent:
    return tuple(gamma) + (0,) * (nvars - len(gamma))


def extract_M(p: TruncPoly, degree: int) -> QSymElement:
    """Read the M-expansion of the degree part of p, then re-expand and compare."""
    if p.nvars < degree:
        raise CompositionError(f"{p.nvars} variables cannot determine degree {degree}")
    part = p.degree_part(degree)
    terms = {}
    for gamma in compositions(degree):
        c = part.terms.get(_leading(gamma, p.nvars))
        if c:
            terms[gamma] = c
    rebuilt = TruncPoly(p.nvars)
    for gamma, c in terms.items():
        rebuilt = rebuilt + expand_M(gamma, p.nvars).scale(c)
    if rebuilt.terms != part.terms:
        raise NotQuasisymmetricError(f"input not quasisymmetric at this truncation (degree {degree}, {p.nvars} variables)")
    return QSymElement(M_TAG, terms)


def extract_all(p: TruncPoly) -> QSymElement:
    total = QSymElement(M_TAG)
    for d in p.degrees():
        total = total + extract_M(p, d)
    return total


@lru_cache(maxsize=None)
def oracle_M_product(gamma: Composition, delta: Composition, nvars: int) -> Tuple[Tuple[Composition, int], ...]:
    """M_γ M_δ computed by polynomial multiplication, as integer M-coordinates."""
    degree = sum(gamma) + sum(delta)
    product = expand_M(gamma, nvars) * expand_M(delta, nvars)
    return tuple(sorted((g, int(to_rat(c))) for g, c in extract_M(product, degree).terms.items()))


def oracle_product(x: QSymElement, y: QSymElement, nvars: Optional[int] = None) -> QSymElement:
    """x·y in the M basis, computed bilinearly from oracle products of monomials."""
    xm, ym = to_M(x), to_M(y)
    out: Dict[Composition, object] = defaultdict(lambda: ZERO)
    for a, ca in xm.terms.items():
        for b, cb in ym.terms.items():
            vars_needed = nvars if nvars is not None else sum(a) + sum(b)
            if vars_needed < sum(a) + sum(b):
                raise CompositionError(f"{vars_needed} variables cannot determine degree {sum(a) + sum(b)}")
            for g, c in oracle_M_product(a, b, vars_needed):
                out[g] += c * ca * cb
    return QSymElement(M_TAG, out)


def oracle_diffs(rule: QSymElement, oracle: QSymElement, point: Optional[Tuple] = None) -> List[DiffEntry]:
    """Compositions where two M-expansions disagree, optionally after evaluation at (q0, t0)."""

    def shown(c):
        return str(evaluate(c, *point)) if point is not None else format_ratfunc(c)

    diffs = []
    for gamma in sorted(set(rule.terms) | set(oracle.terms)):
        r, o = rule.coefficient(gamma), oracle.coefficient(gamma)
        same = evaluate(r - o, *point) == 0 if point is not None else r == o
        if not same:
            diffs.append(DiffEntry(comp=list(gamma), rule=shown(r), oracle=shown(o)))
    return diffs


def verify_product(
    basis: BasisTag,
    alpha: Composition,
    beta: Composition,
    nvars: Optional[int] = None,
    point: Optional[Tuple] = None,
) -> ProductCheck:
    """
    Compare the combinatorial product rule of `basis` with the oracle, both in M.
    With `point` = (q0, t0) the comparison is made after evaluation instead of symbolically.
    """
    alpha, beta = check_composition(alpha), check_composition(beta)
    nvars = nvars if nvars is not None else sum(alpha) + sum(beta)
    x = QSymElement.basis_element(basis, alpha)
    y = QSymElement.basis_element(basis, beta)
    rule = to_M(mul(x, y))
    oracle = oracle_product(x, y, nvars)

    diffs = oracle_diffs(rule, oracle, point)
    if diffs:
        logger.warning(f"oracle mismatch for {basis} {alpha} * {beta}: {len(diffs)} compositions differ")
    return ProductCheck(
        basis=str(basis),
        alpha=list(alpha),
        beta=list(beta),
        nvars=nvars,
        passed=not diffs,
        diffs=diffs,
    )
