"""
Supercharacter functions of the normal-lattice theories on Q_n(ν) = (C_ν)^{n-1}.

A class function is stored as its values on the superclasses cl_J, J ranging over the
subsets of its index set; missing entries are zero. Graded functions live on the index set
[n-1] and carry their grade n, which also tells 𝟙₀ (n = 0) from 𝟙₁ (n = 1).

Functions of the form ⊗_i (a_i 𝟙 + b_i r̄eg) are built from atom vectors, r̄eg being
(reg - 𝟙)/(ν - 1): an atom (a, b) takes the value a + b at 0 and a - b/(ν - 1) elsewhere.
"""

import logging
import random
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from math import prod
from typing import Callable, Dict, Iterable, Mapping, Optional, Sequence, Tuple

from more_itertools import powerset

from .coeff import const, to_rat
from .combinat import (
    EMPTY,
    Composition,
    Subset,
    check_subset,
    comp_of,
    interval_stats,
    near_factorizations,
    position_sets,
    preshuffle,
    set_complement,
    set_of,
    stat_g,
    subset_key,
    subsets,
    subsets_between,
    translate,
    wt,
)
from .exceptions import BasisMismatchError, CompositionError
from .qsym import L_TAG, QSymElement, TensorElement

logger = logging.getLogger(__name__)

Atom = Tuple[Fraction, Fraction]
ONE_ATOM: Atom = (Fraction(1), Fraction(0))
REG_ATOM: Atom = (Fraction(0), Fraction(1))
TensorKey = Tuple[Tuple[int, Subset], Tuple[int, Subset]]


def check_nu(nu: int) -> int:
    if not isinstance(nu, int) or nu < 2:
        raise ValueError(f"ν must be an integer >= 2, got {nu!r}")
    return nu


def atom_value(atom: Atom, nonzero: bool, nu: int) -> Fraction:
    a, b = atom
    return a - b / (nu - 1) if nonzero else a + b


class ClassFunction:
    def __init__(
        self,
        nu: int,
        indices: Iterable[int],
        values: Mapping[Iterable[int], Fraction],
        n: Optional[int] = None,
    ):
        self.nu = check_nu(nu)
        self.indices: Tuple[int, ...] = tuple(sorted(indices))
        if n is not None and self.indices != tuple(range(1, n)):
            raise CompositionError(f"grade {n} needs indices [1, {n - 1}], got {self.indices}")
        self.n = n
        ambient = frozenset(self.indices)
        self.values: Dict[Subset, Fraction] = {}
        for K, v in values.items():
            K = frozenset(K)
            if not K <= ambient:
                raise CompositionError(f"{sorted(K)} is not a superclass label on {self.indices}")
            v = Fraction(v)
            if v:
                self.values[K] = v

    @classmethod
    def graded(cls, nu: int, n: int, values: Mapping[Iterable[int], Fraction]) -> "ClassFunction":
        return cls(nu, range(1, n), values, n=n)

    @property
    def grade(self) -> int:
        if self.n is None:
            raise CompositionError("class function carries no grade")
        return self.n

    def value(self, K: Iterable[int]) -> Fraction:
        return self.values.get(frozenset(K), Fraction(0))

    def with_grade(self, n: int) -> "ClassFunction":
        return ClassFunction(self.nu, self.indices, self.values, n=n)

    def _check_same(self, other: "ClassFunction") -> None:
        if self.nu != other.nu or self.indices != other.indices or self.n != other.n:
            raise BasisMismatchError(
                f"class functions on different spaces: (ν={self.nu}, n={self.n}) and (ν={other.nu}, n={other.n})"
            )

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        self._check_same(other)
        values = dict(self.values)
        for K, v in other.values.items():
            values[K] = values.get(K, Fraction(0)) + v
        return ClassFunction(self.nu, self.indices, values, n=self.n)

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        return self + other.scale(-1)

    def scale(self, c) -> "ClassFunction":
        c = Fraction(c)
        return ClassFunction(self.nu, self.indices, {K: c * v for K, v in self.values.items()}, n=self.n)

    def __eq__(self, other):
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return (self.nu, self.indices, self.n, self.values) == (other.nu, other.indices, other.n, other.values)

    def __repr__(self):
        body = ", ".join(f"{sorted(K)}: {v}" for K, v in sorted(self.values.items(), key=lambda kv: subset_key(kv[0])))
        return f"ClassFunction(ν={self.nu}, n={self.n}, {{{body}}})"


def zero(nu: int, n: int) -> ClassFunction:
    return ClassFunction.graded(nu, n, {})


def unit(nu: int) -> ClassFunction:
    """𝟙₀."""
    return ClassFunction.graded(nu, 0, {EMPTY: 1})


def bracket(nu: int, atoms: Mapping[int, Atom], n: Optional[int] = None) -> ClassFunction:
    """⟦atoms⟧: the tensor product of the C_ν functions a·𝟙 + b·r̄eg over the indices of atoms."""
    check_nu(nu)
    indices = sorted(atoms)
    values = {}
    for K in powerset(indices):
        K = frozenset(K)
        values[K] = prod((atom_value(atoms[i], i in K, nu) for i in indices), start=Fraction(1))
    return ClassFunction(nu, indices, values, n=n)


def kappa(I: Iterable[int], n: int, nu: int) -> ClassFunction:
    I = check_subset(I, max(n - 1, 0))
    return ClassFunction.graded(nu, n, {I: 1})


def chi(I: Iterable[int], n: int, nu: int) -> ClassFunction:
    """χ^I: 𝟙 on I and reg - 𝟙 off I."""
    I = check_subset(I, max(n - 1, 0))
    return bracket(nu, {i: ONE_ATOM if i in I else (Fraction(0), Fraction(nu - 1)) for i in range(1, n)}, n=n)


def chi_dot(I: Iterable[int], n: int, nu: int) -> ClassFunction:
    """χ̇^I = χ^I / χ^I(0): 𝟙 on I and r̄eg off I."""
    I = check_subset(I, max(n - 1, 0))
    return bracket(nu, {i: ONE_ATOM if i in I else REG_ATOM for i in range(1, n)}, n=n)


def mk_G_classfn(I: Iterable[int], n: int, nu: int) -> ClassFunction:
    """𝔾_I(ν): 𝟙 on I and r̄eg - ν^{wt_I(i)} 𝟙 off I."""
    I = check_subset(I, max(n - 1, 0))
    atoms = {i: ONE_ATOM if i in I else (Fraction(-(nu ** wt(I, i))), Fraction(1)) for i in range(1, n)}
    return bracket(nu, atoms, n=n)


def mk_M_classfn(I: Iterable[int], n: int, nu: int) -> ClassFunction:
    """𝕄_I(ν): 𝟙 on I and r̄eg - ν𝟙 off I."""
    I = check_subset(I, max(n - 1, 0))
    atoms = {i: ONE_ATOM if i in I else (Fraction(-nu), Fraction(1)) for i in range(1, n)}
    return bracket(nu, atoms, n=n)


def mk_phi_If(I: Iterable[int], f: Callable[[int], Fraction], n: int, nu: int) -> ClassFunction:
    """φ^{I,f}: 𝟙 on I and r̄eg + f(i)𝟙 off I."""
    I = check_subset(I, max(n - 1, 0))
    atoms = {i: ONE_ATOM if i in I else (Fraction(f(i)), Fraction(1)) for i in range(1, n)}
    return bracket(nu, atoms, n=n)


# Structural maps

def tensor_u(phi: ClassFunction, psi: ClassFunction, ambient: Optional[int] = None) -> ClassFunction:
    """φ ⊗_U ψ with U the indices of φ; with ambient set, U ⊔ U^c must be [ambient]."""
    if phi.nu != psi.nu:
        raise BasisMismatchError(f"ν mismatch: {phi.nu} and {psi.nu}")
    left, right = set(phi.indices), set(psi.indices)
    if left & right:
        raise CompositionError(f"index sets {sorted(left)} and {sorted(right)} overlap")
    n = None
    if ambient is not None:
        if left | right != set(range(1, ambient + 1)):
            raise CompositionError(f"index sets do not partition [{ambient}]")
        n = ambient + 1
    values = {K1 | K2: v1 * v2 for K1, v1 in phi.values.items() for K2, v2 in psi.values.items()}
    return ClassFunction(phi.nu, left | right, values, n=n)


def restrict(phi: ClassFunction, T: Iterable[int]) -> ClassFunction:
    T = frozenset(T)
    if not T <= set(phi.indices):
        raise CompositionError(f"{sorted(T)} is not inside {phi.indices}")
    return ClassFunction(phi.nu, T, {K: v for K, v in phi.values.items() if K <= T})


def reindex(phi: ClassFunction, targets: Sequence[int]) -> ClassFunction:
    """Send the i-th index of φ to the i-th entry of targets."""
    targets = sorted(targets)
    if len(targets) != len(phi.indices):
        raise CompositionError(f"cannot relabel {phi.indices} onto {targets}")
    relabel = dict(zip(phi.indices, targets))
    return ClassFunction(phi.nu, targets, {frozenset(relabel[k] for k in K): v for K, v in phi.values.items()})


def _scalar(phi: ClassFunction) -> Fraction:
    return phi.value(EMPTY)


def m_A(phi: ClassFunction, psi: ClassFunction, A: Iterable[int]) -> ClassFunction:
    if phi.nu != psi.nu:
        raise BasisMismatchError(f"ν mismatch: {phi.nu} and {psi.nu}")
    m, n = phi.grade, psi.grade
    N = m + n
    A = check_subset(A, N)
    if len(A) != n:
        raise CompositionError(f"|A| = {len(A)} but the right factor has grade {n}")
    if m == 0:
        return psi.scale(_scalar(phi))
    if n == 0:
        return phi.scale(_scalar(psi))

    nu = phi.nu
    left = reindex(tensor_u(phi, bracket(nu, {m: REG_ATOM})), sorted(set_complement(A, N)))
    right = reindex(tensor_u(psi, bracket(nu, {n: REG_ATOM})), sorted(A))
    stats = interval_stats(A, N)
    kept = restrict(tensor_u(left, right), frozenset(range(1, N)) - stats.e_bar)
    frame = {i: ONE_ATOM for i in stats.e}
    frame.update({i: REG_ATOM for i in stats.e_c})
    return tensor_u(kept, bracket(nu, frame), ambient=N - 1)


def m(phi: ClassFunction, psi: ClassFunction) -> ClassFunction:
    """𝐦(φ, ψ) = Σ_A 𝐦_A(φ, ψ)."""
    n = psi.grade
    N = phi.grade + n
    total = zero(phi.nu, N)
    logger.debug("m: grades %d, %d at ν=%d", phi.grade, n, phi.nu)
    for A in position_sets(N, n):
        total = total + m_A(phi, psi, A)
    return total


class ScfTensor:
    """Elements of scf ⊗ scf in κ ⊗ κ coordinates, keyed by ((k, K1), (n - k, K2))."""

    def __init__(self, nu: int, terms: Optional[Mapping[TensorKey, Fraction]] = None):
        self.nu = check_nu(nu)
        self.terms: Dict[TensorKey, Fraction] = {}
        for key, v in (terms or {}).items():
            v = Fraction(v)
            if v:
                self.terms[key] = v

    @classmethod
    def simple(cls, phi: ClassFunction, psi: ClassFunction) -> "ScfTensor":
        if phi.nu != psi.nu:
            raise BasisMismatchError(f"ν mismatch: {phi.nu} and {psi.nu}")
        terms = {
            ((phi.grade, K1), (psi.grade, K2)): v1 * v2
            for K1, v1 in phi.values.items()
            for K2, v2 in psi.values.items()
        }
        return cls(phi.nu, terms)

    def __add__(self, other: "ScfTensor") -> "ScfTensor":
        if self.nu != other.nu:
            raise BasisMismatchError(f"ν mismatch: {self.nu} and {other.nu}")
        terms = defaultdict(Fraction, self.terms)
        for key, v in other.terms.items():
            terms[key] += v
        return ScfTensor(self.nu, terms)

    def __eq__(self, other):
        if not isinstance(other, ScfTensor):
            return NotImplemented
        return self.nu == other.nu and self.terms == other.terms

    def __repr__(self):
        return f"ScfTensor(ν={self.nu}, {len(self.terms)} terms)"


def coprod_k(phi: ClassFunction, k: int) -> ScfTensor:
    """▲_k: restrict to [k-1] ⊔ [k+1, n-1], split, and shift the right factor by -k."""
    n = phi.grade
    if not 0 <= k <= n:
        raise CompositionError(f"k = {k} outside [0, {n}]")
    terms: Dict[TensorKey, Fraction] = defaultdict(Fraction)
    for K, v in phi.values.items():
        if k == 0:
            key = ((0, EMPTY), (n, K))
        elif k == n:
            key = ((n, K), (0, EMPTY))
        elif k in K:
            continue
        else:
            key = ((k, frozenset(x for x in K if x < k)), (n - k, translate((x for x in K if x > k), k)))
        terms[key] += v
    return ScfTensor(phi.nu, terms)


def coprod(phi: ClassFunction) -> ScfTensor:
    total = ScfTensor(phi.nu)
    for k in range(phi.grade + 1):
        total = total + coprod_k(phi, k)
    return total


# Superclass identifiers

def kappa_product(I: Iterable[int], J: Iterable[int], m: int, n: int, nu: int) -> ClassFunction:
    """𝐦(κ_I, κ_J) from the closed formula; the result's values are its κ-coordinates."""
    check_nu(nu)
    I, J = check_subset(I, max(m - 1, 0)), check_subset(J, max(n - 1, 0))
    if m == 0:
        return kappa(J, n, nu)
    if n == 0:
        return kappa(I, m, nu)
    N = m + n
    ratio = Fraction(1, 1 - nu)
    values: Dict[Subset, Fraction] = defaultdict(Fraction)
    for A in position_sets(N, n):
        stats = interval_stats(A, N)
        sharp, _ = preshuffle(I, J, A, m, n)
        if sharp & stats.e_bar:
            continue
        for K in subsets_between(sharp, sharp | stats.e_bar):
            values[K] += ratio ** len(K & stats.e_c)
    return ClassFunction.graded(nu, N, values)


def kappa_coproduct(gamma: Composition, nu: int) -> ScfTensor:
    check_nu(nu)
    terms = {
        ((sum(alpha), set_of(alpha)), (sum(beta), set_of(beta))): Fraction(1)
        for alpha, beta in near_factorizations(gamma)
    }
    if not gamma:
        terms = {((0, EMPTY), (0, EMPTY)): Fraction(1)}
    return ScfTensor(nu, terms)


# Inner product and the characteristic map

def hall_inner(phi: ClassFunction, psi: ClassFunction) -> Fraction:
    if phi.nu != psi.nu or phi.indices != psi.indices:
        raise BasisMismatchError("Hall inner product of functions on different groups")
    nu = phi.nu
    total = sum(
        ((nu - 1) ** len(K) * v * psi.value(K) for K, v in phi.values.items()),
        Fraction(0),
    )
    return total / Fraction(nu) ** len(phi.indices)


@lru_cache(maxsize=None)
def _chi_values(I: Subset, n: int, nu: int) -> ClassFunction:
    return chi(I, n, nu)


@lru_cache(maxsize=None)
def _ch_kappa(K: Subset, n: int, nu: int) -> Tuple[Tuple[Composition, Fraction], ...]:
    """L-coordinates of ch_ν(κ_K): ⟨κ_K, χ^I⟩ = (ν-1)^{|K|} χ^I(cl_K) / ν^{n-1}."""
    scale = Fraction((nu - 1) ** len(K), nu ** max(n - 1, 0))
    out = []
    for I in subsets(max(n - 1, 0)):
        c = scale * _chi_values(I, n, nu).value(K)
        if c:
            out.append((comp_of(I, n), c))
    return tuple(out)


def ch(phi: ClassFunction):
    """ch_ν(φ) = Σ_I ⟨φ, χ^I⟩ L_{comp(I)}."""
    n, nu = phi.grade, phi.nu
    terms: Dict[Composition, Fraction] = defaultdict(Fraction)
    for K, v in phi.values.items():
        for alpha, c in _ch_kappa(K, n, nu):
            terms[alpha] += v * c
    return QSymElement(L_TAG, {alpha: const(c) for alpha, c in terms.items()})


def ch_tensor(x: ScfTensor):
    """(ch_ν ⊗ ch_ν) applied to a κ ⊗ κ tensor, landing in L ⊗ L."""
    terms: Dict[Tuple[Composition, Composition], Fraction] = defaultdict(Fraction)
    for ((n1, K1), (n2, K2)), v in x.terms.items():
        for alpha, c1 in _ch_kappa(K1, n1, x.nu):
            for beta, c2 in _ch_kappa(K2, n2, x.nu):
                terms[(alpha, beta)] += v * c1 * c2
    return TensorElement(L_TAG, L_TAG, {key: const(c) for key, c in terms.items()})


def expand_in_G(phi: ClassFunction) -> Dict[Subset, Fraction]:
    """Coefficients of φ on the 𝔾_J(ν), through ch_ν and L_K = Σ_{J⊇K} ν^{g(K,J)} G_J."""
    nu, n = phi.nu, phi.grade
    full = frozenset(range(1, n))
    out: Dict[Subset, Fraction] = defaultdict(Fraction)
    for alpha, c in ch(phi).terms.items():
        K = set_of(alpha)
        for J in subsets_between(K, full):
            out[J] += to_rat(c) * nu ** stat_g(K, J)
    return {J: v for J, v in out.items() if v}


def phi_If_G_coefficients(I: Iterable[int], f: Callable[[int], Fraction], n: int, nu: int) -> Dict[Subset, Fraction]:
    """φ^{I,f} = Σ_{J⊇I} Π_{j∈J∖I} (ν^{wt_J(j)} + f(j)) 𝔾_J(ν)."""
    I = check_subset(I, max(n - 1, 0))
    out = {}
    for J in subsets_between(I, frozenset(range(1, n))):
        c = prod((Fraction(nu ** wt(J, j)) + Fraction(f(j)) for j in J - I), start=Fraction(1))
        if c:
            out[J] = c
    return out


def random_classfunction(n: int, nu: int, rng: random.Random, spread: int = 5) -> ClassFunction:
    values = {
        K: Fraction(rng.randint(-spread, spread), rng.randint(1, spread))
        for K in subsets(max(n - 1, 0))
    }
    return ClassFunction.graded(nu, n, values)
