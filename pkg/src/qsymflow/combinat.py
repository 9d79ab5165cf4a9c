"""
Composition, subset, word and shuffle combinatorics.

Compositions are tuples of positive integers. Subsets are frozensets of positive
integers; every function that needs an ambient set takes it explicitly, [n-1] for the
subset attached to a composition of n and [N] (N = m + n) for shuffle position sets.
Multisets are `collections.Counter` objects.
"""

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Dict, FrozenSet, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from more_itertools import powerset

from .coeff import ZERO, q
from .exceptions import CompositionError, DegenerateIntervalError

Composition = Tuple[int, ...]
Subset = FrozenSet[int]
Word = Tuple[int, ...]

EMPTY: Subset = frozenset()


# Compositions and the set/comp bijection

def check_composition(alpha: Iterable[int]) -> Composition:
    alpha = tuple(alpha)
    for part in alpha:
        if not isinstance(part, int) or isinstance(part, bool) or part < 1:
            raise CompositionError(f"not a composition: {alpha}")
    return alpha


def check_subset(S: Iterable[int], ambient: int) -> Subset:
    """Validate S as a subset of [ambient]."""
    S = frozenset(S)
    bad = [x for x in S if not isinstance(x, int) or not 1 <= x <= ambient]
    if bad:
        raise CompositionError(f"{sorted(S)} is not a subset of [{ambient}]")
    return S


def sort_key(alpha: Composition) -> Tuple[int, int, Composition]:
    return (sum(alpha), len(alpha), alpha)


def subset_key(S: Iterable[int]) -> Tuple[int, Tuple[int, ...]]:
    S = sorted(S)
    return (len(S), tuple(S))


def set_of(alpha: Composition) -> Subset:
    alpha = check_composition(alpha)
    partial, out = 0, []
    for part in alpha[:-1]:
        partial += part
        out.append(partial)
    return frozenset(out)


def comp_of(S: Iterable[int], n: int) -> Composition:
    if n == 0:
        if S:
            raise CompositionError("the empty composition has no descents")
        return ()
    S = sorted(check_subset(S, n - 1))
    bounds = [0] + S + [n]
    return tuple(b - a for a, b in zip(bounds, bounds[1:]))


def subsets(k: int) -> List[Subset]:
    """All subsets of [k] ordered by (size, lex)."""
    return [frozenset(s) for s in powerset(range(1, k + 1))]


def subsets_between(lower: Subset, upper: Subset) -> List[Subset]:
    """All K with lower ⊆ K ⊆ upper."""
    free = sorted(upper - lower)
    return [lower | frozenset(extra) for extra in powerset(free)]


@lru_cache(maxsize=None)
def compositions(n: int) -> Tuple[Composition, ...]:
    if n == 0:
        return ((),)
    return tuple(sorted((comp_of(S, n) for S in subsets(n - 1)), key=sort_key))


def all_compositions(max_size: int, min_size: int = 0) -> List[Composition]:
    return [alpha for n in range(min_size, max_size + 1) for alpha in compositions(n)]


def refines(alpha: Composition, beta: Composition) -> bool:
    """alpha ⪯ beta: beta is obtained from alpha by merging adjacent parts."""
    if sum(alpha) != sum(beta):
        raise CompositionError(f"refines needs equal sizes: {alpha}, {beta}")
    return set_of(beta) <= set_of(alpha)


def coarsenings(alpha: Composition) -> List[Composition]:
    """All beta with beta ⪰ alpha."""
    n = sum(alpha)
    return [comp_of(T, n) for T in subsets_between(EMPTY, set_of(alpha))]


def refinements(alpha: Composition) -> List[Composition]:
    """All beta with beta ⪯ alpha."""
    n = sum(alpha)
    if n == 0:
        return [()]
    return [comp_of(T, n) for T in subsets_between(set_of(alpha), frozenset(range(1, n)))]


def reverse(alpha: Composition) -> Composition:
    return tuple(reversed(alpha))


def complement(alpha: Composition) -> Composition:
    n = sum(alpha)
    if n == 0:
        return ()
    return comp_of(frozenset(range(1, n)) - set_of(alpha), n)


def near_concat(alpha: Composition, beta: Composition) -> Composition:
    if not alpha:
        return beta
    if not beta:
        return alpha
    return alpha[:-1] + (alpha[-1] + beta[0],) + beta[1:]


def deconcatenations(gamma: Composition) -> List[Tuple[Composition, Composition]]:
    return [(gamma[:i], gamma[i:]) for i in range(len(gamma) + 1)]


def near_factorizations(gamma: Composition) -> List[Tuple[Composition, Composition]]:
    """All (alpha, beta) with alpha ⊙ beta = gamma, the two boundary pairs included."""
    out = [((), gamma)]
    for i, part in enumerate(gamma):
        for a in range(1, part):
            out.append((gamma[:i] + (a,), (part - a,) + gamma[i + 1:]))
    if gamma:
        out.append((gamma, ()))
    return out


def concat_or_near(gamma: Composition) -> List[Tuple[Composition, Composition, bool]]:
    """Pairs with alpha·beta = gamma or alpha ⊙ beta = gamma, flagged by concatenation."""
    pairs = {(a, b): True for a, b in deconcatenations(gamma)}
    for a, b in near_factorizations(gamma):
        pairs.setdefault((a, b), False)
    return [(a, b, is_concat) for (a, b), is_concat in pairs.items()]


# Subset statistics

def set_complement(S: Iterable[int], ambient: int) -> Subset:
    return frozenset(range(1, ambient + 1)) - frozenset(S)


def translate(S: Iterable[int], k: int) -> Subset:
    """S - k."""
    return frozenset(x - k for x in S)


def std(S: Iterable[int], K: Iterable[int]) -> Subset:
    """Standardization std_S(K) for K ⊆ S."""
    rank = {s: i for i, s in enumerate(sorted(S), start=1)}
    try:
        return frozenset(rank[k] for k in K)
    except KeyError as exc:
        raise CompositionError(f"{sorted(K)} is not contained in {sorted(S)}") from exc


def unstd(S: Iterable[int], K: Iterable[int]) -> Subset:
    """K_S: the i-th smallest element of S for each i in K."""
    ordered = sorted(S)
    return frozenset(ordered[i - 1] for i in K)


def intervals(S: Iterable[int]) -> Tuple[Tuple[int, int], ...]:
    """Maximal subintervals [a, b] of S."""
    out: List[Tuple[int, int]] = []
    for x in sorted(S):
        if out and out[-1][1] == x - 1:
            out[-1] = (out[-1][0], x)
        else:
            out.append((x, x))
    return tuple(out)


@dataclass(frozen=True)
class IntervalStats:
    A: Subset
    N: int
    int_A: Tuple[Tuple[int, int], ...]
    e: Subset
    e_c: Subset
    e_bar: Subset

    @property
    def z(self) -> int:
        if self.N not in self.A:
            if not self.A:
                raise DegenerateIntervalError(f"z_A undefined for A = ∅ in [{self.N}]")
            return max(self.A)
        rest = set_complement(self.A, self.N)
        if not rest:
            raise DegenerateIntervalError(f"z_A undefined for A = [{self.N}]")
        return max(rest)


@lru_cache(maxsize=None)
def interval_stats(A: Subset, N: int) -> IntervalStats:
    A = check_subset(A, N)
    Ac = set_complement(A, N)
    int_A = intervals(A)
    e = frozenset(b for _, b in int_A) - {N}
    e_c = frozenset(b for _, b in intervals(Ac)) - {N}
    return IntervalStats(A=A, N=N, int_A=int_A, e=e, e_c=e_c, e_bar=e | e_c)


@lru_cache(maxsize=None)
def preshuffle(I: Subset, J: Subset, A: Subset, m: int, n: int) -> Tuple[Subset, Subset]:
    """(I #_A J, I ⧢_A J), both inside [m+n-1]."""
    N = m + n
    if len(A) != n:
        raise CompositionError(f"|A| = {len(A)} but n = {n}")
    check_subset(I, max(m - 1, 0))
    check_subset(J, max(n - 1, 0))
    A = check_subset(A, N)
    sharp = unstd(set_complement(A, N), I) | unstd(A, J)
    stats = interval_stats(A, N)
    return sharp, stats.e | (sharp - stats.e_bar)


def position_sets(N: int, n: int) -> List[Subset]:
    """C([N], n) in lexicographic order."""
    return [frozenset(A) for A in combinations(range(1, N + 1), n)]


# Words

def des(w: Sequence[int]) -> Subset:
    return frozenset(i for i in range(1, len(w)) if w[i - 1] > w[i])


def is_permutation(w: Sequence[int]) -> bool:
    return sorted(w) == list(range(1, len(w) + 1))


def shift_word(v: Sequence[int], m: int) -> Word:
    """v[m]: add m to every nonzero letter."""
    return tuple(x + m if x else 0 for x in v)


def shuffle_by(u: Sequence[int], v: Sequence[int], A: Iterable[int]) -> Word:
    """Letters of v at the positions A, letters of u elsewhere, both in order."""
    N = len(u) + len(v)
    A = frozenset(A)
    if len(A) != len(v) or not A <= frozenset(range(1, N + 1)):
        raise CompositionError(f"{sorted(A)} cannot host {len(v)} letters among {N}")
    iu, iv = iter(u), iter(v)
    return tuple(next(iv) if pos in A else next(iu) for pos in range(1, N + 1))


def shuffles(u: Sequence[int], v: Sequence[int]) -> List[Word]:
    return [shuffle_by(u, v, A) for A in position_sets(len(u) + len(v), len(v))]


def std_word(w: Sequence[int]) -> Word:
    order = sorted(range(len(w)), key=lambda i: (w[i], i))
    out = [0] * len(w)
    for rank, i in enumerate(order, start=1):
        out[i] = rank
    return tuple(out)


def sub_le(w: Sequence[int], m: int) -> Word:
    return tuple(x for x in w if x <= m)


def sub_gt(w: Sequence[int], m: int) -> Word:
    return tuple(x for x in w if x > m)


def pad_le(w: Sequence[int], m: int) -> Word:
    return tuple(x if x <= m else 0 for x in w)


def pad_gt(w: Sequence[int], m: int) -> Word:
    return tuple(x if x > m else 0 for x in w)


def sdes(v: Sequence[int]) -> Subset:
    """Standardized descent set: std_{P_v}(Des v) with the last position of P_v removed."""
    P = [i for i, x in enumerate(v, start=1) if x != 0]
    return std(P, des(v)) - {len(P)}


def sw_exponents(w: Sequence[int], m: int) -> Tuple[Optional[int], ...]:
    """Exponent of q in sw^w_m(i) for i in [N-1]; None where sw vanishes."""
    low, high = sub_le(w, m), sub_gt(w, m)
    des_low, des_high = des(low), des(high)
    seen_low = seen_high = 0
    out: List[Optional[int]] = []
    for i in range(len(w) - 1):
        a, b = w[i], w[i + 1]
        if a <= m:
            seen_low += 1
        else:
            seen_high += 1
        if a <= m and b <= m:
            out.append(wt(des_low, seen_low))
        elif a > m and b > m:
            out.append(wt(des_high, seen_high))
        else:
            out.append(None)
    return tuple(out)


def sdes_and_sw(w: Sequence[int], m: int):
    """(sDes(w⁰_{≤m}), sDes(w⁰_{>m}), (sw^w_m(i))_{i ∈ [N-1]}) with RatFunc weights."""
    if not 0 <= m <= len(w):
        raise CompositionError(f"m = {m} outside [0, {len(w)}]")
    sw = tuple(ZERO if e is None else q ** e for e in sw_exponents(w, m))
    return sdes(pad_le(w, m)), sdes(pad_gt(w, m)), sw


REVERSE_RUNS = "reverse-runs"
BLOCK_VALUES = "block-values"
REPRESENTATIVE_RULES = (REVERSE_RUNS, BLOCK_VALUES)


@lru_cache(maxsize=None)
def descent_representative(I: Subset, m: int, rule: str = REVERSE_RUNS) -> Word:
    """A permutation of [m] whose descent set is I."""
    I = check_subset(I, max(m - 1, 0))
    if rule == REVERSE_RUNS:
        w = list(range(1, m + 1))
        for a, b in intervals(I):
            w[a - 1:b + 1] = reversed(w[a - 1:b + 1])
        return tuple(w)
    if rule == BLOCK_VALUES:
        runs = comp_of(I, m)
        out: List[int] = []
        top = m
        for length in runs:
            out.extend(range(top - length + 1, top + 1))
            top -= length
        return tuple(out)
    raise ValueError(f"unknown representative rule {rule!r}")


# Shuffles of compositions

LEFT, RIGHT = "L", "R"
COMMA, PLUS1, PLUS2 = ",", "+1", "+2"


class TwoWayShuffle(NamedTuple):
    items: Tuple[Tuple[int, str], ...]
    joins: Tuple[str, ...]

    def plus(self) -> Composition:
        """gamma^+: every +1/+2 replaced by an actual sum."""
        if not self.items:
            return ()
        parts = [self.items[0][0]]
        for (value, _), join in zip(self.items[1:], self.joins):
            if join == COMMA:
                parts.append(value)
            else:
                parts[-1] += value
        return tuple(parts)

    @property
    def c1(self) -> int:
        return self.joins.count(PLUS1)

    @property
    def c2(self) -> int:
        return self.joins.count(PLUS2)

    def __str__(self):
        if not self.items:
            return "()"
        text = f"({self.items[0][0]}{self.items[0][1]}"
        for (value, origin), join in zip(self.items[1:], self.joins):
            text += (", " if join == COMMA else f" {join} ") + f"{value}{origin}"
        return text + ")"


def comp_shuffle_by(alpha: Composition, beta: Composition, D: Iterable[int]) -> Composition:
    """alpha ⧢_D beta: parts of beta at the positions D of [l+k]."""
    return shuffle_by(alpha, beta, D)


def comp_shuffles(alpha: Composition, beta: Composition) -> List[Composition]:
    return shuffles(alpha, beta)


def two_way_shuffles(alpha: Composition, beta: Composition) -> List[TwoWayShuffle]:
    out: List[TwoWayShuffle] = []
    total = len(alpha) + len(beta)
    for D in position_sets(total, len(beta)):
        labelled = shuffle_by([(a, LEFT) for a in alpha], [(b, RIGHT) for b in beta], D)
        options = []
        for (_, left), (_, right) in zip(labelled, labelled[1:]):
            if left == LEFT and right == RIGHT:
                options.append((COMMA, PLUS1))
            elif left == RIGHT and right == LEFT:
                options.append((COMMA, PLUS2))
            else:
                options.append((COMMA,))
        for joins in product(*options):
            out.append(TwoWayShuffle(tuple(labelled), joins))
    return out


def overlapping_shuffles(alpha: Composition, beta: Composition) -> List[Composition]:
    """alpha ⧢̄ beta: shuffles where adjacent (alpha_i, beta_j) pairs may merge."""
    return [g.plus() for g in two_way_shuffles(alpha, beta) if g.c2 == 0]


def as_multiset(items: Iterable) -> Counter:
    return Counter(items)


# Weights and the s, g statistics

def wt(I: Iterable[int], i: int) -> int:
    return sum(1 for x in I if x < i) + 1


def weights(I: Iterable[int], n: int) -> Tuple[int, ...]:
    I = frozenset(I)
    return tuple(wt(I, i) for i in range(1, n))


def _check_nested(I: Subset, J: Subset) -> None:
    if not I <= J:
        raise CompositionError(f"{sorted(I)} is not contained in {sorted(J)}")


def stat_s(I: Subset, J: Subset) -> int:
    _check_nested(I, J)
    return sum(wt(I, j) for j in J - I)


def stat_g(I: Subset, J: Subset) -> int:
    _check_nested(I, J)
    return sum(wt(J, j) for j in J - I)


def bre(I: Subset, J: Subset, n: int) -> Tuple[int, ...]:
    """Block positions of I inside J, with n appended to both sets."""
    _check_nested(I, J)
    J_full = sorted(J) + [n]
    return tuple(sum(1 for j in J_full if j <= i) for i in sorted(I) + [n])


def stat_s_bre(I: Subset, J: Subset, n: int) -> int:
    b = (0,) + bre(I, J, n)
    return sum(k * (b[k] - b[k - 1] - 1) for k in range(1, len(b)))


def stat_g_bre(I: Subset, J: Subset, n: int) -> int:
    b = set(bre(I, J, n))
    return sum(k for k in range(1, len(J) + 2) if k not in b)


# Position sets and the Psi/Phi bijection

def admissible_sets(alpha: Composition, beta: Composition) -> List[Subset]:
    """𝒜_{α,β}: the A with ē(A) ∖ {z_A} ⊆ I #_A J."""
    m, n = sum(alpha), sum(beta)
    if m == 0 or n == 0:
        raise DegenerateIntervalError("admissible position sets need two nonempty factors")
    I, J = set_of(alpha), set_of(beta)
    out = []
    for A in position_sets(m + n, n):
        stats = interval_stats(A, m + n)
        sharp, _ = preshuffle(I, J, A, m, n)
        if stats.e_bar - {stats.z} <= sharp:
            out.append(A)
    return out


def psi(A: Subset, alpha: Composition, beta: Composition) -> Subset:
    m, n = sum(alpha), sum(beta)
    N = m + n
    A = frozenset(A)
    if A not in admissible_sets(alpha, beta):
        raise CompositionError(f"{sorted(A)} is not admissible for {alpha}, {beta}")
    I, J = set_of(alpha), set_of(beta)
    sharp, _ = preshuffle(I, J, A, m, n)
    z = interval_stats(A, N).z
    J_A = unstd(A, J)
    J_tilde = J_A | {N} if N in A else J_A | {z}
    return std(sharp | {z, N}, J_tilde)


def phi(D: Iterable[int], alpha: Composition, beta: Composition) -> Subset:
    D = sorted(D)
    if len(D) != len(beta) or not set(D) <= set(range(1, len(alpha) + len(beta) + 1)):
        raise CompositionError(f"{D} is not a position set for {len(beta)} parts")
    gamma = comp_shuffle_by(alpha, beta, D)
    out: set = set()
    for d, b in zip(D, beta):
        before = sum(gamma[:d - 1])
        out.update(range(before + 1, before + b + 1))
    return frozenset(out)


def d_product_terms_by_position_sets(
    alpha: Composition, beta: Composition
) -> Dict[Composition, Counter]:
    """For each comp(K) reached through 𝒜_{α,β}, the multiset of (#e(A^c)∖K, #e(A)∖K)."""
    m, n = sum(alpha), sum(beta)
    I, J = set_of(alpha), set_of(beta)
    out: Dict[Composition, Counter] = {}
    for A in admissible_sets(alpha, beta):
        stats = interval_stats(A, m + n)
        sharp, _ = preshuffle(I, J, A, m, n)
        for K in subsets_between(sharp - stats.e_bar, sharp | {stats.z}):
            key = (len(stats.e_c - K), len(stats.e - K))
            out.setdefault(comp_of(K, m + n), Counter())[key] += 1
    return out
