"""
Exact coefficients: rationals, bivariate polynomials and rational functions in q and t.

RatFunc and Poly2 are sympy's sparse field and ring elements over QQ. sympy keeps every
fraction reduced with a sign-normalised denominator, so equal values have equal
representations; `eq` additionally exposes the cross-multiplication test.
"""

import re
from fractions import Fraction
from tokenize import TokenError
from typing import Dict, Hashable, MutableMapping, Union

from sympy import QQ, Symbol
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations
from sympy.polys.fields import FracElement, field
from sympy.polys.rings import PolyElement

from .exceptions import CoefficientError, ParseError, PoleError

QT, q, t = field("q,t", QQ)
QT_RING = QT.ring

RatFunc = FracElement
Poly2 = PolyElement
Rat = Fraction
Scalar = Union[int, Fraction, FracElement]

ZERO = QT.zero
ONE = QT.one

_TRANSFORMS = standard_transformations + (convert_xor,)
_LOCALS = {"q": Symbol("q"), "t": Symbol("t")}
_ALLOWED = re.compile(r"[0-9qt+\-*/^()\s]")


def to_fraction(c) -> Fraction:
    """Convert a QQ ground element (or int/Fraction) to a Fraction."""
    if isinstance(c, (int, Fraction)):
        return Fraction(c)
    return Fraction(int(c.numerator), int(c.denominator))


def const(value: Scalar) -> RatFunc:
    if isinstance(value, FracElement):
        return value
    if isinstance(value, PolyElement):
        return QT(value.set_ring(QT_RING))
    r = Fraction(value)
    return QT(QQ(r.numerator, r.denominator))


def poly_to_ratfunc(p: Poly2) -> RatFunc:
    return QT(p)


def eq(a: RatFunc, b: RatFunc) -> bool:
    a, b = const(a), const(b)
    return a.numer * b.denom == b.numer * a.denom


def is_polynomial(f: RatFunc) -> bool:
    return f.denom.is_ground


def _poly_terms(f: RatFunc):
    """Terms of a polynomial-valued RatFunc with the constant denominator folded in."""
    scale = 1 / to_fraction(f.denom.LC)
    return [(monom, to_fraction(c) * scale) for monom, c in f.numer.terms()]


def is_nonnegative_integral(f: RatFunc) -> bool:
    """True iff f lies in N[q, t]."""
    f = const(f)
    if not is_polynomial(f):
        return False
    return all(c >= 0 and c.denominator == 1 for _, c in _poly_terms(f))


def to_rat(f: RatFunc) -> Fraction:
    f = const(f)
    if not (f.numer.is_ground and f.denom.is_ground):
        raise CoefficientError(f"{format_ratfunc(f)} is not a constant")
    return to_fraction(f.numer.LC if f.numer else 0) / to_fraction(f.denom.LC)


def _eval_poly(p: Poly2, q0: Fraction, t0: Fraction) -> Fraction:
    return sum((to_fraction(c) * q0 ** a * t0 ** b for (a, b), c in p.terms()), Fraction(0))


def evaluate(f: RatFunc, q0: Rat, t0: Rat) -> Fraction:
    f = const(f)
    q0, t0 = Fraction(q0), Fraction(t0)
    den = _eval_poly(f.denom, q0, t0)
    if den == 0:
        raise PoleError(format_ratfunc(f), (str(q0), str(t0)))
    return _eval_poly(f.numer, q0, t0) / den


def _pow(base: RatFunc, e: int) -> RatFunc:
    # sympy refuses 0**0
    return base ** e if e else ONE


def _subs_poly(p: Poly2, qv: RatFunc, tv: RatFunc) -> RatFunc:
    total = ZERO
    for (a, b), c in p.terms():
        total += const(to_fraction(c)) * _pow(qv, a) * _pow(tv, b)
    return total


def substitute(f: RatFunc, qv: Scalar, tv: Scalar) -> RatFunc:
    """Substitute q -> qv and t -> tv, both rational functions (or numbers)."""
    f, qv, tv = const(f), const(qv), const(tv)
    point = (format_ratfunc(qv), format_ratfunc(tv))
    try:
        num, den = _subs_poly(f.numer, qv, tv), _subs_poly(f.denom, qv, tv)
    except ValueError as exc:
        raise CoefficientError(f"cannot substitute q={point[0]}, t={point[1]} in {format_ratfunc(f)}: {exc}") from exc
    if not den:
        raise PoleError(format_ratfunc(f), point)
    return num / den


def cq(u: int, v: int) -> Poly2:
    """(1-q^u)(1-q^(u-1))...(1-q^(u-v+1)); 1 when v = 0 and 0 when v > u."""
    if u < 0 or v < 0:
        raise ValueError("cq expects nonnegative arguments")
    qr = QT_RING.gens[0]
    if v > u:
        return QT_RING.zero
    result = QT_RING.one
    for i in range(v):
        result *= 1 - qr ** (u - i)
    return result


def accumulate(terms: MutableMapping[Hashable, RatFunc], key: Hashable, coeff: Scalar) -> None:
    """Add coeff to terms[key], dropping the entry when it cancels."""
    total = terms.get(key, ZERO) + const(coeff)
    if total:
        terms[key] = total
    else:
        terms.pop(key, None)


def clean(terms: Dict[Hashable, RatFunc]) -> Dict[Hashable, RatFunc]:
    return {k: const(v) for k, v in terms.items() if v}


def _power(name: str, e: int) -> str:
    if e == 0:
        return ""
    return name if e == 1 else f"{name}^{e}"


def _format_terms(terms) -> str:
    if not terms:
        return "0"
    ordered = sorted(terms, key=lambda tc: (-(tc[0][0] + tc[0][1]), -tc[0][0]))
    out = []
    for (a, b), c in ordered:
        mono = "*".join(x for x in (_power("q", a), _power("t", b)) if x)
        mag = abs(c)
        if mono:
            body = mono if mag == 1 else f"{mag}*{mono}"
        else:
            body = str(mag)
        if not out:
            out.append(f"-{body}" if c < 0 else body)
        else:
            out.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(out)


def format_poly(p: Poly2) -> str:
    return _format_terms([(m, to_fraction(c)) for m, c in p.terms()])


def format_ratfunc(f: Scalar) -> str:
    f = const(f)
    if is_polynomial(f):
        return _format_terms(_poly_terms(f))
    return f"({format_poly(f.numer)}) / ({format_poly(f.denom)})"


def parse_ratfunc(text: str) -> RatFunc:
    """Parse "c*q^a*t^b" sums and quotients of them; whitespace is ignored."""
    for column, ch in enumerate(text, start=1):
        if not _ALLOWED.fullmatch(ch):
            raise ParseError(f"unexpected character {ch!r}", text, column)
    if not text.strip():
        raise ParseError("empty coefficient", text, 1)
    try:
        expr = parse_expr(text, local_dict=dict(_LOCALS), transformations=_TRANSFORMS)
    except (SyntaxError, TokenError) as exc:
        column = getattr(exc, "offset", None)
        raise ParseError("invalid coefficient", text, column) from exc
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"invalid coefficient ({exc})", text) from exc
    try:
        return QT.from_expr(expr)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError("not a rational function in q and t", text) from exc
