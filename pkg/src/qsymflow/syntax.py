"""
Text forms of elements and evaluation points.

An element is either the JSON wire form (`ElementModel`) or a linear combination of inline
basis elements, the same shape `str(QSymElement)` prints:

    D[2,1]    K[2,1](nu=3)    M[]    2*L[1,2] - (q + t)*L[3]
"""

import json
import re
from fractions import Fraction
from typing import Dict, Optional, Tuple

from pydantic import ValidationError

from .coeff import ONE, RatFunc, parse_ratfunc
from .exceptions import BasisMismatchError, ParseError
from .qsym import BASIS_NAMES, BasisTag, QSymElement
from .schemas import ElementModel

_ELEMENT = re.compile(r"([A-Za-z]+)\[([^\[\]]*)\](?:\(nu=\s*(\d+)\s*\))?")
_POINT = re.compile(r"\s*([qt])\s*=\s*([-+]?\d+(?:/\d+)?)\s*")


def _parts(body: str, text: str, column: int) -> Tuple[int, ...]:
    if not body.strip():
        return ()
    parts = []
    for piece in body.split(","):
        piece = piece.strip()
        if not piece.isdigit() or int(piece) < 1:
            raise ParseError(f"composition parts must be positive integers, got {piece!r}", text, column)
        parts.append(int(piece))
    return tuple(parts)


def _coefficient(prefix: str, first: bool, text: str, column: int) -> RatFunc:
    """The sign and coefficient written in front of one basis element."""
    prefix = prefix.strip()
    sign = 1
    if prefix and prefix[0] in "+-":
        sign = -1 if prefix[0] == "-" else 1
        prefix = prefix[1:].strip()
    elif not first:
        raise ParseError("expected '+' or '-' between terms", text, column)
    if prefix.endswith("*"):
        prefix = prefix[:-1].strip()
    elif prefix:
        raise ParseError("expected '*' before the basis element", text, column)
    if not prefix:
        return ONE * sign
    return parse_ratfunc(prefix) * sign


def parse_inline(text: str) -> QSymElement:
    tag: Optional[BasisTag] = None
    out: Optional[QSymElement] = None
    position = 0
    for match in _ELEMENT.finditer(text):
        column = match.start() + 1
        name, body, nu = match.groups()
        if name not in BASIS_NAMES:
            raise ParseError(f"unknown basis {name!r}", text, column)
        try:
            this = BasisTag(name=name, nu=int(nu) if nu else None)
        except ValidationError as exc:
            raise ParseError(exc.errors()[0]["msg"], text, column) from exc
        if tag is not None and this != tag:
            raise BasisMismatchError(f"terms in {tag} and {this} cannot be combined")
        tag = this
        c = _coefficient(text[position:match.start()], out is None, text, position + 1)
        term = QSymElement.basis_element(tag, _parts(body, text, column), c)
        out = term if out is None else out + term
        position = match.end()
    if out is None:
        raise ParseError("no basis element found", text, 1)
    if text[position:].strip():
        raise ParseError("trailing text", text, position + 1)
    return out


def parse_element(text: str) -> QSymElement:
    """Inline syntax or the JSON wire form, chosen by the first character."""
    if text.lstrip().startswith("{"):
        try:
            return ElementModel.model_validate(json.loads(text)).to_element()
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, text, exc.colno) from exc
        except ValidationError as exc:
            raise ParseError(f"invalid element JSON ({exc.error_count()} errors)", text) from exc
    return parse_inline(text)


def parse_point(text: str) -> Dict[str, Fraction]:
    """"q=1/2,t=-1" -> {"q": 1/2, "t": -1}; either variable may be left out."""
    point: Dict[str, Fraction] = {}
    offset = 0
    for piece in text.split(","):
        match = _POINT.fullmatch(piece)
        if match is None:
            raise ParseError("expected q=<rational> or t=<rational>", text, offset + 1)
        name, value = match.groups()
        if name in point:
            raise ParseError(f"{name} given twice", text, offset + 1)
        point[name] = Fraction(value)
        offset += len(piece) + 1
    return point
