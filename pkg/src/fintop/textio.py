"""Reading and writing the line-oriented space format.

A space block looks like::

    # comments start with '#'
    points: x y z
    opens: {} {x} {y} {x y} {x y z}

The second line may instead be ``minbase: x:{x} y:{y} z:{x y z}`` or
``order: z<x z<y`` (``u<v`` declares ``u <= v``; the reflexive-transitive
closure is taken, and a bare ``order:`` is an antichain).  A file may hold
several blocks; each starts at its ``points:`` line.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterator

from . import bits
from .errors import FinTopError, ParseError
from .space import Preorder, Space, space_from_minbase, space_from_preorder, validate_topology

IDENT = re.compile(r"[A-Za-z0-9_]+")
_TOKEN = re.compile(r"\s*(?:(?P<ident>[A-Za-z0-9_]+)|(?P<punct>[{}:<,])|(?P<bad>\S))")


class _Cursor:
    """Tokenizer over one line that remembers columns for error messages."""

    def __init__(self, text: str, line: int, offset: int = 0):
        self.text = text
        self.line = line
        self.offset = offset
        self.tokens: list[tuple[str, str, int]] = []
        for m in _TOKEN.finditer(text):
            kind = m.lastgroup
            col = m.start(kind) + 1 + offset
            if kind == "bad":
                raise ParseError(f"unexpected character {m.group(kind)!r}", line, col)
            self.tokens.append((kind, m.group(kind), col))
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def end_column(self) -> int:
        return len(self.text) + 1 + self.offset

    def take(self, expect: str | None = None, kind: str | None = None):
        tok = self.peek()
        if tok is None:
            want = repr(expect) if expect else (kind or "token")
            raise ParseError(f"expected {want}, found end of line", self.line, self.end_column())
        if expect is not None and tok[1] != expect:
            raise ParseError(f"expected {expect!r}, found {tok[1]!r}", self.line, tok[2])
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected identifier, found {tok[1]!r}", self.line, tok[2])
        self.pos += 1
        return tok

    def done(self) -> bool:
        return self.pos >= len(self.tokens)


def _read_set(cur: _Cursor, index: dict[str, int]) -> int:
    cur.take("{")
    mask = 0
    while True:
        tok = cur.peek()
        if tok is None:
            raise ParseError("unterminated set, expected '}'", cur.line, cur.end_column())
        if tok[1] == "}":
            cur.take()
            return mask
        _, name, col = cur.take(kind="ident")
        if name not in index:
            raise ParseError(f"unknown point {name!r}", cur.line, col)
        mask |= 1 << index[name]


def _logical_lines(text: str) -> Iterator[tuple[int, str]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if body.strip():
            yield lineno, body


def _split_key(lineno: int, body: str) -> tuple[str, str, int]:
    stripped = body.lstrip()
    lead = len(body) - len(stripped)
    key, sep, rest = stripped.partition(":")
    if not sep:
        raise ParseError("expected 'key:' at start of line", lineno, lead + 1)
    return key.strip(), rest, lead + len(key) + 2


def _parse_points(lineno: int, rest: str, offset: int) -> list[str]:
    labels = []
    cur = _Cursor(rest, lineno, offset - 1)
    while not cur.done():
        _, name, col = cur.take(kind="ident")
        if name in labels:
            raise ParseError(f"duplicate point {name!r}", lineno, col)
        labels.append(name)
    if not labels:
        raise ParseError("a space needs at least one point", lineno, offset)
    return labels


def _parse_body(key: str, lineno: int, rest: str, offset: int, labels: list[str]) -> Space:
    index = {name: i for i, name in enumerate(labels)}
    n = len(labels)
    cur = _Cursor(rest, lineno, offset - 1)
    if key == "opens":
        opens = []
        while not cur.done():
            opens.append(_read_set(cur, index))
        return validate_topology(n, opens, labels)
    if key == "minbase":
        assigned: dict[int, int] = {}
        while not cur.done():
            _, name, col = cur.take(kind="ident")
            if name not in index:
                raise ParseError(f"unknown point {name!r}", lineno, col)
            if index[name] in assigned:
                raise ParseError(f"point {name!r} assigned twice", lineno, col)
            cur.take(":")
            assigned[index[name]] = _read_set(cur, index)
        for name in labels:
            if index[name] not in assigned:
                raise ParseError(f"no neighborhood given for point {name!r}", lineno, offset)
        return space_from_minbase(assigned, labels)
    if key == "order":
        pairs = []
        while not cur.done():
            _, lo, col = cur.take(kind="ident")
            cur.take("<")
            _, hi, col2 = cur.take(kind="ident")
            for name, c in ((lo, col), (hi, col2)):
                if name not in index:
                    raise ParseError(f"unknown point {name!r}", lineno, c)
            pairs.append((index[lo], index[hi]))
        return space_from_preorder(Preorder.from_pairs(n, pairs), labels)
    raise ParseError(f"expected 'opens:', 'minbase:' or 'order:', found {key!r}", lineno, 1)


def parse_spaces(text: str) -> list[Space]:
    """Parse every space block in ``text``."""
    spaces = []
    labels = None
    last_line = 0
    for lineno, body in _logical_lines(text):
        last_line = lineno
        key, rest, offset = _split_key(lineno, body)
        if labels is None:
            if key != "points":
                raise ParseError(f"expected 'points:', found {key!r}", lineno, 1)
            labels = _parse_points(lineno, rest, offset)
            continue
        if key == "points":
            raise ParseError("'points:' line without a topology line before it", lineno, 1)
        try:
            spaces.append(_parse_body(key, lineno, rest, offset, labels))
        except FinTopError as exc:
            if isinstance(exc, ParseError):
                raise
            # domain errors keep their type; attach the position for reporting
            exc.line = lineno
            raise
        labels = None
    if labels is not None:
        raise ParseError("missing 'opens:', 'minbase:' or 'order:' line", last_line + 1, 1)
    if not spaces:
        raise ParseError("no space found", 1, 1)
    return spaces


def parse_space(text: str) -> Space:
    spaces = parse_spaces(text)
    if len(spaces) != 1:
        raise ParseError(f"expected exactly one space, found {len(spaces)}", 1, 1)
    return spaces[0]


def load_space(path) -> Space:
    with open(path, encoding="utf-8") as fh:
        return parse_space(fh.read())


def format_space(space: Space, style: str = "opens") -> str:
    lines = ["points: " + " ".join(space.labels)]
    if style == "opens":
        lines.append("opens: " + " ".join(space.fmt(g) for g in space.opens))
    elif style == "minbase":
        lines.append("minbase: " + " ".join(f"{space.labels[x]}:{space.fmt(u)}"
                                            for x, u in enumerate(space.min_nbhd)))
    elif style == "order":
        order = space.order
        pairs = [f"{space.labels[x]}<{space.labels[y]}"
                 for x in range(space.n) for y in bits.members(order.up[x]) if y != x]
        lines.append(("order: " + " ".join(pairs)).rstrip())
    else:
        raise ValueError(f"unknown style {style!r}")
    return "\n".join(lines) + "\n"


def parse_set(space: Space, text: str) -> int:
    """Parse a ``{a b c}`` literal against the labels of ``space``."""
    cur = _Cursor(text, 1)
    mask = _read_set(cur, {name: i for i, name in enumerate(space.labels)})
    if not cur.done():
        raise ParseError("trailing text after set", 1, cur.peek()[2])
    return mask


def parse_map(source: Space, target: Space, text: str, multi: bool = False) -> list:
    """Parse ``"x:x y:z"`` (point map) or ``"a:{a b} b:{a}"`` (multifunction).

    Returns one target index (or target mask when ``multi``) per source point.
    """
    src = {name: i for i, name in enumerate(source.labels)}
    dst = {name: i for i, name in enumerate(target.labels)}
    cur = _Cursor(text, 1)
    image: list = [None] * source.n
    while not cur.done():
        _, name, col = cur.take(kind="ident")
        if name not in src:
            raise ParseError(f"unknown source point {name!r}", 1, col)
        if image[src[name]] is not None:
            raise ParseError(f"source point {name!r} mapped twice", 1, col)
        cur.take(":")
        if multi:
            image[src[name]] = _read_set(cur, dst)
        else:
            _, val, col = cur.take(kind="ident")
            if val not in dst:
                raise ParseError(f"unknown target point {val!r}", 1, col)
            image[src[name]] = dst[val]
    for name, i in src.items():
        if image[i] is None:
            raise ParseError(f"source point {name!r} has no image", 1, len(text) + 1)
    return image


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not re.fullmatch(r"[+-]?\d+(/\d+)?", text):
        raise ParseError(f"not a rational number: {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {text!r}") from None


def parse_cuts(text: str) -> list[Fraction]:
    """``"0,1/2,1"`` to a list of rationals."""
    return [parse_rational(part) for part in text.split(",")]


def parse_pwl(text: str) -> list[tuple[Fraction, Fraction]]:
    """``"0:3/4 1/4:1/4 1:1/2"`` to ``(breakpoint, value)`` pairs."""
    pairs = []
    for item in text.split():
        x, sep, y = item.partition(":")
        if not sep:
            raise ParseError(f"expected breakpoint:value, found {item!r}")
        pairs.append((parse_rational(x), parse_rational(y)))
    return pairs
