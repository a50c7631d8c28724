"""Plain-text algebra files.

Layout (whitespace-separated indices, `#` starts a comment):

    semiring <name>          |  semimodule <name> over <file>
    order N                  |  order N
    one K                    |  add
    add                      |  N rows of N indices
    N rows of N indices      |  action
    mul                      |  |S| rows of N indices
    N rows of N indices      |

Parsing a canonical serialization gives back the same text
(parse . serialize == identity).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Callable, Optional, Union

from .core import FiniteSemimodule, FiniteSemiring, validate_semimodule, validate_semiring
from .errors import ParseError


@dataclass
class _Line:
    number: int
    text: str


def _content_lines(text: str) -> list[_Line]:
    out = []
    for i, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].rstrip()
        if body.strip():
            out.append(_Line(i, body))
    return out


class _Cursor:
    def __init__(self, lines: list[_Line]):
        self.lines = lines
        self.pos = 0

    def next(self, what: str) -> _Line:
        if self.pos >= len(self.lines):
            last = self.lines[-1].number if self.lines else 1
            raise ParseError(last, 1, f"unexpected end of file, expected {what}")
        line = self.lines[self.pos]
        self.pos += 1
        return line

    def done(self) -> bool:
        return self.pos >= len(self.lines)


def _expect_keyword(line: _Line, keyword: str) -> list[str]:
    tokens = line.text.split()
    if not tokens or tokens[0] != keyword:
        raise ParseError(line.number, 1, f"expected {keyword!r}, got {tokens[0] if tokens else ''!r}")
    return tokens


def _int_token(line: _Line, token: str, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        col = line.text.find(token) + 1
        raise ParseError(line.number, col, f"{what} must be an integer, got {token!r}")


def _read_rows(cur: _Cursor, nrows: int, ncols: int, limit: int, what: str):
    rows = []
    for r in range(nrows):
        line = cur.next(f"row {r} of {what}")
        tokens = line.text.split()
        if len(tokens) != ncols:
            raise ParseError(line.number, 1,
                             f"{what} row {r} has {len(tokens)} entries, expected {ncols}")
        row = []
        for tok in tokens:
            v = _int_token(line, tok, f"{what} entry")
            if not 0 <= v < limit:
                col = line.text.find(tok) + 1
                raise ParseError(line.number, col,
                                 f"{what} entry {v} outside 0..{limit - 1}")
            row.append(v)
        rows.append(tuple(row))
    return tuple(rows)


Resolver = Callable[[str], FiniteSemiring]


def parse_algebra(text: str, resolver: Optional[Resolver] = None
                  ) -> Union[FiniteSemiring, FiniteSemimodule]:
    """Parse one algebra file; semimodule files need `resolver` to load
    their base semiring from the referenced file name."""
    cur = _Cursor(_content_lines(text))
    head = cur.next("a 'semiring' or 'semimodule' header")
    tokens = head.text.split()
    kind = tokens[0] if tokens else ""
    if kind == "semiring":
        if len(tokens) != 2:
            raise ParseError(head.number, 1, "header must be: semiring <name>")
        name = tokens[1]
        line = cur.next("'order N'")
        toks = _expect_keyword(line, "order")
        if len(toks) != 2:
            raise ParseError(line.number, 1, "expected: order N")
        n = _int_token(line, toks[1], "order")
        if n < 1:
            raise ParseError(line.number, 1, "order must be positive")
        line = cur.next("'one K'")
        toks = _expect_keyword(line, "one")
        if len(toks) != 2:
            raise ParseError(line.number, 1, "expected: one K")
        one = _int_token(line, toks[1], "one")
        line = cur.next("'add'")
        _expect_keyword(line, "add")
        add = _read_rows(cur, n, n, n, "add")
        line = cur.next("'mul'")
        _expect_keyword(line, "mul")
        mul = _read_rows(cur, n, n, n, "mul")
        if not cur.done():
            extra = cur.next("")
            raise ParseError(extra.number, 1, "trailing content after tables")
        if not 0 <= one < n:
            raise ParseError(head.number, 1, f"one index {one} outside 0..{n - 1}")
        return validate_semiring(add, mul, one, name=name)
    if kind == "semimodule":
        if len(tokens) != 4 or tokens[2] != "over":
            raise ParseError(head.number, 1, "header must be: semimodule <name> over <file>")
        name, ref = tokens[1], tokens[3]
        if resolver is None:
            raise ParseError(head.number, 1,
                             "semimodule file needs a resolver for its base semiring")
        S = resolver(ref)
        line = cur.next("'order N'")
        toks = _expect_keyword(line, "order")
        if len(toks) != 2:
            raise ParseError(line.number, 1, "expected: order N")
        n = _int_token(line, toks[1], "order")
        if n < 1:
            raise ParseError(line.number, 1, "order must be positive")
        line = cur.next("'add'")
        _expect_keyword(line, "add")
        add = _read_rows(cur, n, n, n, "add")
        line = cur.next("'action'")
        _expect_keyword(line, "action")
        action = _read_rows(cur, S.order, n, n, "action")
        if not cur.done():
            extra = cur.next("")
            raise ParseError(extra.number, 1, "trailing content after tables")
        return validate_semimodule(S, add, action, name=name)
    raise ParseError(head.number, 1,
                     f"expected 'semiring' or 'semimodule', got {kind!r}")


def load_algebra(path: str) -> Union[FiniteSemiring, FiniteSemimodule]:
    """Load an algebra file; semimodule base references resolve relative
    to the referencing file's directory."""
    base_dir = os.path.dirname(os.path.abspath(path))

    def resolver(ref: str) -> FiniteSemiring:
        target = ref if os.path.isabs(ref) else os.path.join(base_dir, ref)
        loaded = load_algebra(target)
        if not isinstance(loaded, FiniteSemiring):
            raise ParseError(1, 1, f"{ref} is not a semiring file")
        return loaded

    with open(path, "r", encoding="utf-8") as fh:
        return parse_algebra(fh.read(), resolver)


def _rows(table) -> str:
    return "\n".join(" ".join(str(v) for v in row) for row in table)


def serialize_semiring(S: FiniteSemiring) -> str:
    name = S.name or "S"
    if any(ch.isspace() for ch in name):
        name = name.replace(" ", "_")
    return (f"semiring {name}\norder {S.order}\none {S.one}\n"
            f"add\n{_rows(S.add)}\nmul\n{_rows(S.mul)}\n")


def serialize_semimodule(M: FiniteSemimodule, over: str) -> str:
    """`over` is the file name the base semiring lives in."""
    name = M.name or "M"
    if any(ch.isspace() for ch in name):
        name = name.replace(" ", "_")
    return (f"semimodule {name} over {over}\norder {M.order}\n"
            f"add\n{_rows(M.add)}\naction\n{_rows(M.action)}\n")
