"""Text notation for elements.

    element := "{" pairs? "|" INT "=>" sign INT "}"
    pairs   := INT "->" INT ("," INT "->" INT)*

``{3->1|4=>+0}`` maps 3 to 1 and every n >= 4 to itself.  Whitespace is
ignored.  The names ``I``, ``p`` and ``q`` stand for the identity, the
up-shift and the down-shift.
"""
from __future__ import annotations

from .core import IDENTITY, PI, SIGMA, PartialBijection, canonicalize
from .errors import ParseError

NAMED = {"I": IDENTITY, "p": PI, "q": SIGMA}


def encode(alpha: PartialBijection) -> str:
    pairs = ",".join(f"{k}->{v}" for k, v in alpha.exceptions)
    return f"{{{pairs}|{alpha.tail_start}=>{alpha.shift:+d}}}"


def to_json(alpha: PartialBijection) -> dict:
    return {
        "exceptions": [[k, v] for k, v in alpha.exceptions],
        "tail": alpha.tail_start,
        "shift": alpha.shift,
    }


def from_json(obj: dict) -> PartialBijection:
    return canonicalize([tuple(p) for p in obj["exceptions"]], obj["tail"], obj["shift"])


class Scanner:
    """Cursor over a string that skips whitespace before every token."""

    def __init__(self, text: str, pos: int = 0):
        self.text = text
        self.pos = pos

    def error(self, message: str, pos: int | None = None) -> ParseError:
        pos = self.pos if pos is None else pos
        return ParseError(message, len(self.text[:pos].encode()))

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, token: str) -> bool:
        self.skip()
        return self.text.startswith(token, self.pos)

    def accept(self, token: str) -> bool:
        if self.peek(token):
            self.pos += len(token)
            return True
        return False

    def expect(self, token: str) -> None:
        if not self.accept(token):
            raise self.error(f"expected {token!r}")

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in "0123456789":
            self.pos += 1
        if start == self.pos:
            raise self.error("expected an integer", start)
        return int(self.text[start:self.pos])

    def at_end(self) -> bool:
        self.skip()
        return self.pos >= len(self.text)


def parse_literal(sc: Scanner) -> PartialBijection:
    """Consume one braced element literal from ``sc``."""
    sc.expect("{")
    pairs = []
    if not sc.peek("|"):
        while True:
            k = sc.integer()
            sc.expect("->")
            pairs.append((k, sc.integer()))
            if not sc.accept(","):
                break
    sc.expect("|")
    start = sc.integer()
    sc.expect("=>")
    if sc.accept("+"):
        sign = 1
    elif sc.accept("-"):
        sign = -1
    else:
        raise sc.error("expected '+' or '-'")
    shift = sign * sc.integer()
    sc.expect("}")
    return canonicalize(pairs, start, shift)


def decode(text: str) -> PartialBijection:
    sc = Scanner(text)
    sc.skip()
    name = text[sc.pos:].strip()
    if name in NAMED:
        return NAMED[name]
    alpha = parse_literal(sc)
    if not sc.at_end():
        raise sc.error("trailing input")
    return alpha
