"""
CUTSPEC - Cut monoids, quasi-valuations and prime spectra
MIT License

Copyright (c) 2026 cutspec developers

Permission is hereby granted, free of charge, to any person obtaining a copy
of this software and associated documentation files (the "Software"), to deal
in the Software without restriction, including without limitation the rights
to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
copies of the Software, and to permit persons to whom the Software is
furnished to do so, subject to the following conditions:

The above copyright notice and this permission notice shall be included in all
copies or substantial portions of the Software.

THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
SOFTWARE.
"""
import re

from .exceptions import CutExpressionError
from .field_model import principal
from .ordered_values import (
    Cut,
    GroupElem,
    IsolatedSubgroup,
    add_cut,
    embed,
    isolated_plus,
    scale_cut,
    sub_group,
    validate_rank,
)
from .typing import List, Tuple

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*·(),\[\]]))"
)

KEYWORDS = ("top", "bottom", "infty")
FUNCTIONS = ("embed", "prefix", "principal", "Hplus")

Token = Tuple[str, str, int]


def tokenize(text: str) -> List[Token]:
    """
    Splits a cut expression into (kind, text, position) tokens, ending
    with an ("end", "", len(text)) token.
    """
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN_RE.match(text, pos)
        if not match:
            offset = len(text[pos:]) - len(text[pos:].lstrip())
            raise CutExpressionError(
                f"unexpected character '{text[pos + offset]}'", pos + offset
            )
        kind = match.lastgroup
        tokens.append((kind, match.group(kind), match.start(kind)))
        pos = match.end()
    tokens.append(("end", "", len(text)))
    return tokens


class CutParser:
    """
    Recursive descent parser for cut expressions:

        expr  := term (("+" term) | ("-" group))*
        term  := INT ("*" | "·") term | atom
        atom  := "top" | "bottom" | "infty" | group
               | "embed" "(" group ")" | "prefix" "(" list ")"
               | "principal" "(" group ")" | "Hplus" "(" INT ")"
               | "(" expr ")"
        group := "-"? (INT | list)
        list  := "[" "-"? INT ("," "-"? INT)* "]"

    A bare group literal stands for its embedding. Integers are group
    elements only at rank 1.
    """

    def __init__(self, text: str, rank: int) -> None:
        self.text = text
        self.rank = validate_rank(rank)
        self.tokens = tokenize(text)
        self.idx = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.idx]

    def error(self, message: str) -> CutExpressionError:
        return CutExpressionError(message, self.current[2])

    def accept(self, text: str) -> bool:
        if self.current[1] == text and self.current[0] != "end":
            self.idx += 1
            return True
        return False

    def expect(self, text: str) -> None:
        if not self.accept(text):
            found = self.current[1] or "end of input"
            raise self.error(f"expected '{text}', found '{found}'")

    def integer(self) -> int:
        negative = self.accept("-")
        kind, text, _ = self.current
        if kind != "int":
            raise self.error("expected an integer")
        self.idx += 1
        return -int(text) if negative else int(text)

    def int_list(self) -> List[int]:
        self.expect("[")
        values = [self.integer()]
        while self.accept(","):
            values.append(self.integer())
        self.expect("]")
        return values

    def group(self) -> GroupElem:
        start = self.current[2]
        negative = self.accept("-")
        if self.current[1] == "[":
            coords = self.int_list()
        elif self.current[0] == "int":
            if self.rank != 1:
                raise self.error(
                    f"integer group literals need rank 1, rank is {self.rank}"
                )
            coords = [self.integer()]
        else:
            raise self.error("expected a group element")
        if len(coords) != self.rank:
            raise CutExpressionError(
                f"group element {coords} does not have rank {self.rank}",
                start,
            )
        value = GroupElem(coords)
        return -value if negative else value

    def parse(self) -> Cut:
        result = self.expr()
        if self.current[0] != "end":
            raise self.error(f"unexpected '{self.current[1]}'")
        return result

    def expr(self) -> Cut:
        result = self.term()
        while True:
            if self.accept("+"):
                result = add_cut(result, self.term())
            elif self.accept("-"):
                result = sub_group(result, self.group())
            else:
                return result

    def term(self) -> Cut:
        kind, text, _ = self.current
        following = self.tokens[self.idx + 1][1]
        if kind == "int" and following in ("*", "·"):
            self.idx += 2
            n = int(text)
            if n < 1:
                raise self.error("multiples must be positive")
            return scale_cut(n, self.term())
        return self.atom()

    def atom(self) -> Cut:
        kind, text, _ = self.current
        if kind == "name":
            self.idx += 1
            if text == "top":
                return Cut.top(self.rank)
            if text == "bottom":
                return Cut.bottom(self.rank)
            if text == "infty":
                return Cut.infty(self.rank)
            if text not in FUNCTIONS:
                self.idx -= 1
                raise self.error(f"unknown name '{text}'")
            self.expect("(")
            result = getattr(self, f"_{text.lower()}")()
            self.expect(")")
            return result
        if self.accept("("):
            result = self.expr()
            self.expect(")")
            return result
        return embed(self.group())

    def _embed(self) -> Cut:
        return embed(self.group())

    def _prefix(self) -> Cut:
        start = self.current[2]
        values = self.int_list()
        if len(values) > self.rank:
            raise CutExpressionError(
                f"prefix {values} is longer than rank {self.rank}", start
            )
        return Cut.from_prefix(values, self.rank)

    def _principal(self) -> Cut:
        return principal(self.group()).boundary

    def _hplus(self) -> Cut:
        start = self.current[2]
        index = self.integer()
        try:
            return isolated_plus(IsolatedSubgroup(self.rank, index))
        except ValueError as err:
            raise CutExpressionError(str(err), start) from err


def parse_cut(text: str, rank: int) -> Cut:
    """
    Evaluates a cut expression.

    Args:
        text (str): The expression, e.g. "prefix([3]) + principal([0, 7])".
        rank (int): Rank of the value group.

    Returns:
        cut (Cut): The canonical cut.

    Raises:
        CutExpressionError: With the character position of the error.
    """
    return CutParser(text, rank).parse()
