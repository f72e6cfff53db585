import logging
import re
from typing import Dict, List, NamedTuple, Optional

from algebra.errors import AlgebraError, VariableIndexError
from algebra.ideal import MonomialIdeal

logger = logging.getLogger(__name__)

_TOKEN = re.compile(r"\s*(?:(?P<indexed>x\d+)|(?P<letter>[A-Za-z])|(?P<nat>\d+)|(?P<op>[,*^]))")


class IdealSyntaxError(AlgebraError):
    def __init__(self, message: str, text: str, column: int):
        super().__init__(f"{message} at column {column}: {text!r}")
        self.text = text
        self.column = column


class ParsedIdeal(NamedTuple):
    ideal: MonomialIdeal
    names: List[str]


class _Token(NamedTuple):
    kind: str
    value: str
    column: int


def _tokenize(text: str) -> List[_Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN.match(text, pos)
        if match is None:
            column = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise IdealSyntaxError(f"Unexpected character {text[column]!r}", text, column)
        kind = match.lastgroup
        tokens.append(_Token(kind, match.group(kind), match.start(kind)))
        pos = match.end()
    return tokens


class _Parser:
    """ideal := mono ("," mono)* ; mono := factor ("*" factor)* ; factor := var ("^" nat)?"""

    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0
        self.style: Optional[str] = None
        self.letters: Dict[str, int] = {}

    def _peek(self) -> Optional[_Token]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _fail(self, message: str) -> IdealSyntaxError:
        token = self._peek()
        column = token.column if token else len(self.text)
        return IdealSyntaxError(message, self.text, column)

    def _expect_op(self, op: str) -> bool:
        token = self._peek()
        if token is not None and token.kind == "op" and token.value == op:
            self.pos += 1
            return True
        return False

    def _variable(self) -> int:
        token = self._peek()
        if token is None or token.kind not in ("indexed", "letter"):
            raise self._fail("Expected a variable")
        if self.style is None:
            self.style = token.kind
        elif self.style != token.kind:
            raise self._fail("Variables must all be x1, x2, ... or all single letters")
        self.pos += 1
        if token.kind == "indexed":
            index = int(token.value[1:])
            if index < 1:
                raise IdealSyntaxError("Variable indices start at x1", self.text, token.column)
            return index
        return self.letters.setdefault(token.value, len(self.letters) + 1)

    def _factor(self) -> Dict[int, int]:
        index = self._variable()
        exponent = 1
        if self._expect_op("^"):
            token = self._peek()
            if token is None or token.kind != "nat":
                raise self._fail("Expected an exponent after '^'")
            exponent = int(token.value)
            if exponent == 0:
                raise IdealSyntaxError(
                    "Zero exponent; omit the factor instead", self.text, token.column
                )
            self.pos += 1
        return {index: exponent}

    def _monomial(self) -> Dict[int, int]:
        exponents: Dict[int, int] = {}
        while True:
            for index, e in self._factor().items():
                exponents[index] = exponents.get(index, 0) + e
            if not self._expect_op("*"):
                return exponents

    def parse(self) -> List[Dict[int, int]]:
        if not self.tokens:
            raise IdealSyntaxError("Empty ideal", self.text, 0)
        monomials = [self._monomial()]
        while self._expect_op(","):
            monomials.append(self._monomial())
        if self._peek() is not None:
            raise self._fail("Unexpected token")
        return monomials


def parse_ideal(text: str, vars: Optional[int] = None) -> ParsedIdeal:
    """
    Parse an ideal written as a comma separated list of monomials.

    Parameters:
    text (str): e.g. "x1^4, x1^3*x2" or "x*y, y*z". Letters are numbered in
        order of first appearance.
    vars (int, optional): number of variables r; defaults to the largest
        index mentioned.

    Returns:
    ParsedIdeal: the minimalized ideal and the variable names used for printing.
    """
    parser = _Parser(text)
    monomials = parser.parse()
    mentioned = max(max(m) for m in monomials)
    r = mentioned if vars is None else vars
    if r < mentioned:
        raise VariableIndexError(f"--vars {r} is smaller than the {mentioned} variables mentioned")

    gens = [tuple(m.get(j, 0) for j in range(1, r + 1)) for m in monomials]
    ideal = MonomialIdeal(r, gens)
    if parser.style == "letter":
        names = sorted(parser.letters, key=parser.letters.get)
        names += [f"x{j}" for j in range(len(names) + 1, r + 1)]
    else:
        names = [f"x{j}" for j in range(1, r + 1)]
    logger.debug(f"Parsed {text!r} into {ideal.s} minimal generators over {r} variables")
    return ParsedIdeal(ideal, names)
