"""Parser for the ``.lp`` program format.

Grammar (statements end with ``.``; ``%`` starts a comment to end of line):

    rule        := atom ":-" body "."
    fact        := atom "."
    constraint  := ":-" body "."
    query       := "?-" body "."
    body        := literal {"," literal}
    literal     := ["not"] atom | term "!=" term       (guards: schematic only)
    atom        := ident ["(" term {"," term} ")"]
    term        := ident | integer | VARIABLE          (variables: schematic only)

Identifiers are lowercase; variables start with an uppercase letter and are
only legal in schematic (non-ground) files. Interval terms such as ``1..3``
are rejected outright.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .errors import ParseError
from .grounding import Const, Guard, NonGroundRule, SchematicLiteral, Struct, Var
from .syntax import Program, ProgramBuilder

_PUNCT = {
    ":-": ":-",
    "?-": "?-",
    "!=": "!=",
    "\\=": "!=",
    "..": "..",
}


@dataclass(frozen=True)
class _Token:
    kind: str  # ident | var | int | punct
    text: str
    line: int
    column: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i, line, col = 0, 1, 1
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            i += 1
            line += 1
            col = 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "%":
            while i < n and text[i] != "\n":
                i += 1
            continue
        two = text[i : i + 2]
        if two in _PUNCT:
            tokens.append(_Token("punct", _PUNCT[two], line, col))
            i += 2
            col += 2
            continue
        if ch in ".,()":
            tokens.append(_Token("punct", ch, line, col))
            i += 1
            col += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("int", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            kind = "var" if word[0].isupper() else "ident"
            tokens.append(_Token(kind, word, line, col))
            col += j - i
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    return tokens


@dataclass(frozen=True)
class _RawStatement:
    kind: str  # rule | constraint | query
    head: Optional[Struct]
    body: tuple[Union[SchematicLiteral, Guard], ...]
    line: int


class _Parser:
    def __init__(self, tokens: list[_Token], allow_variables: bool):
        self.tokens = tokens
        self.pos = 0
        self.allow_variables = allow_variables

    def _peek(self) -> Optional[_Token]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _next(self) -> _Token:
        tok = self._peek()
        if tok is None:
            last = self.tokens[-1] if self.tokens else _Token("punct", "", 1, 1)
            raise ParseError("unexpected end of input", last.line, last.column)
        self.pos += 1
        return tok

    def _expect(self, text: str) -> _Token:
        tok = self._next()
        if tok.text != text:
            raise ParseError(f"expected {text!r}, found {tok.text!r}", tok.line, tok.column)
        return tok

    def statements(self) -> list[_RawStatement]:
        out = []
        while self._peek() is not None:
            out.append(self._statement())
        return out

    def _statement(self) -> _RawStatement:
        tok = self._peek()
        assert tok is not None
        if tok.text == ":-":
            self._next()
            body = self._body()
            self._expect(".")
            if not body:
                raise ParseError("constraint needs a non-empty body", tok.line, tok.column)
            return _RawStatement("constraint", None, tuple(body), tok.line)
        if tok.text == "?-":
            self._next()
            body = self._body()
            self._expect(".")
            return _RawStatement("query", None, tuple(body), tok.line)
        head = self._struct()
        nxt = self._next()
        if nxt.text == ".":
            return _RawStatement("rule", head, (), tok.line)
        if nxt.text == ":-":
            body = self._body()
            self._expect(".")
            return _RawStatement("rule", head, tuple(body), tok.line)
        raise ParseError(f"expected '.' or ':-', found {nxt.text!r}", nxt.line, nxt.column)

    def _body(self) -> list[Union[SchematicLiteral, Guard]]:
        items = [self._body_element()]
        while self._peek() is not None and self._peek().text == ",":
            self._next()
            items.append(self._body_element())
        return items

    def _body_element(self) -> Union[SchematicLiteral, Guard]:
        tok = self._peek()
        assert tok is not None
        if tok.kind == "ident" and tok.text == "not":
            self._next()
            return SchematicLiteral(self._struct(), negated=True)
        if tok.kind == "var":
            left = self._term()
            op = self._next()
            if op.text != "!=":
                raise ParseError(
                    f"expected '!=' after variable, found {op.text!r}", op.line, op.column
                )
            right = self._term()
            return Guard(left, right)
        struct = self._struct()
        nxt = self._peek()
        if nxt is not None and nxt.text == "!=":
            if struct.args:
                raise ParseError("'!=' expects plain terms", nxt.line, nxt.column)
            self._next()
            right = self._term()
            return Guard(Const(struct.pred), right)
        return SchematicLiteral(struct, negated=False)

    def _struct(self) -> Struct:
        tok = self._next()
        if tok.kind == "var":
            raise ParseError(
                f"variable {tok.text!r} not allowed as a predicate", tok.line, tok.column
            )
        if tok.kind != "ident":
            raise ParseError(f"expected an atom, found {tok.text!r}", tok.line, tok.column)
        if tok.text == "not":
            raise ParseError("'not' must precede an atom", tok.line, tok.column)
        args: list[Union[Const, Var]] = []
        nxt = self._peek()
        if nxt is not None and nxt.text == "(":
            self._next()
            args.append(self._term())
            while True:
                sep = self._next()
                if sep.text == ")":
                    break
                if sep.text != ",":
                    raise ParseError(
                        f"expected ',' or ')', found {sep.text!r}", sep.line, sep.column
                    )
                args.append(self._term())
        return Struct(tok.text, tuple(args))

    def _term(self) -> Union[Const, Var]:
        tok = self._next()
        if tok.kind == "var":
            if not self.allow_variables:
                raise ParseError(
                    f"variable {tok.text!r} in a grounded program", tok.line, tok.column
                )
            return Var(tok.text)
        if tok.kind == "int":
            nxt = self._peek()
            if nxt is not None and nxt.text == "..":
                raise ParseError(
                    "interval terms are not allowed; declare each instance separately",
                    nxt.line,
                    nxt.column,
                )
            return Const(tok.text)
        if tok.kind == "ident":
            return Const(tok.text)
        raise ParseError(f"expected a term, found {tok.text!r}", tok.line, tok.column)


def parse_program(text: str) -> Program:
    """Parse grounded source into a :class:`Program`.

    Comments are stripped, duplicate body literals deduplicated, and an
    optional ``?- l1, ..., lk.`` directive is recorded as the query.
    Variables, guards and interval terms raise :class:`ParseError`.
    """
    statements = _Parser(_tokenize(text), allow_variables=False).statements()
    builder = ProgramBuilder()
    query_seen = False
    for st in statements:
        pairs = []
        for el in st.body:
            if isinstance(el, Guard):
                raise ParseError("'!=' guard in a grounded program", st.line, 1)
            pairs.append((el.struct.render(), el.negated))
        if st.kind == "query":
            if query_seen:
                raise ParseError("multiple query directives", st.line, 1)
            query_seen = True
            builder.set_query(pairs)
        else:
            head = st.head.render() if st.head is not None else None
            builder.add_rule(head, pairs)
    return builder.build()


def parse_schematic(text: str) -> list[NonGroundRule]:
    """Parse a rule file that may contain variables and ``!=`` guards.

    Ground statements are returned too (as variable-free rules); query
    directives are not allowed in schematic files.
    """
    statements = _Parser(_tokenize(text), allow_variables=True).statements()
    rules = []
    for st in statements:
        if st.kind == "query":
            raise ParseError("query directive in a schematic file", st.line, 1)
        literals = tuple(el for el in st.body if isinstance(el, SchematicLiteral))
        guards = tuple(el for el in st.body if isinstance(el, Guard))
        rules.append(NonGroundRule(head=st.head, body=literals, guards=guards))
    return rules
