"""Text format for general propositional formulas.

Grammar, tightest first: ``!`` (negation), ``&`` (n-ary conjunction),
``|`` (n-ary disjunction), ``->`` (implication, right associative),
``<->`` (biconditional, right associative).  Atoms are ``x1, x2, ...``,
the constants are ``T`` and ``F``, parentheses group.  Unparenthesized
``&`` and ``|`` chains parse to a single flat n-ary node; parenthesized
subterms keep their own node, so emit followed by parse reproduces the
tree exactly.  Lines starting with ``c opaque-sat`` are metadata
comments and are skipped.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError
from .prop import FALSE, TRUE, And, Atom, Const, Iff, Implies, Not, Or, PropFormula

_METADATA_PREFIX = "c opaque-sat"


@dataclass(frozen=True)
class _Token:
    kind: str  # 'atom', 'const', 'op', 'lparen', 'rparen', 'end'
    text: str
    line: int
    column: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if raw.lstrip().startswith(_METADATA_PREFIX):
            continue
        i = 0
        while i < len(raw):
            ch = raw[i]
            col = i + 1
            if ch.isspace():
                i += 1
                continue
            if ch == "x":
                j = i + 1
                while j < len(raw) and raw[j].isdigit():
                    j += 1
                digits = raw[i + 1 : j]
                if not digits:
                    raise ParseError("expected digits after 'x'", lineno, col)
                if int(digits) < 1:
                    raise ParseError("variable index must be at least 1", lineno, col)
                tokens.append(_Token("atom", raw[i:j], lineno, col))
                i = j
                continue
            if ch in "TF":
                tokens.append(_Token("const", ch, lineno, col))
                i += 1
                continue
            if ch == "(":
                tokens.append(_Token("lparen", ch, lineno, col))
                i += 1
                continue
            if ch == ")":
                tokens.append(_Token("rparen", ch, lineno, col))
                i += 1
                continue
            if ch in "!&|":
                tokens.append(_Token("op", ch, lineno, col))
                i += 1
                continue
            if raw.startswith("<->", i):
                tokens.append(_Token("op", "<->", lineno, col))
                i += 3
                continue
            if raw.startswith("->", i):
                tokens.append(_Token("op", "->", lineno, col))
                i += 2
                continue
            raise ParseError(f"unexpected character {ch!r}", lineno, col)
    last_line = text.count("\n") + 1
    tokens.append(_Token("end", "", last_line, 1))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def take(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, text: str) -> bool:
        tok = self.peek()
        if tok.kind == "op" and tok.text == text:
            self.pos += 1
            return True
        return False

    def error(self, message: str) -> ParseError:
        tok = self.peek()
        return ParseError(message, tok.line, tok.column)

    def parse(self) -> PropFormula:
        phi = self.iff()
        if self.peek().kind != "end":
            raise self.error(f"unexpected {self.peek().text!r}")
        return phi

    def iff(self) -> PropFormula:
        parts = [self.implication()]
        while self.expect_op("<->"):
            parts.append(self.implication())
        result = parts[-1]
        for part in reversed(parts[:-1]):
            result = Iff(part, result)
        return result

    def implication(self) -> PropFormula:
        parts = [self.disjunction()]
        while self.expect_op("->"):
            parts.append(self.disjunction())
        result = parts[-1]
        for part in reversed(parts[:-1]):
            result = Implies(part, result)
        return result

    def disjunction(self) -> PropFormula:
        parts = [self.conjunction()]
        while self.expect_op("|"):
            parts.append(self.conjunction())
        return parts[0] if len(parts) == 1 else Or(*parts)

    def conjunction(self) -> PropFormula:
        parts = [self.unary()]
        while self.expect_op("&"):
            parts.append(self.unary())
        return parts[0] if len(parts) == 1 else And(*parts)

    def unary(self) -> PropFormula:
        if self.expect_op("!"):
            return Not(self.unary())
        return self.primary()

    def primary(self) -> PropFormula:
        tok = self.take()
        if tok.kind == "atom":
            return Atom(int(tok.text[1:]))
        if tok.kind == "const":
            return TRUE if tok.text == "T" else FALSE
        if tok.kind == "lparen":
            phi = self.iff()
            closing = self.take()
            if closing.kind != "rparen":
                raise ParseError("expected ')'", closing.line, closing.column)
            return phi
        raise ParseError(
            f"expected a formula, got {tok.text!r}" if tok.text else "unexpected end of input",
            tok.line,
            tok.column,
        )


def parse_formula(text: str) -> PropFormula:
    """Parse grammar text into a formula tree."""
    return _Parser(_tokenize(text)).parse()


_PRECEDENCE = {Iff: 0, Implies: 1, Or: 2, And: 3, Not: 4}
_ATOMIC = 5


def _precedence(phi: PropFormula) -> int:
    return _PRECEDENCE.get(type(phi), _ATOMIC)


def _emit(phi: PropFormula, context: int, tight: bool) -> str:
    """Render with the minimal parentheses that preserve the tree shape.

    ``tight`` asks for parentheses even at equal precedence, which is how
    same-operator nesting and left operands of the right-associative
    arrows survive a round trip.
    """
    mine = _precedence(phi)
    if isinstance(phi, Const):
        text = "T" if phi.value else "F"
    elif isinstance(phi, Atom):
        text = f"x{phi.var}"
    elif isinstance(phi, Not):
        text = "!" + _emit(phi.child, _PRECEDENCE[Not], False)
    elif isinstance(phi, And):
        text = " & ".join(_emit(c, _PRECEDENCE[And], True) for c in phi.children)
    elif isinstance(phi, Or):
        text = " | ".join(_emit(c, _PRECEDENCE[Or], True) for c in phi.children)
    elif isinstance(phi, Implies):
        lhs = _emit(phi.lhs, _PRECEDENCE[Implies], True)
        rhs = _emit(phi.rhs, _PRECEDENCE[Implies], False)
        text = f"{lhs} -> {rhs}"
    elif isinstance(phi, Iff):
        lhs = _emit(phi.lhs, _PRECEDENCE[Iff], True)
        rhs = _emit(phi.rhs, _PRECEDENCE[Iff], False)
        text = f"{lhs} <-> {rhs}"
    else:
        raise TypeError(f"not a formula node: {phi!r}")
    if mine < context or (tight and mine == context):
        return f"({text})"
    return text


def emit_formula(phi: PropFormula, comments: tuple[str, ...] = ()) -> str:
    """Serialize a formula tree to canonical grammar text."""
    lines = [f"{_METADATA_PREFIX} {c}" if c else _METADATA_PREFIX for c in comments]
    lines.append(_emit(phi, 0, False))
    return "\n".join(lines) + "\n"
