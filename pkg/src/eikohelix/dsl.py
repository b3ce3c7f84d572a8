"""Expression and curve-spec parsing.

Two small languages live here. The expression language covers curve
components (functions of the parameter ``s``) and scalar fields (functions
of coordinates ``x1 .. xn``) with arithmetic, constant powers, and the
function set {sin, cos, exp, sqrt, ln}. The curve-spec document language is
a flat ``key = value`` text format holding a dimension, component
expressions, a field expression, a parameter range, and sampling/tolerance
settings.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import (
    CoordOutOfRange,
    DimensionMismatch,
    DslError,
    ExprSyntaxError,
    IllegalCharacter,
    MissingField,
    SpecDocumentError,
    UnknownIdentifier,
    WrongSymbolKind,
)

FUNCTIONS = ("sin", "cos", "exp", "sqrt", "ln")
NAMED_CONSTANTS = {"pi": math.pi, "e": math.e}

DEFAULT_SAMPLES = 512
DEFAULT_TOL_CONST = 1e-8
DEFAULT_TOL_FRAME = 1e-10


# --------------------------------------------------------------------- AST


class Expr:
    """Base class of expression nodes. Nodes are immutable and comparable."""

    __slots__ = ()


@dataclass(frozen=True)
class Constant(Expr):
    value: float


@dataclass(frozen=True)
class Param(Expr):
    """The curve parameter symbol ``s``."""


@dataclass(frozen=True)
class Coord(Expr):
    """A field coordinate ``x1 .. xn`` (1-based index)."""

    index: int


@dataclass(frozen=True)
class Unary(Expr):
    op: str  # neg | sin | cos | exp | sqrt | ln
    child: Expr


@dataclass(frozen=True)
class Binary(Expr):
    op: str  # + - * / ^
    left: Expr
    right: Expr


def is_constant_expr(expr: Expr) -> bool:
    """True when the expression contains no Param or Coord node."""
    if isinstance(expr, Constant):
        return True
    if isinstance(expr, (Param, Coord)):
        return False
    if isinstance(expr, Unary):
        return is_constant_expr(expr.child)
    if isinstance(expr, Binary):
        return is_constant_expr(expr.left) and is_constant_expr(expr.right)
    raise TypeError(f"not an Expr: {expr!r}")


def constant_value(expr: Expr) -> float:
    """Evaluate a constant expression to a float."""
    if isinstance(expr, Constant):
        return expr.value
    if isinstance(expr, Unary):
        v = constant_value(expr.child)
        if expr.op == "neg":
            return -v
        return getattr(math, "log" if expr.op == "ln" else expr.op)(v)
    if isinstance(expr, Binary):
        a = constant_value(expr.left)
        b = constant_value(expr.right)
        return {
            "+": lambda: a + b,
            "-": lambda: a - b,
            "*": lambda: a * b,
            "/": lambda: a / b,
            "^": lambda: a**b,
        }[expr.op]()
    raise ExprSyntaxError("expression is not constant")


# ------------------------------------------------------------------ tokens


@dataclass(frozen=True)
class Token:
    kind: str  # num | ident | op | lparen | rparen | end
    text: str
    position: int


_OP_CHARS = "+-*/^"


def tokenize(source: str) -> list[Token]:
    """Split an expression source string into tokens.

    Numbers support decimal and exponent notation. Identifiers are
    alphanumeric starting with a letter. Raises IllegalCharacter with the
    0-based offset of the first unrecognized character.
    """
    tokens: list[Token] = []
    i = 0
    n = len(source)
    while i < n:
        ch = source[i]
        if ch in " \t\r\n":
            i += 1
            continue
        if ch in _OP_CHARS:
            tokens.append(Token("op", ch, i))
            i += 1
            continue
        if ch == "(":
            tokens.append(Token("lparen", ch, i))
            i += 1
            continue
        if ch == ")":
            tokens.append(Token("rparen", ch, i))
            i += 1
            continue
        if ch.isdigit() or (ch == "." and i + 1 < n and source[i + 1].isdigit()):
            start = i
            while i < n and source[i].isdigit():
                i += 1
            if i < n and source[i] == ".":
                i += 1
                while i < n and source[i].isdigit():
                    i += 1
            if i < n and source[i] in "eE":
                j = i + 1
                if j < n and source[j] in "+-":
                    j += 1
                if j < n and source[j].isdigit():
                    i = j
                    while i < n and source[i].isdigit():
                        i += 1
            tokens.append(Token("num", source[start:i], start))
            continue
        if ch.isalpha() or ch == "_":
            start = i
            while i < n and (source[i].isalnum() or source[i] == "_"):
                i += 1
            tokens.append(Token("ident", source[start:i], start))
            continue
        raise IllegalCharacter(ch, i)
    tokens.append(Token("end", "", n))
    return tokens


# ------------------------------------------------------------------ parser


class _ExprParser:
    """Recursive-descent parser with precedence ^ > unary- > */ > +-.

    ``^`` is right-associative and its exponent must be a constant
    expression; the other binary operators are left-associative.
    """

    def __init__(self, tokens: list[Token], kind: str, dimension: int):
        if kind not in ("curve", "field"):
            raise ValueError("kind must be 'curve' or 'field'")
        self.tokens = tokens
        self.kind = kind
        self.dimension = dimension
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str, text: str | None = None) -> Token:
        tok = self.peek()
        if tok.kind != kind or (text is not None and tok.text != text):
            want = text or kind
            raise ExprSyntaxError(f"expected {want!r}, found {tok.text or 'end'!r}", tok.position)
        return self.advance()

    def parse(self) -> Expr:
        expr = self.sum()
        tok = self.peek()
        if tok.kind != "end":
            raise ExprSyntaxError(f"unexpected {tok.text!r} after expression", tok.position)
        return expr

    def sum(self) -> Expr:
        expr = self.term()
        while self.peek().kind == "op" and self.peek().text in "+-":
            op = self.advance().text
            expr = Binary(op, expr, self.term())
        return expr

    def term(self) -> Expr:
        expr = self.factor()
        while self.peek().kind == "op" and self.peek().text in "*/":
            op = self.advance().text
            expr = Binary(op, expr, self.factor())
        return expr

    def factor(self) -> Expr:
        tok = self.peek()
        if tok.kind == "op" and tok.text == "-":
            self.advance()
            return Unary("neg", self.factor())
        if tok.kind == "op" and tok.text == "+":
            self.advance()
            return self.factor()
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        tok = self.peek()
        if tok.kind == "op" and tok.text == "^":
            self.advance()
            exponent = self.factor()  # right-assoc; allows 2^-3 and 2^3^2
            if not is_constant_expr(exponent):
                raise ExprSyntaxError(
                    "exponent of '^' must be a constant expression", tok.position
                )
            return Binary("^", base, exponent)
        return base

    def atom(self) -> Expr:
        tok = self.advance()
        if tok.kind == "num":
            return Constant(float(tok.text))
        if tok.kind == "lparen":
            expr = self.sum()
            self.expect("rparen")
            return expr
        if tok.kind == "ident":
            return self.identifier(tok)
        raise ExprSyntaxError(f"unexpected {tok.text or 'end'!r}", tok.position)

    def identifier(self, tok: Token) -> Expr:
        name = tok.text
        if name in FUNCTIONS:
            self.expect("lparen")
            arg = self.sum()
            self.expect("rparen")
            return Unary(name, arg)
        if name in NAMED_CONSTANTS:
            return Constant(NAMED_CONSTANTS[name])
        if name == "s":
            if self.kind != "curve":
                raise WrongSymbolKind(
                    "parameter 's' not allowed in a field expression", tok.position
                )
            return Param()
        if name.startswith("x") and name[1:].isdigit():
            index = int(name[1:])
            if self.kind != "field":
                raise WrongSymbolKind(
                    f"coordinate {name!r} not allowed in a curve component", tok.position
                )
            if not 1 <= index <= self.dimension:
                raise CoordOutOfRange(index, self.dimension, tok.position)
            return Coord(index)
        raise UnknownIdentifier(name, tok.position)


def parse_expression(tokens: list[Token], kind: str, dimension: int) -> Expr:
    """Parse a token sequence into an Expr.

    ``kind`` selects which symbols are legal: 'curve' admits the parameter
    ``s``, 'field' admits coordinates ``x1 .. x<dimension>``.
    """
    return _ExprParser(tokens, kind, dimension).parse()


def parse_expr_text(source: str, kind: str, dimension: int = 0) -> Expr:
    return parse_expression(tokenize(source), kind, dimension)


# ---------------------------------------------------------------- printing

_PRECEDENCE = {"+": 1, "-": 1, "*": 2, "/": 2, "neg": 3, "^": 4}


def format_expr(expr: Expr) -> str:
    """Render an Expr as parseable source text with minimal parentheses."""
    return _format(expr, 0)


def _format(expr: Expr, parent_prec: int) -> str:
    if isinstance(expr, Constant):
        return repr(expr.value) if expr.value >= 0 else f"({expr.value!r})"
    if isinstance(expr, Param):
        return "s"
    if isinstance(expr, Coord):
        return f"x{expr.index}"
    if isinstance(expr, Unary):
        if expr.op == "neg":
            text = "-" + _format(expr.child, _PRECEDENCE["neg"])
            return f"({text})" if parent_prec > _PRECEDENCE["neg"] else text
        return f"{expr.op}({_format(expr.child, 0)})"
    if isinstance(expr, Binary):
        prec = _PRECEDENCE[expr.op]
        if expr.op == "^":
            # right-assoc: parenthesize a left child of equal precedence
            left = _format(expr.left, prec + 1)
            right = _format(expr.right, prec)
        else:
            left = _format(expr.left, prec)
            right = _format(expr.right, prec + 1)
        text = f"{left}{expr.op}{right}" if expr.op == "^" else f"{left} {expr.op} {right}"
        return f"({text})" if prec < parent_prec else text
    raise TypeError(f"not an Expr: {expr!r}")


# --------------------------------------------------------------- CurveSpec


@dataclass(frozen=True)
class CurveSpec:
    """A validated curve/field pair with sampling and tolerance settings."""

    dimension: int
    components: tuple[Expr, ...]
    field: Expr
    s_range: tuple[float, float]
    samples: int = DEFAULT_SAMPLES
    tol_const: float = DEFAULT_TOL_CONST
    tol_frame: float = DEFAULT_TOL_FRAME

    def __post_init__(self):
        if self.dimension < 2:
            raise DimensionMismatch(f"dimension must be >= 2, got {self.dimension}")
        if len(self.components) != self.dimension:
            raise DimensionMismatch(
                f"{len(self.components)} curve components for dimension {self.dimension}"
            )
        lo, hi = self.s_range
        if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
            raise SpecDocumentError(f"invalid s_range {self.s_range!r}")
        if self.samples < 8:
            raise SpecDocumentError(f"samples must be >= 8, got {self.samples}")
        for name, tol in (("tol_const", self.tol_const), ("tol_frame", self.tol_frame)):
            if not (math.isfinite(tol) and tol > 0):
                raise SpecDocumentError(f"{name} must be finite and positive, got {tol!r}")


# ------------------------------------------------------- document parsing


def _parse_scalar(text: str, line: int):
    text = text.strip()
    if text.startswith('"') and text.endswith('"') and len(text) >= 2:
        return text[1:-1]
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        raise SpecDocumentError(f"cannot parse value {text!r}", line) from None


def _split_list(body: str, line: int) -> list[str]:
    items: list[str] = []
    depth = 0
    in_string = False
    current = ""
    for ch in body:
        if in_string:
            current += ch
            if ch == '"':
                in_string = False
            continue
        if ch == '"':
            in_string = True
            current += ch
        elif ch == "," and depth == 0:
            items.append(current)
            current = ""
        else:
            if ch in "([":
                depth += 1
            elif ch in ")]":
                depth -= 1
            current += ch
    if in_string or depth != 0:
        raise SpecDocumentError("unterminated list or string", line)
    if current.strip():
        items.append(current)
    return items


def parse_curve_spec(document: str) -> CurveSpec:
    """Parse a curve-spec document into a validated CurveSpec.

    The format is one ``key = value`` pair per line; values are integers,
    reals, quoted expression strings, or bracketed lists of those. Blank
    lines and ``#`` comments are ignored. Required keys: ``dimension``,
    ``curve``, ``field``, ``s_range``. Optional: ``samples``, ``tol_const``,
    ``tol_frame``.
    """
    entries: dict[str, tuple[object, int]] = {}
    for lineno, raw in enumerate(document.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise SpecDocumentError(f"expected 'key = value', got {raw.strip()!r}", lineno)
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if not key.isidentifier():
            raise SpecDocumentError(f"bad key {key!r}", lineno)
        if key in entries:
            raise SpecDocumentError(f"duplicate key {key!r}", lineno)
        if value.startswith("[") and value.endswith("]"):
            parsed: object = [_parse_scalar(item, lineno) for item in _split_list(value[1:-1], lineno)]
        else:
            parsed = _parse_scalar(value, lineno)
        entries[key] = (parsed, lineno)

    known = {"dimension", "curve", "field", "s_range", "samples", "tol_const", "tol_frame"}
    for key, (_, lineno) in entries.items():
        if key not in known:
            raise SpecDocumentError(f"unknown key {key!r}", lineno)

    def require(name: str):
        if name not in entries:
            raise MissingField(name)
        return entries[name]

    dim_value, dim_line = require("dimension")
    if not isinstance(dim_value, int):
        raise SpecDocumentError(f"dimension must be an integer, got {dim_value!r}", dim_line)
    dimension = dim_value

    curve_value, curve_line = require("curve")
    if not isinstance(curve_value, list) or not all(isinstance(c, str) for c in curve_value):
        raise SpecDocumentError("curve must be a list of quoted expressions", curve_line)
    if len(curve_value) != dimension:
        raise DimensionMismatch(
            f"{len(curve_value)} curve components for dimension {dimension}", curve_line
        )

    field_value, field_line = require("field")
    if not isinstance(field_value, str):
        raise SpecDocumentError("field must be a quoted expression", field_line)

    range_value, range_line = require("s_range")
    if (
        not isinstance(range_value, list)
        or len(range_value) != 2
        or not all(isinstance(v, (int, float)) for v in range_value)
    ):
        raise SpecDocumentError("s_range must be a list of two reals", range_line)

    def parse_wrapped(source: str, kind: str, lineno: int) -> Expr:
        try:
            return parse_expr_text(source, kind, dimension)
        except SpecDocumentError:
            raise
        except DslError as exc:
            raise SpecDocumentError(f"in expression {source!r}: {exc}", lineno) from exc

    components = tuple(parse_wrapped(src, "curve", curve_line) for src in curve_value)
    field_expr = parse_wrapped(field_value, "field", field_line)

    kwargs = {}
    if "samples" in entries:
        samples_value, samples_line = entries["samples"]
        if not isinstance(samples_value, int):
            raise SpecDocumentError("samples must be an integer", samples_line)
        kwargs["samples"] = samples_value
    for name in ("tol_const", "tol_frame"):
        if name in entries:
            value, lineno = entries[name]
            if not isinstance(value, (int, float)):
                raise SpecDocumentError(f"{name} must be a real", lineno)
            kwargs[name] = float(value)

    return CurveSpec(
        dimension=dimension,
        components=components,
        field=field_expr,
        s_range=(float(range_value[0]), float(range_value[1])),
        **kwargs,
    )


def format_curve_spec(spec: CurveSpec) -> str:
    """Render a CurveSpec back to document text (parse round-trips)."""
    curve = ", ".join(f'"{format_expr(c)}"' for c in spec.components)
    lines = [
        f"dimension = {spec.dimension}",
        f"curve = [{curve}]",
        f'field = "{format_expr(spec.field)}"',
        f"s_range = [{spec.s_range[0]!r}, {spec.s_range[1]!r}]",
        f"samples = {spec.samples}",
        f"tol_const = {spec.tol_const!r}",
        f"tol_frame = {spec.tol_frame!r}",
    ]
    return "\n".join(lines) + "\n"
