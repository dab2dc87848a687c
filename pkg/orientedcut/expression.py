"""Expression language for building values.

Parsing has two passes: ``parse_syntax`` checks the grammar and records byte
offsets, ``validate`` checks arity and argument kinds and produces the typed
tree that ``evaluate`` and ``render`` work on.

    expr     := name "(" args ")" | name | rational | list
    args     := expr {"," expr}
    list     := "[" [expr {"," expr}] "]"
    rational := ["-"] digits ["/" digits]     (whitespace may follow the sign)
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, NamedTuple, Tuple, Union

from .almost import AlmostNatural, AlmostRational, ar_embed, natural_to_rational, threshold_phi
from .approximation import approximate, inf_finite, monotone_limit, sup_of_values
from .config import Settings
from .errors import EvalError, ExpressionError, OrcError, ParseError, ValidationError
from .hyperfield import add, mul_positive, neg_twosided
from .oriented import OrientedReal, cut_from_bounded_sequence, cut_intersection, embed_rational, shift
from .rational import render_rational
from .sequences import CyclicRule

TOKEN_RE = re.compile(r"""
    (?P<space>\s+)
  | (?P<number>\d+)
  | (?P<minus>-)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<slash>/)
  | (?P<lparen>\()
  | (?P<rparen>\))
  | (?P<lbrack>\[)
  | (?P<rbrack>\])
  | (?P<comma>,)
""", re.VERBOSE)

TOKEN_NAMES = {
    "number": "rational", "minus": "'-'", "name": "name", "slash": "'/'", "lparen": "'('",
    "rparen": "')'", "lbrack": "'['", "rbrack": "']'", "comma": "','", "end": "end of input",
}


class Token(NamedTuple):
    type: str
    value: str
    offset: int


def _byte_offset(source, index):
    return len(source[:index].encode("utf-8"))


def tokenize(source):
    tokens = []
    position = 0
    while position < len(source):
        match = TOKEN_RE.match(source, position)
        if match is None:
            raise ParseError(f"unexpected character {source[position]!r}", _byte_offset(source, position),
                             [name for key, name in TOKEN_NAMES.items() if key != "end"])
        kind = match.lastgroup
        if kind != "space":
            tokens.append(Token(kind, match.group(), _byte_offset(source, match.start())))
        position = match.end()
    tokens.append(Token("end", "", _byte_offset(source, len(source))))
    return tokens


# syntax tree

class SyntaxRational(NamedTuple):
    value: Fraction
    offset: int


class SyntaxName(NamedTuple):
    name: str
    offset: int


class SyntaxList(NamedTuple):
    items: tuple
    offset: int


class SyntaxCall(NamedTuple):
    name: str
    args: tuple
    offset: int


class _Parser:
    def __init__(self, source):
        self.tokens = tokenize(source)
        self.position = 0

    @property
    def current(self):
        return self.tokens[self.position]

    def advance(self):
        token = self.current
        self.position += 1
        return token

    def expect(self, kind):
        token = self.current
        if token.type != kind:
            raise ParseError(f"unexpected {TOKEN_NAMES[token.type]}", token.offset, [TOKEN_NAMES[kind]])
        return self.advance()

    def parse(self):
        node = self.expr()
        if self.current.type != "end":
            raise ParseError(f"unexpected {TOKEN_NAMES[self.current.type]}", self.current.offset,
                             [TOKEN_NAMES["end"], TOKEN_NAMES["comma"]])
        return node

    def expr(self):
        token = self.current
        if token.type in ("number", "minus"):
            return self.rational()
        if token.type == "name":
            self.advance()
            if self.current.type == "lparen":
                self.advance()
                args = self.sequence("rparen")
                return SyntaxCall(token.value, args, token.offset)
            return SyntaxName(token.value, token.offset)
        if token.type == "lbrack":
            self.advance()
            return SyntaxList(self.sequence("rbrack"), token.offset)
        raise ParseError(f"unexpected {TOKEN_NAMES[token.type]}", token.offset,
                         [TOKEN_NAMES["number"], TOKEN_NAMES["minus"], TOKEN_NAMES["name"], TOKEN_NAMES["lbrack"]])

    def sequence(self, closing):
        items = []
        if self.current.type == closing:
            self.advance()
            return tuple(items)
        while True:
            items.append(self.expr())
            if self.current.type == "comma":
                self.advance()
                continue
            self.expect(closing)
            return tuple(items)

    def rational(self):
        start = self.advance()
        sign = 1
        if start.type == "minus":
            sign = -1
            token = self.current
            if token.type != "number":
                raise ParseError("malformed rational", token.offset, ["digits"])
            self.advance()
        else:
            token = start
        numerator, denominator = sign * int(token.value), 1
        if self.current.type == "slash":
            self.advance()
            token = self.current
            if token.type != "number":
                raise ParseError("malformed rational", token.offset, ["digits"])
            self.advance()
            denominator = int(token.value)
            if denominator == 0:
                raise ParseError("zero denominator", start.offset)
        return SyntaxRational(Fraction(numerator, denominator), start.offset)


def parse_syntax(source):
    return _Parser(source).parse()


# typed tree

@dataclass(frozen=True)
class Rat:
    value: Fraction


@dataclass(frozen=True)
class Hat:
    value: Fraction


@dataclass(frozen=True)
class Bseq:
    source: Union[Tuple[Fraction, ...], str]
    bound: Fraction


@dataclass(frozen=True)
class Sup:
    values: Tuple[Fraction, ...]
    bound: Fraction


@dataclass(frozen=True)
class Inf:
    values: Tuple[Fraction, ...]


@dataclass(frozen=True)
class Add:
    left: Any
    right: Any


@dataclass(frozen=True)
class MulPos:
    left: Any
    right: Any


@dataclass(frozen=True)
class Meet:
    left: Any
    right: Any


@dataclass(frozen=True)
class Neg:
    operand: Any


@dataclass(frozen=True)
class Shift:
    operand: Any
    offset: Fraction


@dataclass(frozen=True)
class Approx:
    operand: Any
    n: int


@dataclass(frozen=True)
class Embed:
    operand: Any


@dataclass(frozen=True)
class Phi:
    thresholds: Tuple[Fraction, ...]
    operand: Any


@dataclass(frozen=True)
class Limit:
    items: Tuple[Any, ...]
    bound: Fraction


@dataclass(frozen=True)
class Ref:
    name: str


ORIENTED_NODES = (Hat, Bseq, Sup, Inf, Add, MulPos, Meet, Neg, Shift, Limit)


def _harmonic(n):
    return 1 - Fraction(1, n + 2)


def _dyadic(n):
    return 1 - Fraction(1, 2 ** n)


def _zero(n):
    return Fraction(0)


RULES = {
    "harmonic": _harmonic,
    "dyadic": _dyadic,
    "alternating": CyclicRule((Fraction(0), Fraction(1))),
    "zero": _zero,
}


class _Validator:
    def __init__(self, rules):
        self.rules = rules

    def node(self, syntax):
        if isinstance(syntax, SyntaxRational):
            return Rat(syntax.value)
        if isinstance(syntax, SyntaxName):
            return Ref(syntax.name)
        if isinstance(syntax, SyntaxList):
            raise ValidationError("a list is only allowed as an argument", syntax.offset)
        handler = getattr(self, "call_" + syntax.name, None)
        if handler is None:
            raise ValidationError(f"unknown operation {syntax.name!r}", syntax.offset)
        return handler(syntax)

    def arity(self, syntax, count):
        if len(syntax.args) != count:
            raise ValidationError(
                f"{syntax.name} takes {count} argument{'s' if count != 1 else ''}, got {len(syntax.args)}",
                syntax.offset)
        return syntax.args

    def rational(self, syntax):
        if isinstance(syntax, SyntaxCall) and syntax.name == "rat" and len(syntax.args) == 1:
            syntax = syntax.args[0]
        if not isinstance(syntax, SyntaxRational):
            raise ValidationError("expected a rational literal", syntax.offset)
        return syntax.value

    def natural(self, syntax):
        value = self.rational(syntax)
        if value.denominator != 1 or value < 0:
            raise ValidationError("expected a natural number", syntax.offset)
        return int(value)

    def rationals(self, syntax):
        if not isinstance(syntax, SyntaxList):
            raise ValidationError("expected a list of rationals", syntax.offset)
        return tuple(self.rational(item) for item in syntax.items)

    def oriented(self, syntax):
        node = self.node(syntax)
        if not isinstance(node, ORIENTED_NODES + (Ref,)):
            raise ValidationError("expected an oriented real", syntax.offset)
        return node

    def call_rat(self, syntax):
        (arg,) = self.arity(syntax, 1)
        return Rat(self.rational(arg))

    def call_hat(self, syntax):
        (arg,) = self.arity(syntax, 1)
        return Hat(self.rational(arg))

    def call_bseq(self, syntax):
        source, bound = self.arity(syntax, 2)
        if isinstance(source, SyntaxName):
            if source.name not in self.rules:
                raise ValidationError(f"unknown rule {source.name!r}", source.offset)
            return Bseq(source.name, self.rational(bound))
        values = self.rationals(source)
        if not values:
            raise ValidationError("bseq needs at least one value", source.offset)
        return Bseq(values, self.rational(bound))

    def call_sup(self, syntax):
        values, bound = self.arity(syntax, 2)
        listed = self.rationals(values)
        if not listed:
            raise ValidationError("sup needs at least one value", values.offset)
        return Sup(listed, self.rational(bound))

    def call_inf(self, syntax):
        (values,) = self.arity(syntax, 1)
        listed = self.rationals(values)
        if not listed:
            raise ValidationError("inf needs at least one value", values.offset)
        return Inf(listed)

    def call_add(self, syntax):
        left, right = self.arity(syntax, 2)
        return Add(self.oriented(left), self.oriented(right))

    def call_mulpos(self, syntax):
        left, right = self.arity(syntax, 2)
        return MulPos(self.oriented(left), self.oriented(right))

    def call_meet(self, syntax):
        left, right = self.arity(syntax, 2)
        return Meet(self.oriented(left), self.oriented(right))

    def call_neg(self, syntax):
        (operand,) = self.arity(syntax, 1)
        return Neg(self.oriented(operand))

    def call_shift(self, syntax):
        operand, offset = self.arity(syntax, 2)
        return Shift(self.oriented(operand), self.rational(offset))

    def call_approx(self, syntax):
        operand, n = self.arity(syntax, 2)
        return Approx(self.oriented(operand), self.natural(n))

    def call_embed(self, syntax):
        (operand,) = self.arity(syntax, 1)
        node = self.node(operand)
        if not isinstance(node, (Approx, Phi, Ref)):
            raise ValidationError("embed needs an almost rational or almost natural", operand.offset)
        return Embed(node)

    def call_phi(self, syntax):
        thresholds, operand = self.arity(syntax, 2)
        values = self.rationals(thresholds)
        for item, (a, b) in zip(thresholds.items[1:], zip(values, values[1:])):
            if a >= b:
                raise ValidationError("thresholds must be strictly ascending", item.offset)
        return Phi(values, self.oriented(operand))

    def call_limit(self, syntax):
        items, bound = self.arity(syntax, 2)
        if not isinstance(items, SyntaxList) or not items.items:
            raise ValidationError("limit needs a nonempty list of oriented reals", items.offset)
        return Limit(tuple(self.oriented(item) for item in items.items), self.rational(bound))


def validate(syntax, rules=None):
    return _Validator(RULES if rules is None else rules).node(syntax)


def parse(source, rules=None):
    """Source text to a validated expression."""
    return validate(parse_syntax(source), rules)


def _list(values):
    return "[" + ",".join(render_rational(v) for v in values) + "]"


def render(node):
    """Canonical source text; parse(render(e)) == e."""
    if isinstance(node, Rat):
        return render_rational(node.value)
    if isinstance(node, Hat):
        return f"hat({render_rational(node.value)})"
    if isinstance(node, Bseq):
        source = node.source if isinstance(node.source, str) else _list(node.source)
        return f"bseq({source},{render_rational(node.bound)})"
    if isinstance(node, Sup):
        return f"sup({_list(node.values)},{render_rational(node.bound)})"
    if isinstance(node, Inf):
        return f"inf({_list(node.values)})"
    if isinstance(node, (Add, MulPos, Meet)):
        name = {Add: "add", MulPos: "mulpos", Meet: "meet"}[type(node)]
        return f"{name}({render(node.left)},{render(node.right)})"
    if isinstance(node, Neg):
        return f"neg({render(node.operand)})"
    if isinstance(node, Shift):
        return f"shift({render(node.operand)},{render_rational(node.offset)})"
    if isinstance(node, Approx):
        return f"approx({render(node.operand)},{node.n})"
    if isinstance(node, Embed):
        return f"embed({render(node.operand)})"
    if isinstance(node, Phi):
        return f"phi({_list(node.thresholds)},{render(node.operand)})"
    if isinstance(node, Limit):
        return "limit([" + ",".join(render(item) for item in node.items) + f"],{render_rational(node.bound)})"
    if isinstance(node, Ref):
        return node.name
    raise TypeError(f"not an expression node: {node!r}")


class Evaluator:
    """Evaluates validated expressions against named values."""

    def __init__(self, env=None, settings=None, rules=None):
        self.env = env if env is not None else {}
        self.settings = settings if settings is not None else Settings()
        self.rules = RULES if rules is None else rules

    def __call__(self, node):
        return self.evaluate(node)

    def evaluate(self, node, path=()):
        path = path + (type(node).__name__.lower(),)
        try:
            return self._dispatch(node, path)
        except ExpressionError:
            raise
        except OrcError as exc:
            raise EvalError(str(exc), path) from exc

    def oriented(self, node, path):
        value = self.evaluate(node, path)
        if not isinstance(value, OrientedReal):
            raise EvalError(f"expected an oriented real, got {type(value).__name__}", path)
        return value

    def _dispatch(self, node, path):
        fuel = self.settings.fuel
        if isinstance(node, Rat):
            return node.value
        if isinstance(node, Hat):
            return embed_rational(node.value)
        if isinstance(node, Bseq):
            rule = self.rules[node.source] if isinstance(node.source, str) else CyclicRule(node.source)
            return cut_from_bounded_sequence(rule, node.bound)
        if isinstance(node, Sup):
            return sup_of_values(node.values, node.bound)
        if isinstance(node, Inf):
            return inf_finite(node.values)
        if isinstance(node, (Add, MulPos, Meet)):
            operation = {Add: add, MulPos: mul_positive, Meet: cut_intersection}[type(node)]
            return operation(self.oriented(node.left, path + ("0",)), self.oriented(node.right, path + ("1",)))
        if isinstance(node, Neg):
            return neg_twosided(self.oriented(node.operand, path))
        if isinstance(node, Shift):
            return shift(self.oriented(node.operand, path), node.offset)
        if isinstance(node, Approx):
            return approximate(self.oriented(node.operand, path), node.n)
        if isinstance(node, Embed):
            value = self.evaluate(node.operand, path)
            if isinstance(value, AlmostNatural):
                value = natural_to_rational(value)
            if not isinstance(value, AlmostRational):
                raise EvalError(f"embed needs an almost number, got {type(value).__name__}", path)
            return ar_embed(value)
        if isinstance(node, Phi):
            return threshold_phi(node.thresholds, self.oriented(node.operand, path))
        if isinstance(node, Limit):
            items = [self.oriented(item, path + (str(i),)) for i, item in enumerate(node.items)]
            return monotone_limit(items, node.bound, fuel, span=self.settings.limit_span)
        if isinstance(node, Ref):
            if node.name not in self.env:
                raise EvalError(f"unbound name {node.name!r}", path)
            return self.env[node.name]
        raise EvalError(f"cannot evaluate {node!r}", path)


def evaluate(node, env=None, settings=None):
    return Evaluator(env, settings).evaluate(node)
