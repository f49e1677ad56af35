"""Expression syntax: parsing, printing and evaluation.

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' nat)?
    atom   := scalar | generator | '(' expr ')' | '[' expr ',' expr ']' | '-' factor

Generators: g, g^-1, h, E[word], E(k), w(n), u(n), a(n).
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import ExprSyntaxError, IllegalGenerator, NotLyndonWord
from .words import is_lyndon


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Gen:
    name: str          # 'g', 'G' (g^-1), 'h', 'E', 'Ew' (E[word]), 'w', 'u', 'a'
    arg: object = None


@dataclass(frozen=True)
class Neg:
    x: object


@dataclass(frozen=True)
class BinOp:
    op: str            # '+', '-', '*'
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exp: int


@dataclass(frozen=True)
class Bracket:
    left: object
    right: object


class _Parser:
    def __init__(self, src):
        self.src = src
        self.i = 0

    def error(self, msg, pos=None):
        raise ExprSyntaxError(msg, self.i if pos is None else pos, self.src)

    def skip(self):
        while self.i < len(self.src) and self.src[self.i].isspace():
            self.i += 1

    def peek(self):
        self.skip()
        return self.src[self.i] if self.i < len(self.src) else ""

    def eat(self, ch):
        if self.peek() != ch:
            self.error(f"expected {ch!r}" + (f", found {self.peek()!r}" if self.peek() else ", found end of input"))
        self.i += 1

    def nat(self):
        self.skip()
        j = self.i
        while self.i < len(self.src) and self.src[self.i].isdigit():
            self.i += 1
        if j == self.i:
            self.error("expected a non-negative integer")
        return int(self.src[j:self.i])

    def parse(self):
        e = self.expr()
        if self.peek():
            self.error(f"unexpected {self.peek()!r}")
        return e

    def expr(self):
        left = self.term()
        while self.peek() in ("+", "-"):
            op = self.peek()
            self.i += 1
            left = BinOp(op, left, self.term())
        return left

    def term(self):
        left = self.factor()
        while self.peek() == "*":
            self.i += 1
            left = BinOp("*", left, self.factor())
        return left

    def factor(self):
        base = self.atom()
        if self.peek() == "^":
            self.i += 1
            if self.peek() == "-":
                pos = self.i
                self.i += 1
                k = self.nat()
                if base != Gen("g"):
                    self.error("negative exponents are only allowed on g", pos)
                return Gen("G") if k == 1 else Pow(Gen("G"), k)
            return Pow(base, self.nat())
        return base

    def atom(self):
        c = self.peek()
        if not c:
            self.error("unexpected end of input")
        if c == "-":
            # unary minus binds looser than '^': -h^2 is -(h^2)
            self.i += 1
            return Neg(self.factor())
        if c.isdigit():
            n = self.nat()
            if self.peek() == "/":
                self.i += 1
                pos = self.i
                d = self.nat()
                if d == 0:
                    self.error("zero denominator", pos)
                return Num(Fraction(n, d))
            return Num(Fraction(n))
        if c == "(":
            self.i += 1
            e = self.expr()
            self.eat(")")
            return e
        if c == "[":
            self.i += 1
            a = self.expr()
            self.eat(",")
            b = self.expr()
            self.eat("]")
            return Bracket(a, b)
        if c in "gh":
            self.i += 1
            return Gen(c)
        if c == "E":
            self.i += 1
            nxt = self.peek()
            if nxt == "[":
                self.i += 1
                self.skip()
                pos = self.i
                j = self.i
                while self.i < len(self.src) and self.src[self.i] in "gh":
                    self.i += 1
                w = self.src[j:self.i]
                if not w:
                    self.error("expected a word in g, h", pos)
                self.eat("]")
                if not is_lyndon(w):
                    raise NotLyndonWord(f"{w} is not a Lyndon word (at column {pos + 1})")
                return Gen("Ew", w)
            if nxt == "(":
                self.i += 1
                k = self.nat()
                self.eat(")")
                return Gen("E", k)
            self.error("expected '[' or '(' after E")
        if c in "wua":
            self.i += 1
            self.eat("(")
            k = self.nat()
            self.eat(")")
            return Gen(c, k)
        self.error(f"unexpected {c!r}")


def parse(source, context=None):
    """Parse an expression; with a context spec, also check generator legality."""
    ast = _Parser(source).parse()
    if context is not None:
        for g in _generators(ast):
            _check_generator(g, context)
    return ast


def _generators(node):
    if isinstance(node, Gen):
        yield node
    elif isinstance(node, Neg):
        yield from _generators(node.x)
    elif isinstance(node, (BinOp, Bracket)):
        yield from _generators(node.left)
        yield from _generators(node.right)
    elif isinstance(node, Pow):
        yield from _generators(node.base)


def _check_generator(g, spec):
    name = g.name
    preset = getattr(spec, "preset", "free")
    if preset == "free":
        ok = name in ("g", "h", "E", "Ew", "w")
    elif spec.is_ore:
        ok = name in ("g", "h", "E", "Ew", "w") or (
            name == "G" and (spec.localized or spec.g_order is not None))
    elif preset == "BF":
        ok = name in ("g", "E", "w")
    elif preset in ("BFdB", "HFdB"):
        ok = name in ("g", "E", "u") or (name == "G" and preset == "HFdB")
    else:
        ok = name in ("a", "w")
    if name == "u" and g.arg == 0:
        ok = False
    if not ok:
        raise IllegalGenerator(f"{to_source(g)} is not a generator of {preset}")


_PREC = {"+": 1, "-": 1, "*": 2}


def to_source(node, parent=0):
    """Canonical text of an AST; parse(to_source(x)) == x."""
    if isinstance(node, Num):
        v = node.value
        s = str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
        return s
    if isinstance(node, Gen):
        if node.name == "G":
            return "g^-1"
        if node.name == "Ew":
            return f"E[{node.arg}]"
        if node.arg is None:
            return node.name
        return f"{node.name}({node.arg})"
    if isinstance(node, Neg):
        inner = to_source(node.x, 3)
        # "-g^-1" would read as (-g)^-1
        if isinstance(node.x, (Pow, Neg)) or node.x == Gen("G"):
            inner = f"({inner})"
        return f"-{inner}"
    if isinstance(node, Bracket):
        return f"[{to_source(node.left)}, {to_source(node.right)}]"
    if isinstance(node, Pow):
        if node.base == Gen("G"):
            return f"g^-{node.exp}"
        base = to_source(node.base, 3)
        if isinstance(node.base, (Neg, Pow)) or (isinstance(node.base, Num) and node.base.value.denominator != 1):
            base = f"({base})"
        return f"{base}^{node.exp}"
    if isinstance(node, BinOp):
        prec = _PREC[node.op]
        left = to_source(node.left, prec)
        # left associativity: a right operand of equal precedence needs parentheses
        right = to_source(node.right, prec + 1)
        s = f"{left}*{right}" if node.op == "*" else f"{left} {node.op} {right}"
        return f"({s})" if prec < parent else s
    raise TypeError(node)


# evaluation


def evaluate(node, spec=None, field=None):
    """Evaluate an AST in the free algebra (spec None) or in the algebra of a preset."""
    from .presets import AlgebraSpec
    if spec is not None and not isinstance(spec, AlgebraSpec):
        raise TypeError(spec)
    ev = _Evaluator(spec, field)
    return ev.run(node)


class _Evaluator:
    def __init__(self, spec, field):
        from .scalars import QQ
        self.spec = spec
        if spec is None:
            from .free import free_algebra
            self.field = field or QQ
            self.A = free_algebra(self.field)
        else:
            from .quotients import get_algebra
            self.field = spec.field
            self.A = get_algebra(spec)
        self.cache = {}

    def run(self, node):
        if isinstance(node, Num):
            return self.A.one().scale(self.field(node.value))
        if isinstance(node, Gen):
            if node not in self.cache:
                self.cache[node] = self.gen(node)
            return self.cache[node]
        if isinstance(node, Neg):
            return -self.run(node.x)
        if isinstance(node, BinOp):
            a, b = self.run(node.left), self.run(node.right)
            if node.op == "+":
                return a + b
            if node.op == "-":
                return a - b
            return a * b
        if isinstance(node, Pow):
            return self.run(node.base) ** node.exp
        if isinstance(node, Bracket):
            a, b = self.run(node.left), self.run(node.right)
            return a * b - b * a
        raise TypeError(node)

    def gen(self, g):
        if self.spec is not None:
            _check_generator(g, self.spec)
        name, k = g.name, g.arg
        A, spec = self.A, self.spec
        if spec is None:
            from .free import ls_element, omega
            if name in ("g", "h"):
                return A.word(name)
            if name == "Ew":
                return ls_element(k, self.field)
            if name == "E":
                return ls_element("g" + "h" * k, self.field)
            if name == "w":
                return omega(k, self.field)
            raise IllegalGenerator(f"{to_source(g)} is not a generator of the free algebra")
        if spec.is_ore:
            from .quotients import project_from_free
            from .free import ls_element, omega
            if name == "Ew":
                return project_from_free(spec, ls_element(k, self.field))
            if name == "w":
                return project_from_free(spec, omega(k, self.field))
            return A.gen(name, k)
        if spec.preset == "BF":
            if name == "g":
                return A.gen("g")
            return A.gen("E" if name == "E" else "W", k)
        from .quotients import normal_form
        if spec.preset in ("BFdB", "HFdB"):
            tok = {"g": ("g",), "G": ("G",)}.get(name) or (name, k)
            return normal_form(spec, (tok,))
        return normal_form(spec, (("a", k),))


def parse_element(source, spec=None, field=None):
    """Parse and evaluate in one step."""
    return evaluate(parse(source, spec), spec, field)
