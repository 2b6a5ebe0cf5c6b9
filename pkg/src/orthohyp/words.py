"""
A small language for words in two generators x, y.

One binding per line::

    c1 = x^-1 y          # juxtaposition is the product
    c13 = [c12, c11]     # commutator a b a^-1 b^-1
    c12 = (y c1 c8 c1^-1)^3

Names must be bound before they are used.
"""

import re
from dataclasses import dataclass

from .exact_linalg import LinAlgError, mat_inv, mat_mul, mat_pow

GENERATORS = ("x", "y")


class WordSyntaxError(ValueError):
    def __init__(self, msg, line=None, col=None):
        self.line, self.col = line, col
        where = "" if line is None else "line %d, column %d: " % (line, col)
        super().__init__(where + msg)


# -- AST --

@dataclass(frozen=True)
class Gen:
    name: str


@dataclass(frozen=True)
class Ref:
    name: str


@dataclass(frozen=True)
class Inverse:
    expr: object


@dataclass(frozen=True)
class Power:
    expr: object
    exponent: int


@dataclass(frozen=True)
class Product:
    items: tuple


@dataclass(frozen=True)
class Commutator:
    a: object
    b: object


@dataclass(frozen=True)
class WordScript:
    bindings: tuple  # ((name, expr), ...)

    def names(self):
        return [name for name, _ in self.bindings]

    def __getitem__(self, name):
        for n, e in self.bindings:
            if n == name:
                return e
        raise KeyError(name)

    def __len__(self):
        return len(self.bindings)


# -- tokenizer / parser --

_TOKEN = re.compile(r"\s*(?:(?P<int>[+-]?\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[\^\[\],()=]))")


def _tokenize(text, lineno):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
            raise WordSyntaxError("unexpected character %r" % text[col - 1], lineno, col)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start + 1))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens, lineno, bound):
        self.tokens = tokens
        self.i = 0
        self.lineno = lineno
        self.bound = bound

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, None)

    def error(self, msg):
        kind, val, col = self.peek()
        if col is None:
            col = (self.tokens[-1][2] + len(self.tokens[-1][1])) if self.tokens else 1
        raise WordSyntaxError(msg, self.lineno, col)

    def take(self, kind, value=None):
        k, v, _ = self.peek()
        if k != kind or (value is not None and v != value):
            self.error("expected %s" % (value or kind))
        self.i += 1
        return v

    def expr(self, stop):
        items = []
        while True:
            k, v, _ = self.peek()
            if k is None or (k == "op" and v in stop):
                break
            t = self.term()
            # (a b) c is just a b c
            items.extend(t.items if isinstance(t, Product) else (t,))
        if not items:
            self.error("empty expression")
        return items[0] if len(items) == 1 else Product(tuple(items))

    def term(self):
        node = self.atom()
        while self.peek()[:2] == ("op", "^"):
            self.i += 1
            k, v, _ = self.peek()
            if k != "int":
                self.error("expected integer exponent")
            self.i += 1
            node = Power(node, int(v))
        return node

    def atom(self):
        k, v, col = self.peek()
        if k == "name":
            self.i += 1
            if v in GENERATORS:
                return Gen(v)
            if v not in self.bound:
                raise WordSyntaxError("unbound reference %r" % v, self.lineno, col)
            return Ref(v)
        if (k, v) == ("op", "["):
            self.i += 1
            a = self.expr(stop=(",",))
            self.take("op", ",")
            b = self.expr(stop=("]",))
            self.take("op", "]")
            return Commutator(a, b)
        if (k, v) == ("op", "("):
            self.i += 1
            e = self.expr(stop=(")",))
            self.take("op", ")")
            return e
        self.error("unexpected token %r" % v if v is not None else "unexpected end of line")


def parse_script(text):
    bindings = []
    bound = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        tokens = _tokenize(line, lineno)
        p = _Parser(tokens, lineno, bound)
        name = p.take("name")
        if name in GENERATORS:
            raise WordSyntaxError("cannot rebind generator %r" % name, lineno, tokens[0][2])
        if name in bound:
            raise WordSyntaxError("duplicate name %r" % name, lineno, tokens[0][2])
        p.take("op", "=")
        expr = p.expr(stop=())
        bindings.append((name, expr))
        bound.add(name)
    return WordScript(tuple(bindings))


def parse_word(text, bound=()):
    "Parse a single expression (no binding)."
    tokens = _tokenize(text, 1)
    p = _Parser(tokens, 1, set(bound))
    return p.expr(stop=())


# -- printer --

def format_expr(e):
    if isinstance(e, (Gen, Ref)):
        return e.name
    if isinstance(e, Power):
        return "%s^%d" % (_format_base(e.expr), e.exponent)
    if isinstance(e, Inverse):
        return "%s^-1" % _format_base(e.expr)
    if isinstance(e, Product):
        return " ".join(format_expr(i) for i in e.items)
    if isinstance(e, Commutator):
        return "[%s, %s]" % (format_expr(e.a), format_expr(e.b))
    raise TypeError(e)


def _format_base(e):
    s = format_expr(e)
    return "(%s)" % s if isinstance(e, Product) else s


def format_script(script):
    return "".join("%s = %s\n" % (name, format_expr(e)) for name, e in script.bindings)


# -- evaluation --

class _Env:
    def __init__(self, gens):
        self.values = dict(gens)
        self.inverses = {}

    def inverse(self, name):
        inv = self.inverses.get(name)
        if inv is None:
            inv = mat_inv(self.values[name])
            self.inverses[name] = inv
        return inv


def _eval(e, env):
    if isinstance(e, (Gen, Ref)):
        return env.values[e.name]
    if isinstance(e, Inverse):
        if isinstance(e.expr, (Gen, Ref)):
            return env.inverse(e.expr.name)
        return mat_inv(_eval(e.expr, env))
    if isinstance(e, Power):
        k = e.exponent
        if k < 0 and isinstance(e.expr, (Gen, Ref)):
            return mat_pow(env.inverse(e.expr.name), -k)
        return mat_pow(_eval(e.expr, env), k)
    if isinstance(e, Product):
        out = None
        for item in e.items:
            m = _eval(item, env)
            out = m if out is None else mat_mul(out, m)
        return out
    if isinstance(e, Commutator):
        a = _eval(e.a, env)
        b = _eval(e.b, env)
        return mat_mul(mat_mul(a, b), mat_mul(mat_inv(a), mat_inv(b)))
    raise TypeError(e)


def evaluate(script, x, y):
    """Evaluate every binding in order; returns {name: Matrix}."""
    if x.shape != y.shape or not x.is_square():
        raise LinAlgError("generators must be square matrices of the same size")
    env = _Env({"x": x, "y": y})
    out = {}
    for name, expr in script.bindings:
        m = _eval(expr, env)
        env.values[name] = m
        out[name] = m
    return out


def evaluate_word(expr, x, y, env=None):
    values = {"x": x, "y": y}
    if env:
        values.update(env)
    return _eval(expr, _Env(values))


def integrality_check(g):
    return g.is_integral()


def load_script(name):
    """Load one of the bundled .words files ('case1' or 'case5')."""
    from importlib.resources import files
    return parse_script(files("orthohyp.data").joinpath(name + ".words").read_text())
