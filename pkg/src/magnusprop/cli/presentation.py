"""Parser and printer for group presentations.

Grammar (whitespace is free, ``#`` starts a comment)::

    presentation := 'group' NAME '{' section* '}'
    section      := 'gens' ':' NAME* ';'
                  | 'rels' ':' [relation (',' relation)*] ';'
                  | 'class' ':' INT ';'
    relation     := word ['=' word]          # u = v means u * v^-1
    word         := factor ('*' factor)*
    factor       := atom ['^' ['-'] INT]
    atom         := NAME | '[' word (',' word)+ ']' | '(' word ')'

The final ``;`` before ``}`` may be omitted. Commutators are left-normed:
``[a,b,c] = [[a,b],c]`` and ``[a,b] = a^-1 b^-1 a b``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field


class PresentationError(ValueError):
    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        self.line, self.col = line, col
        where = f" at line {line}, column {col}" if line is not None else ""
        super().__init__(message + where)


Pos = tuple[int, int]


@dataclass(frozen=True)
class Gen:
    name: str
    pos: Pos | None = field(default=None, compare=False)


@dataclass(frozen=True)
class Power:
    base: "Node"
    exp: int
    pos: Pos | None = field(default=None, compare=False)


@dataclass(frozen=True)
class Comm:
    items: tuple
    pos: Pos | None = field(default=None, compare=False)


@dataclass(frozen=True)
class Product:
    factors: tuple
    pos: Pos | None = field(default=None, compare=False)


Node = Gen | Power | Comm | Product


@dataclass(frozen=True)
class PresentationAst:
    name: str
    gens: tuple[str, ...]
    rels: tuple
    nil_class: int | None = None
    pos: Pos | None = field(default=None, compare=False)

    @property
    def is_free(self) -> bool:
        return not self.rels


_TOKEN = re.compile(r"\s+|#[^\n]*|(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<sym>[{}\[\]();:,*^=\-])")
_KEYWORDS = {"group", "gens", "rels", "class"}


def _tokenize(text: str) -> list[tuple[str, str, Pos]]:
    out = []
    i = 0
    line, line_start = 1, 0
    while i < len(text):
        m = _TOKEN.match(text, i)
        if not m:
            raise PresentationError(f"unexpected character {text[i]!r}", line, i - line_start + 1)
        pos = (line, i - line_start + 1)
        if m.lastgroup:
            out.append((m.lastgroup, m.group(m.lastgroup), pos))
        chunk = m.group(0)
        for k, ch in enumerate(chunk):
            if ch == "\n":
                line, line_start = line + 1, i + k + 1
        i = m.end()
    out.append(("eof", "", (line, i - line_start + 1)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0
        self.gens: tuple[str, ...] = ()

    def peek(self):
        return self.toks[self.i]

    def error(self, msg: str, tok=None):
        tok = tok or self.peek()
        raise PresentationError(msg, *tok[2])

    def expect(self, value: str):
        tok = self.peek()
        if tok[1] != value or tok[0] == "eof":
            self.error(f"expected {value!r}, found {tok[1] or 'end of input'!r}")
        self.i += 1
        return tok

    def accept(self, value: str) -> bool:
        if self.peek()[1] == value and self.peek()[0] != "eof":
            self.i += 1
            return True
        return False

    def name(self) -> tuple[str, Pos]:
        tok = self.peek()
        if tok[0] != "name":
            self.error(f"expected a name, found {tok[1] or 'end of input'!r}")
        self.i += 1
        return tok[1], tok[2]

    def integer(self) -> int:
        neg = self.accept("-")
        tok = self.peek()
        if tok[0] != "int":
            self.error("expected an integer")
        self.i += 1
        return -int(tok[1]) if neg else int(tok[1])

    def presentation(self) -> PresentationAst:
        start = self.peek()
        if start[1] != "group":
            self.error("expected 'group'")
        self.i += 1
        name, _ = self.name()
        self.expect("{")
        gens = rels = cls = None
        while not self.accept("}"):
            key, kpos = self.name()
            self.expect(":")
            if key == "gens" and gens is None:
                names = []
                while self.peek()[0] == "name":
                    g, gpos = self.name()
                    if g in names or g in _KEYWORDS:
                        raise PresentationError(f"invalid or repeated generator {g!r}", *gpos)
                    names.append(g)
                gens = tuple(names)
                self.gens = gens
            elif key == "rels" and rels is None:
                if gens is None:
                    raise PresentationError("rels must come after gens", *kpos)
                items = []
                if self.peek()[1] not in (";", "}"):
                    items.append(self.relation())
                    while self.accept(","):
                        items.append(self.relation())
                rels = tuple(items)
            elif key == "class" and cls is None:
                cls = self.integer()
                if cls < 1:
                    raise PresentationError("class must be positive", *kpos)
            else:
                raise PresentationError(f"unknown or repeated section {key!r}", *kpos)
            if not self.accept(";") and self.peek()[1] != "}":
                self.error("expected ';' or '}'")
        if self.peek()[0] != "eof":
            self.error("trailing input after presentation")
        if gens is None:
            raise PresentationError("missing gens section", *start[2])
        return PresentationAst(name, gens, rels or (), cls, start[2])

    def relation(self) -> Node:
        pos = self.peek()[2]
        lhs = self.word()
        if self.accept("="):
            rhs = self.word()
            return Product((lhs, Power(rhs, -1, pos)), pos)
        return lhs

    def word(self) -> Node:
        pos = self.peek()[2]
        factors = [self.factor()]
        while self.accept("*"):
            factors.append(self.factor())
        return factors[0] if len(factors) == 1 else Product(tuple(factors), pos)

    def factor(self) -> Node:
        pos = self.peek()[2]
        base = self.atom()
        if self.accept("^"):
            epos = self.peek()
            e = self.integer()
            if e == 0:
                raise PresentationError("zero power", *epos[2])
            return Power(base, e, pos)
        return base

    def atom(self) -> Node:
        tok = self.peek()
        if tok[0] == "name":
            if tok[1] not in self.gens:
                self.error(f"undeclared generator {tok[1]!r}")
            self.i += 1
            return Gen(tok[1], tok[2])
        if self.accept("["):
            items = [self.word()]
            while self.accept(","):
                items.append(self.word())
            if len(items) < 2:
                self.error("a commutator needs at least two entries")
            if not self.accept("]"):
                self.error("unclosed '['", tok)
            return Comm(tuple(items), tok[2])
        if self.accept("("):
            inner = self.word()
            if not self.accept(")"):
                self.error("unclosed '('", tok)
            return inner if not isinstance(inner, Product) else Product(inner.factors, tok[2])
        self.error(f"expected a generator, '[' or '(', found {tok[1] or 'end of input'!r}")


def parse_presentation(text: str) -> PresentationAst:
    return _Parser(text).presentation()


def format_word(node: Node) -> str:
    if isinstance(node, Gen):
        return node.name
    if isinstance(node, Power):
        inner = format_word(node.base)
        if isinstance(node.base, (Product, Power)):
            inner = f"({inner})"
        return f"{inner}^{node.exp}"
    if isinstance(node, Comm):
        return "[" + ",".join(format_word(x) for x in node.items) + "]"
    return "*".join(f"({format_word(f)})" if isinstance(f, Product) else format_word(f)
                    for f in node.factors)


def format_presentation(ast: PresentationAst) -> str:
    parts = [f"gens: {' '.join(ast.gens)};", f"rels: {', '.join(format_word(r) for r in ast.rels)};"]
    if ast.nil_class is not None:
        parts.append(f"class: {ast.nil_class};")
    return f"group {ast.name} {{ " + " ".join(parts) + " }"
