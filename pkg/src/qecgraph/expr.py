"""Expression language for building graphs: parser, renderer, evaluator, matcher.

Grammar (infix ``+`` is the graph join, not disjoint union)::

    expr   := term {"+" term}
    term   := [count "*"] factor
    factor := call | atom | "(" expr ")"
    call   := ("join" | "union" | "cart") "(" expr "," expr ")"
            | ("double" | "lex2" | "complement" | "line") "(" expr ")"
            | "file" "(" quoted-path ")"
    atom   := name ["(" integer {"," integer} ")"]

Names are case-insensitive.  ``parse(render(e)) == e`` holds for every AST.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import formulas, graphs
from .formulas import FormulaValue


class ExprSyntaxError(ValueError):
    """Parse failure with a 1-based character offset and expected-token hints."""

    def __init__(self, message, offset, expected=()):
        detail = f"{message} at position {offset}"
        if expected:
            detail += "; expected " + ", ".join(expected)
        super().__init__(detail)
        self.offset = offset
        self.expected = tuple(expected)


class ExprEvalError(ValueError):
    """Evaluation failure; the message names the offending subexpression."""


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


def _tokenize(text):
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(Token("int", text[i:j], i + 1))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(Token("name", text[i:j], i + 1))
            i = j
            continue
        if ch in "+*(),":
            tokens.append(Token("punct", ch, i + 1))
            i += 1
            continue
        if ch in "\"'":
            j = text.find(ch, i + 1)
            if j < 0:
                raise ExprSyntaxError("unterminated quoted path", i + 1, ("closing quote",))
            tokens.append(Token("string", text[i + 1 : j], i + 1))
            i = j + 1
            continue
        raise ExprSyntaxError(f"unexpected character {ch!r}", i + 1)
    tokens.append(Token("end", "", n + 1))
    return tokens


class GraphExpr:
    """Base class for expression nodes."""


@dataclass(frozen=True)
class Atom(GraphExpr):
    name: str
    args: tuple = ()


@dataclass(frozen=True)
class Join(GraphExpr):
    left: GraphExpr
    right: GraphExpr


@dataclass(frozen=True)
class Union(GraphExpr):
    left: GraphExpr
    right: GraphExpr


@dataclass(frozen=True)
class Cartesian(GraphExpr):
    left: GraphExpr
    right: GraphExpr


@dataclass(frozen=True)
class Copies(GraphExpr):
    count: int
    inner: GraphExpr


@dataclass(frozen=True)
class Double(GraphExpr):
    inner: GraphExpr


@dataclass(frozen=True)
class Lex2(GraphExpr):
    inner: GraphExpr


@dataclass(frozen=True)
class Complement(GraphExpr):
    inner: GraphExpr


@dataclass(frozen=True)
class Line(GraphExpr):
    inner: GraphExpr


@dataclass(frozen=True)
class FromFile(GraphExpr):
    path: str


# canonical name -> (display form, parameter count, builder)
_ATOMS = {
    "k": ("K", 1, graphs.complete),
    "kbar": ("Kbar", 1, graphs.empty),
    "c": ("C", 1, graphs.cycle),
    "p": ("P", 1, graphs.path),
    "kb": ("Kb", 2, lambda m, n: graphs.join(graphs.empty(m), graphs.empty(n))),
    "star": ("star", 1, lambda n: graphs.join(graphs.empty(1), graphs.empty(n))),
    "wheel": ("wheel", 1, lambda n: graphs.join(graphs.cycle(n), graphs.complete(1))),
    "friendship": (
        "friendship",
        1,
        lambda n: graphs.join(graphs.copies(n, graphs.complete(2)), graphs.complete(1)),
    ),
    "t": ("T", 1, graphs.triangular),
    "grid": ("grid", 1, graphs.grid),
    "chang": ("chang", 1, graphs.chang),
    "petersen": ("petersen", 0, graphs.petersen),
    "shrikhande": ("shrikhande", 0, graphs.shrikhande),
    "clebsch": ("clebsch", 0, graphs.clebsch),
    "schlafli": ("schlafli", 0, graphs.schlafli),
    "hoffman_singleton": ("hoffman_singleton", 0, graphs.hoffman_singleton),
}

_BINARY_CALLS = {"join": Join, "union": Union, "cart": Cartesian}
_UNARY_CALLS = {"double": Double, "lex2": Lex2, "complement": Complement, "line": Line}


def atom_names():
    """Display names of all built-in graph atoms."""
    return sorted(display for display, _, _ in _ATOMS.values())


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def at_punct(self, ch):
        tok = self.peek()
        return tok.kind == "punct" and tok.text == ch

    def expect_punct(self, ch):
        tok = self.peek()
        if not self.at_punct(ch):
            got = repr(tok.text) if tok.kind != "end" else "end of input"
            raise ExprSyntaxError(f"unexpected {got}", tok.pos, (f"'{ch}'",))
        return self.advance()

    def expect_int(self, what):
        tok = self.peek()
        if tok.kind != "int":
            got = repr(tok.text) if tok.kind != "end" else "end of input"
            raise ExprSyntaxError(f"{what} must be an integer literal, got {got}", tok.pos, ("integer",))
        return int(self.advance().text)

    def parse_expr(self):
        node = self.parse_term()
        while self.at_punct("+"):
            self.advance()
            node = Join(node, self.parse_term())
        return node

    def parse_term(self):
        tok = self.peek()
        if tok.kind == "int":
            self.advance()
            self.expect_punct("*")
            return Copies(int(tok.text), self.parse_factor())
        return self.parse_factor()

    def parse_factor(self):
        tok = self.peek()
        if self.at_punct("("):
            self.advance()
            node = self.parse_expr()
            self.expect_punct(")")
            return node
        if tok.kind == "name":
            name = tok.text.lower()
            if name in _BINARY_CALLS:
                self.advance()
                self.expect_punct("(")
                left = self.parse_expr()
                self.expect_punct(",")
                right = self.parse_expr()
                self.expect_punct(")")
                return _BINARY_CALLS[name](left, right)
            if name in _UNARY_CALLS:
                self.advance()
                self.expect_punct("(")
                inner = self.parse_expr()
                self.expect_punct(")")
                return _UNARY_CALLS[name](inner)
            if name == "file":
                self.advance()
                self.expect_punct("(")
                path_tok = self.peek()
                if path_tok.kind != "string":
                    raise ExprSyntaxError(
                        "file() takes a quoted path", path_tok.pos, ("quoted path",)
                    )
                self.advance()
                self.expect_punct(")")
                return FromFile(path_tok.text)
            if name in _ATOMS:
                self.advance()
                args = ()
                if self.at_punct("("):
                    self.advance()
                    values = [self.expect_int("atom parameter")]
                    while self.at_punct(","):
                        self.advance()
                        values.append(self.expect_int("atom parameter"))
                    self.expect_punct(")")
                    args = tuple(values)
                return Atom(name, args)
            raise ExprSyntaxError(
                f"unknown name {tok.text!r}",
                tok.pos,
                tuple(atom_names()) + tuple(sorted(_BINARY_CALLS) + sorted(_UNARY_CALLS) + ["file"]),
            )
        got = repr(tok.text) if tok.kind != "end" else "end of input"
        raise ExprSyntaxError(f"unexpected {got}", tok.pos, ("integer", "name", "'('"))


def parse(text):
    """Parse an expression string into an AST; raises ExprSyntaxError with offsets."""
    if not isinstance(text, str):
        raise TypeError(f"expression must be a string, got {text!r}")
    parser = _Parser(_tokenize(text))
    node = parser.parse_expr()
    tok = parser.peek()
    if tok.kind != "end":
        raise ExprSyntaxError(
            f"unexpected trailing input {tok.text!r}", tok.pos, ("'+'", "end of input")
        )
    return node


def _render_factor(e):
    if isinstance(e, Atom):
        display, _, _ = _ATOMS[e.name]
        if e.args:
            return f"{display}({','.join(str(a) for a in e.args)})"
        return display
    if isinstance(e, Union):
        return f"union({render(e.left)}, {render(e.right)})"
    if isinstance(e, Cartesian):
        return f"cart({render(e.left)}, {render(e.right)})"
    if isinstance(e, Double):
        return f"double({render(e.inner)})"
    if isinstance(e, Lex2):
        return f"lex2({render(e.inner)})"
    if isinstance(e, Complement):
        return f"complement({render(e.inner)})"
    if isinstance(e, Line):
        return f"line({render(e.inner)})"
    if isinstance(e, FromFile):
        return f'file("{e.path}")'
    return f"({render(e)})"


def _render_term(e):
    if isinstance(e, Copies):
        return f"{e.count}*{_render_factor(e.inner)}"
    return _render_factor(e)


def render(e):
    """Render an AST back to canonical text; inverse of parse on all ASTs."""
    if isinstance(e, Join):
        return f"{render(e.left)} + {_render_term(e.right)}"
    return _render_term(e)


def _eval_atom(e):
    display, count, builder = _ATOMS[e.name]
    if len(e.args) != count:
        plural = "s" if count != 1 else ""
        raise ExprEvalError(
            f"{render(e)}: {display} takes {count} parameter{plural}, got {len(e.args)}"
        )
    return builder(*e.args)


def eval_expr(e):
    """Build the graph described by an AST node."""
    if isinstance(e, Atom):
        try:
            return _eval_atom(e)
        except ExprEvalError:
            raise
        except graphs.OversizeGraphError:
            raise
        except (ValueError, TypeError) as exc:
            raise ExprEvalError(f"{render(e)}: {exc}") from exc
    if isinstance(e, (Join, Union, Cartesian)):
        left = eval_expr(e.left)
        right = eval_expr(e.right)
        op = {Join: graphs.join, Union: graphs.disjoint_union, Cartesian: graphs.cartesian}[type(e)]
        try:
            return op(left, right)
        except graphs.OversizeGraphError:
            raise
        except (ValueError, TypeError) as exc:
            raise ExprEvalError(f"{render(e)}: {exc}") from exc
    if isinstance(e, Copies):
        inner = eval_expr(e.inner)
        try:
            return graphs.copies(e.count, inner)
        except graphs.OversizeGraphError:
            raise
        except (ValueError, TypeError) as exc:
            raise ExprEvalError(f"{render(e)}: {exc}") from exc
    if isinstance(e, (Double, Lex2, Complement, Line)):
        inner = eval_expr(e.inner)
        op = {
            Double: graphs.double,
            Lex2: graphs.lex_k2,
            Complement: graphs.complement,
            Line: graphs.line_graph,
        }[type(e)]
        try:
            return op(inner)
        except graphs.OversizeGraphError:
            raise
        except (ValueError, TypeError) as exc:
            raise ExprEvalError(f"{render(e)}: {exc}") from exc
    if isinstance(e, FromFile):
        try:
            with open(e.path, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ExprEvalError(f"{render(e)}: {exc}") from exc
        try:
            return graphs.from_edge_list(text)
        except graphs.OversizeGraphError:
            raise
        except (ValueError, TypeError) as exc:
            raise ExprEvalError(f"{render(e)}: {exc}") from exc
    raise TypeError(f"not an expression node: {e!r}")


_SRG_ATOM_PARAMS = {
    "petersen": (10, 3, 0, 1),
    "shrikhande": (16, 6, 2, 2),
    "clebsch": (16, 10, 6, 6),
    "schlafli": (27, 16, 10, 8),
    "chang": (28, 12, 6, 4),
    "hoffman_singleton": (50, 7, 0, 1),
}

_SRG_ATOM_REGULAR = {
    "petersen": (10, 3, Fraction(-2)),
    "shrikhande": (16, 6, Fraction(-2)),
    "clebsch": (16, 10, Fraction(-2)),
    "schlafli": (27, 16, Fraction(-2)),
    "chang": (28, 12, Fraction(-2)),
    "hoffman_singleton": (50, 7, Fraction(-3)),
}


def _regular_info(e):
    """(vertex count, degree, exact smallest adjacency eigenvalue) when known, else None."""
    if isinstance(e, Atom):
        name, args = e.name, e.args
        if name == "k" and len(args) == 1 and args[0] >= 1:
            n = args[0]
            return (n, n - 1, formulas.lambda_min_complete(n))
        if name == "kbar" and len(args) == 1 and args[0] >= 1:
            return (args[0], 0, Fraction(0))
        if name == "c" and len(args) == 1 and args[0] >= 3:
            return (args[0], 2, formulas.lambda_min_cycle(args[0]))
        if name == "p" and len(args) == 1 and args[0] in (1, 2):
            n = args[0]
            return (n, n - 1, formulas.lambda_min_complete(n))
        if name == "kb" and len(args) == 2 and args[0] == args[1] and args[0] >= 1:
            n = args[0]
            return (2 * n, n, Fraction(-n))
        if name == "t" and len(args) == 1 and args[0] >= 2:
            n = args[0]
            if n == 2:
                return (1, 0, Fraction(0))
            if n == 3:
                return (3, 2, Fraction(-1))
            return (n * (n - 1) // 2, 2 * (n - 2), Fraction(-2))
        if name == "grid" and len(args) == 1 and args[0] >= 2:
            n = args[0]
            return (n * n, 2 * (n - 1), Fraction(-2))
        if name == "chang" and len(args) == 1 and args[0] in (1, 2, 3):
            return _SRG_ATOM_REGULAR["chang"]
        if name in _SRG_ATOM_REGULAR and not args:
            return _SRG_ATOM_REGULAR[name]
        return None
    if isinstance(e, Copies):
        info = _regular_info(e.inner)
        if info is None or e.count < 1:
            return None
        n, r, lmin = info
        return (e.count * n, r, lmin)
    if isinstance(e, Union):
        left = _regular_info(e.left)
        right = _regular_info(e.right)
        if left is None or right is None or left[1] != right[1]:
            return None
        return (left[0] + right[0], left[1], min(left[2], right[2]))
    return None


def _match_atom(e):
    name, args = e.name, e.args
    if name == "k" and len(args) == 1 and args[0] >= 2:
        return formulas.qec_complete(args[0])
    if name == "c" and len(args) == 1 and args[0] >= 3:
        return formulas.qec_cycle(args[0])
    if name == "p" and len(args) == 1:
        if args[0] == 2:
            return formulas.qec_complete(2)
        if args[0] == 3:
            return FormulaValue(Fraction(-2, 3), "path", "n = 3")
        return None
    if name == "kb" and len(args) == 2 and min(args) >= 1:
        return formulas.qec_complete_bipartite(*args)
    if name == "star" and len(args) == 1 and args[0] >= 1:
        return formulas.qec_complete_bipartite(1, args[0])
    if name == "wheel" and len(args) == 1 and args[0] >= 3:
        return formulas.qec_wheel(args[0])
    if name == "friendship" and len(args) == 1 and args[0] >= 1:
        return formulas.qec_friendship(args[0])
    if name == "t" and len(args) == 1 and args[0] >= 3:
        n = args[0]
        if n == 3:
            return formulas.qec_complete(3)
        return formulas.qec_srg((n * (n - 1) // 2, 2 * (n - 2), n - 2, 4))
    if name == "grid" and len(args) == 1 and args[0] >= 2:
        n = args[0]
        if n == 2:
            return formulas.qec_cycle(4)
        return formulas.qec_srg((n * n, 2 * (n - 1), n - 2, 2))
    if name == "chang" and len(args) == 1 and args[0] in (1, 2, 3):
        return formulas.qec_srg(_SRG_ATOM_PARAMS["chang"])
    if name in _SRG_ATOM_PARAMS and not args:
        return formulas.qec_srg(_SRG_ATOM_PARAMS[name])
    return None


def match_formula(e):
    """Closed-form QEC for the expression when one is known, else None.

    Recognizes the parametric families, the named strongly regular graphs,
    joins of parts with known regular data, and double/lex2 of anything that
    itself matches.
    """
    try:
        if isinstance(e, Atom):
            return _match_atom(e)
        if isinstance(e, Join):
            left = _regular_info(e.left)
            right = _regular_info(e.right)
            if left is None or right is None:
                return None
            return formulas.qec_join_regular(*left, *right)
        if isinstance(e, Double):
            inner = match_formula(e.inner)
            if inner is None:
                return None
            return formulas.qec_double_formula(inner.value)
        if isinstance(e, Lex2):
            inner = match_formula(e.inner)
            if inner is None:
                return None
            return formulas.qec_lex2_formula(inner.value)
        if isinstance(e, Line):
            if isinstance(e.inner, Atom) and e.inner.name == "k" and len(e.inner.args) == 1:
                n = e.inner.args[0]
                if n >= 3:
                    return _match_atom(Atom("t", (n,)))
            return None
    except (ValueError, TypeError):
        return None
    return None
