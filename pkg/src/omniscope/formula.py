"""Formula AST, parser and printer for the epistemic language and its
probabilistic extension.

The canonical AST uses only propositions, constants, negation, conjunction,
the knowledge operator K, and linear likelihood atoms.  Disjunction,
implication and biconditional are accepted by the parser and desugared, so
the satisfaction clauses elsewhere only ever see the canonical connectives.

Grammar (ASCII):

    form  := lform | "true" | "false" | ident | "~" form | "K" form
           | "(" form ")" | form "&" form | form "|" form
           | form "->" form | form "<->" form
    lform := term {"+" term} rel int
    term  := [int] "l(" form ")"          # omitted coefficient = 1
    rel   := ">=" | ">" | "<=" | "<" | "="

Precedence: ~ and K bind tightest, then &, then |, then -> and <->
(both right-associative).  "&" and "|" associate to the left.
Formulas inside l(...) must be purely propositional.
"""

from __future__ import annotations

import re
from dataclasses import dataclass


class ParseError(ValueError):
    """Syntax error with a character position."""

    def __init__(self, message, pos):
        super().__init__("%s (at position %d)" % (message, pos))
        self.pos = pos


@dataclass(frozen=True)
class Formula:
    __slots__ = ()


@dataclass(frozen=True)
class Prop(Formula):
    name: str


@dataclass(frozen=True)
class Const(Formula):
    value: bool


@dataclass(frozen=True)
class Not(Formula):
    sub: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Know(Formula):
    sub: Formula


@dataclass(frozen=True)
class LikAtom(Formula):
    """a1*l(f1) + ... + an*l(fn)  rel  bound, with integer coefficients."""

    terms: tuple  # tuple of (int, Formula)
    rel: str      # one of ">=", ">", "<=", "<", "="
    bound: int


TRUE = Const(True)
FALSE = Const(False)

RELATIONS = (">=", ">", "<=", "<", "=")

_RESERVED = {"true", "false", "K"}


def lnot(f):
    return Not(f)


def land(*fs):
    """Left-nested conjunction of one or more formulas."""
    acc = fs[0]
    for f in fs[1:]:
        acc = And(acc, f)
    return acc


def lor(a, b):
    return Not(And(Not(a), Not(b)))


def implies(a, b):
    return Not(And(a, Not(b)))


def iff(a, b):
    return And(implies(a, b), implies(b, a))


def is_propositional(f):
    """True when f contains no K operator and no likelihood atom."""
    if isinstance(f, (Prop, Const)):
        return True
    if isinstance(f, Not):
        return is_propositional(f.sub)
    if isinstance(f, And):
        return is_propositional(f.left) and is_propositional(f.right)
    return False


def propositions(f):
    """Set of proposition names occurring anywhere in f."""
    out = set()
    _collect_props(f, out)
    return out


def _collect_props(f, out):
    if isinstance(f, Prop):
        out.add(f.name)
    elif isinstance(f, Not):
        _collect_props(f.sub, out)
    elif isinstance(f, And):
        _collect_props(f.left, out)
        _collect_props(f.right, out)
    elif isinstance(f, Know):
        _collect_props(f.sub, out)
    elif isinstance(f, LikAtom):
        for _, arg in f.terms:
            _collect_props(arg, out)


def ast_size(f):
    """Number of AST nodes; a likelihood atom counts one node per term plus
    its arguments."""
    if isinstance(f, (Prop, Const)):
        return 1
    if isinstance(f, (Not, Know)):
        return 1 + ast_size(f.sub)
    if isinstance(f, And):
        return 1 + ast_size(f.left) + ast_size(f.right)
    if isinstance(f, LikAtom):
        return 1 + sum(ast_size(arg) for _, arg in f.terms)
    raise TypeError(f)


# ---------------------------------------------------------------------------
# Rendering

_PREC_ATOM = 4
_PREC_PREFIX = 3
_PREC_AND = 2


def _prec(f):
    if isinstance(f, (Prop, Const)):
        return _PREC_ATOM
    if isinstance(f, (Not, Know)):
        return _PREC_PREFIX
    if isinstance(f, And):
        return _PREC_AND
    if isinstance(f, LikAtom):
        return 0  # always parenthesized when nested
    raise TypeError(f)


def render(f):
    """Deterministic ASCII rendering; parse(render(f)) == f."""
    if isinstance(f, Prop):
        return f.name
    if isinstance(f, Const):
        return "true" if f.value else "false"
    if isinstance(f, Not):
        return "~" + _render_child(f.sub, _PREC_PREFIX)
    if isinstance(f, Know):
        return "K " + _render_child(f.sub, _PREC_PREFIX)
    if isinstance(f, And):
        # left-associative: only the right child needs parens when it is
        # itself a conjunction
        left = _render_child(f.left, _PREC_AND)
        right = _render_child(f.right, _PREC_AND + 1)
        return "%s & %s" % (left, right)
    if isinstance(f, LikAtom):
        parts = ["%d l(%s)" % (coeff, render(arg)) for coeff, arg in f.terms]
        return "%s %s %d" % (" + ".join(parts), f.rel, f.bound)
    raise TypeError(f)


def _render_child(f, minimum):
    text = render(f)
    if _prec(f) < minimum:
        return "(" + text + ")"
    return text


# ---------------------------------------------------------------------------
# Parsing

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<lparen_l>l\()|(?P<int>-?\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op><->|->|>=|<=|[><=~&|+()]))"
)


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None or match.end() == pos:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            where = len(text) - len(stripped)
            raise ParseError("unexpected character %r" % stripped[0], where)
        kind = match.lastgroup
        value = match.group(kind)
        tokens.append((kind, value, match.start(kind)))
        pos = match.end()
    tokens.append(("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.index = 0

    def peek(self):
        return self.tokens[self.index]

    def advance(self):
        tok = self.tokens[self.index]
        if tok[0] != "eof":
            self.index += 1
        return tok

    def expect_op(self, op):
        kind, value, pos = self.peek()
        if kind != "op" or value != op:
            raise ParseError("expected %r" % op, pos)
        return self.advance()

    def parse_formula(self):
        f = self.parse_or()
        kind, value, _ = self.peek()
        if kind == "op" and value in ("->", "<->"):
            self.advance()
            rest = self.parse_formula()  # right-associative
            return implies(f, rest) if value == "->" else iff(f, rest)
        return f

    def parse_or(self):
        f = self.parse_and()
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value == "|":
                self.advance()
                f = lor(f, self.parse_and())
            else:
                return f

    def parse_and(self):
        f = self.parse_unary()
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value == "&":
                self.advance()
                f = And(f, self.parse_unary())
            else:
                return f

    def parse_unary(self):
        kind, value, pos = self.peek()
        if kind == "op" and value == "~":
            self.advance()
            return Not(self.parse_unary())
        if kind == "ident" and value == "K":
            self.advance()
            return Know(self.parse_unary())
        return self.parse_atom()

    def parse_atom(self):
        kind, value, pos = self.peek()
        if kind == "op" and value == "(":
            self.advance()
            f = self.parse_formula()
            self.expect_op(")")
            return f
        if kind in ("int", "lparen_l"):
            return self.parse_lik_atom()
        if kind == "ident":
            self.advance()
            if value == "true":
                return TRUE
            if value == "false":
                return FALSE
            if value == "K":
                raise ParseError("K needs an operand", pos)
            return Prop(value)
        raise ParseError("expected a formula", pos)

    def parse_lik_atom(self):
        terms = [self.parse_lik_term()]
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value == "+":
                self.advance()
                terms.append(self.parse_lik_term())
            else:
                break
        kind, rel, pos = self.peek()
        if kind != "op" or rel not in RELATIONS:
            raise ParseError("expected a relation (>=, >, <=, <, =)", pos)
        self.advance()
        kind, value, pos = self.peek()
        if kind != "int":
            raise ParseError("expected an integer bound", pos)
        self.advance()
        return LikAtom(tuple(terms), rel, int(value))

    def parse_lik_term(self):
        kind, value, pos = self.peek()
        coeff = 1
        if kind == "int":
            coeff = int(value)
            self.advance()
            kind, value, pos = self.peek()
        if kind != "lparen_l":
            raise ParseError("expected l( after coefficient", pos)
        self.advance()
        arg_pos = self.peek()[2]
        arg = self.parse_formula()
        if not is_propositional(arg):
            raise ParseError("non-propositional likelihood argument", arg_pos)
        self.expect_op(")")
        return (coeff, arg)


def parse(text):
    """Parse text into a canonical Formula.

    Raises ParseError with a position on malformed input, and on likelihood
    arguments containing K or nested l(...).
    """
    parser = _Parser(text)
    f = parser.parse_formula()
    kind, _, pos = parser.peek()
    if kind != "eof":
        raise ParseError("trailing input", pos)
    return f


# ---------------------------------------------------------------------------
# Structural analysis

def _format_key(f):
    return (ast_size(f), render(f))


def subformulas(f):
    """All subformulas of f including f itself, smallest first, ties broken
    by rendered text.  Likelihood arguments count as subformulas."""
    seen = {}
    _collect_subs(f, seen)
    return sorted(seen.values(), key=_format_key)


def _collect_subs(f, seen):
    if f in seen:
        return
    seen[f] = f
    if isinstance(f, (Not, Know)):
        _collect_subs(f.sub, seen)
    elif isinstance(f, And):
        _collect_subs(f.left, seen)
        _collect_subs(f.right, seen)
    elif isinstance(f, LikAtom):
        for _, arg in f.terms:
            _collect_subs(arg, seen)


def positive_likelihood(f):
    """The atom 'l(f) > 0' for a propositional f."""
    return LikAtom(((1, f),), ">", 0)


def likelihood_closure(f):
    """subformulas(f) plus 'l(psi) > 0' for every propositional subformula
    psi.  At most twice the node count of f."""
    subs = subformulas(f)
    extended = {g: g for g in subs}
    for g in subs:
        if is_propositional(g):
            atom = positive_likelihood(g)
            extended.setdefault(atom, atom)
    return sorted(extended.values(), key=_format_key)


def eval_prop(assignment, f):
    """Classical evaluation of a purely propositional formula under a
    total truth assignment (a mapping from proposition name to bool)."""
    if isinstance(f, Prop):
        try:
            return assignment[f.name]
        except KeyError:
            raise ValueError("unbound proposition %r" % f.name) from None
    if isinstance(f, Const):
        return f.value
    if isinstance(f, Not):
        return not eval_prop(assignment, f.sub)
    if isinstance(f, And):
        return eval_prop(assignment, f.left) and eval_prop(assignment, f.right)
    raise ValueError("not a propositional formula: %s" % render(f))
