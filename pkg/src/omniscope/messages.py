"""Knowledge algorithms and the Dolev-Yao adversary.

A knowledge algorithm answers "Yes", "No" or "?" to formula queries; an
algorithmic-knowledge structure says K f holds exactly when the algorithm
answers "Yes" on f.  The Dolev-Yao algorithm answers has(m) queries by
closing the intercepted message set under projection of concatenations and
decryption with known keys -- extraction only, no message construction.

Message grammar (ASCII):

    msg := ident | "key:" ident | msg "." msg | "{" msg "}" ident

Concatenation "." associates to the left; the encryption key is the
identifier after the closing brace.
"""

from __future__ import annotations

from dataclasses import dataclass

from .formula import Formula, Know, Prop, render

YES = "Yes"
NO = "No"
UNKNOWN = "?"


@dataclass(frozen=True)
class Message:
    __slots__ = ()


@dataclass(frozen=True)
class Atom(Message):
    name: str


@dataclass(frozen=True)
class Key(Message):
    name: str


@dataclass(frozen=True)
class Concat(Message):
    left: Message
    right: Message


@dataclass(frozen=True)
class Encrypt(Message):
    body: Message
    key: str  # atomic key name


def render_message(m):
    if isinstance(m, Atom):
        return m.name
    if isinstance(m, Key):
        return "key:" + m.name
    if isinstance(m, Concat):
        left = render_message(m.left)
        right = render_message(m.right)
        if isinstance(m.right, Concat):
            right = "(" + right + ")"
        return "%s.%s" % (left, right)
    if isinstance(m, Encrypt):
        return "{%s}%s" % (render_message(m.body), m.key)
    raise TypeError(m)


class MessageParseError(ValueError):
    pass


def parse_message(text):
    msg, rest = _parse_concat(text.strip())
    if rest.strip():
        raise MessageParseError("trailing input: %r" % rest)
    return msg


def _parse_concat(text):
    msg, rest = _parse_unit(text)
    while rest.startswith("."):
        nxt, rest = _parse_unit(rest[1:])
        msg = Concat(msg, nxt)
    return msg, rest


def _parse_unit(text):
    text = text.lstrip()
    if not text:
        raise MessageParseError("empty message")
    if text.startswith("{"):
        depth, i = 1, 1
        while i < len(text) and depth:
            if text[i] == "{":
                depth += 1
            elif text[i] == "}":
                depth -= 1
            i += 1
        if depth:
            raise MessageParseError("unbalanced braces in %r" % text)
        body = parse_message(text[1:i - 1])
        rest = text[i:]
        key, rest = _parse_ident(rest)
        return Encrypt(body, key), rest
    if text.startswith("("):
        depth, i = 1, 1
        while i < len(text) and depth:
            if text[i] == "(":
                depth += 1
            elif text[i] == ")":
                depth -= 1
            i += 1
        if depth:
            raise MessageParseError("unbalanced parens in %r" % text)
        return parse_message(text[1:i - 1]), text[i:]
    if text.startswith("key:"):
        name, rest = _parse_ident(text[4:])
        return Key(name), rest
    name, rest = _parse_ident(text)
    return Atom(name), rest


def _parse_ident(text):
    i = 0
    while i < len(text) and (text[i].isalnum() or text[i] == "_"):
        i += 1
    if i == 0:
        raise MessageParseError("expected identifier in %r" % text)
    return text[:i], text[i:]


def submessages(m):
    out = {m}
    if isinstance(m, Concat):
        out |= submessages(m.left)
        out |= submessages(m.right)
    elif isinstance(m, Encrypt):
        out |= submessages(m.body)
    return out


def dy_closure(intercepted):
    """Least set containing the intercepted messages and closed under left
    and right projection of concatenations and decryption with derivable
    keys.  Saturates within the finite sub-message universe."""
    known = set(intercepted)
    changed = True
    while changed:
        changed = False
        for m in list(known):
            if isinstance(m, Concat):
                for part in (m.left, m.right):
                    if part not in known:
                        known.add(part)
                        changed = True
            elif isinstance(m, Encrypt) and Key(m.key) in known:
                if m.body not in known:
                    known.add(m.body)
                    changed = True
    return known


def dy_derives(intercepted, m):
    """H |- m under the Dolev-Yao extraction rules."""
    return m in dy_closure(intercepted)


# ---------------------------------------------------------------------------
# has(m) propositions

def _mangle(text):
    return (text.replace("_", "__").replace(".", "_o_").replace("{", "_b_")
            .replace("}", "_d_").replace(":", "_k_").replace("(", "_p_")
            .replace(")", "_q_"))


def has_prop(m):
    """The proposition standing for 'the agent possesses message m'.

    Message structure is embedded injectively in the proposition name, so
    has-propositions survive formula parsing and printing unchanged.
    """
    return Prop("has_" + _mangle(render_message(m)))


class KnowledgeAlgorithm:
    """Base class: a deterministic, total query procedure on formulas."""

    def query(self, f):
        raise NotImplementedError

    def __call__(self, f):
        return self.query(f)


class TableAlgorithm(KnowledgeAlgorithm):
    """Answers "Yes" exactly on a fixed finite set of formulas."""

    def __init__(self, yes, default=UNKNOWN):
        self.yes = frozenset(yes)
        self.default = default

    def query(self, f):
        return YES if f in self.yes else self.default

    def to_doc(self):
        return {"kind": "table",
                "yes": sorted(render(f) for f in self.yes),
                "default": self.default}


class DolevYaoAlgorithm(KnowledgeAlgorithm):
    """Answers has(m) queries by checking H |- m; everything else is "?".

    Non-derivable has(m) answers "No" by default so that K(has(m)) is
    bivalent; pass unknown_has="?" for an algorithm that never commits to a
    negative answer.
    """

    def __init__(self, intercepted, unknown_has=NO):
        self.intercepted = frozenset(intercepted)
        self.unknown_has = unknown_has
        self._yes_names = frozenset(
            has_prop(m).name for m in dy_closure(self.intercepted))

    def query(self, f):
        if isinstance(f, Prop) and f.name.startswith("has_"):
            return YES if f.name in self._yes_names else self.unknown_has
        return UNKNOWN

    def derives(self, m):
        return dy_derives(self.intercepted, m)

    def to_doc(self):
        return {"kind": "dolev-yao",
                "intercepted": sorted(render_message(m)
                                      for m in self.intercepted)}


def algorithm_from_doc(doc):
    kind = doc.get("kind")
    if kind == "dolev-yao":
        msgs = [parse_message(s) for s in doc.get("intercepted", [])]
        return DolevYaoAlgorithm(msgs)
    if kind == "table":
        from .formula import parse
        yes = [parse(s) for s in doc.get("yes", [])]
        return TableAlgorithm(yes, default=doc.get("default", UNKNOWN))
    raise ValueError("unknown algorithm kind %r" % kind)


def check_soundness(alg, structure, probes):
    """Audit an algorithm against a structure.

    "Yes" answers must hold at every world the agent considers possible,
    "No" answers must fail at one of them; "?" answers are unconstrained.
    Returns a list of violation descriptions (empty when sound).
    """
    from .checker import holds

    violations = []
    possible = sorted(structure.possible)
    for f in probes:
        answer = alg.query(f)
        if answer == YES:
            for w in possible:
                if not holds(structure, w, f):
                    violations.append(
                        "answered Yes on %s but it fails at possible world %s"
                        % (render(f), w))
                    break
        elif answer == NO:
            if all(holds(structure, w, f) for w in possible):
                violations.append(
                    "answered No on %s but it holds at every possible world"
                    % render(f))
    return violations
