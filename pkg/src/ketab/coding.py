"""Flat string codec for variables, literals, clauses, and universals.

Every object renders as a single space-separated token string.  Variables
render as ``V<sort>{<name>}``; the name may contain anything except ``$``,
``{`` and ``}``, so the lexer scans to the matching brace rather than
splitting on whitespace.  Relators and connectives are three-character
``$``-tokens:

    $IN / $NI   membership, positive / negative
    $EQ / $QE   equality, positive / negative
    $OA x $CO y $AO   the ordered pair <x, y>
    $FA         one universal quantifier binding the following variable
    $AD $OR     conjunction, disjunction (prefix, binary)
    $DA $RO     negated conjunction, negated disjunction (prefix, binary)

Connectives are written in prefix form, so no bracketing tokens are needed
and decoding is single-pass.  Multi-disjunct clauses render as a right-nested
$OR chain; a one-literal clause renders as the bare literal, identical to the
literal itself (the original tool prints unit clauses that way too), so
decode resolves that overlap in favour of Literal.
"""

from __future__ import annotations

from .errors import MalformedCoding
from .formulas import (
    And,
    Atom,
    Clause,
    EQUALITY,
    Literal,
    MEMBERSHIP,
    Matrix,
    Not,
    Or,
    SortedVariable,
    Truth,
    UniversalFormula,
)

T_FA = "$FA"
T_AD = "$AD"
T_OR = "$OR"
T_DA = "$DA"
T_RO = "$RO"
T_IN = "$IN"
T_NI = "$NI"
T_EQ = "$EQ"
T_QE = "$QE"
T_OA = "$OA"
T_CO = "$CO"
T_AO = "$AO"

_OPERATOR_TOKENS = {T_FA, T_AD, T_OR, T_DA, T_RO, T_IN, T_NI, T_EQ, T_QE, T_OA, T_CO, T_AO}


# ---------------------------------------------------------------------------
# encoding
# ---------------------------------------------------------------------------


def _enc_var(v: SortedVariable) -> str:
    return f"V{v.sort}{{{v.name}}}"


def _enc_left(atom: Atom) -> str:
    if atom.is_pair:
        a, b = atom.left
        return f"{T_OA} {_enc_var(a)} {T_CO} {_enc_var(b)} {T_AO}"
    return _enc_var(atom.left)


def _enc_literal(lit: Literal) -> str:
    if lit.atom.rel == MEMBERSHIP:
        rel = T_IN if lit.positive else T_NI
    else:
        rel = T_EQ if lit.positive else T_QE
    return f"{_enc_left(lit.atom)} {rel} {_enc_var(lit.atom.right)}"


def _enc_matrix(m: Matrix) -> str:
    if isinstance(m, Truth):
        raise ValueError("truth constants have no coded form; fold them away first")
    if isinstance(m, Atom):
        return _enc_literal(Literal(m, True))
    if isinstance(m, Not):
        inner = m.arg
        if isinstance(inner, Atom):
            return _enc_literal(Literal(inner, False))
        if isinstance(inner, And):
            return f"{T_DA} {_enc_matrix(inner.left)} {_enc_matrix(inner.right)}"
        if isinstance(inner, Or):
            return f"{T_RO} {_enc_matrix(inner.left)} {_enc_matrix(inner.right)}"
        raise ValueError("unexpected negation shape in matrix")
    if isinstance(m, And):
        return f"{T_AD} {_enc_matrix(m.left)} {_enc_matrix(m.right)}"
    if isinstance(m, Or):
        return f"{T_OR} {_enc_matrix(m.left)} {_enc_matrix(m.right)}"
    raise ValueError(f"cannot encode {m!r}")


def encode(item: SortedVariable | Literal | Clause | UniversalFormula) -> str:
    """Render one object as its coded token string."""
    if isinstance(item, SortedVariable):
        return _enc_var(item)
    if isinstance(item, Literal):
        return _enc_literal(item)
    if isinstance(item, Clause):
        parts = [_enc_literal(lit) for lit in item.disjuncts]
        out = parts[-1]
        for p in reversed(parts[:-1]):
            out = f"{T_OR} {p} {out}"
        return out
    if isinstance(item, UniversalFormula):
        pieces = [f"{T_FA} {_enc_var(v)}" for v in item.prefix]
        pieces.append(_enc_matrix(item.matrix))
        return " ".join(pieces)
    raise TypeError(f"cannot encode object of type {type(item).__name__}")


# ---------------------------------------------------------------------------
# lexing
# ---------------------------------------------------------------------------


class _Tok:
    __slots__ = ("kind", "value", "sort", "pos")

    def __init__(self, kind: str, pos: int, value: str = "", sort: int = -1):
        self.kind = kind  # "op" or "var"
        self.value = value
        self.sort = sort
        self.pos = pos


def _lex(s: str) -> list[_Tok]:
    toks: list[_Tok] = []
    i = 0
    n = len(s)
    while i < n:
        ch = s[i]
        if ch.isspace():
            i += 1
            continue
        if ch == "$":
            word = s[i:i + 3]
            if word not in _OPERATOR_TOKENS:
                raise MalformedCoding(i, "a known $-token")
            toks.append(_Tok("op", i, word))
            i += 3
            continue
        if ch == "V":
            if i + 1 >= n or not s[i + 1].isdigit():
                raise MalformedCoding(i, "a variable token V<sort>{name}")
            sort = int(s[i + 1])
            if sort > 3:
                raise MalformedCoding(i + 1, "a variable sort in 0..3")
            if i + 2 >= n or s[i + 2] != "{":
                raise MalformedCoding(i + 2, "'{' after the variable sort")
            close = s.find("}", i + 3)
            if close < 0:
                raise MalformedCoding(i + 2, "a matching '}'")
            name = s[i + 3:close]
            if not name:
                raise MalformedCoding(i + 3, "a non-empty variable name")
            if "$" in name or "{" in name:
                raise MalformedCoding(i + 3, "a name without '$' or '{'")
            toks.append(_Tok("var", i, name, sort))
            i = close + 1
            continue
        raise MalformedCoding(i, "a variable or $-token")
    return toks


# ---------------------------------------------------------------------------
# decoding
# ---------------------------------------------------------------------------


class _Parser:
    def __init__(self, toks: list[_Tok], text_len: int):
        self.toks = toks
        self.i = 0
        self.end = text_len

    def peek(self) -> _Tok | None:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def next(self, expected: str) -> _Tok:
        t = self.peek()
        if t is None:
            raise MalformedCoding(self.end, expected)
        self.i += 1
        return t

    def take_var(self, expected: str, sort: int | None = None) -> _Tok:
        t = self.next(expected)
        if t.kind != "var" or (sort is not None and t.sort != sort):
            raise MalformedCoding(t.pos, expected)
        return t

    def matrix(self, bound: dict[str, SortedVariable]) -> Matrix:
        t = self.peek()
        if t is None:
            raise MalformedCoding(self.end, "a literal or connective")
        if t.kind == "op" and t.value in (T_AD, T_OR, T_DA, T_RO):
            self.i += 1
            left = self.matrix(bound)
            right = self.matrix(bound)
            if t.value == T_AD:
                return And(left, right)
            if t.value == T_OR:
                return Or(left, right)
            if t.value == T_DA:
                return Not(And(left, right))
            return Not(Or(left, right))
        lit = self.literal(bound)
        return lit.atom if lit.positive else Not(lit.atom)

    def literal(self, bound: dict[str, SortedVariable]) -> Literal:
        t = self.peek()
        if t is None:
            raise MalformedCoding(self.end, "a literal")
        if t.kind == "op" and t.value == T_OA:
            self.i += 1
            a = self.var(bound, sort=0)
            co = self.next("the pair separator $CO")
            if co.kind != "op" or co.value != T_CO:
                raise MalformedCoding(co.pos, "the pair separator $CO")
            b = self.var(bound, sort=0)
            ao = self.next("the pair closer $AO")
            if ao.kind != "op" or ao.value != T_AO:
                raise MalformedCoding(ao.pos, "the pair closer $AO")
            rel = self.next("a membership relator")
            if rel.kind != "op" or rel.value not in (T_IN, T_NI):
                raise MalformedCoding(rel.pos, "$IN or $NI after a pair")
            right = self.var(bound, sort=3)
            return Literal(Atom(MEMBERSHIP, (a, b), right), rel.value == T_IN)
        if t.kind != "var":
            raise MalformedCoding(t.pos, "a variable or pair opener")
        if t.sort != 0:
            raise MalformedCoding(t.pos, "a sort-0 variable on the left of a relator")
        left = self.var(bound, sort=0)
        rel = self.next("a relator token")
        if rel.kind != "op" or rel.value not in (T_IN, T_NI, T_EQ, T_QE):
            raise MalformedCoding(rel.pos, "a relator token")
        if rel.value in (T_EQ, T_QE):
            right = self.var(bound, sort=0)
            return Literal(Atom(EQUALITY, left, right), rel.value == T_EQ)
        right = self.var(bound, sort=1)
        return Literal(Atom(MEMBERSHIP, left, right), rel.value == T_IN)

    def var(self, bound: dict[str, SortedVariable], sort: int) -> SortedVariable:
        t = self.take_var(f"a sort-{sort} variable", sort=sort)
        if sort == 0 and t.value in bound:
            return bound[t.value]
        return SortedVariable(t.sort, t.value)


def _flatten_or(m: Matrix) -> list[Matrix] | None:
    """Or-tree leaves in order, or None if some leaf is not a literal."""
    if isinstance(m, Or):
        left = _flatten_or(m.left)
        right = _flatten_or(m.right)
        if left is None or right is None:
            return None
        return left + right
    if isinstance(m, Atom) or (isinstance(m, Not) and isinstance(m.arg, Atom)):
        return [m]
    return None


def _as_literal(m: Matrix) -> Literal:
    if isinstance(m, Atom):
        return Literal(m, True)
    assert isinstance(m, Not) and isinstance(m.arg, Atom)
    return Literal(m.arg, False)


def decode(s: str) -> SortedVariable | Literal | Clause | UniversalFormula:
    """Parse a coded string back into an object.

    Forms that share a rendering are resolved in a fixed order: a lone
    variable token is a SortedVariable, a string starting with $FA is a
    UniversalFormula, a disjunction whose leaves are all literals is a
    Clause, a single literal is a Literal, and anything else is a
    quantifier-free UniversalFormula.
    """
    toks = _lex(s)
    if not toks:
        raise MalformedCoding(0, "a non-empty coding")
    p = _Parser(toks, len(s))

    if len(toks) == 1 and toks[0].kind == "var":
        return SortedVariable(toks[0].sort, toks[0].value)

    prefix: list[SortedVariable] = []
    bound: dict[str, SortedVariable] = {}
    while (t := p.peek()) is not None and t.kind == "op" and t.value == T_FA:
        p.i += 1
        vt = p.take_var("a sort-0 variable after $FA", sort=0)
        v = SortedVariable(0, vt.value, bound=True)
        if v.name in bound:
            raise MalformedCoding(vt.pos, "a fresh quantified variable name")
        bound[v.name] = v
        prefix.append(v)

    m = p.matrix(bound)
    trailing = p.peek()
    if trailing is not None:
        raise MalformedCoding(trailing.pos, "end of input")

    if prefix:
        return UniversalFormula(tuple(prefix), m)
    if isinstance(m, Atom) or (isinstance(m, Not) and isinstance(m.arg, Atom)):
        return _as_literal(m)
    leaves = _flatten_or(m)
    if leaves is not None and len(leaves) >= 2:
        return Clause(tuple(_as_literal(x) for x in leaves))
    return UniversalFormula((), m)


def decode_clause(s: str) -> Clause:
    """Decode, widening a bare literal to a unit clause."""
    obj = decode(s)
    if isinstance(obj, Literal):
        return Clause((obj,))
    if isinstance(obj, Clause):
        return obj
    raise MalformedCoding(0, "a clause")
