"""Knowledge-base model: description-logic terms, statements, validation.

Terms form a single tree type with a string op tag.  Leaf ops carry the
entity kind (concept, arole, crole, datatype); the generic boolean ops
("not", "and", "or") take their kind from their operands.  Quantified
restrictions (exists / forall / cardinality) are representable anywhere in
a tree but are only legal in the statement positions the fragment grammar
sanctions; validate_fragment reports misplaced ones instead of refusing to
build them, so malformed input can be diagnosed rather than crash.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InvalidStatement

# ---------------------------------------------------------------------------
# constants and terms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Constant:
    """A datatype constant: a lexical value tagged with its datatype name."""

    lexeme: str
    datatype: str


@dataclass(frozen=True)
class Term:
    op: str
    args: tuple["Term", ...] = ()
    name: str = ""
    constants: tuple[Constant, ...] = ()
    n: int = 0

    def __repr__(self) -> str:  # compact, for test failure output
        bits = [self.op]
        if self.name:
            bits.append(self.name)
        if self.n:
            bits.append(str(self.n))
        bits.extend(repr(a) for a in self.args)
        bits.extend(f"{c.lexeme}^^{c.datatype}" for c in self.constants)
        return "(" + " ".join(bits) + ")"


_LEAF_KINDS = {
    "concept": "concept",
    "top": "concept",
    "bot": "concept",
    "nominal": "concept",
    "arole": "arole",
    "universal_role": "arole",
    "crole": "crole",
    "datatype": "data",
    "data_enum": "data",
}

_CONCEPT_OPS = {"has_self", "has_value", "data_has_value"}
_AROLE_OPS = {"inverse", "domain_restrict", "range_restrict", "both_restrict",
              "identity", "product"}
_CROLE_OPS = {"c_domain_restrict", "c_range_restrict", "c_both_restrict"}
_RESTRICTION_OPS = {"exists", "forall", "min_card", "max_card"}
_BOOLEAN_OPS = {"not", "and", "or"}


def kind_of(t: Term) -> str:
    """One of concept / arole / crole / data / restriction.

    Raises InvalidStatement when boolean operands disagree on kind.
    """
    if t.op in _LEAF_KINDS:
        return _LEAF_KINDS[t.op]
    if t.op in _CONCEPT_OPS:
        return "concept"
    if t.op in _AROLE_OPS:
        return "arole"
    if t.op in _CROLE_OPS:
        return "crole"
    if t.op in _RESTRICTION_OPS:
        return "restriction"
    if t.op in _BOOLEAN_OPS:
        kinds = {kind_of(a) for a in t.args}
        if len(kinds) != 1:
            raise InvalidStatement(f"boolean over mixed kinds {sorted(kinds)}")
        return kinds.pop()
    raise InvalidStatement(f"unknown term op {t.op!r}")


# constructors ---------------------------------------------------------------


def concept(name: str) -> Term:
    return Term("concept", name=name)


def top() -> Term:
    return Term("top")


def bot() -> Term:
    return Term("bot")


def nominal(individual: str) -> Term:
    return Term("nominal", name=individual)


def neg(t: Term) -> Term:
    return Term("not", (t,))


def conj(a: Term, b: Term) -> Term:
    return Term("and", (a, b))


def disj(a: Term, b: Term) -> Term:
    return Term("or", (a, b))


def has_self(role: Term) -> Term:
    return Term("has_self", (role,))


def has_value(role: Term, individual: str) -> Term:
    return Term("has_value", (role,), name=individual)


def data_has_value(role: Term, value: Constant) -> Term:
    return Term("data_has_value", (role,), constants=(value,))


def exists(role: Term, filler: Term) -> Term:
    return Term("exists", (role, filler))


def forall(role: Term, filler: Term) -> Term:
    return Term("forall", (role, filler))


def min_card(n: int, role: Term, filler: Term) -> Term:
    return Term("min_card", (role, filler), n=n)


def max_card(n: int, role: Term, filler: Term) -> Term:
    return Term("max_card", (role, filler), n=n)


def arole(name: str) -> Term:
    return Term("arole", name=name)


def universal_role() -> Term:
    return Term("universal_role")


def inverse(role: Term) -> Term:
    return Term("inverse", (role,))


def restrict_domain(role: Term, c: Term) -> Term:
    op = "domain_restrict" if kind_of(role) == "arole" else "c_domain_restrict"
    return Term(op, (role, c))


def restrict_range(role: Term, filler: Term) -> Term:
    op = "range_restrict" if kind_of(role) == "arole" else "c_range_restrict"
    return Term(op, (role, filler))


def restrict_both(role: Term, c: Term, filler: Term) -> Term:
    op = "both_restrict" if kind_of(role) == "arole" else "c_both_restrict"
    return Term(op, (role, c, filler))


def identity_on(c: Term) -> Term:
    return Term("identity", (c,))


def product(c1: Term, c2: Term) -> Term:
    return Term("product", (c1, c2))


def crole(name: str) -> Term:
    return Term("crole", name=name)


def datatype(name: str) -> Term:
    return Term("datatype", name=name)


def data_enum(*constants: Constant) -> Term:
    return Term("data_enum", constants=tuple(constants))


# ---------------------------------------------------------------------------
# statements
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConceptSub:
    left: Term
    right: Term


@dataclass(frozen=True)
class ConceptEquiv:
    left: Term
    right: Term


@dataclass(frozen=True)
class DataSub:
    left: Term
    right: Term


@dataclass(frozen=True)
class DataEquiv:
    left: Term
    right: Term


@dataclass(frozen=True)
class RoleSub:
    left: Term
    right: Term


@dataclass(frozen=True)
class RoleEquiv:
    left: Term
    right: Term


@dataclass(frozen=True)
class RoleChain:
    """chain[0] ; ... ; chain[-1] is contained in super_role."""

    chain: tuple[Term, ...]
    super_role: Term


ROLE_TRAITS = ("sym", "asym", "ref", "irref", "tra", "fun")


@dataclass(frozen=True)
class RoleTrait:
    trait: str
    role: Term

    def __post_init__(self):
        if self.trait not in ROLE_TRAITS:
            raise ValueError(f"unknown role trait {self.trait!r}")


@dataclass(frozen=True)
class RoleDisjoint:
    left: Term
    right: Term


@dataclass(frozen=True)
class InstanceOf:
    individual: str
    concept: Term


@dataclass(frozen=True)
class RelatedVia:
    subject: str
    target: str
    role: Term


@dataclass(frozen=True)
class SameAs:
    left: str
    right: str


@dataclass(frozen=True)
class DifferentFrom:
    left: str
    right: str


@dataclass(frozen=True)
class ConstantInstanceOf:
    constant: Constant
    data_term: Term


@dataclass(frozen=True)
class HasDataValue:
    subject: str
    value: Constant
    role: Term


RBoxStatement = RoleSub | RoleEquiv | RoleChain | RoleTrait | RoleDisjoint
TBoxStatement = ConceptSub | ConceptEquiv | DataSub | DataEquiv
ABoxStatement = (InstanceOf | RelatedVia | SameAs | DifferentFrom
                 | ConstantInstanceOf | HasDataValue)
Statement = RBoxStatement | TBoxStatement | ABoxStatement


# ---------------------------------------------------------------------------
# datatype map and knowledge base
# ---------------------------------------------------------------------------


class DatatypeMap:
    """Datatype names with their constants, in first-seen order.

    A lexical constant may belong to only one datatype; admitting the same
    lexeme under two datatypes would make its interpretation ambiguous, so
    the second registration fails.
    """

    def __init__(self):
        self.constants_by_type: dict[str, list[Constant]] = {}
        self._owner: dict[str, str] = {}

    def add_datatype(self, name: str) -> None:
        self.constants_by_type.setdefault(name, [])

    def add_constant(self, c: Constant) -> Constant:
        owner = self._owner.get(c.lexeme)
        if owner is not None and owner != c.datatype:
            raise InvalidStatement(
                f"constant {c.lexeme!r} already registered under datatype {owner!r}")
        self.add_datatype(c.datatype)
        if owner is None:
            self._owner[c.lexeme] = c.datatype
            self.constants_by_type[c.datatype].append(c)
        return c

    @property
    def datatypes(self) -> list[str]:
        return list(self.constants_by_type)

    def all_constants(self) -> list[Constant]:
        out = []
        for cs in self.constants_by_type.values():
            out.extend(cs)
        return out

    def __contains__(self, name: str) -> bool:
        return name in self.constants_by_type

    def __eq__(self, other) -> bool:
        if not isinstance(other, DatatypeMap):
            return NotImplemented
        return self.constants_by_type == other.constants_by_type

    def __repr__(self) -> str:
        return f"DatatypeMap({self.constants_by_type!r})"


@dataclass
class KnowledgeBase:
    rbox: list[RBoxStatement] = field(default_factory=list)
    tbox: list[TBoxStatement] = field(default_factory=list)
    abox: list[ABoxStatement] = field(default_factory=list)
    dmap: DatatypeMap = field(default_factory=DatatypeMap)
    individuals: list[str] = field(default_factory=list)
    concepts: list[str] = field(default_factory=list)
    abstract_roles: list[str] = field(default_factory=list)
    concrete_roles: list[str] = field(default_factory=list)

    def statements(self) -> list[Statement]:
        return [*self.rbox, *self.tbox, *self.abox]

    def declare(self, category: str, name: str) -> None:
        inventory = {
            "individual": self.individuals,
            "concept": self.concepts,
            "arole": self.abstract_roles,
            "crole": self.concrete_roles,
        }[category]
        if name not in inventory:
            inventory.append(name)

    @classmethod
    def from_statements(cls, rbox=(), tbox=(), abox=()) -> "KnowledgeBase":
        """Build a KB from statements, declaring every referenced name."""
        kb = cls(rbox=list(rbox), tbox=list(tbox), abox=list(abox))
        for stmt in kb.statements():
            for cat, name in _statement_names(stmt):
                kb.declare(cat, name)
            for c in _statement_constants(stmt):
                kb.dmap.add_constant(c)
            for d in _statement_datatypes(stmt):
                kb.dmap.add_datatype(d)
        return kb


def _term_names(t: Term) -> list[tuple[str, str]]:
    out = []
    if t.op == "concept":
        out.append(("concept", t.name))
    elif t.op == "arole":
        out.append(("arole", t.name))
    elif t.op == "crole":
        out.append(("crole", t.name))
    elif t.op in ("nominal", "has_value"):
        out.append(("individual", t.name))
    for a in t.args:
        out.extend(_term_names(a))
    return out


def _statement_terms(stmt: Statement) -> list[Term]:
    if isinstance(stmt, (ConceptSub, ConceptEquiv, DataSub, DataEquiv,
                         RoleSub, RoleEquiv, RoleDisjoint)):
        return [stmt.left, stmt.right]
    if isinstance(stmt, RoleChain):
        return [*stmt.chain, stmt.super_role]
    if isinstance(stmt, RoleTrait):
        return [stmt.role]
    if isinstance(stmt, InstanceOf):
        return [stmt.concept]
    if isinstance(stmt, (RelatedVia, HasDataValue)):
        return [stmt.role]
    if isinstance(stmt, ConstantInstanceOf):
        return [stmt.data_term]
    return []


def _statement_names(stmt: Statement) -> list[tuple[str, str]]:
    out = []
    for t in _statement_terms(stmt):
        out.extend(_term_names(t))
    if isinstance(stmt, InstanceOf):
        out.append(("individual", stmt.individual))
    elif isinstance(stmt, RelatedVia):
        out.append(("individual", stmt.subject))
        out.append(("individual", stmt.target))
    elif isinstance(stmt, (SameAs, DifferentFrom)):
        out.append(("individual", stmt.left))
        out.append(("individual", stmt.right))
    elif isinstance(stmt, HasDataValue):
        out.append(("individual", stmt.subject))
    return out


def _term_constants(t: Term) -> list[Constant]:
    out = list(t.constants)
    for a in t.args:
        out.extend(_term_constants(a))
    return out


def _statement_constants(stmt: Statement) -> list[Constant]:
    out = []
    for t in _statement_terms(stmt):
        out.extend(_term_constants(t))
    if isinstance(stmt, ConstantInstanceOf):
        out.append(stmt.constant)
    elif isinstance(stmt, HasDataValue):
        out.append(stmt.value)
    return out


def _term_datatypes(t: Term) -> list[str]:
    out = [t.name] if t.op == "datatype" else []
    for a in t.args:
        out.extend(_term_datatypes(a))
    return out


def _statement_datatypes(stmt: Statement) -> list[str]:
    out = []
    for t in _statement_terms(stmt):
        out.extend(_term_datatypes(t))
    return out


# ---------------------------------------------------------------------------
# fragment validation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    rule: str
    statement: Statement | None = None

    def __str__(self) -> str:
        return self.rule


def _check_term(t: Term, want: str, out: list[Violation], stmt: Statement,
                where: str) -> None:
    """Verify t is a well-kinded term of kind want with no nested restriction."""
    try:
        k = kind_of(t)
    except InvalidStatement as exc:
        out.append(Violation(f"{where}: {exc}", stmt))
        return
    if k == "restriction":
        out.append(Violation(f"{where}: quantified restriction not allowed here", stmt))
        return
    if k != want:
        out.append(Violation(f"{where}: expected a {want} term, found {k}", stmt))
        return
    _check_arities(t, out, stmt, where)


def _check_arities(t: Term, out: list[Violation], stmt: Statement, where: str) -> None:
    expect = {
        "not": 1, "and": 2, "or": 2, "inverse": 1, "has_self": 1,
        "has_value": 1, "data_has_value": 1, "domain_restrict": 2,
        "range_restrict": 2, "both_restrict": 3, "identity": 1, "product": 2,
        "c_domain_restrict": 2, "c_range_restrict": 2, "c_both_restrict": 3,
    }
    n = expect.get(t.op)
    if n is not None and len(t.args) != n:
        out.append(Violation(f"{where}: {t.op} takes {n} arguments", stmt))
        return
    # operand kind requirements for the mixed-kind operators
    sub: list[tuple[Term, str]] = []
    if t.op in ("not", "and", "or"):
        k = kind_of(t)
        sub = [(a, k) for a in t.args]
    elif t.op == "inverse":
        sub = [(t.args[0], "arole")]
    elif t.op in ("has_self", "has_value"):
        sub = [(t.args[0], "arole")]
    elif t.op == "data_has_value":
        sub = [(t.args[0], "crole")]
    elif t.op == "domain_restrict":
        sub = [(t.args[0], "arole"), (t.args[1], "concept")]
    elif t.op == "range_restrict":
        sub = [(t.args[0], "arole"), (t.args[1], "concept")]
    elif t.op == "both_restrict":
        sub = [(t.args[0], "arole"), (t.args[1], "concept"), (t.args[2], "concept")]
    elif t.op == "identity":
        sub = [(t.args[0], "concept")]
    elif t.op == "product":
        sub = [(t.args[0], "concept"), (t.args[1], "concept")]
    elif t.op == "c_domain_restrict":
        sub = [(t.args[0], "crole"), (t.args[1], "concept")]
    elif t.op == "c_range_restrict":
        sub = [(t.args[0], "crole"), (t.args[1], "data")]
    elif t.op == "c_both_restrict":
        sub = [(t.args[0], "crole"), (t.args[1], "concept"), (t.args[2], "data")]
    for a, want in sub:
        _check_term(a, want, out, stmt, where)


def _check_restriction(t: Term, side: str, out: list[Violation],
                       stmt: Statement) -> bool:
    """Handle a possibly-restricted inclusion side.  Returns True if t was a
    restriction (and has been checked)."""
    if t.op not in _RESTRICTION_OPS:
        return False
    allowed = ("exists", "min_card") if side == "left" else ("forall", "max_card")
    if t.op not in allowed:
        out.append(Violation(
            f"{t.op} restriction not allowed on the {side} side of an inclusion",
            stmt))
        return True
    role, filler = t.args
    rk = None
    try:
        rk = kind_of(role)
    except InvalidStatement as exc:
        out.append(Violation(f"restriction role: {exc}", stmt))
    if rk == "arole":
        _check_term(role, "arole", out, stmt, "restriction role")
        _check_term(filler, "concept", out, stmt, "restriction filler")
    elif rk == "crole":
        _check_term(role, "crole", out, stmt, "restriction role")
        _check_term(filler, "data", out, stmt, "restriction filler")
    elif rk is not None:
        out.append(Violation("restriction over a non-role term", stmt))
    if t.op in ("min_card", "max_card") and t.n < 1:
        out.append(Violation("cardinality bound must be at least 1", stmt))
    return True


def validate_fragment(kb: KnowledgeBase) -> list[Violation]:
    """Check every statement against the supported grammar.

    Returns an empty list when the KB lies inside the fragment; otherwise one
    Violation per offence, in statement order.
    """
    out: list[Violation] = []
    for stmt in kb.rbox:
        if isinstance(stmt, (RoleSub, RoleEquiv, RoleDisjoint)):
            kinds = set()
            for t in (stmt.left, stmt.right):
                try:
                    kinds.add(kind_of(t))
                except InvalidStatement as exc:
                    out.append(Violation(str(exc), stmt))
            if kinds and kinds <= {"arole"}:
                _check_term(stmt.left, "arole", out, stmt, "role statement")
                _check_term(stmt.right, "arole", out, stmt, "role statement")
            elif kinds and kinds <= {"crole"}:
                _check_term(stmt.left, "crole", out, stmt, "role statement")
                _check_term(stmt.right, "crole", out, stmt, "role statement")
            elif kinds:
                out.append(Violation("role statement mixes term kinds", stmt))
        elif isinstance(stmt, RoleChain):
            if len(stmt.chain) < 1:
                out.append(Violation("role chain must have at least one link", stmt))
            for t in (*stmt.chain, stmt.super_role):
                _check_term(t, "arole", out, stmt, "role chain")
        elif isinstance(stmt, RoleTrait):
            try:
                k = kind_of(stmt.role)
            except InvalidStatement as exc:
                out.append(Violation(str(exc), stmt))
                continue
            if k == "crole":
                if stmt.trait != "fun":
                    out.append(Violation(
                        f"trait {stmt.trait} undefined for concrete roles", stmt))
                _check_term(stmt.role, "crole", out, stmt, "role trait")
            else:
                _check_term(stmt.role, "arole", out, stmt, "role trait")
        else:
            out.append(Violation(f"not an RBox statement: {type(stmt).__name__}", stmt))
    for stmt in kb.tbox:
        if isinstance(stmt, ConceptSub):
            if not _check_restriction(stmt.left, "left", out, stmt):
                _check_term(stmt.left, "concept", out, stmt, "inclusion left side")
            if not _check_restriction(stmt.right, "right", out, stmt):
                _check_term(stmt.right, "concept", out, stmt, "inclusion right side")
        elif isinstance(stmt, ConceptEquiv):
            _check_term(stmt.left, "concept", out, stmt, "equivalence left side")
            _check_term(stmt.right, "concept", out, stmt, "equivalence right side")
        elif isinstance(stmt, DataSub):
            if not _check_restriction(stmt.left, "left", out, stmt):
                _check_term(stmt.left, "data", out, stmt, "inclusion left side")
            if not _check_restriction(stmt.right, "right", out, stmt):
                _check_term(stmt.right, "data", out, stmt, "inclusion right side")
        elif isinstance(stmt, DataEquiv):
            _check_term(stmt.left, "data", out, stmt, "equivalence left side")
            _check_term(stmt.right, "data", out, stmt, "equivalence right side")
        else:
            out.append(Violation(f"not a TBox statement: {type(stmt).__name__}", stmt))
    for stmt in kb.abox:
        if isinstance(stmt, InstanceOf):
            _check_term(stmt.concept, "concept", out, stmt, "concept assertion")
        elif isinstance(stmt, RelatedVia):
            _check_term(stmt.role, "arole", out, stmt, "role assertion")
        elif isinstance(stmt, HasDataValue):
            _check_term(stmt.role, "crole", out, stmt, "data value assertion")
        elif isinstance(stmt, ConstantInstanceOf):
            _check_term(stmt.data_term, "data", out, stmt, "datatype assertion")
        elif isinstance(stmt, (SameAs, DifferentFrom)):
            pass
        else:
            out.append(Violation(f"not an ABox statement: {type(stmt).__name__}", stmt))
    return out
