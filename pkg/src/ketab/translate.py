"""Translation of knowledge-base statements into the set-theoretic fragment.

Named entities map to variables: individuals and datatype constants to
sort-0, concepts and datatypes to sort-1, roles (abstract and concrete) to
sort-3.  Complex terms never get variables of their own; they unfold into
the characteristic condition of membership, so "x is in C and D" becomes a
conjunction over the conditions for C and D at x.

ABox statements produce ground literals (or, for compound concepts, a
quantifier-free formula handed to the expansion stage).  TBox and RBox
statements produce universally quantified formulae whose bound variables
use placeholder names z, z1, ...; the normalization stage renames them to
globally fresh names before grounding.

Datatype structure is made explicit as ground facts: every constant is a
member of its datatype's set variable, constants of distinct datatypes are
unequal, and every individual is unequal to every constant, witnessing the
disjointness of the element and data domains.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidStatement, NotAConcept, NotARole, ResourceLimit
from .formulas import (
    FALSE,
    Literal,
    Matrix,
    Not,
    SortedVariable,
    TRUE,
    Atom,
    UniversalFormula,
    equality,
    m_and,
    m_and_all,
    m_iff,
    m_implies,
    m_not,
    m_or,
    m_or_all,
    matrix_variables,
    member,
    pair_member,
)
from . import kb as K
from .kb import KnowledgeBase, Term

_CATEGORY_SORT = {
    "individual": 0,
    "constant": 0,
    "concept": 1,
    "datatype": 1,
    "arole": 3,
    "crole": 3,
}

_BOUND_NAME_CYCLE = ("x", "y", "z")


class VarRegistry:
    """Free (VVL) and bound (VQL) variable inventories, in first-seen order.

    Each named entity gets exactly one variable per (category, name) key.
    Distinct categories sharing a sort (individual/constant, concept/datatype,
    abstract/concrete role) can collide on the variable name; the first
    claimant keeps the bare name, later ones get a category suffix.
    """

    def __init__(self):
        self.free: dict[int, list[SortedVariable]] = {0: [], 1: [], 2: [], 3: []}
        self.bound: list[SortedVariable] = []
        self._by_key: dict[tuple[str, str], SortedVariable] = {}
        self._taken: dict[int, set[str]] = {0: set(), 1: set(), 2: set(), 3: set()}
        self._category_of: dict[SortedVariable, str] = {}
        self._rank: dict[SortedVariable, int] = {}
        self._bound_counter = 0

    def variable(self, category: str, name: str) -> SortedVariable:
        key = (category, name)
        v = self._by_key.get(key)
        if v is not None:
            return v
        sort = _CATEGORY_SORT[category]
        varname = name
        if varname in self._taken[sort]:
            varname = f"{name}_{category}"
        while varname in self._taken[sort]:
            varname += "_"
        v = SortedVariable(sort, varname)
        self._by_key[key] = v
        self._taken[sort].add(varname)
        self.free[sort].append(v)
        self._category_of[v] = category
        self._rank[v] = len(self._rank)
        return v

    def of_category(self, category: str) -> list[SortedVariable]:
        return [v for v in self.free[_CATEGORY_SORT[category]]
                if self._category_of[v] == category]

    def rank(self, v: SortedVariable) -> int:
        return self._rank[v]

    def fresh_bound(self) -> SortedVariable:
        """Next globally fresh bound variable, named x, y, z, x1, y1, z1, ..."""
        while True:
            base = _BOUND_NAME_CYCLE[self._bound_counter % 3]
            round_ = self._bound_counter // 3
            self._bound_counter += 1
            name = base if round_ == 0 else f"{base}{round_}"
            if name not in self._taken[0]:
                self._taken[0].add(name)
                v = SortedVariable(0, name, bound=True)
                self.bound.append(v)
                return v


@dataclass
class TranslationOutput:
    ground_literals: list[Literal]
    universals: list[UniversalFormula]
    registry: VarRegistry


# ---------------------------------------------------------------------------
# characteristic conditions for term membership
# ---------------------------------------------------------------------------


def concept_condition(t: Term, x: SortedVariable, reg: VarRegistry) -> Matrix:
    """The condition under which x belongs to the concept term t."""
    op = t.op
    if op == "concept":
        return member(x, reg.variable("concept", t.name))
    if op == "top":
        return TRUE
    if op == "bot":
        return FALSE
    if op == "not":
        return m_not(concept_condition(t.args[0], x, reg))
    if op == "and":
        return m_and(concept_condition(t.args[0], x, reg),
                     concept_condition(t.args[1], x, reg))
    if op == "or":
        return m_or(concept_condition(t.args[0], x, reg),
                    concept_condition(t.args[1], x, reg))
    if op == "nominal":
        return equality(x, reg.variable("individual", t.name))
    if op == "has_self":
        return role_condition(t.args[0], x, x, reg)
    if op == "has_value":
        return role_condition(t.args[0], x, reg.variable("individual", t.name), reg)
    if op == "data_has_value":
        return role_condition(t.args[0], x,
                              reg.variable("constant", t.constants[0].lexeme), reg)
    raise NotAConcept(f"{op} is not a concept term")


def role_condition(t: Term, x: SortedVariable, y: SortedVariable,
                   reg: VarRegistry) -> Matrix:
    """The condition under which the pair <x, y> belongs to the role term t."""
    op = t.op
    if op == "arole":
        return pair_member(x, y, reg.variable("arole", t.name))
    if op == "crole":
        return pair_member(x, y, reg.variable("crole", t.name))
    if op == "universal_role":
        return TRUE
    if op == "inverse":
        return role_condition(t.args[0], y, x, reg)
    if op == "not":
        return m_not(role_condition(t.args[0], x, y, reg))
    if op == "and":
        return m_and(role_condition(t.args[0], x, y, reg),
                     role_condition(t.args[1], x, y, reg))
    if op == "or":
        return m_or(role_condition(t.args[0], x, y, reg),
                    role_condition(t.args[1], x, y, reg))
    if op == "domain_restrict":
        return m_and(role_condition(t.args[0], x, y, reg),
                     concept_condition(t.args[1], x, reg))
    if op == "range_restrict":
        return m_and(role_condition(t.args[0], x, y, reg),
                     concept_condition(t.args[1], y, reg))
    if op == "both_restrict":
        return m_and(m_and(role_condition(t.args[0], x, y, reg),
                           concept_condition(t.args[1], x, reg)),
                     concept_condition(t.args[2], y, reg))
    if op == "identity":
        return m_and(equality(x, y), concept_condition(t.args[0], x, reg))
    if op == "product":
        return m_and(concept_condition(t.args[0], x, reg),
                     concept_condition(t.args[1], y, reg))
    if op == "c_domain_restrict":
        return m_and(role_condition(t.args[0], x, y, reg),
                     concept_condition(t.args[1], x, reg))
    if op == "c_range_restrict":
        return m_and(role_condition(t.args[0], x, y, reg),
                     data_condition(t.args[1], y, reg))
    if op == "c_both_restrict":
        return m_and(m_and(role_condition(t.args[0], x, y, reg),
                           concept_condition(t.args[1], x, reg)),
                     data_condition(t.args[2], y, reg))
    raise NotARole(f"{op} is not a role term")


def data_condition(t: Term, y: SortedVariable, reg: VarRegistry) -> Matrix:
    """The condition under which y belongs to the datatype term t."""
    op = t.op
    if op == "datatype":
        return member(y, reg.variable("datatype", t.name))
    if op == "data_enum":
        return m_or_all([equality(y, reg.variable("constant", c.lexeme))
                         for c in t.constants])
    if op == "not":
        return m_not(data_condition(t.args[0], y, reg))
    if op == "and":
        return m_and(data_condition(t.args[0], y, reg),
                     data_condition(t.args[1], y, reg))
    if op == "or":
        return m_or(data_condition(t.args[0], y, reg),
                    data_condition(t.args[1], y, reg))
    raise InvalidStatement(f"{op} is not a datatype term")


def _filler_condition(role: Term, filler: Term, y: SortedVariable,
                      reg: VarRegistry) -> Matrix:
    if K.kind_of(role) == "crole":
        return data_condition(filler, y, reg)
    return concept_condition(filler, y, reg)


# ---------------------------------------------------------------------------
# statement translation
# ---------------------------------------------------------------------------


def _temp(i: int | None = None) -> SortedVariable:
    name = "z" if i is None else f"z{i}"
    return SortedVariable(0, name, bound=True)


class _Emitter:
    def __init__(self, reg: VarRegistry, max_cardinality: int):
        self.reg = reg
        self.max_cardinality = max_cardinality
        self.literals: list[Literal] = []
        self.universals: list[UniversalFormula] = []

    def ground(self, m: Matrix, fallback: SortedVariable) -> None:
        """File a quantifier-free result: literal, vacuity, or residue formula."""
        if m is TRUE:
            return
        if m is FALSE:
            self.literals.append(Literal(equality(fallback, fallback), False))
            return
        if isinstance(m, Atom):
            self.literals.append(Literal(m, True))
            return
        if isinstance(m, Not) and isinstance(m.arg, Atom):
            self.literals.append(Literal(m.arg, False))
            return
        self.universals.append(UniversalFormula((), m))

    def universal(self, prefix: tuple[SortedVariable, ...], m: Matrix) -> None:
        if m is TRUE:
            return
        if m is FALSE:
            # an always-false matrix is recorded as a reflexive disequality
            m = Not(equality(prefix[0], prefix[0]))
        used = set(matrix_variables(m))
        kept = tuple(v for v in prefix if v in used)
        self.universals.append(UniversalFormula(kept, m))

    def check_cardinality(self, n: int) -> None:
        if n > self.max_cardinality:
            raise ResourceLimit("cardinality bound", self.max_cardinality, n)


def _inclusion_matrix(em: _Emitter, left: Term, right: Term
                      ) -> tuple[tuple[SortedVariable, ...], Matrix]:
    """Prefix and matrix for an inclusion whose sides may carry a restriction."""
    reg = em.reg
    if left.op in ("exists", "min_card"):
        role, filler = left.args
        if left.op == "exists":
            z1, z2 = _temp(1), _temp(2)
            body = m_and(role_condition(role, z1, z2, reg),
                         _filler_condition(role, filler, z2, reg))
            head = concept_condition(right, z1, reg)
            return (z1, z2), m_implies(body, head)
        em.check_cardinality(left.n)
        z = _temp()
        zs = [_temp(i) for i in range(1, left.n + 1)]
        parts = [role_condition(role, z, zi, reg) for zi in zs]
        parts += [_filler_condition(role, filler, zi, reg) for zi in zs]
        parts += [m_not(equality(zs[i], zs[j]))
                  for i in range(len(zs)) for j in range(i + 1, len(zs))]
        return (z, *zs), m_implies(m_and_all(parts), concept_condition(right, z, reg))
    if right.op in ("forall", "max_card"):
        role, filler = right.args
        if right.op == "forall":
            z1, z2 = _temp(1), _temp(2)
            body = m_and(concept_condition(left, z1, reg),
                         role_condition(role, z1, z2, reg))
            return (z1, z2), m_implies(body, _filler_condition(role, filler, z2, reg))
        em.check_cardinality(right.n)
        z = _temp()
        zs = [_temp(i) for i in range(1, right.n + 2)]
        parts = [concept_condition(left, z, reg)]
        parts += [role_condition(role, z, zi, reg) for zi in zs]
        parts += [_filler_condition(role, filler, zi, reg) for zi in zs]
        merged = m_or_all([equality(zs[i], zs[j])
                           for i in range(len(zs)) for j in range(i + 1, len(zs))])
        return (z, *zs), m_implies(m_and_all(parts), merged)
    z = _temp()
    return (z,), m_implies(concept_condition(left, z, reg),
                           concept_condition(right, z, reg))


def translate_statement(stmt: K.Statement, em: _Emitter) -> None:
    reg = em.reg
    if isinstance(stmt, K.InstanceOf):
        x = reg.variable("individual", stmt.individual)
        em.ground(concept_condition(stmt.concept, x, reg), x)
    elif isinstance(stmt, K.RelatedVia):
        x = reg.variable("individual", stmt.subject)
        y = reg.variable("individual", stmt.target)
        em.ground(role_condition(stmt.role, x, y, reg), x)
    elif isinstance(stmt, K.SameAs):
        x = reg.variable("individual", stmt.left)
        y = reg.variable("individual", stmt.right)
        em.literals.append(Literal(equality(x, y), True))
    elif isinstance(stmt, K.DifferentFrom):
        x = reg.variable("individual", stmt.left)
        y = reg.variable("individual", stmt.right)
        em.literals.append(Literal(equality(x, y), False))
    elif isinstance(stmt, K.ConstantInstanceOf):
        x = reg.variable("constant", stmt.constant.lexeme)
        em.ground(data_condition(stmt.data_term, x, reg), x)
    elif isinstance(stmt, K.HasDataValue):
        x = reg.variable("individual", stmt.subject)
        y = reg.variable("constant", stmt.value.lexeme)
        em.ground(role_condition(stmt.role, x, y, reg), x)
    elif isinstance(stmt, K.ConceptSub):
        prefix, matrix = _inclusion_matrix(em, stmt.left, stmt.right)
        em.universal(prefix, matrix)
    elif isinstance(stmt, K.ConceptEquiv):
        z = _temp()
        em.universal((z,), m_iff(concept_condition(stmt.left, z, reg),
                                 concept_condition(stmt.right, z, reg)))
    elif isinstance(stmt, K.DataSub):
        z = _temp()
        em.universal((z,), m_implies(data_condition(stmt.left, z, reg),
                                     data_condition(stmt.right, z, reg)))
    elif isinstance(stmt, K.DataEquiv):
        z = _temp()
        em.universal((z,), m_iff(data_condition(stmt.left, z, reg),
                                 data_condition(stmt.right, z, reg)))
    elif isinstance(stmt, K.RoleSub):
        z1, z2 = _temp(1), _temp(2)
        em.universal((z1, z2), m_implies(role_condition(stmt.left, z1, z2, reg),
                                         role_condition(stmt.right, z1, z2, reg)))
    elif isinstance(stmt, K.RoleEquiv):
        z1, z2 = _temp(1), _temp(2)
        em.universal((z1, z2), m_iff(role_condition(stmt.left, z1, z2, reg),
                                     role_condition(stmt.right, z1, z2, reg)))
    elif isinstance(stmt, K.RoleChain):
        zs = [_temp(i) for i in range(len(stmt.chain) + 1)]
        links = [role_condition(r, zs[i], zs[i + 1], reg)
                 for i, r in enumerate(stmt.chain)]
        em.universal(tuple(zs), m_implies(m_and_all(links),
                                          role_condition(stmt.super_role,
                                                         zs[0], zs[-1], reg)))
    elif isinstance(stmt, K.RoleTrait):
        _translate_trait(stmt, em)
    elif isinstance(stmt, K.RoleDisjoint):
        z1, z2 = _temp(1), _temp(2)
        em.universal((z1, z2),
                     m_not(m_and(role_condition(stmt.left, z1, z2, reg),
                                 role_condition(stmt.right, z1, z2, reg))))
    else:
        raise InvalidStatement(f"untranslatable statement {type(stmt).__name__}")


def _translate_trait(stmt: K.RoleTrait, em: _Emitter) -> None:
    reg = em.reg
    r = stmt.role
    if stmt.trait == "sym":
        z1, z2 = _temp(1), _temp(2)
        em.universal((z1, z2), m_implies(role_condition(r, z1, z2, reg),
                                         role_condition(r, z2, z1, reg)))
    elif stmt.trait == "asym":
        z1, z2 = _temp(1), _temp(2)
        em.universal((z1, z2), m_implies(role_condition(r, z1, z2, reg),
                                         m_not(role_condition(r, z2, z1, reg))))
    elif stmt.trait == "ref":
        z = _temp()
        em.universal((z,), role_condition(r, z, z, reg))
    elif stmt.trait == "irref":
        z = _temp()
        em.universal((z,), m_not(role_condition(r, z, z, reg)))
    elif stmt.trait == "tra":
        z1, z2, z3 = _temp(1), _temp(2), _temp(3)
        em.universal((z1, z2, z3),
                     m_implies(m_and(role_condition(r, z1, z2, reg),
                                     role_condition(r, z2, z3, reg)),
                               role_condition(r, z1, z3, reg)))
    elif stmt.trait == "fun":
        z, z1, z2 = _temp(), _temp(1), _temp(2)
        em.universal((z, z1, z2),
                     m_implies(m_and(role_condition(r, z, z1, reg),
                                     role_condition(r, z, z2, reg)),
                               equality(z1, z2)))


def translate_kb(kb: KnowledgeBase, max_cardinality: int = 8) -> TranslationOutput:
    """Translate every statement, then append the datatype structure facts."""
    reg = VarRegistry()
    em = _Emitter(reg, max_cardinality)
    for stmt in kb.statements():
        translate_statement(stmt, em)
    for d in kb.dmap.datatypes:
        dv = reg.variable("datatype", d)
        for c in kb.dmap.constants_by_type[d]:
            em.literals.append(Literal(member(reg.variable("constant", c.lexeme), dv)))
    allc = kb.dmap.all_constants()
    for i in range(len(allc)):
        for j in range(i + 1, len(allc)):
            if allc[i].datatype != allc[j].datatype:
                em.literals.append(Literal(
                    equality(reg.variable("constant", allc[i].lexeme),
                             reg.variable("constant", allc[j].lexeme)), False))
    for ind in reg.of_category("individual"):
        for c in allc:
            em.literals.append(Literal(
                equality(ind, reg.variable("constant", c.lexeme)), False))
    return TranslationOutput(em.literals, em.universals, reg)
