"""Normalization and grounding: CNF, miniscoping, renaming, instantiation.

The output is the reasoner's working set: a list of ground clauses obtained
by instantiating each normalized universal over the sort-0 free variables
(the individuals and datatype constants), in a fixed documented order:
formula-major, with instantiation tuples enumerated lexicographically in
registry order, followed by the ground literals as unit clauses.  Clause
order matters downstream because branch and split-literal selection in the
tableau are order-driven.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import ResourceLimit
from .formulas import (
    And,
    Atom,
    Clause,
    Literal,
    Matrix,
    Not,
    Or,
    SortedVariable,
    TAUTOLOGY,
    Truth,
    UNSATISFIABLE,
    UniversalFormula,
    complement,
    dedup_literals,
    equality,
    is_reflexive_disequality,
    m_and_all,
    m_or_all,
    simplify_clause,
    substitute_literal,
)
from .translate import TranslationOutput, VarRegistry

DEFAULT_INSTANCE_CAP = 10 ** 6

# ---------------------------------------------------------------------------
# CNF by direct distribution
# ---------------------------------------------------------------------------


def _nnf(m: Matrix, positive: bool) -> Matrix:
    """Negation normal form with literals as Atom / Not(Atom) leaves."""
    if isinstance(m, Truth):
        return m if positive else (Truth(not m.value))
    if isinstance(m, Atom):
        return m if positive else Not(m)
    if isinstance(m, Not):
        return _nnf(m.arg, not positive)
    if isinstance(m, And):
        left = _nnf(m.left, positive)
        right = _nnf(m.right, positive)
        return And(left, right) if positive else Or(left, right)
    assert isinstance(m, Or)
    left = _nnf(m.left, positive)
    right = _nnf(m.right, positive)
    return Or(left, right) if positive else And(left, right)


def _cnf_clauses(m: Matrix) -> list[tuple[Literal, ...]] | None:
    """Clause lists for an NNF matrix; None encodes the constant true,
    an empty clause encodes the constant false."""
    if isinstance(m, Truth):
        return None if m.value else [()]
    if isinstance(m, Atom):
        return [(Literal(m, True),)]
    if isinstance(m, Not):
        assert isinstance(m.arg, Atom)
        return [(Literal(m.arg, False),)]
    if isinstance(m, And):
        left = _cnf_clauses(m.left)
        right = _cnf_clauses(m.right)
        if left is None:
            return right
        if right is None:
            return left
        return left + right
    assert isinstance(m, Or)
    left = _cnf_clauses(m.left)
    right = _cnf_clauses(m.right)
    if left is None or right is None:
        return None
    out: list[tuple[Literal, ...]] = []
    for lc in left:
        for rc in right:
            out.append(lc + rc)
    return out


def matrix_clauses(m: Matrix) -> list[tuple[Literal, ...]] | None:
    return _cnf_clauses(_nnf(m, True))


def _clause_matrix(lits: tuple[Literal, ...]) -> Matrix:
    parts: list[Matrix] = [lit.atom if lit.positive else Not(lit.atom) for lit in lits]
    return m_or_all(parts)


def to_cnf(f: UniversalFormula) -> UniversalFormula:
    """Equivalent formula whose matrix is a conjunction of disjunctions.

    Distribution is direct (no auxiliary atoms); matrices come from single
    statements and stay small enough for that.
    """
    clauses = matrix_clauses(f.matrix)
    if clauses is None:
        matrix: Matrix = Truth(True)
    elif any(len(c) == 0 for c in clauses):
        matrix = Truth(False)
    else:
        matrix = m_and_all([_clause_matrix(c) for c in clauses])
    return UniversalFormula(f.prefix, matrix)


# ---------------------------------------------------------------------------
# miniscoping and renaming
# ---------------------------------------------------------------------------


def _split_conjuncts(m: Matrix) -> list[Matrix]:
    if isinstance(m, And):
        return _split_conjuncts(m.left) + _split_conjuncts(m.right)
    return [m]


def _matrix_vars(m: Matrix) -> set[SortedVariable]:
    out: set[SortedVariable] = set()
    if isinstance(m, Atom):
        out.update(m.variables())
    elif isinstance(m, Not):
        out.update(_matrix_vars(m.arg))
    elif isinstance(m, (And, Or)):
        out.update(_matrix_vars(m.left))
        out.update(_matrix_vars(m.right))
    return out


def _substitute_matrix(m: Matrix, mapping: dict[SortedVariable, SortedVariable]) -> Matrix:
    if isinstance(m, Truth):
        return m
    if isinstance(m, Atom):
        lit = substitute_literal(Literal(m, True), mapping)
        return lit.atom
    if isinstance(m, Not):
        return Not(_substitute_matrix(m.arg, mapping))
    if isinstance(m, And):
        return And(_substitute_matrix(m.left, mapping),
                   _substitute_matrix(m.right, mapping))
    assert isinstance(m, Or)
    return Or(_substitute_matrix(m.left, mapping),
              _substitute_matrix(m.right, mapping))


def miniscope_and_rename(f: UniversalFormula, reg: VarRegistry) -> list[UniversalFormula]:
    """Split a CNF universal into one formula per conjunct.

    Each output keeps only the prefix variables its conjunct mentions, and
    those are renamed to globally fresh names drawn from the registry, so
    formulas never share a bound variable afterwards.
    """
    out: list[UniversalFormula] = []
    for conjunct in _split_conjuncts(f.matrix):
        used = _matrix_vars(conjunct)
        kept = [v for v in f.prefix if v in used]
        mapping = {v: reg.fresh_bound() for v in kept}
        out.append(UniversalFormula(tuple(mapping[v] for v in kept),
                                    _substitute_matrix(conjunct, mapping)))
    return out


# ---------------------------------------------------------------------------
# grounding
# ---------------------------------------------------------------------------


@dataclass
class ExpandedKB:
    clauses: tuple[Clause, ...]
    domain: tuple[SortedVariable, ...]
    registry: VarRegistry
    normalized: tuple[UniversalFormula, ...] = ()

    def unit_literals(self) -> list[Literal]:
        return [c.disjuncts[0] for c in self.clauses if len(c) == 1]


def expand_kb(t: TranslationOutput,
              max_instances: int = DEFAULT_INSTANCE_CAP) -> ExpandedKB:
    """Ground the normalized universals over the sort-0 free variables.

    The domain is the registry's sort-0 free variables in first-seen order;
    when there are none a fresh witness individual is created, since the
    element domain is never empty.  Tautological instances are dropped;
    ground literals follow as unit clauses in their original order.
    """
    reg = t.registry
    normalized: list[UniversalFormula] = []
    for f in t.universals:
        normalized.extend(miniscope_and_rename(to_cnf(f), reg))

    if not reg.free[0]:
        reg.variable("individual", "w0")
    domain = tuple(reg.free[0])

    total = 0
    for f in normalized:
        count = len(domain) ** len(f.prefix)
        total += count
        if total > max_instances:
            raise ResourceLimit("ground instances", max_instances, total)

    clauses: list[Clause] = []
    for f in normalized:
        lits = _formula_literals(f)
        if lits is None:
            continue
        if not lits:
            # an always-false formula grounds to one reflexive disequality
            clauses.append(Clause((Literal(equality(domain[0], domain[0]), False),)))
            continue
        for tup in product(domain, repeat=len(f.prefix)):
            mapping = dict(zip(f.prefix, tup))
            ground = Clause(tuple(substitute_literal(l, mapping) for l in lits))
            _push_simplified(clauses, ground)
    for lit in t.ground_literals:
        _push_simplified(clauses, Clause((lit,)))
    return ExpandedKB(tuple(clauses), domain, reg, tuple(normalized))


def _formula_literals(f: UniversalFormula) -> tuple[Literal, ...] | None:
    """The literal list of a single-clause matrix; None for a true matrix."""
    if isinstance(f.matrix, Truth):
        return None if f.matrix.value else ()
    if isinstance(f.matrix, Atom):
        return (Literal(f.matrix, True),)
    leaves = _or_leaves(f.matrix)
    return tuple(leaves)


def _or_leaves(m: Matrix) -> list[Literal]:
    if isinstance(m, Or):
        return _or_leaves(m.left) + _or_leaves(m.right)
    if isinstance(m, Atom):
        return [Literal(m, True)]
    assert isinstance(m, Not) and isinstance(m.arg, Atom)
    return [Literal(m.arg, False)]


def _push_simplified(clauses: list[Clause], c: Clause) -> None:
    s = simplify_clause(c)
    if s is TAUTOLOGY:
        return
    if s is UNSATISFIABLE:
        # keep the clause; the tableau closes on its reflexive disequalities
        clauses.append(Clause(dedup_literals(c)))
        return
    clauses.append(s)


# ---------------------------------------------------------------------------
# pre-tableau clash check
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Clash:
    kind: str  # "complementary" or "reflexive"
    literal: Literal
    other: Literal | None = None


@dataclass
class ClashReport:
    clashes: list[Clash]

    def __bool__(self) -> bool:
        return bool(self.clashes)


def check_node_clash(e: ExpandedKB) -> ClashReport:
    """Atomic clashes among the unit clauses: complementary pairs and
    reflexive disequalities."""
    clashes: list[Clash] = []
    seen: set[Literal] = set()
    for lit in e.unit_literals():
        if is_reflexive_disequality(lit):
            clashes.append(Clash("reflexive", lit))
        comp = complement(lit)
        if comp in seen:
            clashes.append(Clash("complementary", lit, comp))
        seen.add(lit)
    return ClashReport(clashes)
