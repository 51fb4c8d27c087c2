"""Abstract syntax for the sorted set-theoretic fragment the reasoner runs on.

Variables carry a sort (0 = domain elements, 1 = sets of elements, 2 = sets
of sets, 3 = sets of ordered pairs) and a free/bound marker.  Atoms come in
three shapes: equality between two sort-0 variables, membership of a sort-0
variable in a sort-1 variable, and membership of an ordered pair of sort-0
variables in a sort-3 variable.  Quantified statements are purely universal:
a prefix of distinct bound sort-0 variables over a propositional matrix.

Matrices are trees whose leaves are atoms (or the two truth constants while
a formula is under construction) and whose interior nodes are Not, And, Or.
Implication and biconditional are provided as constructor functions that
expand on the spot, mirroring how the translation layer writes them out.
"""

from __future__ import annotations

from dataclasses import dataclass, field

# ---------------------------------------------------------------------------
# variables
# ---------------------------------------------------------------------------

SORT_ELEMENT = 0
SORT_SET = 1
SORT_COLLECTION = 2
SORT_RELATION = 3

_FORBIDDEN_NAME_CHARS = ("$", "{", "}")


@dataclass(frozen=True)
class SortedVariable:
    """A variable of one of the four sorts; bound marks quantified use."""

    sort: int
    name: str
    bound: bool = False

    def __post_init__(self):
        if self.sort not in (0, 1, 2, 3):
            raise ValueError(f"variable sort must be 0..3, got {self.sort}")
        if not self.name:
            raise ValueError("variable name must be non-empty")
        for ch in _FORBIDDEN_NAME_CHARS:
            if ch in self.name:
                raise ValueError(f"variable name may not contain {ch!r}")
        if self.bound and self.sort != 0:
            raise ValueError("only sort-0 variables can be bound")


# ---------------------------------------------------------------------------
# atoms and literals
# ---------------------------------------------------------------------------

MEMBERSHIP = "in"
EQUALITY = "eq"


@dataclass(frozen=True)
class Atom:
    """x = y, x in X1, or <x, y> in X3; the pair case stores a 2-tuple."""

    rel: str
    left: SortedVariable | tuple[SortedVariable, SortedVariable]
    right: SortedVariable

    def __post_init__(self):
        if self.rel == EQUALITY:
            if not isinstance(self.left, SortedVariable) or self.left.sort != 0:
                raise ValueError("equality left argument must be a sort-0 variable")
            if self.right.sort != 0:
                raise ValueError("equality right argument must be a sort-0 variable")
        elif self.rel == MEMBERSHIP:
            if isinstance(self.left, SortedVariable):
                if self.left.sort != 0:
                    raise ValueError("membership left argument must be sort 0")
                if self.right.sort != 1:
                    raise ValueError("single membership requires a sort-1 right side")
            else:
                pair = self.left
                if len(pair) != 2 or any(v.sort != 0 for v in pair):
                    raise ValueError("pair membership requires two sort-0 variables")
                object.__setattr__(self, "left", tuple(pair))
                if self.right.sort != 3:
                    raise ValueError("pair membership requires a sort-3 right side")
        else:
            raise ValueError(f"unknown relator {self.rel!r}")

    @property
    def is_pair(self) -> bool:
        return not isinstance(self.left, SortedVariable)

    def variables(self) -> tuple[SortedVariable, ...]:
        if self.is_pair:
            return (*self.left, self.right)
        return (self.left, self.right)


def equality(x: SortedVariable, y: SortedVariable) -> Atom:
    return Atom(EQUALITY, x, y)


def member(x: SortedVariable, s: SortedVariable) -> Atom:
    return Atom(MEMBERSHIP, x, s)


def pair_member(x: SortedVariable, y: SortedVariable, r: SortedVariable) -> Atom:
    return Atom(MEMBERSHIP, (x, y), r)


@dataclass(frozen=True)
class Literal:
    atom: Atom
    positive: bool = True

    def variables(self) -> tuple[SortedVariable, ...]:
        return self.atom.variables()


def complement(lit: Literal) -> Literal:
    """The same atom with flipped polarity."""
    return Literal(lit.atom, not lit.positive)


def is_reflexive_equality(lit: Literal) -> bool:
    return lit.positive and lit.atom.rel == EQUALITY and lit.atom.left == lit.atom.right


def is_reflexive_disequality(lit: Literal) -> bool:
    return (not lit.positive) and lit.atom.rel == EQUALITY and lit.atom.left == lit.atom.right


# ---------------------------------------------------------------------------
# clauses
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Clause:
    """An ordered disjunction of literals; order is meaningful downstream."""

    disjuncts: tuple[Literal, ...]

    def __post_init__(self):
        if not self.disjuncts:
            raise ValueError("clause must have at least one disjunct")

    def __len__(self) -> int:
        return len(self.disjuncts)

    def __iter__(self):
        return iter(self.disjuncts)


class _Verdict:
    """Singleton markers returned by simplify_clause."""

    __slots__ = ("label",)

    def __init__(self, label: str):
        self.label = label

    def __repr__(self) -> str:
        return f"<{self.label}>"


TAUTOLOGY = _Verdict("tautology")
UNSATISFIABLE = _Verdict("unsatisfiable")


def simplify_clause(c: Clause) -> Clause | _Verdict:
    """Semantic cleanup of a single clause.

    Returns TAUTOLOGY when some literal appears with both polarities or a
    reflexive equality x = x occurs, UNSATISFIABLE when after duplicate
    removal only reflexive disequalities remain, otherwise the duplicate-free
    clause with the original relative order.
    """
    present = set(c.disjuncts)
    for lit in c.disjuncts:
        if is_reflexive_equality(lit):
            return TAUTOLOGY
        if complement(lit) in present:
            return TAUTOLOGY
    kept: list[Literal] = []
    seen: set[Literal] = set()
    for lit in c.disjuncts:
        if lit not in seen:
            seen.add(lit)
            kept.append(lit)
    if all(is_reflexive_disequality(lit) for lit in kept):
        return UNSATISFIABLE
    return Clause(tuple(kept))


def dedup_literals(c: Clause) -> tuple[Literal, ...]:
    """Duplicate removal only, preserving first occurrences."""
    seen: set[Literal] = set()
    out: list[Literal] = []
    for lit in c.disjuncts:
        if lit not in seen:
            seen.add(lit)
            out.append(lit)
    return tuple(out)


# ---------------------------------------------------------------------------
# matrices and universally quantified formulae
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Truth:
    value: bool


TRUE = Truth(True)
FALSE = Truth(False)


@dataclass(frozen=True)
class Not:
    arg: "Matrix"


@dataclass(frozen=True)
class And:
    left: "Matrix"
    right: "Matrix"


@dataclass(frozen=True)
class Or:
    left: "Matrix"
    right: "Matrix"


Matrix = Atom | Truth | Not | And | Or


def m_not(a: Matrix) -> Matrix:
    """Negation; folds truth constants and double negation, nothing else."""
    if a is TRUE:
        return FALSE
    if a is FALSE:
        return TRUE
    if isinstance(a, Not):
        return a.arg
    return Not(a)


def m_and(a: Matrix, b: Matrix) -> Matrix:
    if a is FALSE or b is FALSE:
        return FALSE
    if a is TRUE:
        return b
    if b is TRUE:
        return a
    return And(a, b)


def m_or(a: Matrix, b: Matrix) -> Matrix:
    if a is TRUE or b is TRUE:
        return TRUE
    if a is FALSE:
        return b
    if b is FALSE:
        return a
    return Or(a, b)


def m_implies(a: Matrix, b: Matrix) -> Matrix:
    """Implication, written out immediately as a disjunction."""
    return m_or(m_not(a), b)


def m_iff(a: Matrix, b: Matrix) -> Matrix:
    """Biconditional as the conjunction of the two implications."""
    return m_and(m_implies(a, b), m_implies(b, a))


def m_and_all(parts: list[Matrix]) -> Matrix:
    out: Matrix = TRUE
    for p in parts:
        out = m_and(out, p)
    return out


def m_or_all(parts: list[Matrix]) -> Matrix:
    out: Matrix = FALSE
    for p in parts:
        out = m_or(out, p)
    return out


def matrix_atoms(m: Matrix) -> list[Atom]:
    """All atom occurrences, left to right."""
    if isinstance(m, Atom):
        return [m]
    if isinstance(m, Truth):
        return []
    if isinstance(m, Not):
        return matrix_atoms(m.arg)
    return matrix_atoms(m.left) + matrix_atoms(m.right)


def matrix_variables(m: Matrix) -> list[SortedVariable]:
    out: list[SortedVariable] = []
    for atom in matrix_atoms(m):
        out.extend(atom.variables())
    return out


@dataclass(frozen=True)
class UniversalFormula:
    """A block of universal quantifiers over sort-0 variables and a matrix.

    The prefix may be empty, which makes the formula a plain ground matrix.
    Prefix variables must be pairwise distinct, sort 0, and bound-marked.
    """

    prefix: tuple[SortedVariable, ...]
    matrix: Matrix

    def __post_init__(self):
        names = set()
        for v in self.prefix:
            if v.sort != 0 or not v.bound:
                raise ValueError("prefix variables must be bound sort-0 variables")
            if v.name in names:
                raise ValueError(f"duplicate prefix variable {v.name!r}")
            names.add(v.name)

    def free_variables(self) -> list[SortedVariable]:
        bound = set(self.prefix)
        out = []
        for v in matrix_variables(self.matrix):
            if v not in bound:
                out.append(v)
        return out


def substitute_atom(atom: Atom, mapping: dict[SortedVariable, SortedVariable]) -> Atom:
    if atom.is_pair:
        a, b = atom.left
        return Atom(atom.rel, (mapping.get(a, a), mapping.get(b, b)),
                    mapping.get(atom.right, atom.right))
    return Atom(atom.rel, mapping.get(atom.left, atom.left),
                mapping.get(atom.right, atom.right))


def substitute_literal(lit: Literal, mapping: dict[SortedVariable, SortedVariable]) -> Literal:
    return Literal(substitute_atom(lit.atom, mapping), lit.positive)
