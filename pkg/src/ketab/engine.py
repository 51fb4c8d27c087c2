"""Tableau decision core.

Saturation works on one branch at a time (the most recently created first)
and on each branch prefers the linear expansion rule wherever it applies:
the worklist of clauses is scanned top-down for a clause with at most one
disjunct still undecided, and only when no such clause exists does the
branch split.  The split literal is the complement of the lowest-index
undecided disjunct of the first unfulfilled clause, and the child asserting
that complement sits on the left, so traces and branch order are fully
deterministic.

After saturation every open branch gets a partition of the sort-0 variables
from its positive equality literals (union by rank, representative = the
registry-least member), and the branch is re-checked for clashes under the
induced substitution; a disequality between merged variables surfaces as a
reflexive disequality.  Surviving branches each yield one minimal model.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .errors import KetabError, PreconditionViolated, ResourceLimit
from .expand import ClashReport, ExpandedKB, check_node_clash, expand_kb
from .formulas import (
    Clause,
    EQUALITY,
    Literal,
    MEMBERSHIP,
    SortedVariable,
    complement,
    is_reflexive_disequality,
    substitute_literal,
)
from .kb import KnowledgeBase, Violation, validate_fragment
from .translate import TranslationOutput, VarRegistry, translate_kb

# ---------------------------------------------------------------------------
# tree structure
# ---------------------------------------------------------------------------


@dataclass
class Node:
    formulas: list[Clause | Literal]
    rule: str  # "root", "e-rule", "pb-rule"
    parent: "Node | None" = None
    left_child: "Node | None" = None
    right_child: "Node | None" = None
    note: str = ""  # leaf annotation filled when its branch finishes


@dataclass(frozen=True)
class ClosureWitness:
    kind: str  # "complementary" or "reflexive"
    literal: Literal
    other: Literal | None = None
    after_subst: bool = False


class Branch:
    """One root-to-leaf path with its literal set and clause bookkeeping."""

    def __init__(self, branch_id: int, leaf: Node, clause_count: int):
        self.id = branch_id
        self.leaf = leaf
        self.literals: list[Literal] = []
        self.literal_set: set[Literal] = set()
        self.work: list[int] = list(range(clause_count))
        self.fulfilled: set[int] = set()
        self.status = "open"
        self.witness: ClosureWitness | None = None

    def add_literal(self, lit: Literal) -> None:
        """Insert with an immediate closure check; duplicates are no-ops."""
        if lit in self.literal_set:
            return
        self.literals.append(lit)
        self.literal_set.add(lit)
        if is_reflexive_disequality(lit):
            self._close(ClosureWitness("reflexive", lit))
        elif complement(lit) in self.literal_set:
            self._close(ClosureWitness("complementary", lit, complement(lit)))

    def _close(self, witness: ClosureWitness) -> None:
        if self.status == "open":
            self.status = "closed"
            self.witness = witness

    def clone(self, branch_id: int) -> "Branch":
        c = Branch.__new__(Branch)
        c.id = branch_id
        c.leaf = self.leaf
        c.literals = list(self.literals)
        c.literal_set = set(self.literal_set)
        c.work = list(self.work)
        c.fulfilled = set(self.fulfilled)
        c.status = self.status
        c.witness = self.witness
        return c


@dataclass(frozen=True)
class TraceEvent:
    rule: str  # "e-rule", "pb-rule", "close"
    branch_id: int
    clause_index: int
    literal: Literal | None
    branch_literals: tuple[Literal, ...]


@dataclass
class Tableau:
    root: Node
    clauses: tuple[Clause, ...]
    open_branches: list[Branch] = field(default_factory=list)
    closed_branches: list[Branch] = field(default_factory=list)
    eq_partitions: list["EquivPartition"] = field(default_factory=list)
    trace: list[TraceEvent] = field(default_factory=list)
    e_rule_count: int = 0
    pb_rule_count: int = 0

    @property
    def branch_count(self) -> int:
        return len(self.open_branches) + len(self.closed_branches)


# ---------------------------------------------------------------------------
# expansion rules
# ---------------------------------------------------------------------------


def apply_e_rule(branch: Branch, clause: Clause, i: int) -> Branch:
    """Extend the branch with disjunct i, licensed by the complements of all
    other disjuncts being on the branch already."""
    lits = clause.disjuncts
    if not 0 <= i < len(lits):
        raise PreconditionViolated(f"disjunct index {i} out of range")
    if lits[i] in branch.literal_set:
        raise PreconditionViolated("selected disjunct already on the branch")
    for j, lit in enumerate(lits):
        if j != i and complement(lit) not in branch.literal_set:
            raise PreconditionViolated(f"complement of disjunct {j} missing")
    node = Node([lits[i]], "e-rule", parent=branch.leaf)
    branch.leaf.left_child = node
    branch.leaf = node
    branch.add_literal(lits[i])
    return branch


def apply_pb_rule(branch: Branch, literal: Literal,
                  right_id: int | None = None) -> tuple[Branch, Branch]:
    """Split the branch on literal vs its complement.

    Returns (left, right); left is the input branch extended with literal,
    right is a copy extended with the complement.
    """
    if literal in branch.literal_set or complement(literal) in branch.literal_set:
        raise PreconditionViolated("split literal already decided on the branch")
    parent = branch.leaf
    left_node = Node([literal], "pb-rule", parent=parent)
    right_node = Node([complement(literal)], "pb-rule", parent=parent)
    parent.left_child = left_node
    parent.right_child = right_node
    right = branch.clone(branch.id + 1 if right_id is None else right_id)
    right.leaf = right_node
    right.add_literal(complement(literal))
    branch.leaf = left_node
    branch.add_literal(literal)
    return branch, right


# ---------------------------------------------------------------------------
# saturation
# ---------------------------------------------------------------------------


def _live_disjuncts(branch: Branch, clause: Clause) -> list[int]:
    """Indices of disjuncts whose complement is not on the branch."""
    return [i for i, lit in enumerate(clause.disjuncts)
            if complement(lit) not in branch.literal_set]


def saturate(e: ExpandedKB) -> Tableau:
    """Run the expansion phase to a complete tableau.

    Every returned branch is either closed or open with all clauses
    fulfilled.  Equality processing happens afterwards (complete_tableau).
    """
    clauses = e.clauses
    root = Node(list(clauses), "root")
    tab = Tableau(root, clauses)
    next_id = 1

    first = Branch(0, root, len(clauses))
    for idx, c in enumerate(clauses):
        if len(c) == 1:
            first.add_literal(c.disjuncts[0])
            if first.status == "closed":
                tab.trace.append(TraceEvent("close", first.id, idx, c.disjuncts[0],
                                            tuple(first.literals)))
                break

    stack = [first]
    while stack:
        b = stack[-1]
        if b.status == "closed":
            stack.pop()
            b.leaf.note = "closed"
            tab.closed_branches.append(b)
            continue
        while b.work and _is_fulfilled(b, clauses[b.work[-1]]):
            b.fulfilled.add(b.work.pop())
        if not b.work:
            stack.pop()
            b.leaf.note = "open"
            tab.open_branches.append(b)
            continue

        # prefer any clause admitting the linear rule, searched newest-first
        target: tuple[int, list[int]] | None = None
        for idx in reversed(b.work):
            c = clauses[idx]
            if _is_fulfilled(b, c):
                continue
            live = _live_disjuncts(b, c)
            if len(live) <= 1:
                target = (idx, live)
                break

        if target is not None:
            idx, live = target
            i = live[0] if live else 0
            lit = clauses[idx].disjuncts[i]
            apply_e_rule(b, clauses[idx], i)
            tab.e_rule_count += 1
            tab.trace.append(TraceEvent("e-rule", b.id, idx, lit, tuple(b.literals)))
            if b.status == "closed":
                tab.trace.append(TraceEvent("close", b.id, idx, lit,
                                            tuple(b.literals)))
            continue

        idx = b.work[-1]
        live = _live_disjuncts(b, clauses[idx])
        split = complement(clauses[idx].disjuncts[live[0]])
        snapshot = tuple(b.literals)
        left, right = apply_pb_rule(b, split, right_id=next_id)
        next_id += 1
        tab.pb_rule_count += 1
        tab.trace.append(TraceEvent("pb-rule", left.id, idx, split, snapshot))
        stack.pop()
        stack.append(right)
        stack.append(left)
    return tab


def _is_fulfilled(branch: Branch, clause: Clause) -> bool:
    return any(lit in branch.literal_set for lit in clause.disjuncts)


# ---------------------------------------------------------------------------
# equality processing
# ---------------------------------------------------------------------------


@dataclass
class EquivPartition:
    """Partition of the sort-0 variables with registry-least representatives."""

    classes: tuple[tuple[SortedVariable, ...], ...]
    subst: dict[SortedVariable, SortedVariable]

    def rep(self, v: SortedVariable) -> SortedVariable:
        return self.subst.get(v, v)

    def apply(self, lit: Literal) -> Literal:
        return substitute_literal(lit, self.subst)

    def nontrivial_classes(self) -> list[tuple[SortedVariable, ...]]:
        return [c for c in self.classes if len(c) > 1]


def compute_equivalences(branch: Branch,
                         order: tuple[SortedVariable, ...]) -> EquivPartition:
    """Union the endpoints of every positive equality literal on the branch."""
    rank: dict[SortedVariable, int] = {v: i for i, v in enumerate(order)}
    parent: dict[SortedVariable, SortedVariable] = {v: v for v in order}

    def note(v: SortedVariable) -> None:
        if v not in rank:
            rank[v] = len(rank)
            parent[v] = v

    def find(v: SortedVariable) -> SortedVariable:
        while parent[v] is not v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for lit in branch.literals:
        if lit.positive and lit.atom.rel == EQUALITY:
            a, b = lit.atom.left, lit.atom.right
            note(a)
            note(b)
            ra, rb = find(a), find(b)
            if ra is not rb:
                # lower registry rank wins as representative
                if rank[ra] <= rank[rb]:
                    parent[rb] = ra
                else:
                    parent[ra] = rb

    members: dict[SortedVariable, list[SortedVariable]] = {}
    for v in sorted(parent, key=rank.get):
        members.setdefault(find(v), []).append(v)
    classes = tuple(tuple(vs) for vs in members.values())
    subst = {v: root for root, vs in members.items() for v in vs if v is not root}
    return EquivPartition(classes, subst)


def final_clash_check(branch: Branch, p: EquivPartition) -> str:
    """Re-check closure on the substituted branch; returns "open" or "closed"."""
    seen: set[Literal] = set()
    for lit in branch.literals:
        s = p.apply(lit)
        if is_reflexive_disequality(s):
            branch.status = "closed"
            branch.witness = ClosureWitness("reflexive", s, after_subst=True)
            branch.leaf.note = "closed"
            return "closed"
        if complement(s) in seen:
            branch.status = "closed"
            branch.witness = ClosureWitness("complementary", s, complement(s),
                                            after_subst=True)
            branch.leaf.note = "closed"
            return "closed"
        seen.add(s)
    return "open"


def check_expansion(e: ExpandedKB) -> Tableau:
    """Saturate and run the equality phase in one step."""
    tab = saturate(e)
    complete_tableau(tab, e)
    return tab


def complete_tableau(tab: Tableau, e: ExpandedKB) -> None:
    """Equality phase: partition each open branch, re-check, file partitions."""
    survivors: list[Branch] = []
    partitions: list[EquivPartition] = []
    for b in tab.open_branches:
        p = compute_equivalences(b, e.domain)
        if final_clash_check(b, p) == "closed":
            tab.closed_branches.append(b)
        else:
            survivors.append(b)
            partitions.append(p)
    tab.open_branches = survivors
    tab.eq_partitions = partitions


# ---------------------------------------------------------------------------
# model extraction
# ---------------------------------------------------------------------------


@dataclass
class Interpretation:
    """A minimal model read off an open branch: domain elements are the
    equivalence classes, named by their representative."""

    domain: tuple[tuple[str, ...], ...]
    concepts: dict[str, frozenset[str]]
    relations: dict[str, frozenset[tuple[str, str]]]
    rep_name: dict[str, str]

    def evaluate(self, lit: Literal) -> bool:
        atom = lit.atom
        if atom.rel == EQUALITY:
            value = self.rep_name[atom.left.name] == self.rep_name[atom.right.name]
        elif atom.is_pair:
            a, b = atom.left
            pair = (self.rep_name[a.name], self.rep_name[b.name])
            value = pair in self.relations[atom.right.name]
        else:
            value = self.rep_name[atom.left.name] in self.concepts[atom.right.name]
        return value if lit.positive else not value

    def satisfies(self, clause: Clause) -> bool:
        return any(self.evaluate(lit) for lit in clause.disjuncts)


def extract_model(branch: Branch, p: EquivPartition,
                  registry: VarRegistry) -> Interpretation:
    """Interpret positive substituted literals; everything absent is false."""
    rep_name = {}
    for cls in p.classes:
        rep = cls[0].name
        for v in cls:
            rep_name[v.name] = rep
    concepts: dict[str, set[str]] = {v.name: set() for v in registry.free[1]}
    relations: dict[str, set[tuple[str, str]]] = {v.name: set() for v in registry.free[3]}
    for lit in branch.literals:
        s = p.apply(lit)
        if not s.positive or s.atom.rel != MEMBERSHIP:
            continue
        if s.atom.is_pair:
            a, b = s.atom.left
            relations.setdefault(s.atom.right.name, set()).add((a.name, b.name))
        else:
            concepts.setdefault(s.atom.right.name, set()).add(s.atom.left.name)
    return Interpretation(
        tuple(tuple(v.name for v in cls) for cls in p.classes),
        {k: frozenset(v) for k, v in concepts.items()},
        {k: frozenset(v) for k, v in relations.items()},
        rep_name,
    )


# ---------------------------------------------------------------------------
# end-to-end pipeline
# ---------------------------------------------------------------------------


@dataclass
class Verdict:
    status: str  # "consistent", "inconsistent", "error"
    models: tuple[Interpretation, ...] = ()
    eq_partitions: tuple[EquivPartition, ...] = ()
    closed_branch_count: int = 0
    witnesses: tuple[ClosureWitness, ...] = ()
    error: str = ""
    error_kind: str = ""  # "input" or "resource"
    stats: dict = field(default_factory=dict)


@dataclass
class PipelineResult:
    violations: list[Violation] = field(default_factory=list)
    translation: TranslationOutput | None = None
    expanded: ExpandedKB | None = None
    clash_report: ClashReport | None = None
    tableau: Tableau | None = None
    verdict: Verdict | None = None


def run_pipeline(kb: KnowledgeBase, max_instances: int = 10 ** 6,
                 max_cardinality: int = 8) -> PipelineResult:
    """Validate, translate, expand, saturate, and judge one knowledge base."""
    started = time.perf_counter()
    result = PipelineResult()
    result.violations = validate_fragment(kb)
    if result.violations:
        detail = "; ".join(str(v) for v in result.violations)
        result.verdict = Verdict("error", error=detail, error_kind="input")
        return result
    try:
        result.translation = translate_kb(kb, max_cardinality=max_cardinality)
        result.expanded = expand_kb(result.translation, max_instances=max_instances)
    except ResourceLimit as exc:
        result.verdict = Verdict("error", error=str(exc), error_kind="resource")
        return result
    except KetabError as exc:
        result.verdict = Verdict("error", error=str(exc), error_kind="input")
        return result
    e = result.expanded
    result.clash_report = check_node_clash(e)
    tab = saturate(e)
    complete_tableau(tab, e)
    result.tableau = tab
    elapsed_ms = (time.perf_counter() - started) * 1000.0
    stats = {
        "clauses": len(e.clauses),
        "branches": tab.branch_count,
        "eRuleCount": tab.e_rule_count,
        "pbRuleCount": tab.pb_rule_count,
        "elapsedMs": elapsed_ms,
    }
    if tab.open_branches:
        models = tuple(extract_model(b, p, e.registry)
                       for b, p in zip(tab.open_branches, tab.eq_partitions))
        result.verdict = Verdict("consistent", models=models,
                                 eq_partitions=tuple(tab.eq_partitions), stats=stats)
    else:
        witnesses = tuple(b.witness for b in tab.closed_branches
                          if b.witness is not None)
        result.verdict = Verdict("inconsistent",
                                 closed_branch_count=len(tab.closed_branches),
                                 witnesses=witnesses, stats=stats)
    return result


def decide(kb: KnowledgeBase, max_instances: int = 10 ** 6,
           max_cardinality: int = 8) -> Verdict:
    """Consistency verdict for a knowledge base; errors become Error verdicts."""
    verdict = run_pipeline(kb, max_instances, max_cardinality).verdict
    assert verdict is not None
    return verdict
