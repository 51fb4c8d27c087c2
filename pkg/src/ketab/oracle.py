"""Brute-force satisfiability for ground clause sets.

Deliberately independent of the tableau machinery: satisfiability is decided
by enumerating every set partition of the variables that occur in equality
atoms (a partition fixes all equality literals), then every truth valuation
of the remaining membership atoms, canonicalized by block representative.
Exponential and happily so; it exists to cross-check the reasoner on small
instances, not to be fast.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Sequence

from .errors import ResourceLimit
from .formulas import Clause, EQUALITY, Literal, SortedVariable

AtomKey = tuple

# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Assignment:
    """A satisfying interpretation: the partition blocks (by variable name)
    and the set of canonical membership atoms made true."""

    blocks: tuple[tuple[str, ...], ...]
    true_atoms: frozenset[AtomKey]


@dataclass
class OracleResult:
    satisfiable: bool
    witness: Assignment | None = None
    assignments: tuple[Assignment, ...] = ()
    partitions_tried: int = 0
    valuations_tried: int = 0


def _set_partitions(items: Sequence[SortedVariable]) -> Iterator[list[list[SortedVariable]]]:
    """All set partitions, deterministically; each block lists its members
    in input order, so block[0] is the least member."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield part + [[first]]


def _atom_key(lit: Literal, rep: dict[SortedVariable, SortedVariable]) -> AtomKey:
    atom = lit.atom
    if atom.is_pair:
        a, b = atom.left
        return ("in3", rep.get(a, a).name, rep.get(b, b).name, atom.right.name)
    v = atom.left
    return ("in1", rep.get(v, v).name, atom.right.name)


def brute_force_sat(clauses: Iterable[Clause], max_atoms: int = 20,
                    collect: bool = False) -> OracleResult:
    """Exhaustive check that some partition plus valuation satisfies every
    clause.  Stops at the first witness unless collect is set."""
    clause_list = tuple(clauses)
    eq_vars: list[SortedVariable] = []
    seen: set[SortedVariable] = set()
    for c in clause_list:
        for lit in c.disjuncts:
            if lit.atom.rel == EQUALITY:
                for v in (lit.atom.left, lit.atom.right):
                    if v not in seen:
                        seen.add(v)
                        eq_vars.append(v)

    partitions_tried = 0
    valuations_tried = 0
    found: list[Assignment] = []
    for blocks in _set_partitions(eq_vars):
        partitions_tried += 1
        rep = {v: blk[0] for blk in blocks for v in blk}

        # compile each clause against this partition
        keys: list[AtomKey] = []
        key_index: dict[AtomKey, int] = {}
        residuals: list[list[tuple[int, bool]]] = []
        partition_ok = True
        for c in clause_list:
            satisfied = False
            residual: list[tuple[int, bool]] = []
            for lit in c.disjuncts:
                if lit.atom.rel == EQUALITY:
                    value = rep.get(lit.atom.left, lit.atom.left) == \
                        rep.get(lit.atom.right, lit.atom.right)
                    if value == lit.positive:
                        satisfied = True
                        break
                    continue
                key = _atom_key(lit, rep)
                if key not in key_index:
                    key_index[key] = len(keys)
                    keys.append(key)
                residual.append((key_index[key], lit.positive))
            if satisfied:
                continue
            if not residual:
                partition_ok = False
                break
            residuals.append(residual)
        if not partition_ok:
            continue
        if len(keys) > max_atoms:
            raise ResourceLimit("oracle atoms", max_atoms, len(keys))

        block_names = tuple(tuple(v.name for v in blk) for blk in blocks)
        for bits in product((False, True), repeat=len(keys)):
            valuations_tried += 1
            if all(any(bits[i] == positive for i, positive in residual)
                   for residual in residuals):
                witness = Assignment(
                    block_names,
                    frozenset(k for k, i in key_index.items() if bits[i]))
                if not collect:
                    return OracleResult(True, witness, (witness,),
                                        partitions_tried, valuations_tried)
                found.append(witness)
    if found:
        return OracleResult(True, found[0], tuple(found),
                            partitions_tried, valuations_tried)
    return OracleResult(False, None, (), partitions_tried, valuations_tried)
