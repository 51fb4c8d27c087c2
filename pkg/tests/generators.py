"""Random instance generators shared by the comparison suites.

Two levels: raw ground clause sets (engine vs brute force) and whole
knowledge bases built from one terminological axiom plus a few assertions
(pipeline vs direct model enumeration).  Sizes are conditioned so the
enumeration side stays cheap; every generator takes an explicit Random so
suites are reproducible.
"""

from __future__ import annotations

import random

import ketab.kb as K
from ketab.expand import ExpandedKB
from ketab.formulas import Clause, Literal, equality, member, pair_member
from ketab.translate import VarRegistry

from semantic_model import interpretation_count

# ---------------------------------------------------------------------------
# ground clause sets
# ---------------------------------------------------------------------------


def random_ground_expansion(rng: random.Random) -> ExpandedKB:
    """A small ground clause set over a fresh registry.

    Up to 5 individuals, 8 distinct atoms, 12 clauses of 1 to 4 literals;
    equality, concept membership, and role membership atoms all appear.
    """
    reg = VarRegistry()
    individuals = [reg.variable("individual", f"u{i}")
                   for i in range(rng.randint(1, 5))]
    concepts = [reg.variable("concept", f"C{i}")
                for i in range(rng.randint(0, 3))]
    roles = [reg.variable("arole", f"R{i}")
             for i in range(rng.randint(0, 1))]

    pool = []
    for _ in range(rng.randint(1, 8)):
        kind = rng.random()
        if kind < 0.4 or (not concepts and not roles):
            a = rng.choice(individuals)
            b = rng.choice(individuals)  # may coincide: reflexive atoms allowed
            pool.append(equality(a, b))
        elif kind < 0.8 and concepts or not roles:
            pool.append(member(rng.choice(individuals), rng.choice(concepts)))
        else:
            pool.append(pair_member(rng.choice(individuals),
                                    rng.choice(individuals), rng.choice(roles)))

    clauses = []
    for _ in range(rng.randint(1, 12)):
        lits = tuple(Literal(rng.choice(pool), rng.random() < 0.5)
                     for _ in range(rng.randint(1, 4)))
        clauses.append(Clause(lits))
    return ExpandedKB(tuple(clauses), tuple(reg.free[0]), reg)


# ---------------------------------------------------------------------------
# whole knowledge bases
# ---------------------------------------------------------------------------

_TRAITS = ("sym", "asym", "ref", "irref", "tra", "fun")


def random_kb(rng: random.Random) -> K.KnowledgeBase:
    """One terminological or role axiom plus up to four assertions, sized so
    the direct enumerator stays under a few tens of thousands of
    interpretations."""
    while True:
        kb = (_random_data_kb(rng) if rng.random() < 0.25
              else _random_object_kb(rng))
        if interpretation_count(kb) <= 60_000:
            return kb


def _random_object_kb(rng: random.Random) -> K.KnowledgeBase:
    kind = rng.choice(("concept_sub", "concept_sub", "concept_sub",
                       "concept_equiv", "role_sub", "role_equiv",
                       "role_chain", "role_trait", "role_disjoint"))
    use_roles = kind.startswith("role") or rng.random() < 0.5
    if use_roles:
        inds = [f"a{i}" for i in range(rng.randint(0, 2))]
        concepts = [f"A{i}" for i in range(rng.randint(1, 2))]
        roles = [f"r{i}" for i in range(rng.randint(1, 2))]
    else:
        inds = [f"a{i}" for i in range(rng.randint(0, 3))]
        concepts = [f"A{i}" for i in range(rng.randint(1, 3))]
        roles = []
    ctx = _Ctx(rng, inds, concepts, roles)

    if kind == "concept_sub":
        axiom: K.Statement = K.ConceptSub(*ctx.inclusion_pair())
    elif kind == "concept_equiv":
        axiom = K.ConceptEquiv(ctx.concept(2), ctx.concept(2))
    elif kind == "role_sub":
        axiom = K.RoleSub(ctx.role(2), ctx.role(2))
    elif kind == "role_equiv":
        axiom = K.RoleEquiv(ctx.role(1), ctx.role(1))
    elif kind == "role_chain":
        chain = tuple(ctx.role(1) for _ in range(rng.randint(1, 2)))
        axiom = K.RoleChain(chain, K.arole(rng.choice(roles)))
    elif kind == "role_trait":
        axiom = K.RoleTrait(rng.choice(_TRAITS), ctx.role(1))
    else:
        axiom = K.RoleDisjoint(ctx.role(1), ctx.role(1))

    box = [axiom]
    rbox = [s for s in box if isinstance(s, K.RBoxStatement)]
    tbox = [s for s in box if isinstance(s, K.TBoxStatement)]
    return K.KnowledgeBase.from_statements(
        rbox=rbox, tbox=tbox, abox=ctx.random_abox())


def _random_data_kb(rng: random.Random) -> K.KnowledgeBase:
    consts = [K.Constant("v1", "string"), K.Constant("v2", "string")]
    inds = [f"a{i}" for i in range(rng.randint(0, 2))]
    concepts = [f"A{i}" for i in range(rng.randint(1, 2))]
    croles = [f"d{i}" for i in range(rng.randint(1, 2))]
    ctx = _Ctx(rng, inds, concepts, [], croles=croles, constants=consts)

    kind = rng.choice(("data_sub", "data_equiv", "crole_fun", "crole_sub",
                       "crole_disjoint", "concept_sub"))
    if kind == "data_sub":
        axiom: K.Statement = K.DataSub(ctx.data_range(2), ctx.data_range(2))
    elif kind == "data_equiv":
        axiom = K.DataEquiv(ctx.data_range(2), ctx.data_range(2))
    elif kind == "crole_fun":
        axiom = K.RoleTrait("fun", K.crole(rng.choice(croles)))
    elif kind == "crole_sub":
        axiom = K.RoleSub(ctx.crole(1), ctx.crole(1))
    elif kind == "crole_disjoint":
        axiom = K.RoleDisjoint(ctx.crole(1), ctx.crole(1))
    else:
        axiom = K.ConceptSub(*ctx.data_inclusion_pair())

    rbox = [axiom] if isinstance(axiom, K.RBoxStatement) else []
    tbox = [axiom] if isinstance(axiom, K.TBoxStatement) else []
    # Anchor at least one constant so the data domain is never empty and
    # range inclusions are never vacuously satisfied.
    abox = ctx.random_abox(data=True)
    abox.append(K.ConstantInstanceOf(rng.choice(consts), K.datatype("string")))
    return K.KnowledgeBase.from_statements(rbox=rbox, tbox=tbox, abox=abox)


class _Ctx:
    """Shared pools and term builders for one random knowledge base."""

    def __init__(self, rng, inds, concepts, roles, croles=(), constants=()):
        self.rng = rng
        self.inds = list(inds)
        self.concepts = list(concepts)
        self.roles = list(roles)
        self.croles = list(croles)
        self.constants = list(constants)

    def concept(self, depth: int) -> K.Term:
        rng = self.rng
        if depth == 0 or rng.random() < 0.45:
            choices = [K.concept(n) for n in self.concepts] + [K.top(), K.bot()]
            if not self.constants:
                # Identity facts separate constants from individuals, so a
                # nominal condition evaluated at a constant is decided up
                # front and can close branches the typed reference model,
                # which reads concept axioms over individuals only, never
                # examines.  Runs that carry constants skip nominals.
                choices += [K.nominal(a) for a in self.inds]
            return rng.choice(choices)
        pick = rng.random()
        if pick < 0.3:
            return K.neg(self.concept(depth - 1))
        if pick < 0.55:
            return K.conj(self.concept(depth - 1), self.concept(depth - 1))
        if pick < 0.8 or not self.roles:
            return K.disj(self.concept(depth - 1), self.concept(depth - 1))
        if rng.random() < 0.5 or not self.inds:
            return K.has_self(self.role(1))
        return K.has_value(self.role(1), rng.choice(self.inds))

    def role(self, depth: int) -> K.Term:
        rng = self.rng
        if depth == 0 or rng.random() < 0.55:
            if rng.random() < 0.08:
                return K.universal_role()
            return K.arole(rng.choice(self.roles))
        pick = rng.random()
        if pick < 0.3:
            return K.inverse(self.role(depth - 1))
        if pick < 0.45:
            return K.neg(self.role(depth - 1))
        if pick < 0.6:
            op = rng.choice((K.conj, K.disj))
            return op(self.role(depth - 1), self.role(depth - 1))
        if pick < 0.75:
            return K.restrict_domain(self.role(depth - 1), self.concept(1))
        if pick < 0.85:
            return K.restrict_range(self.role(depth - 1), self.concept(1))
        if pick < 0.95:
            return K.identity_on(self.concept(1))
        return K.product(self.concept(1), self.concept(1))

    def crole(self, depth: int) -> K.Term:
        rng = self.rng
        if depth == 0 or rng.random() < 0.6:
            return K.crole(rng.choice(self.croles))
        pick = rng.random()
        if pick < 0.3:
            return K.neg(self.crole(depth - 1))
        if pick < 0.55:
            op = rng.choice((K.conj, K.disj))
            return op(self.crole(depth - 1), self.crole(depth - 1))
        if pick < 0.8:
            return K.restrict_range(self.crole(depth - 1), self.data_range(1))
        return K.restrict_domain(self.crole(depth - 1), self.concept(1))

    def data_range(self, depth: int) -> K.Term:
        # Positive ranges only: a complemented range is true of individuals
        # as well, so axioms built from it constrain elements the typed
        # reference model never quantifies over.
        rng = self.rng
        if depth == 0 or rng.random() < 0.5:
            if rng.random() < 0.4:
                return K.datatype("string")
            k = rng.randint(0, len(self.constants))
            return K.data_enum(*rng.sample(self.constants, k))
        op = rng.choice((K.conj, K.disj))
        return op(self.data_range(depth - 1), self.data_range(depth - 1))

    def restriction(self, side: str, role: K.Term, filler: K.Term) -> K.Term:
        rng = self.rng
        n = rng.randint(1, 2)
        if side == "left":
            make = K.exists if rng.random() < 0.6 else (
                lambda r, f: K.min_card(n, r, f))
        else:
            make = K.forall if rng.random() < 0.6 else (
                lambda r, f: K.max_card(n, r, f))
        return make(role, filler)

    def inclusion_pair(self) -> tuple[K.Term, K.Term]:
        # A quantified restriction may sit on the left or on the right of an
        # inclusion, never on both sides at once.
        rng = self.rng
        spot = rng.random()
        if self.roles and spot < 0.3:
            return (self.restriction("left", self.role(1), self.concept(1)),
                    self.concept(2))
        if self.roles and spot < 0.6:
            return (self.concept(2),
                    self.restriction("right", self.role(1), self.concept(1)))
        return self.concept(2), self.concept(2)

    def data_inclusion_pair(self) -> tuple[K.Term, K.Term]:
        rng = self.rng
        spot = rng.random()
        if spot < 0.4:
            return (self.restriction("left", self.crole(1), self.data_range(1)),
                    self.concept(1))
        if spot < 0.8:
            return (self.concept(1),
                    self.restriction("right", self.crole(1), self.data_range(1)))
        return self.concept(1), self.concept(1)

    def random_abox(self, data: bool = False) -> list[K.Statement]:
        rng = self.rng
        out: list[K.Statement] = []
        for _ in range(rng.randint(0, 4)):
            forms = []
            if self.inds:
                forms.append("instance")
                if len(self.inds) >= 1:
                    forms += ["same", "different"]
                if self.roles:
                    forms.append("related")
                if data and self.croles:
                    forms.append("has_data_value")
            if data:
                forms.append("constant_instance")
            if not forms:
                break
            form = rng.choice(forms)
            if form == "instance":
                out.append(K.InstanceOf(rng.choice(self.inds), self.concept(1)))
            elif form == "same":
                out.append(K.SameAs(rng.choice(self.inds), rng.choice(self.inds)))
            elif form == "different":
                out.append(K.DifferentFrom(rng.choice(self.inds),
                                           rng.choice(self.inds)))
            elif form == "related":
                out.append(K.RelatedVia(rng.choice(self.inds),
                                        rng.choice(self.inds), self.role(1)))
            elif form == "has_data_value":
                out.append(K.HasDataValue(rng.choice(self.inds),
                                          rng.choice(self.constants),
                                          self.crole(1)))
            else:
                out.append(K.ConstantInstanceOf(rng.choice(self.constants),
                                                self.data_range(1)))
        return out
