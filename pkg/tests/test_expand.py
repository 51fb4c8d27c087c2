"""CNF conversion, miniscoping, grounding, and the pre-tableau clash check."""

import pytest

from ketab import kb as K
from ketab.coding import encode
from ketab.errors import ResourceLimit
from ketab.expand import (
    check_node_clash,
    expand_kb,
    matrix_clauses,
    miniscope_and_rename,
    to_cnf,
)
from ketab.formulas import (
    And,
    Literal,
    Not,
    Or,
    TRUE,
    UniversalFormula,
    member,
)
from ketab.kb import KnowledgeBase
from ketab.translate import TranslationOutput, VarRegistry, translate_kb


def _kb(rbox=(), tbox=(), abox=()):
    return KnowledgeBase.from_statements(rbox=rbox, tbox=tbox, abox=abox)


def _expanded(kb, **kw):
    return expand_kb(translate_kb(kb), **kw)


class TestCnf:
    def setup_method(self):
        reg = VarRegistry()
        self.x = reg.fresh_bound()
        va = reg.variable("concept", "A")
        vb = reg.variable("concept", "B")
        vc = reg.variable("concept", "C")
        self.a = member(self.x, va)
        self.b = member(self.x, vb)
        self.c = member(self.x, vc)

    def test_negated_conjunction(self):
        got = matrix_clauses(Not(And(self.a, self.b)))
        assert got == [(Literal(self.a, False), Literal(self.b, False))]

    def test_distribution(self):
        got = matrix_clauses(Or(And(self.a, self.b), self.c))
        assert got == [
            (Literal(self.a, True), Literal(self.c, True)),
            (Literal(self.b, True), Literal(self.c, True)),
        ]

    def test_double_negation(self):
        assert matrix_clauses(Not(Not(self.a))) == [(Literal(self.a, True),)]

    def test_constants(self):
        assert matrix_clauses(TRUE) is None
        assert matrix_clauses(Not(TRUE)) == [()]
        assert matrix_clauses(Or(self.a, TRUE)) is None

    def test_to_cnf_keeps_prefix(self):
        f = UniversalFormula((self.x,), Or(self.a, And(self.b, self.c)))
        g = to_cnf(f)
        assert g.prefix == (self.x,)
        assert g.matrix == And(Or(self.a, self.b), Or(self.a, self.c))


class TestMiniscope:
    def test_conjuncts_split_with_fresh_names(self):
        reg = VarRegistry()
        v1, v2 = reg.fresh_bound(), reg.fresh_bound()
        va = reg.variable("concept", "A")
        f = UniversalFormula((v1, v2), And(member(v1, va), member(v2, va)))
        parts = miniscope_and_rename(f, reg)
        assert [encode(p) for p in parts] == [
            "$FA V0{z} V0{z} $IN V1{A}",
            "$FA V0{x1} V0{x1} $IN V1{A}",
        ]

    def test_unused_prefix_variable_dropped(self):
        reg = VarRegistry()
        v1, v2 = reg.fresh_bound(), reg.fresh_bound()
        va = reg.variable("concept", "A")
        f = UniversalFormula((v1, v2), member(v1, va))
        parts = miniscope_and_rename(f, reg)
        assert len(parts) == 1 and len(parts[0].prefix) == 1

    def test_fresh_names_skip_taken_individuals(self):
        reg = VarRegistry()
        reg.variable("individual", "x")
        v = reg.fresh_bound()  # takes y
        va = reg.variable("concept", "A")
        f = UniversalFormula((v,), member(v, va))
        parts = miniscope_and_rename(f, reg)
        assert parts[0].prefix[0].name == "z"


class TestGoldenExpansion:
    KB = _kb(
        tbox=[K.ConceptEquiv(K.concept("Kid"),
                             K.conj(K.concept("Person"), K.concept("VeryYoung")))],
        abox=[K.InstanceOf("Ann", K.concept("Person"))])

    def test_normalized_universals(self):
        e = _expanded(self.KB)
        assert [encode(f) for f in e.normalized] == [
            "$FA V0{x} $OR V0{x} $NI V1{Kid} V0{x} $IN V1{Person}",
            "$FA V0{y} $OR V0{y} $NI V1{Kid} V0{y} $IN V1{VeryYoung}",
            "$FA V0{z} $OR $OR V0{z} $NI V1{Person} V0{z} $NI V1{VeryYoung}"
            " V0{z} $IN V1{Kid}",
        ]

    def test_ground_clauses_in_order(self):
        e = _expanded(self.KB)
        assert [encode(c) for c in e.clauses] == [
            "$OR V0{Ann} $NI V1{Kid} V0{Ann} $IN V1{Person}",
            "$OR V0{Ann} $NI V1{Kid} V0{Ann} $IN V1{VeryYoung}",
            "$OR V0{Ann} $NI V1{Person} $OR V0{Ann} $NI V1{VeryYoung}"
            " V0{Ann} $IN V1{Kid}",
            "V0{Ann} $IN V1{Person}",
        ]

    def test_domain_is_the_single_individual(self):
        e = _expanded(self.KB)
        assert [v.name for v in e.domain] == ["Ann"]

    def test_no_node_clash(self):
        assert not check_node_clash(_expanded(self.KB))


class TestGrounding:
    def test_witness_individual_for_empty_domain(self):
        e = _expanded(_kb(tbox=[K.ConceptSub(K.concept("A"), K.concept("B"))]))
        assert [v.name for v in e.domain] == ["w0"]
        assert [encode(c) for c in e.clauses] == [
            "$OR V0{w0} $NI V1{A} V0{w0} $IN V1{B}"]

    def test_formula_major_lexicographic_order(self):
        kb = _kb(tbox=[K.ConceptSub(K.concept("A"), K.concept("B"))],
                 abox=[K.InstanceOf("a", K.concept("A")),
                       K.InstanceOf("b", K.concept("A"))])
        e = _expanded(kb)
        assert [encode(c) for c in e.clauses] == [
            "$OR V0{a} $NI V1{A} V0{a} $IN V1{B}",
            "$OR V0{b} $NI V1{A} V0{b} $IN V1{B}",
            "V0{a} $IN V1{A}",
            "V0{b} $IN V1{A}",
        ]

    def test_two_variable_tuples_enumerate_lexicographically(self):
        reg = VarRegistry()
        a = reg.variable("individual", "a")
        b = reg.variable("individual", "b")
        vr = reg.variable("arole", "R")
        x, y = reg.fresh_bound(), reg.fresh_bound()
        from ketab.formulas import pair_member
        f = UniversalFormula((x, y), pair_member(x, y, vr))
        e = expand_kb(TranslationOutput([], [f], reg))
        assert [encode(c) for c in e.clauses] == [
            "$OA V0{a} $CO V0{a} $AO $IN V3{R}",
            "$OA V0{a} $CO V0{b} $AO $IN V3{R}",
            "$OA V0{b} $CO V0{a} $AO $IN V3{R}",
            "$OA V0{b} $CO V0{b} $AO $IN V3{R}",
        ]

    def test_tautological_instances_dropped(self):
        e = _expanded(_kb(tbox=[K.ConceptSub(K.concept("A"), K.concept("A"))]))
        assert e.clauses == ()

    def test_duplicate_literals_merge(self):
        reg = VarRegistry()
        reg.variable("individual", "a")
        va = reg.variable("concept", "A")
        x, y = reg.fresh_bound(), reg.fresh_bound()
        f = UniversalFormula((x, y), Or(member(x, va), member(y, va)))
        e = expand_kb(TranslationOutput([], [f], reg))
        # the diagonal instance (a, a) collapses to a unit clause
        assert encode(e.clauses[0]) == "V0{a} $IN V1{A}"

    def test_unsatisfiable_instances_kept(self):
        e = _expanded(_kb(tbox=[K.ConceptSub(K.top(), K.bot())]))
        assert [encode(c) for c in e.clauses] == ["V0{w0} $QE V0{w0}"]

    def test_instance_cap(self):
        kb = _kb(rbox=[K.RoleTrait("tra", K.arole("R"))],
                 abox=[K.InstanceOf(n, K.concept("A")) for n in "abcde"])
        with pytest.raises(ResourceLimit, match="ground instances"):
            _expanded(kb, max_instances=100)  # 5**3 = 125 instances
        assert len(_expanded(kb, max_instances=125).clauses) > 0

    def test_unit_literals_helper(self):
        kb = _kb(abox=[K.InstanceOf("a", K.concept("A")), K.SameAs("a", "b")])
        e = _expanded(kb)
        assert [encode(Literal(l.atom, l.positive)) for l in e.unit_literals()] == [
            "V0{a} $IN V1{A}", "V0{a} $EQ V0{b}"]


class TestNodeClash:
    def test_complementary_pair(self):
        kb = _kb(abox=[K.InstanceOf("a", K.concept("A")),
                       K.InstanceOf("a", K.neg(K.concept("A")))])
        report = check_node_clash(_expanded(kb))
        assert report and report.clashes[0].kind == "complementary"

    def test_reflexive_disequality(self):
        kb = _kb(abox=[K.InstanceOf("a", K.bot())])
        report = check_node_clash(_expanded(kb))
        assert report and report.clashes[0].kind == "reflexive"

    def test_non_unit_clauses_do_not_clash(self):
        kb = _kb(abox=[K.InstanceOf("a", K.disj(K.concept("A"), K.concept("B"))),
                       K.InstanceOf("a", K.neg(K.concept("A")))])
        assert not check_node_clash(_expanded(kb))
