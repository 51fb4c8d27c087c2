"""Direct-interpretation semantics: hand cases and agreement with the engine.

Each hand case asserts the two routes separately: the brute-force semantic
enumeration from tests/semantic_model.py, and the tableau pipeline verdict.
"""

import random

from ketab import kb as K
from ketab.engine import decide
from ketab.kb import Constant, KnowledgeBase

from generators import random_kb
from semantic_model import interpretation_count, satisfiable


def _kb(rbox=(), tbox=(), abox=()):
    return KnowledgeBase.from_statements(rbox=rbox, tbox=tbox, abox=abox)


class TestHandCases:
    def test_golden_is_satisfiable(self):
        kb = _kb(
            tbox=[K.ConceptEquiv(K.concept("Kid"),
                                 K.conj(K.concept("Person"),
                                        K.concept("VeryYoung")))],
            abox=[K.InstanceOf("Ann", K.concept("Person"))])
        assert satisfiable(kb) is True
        assert decide(kb).status == "consistent"

    def test_subsumption_conflict(self):
        kb = _kb(tbox=[K.ConceptSub(K.concept("A"), K.concept("B"))],
                 abox=[K.InstanceOf("a", K.concept("A")),
                       K.InstanceOf("a", K.neg(K.concept("B")))])
        assert satisfiable(kb) is False
        assert decide(kb).status == "inconsistent"

    def test_functional_role_with_separated_targets(self):
        kb = _kb(rbox=[K.RoleTrait("fun", K.arole("R"))],
                 abox=[K.RelatedVia("a", "b", K.arole("R")),
                       K.RelatedVia("a", "c", K.arole("R")),
                       K.DifferentFrom("b", "c")])
        assert satisfiable(kb) is False
        assert decide(kb).status == "inconsistent"

    def test_functional_role_can_merge_targets(self):
        kb = _kb(rbox=[K.RoleTrait("fun", K.arole("R"))],
                 abox=[K.RelatedVia("a", "b", K.arole("R")),
                       K.RelatedVia("a", "c", K.arole("R"))])
        assert satisfiable(kb) is True
        assert decide(kb).status == "consistent"

    def test_nominal_equivalence(self):
        kb = _kb(tbox=[K.ConceptEquiv(K.concept("A"), K.nominal("a"))],
                 abox=[K.InstanceOf("b", K.concept("A")),
                       K.DifferentFrom("a", "b")])
        assert satisfiable(kb) is False
        assert decide(kb).status == "inconsistent"

    def test_asymmetric_role(self):
        kb = _kb(rbox=[K.RoleTrait("asym", K.arole("R"))],
                 abox=[K.RelatedVia("a", "b", K.arole("R")),
                       K.RelatedVia("b", "a", K.arole("R"))])
        assert satisfiable(kb) is False
        assert decide(kb).status == "inconsistent"

    def test_reflexive_and_irreflexive_clash_without_individuals(self):
        kb = _kb(rbox=[K.RoleTrait("ref", K.arole("R")),
                       K.RoleTrait("irref", K.arole("R"))])
        assert satisfiable(kb) is False
        assert decide(kb).status == "inconsistent"

    def test_role_chain_feeds_an_empty_role(self):
        kb = _kb(rbox=[K.RoleChain((K.arole("R"), K.arole("S")), K.arole("T"))],
                 tbox=[K.ConceptSub(K.exists(K.arole("T"), K.top()), K.bot())],
                 abox=[K.RelatedVia("a", "b", K.arole("R")),
                       K.RelatedVia("b", "a", K.arole("S"))])
        assert satisfiable(kb) is False
        assert decide(kb).status == "inconsistent"

    def test_at_most_restriction(self):
        kb = _kb(tbox=[K.ConceptSub(K.concept("A"),
                                    K.max_card(1, K.arole("R"), K.top()))],
                 abox=[K.InstanceOf("a", K.concept("A")),
                       K.RelatedVia("a", "b", K.arole("R")),
                       K.RelatedVia("a", "c", K.arole("R")),
                       K.DifferentFrom("b", "c")])
        assert satisfiable(kb) is False
        assert decide(kb).status == "inconsistent"


class TestDatatypeSeparation:
    def test_same_datatype_values_may_merge(self):
        # functional data role with two same-type values: both routes treat
        # distinct lexemes of one datatype as mergeable, so this stays open
        kb = _kb(rbox=[K.RoleTrait("fun", K.crole("age"))],
                 abox=[K.HasDataValue("a", Constant("4", "integer"),
                                      K.crole("age")),
                       K.HasDataValue("a", Constant("6", "integer"),
                                      K.crole("age"))])
        assert satisfiable(kb) is True
        assert decide(kb).status == "consistent"

    def test_cross_datatype_values_cannot_merge(self):
        kb = _kb(rbox=[K.RoleTrait("fun", K.crole("p"))],
                 abox=[K.HasDataValue("a", Constant("4", "integer"),
                                      K.crole("p")),
                       K.HasDataValue("a", Constant("x", "string"),
                                      K.crole("p"))])
        assert satisfiable(kb) is False
        assert decide(kb).status == "inconsistent"

    def test_individuals_never_merge_with_constants(self):
        # b = 4 would identify an individual with a constant; has-value on a
        # nominal-like chain must not make that possible
        kb = _kb(rbox=[K.RoleTrait("fun", K.arole("R"))],
                 tbox=[K.ConceptSub(K.concept("A"),
                                    K.data_has_value(K.crole("p"),
                                                     Constant("4", "integer")))],
                 abox=[K.InstanceOf("a", K.concept("A"))])
        assert satisfiable(kb) is True
        assert decide(kb).status == "consistent"


class TestInterpretationCount:
    def test_counts_scale_with_signature(self):
        small = _kb(abox=[K.InstanceOf("a", K.concept("A"))])
        larger = _kb(abox=[K.InstanceOf("a", K.concept("A")),
                           K.InstanceOf("b", K.concept("B")),
                           K.RelatedVia("a", "b", K.arole("R"))])
        assert 0 < interpretation_count(small) < interpretation_count(larger)


class TestRandomAgreement:
    def test_forty_random_kbs_agree(self):
        rng = random.Random(20240817)
        disagreements = []
        for i in range(40):
            kb = random_kb(rng)
            verdict = decide(kb)
            assert verdict.status in ("consistent", "inconsistent")
            sat = satisfiable(kb)
            if (verdict.status == "consistent") != sat:
                disagreements.append((i, verdict.status, sat))
        assert disagreements == []
