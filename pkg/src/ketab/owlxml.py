"""OWL/XML reader and writer for the supported description-logic fragment.

The reader makes two passes over the ontology element: declarations first
(so strict mode works regardless of axiom order), then axioms.  Every OWL
axiom either has one canonical image in the statement model or is rejected
with UnsupportedAxiom; nothing is silently approximated, since a weakened
axiom could flip a consistency verdict.

Quantified class expressions are position-checked during parsing: an
existential or at-least restriction is only accepted as the left side of a
SubClassOf, a universal or at-most restriction only as the right side.

The writer emits the subset of the statement model that has an OWL/XML
rendering; status as the round-trip partner of the reader is covered by
tests.  Statements with no OWL counterpart (role booleans, concept
products, datatype membership assertions) raise ValueError.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET

from .errors import InvalidStatement, UnknownName, UnsupportedAxiom, XmlError
from . import kb as K
from .kb import Constant, KnowledgeBase, Term

OWL_NS = "http://www.w3.org/2002/07/owl#"

_RESTRICTIONS = ("exists", "forall", "min_card", "max_card")

_DECL_CATEGORY = {
    "Class": "concept",
    "ObjectProperty": "arole",
    "DataProperty": "crole",
    "NamedIndividual": "individual",
}

_TRAIT_ELEMENTS = {
    "FunctionalObjectProperty": "fun",
    "SymmetricObjectProperty": "sym",
    "AsymmetricObjectProperty": "asym",
    "ReflexiveObjectProperty": "ref",
    "IrreflexiveObjectProperty": "irref",
    "TransitiveObjectProperty": "tra",
}

_IGNORED = {
    "Prefix", "Declaration", "Annotation", "AnnotationAssertion",
    "SubAnnotationPropertyOf", "AnnotationPropertyDomain", "AnnotationPropertyRange",
}


def _local(tag: str) -> str:
    return tag.rsplit("}", 1)[-1]


def _fragment(iri: str) -> str:
    if "#" in iri:
        return iri.rsplit("#", 1)[1]
    return iri.rsplit("/", 1)[-1]


class _Reader:
    def __init__(self, strict: bool):
        self.strict = strict
        self.kb = KnowledgeBase()
        self.prefixes: dict[str, str] = {}
        self.declared: dict[str, set[str]] = {
            "individual": set(), "concept": set(), "arole": set(), "crole": set(),
        }
        self.declared_datatypes: set[str] = set()
        self.where = ""  # current axiom position, for error messages

    # -- names ---------------------------------------------------------

    def _name_of(self, el: ET.Element) -> str:
        iri = el.get("IRI")
        if iri is not None:
            return _fragment(iri)
        abbrev = el.get("abbreviatedIRI")
        if abbrev is not None:
            prefix, _, local = abbrev.partition(":")
            base = self.prefixes.get(prefix)
            return _fragment(base + local) if base else local
        raise XmlError(f"{_local(el.tag)} element without IRI ({self.where})")

    def _entity(self, el: ET.Element, category: str) -> str:
        name = self._name_of(el)
        if name not in self.declared[category]:
            if self.strict:
                raise UnknownName(f"undeclared {category} {name!r} ({self.where})")
            self.declared[category].add(name)
        self.kb.declare(category, name)
        return name

    # -- class expressions ----------------------------------------------

    def _cardinality(self, el: ET.Element) -> int:
        n = int(el.get("cardinality", "-1"))
        if n < 1:
            raise UnsupportedAxiom(
                _local(el.tag), f"cardinality bound must be >= 1 ({self.where})")
        return n

    def _concept(self, el: ET.Element, allow: str = "none") -> Term:
        tag = _local(el.tag)
        kids = list(el)
        if tag == "Class":
            name = self._name_of(el)
            if name == "Thing":
                return K.top()
            if name == "Nothing":
                return K.bot()
            return K.concept(self._entity(el, "concept"))
        if tag == "ObjectIntersectionOf":
            parts = [self._concept(c) for c in kids]
            return self._fold(K.conj, parts, tag)
        if tag == "ObjectUnionOf":
            parts = [self._concept(c) for c in kids]
            return self._fold(K.disj, parts, tag)
        if tag == "ObjectComplementOf":
            return K.neg(self._concept(kids[0]))
        if tag == "ObjectOneOf":
            names = [self._entity(c, "individual") for c in kids]
            parts = [K.nominal(n) for n in names]
            return self._fold(K.disj, parts, tag)
        if tag == "ObjectHasSelf":
            return K.has_self(self._arole(kids[0]))
        if tag == "ObjectHasValue":
            return K.has_value(self._arole(kids[0]), self._entity(kids[1], "individual"))
        if tag == "DataHasValue":
            return K.data_has_value(self._crole(kids[0]), self._literal(kids[1]))
        if tag in ("ObjectSomeValuesFrom", "ObjectMinCardinality"):
            if allow != "left":
                raise UnsupportedAxiom(
                    tag, f"only allowed on the left of SubClassOf ({self.where})")
            role = self._arole(kids[0])
            filler = self._concept(kids[1]) if len(kids) > 1 else K.top()
            if tag == "ObjectSomeValuesFrom":
                return K.exists(role, filler)
            return K.min_card(self._cardinality(el), role, filler)
        if tag in ("ObjectAllValuesFrom", "ObjectMaxCardinality"):
            if allow != "right":
                raise UnsupportedAxiom(
                    tag, f"only allowed on the right of SubClassOf ({self.where})")
            role = self._arole(kids[0])
            filler = self._concept(kids[1]) if len(kids) > 1 else K.top()
            if tag == "ObjectAllValuesFrom":
                return K.forall(role, filler)
            return K.max_card(self._cardinality(el), role, filler)
        if tag in ("DataSomeValuesFrom", "DataMinCardinality"):
            if allow != "left":
                raise UnsupportedAxiom(
                    tag, f"only allowed on the left of SubClassOf ({self.where})")
            role = self._crole(kids[0])
            if len(kids) < 2:
                raise UnsupportedAxiom(tag, f"missing data range ({self.where})")
            rng = self._data_range(kids[1])
            if tag == "DataSomeValuesFrom":
                return K.exists(role, rng)
            return K.min_card(self._cardinality(el), role, rng)
        if tag in ("DataAllValuesFrom", "DataMaxCardinality"):
            if allow != "right":
                raise UnsupportedAxiom(
                    tag, f"only allowed on the right of SubClassOf ({self.where})")
            role = self._crole(kids[0])
            if len(kids) < 2:
                raise UnsupportedAxiom(tag, f"missing data range ({self.where})")
            rng = self._data_range(kids[1])
            if tag == "DataAllValuesFrom":
                return K.forall(role, rng)
            return K.max_card(self._cardinality(el), role, rng)
        if tag in ("ObjectExactCardinality", "DataExactCardinality"):
            raise UnsupportedAxiom(tag, f"exact cardinality has no image ({self.where})")
        raise UnsupportedAxiom(tag, f"unsupported class expression ({self.where})")

    def _fold(self, op, parts: list[Term], tag: str) -> Term:
        if not parts:
            raise UnsupportedAxiom(tag, f"empty operand list ({self.where})")
        out = parts[0]
        for p in parts[1:]:
            out = op(out, p)
        return out

    # -- property expressions and data ranges ----------------------------

    def _arole(self, el: ET.Element) -> Term:
        tag = _local(el.tag)
        if tag == "ObjectProperty":
            name = self._name_of(el)
            if name == "topObjectProperty":
                return K.universal_role()
            if name == "bottomObjectProperty":
                return K.neg(K.universal_role())
            return K.arole(self._entity(el, "arole"))
        if tag == "ObjectInverseOf":
            return K.inverse(self._arole(list(el)[0]))
        raise UnsupportedAxiom(tag, f"not an object property expression ({self.where})")

    def _crole(self, el: ET.Element) -> Term:
        tag = _local(el.tag)
        if tag != "DataProperty":
            raise UnsupportedAxiom(tag, f"not a data property ({self.where})")
        return K.crole(self._entity(el, "crole"))

    def _literal(self, el: ET.Element) -> Constant:
        dt_iri = el.get("datatypeIRI")
        dt = _fragment(dt_iri) if dt_iri else "string"
        self.declared_datatypes.add(dt)
        c = Constant(el.text or "", dt)
        try:
            return self.kb.dmap.add_constant(c)
        except InvalidStatement as exc:
            raise UnsupportedAxiom("Literal", f"{exc} ({self.where})") from exc

    def _data_range(self, el: ET.Element) -> Term:
        tag = _local(el.tag)
        kids = list(el)
        if tag == "Datatype":
            name = self._name_of(el)
            self.declared_datatypes.add(name)
            self.kb.dmap.add_datatype(name)
            return K.datatype(name)
        if tag == "DataOneOf":
            return K.data_enum(*[self._literal(c) for c in kids])
        if tag == "DataIntersectionOf":
            return self._fold(K.conj, [self._data_range(c) for c in kids], tag)
        if tag == "DataUnionOf":
            return self._fold(K.disj, [self._data_range(c) for c in kids], tag)
        if tag == "DataComplementOf":
            return K.neg(self._data_range(kids[0]))
        if tag == "DatatypeRestriction":
            raise UnsupportedAxiom(tag, f"facets are out of scope ({self.where})")
        raise UnsupportedAxiom(tag, f"unsupported data range ({self.where})")

    # -- axioms ----------------------------------------------------------

    def _axiom(self, el: ET.Element) -> None:
        tag = _local(el.tag)
        kids = [c for c in el if _local(c.tag) != "Annotation"]
        kb = self.kb
        if tag == "SubClassOf":
            left = self._concept(kids[0], allow="left")
            right = self._concept(kids[1], allow="right")
            if left.op in _RESTRICTIONS and right.op in _RESTRICTIONS:
                raise UnsupportedAxiom(
                    tag, f"restrictions on both sides ({self.where})")
            kb.tbox.append(K.ConceptSub(left, right))
        elif tag == "EquivalentClasses":
            parts = [self._concept(c) for c in kids]
            for a, b in zip(parts, parts[1:]):
                kb.tbox.append(K.ConceptEquiv(a, b))
        elif tag == "SubObjectPropertyOf":
            if _local(kids[0].tag) == "ObjectPropertyChain":
                chain = tuple(self._arole(c) for c in kids[0])
                kb.rbox.append(K.RoleChain(chain, self._arole(kids[1])))
            else:
                kb.rbox.append(K.RoleSub(self._arole(kids[0]), self._arole(kids[1])))
        elif tag == "EquivalentObjectProperties":
            parts = [self._arole(c) for c in kids]
            for a, b in zip(parts, parts[1:]):
                kb.rbox.append(K.RoleEquiv(a, b))
        elif tag == "DisjointObjectProperties":
            parts = [self._arole(c) for c in kids]
            for i in range(len(parts)):
                for j in range(i + 1, len(parts)):
                    kb.rbox.append(K.RoleDisjoint(parts[i], parts[j]))
        elif tag in _TRAIT_ELEMENTS:
            kb.rbox.append(K.RoleTrait(_TRAIT_ELEMENTS[tag], self._arole(kids[0])))
        elif tag == "InverseFunctionalObjectProperty":
            kb.rbox.append(K.RoleTrait("fun", K.inverse(self._arole(kids[0]))))
        elif tag == "FunctionalDataProperty":
            kb.rbox.append(K.RoleTrait("fun", self._crole(kids[0])))
        elif tag == "SubDataPropertyOf":
            kb.rbox.append(K.RoleSub(self._crole(kids[0]), self._crole(kids[1])))
        elif tag == "EquivalentDataProperties":
            parts = [self._crole(c) for c in kids]
            for a, b in zip(parts, parts[1:]):
                kb.rbox.append(K.RoleEquiv(a, b))
        elif tag == "DisjointDataProperties":
            parts = [self._crole(c) for c in kids]
            for i in range(len(parts)):
                for j in range(i + 1, len(parts)):
                    kb.rbox.append(K.RoleDisjoint(parts[i], parts[j]))
        elif tag == "DatatypeDefinition":
            name = self._name_of(kids[0])
            self.declared_datatypes.add(name)
            kb.dmap.add_datatype(name)
            kb.tbox.append(K.DataEquiv(K.datatype(name), self._data_range(kids[1])))
        elif tag == "ClassAssertion":
            c = self._concept(kids[0])
            a = self._entity(kids[1], "individual")
            kb.abox.append(K.InstanceOf(a, c))
        elif tag == "ObjectPropertyAssertion":
            role = self._arole(kids[0])
            a = self._entity(kids[1], "individual")
            b = self._entity(kids[2], "individual")
            kb.abox.append(K.RelatedVia(a, b, role))
        elif tag == "DataPropertyAssertion":
            role = self._crole(kids[0])
            a = self._entity(kids[1], "individual")
            value = self._literal(kids[2])
            kb.abox.append(K.HasDataValue(a, value, role))
        elif tag == "SameIndividual":
            names = [self._entity(c, "individual") for c in kids]
            for a, b in zip(names, names[1:]):
                kb.abox.append(K.SameAs(a, b))
        elif tag == "DifferentIndividuals":
            names = [self._entity(c, "individual") for c in kids]
            for i in range(len(names)):
                for j in range(i + 1, len(names)):
                    kb.abox.append(K.DifferentFrom(names[i], names[j]))
        elif tag == "Import":
            raise UnsupportedAxiom(tag, f"imports are not resolved ({self.where})")
        else:
            raise UnsupportedAxiom(tag, f"no image in the fragment ({self.where})")

    # -- driver ----------------------------------------------------------

    def read(self, document: str) -> KnowledgeBase:
        try:
            root = ET.fromstring(document)
        except ET.ParseError as exc:
            line = exc.position[0] if exc.position else None
            raise XmlError(str(exc), line) from exc
        if _local(root.tag) != "Ontology":
            raise XmlError(f"root element is {_local(root.tag)}, expected Ontology")
        for el in root:
            tag = _local(el.tag)
            if tag == "Prefix":
                self.prefixes[el.get("name", "")] = el.get("IRI", "")
            elif tag == "Declaration":
                inner = next(iter(el), None)
                if inner is None:
                    continue
                kind = _local(inner.tag)
                if kind in _DECL_CATEGORY:
                    name = self._name_of(inner)
                    self.declared[_DECL_CATEGORY[kind]].add(name)
                    self.kb.declare(_DECL_CATEGORY[kind], name)
                elif kind == "Datatype":
                    name = self._name_of(inner)
                    self.declared_datatypes.add(name)
                    self.kb.dmap.add_datatype(name)
                # annotation property declarations carry no statement content
        for idx, el in enumerate(root, start=1):
            tag = _local(el.tag)
            if tag in _IGNORED:
                continue
            self.where = f"axiom #{idx}"
            self._axiom(el)
        return self.kb


def read_owlxml(document: str, strict_declarations: bool = False) -> KnowledgeBase:
    """Parse an OWL/XML document into a KnowledgeBase.

    Raises XmlError for malformed XML, UnsupportedAxiom for OWL constructs
    with no image in the fragment, and UnknownName for undeclared references
    when strict_declarations is set.
    """
    return _Reader(strict_declarations).read(document)


# ---------------------------------------------------------------------------
# writer
# ---------------------------------------------------------------------------


def _q(tag: str) -> str:
    return f"{{{OWL_NS}}}{tag}"


class _Writer:
    def __init__(self, kb: KnowledgeBase):
        self.kb = kb

    def _named(self, tag: str, name: str) -> ET.Element:
        el = ET.Element(_q(tag))
        el.set("IRI", f"#{name}")
        return el

    def _concept_el(self, t: Term) -> ET.Element:
        if t.op == "concept":
            return self._named("Class", t.name)
        if t.op == "top":
            return self._named("Class", "Thing")
        if t.op == "bot":
            return self._named("Class", "Nothing")
        if t.op == "not":
            el = ET.Element(_q("ObjectComplementOf"))
            el.append(self._concept_el(t.args[0]))
            return el
        if t.op in ("and", "or"):
            tag = "ObjectIntersectionOf" if t.op == "and" else "ObjectUnionOf"
            el = ET.Element(_q(tag))
            el.append(self._concept_el(t.args[0]))
            el.append(self._concept_el(t.args[1]))
            return el
        if t.op == "nominal":
            el = ET.Element(_q("ObjectOneOf"))
            el.append(self._named("NamedIndividual", t.name))
            return el
        if t.op == "has_self":
            el = ET.Element(_q("ObjectHasSelf"))
            el.append(self._arole_el(t.args[0]))
            return el
        if t.op == "has_value":
            el = ET.Element(_q("ObjectHasValue"))
            el.append(self._arole_el(t.args[0]))
            el.append(self._named("NamedIndividual", t.name))
            return el
        if t.op == "data_has_value":
            el = ET.Element(_q("DataHasValue"))
            el.append(self._crole_el(t.args[0]))
            el.append(self._literal_el(t.constants[0]))
            return el
        if t.op in _RESTRICTIONS:
            return self._restriction_el(t)
        raise ValueError(f"term {t.op} has no OWL/XML rendering")

    def _restriction_el(self, t: Term) -> ET.Element:
        role, filler = t.args
        concrete = K.kind_of(role) == "crole"
        names = {
            ("exists", False): "ObjectSomeValuesFrom",
            ("forall", False): "ObjectAllValuesFrom",
            ("min_card", False): "ObjectMinCardinality",
            ("max_card", False): "ObjectMaxCardinality",
            ("exists", True): "DataSomeValuesFrom",
            ("forall", True): "DataAllValuesFrom",
            ("min_card", True): "DataMinCardinality",
            ("max_card", True): "DataMaxCardinality",
        }
        el = ET.Element(_q(names[(t.op, concrete)]))
        if t.op in ("min_card", "max_card"):
            el.set("cardinality", str(t.n))
        el.append(self._crole_el(role) if concrete else self._arole_el(role))
        el.append(self._data_el(filler) if concrete else self._concept_el(filler))
        return el

    def _arole_el(self, t: Term) -> ET.Element:
        if t.op == "arole":
            return self._named("ObjectProperty", t.name)
        if t.op == "universal_role":
            return self._named("ObjectProperty", "topObjectProperty")
        if t.op == "inverse":
            el = ET.Element(_q("ObjectInverseOf"))
            el.append(self._arole_el(t.args[0]))
            return el
        raise ValueError(f"role term {t.op} has no OWL/XML rendering")

    def _crole_el(self, t: Term) -> ET.Element:
        if t.op == "crole":
            return self._named("DataProperty", t.name)
        raise ValueError(f"data role term {t.op} has no OWL/XML rendering")

    def _data_el(self, t: Term) -> ET.Element:
        if t.op == "datatype":
            return self._named("Datatype", t.name)
        if t.op == "data_enum":
            el = ET.Element(_q("DataOneOf"))
            for c in t.constants:
                el.append(self._literal_el(c))
            return el
        if t.op == "not":
            el = ET.Element(_q("DataComplementOf"))
            el.append(self._data_el(t.args[0]))
            return el
        if t.op in ("and", "or"):
            tag = "DataIntersectionOf" if t.op == "and" else "DataUnionOf"
            el = ET.Element(_q(tag))
            el.append(self._data_el(t.args[0]))
            el.append(self._data_el(t.args[1]))
            return el
        raise ValueError(f"data term {t.op} has no OWL/XML rendering")

    def _literal_el(self, c: Constant) -> ET.Element:
        el = ET.Element(_q("Literal"))
        el.set("datatypeIRI", f"#{c.datatype}")
        el.text = c.lexeme
        return el

    def _trait_el(self, stmt: K.RoleTrait) -> ET.Element:
        role = stmt.role
        if K.kind_of(role) == "crole":
            if stmt.trait != "fun":
                raise ValueError("concrete roles only support the functional trait")
            el = ET.Element(_q("FunctionalDataProperty"))
            el.append(self._crole_el(role))
            return el
        if stmt.trait == "fun" and role.op == "inverse":
            el = ET.Element(_q("InverseFunctionalObjectProperty"))
            el.append(self._arole_el(role.args[0]))
            return el
        by_trait = {v: k for k, v in _TRAIT_ELEMENTS.items()}
        el = ET.Element(_q(by_trait[stmt.trait]))
        el.append(self._arole_el(role))
        return el

    def _statement_el(self, stmt: K.Statement) -> ET.Element:
        if isinstance(stmt, K.ConceptSub):
            el = ET.Element(_q("SubClassOf"))
            el.append(self._concept_el(stmt.left))
            el.append(self._concept_el(stmt.right))
            return el
        if isinstance(stmt, K.ConceptEquiv):
            el = ET.Element(_q("EquivalentClasses"))
            el.append(self._concept_el(stmt.left))
            el.append(self._concept_el(stmt.right))
            return el
        if isinstance(stmt, K.DataEquiv):
            if stmt.left.op != "datatype":
                raise ValueError("only a named datatype can head a DatatypeDefinition")
            el = ET.Element(_q("DatatypeDefinition"))
            el.append(self._named("Datatype", stmt.left.name))
            el.append(self._data_el(stmt.right))
            return el
        if isinstance(stmt, K.RoleSub):
            if K.kind_of(stmt.left) == "crole":
                el = ET.Element(_q("SubDataPropertyOf"))
                el.append(self._crole_el(stmt.left))
                el.append(self._crole_el(stmt.right))
            else:
                el = ET.Element(_q("SubObjectPropertyOf"))
                el.append(self._arole_el(stmt.left))
                el.append(self._arole_el(stmt.right))
            return el
        if isinstance(stmt, K.RoleEquiv):
            if K.kind_of(stmt.left) == "crole":
                el = ET.Element(_q("EquivalentDataProperties"))
                el.append(self._crole_el(stmt.left))
                el.append(self._crole_el(stmt.right))
            else:
                el = ET.Element(_q("EquivalentObjectProperties"))
                el.append(self._arole_el(stmt.left))
                el.append(self._arole_el(stmt.right))
            return el
        if isinstance(stmt, K.RoleChain):
            el = ET.Element(_q("SubObjectPropertyOf"))
            chain = ET.Element(_q("ObjectPropertyChain"))
            for r in stmt.chain:
                chain.append(self._arole_el(r))
            el.append(chain)
            el.append(self._arole_el(stmt.super_role))
            return el
        if isinstance(stmt, K.RoleTrait):
            return self._trait_el(stmt)
        if isinstance(stmt, K.RoleDisjoint):
            if K.kind_of(stmt.left) == "crole":
                el = ET.Element(_q("DisjointDataProperties"))
                el.append(self._crole_el(stmt.left))
                el.append(self._crole_el(stmt.right))
            else:
                el = ET.Element(_q("DisjointObjectProperties"))
                el.append(self._arole_el(stmt.left))
                el.append(self._arole_el(stmt.right))
            return el
        if isinstance(stmt, K.InstanceOf):
            el = ET.Element(_q("ClassAssertion"))
            el.append(self._concept_el(stmt.concept))
            el.append(self._named("NamedIndividual", stmt.individual))
            return el
        if isinstance(stmt, K.RelatedVia):
            el = ET.Element(_q("ObjectPropertyAssertion"))
            el.append(self._arole_el(stmt.role))
            el.append(self._named("NamedIndividual", stmt.subject))
            el.append(self._named("NamedIndividual", stmt.target))
            return el
        if isinstance(stmt, K.HasDataValue):
            el = ET.Element(_q("DataPropertyAssertion"))
            el.append(self._crole_el(stmt.role))
            el.append(self._named("NamedIndividual", stmt.subject))
            el.append(self._literal_el(stmt.value))
            return el
        if isinstance(stmt, K.SameAs):
            el = ET.Element(_q("SameIndividual"))
            el.append(self._named("NamedIndividual", stmt.left))
            el.append(self._named("NamedIndividual", stmt.right))
            return el
        if isinstance(stmt, K.DifferentFrom):
            el = ET.Element(_q("DifferentIndividuals"))
            el.append(self._named("NamedIndividual", stmt.left))
            el.append(self._named("NamedIndividual", stmt.right))
            return el
        raise ValueError(f"{type(stmt).__name__} has no OWL/XML rendering")

    def write(self) -> str:
        root = ET.Element(_q("Ontology"))
        root.set("ontologyIRI", "#kb")
        for name in self.kb.concepts:
            d = ET.SubElement(root, _q("Declaration"))
            d.append(self._named("Class", name))
        for name in self.kb.abstract_roles:
            d = ET.SubElement(root, _q("Declaration"))
            d.append(self._named("ObjectProperty", name))
        for name in self.kb.concrete_roles:
            d = ET.SubElement(root, _q("Declaration"))
            d.append(self._named("DataProperty", name))
        for name in self.kb.individuals:
            d = ET.SubElement(root, _q("Declaration"))
            d.append(self._named("NamedIndividual", name))
        for name in self.kb.dmap.datatypes:
            d = ET.SubElement(root, _q("Declaration"))
            d.append(self._named("Datatype", name))
        for stmt in self.kb.statements():
            root.append(self._statement_el(stmt))
        ET.register_namespace("", OWL_NS)
        ET.indent(root)
        return ET.tostring(root, encoding="unicode", xml_declaration=True)


def write_owlxml(kb: KnowledgeBase) -> str:
    """Serialize a KnowledgeBase to OWL/XML; ValueError on unserializable parts."""
    return _Writer(kb).write()
