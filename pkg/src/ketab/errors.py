"""Exception types shared across the reasoner pipeline."""

from __future__ import annotations


class KetabError(Exception):
    """Base class for all errors raised by this package."""


class MalformedCoding(KetabError):
    """A coded string could not be decoded.

    position is the character offset at which decoding failed, expected
    describes the token class that would have been legal there.
    """

    def __init__(self, position: int, expected: str):
        self.position = position
        self.expected = expected
        super().__init__(f"at offset {position}: expected {expected}")


class XmlError(KetabError):
    """The input document is not well-formed XML or lacks an ontology root."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"{message}{where}")


class UnsupportedAxiom(KetabError):
    """An axiom or construct falls outside the supported fragment."""

    def __init__(self, construct: str, detail: str = ""):
        self.construct = construct
        msg = construct if not detail else f"{construct}: {detail}"
        super().__init__(msg)


class UnknownName(KetabError):
    """A referenced name has no declaration and auto-declaration is off."""


class InvalidStatement(KetabError):
    """A statement mixes term kinds or breaks the fragment grammar."""


class NotAConcept(InvalidStatement):
    """A concept position holds a role or datatype term."""


class NotARole(InvalidStatement):
    """A role position holds a concept or datatype term."""


class ResourceLimit(KetabError):
    """A configured size cap was exceeded."""

    def __init__(self, what: str, limit: int, needed: int):
        self.what = what
        self.limit = limit
        self.needed = needed
        super().__init__(f"{what}: needed {needed}, limit {limit}")


class PreconditionViolated(KetabError):
    """A tableau rule was invoked on a branch that does not license it."""
