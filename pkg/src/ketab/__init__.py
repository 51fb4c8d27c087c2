"""Consistency reasoner for a set-theoretically translatable DL fragment."""

from .engine import Verdict, decide, run_pipeline
from .errors import KetabError
from .kb import KnowledgeBase, validate_fragment
from .owlxml import read_owlxml, write_owlxml

__version__ = "0.1.0"

__all__ = [
    "KetabError",
    "KnowledgeBase",
    "Verdict",
    "decide",
    "read_owlxml",
    "run_pipeline",
    "validate_fragment",
    "write_owlxml",
    "__version__",
]
