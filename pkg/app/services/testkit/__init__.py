__all__ = (
    "corpus_from_spec",
    "inject_fault",
    "make_fixture",
    "markup_document",
    "oracle_pairs",
    "random_spec",
    "render_audio",
    "tone",
)

from .faults import inject_fault
from .fixtures import (
    corpus_from_spec,
    make_fixture,
    markup_document,
    render_audio,
    tone,
)
from .generator import random_spec
from .oracle import oracle_pairs
