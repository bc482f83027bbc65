import pytest

from gajwb import PrimeField, RATIONALS, Representation, corpus_entry, parse_document
from gajwb.corpus import raw_corpus_entry


@pytest.fixture
def F():
    return RATIONALS


@pytest.fixture
def F5():
    return PrimeField(5)


def algebra_over(name, field=None):
    """Corpus algebra reparsed over an optional field override."""
    doc = parse_document(raw_corpus_entry(name), field_override=field)
    return doc.algebra


def document_over(name, field=None):
    return parse_document(raw_corpus_entry(name), field_override=field)


@pytest.fixture
def sqrt_idem():
    return algebra_over("sqrt-idempotent")


@pytest.fixture
def shifted_root():
    return algebra_over("shifted-root")


@pytest.fixture
def local_unit():
    return algebra_over("local-unit")


@pytest.fixture
def split_idem():
    return algebra_over("split-idempotents")


@pytest.fixture
def plane_module_doc():
    """The two-dimensional irreducible module instance."""
    return corpus_entry("irreducible-plane")


def regular_rep(algebra):
    return Representation.regular(algebra)
