import pytest

from jonescheck import harness


@pytest.fixture(scope="session")
def simple_corpus_12():
    """Connected simple subcubic planar graphs, n <= 12, generated once."""
    return list(harness.generate_corpus(harness.CorpusSpec("subcubic-planar-simple", 12)))


@pytest.fixture(scope="session")
def multi_corpus_8():
    """Connected subcubic planar multigraphs, n <= 8, generated once."""
    return list(harness.generate_corpus(harness.CorpusSpec("subcubic-planar-multi", 8)))
