from fractions import Fraction

import pytest

from bitrades import corpus

# regular subdivision of the outer triangle into 16 cells; interior grid
# vertices such as (1/4, 1/4) lie on six triangle corners
GRID16_LINES = [
    (Fraction(i, 4), Fraction(j, 4), Fraction(i + j + 1, 4))
    for i in range(4)
    for j in range(4)
    if i + j <= 3
] + [
    (Fraction(i, 4), Fraction(j, 4), Fraction(i + j - 1, 4))
    for i in range(1, 4)
    for j in range(1, 4)
    if i + j <= 4
]


@pytest.fixture(scope="session")
def intercalate():
    return corpus.intercalate()


@pytest.fixture(scope="session")
def ex45():
    return corpus.example_4x5()


@pytest.fixture(scope="session")
def toroidal():
    return corpus.toroidal()


@pytest.fixture(scope="session")
def toroidal_swapped():
    return corpus.toroidal_swapped()


@pytest.fixture(scope="session")
def nested():
    return corpus.nested_intercalate()


@pytest.fixture(scope="session")
def spherical_corpus(intercalate, ex45, nested):
    return {
        "intercalate": intercalate,
        "ex45": ex45,
        "nested": nested.bitrade,
    }


@pytest.fixture(scope="session")
def corpus_dir(tmp_path_factory, intercalate, ex45, toroidal, toroidal_swapped, nested):
    from bitrades import jsonio

    d = tmp_path_factory.mktemp("corpus")
    jsonio.dump(intercalate, d / "intercalate.json")
    jsonio.dump(ex45, d / "ex45.json")
    jsonio.dump(toroidal, d / "toroidal.json")
    jsonio.dump(toroidal_swapped, d / "toroidal_swapped.json")
    jsonio.dump(nested.bitrade, d / "nested.json")
    return d


def triple_by_names(T, r, c, s):
    return next(t for t in T.star if t.names() == (r, c, s))
