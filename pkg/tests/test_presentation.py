import itertools

import pytest
from hypothesis import given, settings

from abelcover.errors import EmptyMatrixError, InvalidModulusError, ValidationError
from abelcover.flat import genus
from abelcover.hodge import spectrum
from abelcover.modspan import ResidueVector
from abelcover.presentation import (
    M,
    column_span,
    covers,
    degree,
    isomorphic,
    row_span,
    scaled,
    validate,
)

from conftest import presentations, random_presentation


def entries(S):
    return [v.entries for v in S]


def test_validate_accepts_zero_sum_rows():
    P = validate(4, [[1, 1, 1, 1]])
    assert P.N == 4 and P.A == ((1, 1, 1, 1),)
    assert validate(2, [[0, 0, 0, 0]]).A == ((0, 0, 0, 0),)


def test_validate_reduces_entries():
    assert validate(3, [[4, -1, 5, 1]]).A == ((1, 2, 2, 1),)


def test_validate_names_offending_row():
    with pytest.raises(ValidationError, match="row 0 sums to 1 mod 3") as info:
        validate(3, [[1, 1, 1, 1]])
    assert info.value.row == 0
    with pytest.raises(ValidationError, match="row 1"):
        validate(4, [[1, 1, 1, 1], [1, 0, 0, 0]])


def test_validate_modulus_and_shape():
    with pytest.raises(InvalidModulusError):
        validate(0, [[0, 0, 0, 0]])
    with pytest.raises(EmptyMatrixError):
        validate(3, [])
    with pytest.raises(ValidationError):
        validate(3, [[1, 2, 0]])


def test_trivial_modulus_is_allowed():
    P = validate(1, [[5, 3, 2, 7]])
    assert degree(P) == 1 and genus(P) == 0


def test_row_span_examples():
    assert entries(row_span(M(4, [[1, 1, 1, 1]]))) == [(k,) * 4 for k in range(4)]
    assert entries(row_span(M(2, [[0, 0, 0, 0]]))) == [(0,) * 4]
    S = row_span(M(2, [[1, 1, 0, 0], [0, 1, 1, 0]]))
    assert len(S) == 4 and ResidueVector(2, (1, 0, 1, 0)) in S


def test_column_span_examples():
    assert entries(column_span(M(4, [[1, 1, 1, 1]]))) == [(0,), (1,), (2,), (3,)]
    assert entries(column_span(M(2, [[1, 1, 0, 0], [0, 1, 1, 0]]))) == [
        (0, 0), (0, 1), (1, 0), (1, 1)]
    assert entries(column_span(M(2, [[0, 0, 0, 0]]))) == [(0,)]


@pytest.mark.parametrize("N, A, d", [
    (4, [[1, 1, 1, 1]], 4),
    (2, [[0, 0, 0, 0]], 1),
    (2, [[1, 1, 0, 0], [0, 1, 1, 0]], 4),
])
def test_degree(N, A, d):
    assert degree(M(N, A)) == d


def test_covers_examples():
    big, small = M(4, [[1, 1, 1, 1]]), M(2, [[1, 1, 1, 1]])
    assert covers(big, small)
    assert not covers(small, big)
    assert covers(big, big)


def test_isomorphic_examples():
    assert isomorphic(M(2, [[1, 1, 1, 1]]), M(4, [[2, 2, 2, 2]]))
    assert not isomorphic(M(2, [[1, 1, 1, 1]]), M(4, [[1, 1, 1, 1]]))
    P = M(3, [[1, 1, 2, 2]])
    assert isomorphic(P, P)


def _zero_sum_rows(N):
    for head in itertools.product(range(N), repeat=3):
        yield head + (-sum(head) % N,)


@pytest.mark.parametrize("N", range(1, 7))
def test_span_sizes_agree_exhaustively(N):
    rows = list(_zero_sum_rows(N))
    for r in rows:
        P = validate(N, [r])
        assert len(row_span(P)) == len(column_span(P))
    pairs = itertools.combinations_with_replacement(rows, 2)
    for r1, r2 in pairs:
        P = validate(N, [r1, r2])
        assert len(row_span(P)) == len(column_span(P))


@settings(max_examples=200, deadline=None)
@given(presentations())
def test_row_span_elements_sum_to_zero(P):
    assert all(sum(v.entries) % P.N == 0 for v in row_span(P))
    assert degree(P) == len(row_span(P))


def test_covers_is_a_preorder(rng):
    sample = [random_presentation(rng, max_n=6, max_m=2) for _ in range(40)]
    for P in sample:
        assert covers(P, P)
    for P, Q, R in itertools.islice(itertools.product(sample, repeat=3), 4000):
        if covers(P, Q) and covers(Q, R):
            assert covers(P, R)
    for P, Q in itertools.product(sample, repeat=2):
        assert (covers(P, Q) and covers(Q, P)) == isomorphic(P, Q)


def test_covers_transitivity_on_chains(rng):
    # Random triples rarely form chains; build them by adding rows.
    for _ in range(50):
        R = random_presentation(rng, max_n=6, max_m=1)
        Q = validate(R.N, list(R.A) + [random_row(rng, R.N)])
        P = validate(Q.N, list(Q.A) + [random_row(rng, Q.N)])
        assert covers(P, Q) and covers(Q, R) and covers(P, R)
        k = rng.randint(2, 3)
        assert covers(scaled(P, k), R) and covers(P, scaled(R, k))


def random_row(rng, N):
    head = [rng.randrange(N) for _ in range(3)]
    return head + [-sum(head) % N]


@settings(max_examples=100, deadline=None)
@given(presentations(max_n=8, max_m=2))
def test_scaling_preserves_the_cover(P):
    for k in (2, 3):
        Q = scaled(P, k)
        assert isomorphic(P, Q)
        assert degree(P) == degree(Q)
        assert genus(P) == genus(Q)
        assert spectrum(P).entries == spectrum(Q).entries
