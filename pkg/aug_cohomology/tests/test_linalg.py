# --- tests/test_linalg.py ---

from fractions import Fraction

import pytest

from aug_cohomology.core.errors import DimensionMismatch, FieldMismatch, NoSolution
from aug_cohomology.core.linalg import (
    Matrix,
    QuotientSpace,
    Solver,
    Subspace,
    block_kernel,
    kernel_basis,
    rref,
    solve,
)
from aug_cohomology.core.scalars import FieldSpec


def _random_matrix(field, rng, nrows: int, ncols: int) -> Matrix:
    rows = rng.integers(-3, 4, size=(nrows, ncols)).tolist()
    return Matrix.from_rows(field, rows)


@pytest.mark.parametrize("char", [0, 2, 3, 7])
def test_rank_nullity_on_random_matrices(char, rng):
    """Testa posto + nulidade = número de colunas e que o núcleo é mesmo anulado."""
    field = FieldSpec(char)
    for _ in range(20):
        m = _random_matrix(field, rng, int(rng.integers(1, 7)), int(rng.integers(1, 8)))
        kernel = kernel_basis(m)
        assert m.rank() + kernel.dim == m.ncols
        for v in kernel.basis:
            assert m.apply(v) == {}


@pytest.mark.parametrize("char", [0, 5])
def test_rref_is_idempotent_and_preserves_rank(char, rng):
    """Testa rref(rref(M)) = rref(M) e que o posto não muda."""
    field = FieldSpec(char)
    for _ in range(10):
        m = _random_matrix(field, rng, 5, 6)
        r = rref(m)
        assert rref(r) == r
        assert r.rank() == m.rank()
        assert (r.nrows, r.ncols) == (m.nrows, m.ncols)


def test_rational_arithmetic_is_exact(qq):
    """Testa que a eliminação sobre ℚ não perde precisão."""
    m = Matrix.from_rows(qq, [[3, 1], [1, Fraction(1, 3)]])
    assert m.rank() == 1
    x = Solver(Matrix.from_rows(qq, [[3, 0], [0, 7]])).solve_vector({0: 1, 1: 1})
    assert x == {0: Fraction(1, 3), 1: Fraction(1, 7)}


def test_solve_raises_when_inconsistent(gf3):
    """Testa NoSolution para b fora da imagem e a solução particular no caso consistente."""
    a = Matrix.from_rows(gf3, [[1, 1], [2, 2]])
    with pytest.raises(NoSolution):
        Solver(a).solve_vector({0: 1})
    b = Matrix.from_rows(gf3, [[1], [2]])
    x = solve(a, b)
    assert a @ x == b


def test_field_rejects_non_prime_characteristic():
    """Testa que só ℚ e GF(p) são aceites."""
    with pytest.raises(FieldMismatch):
        FieldSpec(4)
    assert FieldSpec(7).coerce(Fraction(1, 2)) == 4
    assert FieldSpec(0).to_json(Fraction(-2, 4)) == "-1/2"


def test_subspace_sum_and_intersection(qq):
    """Testa dim(U+V) + dim(U∩V) = dim U + dim V."""
    u = Subspace(qq, 4, [{0: 1}, {1: 1, 2: 1}])
    v = Subspace(qq, 4, [{1: 1}, {2: 1}])
    total, meet = u.sum(v), u.intersection(v)
    assert total.dim == 3
    assert meet.dim == 1
    assert meet.contains({1: 1, 2: 1})
    assert total.dim + meet.dim == u.dim + v.dim
    assert u.sum(v) == v.sum(u)


def test_quotient_space_coordinates_round_trip(qq):
    """Testa que o representante de uma classe volta às mesmas coordenadas."""
    top = Subspace.full(qq, 3)
    bottom = Subspace(qq, 3, [{0: 1, 1: 1}])
    q = QuotientSpace(top, bottom)
    assert q.dim == 2
    assert q.is_zero({0: 2, 1: 2})
    z = q.representative([1, 5])
    assert q.coordinates(z) == [1, 5]
    assert q.canonical({0: 1}) == q.canonical({1: -1})


def test_block_kernel_matches_kernel(qq):
    """Testa o núcleo por blocos de grau contra o núcleo direto."""
    m = Matrix.from_rows(qq, [[1, 0, 0, 0], [0, 1, 1, 0], [0, 2, 2, 0]])
    blocks = block_kernel(m, [0, 1, 1, 2], [0, 1, 1])
    assert Subspace(qq, 4, blocks) == kernel_basis(m)
    assert len(blocks) == 2
    with pytest.raises(DimensionMismatch):
        block_kernel(m, [0, 0, 1, 2], [0, 1, 1])
