# --- tests/test_cohomology.py ---

import pytest

from aug_cohomology.algebras.algebra import Algebra
from aug_cohomology.algebras.morphism import from_generators
from aug_cohomology.cohomology.ext import bar_ext_dims, ext_functor, ext_groups, ext_ring, tensored_ext_dims
from aug_cohomology.cohomology.hochschild import hh_complex, hh_groups, phi_k
from aug_cohomology.cohomology.ring_table import GradedRingTable, polynomial_table, truncated_table
from aug_cohomology.core.scalars import FieldSpec
from aug_cohomology.harness.registry import build_example, gf3_triple, trunc_poly
from aug_cohomology.resolutions.bar import bar_resolution
from aug_cohomology.resolutions.minimal import minimal_bimodule_resolution


@pytest.mark.parametrize("r", [2, 3, 4])
def test_ext_of_truncated_polynomials(qq, r):
    """Testa dim E^n(k[x]/x^r) = 1 para n ≤ 4."""
    assert ext_groups(trunc_poly(qq, r), 4) == [1, 1, 1, 1, 1]


def test_ext_ring_of_dual_numbers_is_polynomial(dual_x):
    """Testa E(k[x]/x²) = k[a]: todas as potências de a são não nulas."""
    table = ext_ring(dual_x, 4)
    assert table.check_associative().passed
    for k in range(2, 5):
        degree, power = table.power(1, {0: 1}, k)
        assert degree == k
        assert power


@pytest.mark.parametrize("r", [3, 4])
def test_ext_ring_degree_one_squares_to_zero(qq, r):
    """Testa a² = 0 e a·b ≠ 0, b² ≠ 0 em E(k[x]/x^r) para r ≥ 3."""
    table = ext_ring(trunc_poly(qq, r), 4)
    assert not table.basis_product(1, 0, 1, 0)
    assert table.basis_product(1, 0, 2, 0)
    assert table.basis_product(2, 0, 2, 0)
    assert table.check_associative().passed
    assert table.check_graded_commutative().passed


@pytest.mark.parametrize("spec, char, n_max", [
    ("trunc-poly:2", 0, 4),
    ("trunc-poly:3", 0, 4),
    ("trunc-poly:4", 0, 4),
    ("rad-square-zero:2", 0, 4),
    # a bar de dimensão 5 tem 5^5 geradores em grau 5
    ("gf3-triple", 3, 3),
])
def test_ext_agrees_with_bar_oracle(spec, char, n_max):
    """Testa o oráculo independente da resolução bar e a via P ⊗_Λ k nos exemplos do registo."""
    a = build_example(spec, FieldSpec(char))
    expected = ext_groups(a, n_max)
    assert bar_ext_dims(a, n_max) == expected
    assert tensored_ext_dims(minimal_bimodule_resolution(a, n_max + 1), n_max) == expected


def test_ext_of_gf3_triple_is_powers_of_three(gf3):
    """Testa dim E^n(k[a]/a³ * k[b]/b² * k[c]/c²) = 3^n sobre GF(3)."""
    assert ext_groups(gf3_triple(gf3), 4) == [1, 3, 9, 27, 81]


def test_ext_functor_kills_degree_one_for_square_map(dual_x, quartic_x):
    """Testa x ↦ x² de k[x]/x² em k[x]/x⁴: E(f) nulo em grau 1 e morfismo de anéis."""
    x2 = quartic_x.component(2)[0]
    f = from_generators(dual_x, quartic_x, {1: {x2: 1}}, name="x↦x²")
    functor = ext_functor(f, 3)
    assert functor.is_zero_in(1)
    assert not functor.is_zero_in(0)
    assert functor.report.passed


def test_ext_functor_of_quotient_map(cubic_x, dual_x):
    """Testa x ↦ x de k[x]/x³ em k[x]/x²: isomorfismo em grau 1, a² ↦ 0 em grau 2, logo não injetivo."""
    f = from_generators(cubic_x, dual_x, {1: {1: 1}}, name="x↦x")
    functor = ext_functor(f, 3)
    assert functor.report.passed
    assert functor.report.tables["ranks"][:3] == [1, 1, 0]
    # E¹ = (I/I²)* e x ↦ x é bijetiva em I/I²
    assert not functor.is_zero_in(1)
    assert functor.is_zero_in(2)
    assert functor.target_table.dims[2] == 1


def test_hochschild_of_dual_numbers(dual_x):
    """Testa HH(k[x]/x²) sobre ℚ: dimensões (2, 1, 1, 1, 1) e φ_k nulo em grau ímpar."""
    phi = phi_k(dual_x, 4)
    assert phi.hh_table.dims == [2, 1, 1, 1, 1]
    assert hh_groups(dual_x, 4) == [2, 1, 1, 1, 1]
    assert phi.image_dims() == [1, 0, 1, 0, 1]
    for n in (1, 3):
        assert phi.is_zero_in(n)
    assert phi.ihh_dims() == [2, 1, 0, 1, 0]
    assert phi.les.exact


def test_hochschild_bar_agrees_with_minimal(dual_x):
    """Testa HH(k[x]/x²) pela resolução bar contra a resolução mínima até grau 4."""
    bar = hh_complex(dual_x, 4, res=bar_resolution(dual_x, 5))
    assert bar.dims(4) == hh_groups(dual_x, 4) == [2, 1, 1, 1, 1]


def test_hochschild_of_non_local_algebra(qq):
    """Testa k × k (e idempotente): sem resolução mínima, HH pela bar é (2, 0, 0)."""
    split = Algebra(qq, ["1", "e"], {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}, (1, 1): {1: 1}},
                    {0: 1}, {0: 1}, name="k×k")
    assert split.nilpotency_index() is None
    assert hh_groups(split, 2) == [2, 0, 0]


def test_hochschild_ring_relations_of_dual_numbers(dual_x):
    """Testa as relações x² = u² = xu = xv = 0 de HH(k[x]/x²), com uv e v² não nulos."""
    phi = phi_k(dual_x, 4)
    hh = phi.hh_table
    assert phi.kernels[0].dim == 1
    z = phi.kernels[0].basis[0]
    for n in range(1, 5):
        for i in range(hh.dims[n]):
            assert hh.multiply(0, z, n, {i: 1}) == {}
    assert hh.multiply(0, z, 0, z) == {}
    u, v = {0: 1}, {0: 1}
    assert hh.multiply(1, u, 1, u) == {}
    assert hh.multiply(1, u, 2, v) != {}
    assert hh.multiply(2, v, 2, v) != {}
    assert hh.check_graded_commutative().passed


def test_phi_k_is_central_ring_map(cubic_x):
    """Testa que φ_k é morfismo de anéis com imagem no centro graduado."""
    phi = phi_k(cubic_x, 3)
    assert phi.check_ring_map().passed
    assert phi.check_central().passed


def test_twisted_generators_do_not_change_hh(cubic_x):
    """Testa que a semente de torção não altera as dimensões de HH."""
    assert hh_groups(cubic_x, 3, twist_seed=11) == hh_groups(cubic_x, 3)


def test_ring_tables_and_their_algebras(qq):
    """Testa k[a] e k[a]/a² como tabelas e a sua truncatura como álgebra graduada."""
    poly = polynomial_table(qq, 2, 6)
    assert poly.dims == [1, 0, 1, 0, 1, 0, 1]
    assert poly.power(2, {0: 1}, 3) == (6, {0: 1})
    dual = truncated_table(qq, 1, 2, 4, letter="x")
    assert dual.dims == [1, 1, 0, 0, 0]
    alg = dual.to_algebra(name="dual")
    assert alg.dim == 2
    back = GradedRingTable.from_doc(poly.to_doc())
    assert back.dims == poly.dims
    assert back.basis_product(2, 0, 4, 0) == {0: 1}


def test_dual_numbers_pattern_in_ring_tables(qq, dual_x):
    """Testa o reconhecimento de k[x]/x² em tabelas, com x em grau 1 ou 2."""
    assert truncated_table(qq, 1, 2, 4, letter="x").looks_like_dual_numbers()
    assert truncated_table(qq, 2, 2, 4, letter="x").looks_like_dual_numbers()
    # x² fica para lá do corte
    assert not truncated_table(qq, 2, 2, 3, letter="x").looks_like_dual_numbers()
    assert not truncated_table(qq, 1, 3, 4, letter="x").looks_like_dual_numbers()
    assert not polynomial_table(qq, 2, 6).looks_like_dual_numbers()
    assert not ext_ring(dual_x, 4).looks_like_dual_numbers()
