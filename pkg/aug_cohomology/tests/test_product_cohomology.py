# --- tests/test_product_cohomology.py ---

import pytest

from aug_cohomology.core.scalars import FieldSpec
from aug_cohomology.harness.registry import build_example, rad_square_zero
from aug_cohomology.product_cohomology.decomposition import additive_decomposition, decompose, hoch_prod_check
from aug_cohomology.product_cohomology.les import les_check, les_product
from aug_cohomology.product_cohomology.theorems import (
    free_product_dims,
    les_exact_check,
    main_theo_check,
    nilp_check,
    phi_k_centre_check,
    ss_nilpotence_check,
)


def test_free_product_dims():
    """Testa a contagem de palavras alternadas de R⊔S."""
    assert free_product_dims([1, 1, 1, 1], [1, 1, 1, 1], 3) == [1, 2, 4, 8]
    assert free_product_dims([1, 1, 0, 0], [1, 1, 0, 0], 3) == [1, 2, 2, 2]
    assert free_product_dims([1, 1, 1], [1, 0, 0], 2) == [1, 1, 1]


def test_main_theorem_for_dual_numbers(dual_x, dual_y):
    """Testa E(k[x]/x² * k[y]/y²) com dimensões (1, 2, 4, 8, 16)."""
    report = main_theo_check(dual_x, dual_y, 4)
    assert report.passed, report.witnesses[:3]
    assert report.tables["via_psq"] == [1, 2, 4, 8, 16]
    assert report.tables["oracle"] == [1, 2, 4, 8, 16]
    assert report.tables["alternating_words"] == [1, 2, 4, 8, 16]


def test_main_theorem_for_mixed_pair(cubic_x, dual_y):
    """Testa E(k[x]/x³ * k[y]/y²) contra E(k[x]/x³) ⊔ E(k[y]/y²)."""
    report = main_theo_check(cubic_x, dual_y, 4)
    assert report.passed, report.witnesses[:3]
    assert report.tables["free_product"] == [1, 2, 4, 8, 16]


def test_long_exact_sequence_of_product(dual_x, dual_y):
    """Testa a exatidão da sucessão Hom(E) → HH → Hom(P̄*Q̄) e HH^0 = Z(Λ)*Z(Γ)."""
    les = les_product(dual_x, dual_y, 4)
    report = les_check(les)
    assert report.passed, report.witnesses[:3]
    assert les.hh_dims()[0] == 3
    assert les_exact_check(dual_x, dual_y, 4).passed


@pytest.mark.parametrize("left, right, char", [
    ("trunc-poly:4:x", "trunc-poly:2:y", 0),
    ("rad-square-zero:2", "trunc-poly:2:y", 0),
    ("product(trunc-poly:3:a,trunc-poly:2:b)", "trunc-poly:2:c", 3),
])
def test_main_theorem_on_registry_pairs(left, right, char):
    """Testa E(Λ*Γ) = E(Λ)⊔E(Γ) até grau 4 nos exemplos do registo (o último é gf3-triple)."""
    field = FieldSpec(char)
    a, b = build_example(left, field), build_example(right, field)
    report = main_theo_check(a, b, 4)
    assert report.passed, report.witnesses[:3]
    assert report.tables["via_psq"] == report.tables["oracle"] == report.tables["free_product"]


@pytest.mark.parametrize("left, right", [("cubic_x", "dual_y"), ("cubic_x", "cubic_y")])
def test_long_exact_sequence_of_larger_products(request, left, right):
    """Testa a sucessão exata longa de Λ*Γ até grau 4."""
    a, b = request.getfixturevalue(left), request.getfixturevalue(right)
    report = les_check(les_product(a, b, 4))
    assert report.passed, report.witnesses[:3]
    assert les_exact_check(a, b, 4).passed


@pytest.mark.parametrize("left, right", [("dual_x", "dual_y"), ("cubic_x", "dual_y"), ("cubic_x", "cubic_y")])
def test_additive_decomposition(request, left, right):
    """Testa que as cópias explícitas e R somam a dimensão calculada por força bruta."""
    a, b = request.getfixturevalue(left), request.getfixturevalue(right)
    decomp = decompose(a, b, 4)
    assert decomp.report.passed, decomp.report.witnesses[:3]
    assert decomp.record.ok
    assert decomp.report.tables["computed"] == decomp.report.tables["brute_force"]
    row0 = decomp.record.rows[0]
    assert row0.total == a.center().dim + b.center().dim - 1


def test_additive_decomposition_record(dual_x, dual_y):
    """Testa o registo por grau devolvido sem o relatório."""
    record = additive_decomposition(dual_x, dual_y, 2)
    assert [row.degree for row in record.rows] == [0, 1, 2]
    assert all(row.total == row.brute_force for row in record.rows)


@pytest.mark.parametrize("left, right", [("dual_x", "dual_y"), ("cubic_x", "dual_y"), ("cubic_x", "cubic_y")])
def test_nilpotence_in_hochschild_of_product(request, left, right):
    """Testa φ_k nulo em grau positivo e η^N = 0 em HH(Λ*Γ)."""
    a, b = request.getfixturevalue(left), request.getfixturevalue(right)
    report = nilp_check(a, b, 4)
    assert report.passed, report.witnesses[:3]
    assert report.tables["phi_ranks"][1:] == [0, 0, 0, 0]


@pytest.mark.parametrize("left, right", [("dual_x", "dual_y"), ("cubic_x", "dual_y")])
def test_hochschild_product_structure(request, left, right):
    """Testa R ideal, E⊗A a anular, c(f) multiplicativa e produtos cruzados de iHH em R."""
    a, b = request.getfixturevalue(left), request.getfixturevalue(right)
    decomp = decompose(a, b, 4)
    report = hoch_prod_check(decomp, twist_seed=7, seed=42)
    assert report.passed, report.witnesses[:3]
    for side in ("P", "Q"):
        assert report.clauses[f"c_map_{side}.multiplicative_mod_r"] is True
        assert report.clauses[f"c_map_{side}.chain_map"] is True
    assert "r_dims_agree" in report.tables


def test_phi_k_centre_on_single_algebras(qq, cubic_x):
    """Testa φ_k como morfismo de anéis central em k[x]/x³ e em rad² = 0."""
    assert phi_k_centre_check(cubic_x, 3).passed
    assert phi_k_centre_check(rad_square_zero(qq, 2), 2).passed


def test_spectral_sequence_nilpotence(cubic_x):
    """Testa ξη com imagem em I·J + J·I e a nilpotência de ker φ_k."""
    report = ss_nilpotence_check(cubic_x, 3)
    assert report.passed, report.witnesses[:3]
    assert report.tables["N"] == 3
