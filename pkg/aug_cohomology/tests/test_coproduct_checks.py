# --- tests/test_coproduct_checks.py ---

from aug_cohomology.algebras.constructions import LEFT, RIGHT, coproduct
from aug_cohomology.cohomology.ring_table import polynomial_table, truncated_table
from aug_cohomology.core.types import CoproductGrading
from aug_cohomology.product_cohomology.coproduct_checks import (
    derivations,
    ext_coproduct_check,
    gr_centre_check,
    hoch_coproduct_check,
    inner_derivations,
    omega_coproduct_check,
)


def test_ext_of_truncated_coproduct(dual_x, dual_y):
    """Testa E de k[x]/x² ⊔ k[y]/y² truncado: dimensões (1, 2, 2, 2, 2)."""
    report = ext_coproduct_check(dual_x, dual_y, 4)
    assert report.passed, report.witnesses[:3]
    assert report.tables["expected"] == [1, 2, 2, 2, 2]
    assert report.clauses["stable"]


def test_omega_splits_over_the_factors(dual_x, dual_y, cubic_x):
    """Testa Ω = O_Λ ⊕ O_Γ nos graus de confiança."""
    for a, b in ((dual_x, dual_y), (cubic_x, dual_y)):
        report = omega_coproduct_check(a, b, 5)
        assert report.passed, report.witnesses[:3]
        assert report.tables["omega"] == report.tables["O_left"] + report.tables["O_right"]


def test_graded_centre_of_polynomial_coproduct(qq):
    """Testa k[a] ⊔ k[b] com |a| = |b| = 2: centro graduado concentrado em grau 0."""
    r = polynomial_table(qq, 2, 8, label="k[a]", letter="a")
    s = polynomial_table(qq, 2, 8, label="k[b]", letter="b")
    report = gr_centre_check(r, s, 8)
    assert report.passed, report.witnesses[:3]
    assert report.tables["centre_dims"][0] == 1
    assert sum(report.tables["centre_dims"][1:]) == 0


def test_graded_centre_exception_for_dual_numbers(qq):
    """Testa k[x]/x² ⊔ k[y]/y² com |x| = |y| = 1: xy + yx é central."""
    r = truncated_table(qq, 1, 2, 6, label="k[x]/x²", letter="x")
    s = truncated_table(qq, 1, 2, 6, label="k[y]/y²", letter="y")
    report = gr_centre_check(r, s, 6)
    assert report.passed, report.witnesses[:3]
    assert report.tables["exceptional"] is True
    assert report.clauses["exceptional_witness"]
    assert report.tables["centre_dims"][2] >= 1


def test_graded_centre_with_trivial_factor(qq):
    """Testa que k ⊔ S = S tem o centro graduado de S."""
    r = truncated_table(qq, 1, 1, 6, label="k")
    s = polynomial_table(qq, 2, 6, label="k[b]", letter="b")
    report = gr_centre_check(r, s, 6)
    assert report.passed, report.witnesses[:3]
    assert report.tables["centre_dims"][:5] == [1, 0, 1, 0, 1]


def test_derivations_of_dual_number_coproduct(dual_x, dual_y):
    """Testa a derivação de Euler em grau 0 e Inn de grau 2 gerado por [xy, −]."""
    copro = coproduct(dual_x, dual_y, 6, CoproductGrading.WEIGHT)
    alg = copro.algebra
    variables, der = derivations(alg, 0)
    position = {var: n for n, var in enumerate(variables)}
    euler = {position[(i, i)]: alg.degrees[i] for i in range(1, alg.dim) if (i, i) in position}
    assert der.contains(euler)
    assert inner_derivations(alg, 0).dim == 0

    variables, der = derivations(alg, 2)
    inn = inner_derivations(alg, 2)
    assert inn.dim == 1
    assert der.contains_subspace(inn)
    position = {var: n for n, var in enumerate(variables)}
    x, y = copro.word_index[((LEFT, 1),)], copro.word_index[((RIGHT, 1),)]
    xyx = copro.word_index[((LEFT, 1), (RIGHT, 1), (LEFT, 1))]
    yxy = copro.word_index[((RIGHT, 1), (LEFT, 1), (RIGHT, 1))]
    bracket = inn.basis[0]
    assert bracket.get(position[(x, xyx)]) == -bracket.get(position[(y, yxy)])


def test_hochschild_coproduct_heuristic(dual_x, dual_y):
    """Testa o relatório heurístico: as duas leituras de HH^0 grau a grau e testemunhas de derivações."""
    report = hoch_coproduct_check(dual_x, dual_y, 6, 2)
    assert report.heuristic
    assert report.passed, report.witnesses[:3]
    assert report.tables["hh0"]["coproduct"] == [1, 0, 1, 0, 1, 0]
    assert report.tables["hh0"]["product"] == [1, 2, 0, 0, 0, 0]
    assert report.tables["hh0"]["matches"] == ["coproduct"]
    assert report.clauses["hh0_some_reading_matches"]
    assert report.clauses["witnesses.outer"]
    assert report.clauses["witnesses.inner"]
    assert [row["shift"] for row in report.tables["der_inn"]] == [0, 1, 2, 3, 4]
