# --- tests/test_algebras.py ---

import pytest

from aug_cohomology.algebras.algebra import (
    Algebra,
    check_axioms,
    is_self_injective_local,
    require_axioms,
    socle_dims,
)
from aug_cohomology.algebras.constructions import (
    LEFT,
    RIGHT,
    chinese_remainder_check,
    coproduct,
    product,
    product_pairing,
)
from aug_cohomology.algebras.graded import Presentation, from_presentation
from aug_cohomology.algebras.morphism import from_basis_images, from_generators, identity, morphism_check
from aug_cohomology.cohomology.ext import ext_functor
from aug_cohomology.core.errors import AxiomError, CutoffTooSmall, InhomogeneousRelation
from aug_cohomology.core.linalg import Subspace
from aug_cohomology.core.types import CoproductGrading
from aug_cohomology.harness.registry import gf3_triple, rad_square_zero, trunc_poly


def test_truncated_polynomial_dims(qq):
    """Testa k[x]/x^r: dimensão r, um elemento por grau e índice de nilpotência r."""
    for r in (2, 3, 4):
        a = trunc_poly(qq, r)
        assert a.dim == r
        assert a.dims()[:r] == [1] * r
        assert a.nilpotency_index() == r
        assert check_axioms(a).passed


def test_presentation_with_commuting_generators(qq):
    """Testa k<x,y>/(x², y², xy − yx) até ao grau 3: dimensões (1, 2, 1, 0)."""
    relations = [[(1, ("x", "x"))], [(1, ("y", "y"))], [(1, ("x", "y")), (-1, ("y", "x"))]]
    a = from_presentation(Presentation(qq, [("x", 1), ("y", 1)], relations, cutoff=3), name="ext")
    assert a.dims() == [1, 2, 1, 0]
    assert a.is_commutative()
    assert check_axioms(a).passed


def test_presentation_rejects_bad_relations(qq):
    """Testa relações não homogéneas e cortes abaixo do grau de uma relação."""
    with pytest.raises(InhomogeneousRelation):
        from_presentation(Presentation(qq, [("x", 1)], [[(1, ("x", "x")), (1, ("x",))]], cutoff=3))
    with pytest.raises(CutoffTooSmall):
        from_presentation(Presentation(qq, [("x", 1)], [[(1, ("x", "x", "x"))]], cutoff=2))


def test_axiom_failures_are_reported_with_witnesses(qq):
    """Testa que x² = 1 viola a multiplicatividade de ε e que require_axioms o recusa."""
    bad = Algebra(qq, ["1", "x"], {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}, (1, 1): {0: 1}},
                  {0: 1}, {0: 1}, name="bad")
    report = check_axioms(bad)
    assert not report.passed
    assert report.clauses["augmentation_multiplicative"] is False
    assert any(w["clause"] == "augmentation_multiplicative" for w in report.witnesses)
    with pytest.raises(AxiomError):
        require_axioms(bad)


def test_product_dims_and_cross_products(cubic_x, dual_y):
    """Testa dim Λ*Γ = dim Λ + dim Γ − 1 e I(Λ)·I(Γ) = 0."""
    prod = product(cubic_x, dual_y)
    c = prod.algebra
    assert c.dim == 4
    assert check_axioms(c).passed
    for i in prod.ideal_left():
        for j in prod.ideal_right():
            assert c.mul_basis(i, j) == {}
            assert c.mul_basis(j, i) == {}
    for f in (prod.proj_left, prod.proj_right, prod.incl_left, prod.incl_right):
        assert morphism_check(f).passed


def test_product_unit_is_not_doubled(dual_x, dual_y):
    """Testa 1·1 = 1 e 1·γ = γ = γ·1 em Λ*Γ, com os axiomas todos satisfeitos."""
    c = product(dual_x, dual_y).algebra
    report = check_axioms(c)
    assert report.passed, report.witnesses[:3]
    assert c.mul_basis(0, 0) == {0: 1}
    for k in range(1, c.dim):
        assert c.mul_basis(0, k) == {k: 1}
        assert c.mul_basis(k, 0) == {k: 1}


def test_product_pairing_is_universal(cubic_x, dual_y):
    """Testa que (p_Λ, p_Γ) induz a identidade de Λ*Γ."""
    prod = product(cubic_x, dual_y)
    pairing = product_pairing(prod, prod.proj_left, prod.proj_right)
    assert pairing.matrix == identity(prod.algebra).matrix


def test_gf3_triple(gf3):
    """Testa k[a]/a³ * k[b]/b² * k[c]/c² sobre GF(3)."""
    a = gf3_triple(gf3)
    assert a.dim == 5
    assert a.field.char == 3
    assert check_axioms(a).passed


def test_radical_square_zero(qq):
    """Testa que todos os produtos do ideal de aumento se anulam."""
    a = rad_square_zero(qq, 2)
    assert a.dim == 3
    assert a.nilpotency_index() == 2
    assert a.annihilator().dim == 2


def test_coproduct_alternating_words(dual_x, dual_y):
    """Testa Λ⊔Γ truncado: duas palavras alternadas por grau positivo."""
    copro = coproduct(dual_x, dual_y, 4, CoproductGrading.WEIGHT)
    alg = copro.algebra
    assert alg.dims() == [1, 2, 2, 2, 2]
    assert check_axioms(alg).passed
    x, y = (LEFT, 1), (RIGHT, 1)
    xy = alg.multiply({copro.word_index[(x,)]: 1}, {copro.word_index[(y,)]: 1})
    assert xy == {copro.word_index[(x, y)]: 1}
    assert alg.multiply({copro.word_index[(x,)]: 1}, {copro.word_index[(x,)]: 1}) == {}
    assert morphism_check(copro.incl_left).passed
    assert morphism_check(copro.incl_right).passed


def test_coproduct_merges_letters_of_the_same_factor(cubic_x, dual_y):
    """Testa que x·x funde numa só letra x² dentro da palavra."""
    copro = coproduct(cubic_x, dual_y, 4, CoproductGrading.WEIGHT)
    x2 = cubic_x.component(2)[0]
    xyx = {copro.word_index[((LEFT, 1), (RIGHT, 1), (LEFT, 1))]: 1}
    assert copro.algebra.multiply(xyx, {copro.word_index[((LEFT, 1),)]: 1}) == {
        copro.word_index[((LEFT, 1), (RIGHT, 1), (LEFT, x2))]: 1
    }


def test_coproduct_cutoff_must_exceed_guard_band(dual_x, dual_y):
    """Testa CutoffTooSmall quando não sobra nenhum grau de confiança."""
    with pytest.raises(CutoffTooSmall):
        coproduct(dual_x, dual_y, 1, CoproductGrading.WEIGHT)


def test_chinese_remainder_on_product(cubic_x, dual_y):
    """Testa Λ/IJ ≅ Λ/I * Λ/J com I, J os ideais dos dois fatores."""
    prod = product(cubic_x, dual_y)
    c = prod.algebra
    i = Subspace(c.field, c.dim, ({k: 1} for k in prod.ideal_left()))
    j = Subspace(c.field, c.dim, ({k: 1} for k in prod.ideal_right()))
    report = chinese_remainder_check(c, i, j)
    assert report.passed
    assert report.tables["dim_quotient"] == report.tables["dim_product"] == 4


def test_chinese_remainder_hypotheses_not_met(cubic_x):
    """Testa I = J = I(Λ) em k[x]/x³: I ∩ J ≠ IJ."""
    ideal = cubic_x.augmentation_ideal()
    report = chinese_remainder_check(cubic_x, ideal, ideal)
    assert not report.passed
    assert report.status == "hypotheses not met"


def test_morphism_generators_extend_multiplicatively(dual_x, quartic_x):
    """Testa x ↦ x² de k[x]/x² em k[x]/x⁴."""
    x2 = quartic_x.component(2)[0]
    f = from_generators(dual_x, quartic_x, {1: {x2: 1}}, name="x↦x²")
    assert morphism_check(f).passed
    assert f.image(1) == {x2: 1}


def test_non_augmented_map_is_rejected(dual_x):
    """Testa que x ↦ 1 falha a verificação e que E(f) recusa o morfismo."""
    f = from_basis_images(dual_x, dual_x, [{0: 1}, {0: 1}], name="x↦1")
    report = morphism_check(f)
    assert not report.passed
    assert report.clauses["augmentation"] is False
    with pytest.raises(AxiomError):
        ext_functor(f, 2)


def test_socles_and_self_injectivity(qq, cubic_x):
    """Testa socles de dimensão 1 em k[x]/x³ e de dimensão 2 em rad² = 0 com dois geradores."""
    assert socle_dims(cubic_x) == (1, 1)
    assert is_self_injective_local(cubic_x)
    rad = rad_square_zero(qq, 2)
    assert socle_dims(rad) == (2, 2)
    assert not is_self_injective_local(rad)
