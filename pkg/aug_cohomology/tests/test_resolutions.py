# --- tests/test_resolutions.py ---

import pytest

from aug_cohomology.core.types import ResolutionKind
from aug_cohomology.harness.registry import rad_square_zero, trunc_poly
from aug_cohomology.resolutions.bar import bar_resolution
from aug_cohomology.resolutions.minimal import (
    Resolution,
    left_homotopy,
    minimal_bimodule_resolution,
    omega_bimodule,
    resolution_of_k,
    tensor_down,
    verify_homotopy,
)
from aug_cohomology.resolutions.psq import psq_resolution, verify_psq


@pytest.mark.parametrize("r", [2, 3, 4])
def test_truncated_polynomial_resolutions_are_periodic(qq, r):
    """Testa postos 1 em todos os graus e graus internos 0, 1, r, r+1, 2r."""
    a = trunc_poly(qq, r)
    res = resolution_of_k(a, 4)
    assert res.ranks() == [1, 1, 1, 1, 1]
    assert res.generator_degrees() == [[0], [1], [r], [r + 1], [2 * r]]
    assert res.check_d_squared()
    assert res.is_exact()
    assert res.is_small()


def test_radical_square_zero_ranks_double(qq):
    """Testa postos 2^n para dois geradores com produtos nulos, à esquerda e em bimódulos."""
    a = rad_square_zero(qq, 2)
    assert resolution_of_k(a, 3).ranks() == [1, 2, 4, 8]
    assert minimal_bimodule_resolution(a, 3).ranks() == [1, 2, 4, 8]


def test_bimodule_resolution_has_contracting_homotopy(dual_x, cubic_x):
    """Testa ∂s + s∂ = id na resolução mínima de bimódulos."""
    for a in (dual_x, cubic_x):
        res = minimal_bimodule_resolution(a, 4)
        assert res.kind is ResolutionKind.BIMODULE
        assert res.rank(0) == 1
        left_homotopy(res)
        report = verify_homotopy(res)
        assert report.passed, report.witnesses[:3]


def test_twisted_resolution_keeps_ranks(cubic_x):
    """Testa que a mudança aleatória de geradores não altera postos nem exatidão."""
    plain = minimal_bimodule_resolution(cubic_x, 3)
    twisted = minimal_bimodule_resolution(cubic_x, 3, twist_seed=7)
    assert twisted.ranks() == plain.ranks()
    assert twisted.check_d_squared()
    assert twisted.is_exact()


def test_tensor_down_recovers_resolution_of_k(cubic_x):
    """Testa que P ⊗_Λ k tem os mesmos postos que a resolução mínima de k."""
    down = tensor_down(minimal_bimodule_resolution(cubic_x, 4))
    assert down.kind is ResolutionKind.LEFT
    assert down.ranks() == resolution_of_k(cubic_x, 4).ranks()
    assert down.is_exact()


def test_bar_resolution_is_exact_but_not_small(cubic_x):
    """Testa o oráculo bar: exato, δ² = 0, mas sem a condição de pequenez."""
    bar = bar_resolution(cubic_x, 3)
    assert bar.ranks() == [1, 3, 9, 27]
    assert bar.check_d_squared()
    assert bar.is_exact()
    assert not bar.is_small()


def test_omega_of_dual_numbers(dual_x):
    """Testa Ω(k[x]/x²) = ker(Λ⊗Λ → Λ) de dimensão 2, gerado por x⊗1 − 1⊗x."""
    omega = omega_bimodule(dual_x)
    assert omega.dim == 2
    assert omega.is_generated


def test_psq_resolution_of_product(dual_x, dual_y):
    """Testa a resolução por palavras alternadas de k[x]/x² * k[y]/y²."""
    psq = psq_resolution(dual_x, dual_y, 3)
    assert psq.ranks() == [1, 2, 4, 8]
    report = verify_psq(psq, 2)
    assert report.passed, report.witnesses[:3]
    assert report.clauses["small"]
    assert report.clauses["exact"]


def test_resolution_bundle_round_trip(cubic_x):
    """Testa que o pacote JSON de uma resolução reconstrói as mesmas diferenciais."""
    res = resolution_of_k(cubic_x, 3)
    doc = res.to_doc().model_dump(mode="json")
    back = Resolution.from_doc(doc)
    assert back.ranks() == res.ranks()
    assert back.generator_degrees() == res.generator_degrees()
    assert back.small == res.small
    for n in range(res.n_max + 1):
        assert back.boundary(n).images == res.boundary(n).images
    assert back.is_exact()
