# --- aug_cohomology/product_cohomology/theorems.py ---

"""
Verificações dos resultados sobre Λ*Γ: E(Λ*Γ) = E(Λ)⊔E(Γ), a sucessão exata
longa, a nilpotência em HH(Λ*Γ) e as propriedades de φ_k num só fator.
"""

import logging

from aug_cohomology.algebras.algebra import Algebra
from aug_cohomology.algebras.constructions import LEFT, RIGHT, product
from aug_cohomology.cohomology.complexes import ChainLift, CochainComplex, compose_cocycles
from aug_cohomology.cohomology.ext import ext_functor, ext_groups, ext_ring, tensored_ext_dims
from aug_cohomology.cohomology.hochschild import phi_k
from aug_cohomology.core.linalg import Subspace, Vector
from aug_cohomology.core.types import CheckReport
from aug_cohomology.product_cohomology.les import connecting_formula_check, les_check, les_product
from aug_cohomology.resolutions.psq import SIDE_NAMES, psq_resolution, verify_psq

logger = logging.getLogger(__name__)


def free_product_dims(left: list[int], right: list[int], n_max: int) -> list[int]:
    """Dimensões de R⊔S a partir das de R e S (palavras alternadas de elementos de grau positivo)."""
    ends = {LEFT: [0] * (n_max + 1), RIGHT: [0] * (n_max + 1)}
    for n in range(1, n_max + 1):
        for side, dims in ((LEFT, left), (RIGHT, right)):
            other = ends[1 - side]
            ends[side][n] = sum(
                dims[m] * ((1 if m == n else 0) + other[n - m])
                for m in range(1, min(n, len(dims) - 1) + 1)
            )
    return [1] + [ends[LEFT][n] + ends[RIGHT][n] for n in range(1, n_max + 1)]


def main_theo_check(a: Algebra, b: Algebra, n_max: int) -> CheckReport:
    """
    E(Λ*Γ) ≅ E(Λ)⊔E(Γ): dimensões pela resolução P⊔Q ⊗ k, pelo oráculo mínimo e
    pela contagem de palavras; E(p_Λ), E(p_Γ) morfismos de anéis; os produtos
    alternados das imagens formam uma base.
    """
    a, b = a.adapted(), b.adapted()
    report = CheckReport(check="main-theo", params={"left": a.name, "right": b.name, "n_max": n_max})
    psq = psq_resolution(a, b, n_max + 1)
    report.absorb("psq", verify_psq(psq, n_max))
    prod = psq.product
    c = prod.algebra
    via_psq = tensored_ext_dims(psq, n_max)
    oracle = ext_groups(c, n_max)
    expected = free_product_dims(ext_groups(a, n_max), ext_groups(b, n_max), n_max)
    report.tables.update({"via_psq": via_psq, "oracle": oracle, "free_product": expected})
    report.require("dims", via_psq == oracle == expected, via_psq=via_psq, oracle=oracle, expected=expected)

    functors = {side: ext_functor(m, n_max) for side, m in ((LEFT, prod.proj_left), (RIGHT, prod.proj_right))}
    for side, fn in functors.items():
        report.absorb(f"E(p_{SIDE_NAMES[side]})", fn.report)
    table = functors[LEFT].source_table
    images = {
        side: [[fn.matrices[n].cols[i] for i in range(fn.target_table.dims[n])] for n in range(n_max + 1)]
        for side, fn in functors.items()
    }
    f = c.field
    spans = [Subspace(f, d) for d in table.dims]
    counts = [0] * (n_max + 1)
    spans[0].add(table.unit or {0: 1})
    counts[0] = 1

    def extend(degree: int, vec: Vector, last_side: int | None) -> None:
        for side in (LEFT, RIGHT):
            if side == last_side:
                continue
            for m in range(1, n_max + 1 - degree):
                for img in images[side][m]:
                    new = table.multiply(degree, vec, m, img) if degree else dict(img)
                    counts[degree + m] += 1
                    spans[degree + m].add(new)
                    extend(degree + m, new, side)

    extend(0, {}, None)
    spanned = [s.dim for s in spans]
    report.tables["alternating_words"] = counts
    report.require("alternating_basis", spanned == counts == table.dims, spanned=spanned, counts=counts,
                   dims=table.dims)
    return report


def les_exact_check(a: Algebra, b: Algebra, n_max: int) -> CheckReport:
    """A sucessão de Λ*Γ, a fórmula do conector e as sucessões I → Λ → k dos fatores."""
    a, b = a.adapted(), b.adapted()
    report = CheckReport(check="les-exact", params={"left": a.name, "right": b.name, "n_max": n_max})
    les = les_product(a, b, n_max)
    report.absorb("les", les_check(les))
    report.absorb("connecting", connecting_formula_check(les))
    for side, res in enumerate(les.psq.factors):
        phi = phi_k(res.base, n_max, res=res)
        report.require("factor_les_exact", phi.les.exact, side=SIDE_NAMES[side])
    report.tables["les"] = les.record.model_dump(mode="json")
    return report


def nilp_check(a: Algebra, b: Algebra, n_max: int) -> CheckReport:
    """φ_k de HH(Λ*Γ) nulo em grau positivo e η^N = 0, com N o maior índice de nilpotência."""
    a, b = a.adapted(), b.adapted()
    report = CheckReport(check="nilp-hh", params={"left": a.name, "right": b.name, "n_max": n_max})
    tables = [ext_ring(x, n_max) for x in (a, b)]
    if all(t.looks_like_dual_numbers() for t in tables):
        report.heuristic = True
        report.fail_hypotheses("E(Λ) e E(Γ) parecem ambos k[x]/x² (padrão truncado).")
        return report

    c = product(a, b).algebra
    phi = phi_k(c, n_max)
    for n in range(1, n_max + 1):
        report.require("phi_zero", phi.is_zero_in(n), degree=n, rank=phi.matrices[n].rank())
    nilpotency = max(a.nilpotency_index() or 1, b.nilpotency_index() or 1)
    hh = phi.hh_table
    for p in range(1, n_max + 1):
        if nilpotency * p > n_max:
            break
        for i in range(hh.dims[p]):
            degree, power = hh.power(p, {i: 1}, nilpotency)
            report.require("nth_power_zero", not power, degree=p, basis=hh.labels[p][i], power_degree=degree)
    report.tables.update({"hh": hh.dims, "phi_ranks": phi.image_dims(), "N": nilpotency})
    return report


def phi_k_centre_check(a: Algebra, n_max: int) -> CheckReport:
    """φ_k morfismo de anéis com imagem no centro graduado e a sucessão de I → Λ → k exata."""
    a = a.adapted()
    phi = phi_k(a, n_max)
    report = CheckReport(check="phi-k-centre", params={"algebra": a.name, "n_max": n_max})
    report.absorb("ring_map", phi.check_ring_map())
    report.absorb("central", phi.check_central())
    report.require("les_exact", phi.les.exact)
    report.tables.update({"hh": phi.hh_table.dims, "e": phi.e_table.dims, "image": phi.image_dims(),
                          "ihh": phi.ihh_dims()})
    return report


def _valued(cx: CochainComplex, n: int, values: Subspace) -> Subspace:
    """Cocadeias de grau n com todos os valores no subespaço dado."""
    d = cx.module.dim
    vectors = [{g * d + k: c for k, c in v.items()} for g in range(cx.res.rank(n)) for v in values.basis]
    return Subspace(cx.field, cx.dim(n), vectors)


def ss_nilpotence_check(a: Algebra, n_max: int) -> CheckReport:
    """
    ξ com imagem em I e η com imagem num ideal J dão ξη representável com imagem em
    I·J + J·I (J = A(Λ) e J = I²); os elementos de ker φ_k têm potência N nula.
    """
    a = a.adapted()
    phi = phi_k(a, n_max)
    cx = phi.cx
    ideal = a.augmentation_ideal()
    report = CheckReport(check="ss-nilpotence", params={"algebra": a.name, "n_max": n_max})
    for label, j in (("A", a.annihilator()), ("I^2", a.ideal_power(2))):
        w = a.product_span(ideal.basis, j.basis).sum(a.product_span(j.basis, ideal.basis))
        for q in range(n_max + 1):
            etas = cx.cocycles(q).intersection(_valued(cx, q, j)).basis
            for p in range(n_max + 1 - q):
                h = cx.cohomology(p + q)
                allowed = cx.cocycles(p + q).intersection(_valued(cx, p + q, w))
                target = Subspace(cx.field, h.dim, (h.coordinate_vector(z) for z in allowed.basis))
                xis = [cx.cohomology(p).representative(v) for v in phi.kernels[p].basis]
                for k, eta in enumerate(etas):
                    lift = ChainLift(cx.res, eta, q, cx)
                    for i, xi in enumerate(xis):
                        prod = h.coordinate_vector(compose_cocycles(xi, p, lift))
                        report.require("product_in_ij", target.contains(prod), ideal=label, xi=[p, i], eta=[q, k])

    nilpotency = a.nilpotency_index() or 1
    hh = phi.hh_table
    for p in range(n_max + 1):
        if nilpotency * p > n_max:
            break
        for i, v in enumerate(phi.kernels[p].basis):
            _, power = hh.power(p, v, nilpotency)
            report.require("kernel_nilpotent", not power, degree=p, kernel=i)
    report.tables.update({"kernel_dims": [k.dim for k in phi.kernels], "N": nilpotency})
    return report
