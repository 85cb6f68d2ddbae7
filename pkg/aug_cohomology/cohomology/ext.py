# --- aug_cohomology/cohomology/ext.py ---

"""
E(Λ) = Ext_Λ(k, k): grupos, anel de Yoneda e funtorialidade, a partir da
resolução mínima de k. Com uma resolução pequena a diferencial de Hom(F, k) é
nula, pelo que E^n tem dimensão igual ao posto de F_n.
"""

import logging
from dataclasses import dataclass, field as dc_field

from aug_cohomology.algebras.algebra import Algebra
from aug_cohomology.algebras.morphism import Morphism, morphism_check
from aug_cohomology.cohomology.complexes import CochainComplex, cohomology_ring
from aug_cohomology.cohomology.ring_table import GradedRingTable
from aug_cohomology.core.errors import AxiomError
from aug_cohomology.core.linalg import Matrix, Vector, vec_axpy
from aug_cohomology.core.types import CheckReport
from aug_cohomology.resolutions.bar import bar_resolution
from aug_cohomology.resolutions.minimal import Resolution, resolution_of_k, tensor_down
from aug_cohomology.resolutions.modules import TrivialModule

logger = logging.getLogger(__name__)


def ext_complex(a: Algebra, n_max: int) -> CochainComplex:
    """Hom_Λ(F, k) com F a resolução mínima de k até n_max + 1."""
    res = resolution_of_k(a, n_max + 1)
    return CochainComplex(res, name=f"E({res.base.name})")


def ext_groups(a: Algebra, n_max: int) -> list[int]:
    return ext_complex(a, n_max).dims(n_max)


def ext_ring(a: Algebra, n_max: int, cx: CochainComplex | None = None) -> GradedRingTable:
    cx = cx or ext_complex(a, n_max)
    table = cohomology_ring(cx, n_max, label=f"E({cx.res.base.name})", unit_cocycle={0: 1})
    table.labels = [[f"e{n}_{i}" if n else "1" for i in range(d)] for n, d in enumerate(table.dims)]
    return table


def tensored_ext_dims(res: Resolution, n_max: int) -> list[int]:
    """dim E^n a partir de uma resolução de bimódulos, via P ⊗_Λ k."""
    down = tensor_down(res)
    return CochainComplex(down, TrivialModule(down.base)).dims(n_max)


def bar_ext_dims(a: Algebra, n_max: int) -> list[int]:
    """Oráculo independente: E^n pela resolução bar (não pequena)."""
    return tensored_ext_dims(bar_resolution(a, n_max + 1), n_max)


# --- Funtorialidade ---

@dataclass
class ExtFunctor:
    """E(f): E(Λ') → E(Λ) para f: Λ → Λ', com uma matriz por grau."""
    morphism: Morphism
    matrices: list[Matrix]
    source_table: GradedRingTable
    target_table: GradedRingTable
    report: CheckReport = dc_field(default_factory=lambda: CheckReport(check="ext-functor"))

    def apply(self, n: int, v: Vector) -> Vector:
        return self.matrices[n].apply(v)

    def is_zero_in(self, n: int) -> bool:
        return self.matrices[n].is_zero()


class _Comparison:
    """H_i: F_i → F'_i com H(e_k·gen) = f(e_k)·H(gen), a cobrir id_k."""

    def __init__(self, f: Morphism, res: Resolution, res_t: Resolution):
        self.f = f
        self.res = res
        self.res_t = res_t
        self.images: list[list[Vector]] = []

    def apply(self, i: int, x: Vector) -> Vector:
        term, target = self.res.terms[i], self.res_t.terms[i]
        out: Vector = {}
        for g, k, c in term.terms(x):
            image = self.images[i][g]
            if image:
                vec_axpy(out, c, target.act_vec(self.f.image(k), image), self.res.field)
        return out

    def build(self, n_max: int) -> None:
        res, res_t = self.res, self.res_t
        for i in range(n_max + 1):
            if i == 0:
                wanted = [dict(v) for v in res.augmentation.images]
            else:
                wanted = [self.apply(i - 1, d) for d in res.differentials[i].images]
            self.images.append([res_t.solver(i).solve_vector(y) if y else {} for y in wanted])


def ext_functor(f: Morphism, n_max: int) -> ExtFunctor:
    """E(f)α' = α' ∘ H_n; verifica ainda que E(f) é um morfismo de anéis."""
    check = morphism_check(f)
    if not check.passed:
        raise AxiomError(f"{f.name} não é um morfismo de álgebras aumentadas.", check.witnesses)
    if not (f.source.is_adapted and f.target.is_adapted):
        raise AxiomError("E(f) exige bases adaptadas nas duas álgebras.")
    cx = ext_complex(f.source, n_max)
    cx_t = ext_complex(f.target, n_max)
    source_table = ext_ring(f.source, n_max, cx)
    target_table = ext_ring(f.target, n_max, cx_t)
    comparison = _Comparison(f, cx.res, cx_t.res)
    comparison.build(n_max)

    matrices = []
    for n in range(n_max + 1):
        h_t, h = cx_t.cohomology(n), cx.cohomology(n)
        cols = []
        for j in range(h_t.dim):
            alpha = h_t.representative({j: 1})
            pulled = cx.from_images([cx_t.evaluate(alpha, n, img) for img in comparison.images[n]])
            cols.append(h.coordinate_vector(pulled))
        matrices.append(Matrix(f.source.field, h.dim, h_t.dim, cols))

    report = CheckReport(check="ext-functor", params={"morphism": f.name, "n_max": n_max})
    for p in range(n_max + 1):
        for q in range(n_max + 1 - p):
            for i in range(target_table.dims[p]):
                for j in range(target_table.dims[q]):
                    lhs = matrices[p + q].apply(target_table.basis_product(p, i, q, j))
                    rhs = source_table.multiply(p, matrices[p].cols[i], q, matrices[q].cols[j])
                    report.require("ring_map", lhs == rhs, pair=[[p, i], [q, j]])
    report.tables["ranks"] = [m.rank() for m in matrices]
    logger.info(f"E({f.name}) com postos {report.tables['ranks']}.")
    return ExtFunctor(f, matrices, source_table, target_table, report)
