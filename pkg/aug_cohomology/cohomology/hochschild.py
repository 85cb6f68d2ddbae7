# --- aug_cohomology/cohomology/hochschild.py ---

"""
Cohomologia de Hochschild HH(Λ) = Ext_{Λ^e}(Λ, Λ) pela resolução mínima de
bimódulos, o anel por composição de levantamentos e a aplicação
φ_k: HH(Λ) → E(Λ) induzida por Λ → k.
"""

import logging
from dataclasses import dataclass

from aug_cohomology.algebras.algebra import Algebra
from aug_cohomology.cohomology.complexes import CochainComplex, cohomology_ring, coordinate_les
from aug_cohomology.cohomology.ring_table import GradedRingTable
from aug_cohomology.core.linalg import Matrix, Subspace, kernel_basis
from aug_cohomology.core.types import CheckReport, LESRecord
from aug_cohomology.resolutions.bar import bar_resolution
from aug_cohomology.resolutions.minimal import Resolution, minimal_bimodule_resolution, tensor_down
from aug_cohomology.resolutions.modules import TrivialModule

logger = logging.getLogger(__name__)


def hh_complex(
    a: Algebra, n_max: int, twist_seed: int | None = None, res: Resolution | None = None,
) -> CochainComplex:
    """
    Hom_{Λ^e}(P, Λ); `res` reaproveita uma resolução já construída (até n_max + 1 pelo menos).
    Sem I nilpotente não há resolução mínima e usa-se a resolução bar.
    """
    if res is None and a.nilpotency_index() is None:
        logger.info(f"{a.name} não é local: HH pela resolução bar.")
        res = bar_resolution(a, n_max + 1)
    elif res is None:
        res = minimal_bimodule_resolution(a, n_max + 1, twist_seed=twist_seed)
    return CochainComplex(res, name=f"HH({res.base.name})")


def hh_groups(a: Algebra, n_max: int, twist_seed: int | None = None) -> list[int]:
    return hh_complex(a, n_max, twist_seed).dims(n_max)


def hh_ring(a: Algebra, n_max: int, cx: CochainComplex | None = None) -> GradedRingTable:
    """HH^*(Λ) até n_max; a unidade é a classe de gen_0 ↦ 1 em HH^0 = Z(Λ)."""
    cx = cx or hh_complex(a, n_max)
    table = cohomology_ring(cx, n_max, label=f"HH({cx.res.base.name})", unit_cocycle={0: 1})
    table.labels = [[f"x{n}" if d == 1 else f"x{n}_{i}" for i in range(d)] for n, d in enumerate(table.dims)]
    return table


@dataclass
class PhiK:
    """φ_k por grau (matrizes dim E^n × dim HH^n), a sucessão de I ⊆ Λ e os núcleos."""
    matrices: list[Matrix]
    les: LESRecord
    e_table: GradedRingTable
    hh_table: GradedRingTable
    kernels: list[Subspace]
    cx: CochainComplex | None = None

    @property
    def n_max(self) -> int:
        return len(self.matrices) - 1

    def image_dims(self) -> list[int]:
        return [m.rank() for m in self.matrices]

    def ihh_dims(self) -> list[int]:
        """iHH = k·1 + ker φ_k, por grau."""
        dims = [k.dim for k in self.kernels]
        unit = self.hh_table.unit
        if unit is not None and dims:
            dims[0] = self.kernels[0].sum(Subspace(self.kernels[0].field, self.kernels[0].ambient_dim, [unit])).dim
        return dims

    def is_zero_in(self, n: int) -> bool:
        return self.matrices[n].is_zero()

    def check_ring_map(self) -> CheckReport:
        report = CheckReport(check="phi-k-ring-map", params={"n_max": self.n_max})
        hh, e = self.hh_table, self.e_table
        for p in range(self.n_max + 1):
            for q in range(self.n_max + 1 - p):
                for i in range(hh.dims[p]):
                    for j in range(hh.dims[q]):
                        lhs = self.matrices[p + q].apply(hh.basis_product(p, i, q, j))
                        rhs = e.multiply(p, self.matrices[p].cols[i], q, self.matrices[q].cols[j])
                        report.require("ring_map", lhs == rhs, pair=[[p, i], [q, j]])
        return report

    def check_central(self) -> CheckReport:
        """φ_k(z)·α = (−1)^{|z||α|} α·φ_k(z) para α na base de E."""
        e = self.e_table
        f = e.field
        report = CheckReport(check="phi-k-central", params={"n_max": self.n_max})
        for n in range(self.n_max + 1):
            for i, z in enumerate(self.matrices[n].cols):
                if not z:
                    continue
                for p in range(self.n_max + 1 - n):
                    sign = -1 if (n * p) % 2 else 1
                    for j in range(e.dims[p]):
                        lhs = e.multiply(n, z, p, {j: 1})
                        rhs = {k: f.norm(sign * c) for k, c in e.multiply(p, {j: 1}, n, z).items()}
                        report.require("central", lhs == rhs, image=[n, i], against=[p, j])
        return report


def phi_k(
    a: Algebra, n_max: int, twist_seed: int | None = None, res: Resolution | None = None,
) -> PhiK:
    """
    φ_k[f] = [ε ∘ f]: nas coordenadas g·dim(Λ) + m fica só a entrada m = 0, lida
    em Hom(P ⊗_Λ k, k) com a mesma base de geradores.
    """
    cx = hh_complex(a, n_max, twist_seed, res=res)
    res = cx.res
    d = res.base.dim
    down = tensor_down(res)
    cx_e = CochainComplex(down, TrivialModule(down.base), name=f"E({res.base.name})")
    hh_table = hh_ring(a, n_max, cx)
    e_table = cohomology_ring(cx_e, n_max, label=cx_e.name, unit_cocycle={0: 1})

    matrices, kernels = [], []
    for n in range(n_max + 1):
        h, h_e = cx.cohomology(n), cx_e.cohomology(n)
        cols = []
        for i in range(h.dim):
            z = h.representative({i: 1})
            restricted = {idx // d: c for idx, c in z.items() if idx % d == 0}
            cols.append(h_e.coordinate_vector(restricted))
        m = Matrix(a.field, h_e.dim, h.dim, cols)
        matrices.append(m)
        kernels.append(kernel_basis(m))

    x = cx.as_complex(n_max + 1)
    sub = [cx.slot_coordinates(n, lambda m: m != 0) for n in range(len(x.dims))]
    les = coordinate_les(x, sub, n_max, label=f"I→{res.base.name}→k", names=("HH(I)", "HH", "E"))
    logger.info(f"φ_k de {res.base.name}: postos {[m.rank() for m in matrices]}.")
    return PhiK(matrices, les, e_table, hh_table, kernels, cx)
