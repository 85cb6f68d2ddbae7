# --- aug_cohomology/product_cohomology/les.py ---

"""
Sucessão exata longa de 0 → P̄*Q̄ → P⊔Q → E → 0 depois de aplicar Hom(−, Λ*Γ).

Nas cocadeias de Hom(P⊔Q, Λ*Γ), o subcomplexo Hom(E, Λ*Γ) é o das cocadeias
suportadas em palavras com duas ou mais letras e o quociente Hom(P̄*Q̄, Λ*Γ) o
das palavras com no máximo uma letra. R = im π* é a imagem de H(Hom(E, ·)) em
HH(Λ*Γ).
"""

import logging
from dataclasses import dataclass, field as dc_field

from aug_cohomology.algebras.algebra import Algebra
from aug_cohomology.algebras.constructions import LEFT
from aug_cohomology.cohomology.complexes import CochainComplex, Complex, coordinate_les
from aug_cohomology.cohomology.hochschild import hh_complex
from aug_cohomology.core.linalg import Matrix, Subspace, Vector, kernel_basis, vec_axpy
from aug_cohomology.core.types import CheckReport, LESRecord
from aug_cohomology.resolutions.modules import RegularBimodule, RestrictedBimodule
from aug_cohomology.resolutions.psq import SIDE_NAMES, PsqResolution, psq_resolution

logger = logging.getLogger(__name__)

LES_NAMES = ("Hom(E)", "HH", "Hom(P̄*Q̄)")


@dataclass
class ProductLES:
    """A sucessão materializada, com os complexos por coordenadas e a cache de R."""
    psq: PsqResolution
    cx: CochainComplex
    complex: Complex
    sub: list[list[int]]
    quot: list[list[int]]
    record: LESRecord
    n_max: int
    _r: dict[int, Subspace] = dc_field(default_factory=dict, repr=False)
    _parts: dict[str, Complex] = dc_field(default_factory=dict, repr=False)

    @property
    def algebra(self) -> Algebra:
        return self.psq.product.algebra

    def node_dim(self, name: str, n: int) -> int:
        label = f"H^{n}({name})"
        for node in self.record.nodes:
            if node.name == label:
                return node.dim
        raise KeyError(label)

    def sub_complex(self) -> Complex:
        if "sub" not in self._parts:
            self._parts["sub"] = self.complex.restrict(self.sub, name=LES_NAMES[0])
        return self._parts["sub"]

    def quot_complex(self) -> Complex:
        if "quot" not in self._parts:
            self._parts["quot"] = self.complex.restrict(self.quot, name=LES_NAMES[2])
        return self._parts["quot"]

    def hh_dims(self) -> list[int]:
        return self.cx.dims(self.n_max)

    def r_subspace(self, n: int) -> Subspace:
        """R_n = im π*, nas coordenadas de HH^n(Λ*Γ)."""
        if n not in self._r:
            h = self.cx.cohomology(n)
            embedded = [{self.sub[n][k]: c for k, c in v.items()} for v in self.sub_complex().cocycles(n).basis]
            self._r[n] = Subspace(self.psq.field, h.dim, (h.coordinate_vector(z) for z in embedded))
        return self._r[n]

    def r_dims(self) -> list[int]:
        return [self.r_subspace(n).dim for n in range(self.n_max + 1)]

    def class_of(self, n: int, cocycle: Vector) -> Vector:
        return self.cx.cohomology(n).coordinate_vector(cocycle)

    def in_r(self, n: int, cocycle: Vector) -> bool:
        return self.r_subspace(n).contains(self.class_of(n, cocycle))


def word_coordinates(psq: PsqResolution, n: int, dim: int, keep) -> list[int]:
    """Coordenadas pos·dim + m das palavras de grau n com keep(palavra)."""
    return [pos * dim + m for pos, w in enumerate(psq.words[n]) if keep(w) for m in range(dim)]


def les_from_psq(psq: PsqResolution, n_max: int) -> ProductLES:
    """Precisa de psq até n_max + 1."""
    cx = CochainComplex(psq, name=f"HH({psq.base.name})")
    x = cx.as_complex(n_max + 1)
    dc = cx.module.dim
    sub = [word_coordinates(psq, n, dc, lambda w: len(w) >= 2) for n in range(len(x.dims))]
    quot = [word_coordinates(psq, n, dc, lambda w: len(w) <= 1) for n in range(len(x.dims))]
    record = coordinate_les(x, sub, n_max, label=f"P̄*Q̄→{psq.name}→E", names=LES_NAMES)
    logger.info(f"Sucessão de {psq.base.name} até {n_max}: exata={record.exact}.")
    return ProductLES(psq, cx, x, sub, quot, record, n_max)


def les_product(a: Algebra, b: Algebra, n_max: int, twist_seed: int | None = None) -> ProductLES:
    psq = psq_resolution(a, b, n_max + 1, twist_seed=twist_seed)
    return les_from_psq(psq, n_max)


def les_check(les: ProductLES) -> CheckReport:
    """
    Exatidão em todos os nós, H^0 = Z(Λ)*Z(Γ) e a decomposição de
    H^n(Hom(P̄*Q̄, Λ*Γ)) em partes com imagem em Λ (ou Γ) e em I(Γ) (ou I(Λ)).
    """
    psq, n_max = les.psq, les.n_max
    prod = psq.product
    c = prod.algebra
    report = CheckReport(check="les-product", params={"algebra": c.name, "n_max": n_max})
    report.require("exact", les.record.exact, bad=[node.name for node in les.record.nodes if not node.exact])
    report.tables["les"] = les.record.model_dump(mode="json")

    left, right = (res.base for res in psq.factors)
    expected_h0 = left.center().dim + right.center().dim - 1
    h0 = les.node_dim(LES_NAMES[1], 0)
    report.require("h0_centre", h0 == expected_h0, computed=h0, expected=expected_h0)

    parts: dict[str, list[int]] = {}
    for side, res in enumerate(psq.factors):
        other = psq.factors[1 - side].base
        incl = (prod.incl_left if side == LEFT else prod.incl_right).matrix
        module = RestrictedBimodule(res.base, RegularBimodule(c, psq.env), incl, res.algebra)
        restricted = CochainComplex(res, module).dims(n_max)
        hh = hh_complex(res.base, n_max, res=res).dims(n_max)
        expected = [hh[n] + res.rank(n) * len(other.ideal_indices) for n in range(n_max + 1)]
        for n in range(1, n_max + 1):
            report.require("restricted_dims", restricted[n] == expected[n], side=SIDE_NAMES[side],
                           degree=n, computed=restricted[n], expected=expected[n])
        parts[SIDE_NAMES[side]] = restricted
    # Em grau 1 o quociente ainda recebe δ^0 da palavra vazia.
    for n in range(2, n_max + 1):
        total = les.node_dim(LES_NAMES[2], n)
        split = sum(p[n] for p in parts.values())
        report.require("quotient_splits", total == split, degree=n, computed=total, expected=split)
    report.tables["restricted"] = parts
    report.tables["hh"] = les.hh_dims()
    report.tables["r"] = les.r_dims()
    return report


# --- Conector ---

def _boundary_parts(psq: PsqResolution, side: int, g: int) -> tuple[Vector, Vector]:
    """(λ, ρ) em Λ*Γ: as partes de d(gen_g) ∈ P_0 com fator direito 1 e com fator esquerdo 1."""
    res = psq.factors[side]
    env = res.algebra
    f = psq.field
    lam: Vector = {}
    rho: Vector = {}
    for _, k, c in res.terms[0].terms(res.differentials[1].images[g]):
        i, j = env.split(k)
        if j == 0:
            vec_axpy(lam, c, {psq.iota_base(side, i): 1}, f)
        if i == 0:
            vec_axpy(rho, c, {psq.iota_base(side, j): 1}, f)
    return lam, rho


def connecting_formula(les: ProductLES, n: int, alpha: Vector) -> Vector:
    """
    ω(α) pela fórmula fechada, nas coordenadas locais de Hom(E)^{n+1}:
    (letra de grau 1)·p ↦ λ·α(p) e p·(letra de grau 1) ↦ (−1)^n α(p)·ρ; as
    restantes palavras vão para zero.
    """
    psq = les.psq
    c = les.algebra
    f = psq.field
    dc = c.dim
    glob = {les.quot[n][k]: v for k, v in alpha.items()}

    def value(letter) -> Vector:
        pos = psq.word_index[n][(letter,)]
        return {m: glob[pos * dc + m] for m in range(dc) if pos * dc + m in glob}

    local = {k: pos for pos, k in enumerate(les.sub[n + 1])}
    out: Vector = {}
    for pos, w in enumerate(psq.words[n + 1]):
        if len(w) != 2:
            continue
        (s1, m1, g1), (s2, m2, g2) = w
        image: Vector = {}
        if m1 == 1:
            lam, _ = _boundary_parts(psq, s1, g1)
            vec_axpy(image, 1, c.multiply(lam, value(w[1])), f)
        if m2 == 1:
            _, rho = _boundary_parts(psq, s2, g2)
            vec_axpy(image, (-1) ** n, c.multiply(value(w[0]), rho), f)
        for m, v in image.items():
            out[local[pos * dc + m]] = v
    return out


def _allowed(les: ProductLES, n: int) -> Subspace:
    """Cocadeias do quociente com valores em I(Λ) ⊕ A(Γ) nas letras P e I(Γ) ⊕ A(Λ) nas letras Q."""
    psq = les.psq
    dc = les.algebra.dim
    local = {k: pos for pos, k in enumerate(les.quot[n])}
    annihilators = [res.base.annihilator() for res in psq.factors]
    vectors: list[Vector] = []
    for pos, w in enumerate(psq.words[n]):
        if len(w) != 1:
            continue
        side = w[0][0]
        own = psq.factors[side].base
        for i in own.ideal_indices:
            vectors.append({local[pos * dc + psq.iota_base(side, i)]: 1})
        for a in annihilators[1 - side].basis:
            vectors.append({local[pos * dc + psq.iota_base(1 - side, i)]: v for i, v in a.items()})
    return Subspace(psq.field, len(les.quot[n]), vectors)


def connecting_formula_check(les: ProductLES) -> CheckReport:
    """
    Compara a fórmula fechada com δ(extensão por zero) para cada cociclo da base
    do quociente, e o núcleo de ω com os cociclos de imagem em I(Λ) ⊕ A(Γ).
    """
    f = les.psq.field
    x = les.complex
    sub_cx, quot_cx = les.sub_complex(), les.quot_complex()
    report = CheckReport(check="connecting-formula", params={"algebra": les.algebra.name, "n_max": les.n_max})
    kernel_dims = []
    for n in range(1, les.n_max + 1):
        connector = x.maps[n].submatrix(les.sub[n + 1], les.quot[n])
        z_q = quot_cx.cocycles(n).basis
        b_s = sub_cx.coboundaries(n + 1)
        for k, alpha in enumerate(z_q):
            diff = connector.apply(alpha)
            vec_axpy(diff, -1, connecting_formula(les, n, alpha), f)
            report.require("formula", b_s.contains(diff), degree=n, cocycle=k)

        q_dim = len(les.quot[n])
        b_q = quot_cx.coboundaries(n)
        by_values = Subspace(f, q_dim, z_q).intersection(_allowed(les, n)).sum(b_q)
        cols = [connector.apply(z) for z in z_q] + b_s.basis
        relations = kernel_basis(Matrix(f, len(les.sub[n + 1]), len(cols), cols))
        combos = []
        for v in relations.basis:
            z: Vector = {}
            for i, c in v.items():
                if i < len(z_q):
                    vec_axpy(z, c, z_q[i], f)
            combos.append(z)
        by_les = Subspace(f, q_dim, combos).sum(b_q)
        report.require("kernel", by_values == by_les, degree=n, by_values=by_values.dim, by_les=by_les.dim)
        kernel_dims.append(by_les.dim - b_q.dim)
    report.tables["kernel_dims"] = kernel_dims
    report.tables["omega_ranks"] = [m.rank for m in les.record.maps if m.name.startswith("ω")]
    return report
