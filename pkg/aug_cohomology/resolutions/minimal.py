# --- aug_cohomology/resolutions/minimal.py ---

"""
Resoluções projetivas pequenas (mínimas) sobre álgebras locais de dimensão finita,
por iteração de coberturas projetivas, e a homotopia contrativa linear à esquerda
das resoluções de bimódulos.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Protocol

import numpy as np

from aug_cohomology.algebras.algebra import Algebra, EnvelopingAlgebra
from aug_cohomology.core.errors import AxiomError, DimensionMismatch, NotLocal, NotSmall
from aug_cohomology.core.linalg import (
    Matrix, QuotientSpace, Solver, Subspace, Vector, block_kernel, kernel_basis, vec_axpy,
)
from aug_cohomology.core.scalars import FieldSpec
from aug_cohomology.core.types import CheckReport, ResolutionDoc, ResolutionKind
from aug_cohomology.resolutions.modules import (
    FreeMap, FreeModule, ModuleOver, RegularBimodule, TrivialModule,
)

logger = logging.getLogger(__name__)


class Contraction(Protocol):
    def contract(self, n: int, v: Vector) -> Vector:
        """s_n: F_n → F_{n+1} (n = −1 parte do módulo resolvido)."""
        ...


class Resolution:
    """
    Complexo F_n → … → F_0 → M de módulos livres sobre B (Λ ou Λ^e).
    boundary(0) é a aumentação F_0 → M; boundary(n) = d_n para n ≥ 1.
    """

    def __init__(
        self,
        kind: ResolutionKind,
        base: Algebra,
        target: ModuleOver,
        terms: list[FreeModule],
        differentials: list[FreeMap | None],
        augmentation: FreeMap,
        name: str = "",
    ):
        self.kind = kind
        self.base = base
        self.algebra = target.algebra
        self.field = base.field
        self.target = target
        self.terms = terms
        self.differentials = differentials
        self.augmentation = augmentation
        self.name = name or f"res({base.name})"
        self.homotopy: Contraction | None = None
        self._solvers: dict[int, Solver] = {}

    def __repr__(self) -> str:
        return f"Resolution({self.name}, {self.kind.value}, ranks={self.ranks()})"

    @property
    def n_max(self) -> int:
        return len(self.terms) - 1

    def rank(self, n: int) -> int:
        return self.terms[n].rank if 0 <= n <= self.n_max else 0

    def ranks(self) -> list[int]:
        return [t.rank for t in self.terms]

    def generator_degrees(self) -> list[list[int] | None]:
        return [t.degrees for t in self.terms]

    def boundary(self, n: int) -> FreeMap:
        return self.augmentation if n == 0 else self.differentials[n]

    def solver(self, n: int) -> Solver:
        if n not in self._solvers:
            self._solvers[n] = Solver(self.boundary(n).matrix)
        return self._solvers[n]

    @cached_property
    def small(self) -> bool:
        return self.is_small()

    def is_small(self) -> bool:
        """im d_n ⊆ I(B)·F_{n−1}: nenhuma imagem tem componente em e_0·gen."""
        for n in range(1, self.n_max + 1):
            term = self.terms[n - 1]
            for img in self.differentials[n].images:
                if any(term.split(idx)[1] == 0 for idx in img):
                    return False
        return True

    def check_d_squared(self) -> bool:
        for n in range(1, self.n_max + 1):
            prev = self.boundary(n - 1)
            for img in self.differentials[n].images:
                if prev.apply(img):
                    return False
        return True

    def homology_dims(self, upto: int | None = None) -> list[int]:
        """dim H_n = dim ker ∂_n − posto ∂_{n+1}, para n = 0..upto (H_0 já aumentado)."""
        upto = self.n_max - 1 if upto is None else min(upto, self.n_max - 1)
        dims = []
        for n in range(upto + 1):
            m = self.boundary(n).matrix
            kernel = m.ncols - self.solver(n).rank
            dims.append(kernel - self.solver(n + 1).rank)
        return dims

    def is_exact(self, upto: int | None = None) -> bool:
        return all(d == 0 for d in self.homology_dims(upto))

    def contract(self, n: int, v: Vector) -> Vector:
        if self.homotopy is None:
            raise AxiomError("Resolução sem homotopia contrativa.")
        return self.homotopy.contract(n, v)

    # --- Serialização ---

    def to_doc(self) -> ResolutionDoc:
        f = self.field

        def sparse(v: Vector) -> list[list]:
            return [[idx, f.to_json(c)] for idx, c in sorted(v.items())]

        return ResolutionDoc(
            kind=self.kind,
            base=self.base.to_doc(),
            ranks=self.ranks(),
            generator_degrees=[t.degrees or [] for t in self.terms],
            differentials=[[sparse(v) for v in self.differentials[n].images] for n in range(1, self.n_max + 1)],
            augmentation=[sparse(v) for v in self.augmentation.images],
            small=self.small,
            target=self.target.name,
        )

    @classmethod
    def from_doc(cls, doc: ResolutionDoc | dict) -> "Resolution":
        if isinstance(doc, dict):
            doc = ResolutionDoc.model_validate(doc)
        base = Algebra.from_doc(doc.base)
        f = base.field
        if doc.kind is ResolutionKind.BIMODULE:
            target: ModuleOver = RegularBimodule(base)
        else:
            target = TrivialModule(base)
        algebra = target.algebra
        terms = [
            FreeModule(algebra, r, degrees=(degs or None), name=f"F{n}")
            for n, (r, degs) in enumerate(zip(doc.ranks, doc.generator_degrees))
        ]

        def dense(entries: list[list]) -> Vector:
            return {int(idx): f.from_json(c) for idx, c in entries}

        augmentation = FreeMap(terms[0], target, [dense(v) for v in doc.augmentation])
        differentials: list[FreeMap | None] = [None]
        for n, images in enumerate(doc.differentials, start=1):
            differentials.append(FreeMap(terms[n], terms[n - 1], [dense(v) for v in images]))
        res = cls(doc.kind, base, target, terms, differentials, augmentation)
        if res.small != doc.small:
            raise AxiomError("Certificado de pequenez do pacote não confere.")
        return res


# --- Coberturas projetivas ---

def _require_local(b: Algebra) -> None:
    if b.nilpotency_index() is None:
        raise NotLocal(f"{b.name} não é local (I não nilpotente).")


def _cover(module: ModuleOver, sub: Subspace, gens: list[Vector]) -> list[Vector]:
    """Levantamentos de uma base de sub/(I·sub), com I·sub = Σ_s s·sub."""
    radical = Subspace(module.field, module.dim,
                       (module.act_vec(s, v) for s in gens for v in sub.basis))
    return QuotientSpace(sub, radical).complement


def minimal_generators(m: ModuleOver) -> list[Vector]:
    """Levantamentos de uma base de M/(I·M), determinísticos pelos pivôs."""
    _require_local(m.algebra)
    return _cover(m, Subspace.full(m.field, m.dim), m.algebra.generators())


def _twist(cover: list[Vector], degrees: list[int] | None, field: FieldSpec, rng) -> list[Vector]:
    """Mudança unitriangular aleatória dos geradores dentro de cada grau interno."""
    out = []
    for k, v in enumerate(cover):
        w = dict(v)
        for j in range(k):
            if degrees is None or degrees[j] == degrees[k]:
                c = int(rng.integers(-2, 3))
                if c:
                    vec_axpy(w, field.norm(c), cover[j], field)
        out.append(w)
    return out


def _kernel(fmap: FreeMap) -> Subspace:
    source, target = fmap.source, fmap.target
    col_w = source.coordinate_weights
    row_w = getattr(target, "coordinate_weights", None)
    if col_w is not None and row_w is not None:
        return Subspace(fmap.field, source.dim, block_kernel(fmap.matrix, col_w, row_w))
    return kernel_basis(fmap.matrix)


def minimal_resolution(
    a: Algebra,
    m: ModuleOver,
    n_max: int,
    twist_seed: int | None = None,
    name: str = "",
) -> Resolution:
    """
    Coberturas projetivas iteradas: F_n cobre o núcleo de F_{n−1} → F_{n−2}.
    Cada núcleo é um submódulo; os geradores são uma base de K/(I·K).
    """
    b = m.algebra
    _require_local(b)
    gens = b.generators()
    kind = ResolutionKind.BIMODULE if isinstance(b, EnvelopingAlgebra) else ResolutionKind.LEFT
    rng = np.random.default_rng(twist_seed) if twist_seed is not None else None
    f = a.field

    def degrees_of(module: ModuleOver, vectors: list[Vector]) -> list[int] | None:
        degs = [module.weight_of(v) for v in vectors]
        return None if any(d is None for d in degs) else degs

    cover = minimal_generators(m)
    degs = degrees_of(m, cover)
    if rng is not None:
        cover = _twist(cover, degs, f, rng)
    terms = [FreeModule(b, len(cover), degrees=degs, name="F0")]
    augmentation = FreeMap(terms[0], m, cover)
    differentials: list[FreeMap | None] = [None]
    previous = augmentation
    for n in range(1, n_max + 1):
        kernel = _kernel(previous)
        cover = _cover(terms[n - 1], kernel, gens)
        degs = degrees_of(terms[n - 1], cover)
        if rng is not None:
            cover = _twist(cover, degs, f, rng)
        term = FreeModule(b, len(cover), degrees=degs, name=f"F{n}")
        previous = FreeMap(term, terms[n - 1], cover)
        terms.append(term)
        differentials.append(previous)
        logger.debug(f"{name or a.name}: grau {n} com posto {len(cover)}.")
    res = Resolution(kind, a, m, terms, differentials, augmentation, name=name or f"min({a.name})")
    logger.info(f"Resolução mínima de {m.name} sobre {b.name}: postos {res.ranks()}.")
    return res


def minimal_bimodule_resolution(a: Algebra, n_max: int, twist_seed: int | None = None) -> Resolution:
    """Resolução pequena de Λ sobre Λ^e com P_0 = Λ^e."""
    a = a.adapted()
    res = minimal_resolution(a, RegularBimodule(a), n_max, twist_seed=twist_seed, name=f"bimin({a.name})")
    if res.rank(0) != 1:
        raise NotSmall("P_0 tem de ser Λ^e.")
    return res


def resolution_of_k(a: Algebra, n_max: int) -> Resolution:
    a = a.adapted()
    return minimal_resolution(a, TrivialModule(a), n_max, name=f"min_k({a.name})")


# --- Homotopia contrativa ---

class LeftHomotopy:
    """
    Homotopia s linear à esquerda de uma resolução de bimódulos, com
    s_{−1}(λ) = λ·x_0 (x_0 = 1⊗1 quando P_0 = Λ^e) e d s + s d = id.
    Calculada a pedido nos elementos gen_g·e_j, que formam uma base à esquerda.
    """

    def __init__(self, res: Resolution):
        if res.kind is not ResolutionKind.BIMODULE:
            raise DimensionMismatch("Homotopia à esquerda só para resoluções de bimódulos.")
        self.res = res
        self.env: EnvelopingAlgebra = res.algebra
        self.field = res.field
        self._basic: dict[tuple[int, int, int], Vector] = {}
        self._x0 = res.solver(0).solve_vector(dict(res.base.unit))

    def _left(self, i: int, v: Vector, n: int) -> Vector:
        return self.res.terms[n].act(self.env.pair(i, 0), v)

    def contract(self, n: int, v: Vector) -> Vector:
        if n == -1:
            out: Vector = {}
            for i, c in v.items():
                vec_axpy(out, c, self._left(i, self._x0, 0), self.field)
            return out
        term = self.res.terms[n]
        out = {}
        for idx, c in v.items():
            g, k = term.split(idx)
            i, j = self.env.split(k)
            basic = self.basic(n, g, j)
            if basic:
                vec_axpy(out, c, basic if i == 0 else self._left(i, basic, n + 1), self.field)
        return out

    def basic(self, n: int, g: int, j: int) -> Vector:
        key = (n, g, j)
        if key not in self._basic:
            res = self.res
            x = {res.terms[n].index(g, self.env.pair(0, j)): 1}
            rhs = dict(x)
            vec_axpy(rhs, -1, self.contract(n - 1, res.boundary(n).apply(x)), self.field)
            self._basic[key] = res.solver(n + 1).solve_vector(rhs) if rhs else {}
        return self._basic[key]


def left_homotopy(res: Resolution) -> LeftHomotopy:
    """Instala e devolve a homotopia contrativa linear à esquerda."""
    homotopy = LeftHomotopy(res)
    res.homotopy = homotopy
    return homotopy


def verify_homotopy(res: Resolution, upto: int | None = None) -> CheckReport:
    """∂s + s∂ = id em F_n (n ≤ upto) e ∂_0 s_{−1} = id no módulo resolvido."""
    upto = res.n_max - 1 if upto is None else upto
    report = CheckReport(check="homotopy", params={"resolution": res.name, "upto": upto})
    target = res.target
    for m in range(target.dim):
        back = res.augmentation.apply(res.contract(-1, {m: 1}))
        report.require("section", back == {m: 1}, coordinate=m)
    for n in range(upto + 1):
        for idx in range(res.terms[n].dim):
            x = {idx: 1}
            total = res.boundary(n + 1).apply(res.contract(n, x))
            vec_axpy(total, 1, res.contract(n - 1, res.boundary(n).apply(x)), res.field)
            report.require("identity", total == x, degree=n, coordinate=idx)
    return report


# --- Ω ---

@dataclass
class OmegaData:
    """Ω = ker(Λ⊗Λ → Λ) e o sub-bimódulo gerado pelos s⊗1 − 1⊗s."""
    kernel: Subspace
    generated: Subspace
    trusted: int | None = None

    @property
    def dim(self) -> int:
        return self.kernel.dim

    @property
    def is_generated(self) -> bool:
        return self.kernel == self.generated


def omega_bimodule(a: Algebra, trusted_degree: int | None = None) -> OmegaData:
    """
    Núcleo da multiplicação nas coordenadas de Λ^e (i·d + j = e_i⊗e_j) e o fecho
    bimodular dos s⊗1 − 1⊗s. Com trusted_degree, ambos são cortados aos pesos de confiança.
    """
    a = a.adapted()
    env = EnvelopingAlgebra(a)
    f = a.field
    mult = Matrix(f, a.dim, env.dim, [a.mul_basis(*env.split(k)) for k in range(env.dim)])
    kernel = kernel_basis(mult)
    diffs = []
    for s in a.generators():
        v: Vector = {}
        for i, c in s.items():
            vec_axpy(v, c, {env.pair(i, 0): 1}, f)
            vec_axpy(v, -c, {env.pair(0, i): 1}, f)
        diffs.append(v)
    generated = env.product_span(({k: 1} for k in range(env.dim)), diffs)
    if trusted_degree is not None and env.weights is not None:
        window = Subspace(f, env.dim, ({k: 1} for k in range(env.dim) if env.weights[k] <= trusted_degree))
        kernel = kernel.intersection(window)
        generated = generated.intersection(window)
    return OmegaData(kernel=kernel, generated=generated, trusted=trusted_degree)



def tensor_down(res: Resolution) -> Resolution:
    """
    P ⊗_Λ k: cada termo e_i⊗e_j·gen com j ≠ 0 anula-se. Devolve uma resolução
    livre à esquerda de k com os mesmos geradores (pequena se P o for).
    """
    if res.kind is not ResolutionKind.BIMODULE:
        raise DimensionMismatch("tensor_down exige uma resolução de bimódulos.")
    a = res.base
    env: EnvelopingAlgebra = res.algebra
    f = a.field
    target = TrivialModule(a)
    terms = [FreeModule(a, t.rank, labels=t.labels, degrees=t.degrees, name=t.name) for t in res.terms]

    def down(v: Vector, source: FreeModule, term: FreeModule) -> Vector:
        out: Vector = {}
        for g, k, c in source.terms(v):
            i, j = env.split(k)
            if j == 0:
                vec_axpy(out, c, {term.index(g, i): 1}, f)
        return out

    augmentation = FreeMap(terms[0], target,
                           [{0: a.epsilon(v)} if a.epsilon(v) else {} for v in res.augmentation.images])
    differentials: list[FreeMap | None] = [None]
    for n in range(1, res.n_max + 1):
        images = [down(v, res.terms[n - 1], terms[n - 1]) for v in res.differentials[n].images]
        differentials.append(FreeMap(terms[n], terms[n - 1], images))
    return Resolution(ResolutionKind.LEFT, a, target, terms, differentials, augmentation, name=f"{res.name}⊗k")
