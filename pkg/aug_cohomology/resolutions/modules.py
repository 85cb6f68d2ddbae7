# --- aug_cohomology/resolutions/modules.py ---

"""
Módulos sobre álgebras aumentadas e módulos livres.

Um bimódulo sobre Λ é um módulo à esquerda sobre Λ^e (EnvelopingAlgebra), com
(a⊗b)·x = a·x·b. Num módulo livre de posto r sobre B a coordenada g·dim(B) + k
representa e_k·gen_g.
"""

import logging
from functools import cached_property
from typing import Sequence

from aug_cohomology.algebras.algebra import Algebra, EnvelopingAlgebra
from aug_cohomology.core.errors import DimensionMismatch
from aug_cohomology.core.linalg import Matrix, Subspace, Vector, vec_axpy, vec_scale
from aug_cohomology.core.types import CheckReport

logger = logging.getLogger(__name__)


class ModuleOver:
    """Módulo à esquerda de dimensão finita dado pela ação de cada e_i da base."""

    def __init__(self, algebra: Algebra, dim: int, action: Sequence[Matrix] | None = None, name: str = ""):
        self.algebra = algebra
        self.field = algebra.field
        self.dim = dim
        self.name = name or f"M{dim}"
        self._action = list(action) if action is not None else None
        if self._action is not None and len(self._action) != algebra.dim:
            raise DimensionMismatch("É preciso uma matriz de ação por elemento da base.")

    def act(self, i: int, v: Vector) -> Vector:
        """e_i · v."""
        return self._action[i].apply(v)

    def act_vec(self, a: Vector, v: Vector) -> Vector:
        out: Vector = {}
        for i, c in a.items():
            vec_axpy(out, c, self.act(i, v), self.field)
        return out

    def action_matrix(self, i: int) -> Matrix:
        return Matrix(self.field, self.dim, self.dim, [self.act(i, {m: 1}) for m in range(self.dim)])

    def weight_of(self, v: Vector) -> int | None:
        return None

    def check(self) -> CheckReport:
        """ρ(e_i)ρ(e_j) = Σ c_ij^k ρ(e_k) e a unidade atua como identidade."""
        b = self.algebra
        report = CheckReport(check="module", params={"module": self.name, "dim": self.dim})
        for m in range(self.dim):
            report.require("unit", self.act_vec(b.unit, {m: 1}) == {m: 1}, coordinate=m)
            for i in range(b.dim):
                inner = self.act(i, {m: 1})
                for j in range(b.dim):
                    lhs = self.act(j, inner)
                    rhs = self.act_vec(b.mul_basis(j, i), {m: 1})
                    report.require("associative_action", lhs == rhs, pair=[j, i], coordinate=m)
        return report

    def submodule(self, sub: Subspace, name: str = "") -> "ModuleOver":
        """Submódulo nas coordenadas da base escalonada de `sub` (tem de ser estável)."""
        basis = sub.basis
        action = []
        for i in range(self.algebra.dim):
            cols = []
            for v in basis:
                w = self.act(i, v)
                if not sub.contains(w):
                    raise DimensionMismatch("O subespaço não é estável pela ação.")
                cols.append({k: c for k, c in enumerate(sub.coordinates(w)) if c})
            action.append(Matrix(self.field, len(basis), len(basis), cols))
        return ModuleOver(self.algebra, len(basis), action, name=name or f"{self.name}'")


class TrivialModule(ModuleOver):
    """k com e_i a atuar por ε(e_i)."""

    def __init__(self, algebra: Algebra):
        super().__init__(algebra, 1, name="k")

    def act(self, i: int, v: Vector) -> Vector:
        return vec_scale(v, self.algebra.epsilon({i: 1}), self.field)

    def weight_of(self, v: Vector) -> int | None:
        return 0 if v else None


class RegularModule(ModuleOver):
    """Λ como módulo à esquerda sobre si próprio."""

    def __init__(self, algebra: Algebra):
        super().__init__(algebra, algebra.dim, name=algebra.name)

    def act(self, i: int, v: Vector) -> Vector:
        return self.algebra.multiply({i: 1}, v)

    def weight_of(self, v: Vector) -> int | None:
        return None if self.algebra.filtered else self.algebra.weight_of(v)


class RegularBimodule(ModuleOver):
    """Λ como bimódulo: (e_i ⊗ e_j)·x = e_i x e_j."""

    def __init__(self, base: Algebra, enveloping: EnvelopingAlgebra | None = None):
        super().__init__(enveloping or EnvelopingAlgebra(base), base.dim, name=base.name)
        self.base = base

    def act(self, idx: int, v: Vector) -> Vector:
        i, j = self.algebra.split(idx)
        return self.base.multiply(self.base.multiply({i: 1}, v), {j: 1})

    def weight_of(self, v: Vector) -> int | None:
        return None if self.base.filtered else self.base.weight_of(v)


class RestrictedBimodule(ModuleOver):
    """Bimódulo sobre Λ obtido de um bimódulo de Δ por restrição ao longo de ι: Λ → Δ."""

    def __init__(self, base: Algebra, module: RegularBimodule, inclusion: Matrix,
                 enveloping: EnvelopingAlgebra | None = None):
        super().__init__(enveloping or EnvelopingAlgebra(base), module.dim, name=f"{module.name}|{base.name}")
        self.base = base
        self.inner = module
        self.inclusion = inclusion

    def act(self, idx: int, v: Vector) -> Vector:
        i, j = self.algebra.split(idx)
        outer = self.inner.base
        left = self.inclusion.cols[i]
        right = self.inclusion.cols[j]
        return outer.multiply(outer.multiply(left, v), right)


# --- Módulos livres ---

class FreeModule(ModuleOver):
    """B^r com geradores etiquetados e graus internos opcionais."""

    def __init__(self, algebra: Algebra, rank: int, labels: Sequence[str] | None = None,
                 degrees: Sequence[int] | None = None, name: str = ""):
        super().__init__(algebra, rank * algebra.dim, name=name or f"F{rank}")
        self.rank = rank
        self.labels = list(labels) if labels is not None else [f"g{g}" for g in range(rank)]
        self.degrees = list(degrees) if degrees is not None else None

    def index(self, g: int, k: int) -> int:
        return g * self.algebra.dim + k

    def split(self, idx: int) -> tuple[int, int]:
        return divmod(idx, self.algebra.dim)

    def generator(self, g: int) -> Vector:
        return {self.index(g, 0): 1}

    def act(self, i: int, v: Vector) -> Vector:
        b = self.algebra
        out: Vector = {}
        for idx, c in v.items():
            g, k = divmod(idx, b.dim)
            prod = b.mul_basis(i, k)
            for p, x in prod.items():
                vec_axpy(out, c, {g * b.dim + p: x}, self.field)
        return out

    @cached_property
    def coordinate_weights(self) -> list[int] | None:
        b = self.algebra
        if self.degrees is None or b.weights is None or b.filtered:
            return None
        return [self.degrees[g] + b.weights[k] for g in range(self.rank) for k in range(b.dim)]

    def weight_of(self, v: Vector) -> int | None:
        weights = self.coordinate_weights
        if weights is None or not v:
            return None
        ws = {weights[i] for i in v}
        return ws.pop() if len(ws) == 1 else None

    def terms(self, v: Vector) -> list[tuple[int, int, object]]:
        """Decomposição (gerador, índice de B, coeficiente)."""
        return [(*divmod(idx, self.algebra.dim), c) for idx, c in v.items()]


class FreeMap:
    """Morfismo de B-módulos definido pelas imagens dos geradores de um módulo livre."""

    def __init__(self, source: FreeModule, target: ModuleOver, images: Sequence[Vector]):
        if len(images) != source.rank:
            raise DimensionMismatch("É preciso uma imagem por gerador.")
        self.source = source
        self.target = target
        self.images = [dict(v) for v in images]
        self.field = source.field

    def apply(self, v: Vector) -> Vector:
        out: Vector = {}
        dim_b = self.source.algebra.dim
        for idx, c in v.items():
            g, k = divmod(idx, dim_b)
            img = self.images[g]
            if img:
                vec_axpy(out, c, img if k == 0 else self.target.act(k, img), self.field)
        return out

    @cached_property
    def matrix(self) -> Matrix:
        """Matriz k-linear (dim target × dim source)."""
        return Matrix(self.field, self.target.dim, self.source.dim,
                      [self.apply({j: 1}) for j in range(self.source.dim)])

    def then(self, other: "FreeMap") -> "FreeMap":
        """other ∘ self."""
        return FreeMap(self.source, other.target, [other.apply(v) for v in self.images])

    def is_zero(self) -> bool:
        return not any(self.images)
