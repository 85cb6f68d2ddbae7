# --- aug_cohomology/algebras/morphism.py ---

import logging
from dataclasses import dataclass

from aug_cohomology.algebras.algebra import Algebra
from aug_cohomology.core.errors import AxiomError, DimensionMismatch
from aug_cohomology.core.linalg import Matrix, Solver, Subspace, Vector
from aug_cohomology.core.types import CheckReport

logger = logging.getLogger(__name__)


@dataclass
class Morphism:
    """Aplicação linear entre álgebras aumentadas (matriz target.dim × source.dim)."""
    source: Algebra
    target: Algebra
    matrix: Matrix
    name: str = ""

    def __post_init__(self):
        self.source.field.require_same(self.target.field)
        if (self.matrix.nrows, self.matrix.ncols) != (self.target.dim, self.source.dim):
            raise DimensionMismatch(
                f"Matriz {self.matrix.nrows}x{self.matrix.ncols} incompatível com "
                f"{self.source.name} → {self.target.name}."
            )
        if not self.name:
            self.name = f"{self.source.name}→{self.target.name}"

    def apply(self, v: Vector) -> Vector:
        return self.matrix.apply(v)

    def image(self, i: int) -> Vector:
        return self.matrix.cols[i]


def identity(a: Algebra) -> Morphism:
    return Morphism(a, a, Matrix.identity(a.field, a.dim), name=f"id_{a.name}")


def from_basis_images(source: Algebra, target: Algebra, images: list[Vector], name: str = "") -> Morphism:
    if len(images) != source.dim:
        raise DimensionMismatch("É preciso uma imagem por elemento da base.")
    return Morphism(source, target, Matrix.from_columns(source.field, target.dim, images), name=name)


def from_generators(source: Algebra, target: Algebra, gen_images: dict[int, Vector], name: str = "") -> Morphism:
    """
    Estende multiplicativamente as imagens dos geradores (índices da base).
    Falha com AxiomError se os produtos dos geradores não gerarem a fonte.
    """
    f = source.field
    pairs: list[tuple[Vector, Vector]] = [(dict(source.unit), dict(target.unit))]
    gens = [({i: 1}, dict(v)) for i, v in gen_images.items()]
    span = Subspace(f, source.dim, [pairs[0][0]])
    frontier = list(pairs)
    for g in gens:
        if span.add(g[0]):
            pairs.append(g)
            frontier.append(g)
    while frontier:
        fresh = []
        for u, fu in frontier:
            for g, fg in gens:
                prod = source.multiply(u, g)
                if prod and span.add(prod):
                    item = (prod, target.multiply(fu, fg))
                    pairs.append(item)
                    fresh.append(item)
        frontier = fresh
    if span.dim != source.dim:
        raise AxiomError("Os geradores indicados não geram a álgebra de partida.")
    sources = Matrix.from_columns(f, source.dim, [u for u, _ in pairs])
    images = Matrix.from_columns(f, target.dim, [fu for _, fu in pairs])
    solver = Solver(sources)
    cols = [images.apply(solver.solve_vector({i: 1})) for i in range(source.dim)]
    return Morphism(source, target, Matrix(f, target.dim, source.dim, cols), name=name)


def morphism_check(f: Morphism) -> CheckReport:
    """Multiplicatividade nos pares da base, unidade e compatibilidade com as aumentações."""
    a, b = f.source, f.target
    report = CheckReport(check="morphism", params={"morphism": f.name})
    for i in range(a.dim):
        for j in range(a.dim):
            lhs = f.apply(a.mul_basis(i, j))
            rhs = b.multiply(f.image(i), f.image(j))
            report.require("multiplicative", lhs == rhs, pair=[a.labels[i], a.labels[j]])
        report.require("augmentation", b.epsilon(f.image(i)) == a.epsilon({i: 1}), element=a.labels[i])
    report.require("unit", f.apply(a.unit) == b.unit)
    return report


def compose(f: Morphism, g: Morphism) -> Morphism:
    """f ∘ g (primeiro g, depois f)."""
    if g.target.dim != f.source.dim or g.target.labels != f.source.labels:
        raise DimensionMismatch(f"Composição impossível: {g.name} seguido de {f.name}.")
    return Morphism(g.source, f.target, f.matrix @ g.matrix, name=f"{f.name}∘{g.name}")
