# --- aug_cohomology/algebras/constructions.py ---

"""
Produto Λ*Γ (produto fibrado sobre k) e coproduto Λ⊔Γ (produto livre) de álgebras
aumentadas, com os morfismos canónicos e o teste do lema chinês dos restos.
"""

import logging
from dataclasses import dataclass, field as dc_field

from aug_cohomology.algebras.algebra import Algebra, quotient_algebra
from aug_cohomology.algebras.graded import GradedAlgebra, word_label
from aug_cohomology.algebras.morphism import Morphism, morphism_check
from aug_cohomology.core.errors import AxiomError, CutoffTooSmall, NotAnIdeal, NotNilpotent
from aug_cohomology.core.linalg import Matrix, QuotientSpace, Subspace, Vector, vec_axpy
from aug_cohomology.core.types import CheckReport, CoproductGrading

logger = logging.getLogger(__name__)

LEFT, RIGHT = 0, 1


def _disjoint_labels(left: list[str], right: list[str]) -> list[str]:
    taken = set(left)
    out = []
    for label in right:
        while label in taken:
            label = f"{label}'"
        taken.add(label)
        out.append(label)
    return out


# --- Produto ---

@dataclass
class ProductResult:
    algebra: Algebra
    proj_left: Morphism
    proj_right: Morphism
    incl_left: Morphism
    incl_right: Morphism

    @property
    def offset(self) -> int:
        """Índice em Λ*Γ de e_1 de Γ menos 1."""
        return self.incl_left.source.dim - 1

    def index_left(self, i: int) -> int:
        return i

    def index_right(self, j: int) -> int:
        return 0 if j == 0 else self.offset + j

    def ideal_left(self) -> list[int]:
        return list(range(1, self.offset + 1))

    def ideal_right(self) -> list[int]:
        return list(range(self.offset + 1, self.algebra.dim))

    def side_of(self, k: int) -> int | None:
        """LEFT/RIGHT para índices de I(Λ)/I(Γ); None para a unidade."""
        if k == 0:
            return None
        return LEFT if k <= self.offset else RIGHT


def product(a: Algebra, b: Algebra, name: str = "") -> ProductResult:
    """
    Λ*Γ = {(λ, γ) : ε(λ) = ε(γ)} na base (1, I(Λ), I(Γ)); os produtos cruzados
    I(Λ)·I(Γ) anulam-se.
    """
    a.field.require_same(b.field)
    a, b = a.adapted(), b.adapted()
    f = a.field
    off = a.dim - 1
    left_map = list(range(a.dim))
    right_map = [0] + [off + j for j in range(1, b.dim)]
    mul: dict[tuple[int, int], Vector] = {}
    for (i, j), v in a._mul_items():
        mul[(left_map[i], left_map[j])] = {left_map[k]: c for k, c in v.items()}
    for (i, j), v in b._mul_items():
        if i == 0 and j == 0:
            continue  # 1·1 já vem de Λ
        mul[(right_map[i], right_map[j])] = {right_map[k]: c for k, c in v.items()}
    labels = ["1"] + a.labels[1:] + _disjoint_labels(a.labels, b.labels[1:])
    weights = None
    if a.weights is not None and b.weights is not None:
        weights = a.weights + b.weights[1:]
    c = Algebra(f, labels, mul, {0: 1}, {0: 1}, weights, name=name or f"{a.name}*{b.name}")
    dim = c.dim
    proj_left = Matrix(f, a.dim, dim, [{k: 1} if k < a.dim else {} for k in range(dim)])
    proj_right = Matrix(f, b.dim, dim, [{0: 1}] + [{} for _ in range(off)] + [{j: 1} for j in range(1, b.dim)])
    incl_left = Matrix(f, dim, a.dim, [{left_map[i]: 1} for i in range(a.dim)])
    incl_right = Matrix(f, dim, b.dim, [{right_map[j]: 1} for j in range(b.dim)])
    logger.debug(f"Produto {c.name} com dimensão {dim}.")
    return ProductResult(
        algebra=c,
        proj_left=Morphism(c, a, proj_left, name="p_left"),
        proj_right=Morphism(c, b, proj_right, name="p_right"),
        incl_left=Morphism(a, c, incl_left, name="i_left"),
        incl_right=Morphism(b, c, incl_right, name="i_right"),
    )


def product_pairing(result: ProductResult, f: Morphism, g: Morphism) -> Morphism:
    """O morfismo induzido (f, g): Θ → Λ*Γ da propriedade universal."""
    theta = f.source
    c = result.algebra
    cols = []
    for i in range(theta.dim):
        v = result.incl_left.apply(f.image(i))
        vec_axpy(v, 1, result.incl_right.apply(g.image(i)), c.field)
        vec_axpy(v, -theta.epsilon({i: 1}), {0: 1}, c.field)
        cols.append(v)
    return Morphism(theta, c, Matrix(c.field, c.dim, theta.dim, cols), name="pairing")


# --- Coproduto ---

Letter = tuple[int, int]
Word = tuple[Letter, ...]


@dataclass
class CoproductResult:
    algebra: GradedAlgebra
    incl_left: Morphism
    incl_right: Morphism
    words: list[Word]
    word_index: dict[Word, int] = dc_field(default_factory=dict)
    factors: tuple[Algebra, Algebra] | None = None

    def element(self, *labels: str) -> Vector:
        """Palavra alternada dada pelas etiquetas das letras (ex.: element("x", "y"))."""
        a, b = self.factors
        right_labels = _disjoint_labels(a.labels, b.labels)
        word = []
        for label in labels:
            if label in a.labels[1:]:
                word.append((LEFT, a.labels.index(label)))
            else:
                word.append((RIGHT, right_labels.index(label)))
        return {self.word_index[tuple(word)]: 1}


def coproduct(
    a: Algebra,
    b: Algebra,
    cutoff: int,
    grading: CoproductGrading | str = CoproductGrading.LENGTH,
    guard_band: int = 1,
    name: str = "",
) -> CoproductResult:
    """
    Base de palavras alternadas em I(Λ), I(Γ). O produto funde letras adjacentes
    do mesmo fator (u_k·v_1 cai em I, logo a palavra encurta uma letra). Com grading
    'length' o grau é o comprimento (uma filtração); com 'weight' é a soma dos pesos.
    """
    grading = CoproductGrading(grading)
    a.field.require_same(b.field)
    if cutoff <= guard_band:
        raise CutoffTooSmall(f"Corte {cutoff} sem graus de confiança (margem {guard_band}).")
    a, b = a.adapted(), b.adapted()
    for factor in (a, b):
        if factor.nilpotency_index() is None:
            raise NotNilpotent(f"I({factor.name}) não é nilpotente.")
    if grading is CoproductGrading.WEIGHT and (a.weights is None or b.weights is None):
        raise AxiomError("A graduação por peso exige pesos nos dois fatores.")
    factors = (a, b)

    def letter_degree(letter: Letter) -> int:
        if grading is CoproductGrading.LENGTH:
            return 1
        return factors[letter[0]].weights[letter[1]]

    letters = [(LEFT, i) for i in range(1, a.dim)] + [(RIGHT, j) for j in range(1, b.dim)]
    words: list[Word] = [()]
    degree: dict[Word, int] = {(): 0}
    frontier: list[Word] = [()]
    while frontier:
        fresh = []
        for w in frontier:
            for letter in letters:
                if w and w[-1][0] == letter[0]:
                    continue
                d = degree[w] + letter_degree(letter)
                if d <= cutoff:
                    nw = w + (letter,)
                    degree[nw] = d
                    fresh.append(nw)
        words.extend(fresh)
        frontier = fresh
    words.sort(key=lambda w: (degree[w], len(w), w))
    index = {w: k for k, w in enumerate(words)}
    f = a.field

    def word_product(u: Word, v: Word) -> Vector:
        if not u:
            return {index[v]: 1}
        if not v:
            return {index[u]: 1}
        if u[-1][0] != v[0][0]:
            w = u + v
            return {index[w]: 1} if w in index else {}
        side = u[-1][0]
        merged = factors[side].mul_basis(u[-1][1], v[0][1])
        out: Vector = {}
        for k, c in merged.items():
            if k == 0:
                raise AxiomError("Produto de elementos de I com parte escalar: aumentação inválida.")
            w = u[:-1] + ((side, k),) + v[1:]
            if w in index:
                vec_axpy(out, c, {index[w]: 1}, f)
        return out

    mul = {}
    for u in words:
        for v in words:
            prod = word_product(u, v)
            if prod:
                mul[(index[u], index[v])] = prod
    right_labels = _disjoint_labels(a.labels, b.labels)
    letter_names = {LEFT: a.labels, RIGHT: right_labels}
    labels = [word_label([letter_names[s][i] for s, i in w]) for w in words]
    algebra = GradedAlgebra(
        f, labels, mul, [degree[w] for w in words], cutoff, guard_band=guard_band,
        name=name or f"{a.name}⊔{b.name}", filtered=grading is CoproductGrading.LENGTH,
    )

    def inclusion(side: int, factor: Algebra) -> Morphism:
        cols = [{0: 1}]
        for i in range(1, factor.dim):
            w = ((side, i),)
            cols.append({index[w]: 1} if w in index else {})
        return Morphism(factor, algebra, Matrix(f, algebra.dim, factor.dim, cols), name=f"i_{factor.name}")

    logger.debug(f"Coproduto {algebra.name} ({grading.value}) com dimensões {algebra.dims()}.")
    return CoproductResult(
        algebra=algebra,
        incl_left=inclusion(LEFT, a),
        incl_right=inclusion(RIGHT, b),
        words=words,
        word_index=index,
        factors=factors,
    )


# --- Lema chinês dos restos ---

def chinese_remainder_check(a: Algebra, i: Subspace, j: Subspace) -> CheckReport:
    """
    Se I + J = I(Λ) e I ∩ J = IJ então λ + IJ ↦ (λ + I, λ + J) é um isomorfismo
    Λ/IJ ≅ Λ/I * Λ/J; o isomorfismo é construído e verificado.
    """
    a = a.adapted()
    a.require_ideal(i, "I")
    a.require_ideal(j, "J")
    report = CheckReport(check="chinese-remainder", params={"algebra": a.name, "dim_I": i.dim, "dim_J": j.dim})
    ideal = a.augmentation_ideal()
    ij = a.product_span(i.basis, j.basis)
    report.tables.update({"dim_I+J": i.sum(j).dim, "dim_I∩J": i.intersection(j).dim, "dim_IJ": ij.dim})
    if i.sum(j) != ideal or i.intersection(j) != ij:
        report.fail_hypotheses("É preciso I + J = I(Λ) e I ∩ J = IJ.")
        return report
    if not a.is_ideal(ij):
        raise NotAnIdeal("IJ não é um ideal bilateral.")

    whole, _ = quotient_algebra(a, ij, name=f"{a.name}/IJ")
    left, to_left = quotient_algebra(a, i, name=f"{a.name}/I")
    right, to_right = quotient_algebra(a, j, name=f"{a.name}/J")
    prod = product(left, right)
    # Λ/IJ tem base (1, complemento); os representantes vêm da própria construção.
    quotient_reps = [{0: 1}] + QuotientSpace(ideal, ij).complement
    cols = []
    for rep in quotient_reps:
        v = prod.incl_left.apply(to_left.apply(rep))
        vec_axpy(v, 1, prod.incl_right.apply(to_right.apply(rep)), a.field)
        vec_axpy(v, -a.epsilon(rep), {0: 1}, a.field)
        cols.append(v)
    natural = Morphism(whole, prod.algebra, Matrix(a.field, prod.algebra.dim, whole.dim, cols), name="natural")
    report.absorb("natural_map", morphism_check(natural))
    rank = natural.matrix.rank()
    report.require("bijective", rank == whole.dim == prod.algebra.dim,
                   rank=rank, dim_source=whole.dim, dim_target=prod.algebra.dim)
    report.tables.update({"dim_quotient": whole.dim, "dim_product": prod.algebra.dim})
    return report

