# --- aug_cohomology/algebras/algebra.py ---

import logging
from functools import cached_property
from typing import Iterable, Sequence

from pydantic import ValidationError

from aug_cohomology.core.errors import AxiomError, DimensionMismatch, NotAnIdeal
from aug_cohomology.core.linalg import (
    Matrix, QuotientSpace, Solver, Subspace, Vector, kernel_basis, vec_axpy,
)
from aug_cohomology.core.scalars import FieldSpec, Scalar
from aug_cohomology.core.types import AlgebraDoc, CheckReport

logger = logging.getLogger(__name__)


class Algebra:
    """
    Álgebra aumentada de dimensão finita dada por constantes de estrutura.

    A base está 'adaptada' quando e_0 = 1 e ε(e_i) = δ_{i0}; todas as construções
    do motor trabalham com álgebras adaptadas (ver `adapted`). Os pesos opcionais
    dão uma graduação interna usada para calcular por blocos.
    """

    # Pesos que apenas filtram (o produto pode baixar o peso) não se exigem homogéneos.
    filtered = False

    def __init__(
        self,
        field: FieldSpec,
        labels: Sequence[str],
        mul: dict[tuple[int, int], Vector],
        unit: Vector,
        aug: Vector,
        weights: Sequence[int] | None = None,
        name: str = "",
    ):
        self.field = field
        self.labels = list(labels)
        self.dim = len(self.labels)
        self._mul = {key: dict(v) for key, v in mul.items() if v}
        self.unit = dict(unit)
        self.aug = dict(aug)
        self.weights = list(weights) if weights is not None else None
        self.name = name or f"A{self.dim}"
        if self.weights is not None and len(self.weights) != self.dim:
            raise DimensionMismatch("Número de pesos diferente da dimensão.")

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.name}, dim={self.dim}, {self.field.name})"

    # --- Multiplicação ---

    def mul_basis(self, i: int, j: int) -> Vector:
        return self._mul.get((i, j), {})

    def multiply(self, u: Vector, v: Vector) -> Vector:
        out: Vector = {}
        for i, a in u.items():
            for j, b in v.items():
                prod = self.mul_basis(i, j)
                if prod:
                    vec_axpy(out, self.field.norm(a * b), prod, self.field)
        return out

    def basis_vector(self, i: int) -> Vector:
        return {i: 1}

    def element(self, label: str) -> Vector:
        return {self.labels.index(label): 1}

    def epsilon(self, v: Vector) -> Scalar:
        return self.field.norm(sum(c * self.aug.get(i, 0) for i, c in v.items()))

    @property
    def is_adapted(self) -> bool:
        return self.unit == {0: 1} and self.aug == {0: 1}

    @property
    def ideal_indices(self) -> list[int]:
        """Índices da base de I(Λ) numa álgebra adaptada."""
        return list(range(1, self.dim))

    def left_matrix(self, v: Vector) -> Matrix:
        """Matriz de x ↦ v·x."""
        return Matrix(self.field, self.dim, self.dim, [self.multiply(v, {j: 1}) for j in range(self.dim)])

    def right_matrix(self, v: Vector) -> Matrix:
        """Matriz de x ↦ x·v."""
        return Matrix(self.field, self.dim, self.dim, [self.multiply({j: 1}, v) for j in range(self.dim)])

    def weight_of(self, v: Vector) -> int | None:
        """Peso comum do suporte de v (None se não homogéneo ou sem pesos)."""
        if self.weights is None or not v:
            return None
        ws = {self.weights[i] for i in v}
        return ws.pop() if len(ws) == 1 else None

    # --- Mudança de base ---

    def adapted(self) -> "Algebra":
        """Base (1, base de ker ε); devolve self se já adaptada."""
        if self.is_adapted:
            return self
        f = self.field
        ker = kernel_basis(Matrix(f, 1, self.dim, [{0: self.aug[j]} if j in self.aug else {} for j in range(self.dim)]))
        new_basis = [self.unit] + ker.basis
        change = Matrix.from_columns(f, self.dim, new_basis)
        solver = Solver(change)
        if solver.rank != self.dim:
            raise AxiomError("Unidade pertence a ker ε: a base não pode ser adaptada.")
        mul: dict[tuple[int, int], Vector] = {}
        for i, u in enumerate(new_basis):
            for j, v in enumerate(new_basis):
                mul[(i, j)] = solver.solve_vector(self.multiply(u, v))
        labels = ["1"]
        for vec in ker.basis:
            p = min(vec)
            labels.append(self.labels[p] if vec == {p: 1} else f"{self.labels[p]}~")
        weights = None
        if self.weights is not None:
            ws = [self.weight_of(v) for v in ker.basis]
            if all(w is not None for w in ws):
                weights = [0] + ws
        logger.debug(f"Álgebra '{self.name}' adaptada (dim {self.dim}).")
        return Algebra(f, labels, mul, {0: 1}, {0: 1}, weights, name=self.name)

    # --- Ideais ---

    @cached_property
    def _ideal(self) -> Subspace:
        aug_row = Matrix(self.field, 1, self.dim, [{0: self.aug[j]} if j in self.aug else {} for j in range(self.dim)])
        return kernel_basis(aug_row)

    def augmentation_ideal(self) -> Subspace:
        return self._ideal

    def product_span(self, left: Iterable[Vector], right: Iterable[Vector]) -> Subspace:
        right = list(right)
        return Subspace(self.field, self.dim, (self.multiply(u, v) for u in left for v in right))

    def ideal_power(self, n: int) -> Subspace:
        if n <= 0:
            return Subspace.full(self.field, self.dim)
        power = self._ideal
        ideal_basis = self._ideal.basis
        for _ in range(n - 1):
            if power.dim == 0:
                break
            power = self.product_span(power.basis, ideal_basis)
        return power

    def nilpotency_index(self) -> int | None:
        """Menor N com I^N = 0 (N = 1 para k); None se não nilpotente em dim+1 passos."""
        power = self._ideal
        ideal_basis = self._ideal.basis
        for n in range(1, self.dim + 2):
            if power.dim == 0:
                return n
            power = self.product_span(power.basis, ideal_basis)
        return None

    def is_ideal(self, sub: Subspace) -> bool:
        for v in sub.basis:
            for i in range(self.dim):
                if not sub.contains(self.multiply({i: 1}, v)) or not sub.contains(self.multiply(v, {i: 1})):
                    return False
        return True

    def require_ideal(self, sub: Subspace, label: str = "J") -> None:
        if sub.ambient_dim != self.dim:
            raise DimensionMismatch(f"Subespaço {label} no ambiente errado.")
        if not self.is_ideal(sub):
            raise NotAnIdeal(f"{label} não é um ideal bilateral de {self.name}.")

    def _solve_linear_conditions(self, blocks: list[Matrix], domain: Sequence[int] | None = None) -> Subspace:
        """Núcleo conjunto de várias aplicações lineares, restrito a um domínio de índices."""
        dom = list(range(self.dim)) if domain is None else list(domain)
        stacked: list[Vector] = []
        for j in dom:
            col: Vector = {}
            offset = 0
            for m in blocks:
                for i, x in m.cols[j].items():
                    col[offset + i] = x
                offset += m.nrows
            stacked.append(col)
        total_rows = sum(m.nrows for m in blocks)
        ker = kernel_basis(Matrix(self.field, total_rows, len(dom), stacked))
        return Subspace(self.field, self.dim, ({dom[k]: c for k, c in v.items()} for v in ker.basis))

    def annihilator(self) -> Subspace:
        """A(Λ) = {γ ∈ I(Λ) : γ·e_i = 0 = e_i·γ para todo e_i em I(Λ)}."""
        if not self.is_adapted:
            raise AxiomError("annihilator exige uma base adaptada.")
        blocks = []
        for i in self.ideal_indices:
            blocks.append(self.left_matrix({i: 1}))
            blocks.append(self.right_matrix({i: 1}))
        if not blocks:
            return Subspace(self.field, self.dim)
        return self._solve_linear_conditions(blocks, self.ideal_indices)

    def center(self) -> Subspace:
        """Z(Λ): soluções de z·e_i − e_i·z = 0 para todo o e_i."""
        blocks = [self.right_matrix({i: 1}) - self.left_matrix({i: 1}) for i in range(self.dim)]
        return self._solve_linear_conditions(blocks)

    def is_commutative(self) -> bool:
        return all(self.mul_basis(i, j) == self.mul_basis(j, i)
                   for i in range(self.dim) for j in range(i + 1, self.dim))

    def generators(self) -> list[Vector]:
        """Levantamentos de uma base de I/I² (geradores mínimos da álgebra)."""
        return QuotientSpace(self._ideal, self.ideal_power(2)).complement

    # --- Serialização ---

    def to_doc(self) -> AlgebraDoc:
        f = self.field
        mul = [[i, j, k, f.to_json(c)] for (i, j), v in sorted(self._mul_items()) for k, c in sorted(v.items())]
        return AlgebraDoc(
            field={"char": f.char},
            basis=self.labels,
            unit=[f.to_json(self.unit.get(i, 0)) for i in range(self.dim)],
            mul=mul,
            aug=[f.to_json(self.aug.get(i, 0)) for i in range(self.dim)],
            degrees=self.weights,
        )

    def _mul_items(self):
        return [((i, j), self.mul_basis(i, j)) for i in range(self.dim) for j in range(self.dim)
                if self.mul_basis(i, j)]

    @classmethod
    def from_doc(cls, doc: AlgebraDoc | dict, name: str = "") -> "Algebra":
        try:
            if isinstance(doc, dict):
                doc = AlgebraDoc.model_validate(doc)
            f = FieldSpec.from_doc(doc.field.model_dump())
            d = len(doc.basis)
            if len(doc.unit) != d or len(doc.aug) != d:
                raise AxiomError("unit/aug com comprimento diferente da base.")
            mul: dict[tuple[int, int], Vector] = {}
            for entry in doc.mul:
                if len(entry) != 4:
                    raise AxiomError(f"Entrada de 'mul' malformada: {entry}")
                i, j, k = (int(x) for x in entry[:3])
                if not all(0 <= x < d for x in (i, j, k)):
                    raise AxiomError(f"Índice fora da base em 'mul': {entry}")
                c = f.from_json(entry[3])
                if c:
                    vec_axpy(mul.setdefault((i, j), {}), c, {k: 1}, f)
            unit = {i: c for i, x in enumerate(doc.unit) if (c := f.from_json(x))}
            aug = {i: c for i, x in enumerate(doc.aug) if (c := f.from_json(x))}
        except ValidationError as e:
            raise AxiomError(f"Documento de álgebra malformado: {e}") from e
        except (TypeError, ValueError, ZeroDivisionError) as e:
            raise AxiomError(f"Documento de álgebra malformado: {e}") from e
        return cls(f, doc.basis, mul, unit, aug, doc.degrees, name=name)


class EnvelopingAlgebra(Algebra):
    """Λ^e = Λ ⊗ Λ^op com índice i·d + j e (a⊗b)(c⊗d) = ac ⊗ db, calculada a pedido."""

    def __init__(self, base: Algebra):
        d = base.dim
        self.base = base
        labels = [f"{base.labels[i]}⊗{base.labels[j]}" for i in range(d) for j in range(d)]
        unit = {i * d + j: base.field.norm(a * b) for i, a in base.unit.items() for j, b in base.unit.items()}
        aug = {i * d + j: base.field.norm(a * b) for i, a in base.aug.items() for j, b in base.aug.items()}
        weights = None
        if base.weights is not None:
            weights = [base.weights[i] + base.weights[j] for i in range(d) for j in range(d)]
        super().__init__(base.field, labels, {}, unit, aug, weights, name=f"{base.name}^e")
        self.filtered = base.filtered
        self._cache: dict[tuple[int, int], Vector] = {}

    def pair(self, i: int, j: int) -> int:
        return i * self.base.dim + j

    def split(self, idx: int) -> tuple[int, int]:
        return divmod(idx, self.base.dim)

    def mul_basis(self, i: int, j: int) -> Vector:
        key = (i, j)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        a, b = self.split(i)
        c, d = self.split(j)
        left = self.base.mul_basis(a, c)
        right = self.base.mul_basis(d, b)
        out: Vector = {}
        for p, x in left.items():
            for q, y in right.items():
                vec_axpy(out, x, {self.pair(p, q): y}, self.field)
        self._cache[key] = out
        return out

    def generators(self) -> list[Vector]:
        """s⊗1 e 1⊗s para os geradores s da base (sem calcular I(Λ^e)²)."""
        gens = []
        for s in self.base.generators():
            gens.append({self.pair(i, 0): c for i, c in s.items()})
            gens.append({self.pair(0, i): c for i, c in s.items()})
        return gens

    def nilpotency_index(self) -> int | None:
        """Majorante 2N − 1 a partir do índice da base; basta para testar localidade."""
        n = self.base.nilpotency_index()
        return None if n is None else 2 * n - 1


def enveloping(a: Algebra) -> EnvelopingAlgebra:
    return EnvelopingAlgebra(a)


def check_axioms(a: Algebra) -> CheckReport:
    """Associatividade, leis da unidade e multiplicatividade de ε, com todas as falhas."""
    f = a.field
    report = CheckReport(check="axioms", params={"algebra": a.name, "dim": a.dim, "field": f.name})
    d = a.dim
    for i in range(d):
        for j in range(d):
            eij = a.mul_basis(i, j)
            for k in range(d):
                lhs = a.multiply(eij, {k: 1})
                rhs = a.multiply({i: 1}, a.mul_basis(j, k))
                report.require("associativity", lhs == rhs, triple=[a.labels[i], a.labels[j], a.labels[k]])
            lhs = a.epsilon(eij)
            rhs = f.norm(a.aug.get(i, 0) * a.aug.get(j, 0))
            report.require("augmentation_multiplicative", lhs == rhs, pair=[a.labels[i], a.labels[j]])
        report.require("left_unit", a.multiply(a.unit, {i: 1}) == {i: 1}, element=a.labels[i])
        report.require("right_unit", a.multiply({i: 1}, a.unit) == {i: 1}, element=a.labels[i])
    report.require("augmentation_unit", a.epsilon(a.unit) == 1)
    if a.weights is not None and not a.filtered:
        for i in range(d):
            for j in range(d):
                prod = a.mul_basis(i, j)
                ok = all(a.weights[k] == a.weights[i] + a.weights[j] for k in prod)
                report.require("homogeneous", ok, pair=[a.labels[i], a.labels[j]])
    report.tables["dim"] = d
    if not report.passed:
        logger.warning(f"Álgebra '{a.name}' falha os axiomas ({len(report.witnesses)} violações).")
    return report


def require_axioms(a: Algebra) -> Algebra:
    """Valida e devolve a versão adaptada; AxiomError com as testemunhas caso contrário."""
    report = check_axioms(a)
    if not report.passed:
        raise AxiomError(f"Álgebra '{a.name}' não satisfaz os axiomas.", report.witnesses)
    return a.adapted()


def quotient_algebra(a: Algebra, ideal: Subspace, name: str = "") -> tuple[Algebra, Matrix]:
    """
    Λ/J para um ideal J ⊆ I(Λ), na base (1, complemento canónico de J em I(Λ)).
    Devolve também a matriz da projeção Λ → Λ/J.
    """
    a.require_ideal(ideal)
    if not a.augmentation_ideal().contains_subspace(ideal):
        raise NotAnIdeal("O ideal tem de estar contido em I(Λ).")
    f = a.field
    quotient = QuotientSpace(a.augmentation_ideal(), ideal)
    reps = [a.unit] + quotient.complement
    dim = len(reps)

    def coords(v: Vector) -> Vector:
        e = a.epsilon(v)
        rest = dict(v)
        vec_axpy(rest, -e, a.unit, f)
        out = {k + 1: c for k, c in quotient.coordinate_vector(rest).items()}
        if e:
            out[0] = e
        return out

    mul = {(i, j): coords(a.multiply(u, v)) for i, u in enumerate(reps) for j, v in enumerate(reps)}
    labels = ["1"] + [f"[{a.labels[min(r)]}]" for r in quotient.complement]
    weights = None
    if a.weights is not None:
        ws = [a.weight_of(r) for r in quotient.complement]
        if all(w is not None for w in ws):
            weights = [0] + ws
    projection = Matrix(f, dim, a.dim, [coords({j: 1}) for j in range(a.dim)])
    return Algebra(f, labels, mul, {0: 1}, {0: 1}, weights, name=name or f"{a.name}/J"), projection


def socle_dims(a: Algebra) -> tuple[int, int]:
    """Dimensões dos socles esquerdo {v : I·v = 0} e direito {v : v·I = 0}."""
    left = a._solve_linear_conditions([a.left_matrix({i: 1}) for i in a.ideal_indices] or [Matrix(a.field, 0, a.dim)])
    right = a._solve_linear_conditions([a.right_matrix({i: 1}) for i in a.ideal_indices] or [Matrix(a.field, 0, a.dim)])
    return left.dim, right.dim


def is_self_injective_local(a: Algebra) -> bool:
    """Uma álgebra local de dimensão finita é autoinjetiva sse ambos os socles têm dimensão 1."""
    return socle_dims(a) == (1, 1)
