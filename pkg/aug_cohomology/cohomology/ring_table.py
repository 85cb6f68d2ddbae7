# --- aug_cohomology/cohomology/ring_table.py ---

"""
Tabelas de anéis graduados (Ext, HH, E(C)): bases por grau, produtos das bases
e verificações de associatividade e comutatividade graduada.
"""

import logging
from dataclasses import dataclass, field as dc_field

from aug_cohomology.algebras.graded import GradedAlgebra
from aug_cohomology.core.errors import AxiomError, DimensionMismatch
from aug_cohomology.core.linalg import Vector, vec_axpy
from aug_cohomology.core.scalars import FieldSpec
from aug_cohomology.core.types import CheckReport, FieldDoc, RingTableDoc

logger = logging.getLogger(__name__)

BasisKey = tuple[int, int, int, int]


@dataclass
class GradedRingTable:
    """
    Anel graduado truncado no grau `bound`: dims[n] elementos de base em grau n e
    products[(p, i, q, j)] = e^p_i · e^q_j ∈ grau p + q (em falta = 0).
    """
    field: FieldSpec
    label: str
    dims: list[int]
    products: dict[BasisKey, Vector] = dc_field(default_factory=dict)
    labels: list[list[str]] | None = None
    unit: Vector | None = None

    def __post_init__(self):
        if self.labels is None:
            self.labels = [[f"x{n}_{i}" for i in range(d)] for n, d in enumerate(self.dims)]
        if self.unit is None and self.dims and self.dims[0] == 1:
            self.unit = {0: 1}

    @property
    def bound(self) -> int:
        return len(self.dims) - 1

    def basis_product(self, p: int, i: int, q: int, j: int) -> Vector:
        if p + q > self.bound:
            return {}
        return self.products.get((p, i, q, j), {})

    def multiply(self, p: int, u: Vector, q: int, v: Vector) -> Vector:
        out: Vector = {}
        if p + q > self.bound:
            return out
        for i, a in u.items():
            for j, b in v.items():
                prod = self.basis_product(p, i, q, j)
                if prod:
                    vec_axpy(out, self.field.norm(a * b), prod, self.field)
        return out

    def power(self, p: int, u: Vector, k: int) -> tuple[int, Vector]:
        """(grau, u^k); k ≥ 1."""
        degree, out = p, dict(u)
        for _ in range(k - 1):
            out = self.multiply(degree, out, p, u)
            degree += p
        return degree, out

    def element(self, label: str) -> tuple[int, Vector]:
        for n, names in enumerate(self.labels):
            if label in names:
                return n, {names.index(label): 1}
        raise KeyError(label)

    def check_associative(self) -> CheckReport:
        report = CheckReport(check="ring-associative", params={"ring": self.label, "bound": self.bound})
        for p, dp in enumerate(self.dims):
            for q, dq in enumerate(self.dims):
                for r, dr in enumerate(self.dims):
                    if p + q + r > self.bound:
                        continue
                    for i in range(dp):
                        for j in range(dq):
                            left = self.basis_product(p, i, q, j)
                            for k in range(dr):
                                lhs = self.multiply(p + q, left, r, {k: 1})
                                rhs = self.multiply(p, {i: 1}, q + r, self.basis_product(q, j, r, k))
                                report.require("associative", lhs == rhs, triple=[[p, i], [q, j], [r, k]])
        return report

    def check_graded_commutative(self) -> CheckReport:
        """xy = (−1)^{|x||y|} yx (em característica 2 o sinal é irrelevante)."""
        report = CheckReport(check="ring-graded-commutative", params={"ring": self.label, "bound": self.bound})
        for p, dp in enumerate(self.dims):
            for q, dq in enumerate(self.dims):
                if p + q > self.bound or q < p:
                    continue
                sign = -1 if (p * q) % 2 else 1
                for i in range(dp):
                    for j in range(dq):
                        lhs = self.basis_product(p, i, q, j)
                        rhs = {k: self.field.norm(sign * c) for k, c in self.basis_product(q, j, p, i).items()}
                        report.require("graded_commutative", lhs == rhs, pair=[[p, i], [q, j]])
        return report

    def is_graded_commutative(self) -> bool:
        return self.check_graded_commutative().passed

    def looks_like_dual_numbers(self) -> bool:
        """
        k[x]/x² com x num só grau d: um gerador, de quadrado nulo, e nada mais até
        ao corte. Exige 2d ≤ bound para que x² seja visível.
        """
        nonzero = [n for n in range(1, self.bound + 1) if self.dims[n]]
        if len(nonzero) != 1 or self.dims[nonzero[0]] != 1:
            return False
        d = nonzero[0]
        return 2 * d <= self.bound and not self.basis_product(d, 0, d, 0)

    # --- Serialização ---

    def to_doc(self) -> RingTableDoc:
        f = self.field
        products = [
            [p, i, q, j, k, f.to_json(c)]
            for (p, i, q, j), v in sorted(self.products.items())
            for k, c in sorted(v.items())
        ]
        return RingTableDoc(field=FieldDoc(char=f.char), label=self.label, bound=self.bound,
                            dims=self.dims, labels=self.labels, products=products)

    @classmethod
    def from_doc(cls, doc: RingTableDoc | dict) -> "GradedRingTable":
        if isinstance(doc, dict):
            doc = RingTableDoc.model_validate(doc)
        f = FieldSpec(doc.field.char)
        if len(doc.dims) != doc.bound + 1:
            raise DimensionMismatch("dims não confere com bound.")
        products: dict[BasisKey, Vector] = {}
        for p, i, q, j, k, c in doc.products:
            vec_axpy(products.setdefault((int(p), int(i), int(q), int(j)), {}), f.from_json(c), {int(k): 1}, f)
        return cls(f, doc.label, list(doc.dims), products, labels=[list(ls) for ls in doc.labels])

    # --- Como álgebra ---

    def global_index(self) -> list[tuple[int, int]]:
        return [(n, i) for n, d in enumerate(self.dims) for i in range(d)]

    def to_algebra(self, guard_band: int = 1, name: str = "") -> GradedAlgebra:
        """Álgebra graduada conexa truncada no grau `bound` (sinais esquecidos)."""
        if not self.dims or self.dims[0] != 1:
            raise AxiomError(f"O anel {self.label} não é conexo.")
        index = self.global_index()
        position = {key: g for g, key in enumerate(index)}
        mul: dict[tuple[int, int], Vector] = {}
        for a, (p, i) in enumerate(index):
            for b, (q, j) in enumerate(index):
                prod = self.basis_product(p, i, q, j)
                if prod:
                    mul[(a, b)] = {position[(p + q, k)]: c for k, c in prod.items()}
        labels = ["1"] + [self.labels[n][i] for n, i in index[1:]]
        return GradedAlgebra(self.field, labels, mul, [n for n, _ in index], self.bound,
                             guard_band=guard_band, name=name or self.label)


def polynomial_table(field: FieldSpec, degree: int, bound: int, label: str = "k[a]",
                     letter: str = "a") -> GradedRingTable:
    """k[a] com |a| = degree, truncado no grau bound."""
    return truncated_table(field, degree, None, bound, label=label, letter=letter)


def truncated_table(field: FieldSpec, degree: int, height: int | None, bound: int,
                    label: str = "", letter: str = "a") -> GradedRingTable:
    """k[a]/(a^height) com |a| = degree (height None = polinomial)."""
    dims, labels = [], []
    for n in range(bound + 1):
        k, rest = divmod(n, degree)
        alive = rest == 0 and (height is None or k < height)
        dims.append(1 if alive else 0)
        labels.append([("1" if k == 0 else letter if k == 1 else f"{letter}^{k}")] if alive else [])
    products: dict[BasisKey, Vector] = {}
    for p in range(bound + 1):
        for q in range(bound + 1 - p):
            if dims[p] and dims[q] and dims[p + q]:
                products[(p, 0, q, 0)] = {0: 1}
    return GradedRingTable(field, label or f"k[{letter}]", dims, products, labels=labels)
