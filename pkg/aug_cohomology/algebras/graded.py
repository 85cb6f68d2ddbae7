# --- aug_cohomology/algebras/graded.py ---

import itertools
import logging
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from pydantic import ValidationError

from aug_cohomology.algebras.algebra import Algebra
from aug_cohomology.core.errors import AxiomError, CutoffTooSmall, InhomogeneousRelation
from aug_cohomology.core.linalg import EchelonBasis, Matrix, Subspace, Vector, kernel_basis
from aug_cohomology.core.scalars import FieldSpec, Scalar
from aug_cohomology.core.types import AlgebraDoc, PresentationDoc

logger = logging.getLogger(__name__)


class GradedAlgebra(Algebra):
    """
    Álgebra graduada conexa truncada: graus 0..cutoff, grau 0 = k·1.
    Os produtos acima do corte são descartados; os últimos `guard_band` graus
    não são de confiança para ideais, anuladores e centros.
    """

    def __init__(self, field: FieldSpec, labels, mul, degrees: Sequence[int], cutoff: int,
                 guard_band: int = 1, name: str = "", filtered: bool = False):
        super().__init__(field, labels, mul, {0: 1}, {0: 1}, degrees, name=name)
        self.cutoff = cutoff
        self.guard_band = guard_band
        self.filtered = filtered
        if not degrees or degrees[0] != 0 or any(d <= 0 for d in degrees[1:]):
            raise AxiomError("Álgebra graduada tem de ser conexa: grau 0 = span da unidade.")

    @property
    def degrees(self) -> list[int]:
        return self.weights

    @property
    def trusted_degree(self) -> int:
        return self.cutoff - self.guard_band

    def component(self, n: int) -> list[int]:
        return [i for i, d in enumerate(self.degrees) if d == n]

    def dims(self) -> list[int]:
        return [len(self.component(n)) for n in range(self.cutoff + 1)]

    def respects_grading(self) -> bool:
        for (i, j), prod in self._mul_items():
            if any(self.degrees[k] != self.degrees[i] + self.degrees[j] for k in prod):
                return False
        return True

    def graded_center(self) -> dict[int, Subspace]:
        """Componentes de grau n do centro graduado: z·g = (−1)^{n·|g|} g·z."""
        f = self.field
        positive = [i for i in range(1, self.dim)]
        centre: dict[int, Subspace] = {}
        for n in range(self.cutoff + 1):
            comp = self.component(n)
            cols: list[Vector] = []
            for j in comp:
                col: Vector = {}
                for block, g in enumerate(positive):
                    sign = -1 if (n * self.degrees[g]) % 2 else 1
                    diff = dict(self.mul_basis(j, g))
                    for k, c in self.mul_basis(g, j).items():
                        diff[k] = f.norm(diff.get(k, 0) - sign * c)
                    for k, c in diff.items():
                        if c:
                            col[block * self.dim + k] = c
                cols.append(col)
            ker = kernel_basis(Matrix(f, len(positive) * self.dim, len(comp), cols))
            centre[n] = Subspace(f, self.dim, ({comp[k]: c for k, c in v.items()} for v in ker.basis))
        return centre

    def trusted_annihilator(self) -> Subspace:
        """Anulador lido apenas nos graus de confiança."""
        ann = self.annihilator()
        keep = [i for i, d in enumerate(self.degrees) if d <= self.trusted_degree]
        return ann.intersection(Subspace(self.field, self.dim, [{i: 1} for i in keep]))

    def to_doc(self) -> AlgebraDoc:
        doc = super().to_doc()
        doc.cutoff = self.cutoff
        doc.guard_band = self.guard_band
        return doc

    @classmethod
    def from_doc(cls, doc: AlgebraDoc | dict, name: str = "") -> "GradedAlgebra":
        base = Algebra.from_doc(doc, name=name)
        if isinstance(doc, dict):
            doc = AlgebraDoc.model_validate(doc)
        if doc.degrees is None or doc.cutoff is None:
            raise AxiomError("Documento graduado sem 'degrees' ou 'cutoff'.")
        if not base.is_adapted:
            raise AxiomError("Álgebra graduada tem de estar numa base adaptada.")
        return cls(base.field, base.labels, base._mul, doc.degrees, doc.cutoff,
                   doc.guard_band if doc.guard_band is not None else 1, name=name)


# --- Apresentações ---

@dataclass
class Presentation:
    """Geradores com graus positivos, relações não comutativas e grau de corte."""
    field: FieldSpec
    generators: list[tuple[str, int]]
    relations: list[list[tuple[Scalar, tuple[str, ...]]]] = dc_field(default_factory=list)
    cutoff: int = 4

    def to_doc(self) -> PresentationDoc:
        return PresentationDoc(
            field={"char": self.field.char},
            generators=[{"name": g, "degree": d} for g, d in self.generators],
            relations=[[(self.field.to_json(c), list(w)) for c, w in rel] for rel in self.relations],
            cutoff=self.cutoff,
        )

    @classmethod
    def from_doc(cls, doc: PresentationDoc | dict) -> "Presentation":
        try:
            if isinstance(doc, dict):
                doc = PresentationDoc.model_validate(doc)
        except ValidationError as e:
            raise AxiomError(f"Apresentação malformada: {e}") from e
        f = FieldSpec.from_doc(doc.field.model_dump())
        names = {g.name for g in doc.generators}
        relations = []
        for rel in doc.relations:
            terms = []
            for coeff, word in rel:
                unknown = set(word) - names
                if unknown:
                    raise AxiomError(f"Relação usa geradores desconhecidos: {sorted(unknown)}")
                terms.append((f.from_json(coeff), tuple(word)))
            relations.append(terms)
        return cls(f, [(g.name, g.degree) for g in doc.generators], relations, doc.cutoff)


def word_label(word: Sequence[str]) -> str:
    if not word:
        return "1"
    if all(len(w) == 1 for w in word):
        return "".join(word)
    return "*".join(word)


def from_presentation(p: Presentation, name: str = "") -> GradedAlgebra:
    """
    Componente de grau n = palavras de grau n módulo a fatia de grau n do ideal
    bilateral gerado pelas relações, fechado grau a grau: I_n = R_n + Σ_g (g·I_{n−|g|} + I_{n−|g|}·g).
    A base escolhida são as palavras lexicograficamente mínimas que completam o quociente.
    """
    f = p.field
    gen_names = [g for g, _ in p.generators]
    gen_deg = dict(p.generators)
    if any(d <= 0 for d in gen_deg.values()):
        raise AxiomError("Geradores têm de ter grau positivo.")
    order = {g: k for k, g in enumerate(gen_names)}

    rel_by_degree: dict[int, list[dict[tuple[str, ...], Scalar]]] = {}
    for rel in p.relations:
        degs = {sum(gen_deg[x] for x in w) for c, w in rel if c}
        if not degs:
            continue
        if len(degs) > 1:
            raise InhomogeneousRelation(f"Relação não homogénea (graus {sorted(degs)}).")
        deg = degs.pop()
        if deg > p.cutoff:
            raise CutoffTooSmall(f"Corte {p.cutoff} menor que o grau {deg} de uma relação.")
        poly: dict[tuple[str, ...], Scalar] = {}
        for c, w in rel:
            poly[w] = f.norm(poly.get(w, 0) + c)
        rel_by_degree.setdefault(deg, []).append(poly)

    # Palavras por grau, em ordem lexicográfica (ordem dos geradores).
    words: dict[int, list[tuple[str, ...]]] = {0: [()]}
    for n in range(1, p.cutoff + 1):
        found = []
        for g in gen_names:
            d = gen_deg[g]
            if d <= n:
                found.extend((g,) + w for w in words[n - d])
        words[n] = sorted(found, key=lambda w: [order[x] for x in w])

    # Coluna da palavra: a lexicograficamente maior tem índice 0 (pivôs = palavras líderes).
    column: dict[int, dict[tuple[str, ...], int]] = {
        n: {w: len(ws) - 1 - k for k, w in enumerate(ws)} for n, ws in words.items()
    }
    ideal: dict[int, EchelonBasis] = {}
    ideal_words: dict[int, list[dict[tuple[str, ...], Scalar]]] = {}
    for n in range(p.cutoff + 1):
        echelon = EchelonBasis(f)
        col = column[n]
        candidates = list(rel_by_degree.get(n, []))
        for g in gen_names:
            d = gen_deg[g]
            if d <= n and n - d in ideal_words:
                for poly in ideal_words[n - d]:
                    candidates.append({(g,) + w: c for w, c in poly.items()})
                    candidates.append({w + (g,): c for w, c in poly.items()})
        for poly in candidates:
            echelon.add({col[w]: c for w, c in poly.items() if c})
        ideal[n] = echelon
        inverse = {v: w for w, v in col.items()}
        ideal_words[n] = [{inverse[k]: c for k, c in row.items()} for row in echelon.basis()]

    normal: dict[int, list[tuple[str, ...]]] = {}
    for n in range(p.cutoff + 1):
        pivots = set(ideal[n].rows)
        normal[n] = [w for w in words[n] if column[n][w] not in pivots]

    basis_words = [w for n in range(p.cutoff + 1) for w in normal[n]]
    index = {w: k for k, w in enumerate(basis_words)}
    degree_of = {w: sum(gen_deg[x] for x in w) for w in basis_words}

    def normal_form(w: tuple[str, ...]) -> Vector:
        n = sum(gen_deg[x] for x in w)
        if n > p.cutoff:
            return {}
        if w in index:
            return {index[w]: 1}
        row = ideal[n].rows[column[n][w]]
        inverse = {v: u for u, v in column[n].items()}
        out: Vector = {}
        for k, c in row.items():
            u = inverse[k]
            if u != w:
                out[index[u]] = f.norm(-c)
        return out

    mul = {}
    for u, v in itertools.product(basis_words, repeat=2):
        if degree_of[u] + degree_of[v] <= p.cutoff:
            prod = normal_form(u + v)
            if prod:
                mul[(index[u], index[v])] = prod
    guard = max(gen_deg.values(), default=1)
    algebra = GradedAlgebra(
        f, [word_label(w) for w in basis_words], mul, [degree_of[w] for w in basis_words],
        p.cutoff, guard_band=guard, name=name or "presentation",
    )
    logger.debug(f"Apresentação '{algebra.name}' com dimensões {algebra.dims()}.")
    return algebra
