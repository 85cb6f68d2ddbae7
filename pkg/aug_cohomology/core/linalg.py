# --- aug_cohomology/core/linalg.py ---

"""
Álgebra linear exata e esparsa sobre ℚ ou GF(p).

Vetores são dicts {índice: escalar} sem entradas nulas. As matrizes guardam colunas
esparsas. Toda a eliminação passa por EchelonBasis (forma escalonada reduzida, pivô =
primeiro índice não nulo), por isso bases de núcleos, subespaços e complementos são
determinísticas.
"""

import logging
from collections import defaultdict
from typing import Iterable, Sequence

from aug_cohomology.core.errors import DimensionMismatch, NoSolution
from aug_cohomology.core.scalars import FieldSpec, Scalar

logger = logging.getLogger(__name__)

Vector = dict[int, Scalar]


# --- Vetores esparsos ---

def vec_axpy(target: Vector, c: Scalar, v: Vector, field: FieldSpec) -> None:
    """target += c·v (in place)."""
    if not c:
        return
    for k, x in v.items():
        y = field.norm(target.get(k, 0) + c * x)
        if y:
            target[k] = y
        else:
            target.pop(k, None)


def vec_scale(v: Vector, c: Scalar, field: FieldSpec) -> Vector:
    if not c:
        return {}
    return {k: y for k, x in v.items() if (y := field.norm(c * x))}


def vec_add(u: Vector, v: Vector, field: FieldSpec, c: Scalar = 1) -> Vector:
    out = dict(u)
    vec_axpy(out, c, v, field)
    return out


def vec_from_dense(values: Sequence, field: FieldSpec) -> Vector:
    return {i: y for i, x in enumerate(values) if (y := field.coerce(x))}


def vec_to_dense(v: Vector, n: int) -> list:
    out = [0] * n
    for k, x in v.items():
        out[k] = x
    return out


def vec_shift(v: Vector, offset: int) -> Vector:
    return {k + offset: x for k, x in v.items()}


# --- Eliminação incremental ---

class EchelonBasis:
    """
    Base em forma escalonada totalmente reduzida, construída vetor a vetor.
    Com track=True cada linha transporta uma etiqueta (combinação das entradas
    originais) atualizada pelas mesmas operações.
    """

    def __init__(self, field: FieldSpec, track: bool = False):
        self.field = field
        self.track = track
        self.rows: dict[int, Vector] = {}
        self.tags: dict[int, Vector] = {}

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> list[int]:
        return sorted(self.rows)

    def basis(self) -> list[Vector]:
        return [self.rows[p] for p in self.pivots]

    def reduce(self, v: Vector, tag: Vector | None = None) -> tuple[Vector, Vector | None]:
        # As linhas são nulas nos pivôs umas das outras: uma passagem basta.
        out = dict(v)
        out_tag = dict(tag) if tag is not None else None
        for p in [k for k in v if k in self.rows]:
            c = out.get(p)
            if not c:
                continue
            vec_axpy(out, -c, self.rows[p], self.field)
            if out_tag is not None and self.track:
                vec_axpy(out_tag, -c, self.tags[p], self.field)
        return out, out_tag

    def add(self, v: Vector, tag: Vector | None = None) -> tuple[int | None, Vector | None]:
        """Insere v; devolve (pivô novo, etiqueta) ou (None, etiqueta da dependência)."""
        f = self.field
        r, t = self.reduce(v, tag)
        if not r:
            return None, t
        q = min(r)
        c = f.inv(r[q])
        r = vec_scale(r, c, f)
        if self.track:
            t = vec_scale(t or {}, c, f)
        for p, row in self.rows.items():
            a = row.get(q)
            if a:
                vec_axpy(row, -a, r, f)
                if self.track:
                    vec_axpy(self.tags[p], -a, t, f)
        self.rows[q] = r
        if self.track:
            self.tags[q] = t
        return q, t

    def contains(self, v: Vector) -> bool:
        return not self.reduce(v)[0]


# --- Matrizes ---

class Matrix:
    """Matriz esparsa guardada por colunas (aplicação linear k^ncols → k^nrows)."""

    __slots__ = ("field", "nrows", "ncols", "cols")

    def __init__(self, field: FieldSpec, nrows: int, ncols: int, cols: list[Vector] | None = None):
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        self.cols = cols if cols is not None else [{} for _ in range(ncols)]
        if len(self.cols) != ncols:
            raise DimensionMismatch(f"Esperadas {ncols} colunas, recebidas {len(self.cols)}.")

    @classmethod
    def zeros(cls, field: FieldSpec, nrows: int, ncols: int) -> "Matrix":
        return cls(field, nrows, ncols)

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "Matrix":
        return cls(field, n, n, [{j: 1} for j in range(n)])

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence], ncols: int | None = None) -> "Matrix":
        nrows = len(rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        cols: list[Vector] = [{} for _ in range(ncols)]
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise DimensionMismatch("Linhas de comprimento diferente.")
            for j, x in enumerate(row):
                y = field.coerce(x)
                if y:
                    cols[j][i] = y
        return cls(field, nrows, ncols, cols)

    @classmethod
    def from_columns(cls, field: FieldSpec, nrows: int, cols: Iterable[Vector]) -> "Matrix":
        cols = [dict(c) for c in cols]
        return cls(field, nrows, len(cols), cols)

    def entry(self, i: int, j: int) -> Scalar:
        return self.cols[j].get(i, 0)

    def rows_sparse(self) -> list[Vector]:
        rows: list[Vector] = [{} for _ in range(self.nrows)]
        for j, col in enumerate(self.cols):
            for i, x in col.items():
                rows[i][j] = x
        return rows

    def to_rows(self) -> list[list[Scalar]]:
        return [vec_to_dense(r, self.ncols) for r in self.rows_sparse()]

    def apply(self, v: Vector) -> Vector:
        out: Vector = {}
        for j, c in v.items():
            vec_axpy(out, c, self.cols[j], self.field)
        return out

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"Produto {self.nrows}x{self.ncols} · {other.nrows}x{other.ncols}.")
        return Matrix(self.field, self.nrows, other.ncols, [self.apply(c) for c in other.cols])

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(self.field, self.nrows, self.ncols,
                      [vec_add(a, b, self.field) for a, b in zip(self.cols, other.cols)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(self.field, self.nrows, self.ncols,
                      [vec_add(a, b, self.field, -1) for a, b in zip(self.cols, other.cols)])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.nrows, self.ncols, self.cols) == (other.nrows, other.ncols, other.cols)

    def _same_shape(self, other: "Matrix") -> None:
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionMismatch("Matrizes de formas diferentes.")

    def is_zero(self) -> bool:
        return not any(self.cols)

    def transpose(self) -> "Matrix":
        return Matrix(self.field, self.ncols, self.nrows, self.rows_sparse())

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "Matrix":
        pos = {i: k for k, i in enumerate(row_idx)}
        cols = [{pos[i]: x for i, x in self.cols[j].items() if i in pos} for j in col_idx]
        return Matrix(self.field, len(row_idx), len(col_idx), cols)

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.nrows != other.nrows:
            raise DimensionMismatch("hstack com número de linhas diferente.")
        return Matrix(self.field, self.nrows, self.ncols + other.ncols,
                      [dict(c) for c in self.cols] + [dict(c) for c in other.cols])

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.ncols:
            raise DimensionMismatch("vstack com número de colunas diferente.")
        cols = [dict(a) | vec_shift(b, self.nrows) for a, b in zip(self.cols, other.cols)]
        return Matrix(self.field, self.nrows + other.nrows, self.ncols, cols)

    def rank(self) -> int:
        echelon = EchelonBasis(self.field)
        for col in self.cols:
            echelon.add(col)
        return len(echelon)

    def to_doc(self) -> list[list]:
        return [[self.field.to_json(x) for x in row] for row in self.to_rows()]

    def __repr__(self) -> str:
        return f"Matrix({self.nrows}x{self.ncols} sobre {self.field.name})"


def rref(m: Matrix) -> Matrix:
    """Forma escalonada reduzida por linhas (mesma forma, linhas nulas no fim)."""
    echelon = EchelonBasis(m.field)
    for row in m.rows_sparse():
        echelon.add(row)
    rows = echelon.basis()
    rows += [{} for _ in range(m.nrows - len(rows))]
    return Matrix.from_columns(m.field, m.ncols, rows).transpose()


def _stream_kernel(field: FieldSpec, cols: Sequence[Vector], col_ids: Sequence[int]) -> list[Vector]:
    echelon = EchelonBasis(field, track=True)
    kernel = []
    for j, col in zip(col_ids, cols):
        pivot, tag = echelon.add(col, {j: 1})
        if pivot is None:
            kernel.append(tag)
    return kernel


def kernel_basis(m: Matrix) -> "Subspace":
    """Núcleo {x : m·x = 0} como Subspace (base escalonada reduzida)."""
    return Subspace(m.field, m.ncols, _stream_kernel(m.field, m.cols, range(m.ncols)))


def block_kernel(m: Matrix, col_degrees: Sequence[int], row_degrees: Sequence[int]) -> list[Vector]:
    """Núcleo de uma matriz que preserva o grau, calculado bloco a bloco."""
    blocks: dict[int, list[int]] = defaultdict(list)
    for j, col in enumerate(m.cols):
        for i in col:
            if row_degrees[i] != col_degrees[j]:
                raise DimensionMismatch(f"Entrada ({i},{j}) não preserva o grau.")
        blocks[col_degrees[j]].append(j)
    kernel: list[Vector] = []
    for deg in sorted(blocks):
        ids = blocks[deg]
        raw = _stream_kernel(m.field, [m.cols[j] for j in ids], ids)
        kernel.extend(Subspace(m.field, m.ncols, raw).basis)
    return sorted(kernel, key=min)


# --- Sistemas lineares ---

class Solver:
    """
    Fatorização reutilizável de A para resolver A·x = b com muitos b.
    A solução particular é determinística (combinação das colunas pivô).
    """

    def __init__(self, m: Matrix):
        self.matrix = m
        self.field = m.field
        self.echelon = EchelonBasis(m.field, track=True)
        for j, col in enumerate(m.cols):
            self.echelon.add(col, {j: 1})

    @property
    def rank(self) -> int:
        return len(self.echelon)

    def try_solve(self, b: Vector) -> Vector | None:
        rest, tag = self.echelon.reduce(b, {})
        if rest:
            return None
        return vec_scale(tag, -1, self.field)

    def solve_vector(self, b: Vector) -> Vector:
        x = self.try_solve(b)
        if x is None:
            raise NoSolution("Sistema inconsistente: b fora da imagem de A.")
        return x

    def in_image(self, b: Vector) -> bool:
        return self.echelon.contains(b)

    def solve(self, b: Matrix) -> Matrix:
        if b.nrows != self.matrix.nrows:
            raise DimensionMismatch("Lado direito com número de linhas errado.")
        return Matrix(self.field, self.matrix.ncols, b.ncols, [self.solve_vector(c) for c in b.cols])


def solve(a: Matrix, b: Matrix) -> Matrix:
    """X com a·X = b; NoSolution se inconsistente."""
    return Solver(a).solve(b)


# --- Subespaços e quocientes ---

class Subspace:
    """Subespaço de k^n representado pela sua base escalonada reduzida."""

    def __init__(self, field: FieldSpec, ambient_dim: int, vectors: Iterable[Vector] = ()):
        self.field = field
        self.ambient_dim = ambient_dim
        self.echelon = EchelonBasis(field)
        for v in vectors:
            self.echelon.add(v)

    @classmethod
    def full(cls, field: FieldSpec, n: int) -> "Subspace":
        return cls(field, n, [{i: 1} for i in range(n)])

    @property
    def basis(self) -> list[Vector]:
        return self.echelon.basis()

    @property
    def dim(self) -> int:
        return len(self.echelon)

    @property
    def pivots(self) -> list[int]:
        return self.echelon.pivots

    def add(self, v: Vector) -> bool:
        return self.echelon.add(v)[0] is not None

    def contains(self, v: Vector) -> bool:
        return self.echelon.contains(v)

    def reduce(self, v: Vector) -> Vector:
        return self.echelon.reduce(v)[0]

    def coordinates(self, v: Vector) -> list[Scalar]:
        """Coordenadas de v (que tem de pertencer ao subespaço) na base escalonada."""
        if not self.contains(v):
            raise DimensionMismatch("Vetor fora do subespaço.")
        return [v.get(p, 0) for p in self.pivots]

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis)

    def _check(self, other: "Subspace") -> None:
        self.field.require_same(other.field)
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch("Subespaços em ambientes diferentes.")

    def sum(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace(self.field, self.ambient_dim, self.basis + other.basis)

    def intersection(self, other: "Subspace") -> "Subspace":
        """Interseção pelo algoritmo de Zassenhaus: linhas (u|u) e (v|0)."""
        self._check(other)
        n = self.ambient_dim
        echelon = EchelonBasis(self.field)
        for u in self.basis:
            echelon.add(dict(u) | vec_shift(u, n))
        for v in other.basis:
            echelon.add(dict(v))
        inter = [vec_shift(row, -n) for p, row in echelon.rows.items() if p >= n]
        return Subspace(self.field, n, inter)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambiente={self.ambient_dim})"


class QuotientSpace:
    """
    Quociente top/bottom (bottom ⊆ top) com complemento canónico: as linhas
    escalonadas dos vetores de top reduzidos módulo bottom.
    """

    def __init__(self, top: Subspace, bottom: Subspace):
        top._check(bottom)
        if not top.contains_subspace(bottom):
            raise DimensionMismatch("O denominador não está contido no numerador.")
        self.top = top
        self.bottom = bottom
        self.field = top.field
        self._complement = EchelonBasis(top.field)
        for z in top.basis:
            self._complement.add(bottom.reduce(z))
        self._pivots = self._complement.pivots

    @property
    def dim(self) -> int:
        return len(self._pivots)

    @property
    def complement(self) -> list[Vector]:
        return self._complement.basis()

    def coordinates(self, z: Vector) -> list[Scalar]:
        """Coordenadas da classe de z (z tem de pertencer a top)."""
        r = self.bottom.reduce(z)
        coords = [r.get(q, 0) for q in self._pivots]
        if r != self.representative(coords):
            raise DimensionMismatch("Vetor fora do numerador do quociente.")
        return coords

    def coordinate_vector(self, z: Vector) -> Vector:
        return {k: c for k, c in enumerate(self.coordinates(z)) if c}

    def representative(self, coords: Sequence[Scalar] | Vector) -> Vector:
        if isinstance(coords, dict):
            items = coords.items()
        else:
            items = enumerate(coords)
        out: Vector = {}
        for k, c in items:
            vec_axpy(out, c, self._complement.rows[self._pivots[k]], self.field)
        return out

    def canonical(self, z: Vector) -> Vector:
        """Representante canónico da classe de z."""
        return self.bottom.reduce(z)

    def is_zero(self, z: Vector) -> bool:
        return self.bottom.contains(z)

    def __repr__(self) -> str:
        return f"QuotientSpace(dim={self.dim})"


def subspace_ops(u: Subspace, v: Subspace) -> dict:
    """Soma, interseção e inclusão v ⊆ u de dois subespaços do mesmo ambiente."""
    return {"sum": u.sum(v), "intersection": u.intersection(v), "contains": u.contains_subspace(v)}
