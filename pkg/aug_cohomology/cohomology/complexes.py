# --- aug_cohomology/cohomology/complexes.py ---

"""
Complexos de cocadeias Hom_B(F_•, M), complexos genéricos por coordenadas,
sucessões exatas longas de subcomplexos e levantamento de cociclos a
aplicações de cadeias (produto de Yoneda por composição).
"""

import logging

from aug_cohomology.cohomology.ring_table import GradedRingTable
from aug_cohomology.core.errors import DimensionMismatch, NotACocycle
from aug_cohomology.core.linalg import Matrix, QuotientSpace, Subspace, Vector, kernel_basis, vec_axpy
from aug_cohomology.core.scalars import FieldSpec
from aug_cohomology.core.types import LESMap, LESNode, LESRecord
from aug_cohomology.resolutions.minimal import Resolution
from aug_cohomology.resolutions.modules import FreeMap, FreeModule, ModuleOver

logger = logging.getLogger(__name__)


class Complex:
    """Complexo de cocadeias C^0 → C^1 → … dado por matrizes (maps[n]: C^n → C^{n+1})."""

    def __init__(self, field: FieldSpec, dims: list[int], maps: list[Matrix], name: str = ""):
        if len(maps) != len(dims) - 1:
            raise DimensionMismatch("É preciso uma matriz entre cada par de graus consecutivos.")
        for n, m in enumerate(maps):
            if (m.nrows, m.ncols) != (dims[n + 1], dims[n]):
                raise DimensionMismatch(f"Matriz do grau {n} com forma errada.")
        self.field = field
        self.dims = list(dims)
        self.maps = list(maps)
        self.name = name

    @property
    def top(self) -> int:
        """Último grau com cohomologia calculável."""
        return len(self.maps) - 1

    def cocycles(self, n: int) -> Subspace:
        return kernel_basis(self.maps[n])

    def coboundaries(self, n: int) -> Subspace:
        if n == 0:
            return Subspace(self.field, self.dims[0])
        return Subspace(self.field, self.dims[n], self.maps[n - 1].cols)

    def cohomology(self, n: int) -> QuotientSpace:
        return QuotientSpace(self.cocycles(n), self.coboundaries(n))

    def cohomology_dims(self, upto: int | None = None) -> list[int]:
        upto = self.top if upto is None else min(upto, self.top)
        out = []
        for n in range(upto + 1):
            rank_out = self.maps[n].rank()
            rank_in = self.maps[n - 1].rank() if n > 0 else 0
            out.append(self.dims[n] - rank_out - rank_in)
        return out

    def is_square_zero(self) -> bool:
        return all((self.maps[n + 1] @ self.maps[n]).is_zero() for n in range(len(self.maps) - 1))

    def restrict(self, coords: list[list[int]], name: str = "") -> "Complex":
        """Complexo nas coordenadas indicadas (as restantes anulam-se ou ignoram-se)."""
        maps = [self.maps[n].submatrix(coords[n + 1], coords[n]) for n in range(len(self.maps))]
        return Complex(self.field, [len(c) for c in coords], maps, name=name)


def _embed(v: Vector, coords: list[int]) -> Vector:
    return {coords[k]: c for k, c in v.items()}


def _span_dim(field: FieldSpec, dim: int, *families) -> int:
    return Subspace(field, dim, (v for fam in families for v in fam)).dim


def coordinate_les(
    x: Complex,
    sub: list[list[int]],
    n_max: int,
    label: str,
    names: tuple[str, str, str] = ("S", "X", "Q"),
) -> LESRecord:
    """
    Sucessão exata longa de 0 → S → X → X/S → 0 para um subcomplexo S dado por
    coordenadas: H^n(S) → H^n(X) → H^n(Q) → H^{n+1}(S), com o conector
    ω[z] = δ(extensão por zero de z). A exatidão em cada nó compara
    dim − posto(saída) com posto(entrada).
    """
    if len(x.maps) < n_max + 1:
        raise DimensionMismatch(f"O complexo {x.name} não chega ao grau {n_max + 1}.")
    f = x.field
    quot = []
    for n in range(len(x.dims)):
        inside = set(sub[n])
        quot.append([k for k in range(x.dims[n]) if k not in inside])
    for n in range(len(x.maps)):
        leak = x.maps[n].submatrix(quot[n + 1], sub[n])
        if not leak.is_zero():
            raise DimensionMismatch(f"As coordenadas dadas não formam um subcomplexo no grau {n}.")
    s_cx = x.restrict(sub, name=names[0])
    q_cx = x.restrict(quot, name=names[2])
    s_name, x_name, q_name = names

    s_dims = s_cx.cohomology_dims(n_max)
    x_dims = x.cohomology_dims(n_max)
    q_dims = q_cx.cohomology_dims(n_max)
    nodes: list[LESNode] = []
    maps: list[LESMap] = []
    rank_omega_prev = 0
    for n in range(n_max + 1):
        z_s = [_embed(v, sub[n]) for v in s_cx.cocycles(n).basis]
        b_x = x.coboundaries(n).basis
        rank_i = _span_dim(f, x.dims[n], z_s, b_x) - _span_dim(f, x.dims[n], b_x)

        z_x = x.cocycles(n).basis
        local = {k: pos for pos, k in enumerate(quot[n])}
        proj = [{local[k]: c for k, c in v.items() if k in local} for v in z_x]
        b_q = q_cx.coboundaries(n).basis
        rank_r = _span_dim(f, q_cx.dims[n], proj, b_q) - _span_dim(f, q_cx.dims[n], b_q)

        z_q = q_cx.cocycles(n).basis
        connector = x.maps[n].submatrix(sub[n + 1], quot[n])
        omega = [connector.apply(v) for v in z_q]
        b_s = s_cx.coboundaries(n + 1).basis
        rank_omega = _span_dim(f, s_cx.dims[n + 1], omega, b_s) - _span_dim(f, s_cx.dims[n + 1], b_s)

        dims = {s_name: s_dims[n], x_name: x_dims[n], q_name: q_dims[n]}
        for name, rank_in, rank_out in (
            (s_name, rank_omega_prev, rank_i),
            (x_name, rank_i, rank_r),
            (q_name, rank_r, rank_omega),
        ):
            dim = dims[name]
            nodes.append(LESNode(name=f"H^{n}({name})", degree=n, dim=dim, rank_in=rank_in,
                                 rank_out=rank_out, exact=dim - rank_out == rank_in))
        maps.extend([
            LESMap(name=f"i*_{n}", source=f"H^{n}({s_name})", target=f"H^{n}({x_name})", rank=rank_i),
            LESMap(name=f"r_{n}", source=f"H^{n}({x_name})", target=f"H^{n}({q_name})", rank=rank_r),
            LESMap(name=f"ω_{n}", source=f"H^{n}({q_name})", target=f"H^{n + 1}({s_name})", rank=rank_omega),
        ])
        rank_omega_prev = rank_omega
    # O último conector sai da janela calculada; o nó H^{n_max}(Q) é aferido com ele.
    record = LESRecord(label=label, nodes=nodes, maps=maps, exact=all(node.exact for node in nodes))
    if not record.exact:
        bad = [node.name for node in nodes if not node.exact]
        logger.warning(f"Sucessão '{label}' não exata em {bad}.")
    return record


# --- Hom_B(F_•, M) ---

class CochainComplex:
    """
    Hom_B(F_n, M) ≅ M^{r_n} com coordenada g·dim(M) + m; (δf)(gen_h) = f(d gen_h).
    """

    def __init__(self, res: Resolution, module: ModuleOver | None = None, name: str = ""):
        self.res = res
        self.module = module or res.target
        if self.module.algebra.dim != res.algebra.dim:
            raise DimensionMismatch("O módulo de coeficientes não é sobre a álgebra da resolução.")
        self.field = res.field
        self.name = name or f"Hom({res.name}, {self.module.name})"
        self._coboundary: dict[int, Matrix] = {}
        self._cohomology: dict[int, QuotientSpace] = {}

    @property
    def top(self) -> int:
        """Maior n com H^n calculável (precisa de F_{n+1})."""
        return self.res.n_max - 1

    def dim(self, n: int) -> int:
        return self.res.rank(n) * self.module.dim

    def cochain_images(self, f: Vector, n: int) -> list[Vector]:
        dm = self.module.dim
        images: list[Vector] = [{} for _ in range(self.res.rank(n))]
        for idx, c in f.items():
            g, m = divmod(idx, dm)
            images[g][m] = c
        return images

    def from_images(self, images: list[Vector]) -> Vector:
        dm = self.module.dim
        return {g * dm + m: c for g, img in enumerate(images) for m, c in img.items()}

    def evaluate(self, f: Vector, n: int, x: Vector) -> Vector:
        """f(x) para x ∈ F_n, por linearidade sobre B."""
        term = self.res.terms[n]
        images = self.cochain_images(f, n)
        out: Vector = {}
        for g, k, c in term.terms(x):
            img = images[g]
            if img:
                vec_axpy(out, c, img if k == 0 else self.module.act(k, img), self.field)
        return out

    def coboundary(self, n: int) -> Matrix:
        """δ^n: Hom(F_n, M) → Hom(F_{n+1}, M)."""
        if n not in self._coboundary:
            d = self.res.differentials[n + 1]
            cols = [self.from_images([self.evaluate({idx: 1}, n, img) for img in d.images])
                    for idx in range(self.dim(n))]
            self._coboundary[n] = Matrix(self.field, self.dim(n + 1), self.dim(n), cols)
        return self._coboundary[n]

    def cocycles(self, n: int) -> Subspace:
        return kernel_basis(self.coboundary(n))

    def coboundaries(self, n: int) -> Subspace:
        if n == 0:
            return Subspace(self.field, self.dim(0))
        return Subspace(self.field, self.dim(n), self.coboundary(n - 1).cols)

    def cohomology(self, n: int) -> QuotientSpace:
        if n > self.top:
            raise DimensionMismatch(f"H^{n} exige F_{n + 1}; a resolução só vai até {self.res.n_max}.")
        if n not in self._cohomology:
            self._cohomology[n] = QuotientSpace(self.cocycles(n), self.coboundaries(n))
        return self._cohomology[n]

    def dims(self, upto: int | None = None) -> list[int]:
        upto = self.top if upto is None else min(upto, self.top)
        return [self.cohomology(n).dim for n in range(upto + 1)]

    def is_cocycle(self, f: Vector, n: int) -> bool:
        return not self.coboundary(n).apply(f)

    def as_complex(self, upto: int | None = None) -> Complex:
        """Complexo genérico com os graus 0..upto (upto ≤ n_max)."""
        upto = self.res.n_max if upto is None else min(upto, self.res.n_max)
        return Complex(self.field, [self.dim(n) for n in range(upto + 1)],
                       [self.coboundary(n) for n in range(upto)], name=self.name)

    def slot_coordinates(self, n: int, keep) -> list[int]:
        """Coordenadas g·dim(M) + m com keep(m) verdadeiro."""
        dm = self.module.dim
        return [g * dm + m for g in range(self.res.rank(n)) for m in range(dm) if keep(m)]


# --- Levantamento de cociclos ---

class ChainLift:
    """
    Aplicação de cadeias G_i: F_{n+i} → F_i que cobre um cociclo g: F_n → M, com M
    o módulo resolvido por F. Usa a homotopia contrativa quando existe.
    """

    def __init__(self, res: Resolution, cocycle: Vector, degree: int, cx: CochainComplex | None = None):
        self.res = res
        self.degree = degree
        self.cx = cx or CochainComplex(res)
        if degree < res.n_max and not self.cx.is_cocycle(cocycle, degree):
            raise NotACocycle(f"O elemento dado não é um cociclo de grau {degree}.")
        self.cocycle = cocycle
        self.maps: list[FreeMap] = []

    def _preimage(self, i: int, y: Vector) -> Vector:
        res = self.res
        if not y:
            return {}
        if res.homotopy is not None:
            return res.contract(i - 1, y)
        return res.solver(i).solve_vector(y)

    def component(self, i: int) -> FreeMap:
        """G_i (calculado por indução em i)."""
        res, n = self.res, self.degree
        while len(self.maps) <= i:
            k = len(self.maps)
            source: FreeModule = res.terms[n + k]
            if k == 0:
                images = [self._preimage(0, y) for y in self.cx.cochain_images(self.cocycle, n)]
            else:
                previous = self.maps[k - 1]
                images = [self._preimage(k, previous.apply(d)) for d in res.differentials[n + k].images]
            self.maps.append(FreeMap(source, res.terms[k], images))
        return self.maps[i]


def compose_cocycles(f: Vector, p: int, lift: ChainLift) -> Vector:
    """f ∘ G_p: F_{p+q} → M, representante do produto [f]·[g]."""
    cx = lift.cx
    g_p = lift.component(p)
    return cx.from_images([cx.evaluate(f, p, img) for img in g_p.images])



def cohomology_ring(cx: CochainComplex, n_max: int, label: str, unit_cocycle: Vector | None = None) -> GradedRingTable:
    """
    Tabela do anel H^*(cx) até n_max, com [f]·[g] = [f ∘ G_p] e G o levantamento
    de g. Exige que cx tenha coeficientes no módulo resolvido.
    """
    if n_max > cx.top:
        raise DimensionMismatch(f"Anel até {n_max} exige a resolução até {n_max + 1}.")
    groups = [cx.cohomology(n) for n in range(n_max + 1)]
    reps = [[h.representative({i: 1}) for i in range(h.dim)] for h in groups]
    products = {}
    for q in range(n_max + 1):
        for j, g in enumerate(reps[q]):
            lift = ChainLift(cx.res, g, q, cx)
            for p in range(n_max + 1 - q):
                for i, f in enumerate(reps[p]):
                    prod = groups[p + q].coordinate_vector(compose_cocycles(f, p, lift))
                    if prod:
                        products[(p, i, q, j)] = prod
    unit = groups[0].coordinate_vector(unit_cocycle) if unit_cocycle is not None else None
    table = GradedRingTable(cx.field, label, [h.dim for h in groups], products, unit=unit)
    logger.info(f"Anel {label}: dimensões {table.dims}.")
    return table
