# --- aug_cohomology/resolutions/psq.py ---

"""
Resolução pequena de C = Λ*Γ sobre C^e montada a partir de resoluções pequenas
P → Λ e Q → Γ com P_0 = Λ^e e Q_0 = Γ^e.

Os geradores em grau n ≥ 1 são palavras alternadas de letras (lado, m, g), com
m ≥ 1, g um gerador de P_m (lado esquerdo) ou Q_m (lado direito) e Σ m = n; em
grau 0 há só a palavra vazia. Como P e Q são pequenas, as letras interiores
têm diferencial nulo e só as letras das pontas contribuem.
"""

import logging

from aug_cohomology.algebras.algebra import EnvelopingAlgebra
from aug_cohomology.algebras.constructions import LEFT, RIGHT, ProductResult, product
from aug_cohomology.core.errors import DimensionMismatch, NotSmall
from aug_cohomology.core.linalg import Vector, vec_axpy
from aug_cohomology.core.types import CheckReport, ResolutionKind
from aug_cohomology.resolutions.minimal import (
    LeftHomotopy, Resolution, left_homotopy, minimal_bimodule_resolution,
)
from aug_cohomology.resolutions.modules import FreeMap, FreeModule, RegularBimodule

logger = logging.getLogger(__name__)

Letter = tuple[int, int, int]
PsqWord = tuple[Letter, ...]

SIDE_NAMES = {LEFT: "P", RIGHT: "Q"}


def word_degree(w: PsqWord) -> int:
    return sum(m for _, m, _ in w)


def alternating_words(ranks: tuple[list[int], list[int]], n: int) -> list[PsqWord]:
    """Palavras alternadas de grau total n, por ordem lexicográfica das letras."""
    if n == 0:
        return [()]
    out: list[PsqWord] = []

    def extend(prefix: PsqWord, remaining: int, last_side: int | None) -> None:
        if remaining == 0:
            out.append(prefix)
            return
        for side in (LEFT, RIGHT):
            if side == last_side:
                continue
            side_ranks = ranks[side]
            for m in range(1, remaining + 1):
                if m >= len(side_ranks):
                    break
                for g in range(side_ranks[m]):
                    extend(prefix + ((side, m, g),), remaining - m, side)

    extend((), n, None)
    return out


def _require_small_bimodule(res: Resolution) -> None:
    if res.kind is not ResolutionKind.BIMODULE:
        raise NotSmall(f"{res.name} não é uma resolução de bimódulos.")
    if not res.small:
        raise NotSmall(f"{res.name} não é pequena.")
    if res.rank(0) != 1 or res.augmentation.images[0] != dict(res.base.unit):
        raise NotSmall(f"{res.name}: P_0 tem de ser Λ^e com gerador ↦ 1.")


class PsqResolution(Resolution):
    """Resolução de Λ*Γ por palavras alternadas; `factors` são (P, Q)."""

    def __init__(self, factors: tuple[Resolution, Resolution], prod: ProductResult, n_max: int, name: str = ""):
        self.factors = factors
        self.product = prod
        c = prod.algebra
        self.env = EnvelopingAlgebra(c)
        ranks = (factors[LEFT].ranks(), factors[RIGHT].ranks())
        self.words = [alternating_words(ranks, n) for n in range(n_max + 1)]
        self.word_index = [{w: k for k, w in enumerate(ws)} for ws in self.words]
        target = RegularBimodule(c, self.env)
        terms = [
            FreeModule(self.env, len(ws), labels=[self.word_label(w) for w in ws],
                       degrees=self._word_degrees(ws), name=f"F{n}")
            for n, ws in enumerate(self.words)
        ]
        augmentation = FreeMap(terms[0], target, [{0: 1}])
        super().__init__(ResolutionKind.BIMODULE, c, target, terms, [None], augmentation,
                         name=name or f"psq({c.name})")
        for n in range(1, n_max + 1):
            self.differentials.append(FreeMap(terms[n], terms[n - 1], [self.delta(w) for w in self.words[n]]))

    def word_label(self, w: PsqWord) -> str:
        if not w:
            return "()"
        return "|".join(f"{SIDE_NAMES[s]}{m}.{self.factors[s].terms[m].labels[g]}" for s, m, g in w)

    def _word_degrees(self, ws: list[PsqWord]) -> list[int] | None:
        degs = []
        for w in ws:
            total = 0
            for s, m, g in w:
                factor_degrees = self.factors[s].terms[m].degrees
                if factor_degrees is None:
                    return None
                total += factor_degrees[g]
            degs.append(total)
        return degs

    # --- ι: Λ^e, Γ^e → C^e ---

    def iota(self, side: int, k: int) -> int:
        """Índice em C^e da imagem de e_i ⊗ e_j ∈ Λ^e (ou Γ^e)."""
        env = self.factors[side].algebra
        i, j = env.split(k)
        return self.env.pair(self.iota_base(side, i), self.iota_base(side, j))

    def iota_base(self, side: int, i: int) -> int:
        return self.product.index_left(i) if side == LEFT else self.product.index_right(i)

    def local_index(self, b: int) -> tuple[int | None, int]:
        """(lado, índice no fator) de um elemento da base de C."""
        side = self.product.side_of(b)
        if side is None:
            return None, 0
        return side, b if side == LEFT else b - self.product.offset

    def position(self, w: PsqWord) -> int:
        return self.word_index[word_degree(w)][w]

    def coordinate(self, w: PsqWord, k: int) -> int:
        n = word_degree(w)
        return self.terms[n].index(self.word_index[n][w], k)

    # --- Diferencial ---

    def delta(self, w: PsqWord) -> Vector:
        n = word_degree(w)
        f = self.field
        out: Vector = {}
        if len(w) == 1:
            side, m, g = w[0]
            res = self.factors[side]
            for h, k, c in res.terms[m - 1].terms(res.differentials[m].images[g]):
                target = () if m == 1 else ((side, m - 1, h),)
                vec_axpy(out, c, {self.coordinate(target, self.iota(side, k)): 1}, f)
            return out
        side, m, g = w[0]
        res = self.factors[side]
        env = res.algebra
        for h, k, c in res.terms[m - 1].terms(res.differentials[m].images[g]):
            i, j = env.split(k)
            if j != 0:
                continue
            target = w[1:] if m == 1 else ((side, m - 1, h),) + w[1:]
            vec_axpy(out, c, {self.coordinate(target, self.env.pair(self.iota_base(side, i), 0)): 1}, f)
        side, m, g = w[-1]
        res = self.factors[side]
        env = res.algebra
        sign = (-1) ** (n - m)
        for h, k, c in res.terms[m - 1].terms(res.differentials[m].images[g]):
            i, j = env.split(k)
            if i != 0:
                continue
            target = w[:-1] if m == 1 else w[:-1] + ((side, m - 1, h),)
            vec_axpy(out, sign * c, {self.coordinate(target, self.env.pair(0, self.iota_base(side, j))): 1}, f)
        return out


class PsqHomotopy:
    """
    Homotopia contrativa σ linear à esquerda da resolução por palavras, construída
    a partir das homotopias s (de P) e t (de Q). Em grau 0: σ([()]·1) = 0 e
    σ([()]·ι e_j) = ι s_0(p_0·e_j).
    """

    def __init__(self, psq: PsqResolution):
        self.psq = psq
        self.field = psq.field
        self.factor_homotopies: tuple[LeftHomotopy, LeftHomotopy] = tuple(
            res.homotopy if isinstance(res.homotopy, LeftHomotopy) else left_homotopy(res)
            for res in psq.factors
        )
        self._basic: dict[tuple[int, int, int], Vector] = {}

    def contract(self, n: int, v: Vector) -> Vector:
        psq = self.psq
        env = psq.env
        if n == -1:
            return {psq.terms[0].index(0, env.pair(x, 0)): c for x, c in v.items()}
        term = psq.terms[n]
        out: Vector = {}
        for idx, c in v.items():
            pos, k = term.split(idx)
            a, b = env.split(k)
            basic = self.basic(n, pos, b)
            if basic:
                moved = basic if a == 0 else psq.terms[n + 1].act(env.pair(a, 0), basic)
                vec_axpy(out, c, moved, self.field)
        return out

    def _full(self, side: int, x: Vector, m: int) -> Vector:
        """ι aplicado a um elemento de P_m inteiro, com letras (lado, m, h)."""
        psq = self.psq
        res = psq.factors[side]
        out: Vector = {}
        for h, k, c in res.terms[m].terms(x):
            vec_axpy(out, c, {psq.coordinate(((side, m, h),), psq.iota(side, k)): 1}, self.field)
        return out

    def _right_only(self, side: int, x: Vector, m: int, build, sign: int) -> Vector:
        """Termos de x ∈ P_m com fator esquerdo 1, ligados à direita de uma palavra."""
        psq = self.psq
        res = psq.factors[side]
        env = res.algebra
        out: Vector = {}
        for h, k, c in res.terms[m].terms(x):
            i, l = env.split(k)
            if i != 0:
                continue
            k_c = psq.env.pair(0, psq.iota_base(side, l))
            vec_axpy(out, sign * c, {psq.coordinate(build(h), k_c): 1}, self.field)
        return out

    def basic(self, n: int, pos: int, b: int) -> Vector:
        """σ([W]·e_b) para a palavra W de posição pos em grau n."""
        key = (n, pos, b)
        if key in self._basic:
            return self._basic[key]
        psq = self.psq
        w = psq.words[n][pos]
        side_b, j = psq.local_index(b)
        if n == 0:
            if side_b is None:
                result: Vector = {}
            else:
                x = self.factor_homotopies[side_b].basic(0, 0, j)
                result = self._full(side_b, x, 1)
        else:
            side, m, g = w[-1]
            u = w[:-1]
            if side_b is None or side_b == side:
                x = self.factor_homotopies[side].basic(m, g, j)
                if not u:
                    result = self._full(side, x, m + 1)
                else:
                    result = self._right_only(side, x, m + 1, lambda h: u + ((side, m + 1, h),), (-1) ** (n - m))
            else:
                x = self.factor_homotopies[side_b].basic(0, 0, j)
                result = self._right_only(side_b, x, 1, lambda h: w + ((side_b, 1, h),), (-1) ** n)
        self._basic[key] = result
        return result


def build_psq(res_p: Resolution, res_q: Resolution, n_max: int, name: str = "") -> PsqResolution:
    """Monta a resolução por palavras e instala a homotopia σ."""
    for res in (res_p, res_q):
        _require_small_bimodule(res)
        if res.n_max < n_max:
            raise DimensionMismatch(f"{res.name} só vai até ao grau {res.n_max} (< {n_max}).")
    res_p.field.require_same(res_q.field)
    prod = product(res_p.base, res_q.base)
    psq = PsqResolution((res_p, res_q), prod, n_max, name=name)
    psq.homotopy = PsqHomotopy(psq)
    logger.info(f"Resolução {psq.name}: postos {psq.ranks()}.")
    return psq


def psq_resolution(a, b, n_max: int, twist_seed: int | None = None) -> PsqResolution:
    """P e Q mínimas até n_max + 1 (a homotopia em grau n usa P_{n+1})."""
    res_p = minimal_bimodule_resolution(a, n_max + 1, twist_seed=twist_seed)
    res_q = minimal_bimodule_resolution(b, n_max + 1, twist_seed=None if twist_seed is None else twist_seed + 1)
    return build_psq(res_p, res_q, n_max)


def verify_psq(psq: PsqResolution, upto: int | None = None) -> CheckReport:
    """
    δ² = 0, δσ + σδ = id em [W]·e_b para todos os W e e_b, exatidão por postos,
    pequenez e as duas condições de boa definição das pontas.
    """
    upto = psq.n_max - 1 if upto is None else min(upto, psq.n_max - 1)
    f = psq.field
    c = psq.product.algebra
    report = CheckReport(check="psq", params={"resolution": psq.name, "upto": upto})
    report.require("d_squared", psq.check_d_squared())
    report.require("small", psq.is_small())
    homology = psq.homology_dims(upto)
    report.tables["ranks"] = psq.ranks()
    report.tables["homology"] = homology
    report.require("exact", all(d == 0 for d in homology), homology=homology)
    for x in range(c.dim):
        back = psq.augmentation.apply(psq.contract(-1, {x: 1}))
        report.require("section", back == {x: 1}, element=c.labels[x])
    for n in range(upto + 1):
        term = psq.terms[n]
        for pos, w in enumerate(psq.words[n]):
            for b in range(c.dim):
                x = {term.index(pos, psq.env.pair(0, b)): 1}
                total = psq.boundary(n + 1).apply(psq.contract(n, x))
                vec_axpy(total, 1, psq.contract(n - 1, psq.boundary(n).apply(x)), f)
                report.require("homotopy", total == x, degree=n, word=psq.word_label(w), basis=c.labels[b])
    for side, res in enumerate(psq.factors):
        env = res.algebra
        base = res.base
        for m in range(1, psq.n_max + 1):
            for g, img in enumerate(res.differentials[m].images):
                for lam in base.ideal_indices:
                    moved = res.terms[m - 1].act(env.pair(0, lam), img)
                    leak = [k for _, k, _ in res.terms[m - 1].terms(moved) if env.split(k)[1] == 0]
                    report.require("well_defined", not leak, side=SIDE_NAMES[side], degree=m, generator=g)
    for i in psq.product.ideal_left():
        for j in psq.product.ideal_right():
            ok = not c.mul_basis(i, j) and not c.mul_basis(j, i)
            report.require("cross_products", ok, pair=[c.labels[i], c.labels[j]])
    if not report.passed:
        failed = sorted(k for k, v in report.clauses.items() if not v)
        logger.warning(f"Resolução {psq.name} falhou a verificação: {failed}")
    return report

