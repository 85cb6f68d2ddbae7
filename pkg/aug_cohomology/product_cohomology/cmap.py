# --- aug_cohomology/product_cohomology/cmap.py ---

"""
Levantamentos multiplicativos c(f) de iHH(Λ) para HH(Λ*Γ)/R.

Para um cociclo f: P_n → Λ com imagem em I(Λ) e o seu levantamento f̄: P → P,
c(f) é a aplicação de cadeias de P⊔Q de grau −n dada por:
  - palavra de uma letra (P, m, g) com m ≥ n: ι f̄_{m−n}(p_g), inteira;
  - palavra u·v com duas ou mais letras: (−1)^{n|v|} f̄(primeira letra)·v, só com
    os termos de fator direito 1, mais u·f̄(última letra), só com os termos de
    fator esquerdo 1;
  - tudo o resto vai para zero.
Em grau 0 usa-se o levantamento genérico pela homotopia σ.
"""

import logging

from aug_cohomology.cohomology.complexes import ChainLift, CochainComplex, compose_cocycles
from aug_cohomology.core.errors import AxiomError
from aug_cohomology.core.linalg import Subspace, Vector, vec_axpy
from aug_cohomology.core.types import CheckReport
from aug_cohomology.product_cohomology.les import ProductLES
from aug_cohomology.resolutions.modules import FreeMap
from aug_cohomology.resolutions.psq import SIDE_NAMES, PsqResolution, PsqWord, word_degree

logger = logging.getLogger(__name__)


def hat(psq: PsqResolution, side: int, n: int, f: Vector) -> Vector:
    """f̂: gen_(lado, n, g) ↦ ι f(gen_g), restantes palavras ↦ 0 (em grau 0, a palavra vazia)."""
    dc = psq.base.dim
    d = psq.factors[side].base.dim
    out: Vector = {}
    for idx, c in f.items():
        g, m = divmod(idx, d)
        word = ((side, n, g),) if n > 0 else ()
        out[psq.word_index[n][word] * dc + psq.iota_base(side, m)] = c
    return out


class CMap:
    """c(f) como família de FreeMap F_m: (P⊔Q)_m → (P⊔Q)_{m−n}."""

    def __init__(self, psq: PsqResolution, side: int, cocycle: Vector, degree: int,
                 factor_cx: CochainComplex | None = None, psq_cx: CochainComplex | None = None):
        res = psq.factors[side]
        d = res.base.dim
        if any(idx % d == 0 for idx in cocycle):
            raise AxiomError("c(f) exige um cociclo com imagem em I(Λ).")
        self.psq = psq
        self.side = side
        self.degree = degree
        self.cocycle = cocycle
        self.factor_lift = ChainLift(res, cocycle, degree, factor_cx)
        self.hat = hat(psq, side, degree, cocycle)
        self.psq_cx = psq_cx or CochainComplex(psq)
        self._zero_lift = ChainLift(psq, self.hat, 0, self.psq_cx) if degree == 0 else None
        self._maps: dict[int, FreeMap] = {}

    def _letter_image(self, m: int, g: int) -> list[tuple[int, int, int, object]]:
        """Termos (h, i, j, c) de f̄_{m−n}(p_g) ∈ P_{m−n}, com e_i ⊗ e_j."""
        res = self.psq.factors[self.side]
        x = self.factor_lift.component(m - self.degree).images[g]
        env = res.algebra
        return [(h, *env.split(k), c) for h, k, c in res.terms[m - self.degree].terms(x)]

    def _replace(self, m: int, h: int) -> tuple:
        rest = m - self.degree
        return ((self.side, rest, h),) if rest > 0 else ()

    def image(self, w: PsqWord) -> Vector:
        psq, side, n = self.psq, self.side, self.degree
        f = psq.field
        out: Vector = {}
        if len(w) == 1:
            s, m, g = w[0]
            if s != side or m < n:
                return out
            for h, i, j, c in self._letter_image(m, g):
                k = psq.env.pair(psq.iota_base(side, i), psq.iota_base(side, j))
                vec_axpy(out, c, {psq.coordinate(self._replace(m, h), k): 1}, f)
            return out
        s, m, g = w[0]
        if s == side and m >= n:
            v = w[1:]
            sign = -1 if (n * word_degree(v)) % 2 else 1
            for h, i, j, c in self._letter_image(m, g):
                if j != 0:
                    continue
                k = psq.env.pair(psq.iota_base(side, i), 0)
                vec_axpy(out, sign * c, {psq.coordinate(self._replace(m, h) + v, k): 1}, f)
        s, m, g = w[-1]
        if s == side and m >= n:
            u = w[:-1]
            for h, i, j, c in self._letter_image(m, g):
                if i != 0:
                    continue
                k = psq.env.pair(0, psq.iota_base(side, j))
                vec_axpy(out, c, {psq.coordinate(u + self._replace(m, h), k): 1}, f)
        return out

    def component(self, m: int) -> FreeMap:
        """F_m: (P⊔Q)_m → (P⊔Q)_{m−n}."""
        if self._zero_lift is not None:
            return self._zero_lift.component(m)
        if m not in self._maps:
            psq = self.psq
            self._maps[m] = FreeMap(psq.terms[m], psq.terms[m - self.degree],
                                    [self.image(w) for w in psq.words[m]])
        return self._maps[m]

    def compose_with(self, g: Vector, p: int) -> Vector:
        """g ∘ F_{p+n}: representante de [g]·[f̂] em grau p + n."""
        cx = self.psq_cx
        f_p = self.component(p + self.degree)
        return cx.from_images([cx.evaluate(g, p, img) for img in f_p.images])


def c_map(les: ProductLES, side: int, cocycle: Vector, degree: int,
          factor_cx: CochainComplex | None = None) -> CMap:
    return CMap(les.psq, side, cocycle, degree, factor_cx, les.cx)


def cmap_check(les: ProductLES, side: int, kernels: list[Subspace], factor_cx: CochainComplex) -> CheckReport:
    """
    Para a base de ker φ_k em cada grau: c(f) é aplicação de cadeias, levanta f̂,
    é multiplicativa módulo R e os cobordos com imagem em I caem em R.
    """
    psq, n_max = les.psq, les.n_max
    f = psq.field
    res = psq.factors[side]
    d = res.base.dim
    report = CheckReport(check="c-map", params={"side": SIDE_NAMES[side], "n_max": n_max})
    reps: list[list[Vector]] = []
    maps: list[list[CMap]] = []
    for n in range(n_max + 1):
        h = factor_cx.cohomology(n)
        reps.append([h.representative(v) for v in kernels[n].basis])
        maps.append([c_map(les, side, z, n, factor_cx) for z in reps[n]])

    for n in range(n_max + 1):
        for k, cm in enumerate(maps[n]):
            for pos, w in enumerate(psq.words[n]):
                value = psq.augmentation.apply(cm.component(n).images[pos])
                expected = {m - pos * psq.base.dim: c for m, c in cm.hat.items()
                            if pos * psq.base.dim <= m < (pos + 1) * psq.base.dim}
                report.require("lifts", value == expected, degree=n, kernel=k, word=psq.word_label(w))
            for m in range(n + 1, psq.n_max + 1):
                lower, upper = cm.component(m - 1), cm.component(m)
                for pos, img in enumerate(psq.differentials[m].images):
                    lhs = psq.boundary(m - n).apply(upper.images[pos])
                    rhs = lower.apply(img)
                    report.require("chain_map", lhs == rhs, degree=n, kernel=k, source_degree=m,
                                   word=psq.word_label(psq.words[m][pos]))

    for p in range(n_max + 1):
        for q in range(n_max + 1 - p):
            for i, xi in enumerate(reps[p]):
                for j, cm in enumerate(maps[q]):
                    product = cm.compose_with(hat(psq, side, p, xi), p)
                    factor_product = compose_cocycles(xi, p, cm.factor_lift)
                    diff = dict(product)
                    vec_axpy(diff, -1, hat(psq, side, p + q, factor_product), f)
                    report.require("multiplicative_mod_r", les.in_r(p + q, diff), pair=[[p, i], [q, j]])

    for n in range(1, n_max + 1):
        for idx in range(factor_cx.dim(n - 1)):
            if idx % d == 0:
                continue
            boundary = factor_cx.coboundary(n - 1).apply({idx: 1})
            if boundary:
                report.require("coboundary_in_r", les.in_r(n, hat(psq, side, n, boundary)), degree=n, cochain=idx)
    report.tables["kernel_dims"] = [len(r) for r in reps]
    return report
