# --- aug_cohomology/resolutions/bar.py ---

"""Resolução bar (não normalizada) de Λ como bimódulo, usada como oráculo independente."""

import itertools
import logging

from aug_cohomology.algebras.algebra import Algebra, EnvelopingAlgebra
from aug_cohomology.core.linalg import Vector, vec_axpy
from aug_cohomology.core.types import ResolutionKind
from aug_cohomology.resolutions.minimal import Resolution
from aug_cohomology.resolutions.modules import FreeMap, FreeModule, RegularBimodule

logger = logging.getLogger(__name__)


def bar_resolution(a: Algebra, n_max: int) -> Resolution:
    """
    B_n = Λ ⊗ Λ^{⊗n} ⊗ Λ com gerador [a_1|…|a_n] por n-uplo de índices da base e
    d[a_1|…|a_n] = a_1·[a_2|…] + Σ (−1)^i […|a_i a_{i+1}|…] + (−1)^n […|a_{n−1}]·a_n.
    """
    a = a.adapted()
    f = a.field
    env = EnvelopingAlgebra(a)
    target = RegularBimodule(a, env)
    tuples = [list(itertools.product(range(a.dim), repeat=n)) for n in range(n_max + 1)]
    terms = [
        FreeModule(env, len(ts), labels=["[" + "|".join(a.labels[i] for i in t) + "]" for t in ts], name=f"B{n}")
        for n, ts in enumerate(tuples)
    ]
    position = [{t: g for g, t in enumerate(ts)} for ts in tuples]

    def differential(t: tuple[int, ...]) -> Vector:
        n = len(t)
        out: Vector = {}
        lower, term = position[n - 1], terms[n - 1]
        vec_axpy(out, 1, {term.index(lower[t[1:]], env.pair(t[0], 0)): 1}, f)
        for i in range(n - 1):
            prod = a.mul_basis(t[i], t[i + 1])
            for k, c in prod.items():
                merged = t[:i] + (k,) + t[i + 2:]
                vec_axpy(out, (-1) ** (i + 1) * c, {term.index(lower[merged], 0): 1}, f)
        vec_axpy(out, (-1) ** n, {term.index(lower[t[:-1]], env.pair(0, t[-1])): 1}, f)
        return out

    augmentation = FreeMap(terms[0], target, [dict(a.unit)])
    differentials: list[FreeMap | None] = [None]
    for n in range(1, n_max + 1):
        differentials.append(FreeMap(terms[n], terms[n - 1], [differential(t) for t in tuples[n]]))
    logger.debug(f"Resolução bar de {a.name} com postos {[len(ts) for ts in tuples]}.")
    return Resolution(ResolutionKind.BIMODULE, a, target, terms, differentials, augmentation, name=f"bar({a.name})")
