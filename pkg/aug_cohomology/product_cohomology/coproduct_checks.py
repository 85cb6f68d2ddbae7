# --- aug_cohomology/product_cohomology/coproduct_checks.py ---

"""
Verificações do lado do coproduto Λ⊔Γ, sempre sobre truncaturas: E(Λ⊔Γ) =
E(Λ)*E(Γ), a decomposição de Ω, o centro graduado de R⊔S e o relatório
heurístico de HH(Λ⊔Γ).
"""

import logging

from aug_cohomology.algebras.algebra import Algebra, EnvelopingAlgebra, is_self_injective_local
from aug_cohomology.algebras.constructions import LEFT, RIGHT, CoproductResult, coproduct, product
from aug_cohomology.algebras.graded import GradedAlgebra
from aug_cohomology.cohomology.ext import ext_complex, ext_functor
from aug_cohomology.cohomology.hochschild import hh_groups
from aug_cohomology.cohomology.ring_table import GradedRingTable
from aug_cohomology.core.linalg import Matrix, Subspace, Vector, kernel_basis, vec_axpy
from aug_cohomology.core.types import CheckReport, CoproductGrading
from aug_cohomology.resolutions.minimal import omega_bimodule, resolution_of_k

logger = logging.getLogger(__name__)

# Margem acima do maior grau interno em jogo antes de se confiar numa truncatura.
COPRODUCT_GUARD = 2


def _flat_degrees(res) -> list[int]:
    return [d for ds in res.generator_degrees() if ds for d in ds]


def _trusted_counts(res, top: int) -> list[int]:
    """Geradores de grau interno ≤ top em cada grau homológico."""
    return [sum(1 for d in (ds or []) if d <= top) for ds in res.generator_degrees()]


def ext_coproduct_check(a: Algebra, b: Algebra, n_max: int) -> CheckReport:
    """
    E^n(Λ⊔Γ) = E^n(Λ) ⊕ E^n(Γ) em grau positivo, contado nos graus internos de
    confiança de duas truncaturas, e produtos cruzados nulos entre as partes.
    """
    a, b = a.adapted(), b.adapted()
    report = CheckReport(check="ordinary-coprod", params={"left": a.name, "right": b.name, "n_max": n_max})
    if a.weights is None or b.weights is None:
        report.fail_hypotheses("É preciso uma graduação por pesos nos dois fatores.")
        return report
    factor_res = [resolution_of_k(x, n_max) for x in (a, b)]
    top = max(_flat_degrees(factor_res[0]) + _flat_degrees(factor_res[1]) + a.weights + b.weights)
    cutoff = 2 * top + COPRODUCT_GUARD
    expected = [1] + [factor_res[0].rank(n) + factor_res[1].rank(n) for n in range(1, n_max + 1)]

    counts = {}
    for cut in (cutoff, cutoff + 2):
        copro = coproduct(a, b, cut, CoproductGrading.WEIGHT)
        counts[cut] = _trusted_counts(resolution_of_k(copro.algebra, n_max), cutoff)
    report.tables.update({"expected": expected, "cutoffs": list(counts), "dims": list(counts.values())})
    stable = counts[cutoff] == counts[cutoff + 2]
    report.require("stable", stable, dims=list(counts.values()))
    report.require("dims", counts[cutoff] == expected, computed=counts[cutoff], expected=expected)

    copro = coproduct(a, b, cutoff, CoproductGrading.WEIGHT)
    functors = [ext_functor(copro.incl_left, n_max), ext_functor(copro.incl_right, n_max)]
    for side, fn in zip((LEFT, RIGHT), functors):
        report.absorb(f"E(i_{side})", fn.report)
    cx = ext_complex(copro.algebra, n_max)
    table = functors[LEFT].target_table
    degrees = cx.res.generator_degrees()

    def part(n: int, vanishing: int) -> list[Vector]:
        """Classes verdadeiras (grau interno ≤ top) que E(i) do outro fator anula."""
        h = cx.cohomology(n)
        true = Subspace(cx.field, h.dim, (h.coordinate_vector({g: 1}) for g, d in enumerate(degrees[n] or [])
                                          if d <= top))
        kernel = kernel_basis(functors[vanishing].matrices[n])
        return true.intersection(kernel).basis

    for p in range(1, n_max + 1):
        for q in range(1, n_max + 1 - p):
            for u in part(p, RIGHT):
                for v in part(q, LEFT):
                    ok = not table.multiply(p, u, q, v) and not table.multiply(q, v, p, u)
                    report.require("cross_products_vanish", ok, degrees=[p, q])
    if not stable:
        logger.warning(f"Coproduto {copro.algebra.name}: E instável entre os cortes {list(counts)}.")
    return report


def omega_coproduct_check(a: Algebra, b: Algebra, cutoff: int) -> CheckReport:
    """Ω de (Λ⊔Γ)^e = O_Λ ⊕ O_Γ nos graus de confiança, com O_* os fechos de λ⊗1 − 1⊗λ."""
    a, b = a.adapted(), b.adapted()
    grading = CoproductGrading.WEIGHT if a.weights is not None and b.weights is not None else CoproductGrading.LENGTH
    copro = coproduct(a, b, cutoff, grading)
    alg = copro.algebra
    trusted = alg.trusted_degree
    report = CheckReport(check="omega-lem", params={"left": a.name, "right": b.name, "cutoff": cutoff})
    omega = omega_bimodule(alg, trusted_degree=trusted)
    env = EnvelopingAlgebra(alg)
    f = alg.field
    window = Subspace(f, env.dim, ({k: 1} for k in range(env.dim) if env.weights[k] <= trusted))
    closures = []
    for factor, incl in ((a, copro.incl_left), (b, copro.incl_right)):
        diffs = []
        for s in factor.generators():
            image = incl.apply(s)
            v: Vector = {}
            for i, c in image.items():
                vec_axpy(v, c, {env.pair(i, 0): 1}, f)
                vec_axpy(v, -c, {env.pair(0, i): 1}, f)
            diffs.append(v)
        closure = env.product_span(({k: 1} for k in range(env.dim)), diffs) if diffs else Subspace(f, env.dim)
        closures.append(closure.intersection(window))
    total = closures[0].sum(closures[1])
    meet = closures[0].intersection(closures[1])
    report.require("sum_is_omega", total == omega.kernel, sum=total.dim, omega=omega.dim)
    report.require("trivial_intersection", meet.dim == 0, intersection=meet.dim)
    report.require("generated_by_differences", omega.is_generated)
    report.tables.update({"omega": omega.dim, "O_left": closures[0].dim, "O_right": closures[1].dim,
                          "trusted_degree": trusted})
    return report


# --- Centro graduado ---

def _generator_degrees(table: GradedRingTable) -> list[int]:
    """Graus com elementos indecomponíveis (não gerados por produtos de graus menores)."""
    out = []
    for n in range(1, table.bound + 1):
        products = Subspace(table.field, table.dims[n], (
            table.basis_product(p, i, n - p, j)
            for p in range(1, n) for i in range(table.dims[p]) for j in range(table.dims[n - p])
        ))
        if products.dim < table.dims[n]:
            out.append(n)
    return out


def gr_centre_check(r: GradedRingTable, s: GradedRingTable, cutoff: int) -> CheckReport:
    """
    Centro graduado de R⊔S: concentrado em grau 0, salvo se R e S forem ambos
    k[x]/x², caso em que xy + yx é central.
    """
    report = CheckReport(check="gr-centre", params={"left": r.label, "right": s.label, "cutoff": cutoff})
    cutoff = min(cutoff, r.bound, s.bound)
    guard = max(_generator_degrees(r) + _generator_degrees(s) + [1])
    alg_r, alg_s = r.to_algebra(name=r.label), s.to_algebra(name=s.label)
    copro = coproduct(alg_r, alg_s, cutoff, CoproductGrading.WEIGHT, guard_band=guard)
    alg = copro.algebra
    trusted = alg.trusted_degree
    centre = alg.graded_center()
    dims = [centre[n].dim for n in range(trusted + 1)]
    report.tables.update({"centre_dims": dims, "trusted_degree": trusted})

    if alg_r.dim == 1 or alg_s.dim == 1:
        other = alg_s if alg_r.dim == 1 else alg_r
        own = other.graded_center()
        own_dims = [own[n].dim for n in range(trusted + 1)]
        report.require("degenerate_factor", dims == own_dims, centre=dims, factor_centre=own_dims)
        return report

    if r.looks_like_dual_numbers() and s.looks_like_dual_numbers():
        report.tables["exceptional"] = True
        x, y = (LEFT, 1), (RIGHT, 1)
        degree = alg.degrees[copro.word_index[(x,)]] + alg.degrees[copro.word_index[(y,)]]
        if degree <= trusted:
            witness = {copro.word_index[(x, y)]: 1, copro.word_index[(y, x)]: 1}
            report.require("exceptional_witness", centre[degree].contains(witness), degree=degree)
        return report

    for n in range(1, trusted + 1):
        report.require("concentrated_in_degree_zero", dims[n] == 0, degree=n, dim=dims[n])
    return report


# --- Derivações e HH do coproduto ---

def _derivation_variables(alg: GradedAlgebra, shift: int, top: int) -> list[tuple[int, int]]:
    degrees = alg.degrees
    return [(i, k) for i in range(1, alg.dim) if degrees[i] + shift <= top
            for k in alg.component(degrees[i] + shift)]


def derivations(alg: GradedAlgebra, shift: int, top: int | None = None) -> tuple[list[tuple[int, int]], Subspace]:
    """
    Derivações homogéneas de grau `shift` lidas até ao grau `top`: as variáveis
    são os coeficientes (i, k) de D(e_i) em e_k e as condições D(uv) = D(u)v + uD(v).
    """
    top = alg.trusted_degree if top is None else top
    f = alg.field
    degrees = alg.degrees
    variables = _derivation_variables(alg, shift, top)
    pairs = [(i, j) for i in range(1, alg.dim) for j in range(1, alg.dim) if degrees[i] + degrees[j] + shift <= top]
    d = alg.dim
    cols = []
    for i0, k0 in variables:
        col: Vector = {}
        for row, (i, j) in enumerate(pairs):
            contrib: Vector = {}
            c = alg.mul_basis(i, j).get(i0, 0)
            if c:
                contrib[k0] = f.norm(contrib.get(k0, 0) + c)
            if i == i0:
                for k, v in alg.mul_basis(k0, j).items():
                    contrib[k] = f.norm(contrib.get(k, 0) - v)
            if j == i0:
                for k, v in alg.mul_basis(i, k0).items():
                    contrib[k] = f.norm(contrib.get(k, 0) - v)
            for k, v in contrib.items():
                if v:
                    col[row * d + k] = v
        cols.append(col)
    ker = kernel_basis(Matrix(f, len(pairs) * d, len(variables), cols))
    return variables, ker


def inner_derivations(alg: GradedAlgebra, shift: int, top: int | None = None) -> Subspace:
    """[z, −] para z de grau `shift`, nas variáveis de `derivations`."""
    top = alg.trusted_degree if top is None else top
    f = alg.field
    variables = _derivation_variables(alg, shift, top)
    position = {var: n for n, var in enumerate(variables)}
    vectors = []
    for z in alg.component(shift) if shift > 0 else []:
        v: Vector = {}
        for i in range(1, alg.dim):
            bracket = dict(alg.mul_basis(z, i))
            for k, c in alg.mul_basis(i, z).items():
                bracket[k] = f.norm(bracket.get(k, 0) - c)
            for k, c in bracket.items():
                if c and (i, k) in position:
                    v[position[(i, k)]] = c
        vectors.append(v)
    return Subspace(f, len(variables), vectors)


def _on_generators(variables: list[tuple[int, int]], space: Subspace, generators: list[int]) -> Subspace:
    keep = [n for n, (i, _) in enumerate(variables) if i in generators]
    local = {n: pos for pos, n in enumerate(keep)}
    return Subspace(space.field, len(keep), ({local[n]: c for n, c in v.items() if n in local} for v in space.basis))


def _is_dual_numbers(a: Algebra) -> bool:
    return a.dim == 2 and not a.mul_basis(1, 1)


def _centre_by_degree(alg: Algebra, centre: Subspace, degrees: list[int], top: int) -> list[int]:
    """dim Z ∩ (componente de grau n), n ≤ top."""
    out = []
    for n in range(top + 1):
        comp = Subspace(alg.field, alg.dim, ({i: 1} for i, d in enumerate(degrees) if d == n))
        out.append(centre.intersection(comp).dim)
    return out


def hoch_coproduct_check(a: Algebra, b: Algebra, cutoff: int, n_max: int) -> CheckReport:
    """
    Relatório heurístico: autoinjetividade de Λ^e e Γ^e, HH da truncatura em dois
    cortes contra HH(Λ) ⊕ HH(Γ), as duas leituras de HH^0 e Der/Inn por grau interno.
    """
    a, b = a.adapted(), b.adapted()
    report = CheckReport(check="hoch-coprod-heuristic", heuristic=True,
                         params={"left": a.name, "right": b.name, "cutoff": cutoff, "n_max": n_max})
    injective = {x.name: is_self_injective_local(EnvelopingAlgebra(x)) for x in (a, b)}
    report.tables["self_injective"] = injective
    if not all(injective.values()):
        report.fail_hypotheses("Λ^e e Γ^e têm de ser autoinjetivas.", self_injective=injective)
        return report

    grading = CoproductGrading.WEIGHT if a.weights is not None and b.weights is not None else CoproductGrading.LENGTH
    hh = {cut: hh_groups(coproduct(a, b, cut, grading).algebra, n_max) for cut in (cutoff, cutoff + 2)}
    factors = [hh_groups(x, n_max) for x in (a, b)]
    factor_sum = [x + y for x, y in zip(*factors)]
    stable = [n for n in range(n_max + 1) if hh[cutoff][n] == hh[cutoff + 2][n]]
    report.tables.update({"hh": {str(k): v for k, v in hh.items()}, "factor_sum": factor_sum, "stable_degrees": stable,
                          "agrees_with_factor_sum": [n for n in stable if n > 1 and hh[cutoff][n] == factor_sum[n]]})

    copro = coproduct(a, b, cutoff, grading)
    alg = copro.algebra
    trusted = alg.trusted_degree
    centre = alg.center()
    prod = product(a, b).algebra
    if grading is CoproductGrading.WEIGHT:
        prod_degrees = prod.weights
    else:
        prod_degrees = [0] + [1] * (prod.dim - 1)
    readings = {
        "coproduct": _centre_by_degree(alg, centre, alg.degrees, trusted),
        "product": _centre_by_degree(prod, prod.center(), prod_degrees, trusted),
    }
    if _is_dual_numbers(a) and _is_dual_numbers(b):
        expected = [1 if n % 2 == 0 else 0 for n in range(trusted + 1)]
        readings["expected"] = expected
        readings["matches"] = [name for name in ("coproduct", "product") if readings[name] == expected]
        report.require("hh0_some_reading_matches", bool(readings["matches"]),
                       coproduct=readings["coproduct"], product=readings["product"], expected=expected)
        x, y = (LEFT, 1), (RIGHT, 1)
        z = {copro.word_index[(x, y)]: 1, copro.word_index[(y, x)]: 1}
        power, degree = dict(z), 2
        while degree <= trusted:
            report.require("centre_witness", centre.contains(power), degree=degree)
            power, degree = alg.multiply(power, z), degree + 2
        report.absorb("witnesses", _derivation_witnesses(copro, alg))
    report.tables["hh0"] = readings

    der_inn = []
    for shift in range(0, alg.trusted_degree):
        variables, der = derivations(alg, shift)
        inn = inner_derivations(alg, shift)
        der_inn.append({"shift": shift, "der": der.dim, "inn": inn.dim, "outer": der.dim - inn.dim})
    report.tables["der_inn"] = der_inn
    return report


def _word_text(word) -> str:
    return "·".join("xy"[s] for s, _ in word) if word else "0"


def _derivation_witnesses(copro: CoproductResult, alg: GradedAlgebra) -> CheckReport:
    """(xyx, 0), (0, yxy) e (xyxyx, 0) exteriores; (xyx, −yxy) interior."""
    report = CheckReport(check="hoch-coprod-witnesses", heuristic=True)
    x, y = (LEFT, 1), (RIGHT, 1)
    index = copro.word_index
    gx, gy = index[(x,)], index[(y,)]
    cases = [
        ((x, y, x), None, 2, "outer"),
        (None, (y, x, y), 2, "outer"),
        ((x, y, x), (y, x, y), 2, "inner"),
        ((x, y, x, y, x), None, 4, "outer"),
    ]
    for on_x, on_y, shift, kind in cases:
        if 1 + shift > alg.trusted_degree:
            continue
        variables, der = derivations(alg, shift)
        inn = inner_derivations(alg, shift)
        generators = [gx, gy]
        der_g = _on_generators(variables, der, generators)
        inn_g = _on_generators(variables, inn, generators)
        keep = [var for var in variables if var[0] in generators]
        local = {var: n for n, var in enumerate(keep)}
        witness: Vector = {}
        if on_x is not None:
            witness[local[(gx, index[on_x])]] = 1
        if on_y is not None:
            witness[local[(gy, index[on_y])]] = -1 if on_x is not None else 1
        label = f"({_word_text(on_x)}, {_word_text(on_y)})"
        report.require("is_derivation", der_g.contains(witness), witness=label)
        report.require(kind, inn_g.contains(witness) == (kind == "inner"), witness=label)
    return report
