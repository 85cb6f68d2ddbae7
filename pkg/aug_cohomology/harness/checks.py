# --- aug_cohomology/harness/checks.py ---

"""
Uma classe por verificação da CLI. Cada uma só liga as entradas resolvidas à
função correspondente de `cohomology` ou `product_cohomology`.
"""

import logging

from aug_cohomology.algebras.algebra import check_axioms
from aug_cohomology.algebras.constructions import chinese_remainder_check, product
from aug_cohomology.cohomology.ext import ext_ring
from aug_cohomology.core.errors import UnknownCheck
from aug_cohomology.core.linalg import Subspace
from aug_cohomology.core.types import CheckName, CheckReport
from aug_cohomology.harness.base_check import BaseCheck, CheckInputs
from aug_cohomology.product_cohomology.coproduct_checks import (
    ext_coproduct_check,
    gr_centre_check,
    hoch_coproduct_check,
    omega_coproduct_check,
)
from aug_cohomology.product_cohomology.decomposition import decompose, hoch_prod_check
from aug_cohomology.product_cohomology.theorems import (
    les_exact_check,
    main_theo_check,
    nilp_check,
    phi_k_centre_check,
    ss_nilpotence_check,
)
from aug_cohomology.utils.config import settings

logger = logging.getLogger(__name__)

PAIR = ("left", "right")
DECOMP_PAIRS = [
    {"left": "trunc-poly:2:x", "right": "trunc-poly:2:y"},
    {"left": "trunc-poly:3:x", "right": "trunc-poly:2:y"},
    {"left": "trunc-poly:3:x", "right": "trunc-poly:3:y"},
]


class AxiomsCheck(BaseCheck):
    check_name = CheckName.AXIOMS
    default_instances = [{"algebra": "gf3-triple"}, {"algebra": "rad-square-zero:2"},
                         {"algebra": "coproduct(trunc-poly:2:x,trunc-poly:2:y,4)"}]

    def run(self, inputs: CheckInputs) -> CheckReport:
        return check_axioms(inputs.algebra)


class OrdinaryCoprodCheck(BaseCheck):
    check_name = CheckName.ORDINARY_COPROD
    requires = PAIR
    default_instances = [{"left": "trunc-poly:2:x", "right": "trunc-poly:2:y", "n_max": 4}]

    def run(self, inputs: CheckInputs) -> CheckReport:
        return ext_coproduct_check(inputs.left, inputs.right, inputs.n_max)


class OmegaLemCheck(BaseCheck):
    check_name = CheckName.OMEGA_LEM
    requires = PAIR
    default_instances = [
        {"left": "trunc-poly:2:x", "right": "trunc-poly:2:y"},
        {"left": "trunc-poly:3:x", "right": "trunc-poly:2:y"},
    ]

    def default_cutoff(self, n_max: int) -> int:
        return n_max + settings.COPRODUCT_GUARD_BAND

    def run(self, inputs: CheckInputs) -> CheckReport:
        return omega_coproduct_check(inputs.left, inputs.right, inputs.cutoff)


class MainTheoCheck(BaseCheck):
    check_name = CheckName.MAIN_THEO
    requires = PAIR
    default_instances = [
        {"left": "trunc-poly:2:x", "right": "trunc-poly:2:y"},
        {"left": "trunc-poly:3:x", "right": "trunc-poly:2:y"},
        {"left": "product(trunc-poly:3:a,trunc-poly:2:b)", "right": "trunc-poly:2:c", "n_max": 3},
    ]

    def run(self, inputs: CheckInputs) -> CheckReport:
        return main_theo_check(inputs.left, inputs.right, inputs.n_max)


class LesExactCheck(BaseCheck):
    check_name = CheckName.LES_EXACT
    requires = PAIR
    default_instances = [{"left": "trunc-poly:2:x", "right": "trunc-poly:2:y", "n_max": 3}]

    def run(self, inputs: CheckInputs) -> CheckReport:
        return les_exact_check(inputs.left, inputs.right, inputs.n_max)


class AdditiveDecompCheck(BaseCheck):
    check_name = CheckName.ADDITIVE_DECOMP
    requires = PAIR
    default_instances = DECOMP_PAIRS

    def run(self, inputs: CheckInputs) -> CheckReport:
        return decompose(inputs.left, inputs.right, inputs.n_max).report


class HochProdCheck(BaseCheck):
    check_name = CheckName.HOCH_PROD
    requires = PAIR
    default_instances = [{"left": "trunc-poly:2:x", "right": "trunc-poly:2:y"}]
    twist_seed: int | None = 7
    seed: int = 42

    def run(self, inputs: CheckInputs) -> CheckReport:
        decomp = decompose(inputs.left, inputs.right, inputs.n_max)
        report = hoch_prod_check(decomp, twist_seed=self.twist_seed, seed=self.seed)
        report.absorb("decomposition", decomp.report)
        return report


class NilpHHCheck(BaseCheck):
    check_name = CheckName.NILP_HH
    requires = PAIR
    default_instances = DECOMP_PAIRS

    def run(self, inputs: CheckInputs) -> CheckReport:
        return nilp_check(inputs.left, inputs.right, inputs.n_max)


class GrCentreCheck(BaseCheck):
    """R e S são os anéis E(Λ) e E(Γ) truncados no corte."""
    check_name = CheckName.GR_CENTRE
    requires = PAIR
    default_instances = [
        {"left": "trunc-poly:2:x", "right": "trunc-poly:2:y"},
        {"left": "trunc-poly:3:x", "right": "trunc-poly:2:y"},
    ]

    def run(self, inputs: CheckInputs) -> CheckReport:
        r = ext_ring(inputs.left, inputs.cutoff)
        s = ext_ring(inputs.right, inputs.cutoff)
        return gr_centre_check(r, s, inputs.cutoff)


class PhiKCentreCheck(BaseCheck):
    check_name = CheckName.PHI_K_CENTRE
    default_instances = [{"algebra": "trunc-poly:2"}, {"algebra": "trunc-poly:3"},
                         {"algebra": "rad-square-zero:2", "n_max": 3}]

    def run(self, inputs: CheckInputs) -> CheckReport:
        return phi_k_centre_check(inputs.algebra, inputs.n_max)


class SSNilpotenceCheck(BaseCheck):
    check_name = CheckName.SS_NILPOTENCE
    default_instances = [{"algebra": "trunc-poly:3"}, {"algebra": "product(trunc-poly:2:x,trunc-poly:2:y)", "n_max": 3}]

    def run(self, inputs: CheckInputs) -> CheckReport:
        return ss_nilpotence_check(inputs.algebra, inputs.n_max)


class ChineseRemainderCheck(BaseCheck):
    """Λ*Γ com I e J os ideais de aumento dos dois fatores."""
    check_name = CheckName.CHINESE_REMAINDER
    requires = PAIR
    default_instances = [{"left": "trunc-poly:3:x", "right": "trunc-poly:2:y"}]

    def run(self, inputs: CheckInputs) -> CheckReport:
        prod = product(inputs.left, inputs.right)
        c = prod.algebra
        i = Subspace(c.field, c.dim, ({k: 1} for k in prod.ideal_left()))
        j = Subspace(c.field, c.dim, ({k: 1} for k in prod.ideal_right()))
        return chinese_remainder_check(c, i, j)


class HochCoprodHeuristicCheck(BaseCheck):
    check_name = CheckName.HOCH_COPROD_HEURISTIC
    requires = PAIR
    default_instances = [{"left": "trunc-poly:2:x", "right": "trunc-poly:2:y", "n_max": 2}]

    def default_cutoff(self, n_max: int) -> int:
        return 6

    def run(self, inputs: CheckInputs) -> CheckReport:
        return hoch_coproduct_check(inputs.left, inputs.right, inputs.cutoff, inputs.n_max)


CHECKS: dict[CheckName, type[BaseCheck]] = {
    cls.check_name: cls
    for cls in (
        AxiomsCheck, OrdinaryCoprodCheck, OmegaLemCheck, MainTheoCheck, LesExactCheck,
        AdditiveDecompCheck, HochProdCheck, NilpHHCheck, GrCentreCheck, PhiKCentreCheck,
        SSNilpotenceCheck, ChineseRemainderCheck, HochCoprodHeuristicCheck,
    )
}


def get_check(name: str) -> BaseCheck:
    try:
        return CHECKS[CheckName(name)]()
    except ValueError:
        available = sorted(c.value for c in CHECKS)
        raise UnknownCheck(f"Verificação desconhecida: '{name}'. Disponíveis: {available}") from None
