# --- aug_cohomology/harness/base_check.py ---

import logging
import time
from abc import ABC, abstractmethod
from dataclasses import dataclass, field as dc_field
from typing import Any

from aug_cohomology.algebras.algebra import Algebra
from aug_cohomology.core.errors import FieldRefused
from aug_cohomology.core.scalars import FieldSpec
from aug_cohomology.core.types import CHAR_TWO_REFUSED, CheckName, CheckReport
from aug_cohomology.utils.config import settings

logger = logging.getLogger(__name__)


@dataclass
class CheckInputs:
    """Álgebras já resolvidas e parâmetros numéricos de uma execução."""
    field: FieldSpec
    n_max: int
    cutoff: int | None = None
    algebra: Algebra | None = None
    left: Algebra | None = None
    right: Algebra | None = None
    specs: dict[str, str] = dc_field(default_factory=dict)

    def documents(self) -> list[dict]:
        return [
            x.to_doc().model_dump(mode="json")
            for x in (self.algebra, self.left, self.right) if x is not None
        ]

    def params(self) -> dict[str, Any]:
        return {"field": self.field.name, "n_max": self.n_max, "cutoff": self.cutoff, **self.specs}


class BaseCheck(ABC):
    """
    Classe base abstrata para todas as verificações. As subclasses declaram as
    álgebras de que precisam e as instâncias por omissão usadas em `report-all`.
    """
    check_name: CheckName
    requires: tuple[str, ...] = ("algebra",)
    default_instances: list[dict[str, Any]] = []

    def __init__(self, name: str | None = None):
        self.name = name or self.check_name.value
        self.parameters: dict[str, Any] = {}
        logger.info(f"Verificação '{self.name}' inicializada.")

    @abstractmethod
    def run(self, inputs: CheckInputs) -> CheckReport:
        """
        Executa a verificação; as falhas do teorema ficam no relatório, nunca em exceções.
        """
        pass

    def default_cutoff(self, n_max: int) -> int:
        return 2 * n_max + settings.COPRODUCT_GUARD_BAND

    def refuses(self, field: FieldSpec) -> bool:
        return self.check_name in CHAR_TWO_REFUSED and field.char == 2

    def execute(self, inputs: CheckInputs) -> CheckReport:
        """Recusa de característica, cronometragem e registo à volta de `run`."""
        if self.refuses(inputs.field):
            raise FieldRefused(f"'{self.name}' exige característica diferente de 2.")
        if inputs.cutoff is None and any(r in ("left", "right") for r in self.requires):
            inputs.cutoff = self.default_cutoff(inputs.n_max)
        start = time.perf_counter()
        report = self.run(inputs)
        report.params = {**inputs.params(), **report.params}
        report.timing_seconds = round(time.perf_counter() - start, 3)
        verdict = "passou" if report.passed else f"falhou ({report.status})"
        logger.info(f"[{self.name}] {verdict} em {report.timing_seconds:.2f}s.")
        return report

    def set_parameters(self, new_params: dict[str, Any]):
        """
        Atualiza parâmetros da verificação (ex.: sementes, número de amostras).
        """
        try:
            for key, value in new_params.items():
                if hasattr(self, key):
                    setattr(self, key, value)
                    self.parameters[key] = value
                else:
                    logger.warning(f"[{self.name}] Parâmetro desconhecido '{key}' ignorado.")
            logger.info(f"[{self.name}] Parâmetros atualizados: {new_params}")
        except Exception as e:
            logger.error(f"[{self.name}] Falha ao atualizar parâmetros: {e}", exc_info=True)
