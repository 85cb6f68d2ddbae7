# --- aug_cohomology/core/errors.py ---

class EngineError(Exception):
    """Raiz de todos os erros do motor."""


class NoSolution(EngineError):
    """O sistema linear A·X = B é inconsistente."""


class DimensionMismatch(EngineError):
    """Dimensões ou espaços ambiente incompatíveis."""


class FieldMismatch(EngineError):
    """Operação entre objetos sobre corpos diferentes (ou corpo inválido)."""


class AxiomError(EngineError):
    """Álgebra (ou documento JSON) que falha os axiomas de álgebra aumentada."""

    def __init__(self, message: str, witnesses: list | None = None):
        super().__init__(message)
        self.witnesses = witnesses or []


class InhomogeneousRelation(EngineError):
    """Relação não homogénea numa apresentação graduada."""


class CutoffTooSmall(EngineError):
    """O corte de truncatura não deixa nenhum grau de confiança."""


class NotAnIdeal(EngineError):
    """O subespaço dado não é um ideal bilateral."""


class NotNilpotent(EngineError):
    """Ideal de aumento não nilpotente onde a nilpotência é exigida."""


class NotLocal(EngineError):
    """Álgebra não local onde a resolução mínima é exigida."""


class NotSmall(EngineError):
    """Resolução sem a propriedade 'small' (im d ⊆ I·P + P·I)."""


class NotACocycle(EngineError):
    """Cocadeia dada não é um cociclo."""


class UnknownCheck(EngineError):
    """Nome de verificação desconhecido."""


class UnknownExample(EngineError):
    """Entrada do registo de exemplos desconhecida."""


class FieldRefused(EngineError):
    """A verificação exige uma característica diferente da pedida."""
