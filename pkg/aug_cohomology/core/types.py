# --- aug_cohomology/core/types.py ---

from enum import Enum
from typing import Any, Union

from pydantic import BaseModel, ConfigDict, Field

# --- Constantes do Motor ---
ENGINE_NAME = "aug_cohomology"
CACHE_NAMESPACE = "aug_cohomology:cache"
RESOLUTION_BUNDLE_VERSION = 1

# --- Códigos de Saída da CLI ---
EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_UNKNOWN_CHECK = 3
EXIT_BAD_ALGEBRA = 4
EXIT_CUTOFF_TOO_SMALL = 5
EXIT_FIELD_REFUSED = 6
EXIT_INTERNAL = 70

JsonScalar = Union[str, int]

# --- Enums (Tipos Constantes) ---

class CacheBackend(str, Enum):
    FILE = "file"
    REDIS = "redis"
    NONE = "none"


class ResolutionKind(str, Enum):
    LEFT = "left"
    BIMODULE = "bimodule"


class CoproductGrading(str, Enum):
    LENGTH = "length"
    WEIGHT = "weight"


class CheckName(str, Enum):
    AXIOMS = "axioms"
    ORDINARY_COPROD = "ordinary-coprod"
    OMEGA_LEM = "omega-lem"
    MAIN_THEO = "main-theo"
    LES_EXACT = "les-exact"
    ADDITIVE_DECOMP = "additive-decomp"
    HOCH_PROD = "hoch-prod"
    NILP_HH = "nilp-hh"
    GR_CENTRE = "gr-centre"
    PHI_K_CENTRE = "phi-k-centre"
    SS_NILPOTENCE = "ss-nilpotence"
    CHINESE_REMAINDER = "chinese-remainder"
    HOCH_COPROD_HEURISTIC = "hoch-coprod-heuristic"


# Verificações cujos exemplos pressupõem característica diferente de dois.
CHAR_TWO_REFUSED = frozenset({
    CheckName.GR_CENTRE,
    CheckName.HOCH_PROD,
    CheckName.PHI_K_CENTRE,
    CheckName.HOCH_COPROD_HEURISTIC,
})

# --- Estruturas de Dados (Pydantic Models) ---

class FieldDoc(BaseModel):
    """Corpo de coeficientes: 0 para ℚ, p primo para GF(p)."""
    char: int = 0


class AlgebraDoc(BaseModel):
    """Álgebra aumentada por constantes de estrutura esparsas [i, j, k, coef]."""
    model_config = ConfigDict(extra="forbid")

    field: FieldDoc
    basis: list[str]
    unit: list[JsonScalar]
    mul: list[list[JsonScalar]]
    aug: list[JsonScalar]
    degrees: list[int] | None = None
    cutoff: int | None = None
    guard_band: int | None = None


class GeneratorDoc(BaseModel):
    """Gerador de uma apresentação, com grau positivo."""
    name: str
    degree: int = 1


class PresentationDoc(BaseModel):
    """Apresentação graduada: relações como listas de (coef, palavra)."""
    model_config = ConfigDict(extra="forbid")

    field: FieldDoc
    generators: list[GeneratorDoc]
    relations: list[list[tuple[JsonScalar, list[str]]]] = Field(default_factory=list)
    cutoff: int


class DimTable(BaseModel):
    """Dimensões por grau de uma família de grupos de cohomologia."""
    label: str
    dims: list[int]


class RingTableDoc(BaseModel):
    """Tabela de um anel graduado: produtos [grau_a, i, grau_b, j, k, coef]."""
    field: FieldDoc
    label: str
    bound: int
    dims: list[int]
    labels: list[list[str]]
    products: list[list[JsonScalar]]


class ResolutionDoc(BaseModel):
    """Pacote JSON de uma resolução (termos, diferenciais, certificados)."""
    version: int = RESOLUTION_BUNDLE_VERSION
    kind: ResolutionKind
    base: AlgebraDoc
    ranks: list[int]
    generator_degrees: list[list[int]]
    differentials: list[list[list[list[JsonScalar]]]]
    augmentation: list[list[list[JsonScalar]]]
    small: bool
    target: str


class LESNode(BaseModel):
    """Nó de uma sucessão exata longa com o teste de exatidão local."""
    name: str
    degree: int
    dim: int
    rank_in: int
    rank_out: int
    exact: bool


class LESMap(BaseModel):
    """Aplicação entre nós consecutivos (posto)."""
    name: str
    source: str
    target: str
    rank: int


class LESRecord(BaseModel):
    """Sucessão exata longa materializada até n_max."""
    label: str
    nodes: list[LESNode]
    maps: list[LESMap]
    exact: bool


class DecompRow(BaseModel):
    """Linha da decomposição aditiva de HH^n(Λ*Γ)."""
    degree: int
    parts: dict[str, int]
    total: int
    brute_force: int
    ok: bool


class DecompRecord(BaseModel):
    """Decomposição aditiva em todos os graus até n_max."""
    rows: list[DecompRow]
    ok: bool


class CheckReport(BaseModel):
    """Relatório de uma verificação: 'pass' só quando todas as cláusulas se verificam."""
    model_config = ConfigDict(populate_by_name=True)

    check: str
    params: dict[str, Any] = Field(default_factory=dict)
    tables: dict[str, Any] = Field(default_factory=dict)
    passed: bool = Field(default=True, alias="pass")
    status: str = "ok"
    heuristic: bool = False
    clauses: dict[str, bool] = Field(default_factory=dict)
    witnesses: list[dict[str, Any]] = Field(default_factory=list)
    timing_seconds: float | None = None
    cache: str | None = None

    def require(self, clause: str, ok: bool, **witness: Any) -> bool:
        ok = bool(ok)
        self.clauses[clause] = self.clauses.get(clause, True) and ok
        if not ok:
            self.passed = False
            self.witnesses.append({"clause": clause, **witness})
        return ok

    def fail_hypotheses(self, reason: str, **witness: Any) -> None:
        self.passed = False
        self.status = "hypotheses not met"
        self.witnesses.append({"clause": "hypotheses", "reason": reason, **witness})

    def absorb(self, prefix: str, other: "CheckReport") -> None:
        """Incorpora as cláusulas de um sub-relatório."""
        for clause, ok in other.clauses.items():
            self.clauses[f"{prefix}.{clause}"] = ok
        if not other.passed:
            self.passed = False
        self.witnesses.extend({"from": prefix, **w} for w in other.witnesses)
        if other.status != "ok" and self.status == "ok":
            self.status = other.status

    def payload(self) -> dict[str, Any]:
        """Conteúdo reprodutível (sem tempos nem proveniência da cache)."""
        return self.model_dump(mode="json", by_alias=True, exclude={"timing_seconds", "cache"})

    def to_json(self) -> dict[str, Any]:
        return self.model_dump(mode="json", by_alias=True)
