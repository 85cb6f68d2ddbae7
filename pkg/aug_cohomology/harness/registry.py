# --- aug_cohomology/harness/registry.py ---

"""
Registo de exemplos e carregamento de álgebras a partir da linha de comandos.

Sintaxe: `trunc-poly:r[:var]`, `rad-square-zero:n`, `gf3-triple`, `product(X,Y)`,
`coproduct(X,Y,D)`, com o prefixo `registry:` opcional; tudo o resto é o caminho
de um ficheiro JSON (álgebra por constantes de estrutura ou apresentação).
"""

import json
import logging
from pathlib import Path

from aug_cohomology.algebras.algebra import Algebra, require_axioms
from aug_cohomology.algebras.constructions import coproduct, product
from aug_cohomology.algebras.graded import GradedAlgebra, Presentation, from_presentation
from aug_cohomology.core.errors import AxiomError, UnknownExample
from aug_cohomology.core.scalars import FieldSpec
from aug_cohomology.core.types import CoproductGrading

logger = logging.getLogger(__name__)

REGISTRY_PREFIX = "registry:"

EXAMPLES = {
    "trunc-poly:r[:var]": "k[x]/x^r, graduada com x em grau 1",
    "rad-square-zero:n": "n geradores de grau 1 com todos os produtos nulos",
    "gf3-triple": "k[a]/a³ * k[b]/b² * k[c]/c²",
    "product(X,Y)": "produto fibrado X*Y",
    "coproduct(X,Y,D)": "coproduto X⊔Y truncado no grau D",
}


def trunc_poly(field: FieldSpec, r: int, var: str = "x") -> GradedAlgebra:
    if r < 2:
        raise UnknownExample(f"trunc-poly exige r ≥ 2 (recebido {r}).")
    p = Presentation(field, [(var, 1)], [[(1, (var,) * r)]], cutoff=r)
    return from_presentation(p, name=f"k[{var}]/{var}^{r}")


def rad_square_zero(field: FieldSpec, n: int) -> GradedAlgebra:
    if n < 1:
        raise UnknownExample(f"rad-square-zero exige n ≥ 1 (recebido {n}).")
    names = [f"x{i}" for i in range(1, n + 1)]
    relations = [[(1, (u, v))] for u in names for v in names]
    p = Presentation(field, [(g, 1) for g in names], relations, cutoff=2)
    return from_presentation(p, name=f"rad²=0({n})")


def gf3_triple(field: FieldSpec) -> Algebra:
    inner = product(trunc_poly(field, 3, "a"), trunc_poly(field, 2, "b")).algebra
    return product(inner, trunc_poly(field, 2, "c"), name="k[a]/a³*k[b]/b²*k[c]/c²").algebra


def _split_arguments(body: str) -> list[str]:
    """Separa por vírgulas de nível zero (os argumentos podem ter parênteses)."""
    parts, depth, current = [], 0, []
    for ch in body:
        if ch == "," and depth == 0:
            parts.append("".join(current).strip())
            current = []
            continue
        depth += (ch == "(") - (ch == ")")
        if depth < 0:
            raise UnknownExample(f"Parênteses desequilibrados em '{body}'.")
        current.append(ch)
    if depth != 0:
        raise UnknownExample(f"Parênteses desequilibrados em '{body}'.")
    parts.append("".join(current).strip())
    return parts


def _int_argument(raw: str, what: str) -> int:
    try:
        return int(raw)
    except ValueError:
        raise UnknownExample(f"{what} tem de ser inteiro (recebido '{raw}').") from None


def build_example(spec: str, field: FieldSpec) -> Algebra:
    """Constrói um exemplo do registo; UnknownExample se a expressão não for reconhecida."""
    spec = spec.strip()
    if spec.startswith(REGISTRY_PREFIX):
        spec = spec[len(REGISTRY_PREFIX):]
    for combinator in ("product", "coproduct"):
        if spec.startswith(f"{combinator}(") and spec.endswith(")"):
            args = _split_arguments(spec[len(combinator) + 1:-1])
            if combinator == "product":
                if len(args) != 2:
                    raise UnknownExample(f"product(X,Y) exige dois argumentos: '{spec}'.")
                return product(build_example(args[0], field), build_example(args[1], field)).algebra
            if len(args) != 3:
                raise UnknownExample(f"coproduct(X,Y,D) exige três argumentos: '{spec}'.")
            left, right = build_example(args[0], field), build_example(args[1], field)
            grading = CoproductGrading.WEIGHT if left.weights and right.weights else CoproductGrading.LENGTH
            return coproduct(left, right, _int_argument(args[2], "D"), grading).algebra
    head, _, rest = spec.partition(":")
    args = rest.split(":") if rest else []
    if head == "trunc-poly" and 1 <= len(args) <= 2:
        return trunc_poly(field, _int_argument(args[0], "r"), *args[1:])
    if head == "rad-square-zero" and len(args) == 1:
        return rad_square_zero(field, _int_argument(args[0], "n"))
    if head == "gf3-triple" and not args:
        return gf3_triple(field)
    raise UnknownExample(f"Exemplo desconhecido: '{spec}'.")


def load_algebra_file(path: Path, field: FieldSpec | None = None) -> Algebra:
    """Constantes de estrutura (com graus opcionais) ou apresentação; AxiomError se malformado."""
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as e:
        raise AxiomError(f"Não foi possível ler a álgebra em {path}: {e}") from e
    if not isinstance(doc, dict):
        raise AxiomError(f"{path}: o documento tem de ser um objeto JSON.")
    if field is not None:
        doc.setdefault("field", {"char": field.char})
    name = path.stem
    if "generators" in doc:
        return from_presentation(Presentation.from_doc(doc), name=name)
    if doc.get("degrees") is not None and doc.get("cutoff") is not None:
        return GradedAlgebra.from_doc(doc, name=name)
    return Algebra.from_doc(doc, name=name)


def resolve_algebra(spec: str, field: FieldSpec, validate: bool = True) -> Algebra:
    """
    Exemplo do registo ou ficheiro. Com validate, verifica os axiomas e adapta a
    base (AxiomError com as testemunhas); sem validate devolve a álgebra tal como lida.
    """
    path = Path(spec)
    if not spec.startswith(REGISTRY_PREFIX) and (path.suffix == ".json" or path.is_file()):
        algebra = load_algebra_file(path, field)
    else:
        algebra = build_example(spec, field)
    logger.debug(f"Álgebra '{spec}' resolvida: {algebra.name} (dim {algebra.dim}).")
    return require_axioms(algebra) if validate else algebra


def algebra_document(algebra: Algebra) -> dict:
    """Documento canónico usado na chave da cache."""
    return algebra.to_doc().model_dump(mode="json")
