# --- aug_cohomology/harness/cli.py ---

"""
Linha de comandos: `ext`, `hh`, `product`, `coproduct`, `check <nome>`,
`examples` e `report-all`. Os relatórios JSON vão para stdout (ou --out) e os
logs para stderr. Código de saída 0 sse todas as verificações invocadas passam.
"""

import argparse
import asyncio
import json
import logging
import sys
import time
from pathlib import Path
from typing import Any, Callable

from aug_cohomology.algebras.constructions import coproduct, product
from aug_cohomology.cohomology.ext import ext_groups, ext_ring
from aug_cohomology.cohomology.hochschild import phi_k
from aug_cohomology.core import redis_client
from aug_cohomology.core.cache_store import (
    AbstractCacheStore,
    FileCacheStore,
    RedisCacheStore,
    cached,
    get_cache_store,
    make_cache_key,
)
from aug_cohomology.core.errors import (
    AxiomError,
    CutoffTooSmall,
    EngineError,
    FieldMismatch,
    FieldRefused,
    InhomogeneousRelation,
    UnknownCheck,
    UnknownExample,
)
from aug_cohomology.core.scalars import FieldSpec
from aug_cohomology.core.types import (
    EXIT_BAD_ALGEBRA,
    EXIT_CHECK_FAILED,
    EXIT_CUTOFF_TOO_SMALL,
    EXIT_FIELD_REFUSED,
    EXIT_INTERNAL,
    EXIT_OK,
    EXIT_UNKNOWN_CHECK,
    EXIT_USAGE,
    CacheBackend,
    CheckName,
    CheckReport,
    CoproductGrading,
)
from aug_cohomology.harness.base_check import BaseCheck, CheckInputs
from aug_cohomology.harness.checks import CHECKS, get_check
from aug_cohomology.harness.registry import EXAMPLES, resolve_algebra
from aug_cohomology.product_cohomology.decomposition import decompose
from aug_cohomology.utils.config import settings
from aug_cohomology.utils.logging_config import setup_logging

logger = logging.getLogger("aug_cohomology.cli")

# Ordem importa: subclasses antes de EngineError.
EXIT_CODES: list[tuple[type[Exception], int]] = [
    (UnknownCheck, EXIT_UNKNOWN_CHECK),
    (UnknownExample, EXIT_UNKNOWN_CHECK),
    (AxiomError, EXIT_BAD_ALGEBRA),
    (InhomogeneousRelation, EXIT_BAD_ALGEBRA),
    (CutoffTooSmall, EXIT_CUTOFF_TOO_SMALL),
    (FieldRefused, EXIT_FIELD_REFUSED),
    (FieldMismatch, EXIT_USAGE),
]


def exit_code_for(error: Exception) -> int:
    for cls, code in EXIT_CODES:
        if isinstance(error, cls):
            return code
    return EXIT_INTERNAL


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--nmax", type=int, default=settings.DEFAULT_NMAX)
    common.add_argument("--cutoff", type=int, default=None)
    common.add_argument("--field", type=int, default=settings.DEFAULT_FIELD_CHAR,
                        help="característica: 0 para ℚ ou um primo p")
    common.add_argument("--out", type=Path, default=None)
    common.add_argument("--no-cache", action="store_true")

    parser = argparse.ArgumentParser(prog="aug_cohomology",
                                     description="Cohomologia de álgebras aumentadas: Ext, HH e produtos.")
    sub = parser.add_subparsers(dest="command", required=True)

    single = sub.add_parser("ext", parents=[common], help="E(Λ) = Ext_Λ(k, k) e o seu anel")
    single.add_argument("--algebra", required=True)
    single = sub.add_parser("hh", parents=[common], help="HH(Λ), φ_k e iHH")
    single.add_argument("--algebra", required=True)
    for name, text in (("product", "Λ*Γ: dimensões e decomposição de HH"),
                       ("coproduct", "Λ⊔Γ truncado: dimensões e E nos graus de confiança")):
        pair = sub.add_parser(name, parents=[common], help=text)
        pair.add_argument("--left", required=True)
        pair.add_argument("--right", required=True)

    check = sub.add_parser("check", parents=[common], help="uma verificação pelo nome")
    check.add_argument("name")
    check.add_argument("--algebra")
    check.add_argument("--left")
    check.add_argument("--right")

    sub.add_parser("examples", parents=[common], help="lista o registo de exemplos e as verificações")
    sub.add_parser("report-all", parents=[common], help="todas as verificações nas instâncias por omissão")
    return parser


# --- Operações (fora das verificações) ---

def _ext_report(inputs: CheckInputs) -> CheckReport:
    a = inputs.algebra
    table = ext_ring(a, inputs.n_max)
    report = CheckReport(check="ext", params={"algebra": a.name})
    report.tables.update({"dims": table.dims, "ring": table.to_doc().model_dump(mode="json")})
    report.absorb("associative", table.check_associative())
    return report


def _hh_report(inputs: CheckInputs) -> CheckReport:
    a = inputs.algebra
    phi = phi_k(a, inputs.n_max)
    report = CheckReport(check="hh", params={"algebra": a.name})
    report.tables.update({
        "dims": phi.hh_table.dims, "phi_ranks": phi.image_dims(), "ihh": phi.ihh_dims(),
        "ring": phi.hh_table.to_doc().model_dump(mode="json"),
    })
    report.absorb("graded_commutative", phi.hh_table.check_graded_commutative())
    report.require("les_exact", phi.les.exact)
    return report


def _product_report(inputs: CheckInputs) -> CheckReport:
    decomp = decompose(inputs.left, inputs.right, inputs.n_max)
    c = product(inputs.left, inputs.right).algebra
    report = CheckReport(check="product", params={"left": inputs.left.name, "right": inputs.right.name})
    report.tables.update({"dim": c.dim, "ext": ext_groups(c, inputs.n_max),
                          "hh": decomp.les.hh_dims(), "decomposition": decomp.report.tables["rows"]})
    report.absorb("decomposition", decomp.report)
    return report


def _coproduct_report(inputs: CheckInputs) -> CheckReport:
    a, b = inputs.left, inputs.right
    grading = CoproductGrading.WEIGHT if a.weights is not None and b.weights is not None else CoproductGrading.LENGTH
    copro = coproduct(a, b, inputs.cutoff, grading, guard_band=settings.COPRODUCT_GUARD_BAND)
    alg = copro.algebra
    report = CheckReport(check="coproduct", heuristic=True, params={"left": a.name, "right": b.name})
    report.tables.update({"grading": grading.value, "dims": alg.dims(), "trusted_degree": alg.trusted_degree,
                          "ext": ext_groups(alg, inputs.n_max)})
    return report


OPERATIONS: dict[str, Callable[[CheckInputs], CheckReport]] = {
    "ext": _ext_report,
    "hh": _hh_report,
    "product": _product_report,
    "coproduct": _coproduct_report,
}


# --- Execução com cache ---

class UsageError(Exception):
    """Argumentos em falta ou inválidos (código de saída 2)."""


async def _run_cached(store: AbstractCacheStore, operation: str, inputs: CheckInputs,
                      producer: Callable[[], CheckReport]) -> CheckReport:
    key = make_cache_key(operation, inputs.params(), inputs.documents())
    start = time.perf_counter()
    value, provenance = await cached(store, key, lambda: producer().payload())
    report = CheckReport.model_validate(value)
    report.cache = provenance
    report.timing_seconds = round(time.perf_counter() - start, 3)
    return report


def _inputs(args: Any, field: FieldSpec, requires: tuple[str, ...], overrides: dict[str, Any] | None = None,
            validate: bool = True) -> CheckInputs:
    values = {"algebra": getattr(args, "algebra", None), "left": getattr(args, "left", None),
              "right": getattr(args, "right", None)}
    overrides = overrides or {}
    values.update({k: v for k, v in overrides.items() if k in values})
    missing = [r for r in requires if not values.get(r)]
    if missing:
        raise UsageError(f"Faltam argumentos: {', '.join('--' + m for m in missing)}")
    specs = {k: values[k] for k in requires}
    resolved = {k: resolve_algebra(values[k], field, validate=validate) for k in requires}
    return CheckInputs(field=field, n_max=overrides.get("n_max", args.nmax),
                       cutoff=overrides.get("cutoff", args.cutoff), specs=specs, **resolved)


async def _check_once(check: BaseCheck, store: AbstractCacheStore, inputs: CheckInputs) -> CheckReport:
    if inputs.cutoff is None and any(r in ("left", "right") for r in check.requires):
        inputs.cutoff = check.default_cutoff(inputs.n_max)
    return await _run_cached(store, check.check_name.value, inputs, lambda: check.execute(inputs))


async def _report_all(args: Any, field: FieldSpec, store: AbstractCacheStore) -> list[CheckReport]:
    """Todas as verificações em paralelo (threads), limitadas por REPORT_WORKERS."""
    semaphore = asyncio.Semaphore(settings.REPORT_WORKERS)

    async def one(name: CheckName, instance: dict[str, Any]) -> CheckReport:
        async with semaphore:
            check = CHECKS[name]()
            if check.refuses(field):
                report = CheckReport(check=name.value, params={"field": field.name, **instance})
                report.status = "refused"
                return report
            inputs = await asyncio.to_thread(_inputs, args, field, check.requires, instance,
                                             name is not CheckName.AXIOMS)
            return await _check_once(check, store, inputs)

    jobs = [one(name, instance) for name in sorted(CHECKS, key=lambda c: c.value)
            for instance in CHECKS[name].default_instances]
    reports = await asyncio.gather(*jobs)
    return sorted(reports, key=lambda r: (r.check, json.dumps(r.params, sort_keys=True, default=str)))


def _emit(payload: Any, out: Path | None) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False)
    if out is not None:
        out.write_text(text + "\n", encoding="utf-8")
        logger.info(f"Relatório escrito em {out}.")
    else:
        sys.stdout.write(text + "\n")


async def run_cli(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    setup_logging(settings.LOG_LEVEL, stream=sys.stderr)

    try:
        field = FieldSpec(args.field)
        store = get_cache_store(CacheBackend.NONE.value if args.no_cache else None)
        if isinstance(store, RedisCacheStore) and not await redis_client.check_redis_connection():
            logger.warning("A cache Redis não responde; a usar a cache em ficheiros.")
            store = FileCacheStore()

        if args.command == "examples":
            _emit({"examples": EXAMPLES, "checks": sorted(c.value for c in CHECKS)}, args.out)
            return EXIT_OK

        if args.command == "report-all":
            reports = await _report_all(args, field, store)
            _emit([r.to_json() for r in reports], args.out)
            return EXIT_OK if all(r.passed or r.status == "refused" for r in reports) else EXIT_CHECK_FAILED

        if args.command == "check":
            check = get_check(args.name)
            if check.refuses(field):
                raise FieldRefused(f"'{check.name}' exige característica diferente de 2.")
            inputs = _inputs(args, field, check.requires, validate=check.check_name is not CheckName.AXIOMS)
            report = await _check_once(check, store, inputs)
        else:
            requires = ("algebra",) if args.command in ("ext", "hh") else ("left", "right")
            inputs = _inputs(args, field, requires)
            if args.command == "coproduct" and inputs.cutoff is None:
                inputs.cutoff = 2 * inputs.n_max + settings.COPRODUCT_GUARD_BAND
            report = await _run_cached(store, args.command, inputs, lambda: OPERATIONS[args.command](inputs))
        _emit(report.to_json(), args.out)
        return EXIT_OK if report.passed else EXIT_CHECK_FAILED

    except UsageError as e:
        logger.error(str(e))
        return EXIT_USAGE
    except EngineError as e:
        code = exit_code_for(e)
        if code == EXIT_INTERNAL:
            logger.critical(f"Erro inesperado do motor: {e}", exc_info=True)
        else:
            logger.error(f"{type(e).__name__}: {e}")
        return code
    except Exception as e:
        logger.critical(f"Erro interno: {e}", exc_info=True)
        return EXIT_INTERNAL
    finally:
        await redis_client.close_redis_pool()


def main(argv: list[str] | None = None) -> int:
    return asyncio.run(run_cli(argv))
