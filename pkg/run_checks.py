# --- run_checks.py ---

import asyncio
import logging
import sys

from aug_cohomology.core.types import EXIT_INTERNAL
from aug_cohomology.harness.cli import run_cli
from aug_cohomology.utils.config import settings

logger = logging.getLogger("aug_cohomology.cli")


async def main() -> int:
    """Ponto de entrada assíncrono: delega na CLI e devolve o código de saída."""
    logger.info(f"A iniciar aug_cohomology (motor v{settings.ENGINE_VERSION}, cache: {settings.CACHE_BACKEND})...")
    exit_code = EXIT_INTERNAL
    try:
        exit_code = await run_cli(sys.argv[1:])
    except Exception as e:
        logger.critical(f"Erro fatal na execução das verificações: {e}", exc_info=True)
    finally:
        logger.info(f"Execução terminada com código {exit_code}.")
    return exit_code


if __name__ == "__main__":
    try:
        sys.exit(asyncio.run(main()))
    except KeyboardInterrupt:
        logger.info("Execução interrompida manualmente.")
        sys.exit(130)
