# --- aug_cohomology/utils/config.py ---

import logging
import sys

from dotenv import load_dotenv
from pydantic_settings import BaseSettings, SettingsConfigDict

from aug_cohomology.core.scalars import is_prime
from aug_cohomology.core.types import CacheBackend

# Configura um logger específico para este módulo
logger = logging.getLogger(__name__)


class Settings(BaseSettings):
    LOG_LEVEL: str = "INFO"

    # --- Motor ---
    ENGINE_VERSION: str = "1.0.0"
    DEFAULT_FIELD_CHAR: int = 0
    DEFAULT_NMAX: int = 4
    COPRODUCT_GUARD_BAND: int = 1

    # --- Cache de Resultados ---
    CACHE_BACKEND: str = CacheBackend.FILE.value
    AUGCOH_CACHE_DIR: str = ".augcoh_cache"

    # --- Configuração Redis (cache partilhada opcional) ---
    REDIS_HOST: str = "redis"
    REDIS_PORT: int = 6379
    REDIS_DB: int = 0
    REDIS_RETRY_MAX_TRIES: int = 3

    # --- Relatórios ---
    REPORT_WORKERS: int = 4

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore"
    )


def _validate(settings_obj: Settings) -> None:
    """Valida combinações que o pydantic não consegue exprimir por campo."""
    if settings_obj.DEFAULT_FIELD_CHAR != 0 and not is_prime(settings_obj.DEFAULT_FIELD_CHAR):
        raise ValueError(f"DEFAULT_FIELD_CHAR inválido: {settings_obj.DEFAULT_FIELD_CHAR}")
    if settings_obj.DEFAULT_NMAX < 0:
        raise ValueError("DEFAULT_NMAX tem de ser não negativo.")
    if settings_obj.CACHE_BACKEND not in {b.value for b in CacheBackend}:
        raise ValueError(f"CACHE_BACKEND desconhecido: {settings_obj.CACHE_BACKEND}")
    if settings_obj.REPORT_WORKERS < 1:
        raise ValueError("REPORT_WORKERS tem de ser pelo menos 1.")


def load_config() -> Settings:
    """Orquestra o carregamento de configurações (.env + variáveis de ambiente)."""
    load_dotenv()
    settings_obj = Settings()
    _validate(settings_obj)
    logger.info(
        f"Configuração carregada com sucesso. Cache: {settings_obj.CACHE_BACKEND} "
        f"({settings_obj.AUGCOH_CACHE_DIR}), motor v{settings_obj.ENGINE_VERSION}"
    )
    return settings_obj


try:
    settings = load_config()
except ValueError as e:
    logging.critical(f"Erro fatal ao inicializar a configuração: {e}")
    sys.exit(1)
