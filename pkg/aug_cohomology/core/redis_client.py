# --- aug_cohomology/core/redis_client.py ---

"""
Ligação ao Redis da cache partilhada (CACHE_BACKEND=redis): um pool global,
ligações emprestadas por context manager e retentativas com backoff exponencial.
"""

import logging
from contextlib import asynccontextmanager

import backoff
import redis.asyncio as redis
from redis.asyncio.connection import ConnectionPool
from redis.exceptions import ConnectionError as RedisConnectionError
from redis.exceptions import TimeoutError as RedisTimeoutError

from aug_cohomology.utils.config import settings

logger = logging.getLogger(__name__)

RETRYABLE_ERRORS = (RedisConnectionError, RedisTimeoutError)

_pool: ConnectionPool | None = None


def _log_retry(details):
    logger.warning(
        f"Redis: tentativa {details['tries']} de {details['target'].__name__} falhou "
        f"({details.get('exception')}); nova tentativa em {details['wait']:.1f}s."
    )


def _log_give_up(details):
    logger.error(f"Redis: desisti de {details['target'].__name__} após {details['tries']} tentativas.")


backoff_redis = backoff.on_exception(
    backoff.expo, RETRYABLE_ERRORS,
    max_tries=settings.REDIS_RETRY_MAX_TRIES, max_time=30,
    on_backoff=_log_retry, on_giveup=_log_give_up,
)


def get_redis_pool() -> ConnectionPool:
    """Pool assíncrono criado na primeira utilização."""
    global _pool
    if _pool is None:
        logger.info(f"Cache Redis em {settings.REDIS_HOST}:{settings.REDIS_PORT}/{settings.REDIS_DB}.")
        _pool = redis.ConnectionPool(
            host=settings.REDIS_HOST,
            port=settings.REDIS_PORT,
            db=settings.REDIS_DB,
            socket_connect_timeout=5,
            decode_responses=True,  # entradas da cache são JSON em utf-8
        )
    return _pool


@asynccontextmanager
async def get_redis_connection():
    """Empresta um cliente do pool e fecha-o à saída, mesmo com erro."""
    client = redis.Redis(connection_pool=get_redis_pool())
    try:
        yield client
    finally:
        await client.aclose()


async def check_redis_connection() -> bool:
    """PING ao servidor; False (com aviso) se não responder."""
    try:
        async with get_redis_connection() as r:
            await r.ping()
        return True
    except Exception as e:
        logger.warning(f"Redis indisponível em {settings.REDIS_HOST}:{settings.REDIS_PORT}: {e}")
        return False


async def close_redis_pool():
    global _pool
    if _pool is not None:
        await _pool.disconnect()
        _pool = None
