# --- aug_cohomology/core/cache_store.py ---

"""
Cache de resultados endereçada por conteúdo.

A chave é o sha256 do JSON canónico (operação, parâmetros, documentos de entrada,
versão do motor). Os backends nunca propagam erros: registam-nos e o valor é
recalculado.
"""

import asyncio
import hashlib
import json
import logging
import weakref
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, Callable

from aug_cohomology.core import redis_client
from aug_cohomology.core.types import CACHE_NAMESPACE, CacheBackend
from aug_cohomology.utils.config import settings

logger = logging.getLogger(__name__)

CacheValue = dict[str, Any]


def canonical_json(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def make_cache_key(operation: str, params: dict[str, Any], inputs: list[Any] | None = None) -> str:
    """sha256 determinístico de (operação, parâmetros, entradas, versão do motor)."""
    payload = {
        "operation": operation,
        "params": params,
        "inputs": inputs or [],
        "engine": settings.ENGINE_VERSION,
    }
    return hashlib.sha256(canonical_json(payload).encode("utf-8")).hexdigest()


def _entry(key: str, value: CacheValue) -> str:
    return canonical_json({"key": key, "value": value})


def _parse_entry(key: str, raw: str) -> CacheValue | None:
    """Entrada válida ou None (com aviso) se estiver corrompida."""
    try:
        doc = json.loads(raw)
        if not isinstance(doc, dict) or doc.get("key") != key or not isinstance(doc.get("value"), dict):
            raise ValueError("estrutura inesperada")
        return doc["value"]
    except ValueError as e:
        logger.warning(f"Entrada de cache corrompida ({key[:12]}…): {e}. Vai ser recalculada.")
        return None


class AbstractCacheStore(ABC):
    """Define a interface da cache de resultados."""
    name: str = "abstract"

    @abstractmethod
    async def get(self, key: str) -> CacheValue | None:
        pass

    @abstractmethod
    async def set(self, key: str, value: CacheValue):
        pass

    @abstractmethod
    async def delete(self, key: str):
        pass


# --- Implementação Local (ficheiros JSON) ---

class FileCacheStore(AbstractCacheStore):
    """Um ficheiro JSON por chave em AUGCOH_CACHE_DIR."""
    name = CacheBackend.FILE.value

    def __init__(self, root: str | Path | None = None):
        self.root = Path(root or settings.AUGCOH_CACHE_DIR)

    def _path(self, key: str) -> Path:
        return self.root / f"{key}.json"

    async def get(self, key: str) -> CacheValue | None:
        path = self._path(key)
        try:
            if not path.exists():
                logger.debug(f"Cache (ficheiro): falha para {key[:12]}…")
                return None
            raw = await asyncio.to_thread(path.read_text, encoding="utf-8")
            return _parse_entry(key, raw)
        except Exception as e:
            logger.error(f"Erro ao ler a cache em {path}: {e}", exc_info=True)
            return None

    async def set(self, key: str, value: CacheValue):
        path = self._path(key)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            await asyncio.to_thread(path.write_text, _entry(key, value), encoding="utf-8")
            logger.debug(f"Cache (ficheiro): guardado {key[:12]}…")
        except Exception as e:
            logger.error(f"Erro ao escrever a cache em {path}: {e}", exc_info=True)

    async def delete(self, key: str):
        try:
            self._path(key).unlink(missing_ok=True)
        except Exception as e:
            logger.error(f"Erro ao apagar a entrada {key[:12]}… da cache: {e}", exc_info=True)


# --- Implementação Partilhada (Redis Hashes) ---

class RedisCacheStore(AbstractCacheStore):
    """Entradas num hash Redis (CACHE_NAMESPACE), com retentativas em falhas de ligação."""
    name = CacheBackend.REDIS.value

    def __init__(self, namespace: str = CACHE_NAMESPACE):
        self.namespace = namespace

    @redis_client.backoff_redis
    async def _hget(self, key: str) -> str | None:
        async with redis_client.get_redis_connection() as r:
            return await r.hget(self.namespace, key)

    @redis_client.backoff_redis
    async def _hset(self, key: str, raw: str):
        async with redis_client.get_redis_connection() as r:
            await r.hset(self.namespace, key, raw)

    async def get(self, key: str) -> CacheValue | None:
        try:
            raw = await self._hget(key)
            if raw is None:
                logger.debug(f"Cache (Redis): falha para {key[:12]}…")
                return None
            return _parse_entry(key, raw)
        except Exception as e:
            logger.error(f"Erro ao obter {key[:12]}… do Redis: {e}", exc_info=True)
            return None

    async def set(self, key: str, value: CacheValue):
        try:
            await self._hset(key, _entry(key, value))
            logger.debug(f"Cache (Redis): guardado {key[:12]}…")
        except Exception as e:
            logger.error(f"Erro ao guardar {key[:12]}… no Redis: {e}", exc_info=True)

    async def delete(self, key: str):
        try:
            async with redis_client.get_redis_connection() as r:
                await r.hdel(self.namespace, key)
        except Exception as e:
            logger.error(f"Erro ao apagar {key[:12]}… do Redis: {e}", exc_info=True)


class NullCacheStore(AbstractCacheStore):
    """--no-cache: nunca encontra nada e não guarda nada."""
    name = CacheBackend.NONE.value

    async def get(self, key: str) -> CacheValue | None:
        return None

    async def set(self, key: str, value: CacheValue):
        return None

    async def delete(self, key: str):
        return None


# --- Fábrica (Factory) ---

_cache_store_instance: AbstractCacheStore | None = None


def get_cache_store(backend: str | None = None) -> AbstractCacheStore:
    """
    Fábrica que retorna a implementação da cache. Sem argumento usa
    settings.CACHE_BACKEND e reutiliza a instância global.
    """
    global _cache_store_instance
    if backend is not None:
        return _build(backend)
    if _cache_store_instance is None:
        _cache_store_instance = _build(settings.CACHE_BACKEND)
    return _cache_store_instance


def _build(backend: str) -> AbstractCacheStore:
    backend = CacheBackend(backend)
    if backend is CacheBackend.REDIS:
        logger.info("A usar RedisCacheStore.")
        return RedisCacheStore()
    if backend is CacheBackend.NONE:
        logger.info("Cache desativada.")
        return NullCacheStore()
    logger.info(f"A usar FileCacheStore ({settings.AUGCOH_CACHE_DIR}).")
    return FileCacheStore()


# --- Acesso serializado por chave ---

# Cada lock desaparece quando a última chamada que o usa termina
_locks: "weakref.WeakValueDictionary[tuple[int, str], asyncio.Lock]" = weakref.WeakValueDictionary()


def _lock_for(key: str) -> asyncio.Lock:
    loop_id = id(asyncio.get_running_loop())
    return _locks.setdefault((loop_id, key), asyncio.Lock())


async def cached(store: AbstractCacheStore, key: str, producer: Callable[[], CacheValue]) -> tuple[CacheValue, str]:
    """
    Devolve (valor, proveniência) com proveniência "hit", "miss" ou "off". O produtor
    corre numa thread; o valor devolvido numa falha já passou pelo JSON canónico,
    para ser idêntico ao que um acerto posterior devolve.
    """
    async with _lock_for(key):
        value = await store.get(key)
        if value is not None:
            logger.info(f"Cache: acerto para {key[:12]}…")
            return value, "hit"
        fresh = await asyncio.to_thread(producer)
        value = json.loads(canonical_json(fresh))
        await store.set(key, value)
        return value, "off" if isinstance(store, NullCacheStore) else "miss"
