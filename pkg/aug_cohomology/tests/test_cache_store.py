# --- tests/test_cache_store.py ---

import asyncio
import gc
from contextlib import asynccontextmanager
from unittest.mock import AsyncMock, patch

import pytest

from aug_cohomology.core import cache_store
from aug_cohomology.core.cache_store import (
    FileCacheStore,
    NullCacheStore,
    RedisCacheStore,
    cached,
    get_cache_store,
    make_cache_key,
)


def test_cache_key_is_canonical():
    """Testa que a ordem das chaves não conta e que n_max muda a chave."""
    doc = {"basis": ["1", "x"], "field": {"char": 0}}
    k1 = make_cache_key("ext", {"n_max": 3, "field": "QQ"}, [doc])
    k2 = make_cache_key("ext", {"field": "QQ", "n_max": 3}, [doc])
    k3 = make_cache_key("ext", {"field": "QQ", "n_max": 4}, [doc])
    assert k1 == k2
    assert k1 != k3
    assert k1 != make_cache_key("hh", {"n_max": 3, "field": "QQ"}, [doc])
    assert len(k1) == 64


@pytest.mark.asyncio
async def test_file_cache_miss_then_hit(tmp_path):
    """Testa que o produtor corre uma só vez e que o acerto devolve o mesmo valor."""
    store = FileCacheStore(tmp_path)
    calls = []

    def producer():
        calls.append(1)
        return {"dims": [1, 1, 1], "check": "ext"}

    key = make_cache_key("ext", {"n_max": 2})
    first, provenance = await cached(store, key, producer)
    assert provenance == "miss"
    second, provenance = await cached(store, key, producer)
    assert provenance == "hit"
    assert first == second
    assert len(calls) == 1
    assert (tmp_path / f"{key}.json").exists()


@pytest.mark.asyncio
async def test_concurrent_calls_share_one_computation(tmp_path):
    """Testa duas chamadas simultâneas com a mesma chave: um só cálculo e nenhum lock retido no fim."""
    store = FileCacheStore(tmp_path)
    calls = []

    def producer():
        calls.append(1)
        return {"dims": [1, 2, 4]}

    key = make_cache_key("main-theo", {"n_max": 2})
    results = await asyncio.gather(cached(store, key, producer), cached(store, key, producer))
    assert sorted(provenance for _, provenance in results) == ["hit", "miss"]
    assert len(calls) == 1
    gc.collect()
    assert len(cache_store._locks) == 0


@pytest.mark.asyncio
async def test_corrupt_entry_is_recomputed(tmp_path):
    """Testa que uma entrada corrompida é ignorada com aviso e reescrita."""
    store = FileCacheStore(tmp_path)
    key = make_cache_key("hh", {"n_max": 1})
    (tmp_path / f"{key}.json").write_text("{not json", encoding="utf-8")
    assert await store.get(key) is None

    value, provenance = await cached(store, key, lambda: {"dims": [2, 1]})
    assert provenance == "miss"
    assert value == {"dims": [2, 1]}
    assert await store.get(key) == {"dims": [2, 1]}


@pytest.mark.asyncio
async def test_entry_with_foreign_key_is_rejected(tmp_path):
    """Testa que uma entrada guardada sob outra chave não é aceite."""
    store = FileCacheStore(tmp_path)
    key, other = make_cache_key("ext", {"n_max": 1}), make_cache_key("ext", {"n_max": 2})
    await store.set(other, {"dims": [1]})
    (tmp_path / f"{key}.json").write_text((tmp_path / f"{other}.json").read_text(encoding="utf-8"),
                                          encoding="utf-8")
    assert await store.get(key) is None


@pytest.mark.asyncio
async def test_null_store_never_hits():
    """Testa --no-cache: proveniência 'off' em todas as chamadas."""
    store = NullCacheStore()
    key = make_cache_key("ext", {})
    for _ in range(2):
        value, provenance = await cached(store, key, lambda: {"ok": True})
        assert provenance == "off"
        assert value == {"ok": True}


def test_factory_builds_requested_backend(tmp_path):
    """Testa a fábrica com backend explícito (sem tocar no singleton)."""
    assert isinstance(get_cache_store("none"), NullCacheStore)
    assert isinstance(get_cache_store("file"), FileCacheStore)
    assert isinstance(get_cache_store("redis"), RedisCacheStore)
    with pytest.raises(ValueError):
        get_cache_store("memcached")


@pytest.fixture
def fake_redis():
    """Cliente Redis simulado com um hash em memória."""
    storage: dict[str, str] = {}
    client = AsyncMock()
    client.hget.side_effect = lambda namespace, key: storage.get(key)
    client.hset.side_effect = lambda namespace, key, raw: storage.__setitem__(key, raw)
    client.hdel.side_effect = lambda namespace, key: storage.pop(key, None)

    @asynccontextmanager
    async def connection():
        yield client

    with patch("aug_cohomology.core.redis_client.get_redis_connection", connection):
        yield client, storage


@pytest.mark.asyncio
async def test_redis_store_round_trip(fake_redis):
    """Testa get/set/delete no hash Redis com o cliente simulado."""
    client, storage = fake_redis
    store = RedisCacheStore(namespace="test:cache")
    key = make_cache_key("ext", {"n_max": 3})

    assert await store.get(key) is None
    value, provenance = await cached(store, key, lambda: {"dims": [1, 2]})
    assert provenance == "miss"
    assert key in storage
    client.hset.assert_awaited_once()
    assert client.hset.await_args.args[0] == "test:cache"

    value, provenance = await cached(store, key, lambda: {"dims": [9]})
    assert provenance == "hit"
    assert value == {"dims": [1, 2]}

    await store.delete(key)
    assert key not in storage


@pytest.mark.asyncio
async def test_redis_errors_do_not_propagate(fake_redis):
    """Testa que uma falha do Redis é registada e o valor é recalculado."""
    client, _ = fake_redis
    client.hget.side_effect = RuntimeError("ligação perdida")
    client.hset.side_effect = RuntimeError("ligação perdida")
    store = RedisCacheStore()
    value, provenance = await cached(store, make_cache_key("hh", {}), lambda: {"dims": [2]})
    assert value == {"dims": [2]}
    assert provenance == "miss"
