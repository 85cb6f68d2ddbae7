# --- tests/test_cli.py ---

import json
from unittest.mock import AsyncMock, patch

import pytest

from aug_cohomology.core.cache_store import FileCacheStore, RedisCacheStore
from aug_cohomology.core.errors import UnknownExample
from aug_cohomology.core.types import (
    EXIT_BAD_ALGEBRA,
    EXIT_CUTOFF_TOO_SMALL,
    EXIT_FIELD_REFUSED,
    EXIT_OK,
    EXIT_UNKNOWN_CHECK,
    EXIT_USAGE,
)
from aug_cohomology.harness.cli import main
from aug_cohomology.harness.registry import build_example

BAD_ALGEBRA = {
    "field": {"char": 0},
    "basis": ["1", "x"],
    "unit": [1, 0],
    "mul": [[0, 0, 0, 1], [0, 1, 1, 1], [1, 0, 1, 1], [1, 1, 0, 1]],
    "aug": [1, 0],
}


def _read(path):
    return json.loads(path.read_text(encoding="utf-8"))


def test_ext_command_writes_report(tmp_path):
    """Testa `ext` sobre k[x]/x³: código 0 e dimensões (1, 1, 1, 1, 1)."""
    out = tmp_path / "ext.json"
    code = main(["ext", "--algebra", "trunc-poly:3", "--nmax", "4", "--no-cache", "--out", str(out)])
    assert code == EXIT_OK
    report = _read(out)
    assert report["pass"] is True
    assert report["tables"]["dims"] == [1, 1, 1, 1, 1]
    assert report["cache"] == "off"


def test_check_command_passes_for_dual_numbers(tmp_path):
    """Testa `check main-theo` num par de álgebras do registo."""
    out = tmp_path / "main.json"
    code = main(["check", "main-theo", "--left", "trunc-poly:2:x", "--right", "trunc-poly:2:y",
                 "--nmax", "3", "--no-cache", "--out", str(out)])
    assert code == EXIT_OK
    assert _read(out)["tables"]["via_psq"] == [1, 2, 4, 8]


def test_second_run_is_served_from_cache(tmp_path):
    """Testa que a segunda execução com a mesma entrada é um acerto da cache."""
    store = FileCacheStore(tmp_path / "cache")
    out = tmp_path / "hh.json"
    argv = ["hh", "--algebra", "trunc-poly:2", "--nmax", "3", "--out", str(out)]
    with patch("aug_cohomology.harness.cli.get_cache_store", return_value=store):
        assert main(argv) == EXIT_OK
        first = _read(out)
        assert main(argv) == EXIT_OK
        second = _read(out)
    assert first["cache"] == "miss"
    assert second["cache"] == "hit"
    assert first["tables"] == second["tables"]


def test_unreachable_redis_falls_back_to_files(tmp_path):
    """Testa que, sem resposta do Redis, a execução segue com a cache em ficheiros."""
    out = tmp_path / "ext.json"
    with patch("aug_cohomology.harness.cli.get_cache_store", return_value=RedisCacheStore()), \
            patch("aug_cohomology.core.redis_client.check_redis_connection", AsyncMock(return_value=False)), \
            patch("aug_cohomology.harness.cli.FileCacheStore", lambda: FileCacheStore(tmp_path / "cache")):
        code = main(["ext", "--algebra", "trunc-poly:2", "--nmax", "2", "--out", str(out)])
    assert code == EXIT_OK
    assert _read(out)["cache"] == "miss"
    assert list((tmp_path / "cache").glob("*.json"))


def test_unknown_check_exit_code():
    assert main(["check", "no-such-check", "--no-cache"]) == EXIT_UNKNOWN_CHECK


def test_unknown_example_exit_code():
    assert main(["ext", "--algebra", "trunc-poly", "--no-cache"]) == EXIT_UNKNOWN_CHECK


def test_bad_algebra_files(tmp_path):
    """Testa ficheiro inexistente e álgebra que viola os axiomas: código 4."""
    missing = tmp_path / "missing.json"
    assert main(["ext", "--algebra", str(missing), "--no-cache"]) == EXIT_BAD_ALGEBRA

    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(BAD_ALGEBRA), encoding="utf-8")
    code = main(["check", "additive-decomp", "--left", str(bad), "--right", "trunc-poly:2", "--no-cache"])
    assert code == EXIT_BAD_ALGEBRA


def test_characteristic_two_is_refused():
    code = main(["check", "gr-centre", "--field", "2", "--left", "trunc-poly:2:x",
                 "--right", "trunc-poly:2:y", "--no-cache"])
    assert code == EXIT_FIELD_REFUSED


def test_cutoff_inside_guard_band():
    code = main(["check", "omega-lem", "--left", "trunc-poly:2:x", "--right", "trunc-poly:2:y",
                 "--cutoff", "1", "--no-cache"])
    assert code == EXIT_CUTOFF_TOO_SMALL


def test_usage_errors():
    """Testa argumentos em falta: subcomando sem --algebra e check sem --left/--right."""
    assert main(["ext"]) == EXIT_USAGE
    assert main(["check", "main-theo", "--left", "trunc-poly:2", "--no-cache"]) == EXIT_USAGE
    assert main([]) == EXIT_USAGE


def test_examples_listing(capsys):
    assert main(["examples"]) == EXIT_OK
    listing = json.loads(capsys.readouterr().out)
    assert "trunc-poly:r[:var]" in listing["examples"]
    assert "main-theo" in listing["checks"]


def test_registry_combinators(qq):
    """Testa product(X,Y) e coproduct(X,Y,D) aninhados no registo."""
    assert build_example("product(trunc-poly:2:x,trunc-poly:2:y)", qq).dim == 3
    nested = build_example("registry:product(product(trunc-poly:3:a,trunc-poly:2:b),trunc-poly:2:c)", qq)
    assert nested.dim == 5
    assert build_example("coproduct(trunc-poly:2:x,trunc-poly:2:y,4)", qq).dims() == [1, 2, 2, 2, 2]
    for bad in ("trunc-poly:1", "product(trunc-poly:2)", "coproduct(trunc-poly:2,trunc-poly:2,d)", "free(x)"):
        with pytest.raises(UnknownExample):
            build_example(bad, qq)
