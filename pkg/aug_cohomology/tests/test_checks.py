# --- tests/test_checks.py ---

import pytest

from aug_cohomology.core.errors import FieldRefused, UnknownCheck
from aug_cohomology.core.scalars import FieldSpec
from aug_cohomology.core.types import CheckName
from aug_cohomology.harness.base_check import CheckInputs
from aug_cohomology.harness.checks import CHECKS, HochProdCheck, get_check


def test_every_check_is_registered():
    assert set(CHECKS) == set(CheckName)
    for name, cls in CHECKS.items():
        assert cls.default_instances, f"{name.value} sem instâncias por omissão"


def test_get_check_by_name():
    check = get_check("main-theo")
    assert check.check_name is CheckName.MAIN_THEO
    with pytest.raises(UnknownCheck):
        get_check("main-theorem")


def test_set_parameters_updates_known_attributes():
    """Testa que parâmetros conhecidos são aplicados e os desconhecidos ignorados."""
    check = HochProdCheck()
    check.set_parameters({"twist_seed": 3, "samples": 10})
    assert check.twist_seed == 3
    assert check.parameters == {"twist_seed": 3}
    assert not hasattr(check, "samples")


def test_execute_fills_params_and_default_cutoff(dual_x, dual_y, qq):
    """Testa que execute preenche o corte por omissão e junta os parâmetros da execução."""
    check = get_check("omega-lem")
    inputs = CheckInputs(field=qq, n_max=3, left=dual_x, right=dual_y,
                         specs={"left": "trunc-poly:2:x", "right": "trunc-poly:2:y"})
    report = check.execute(inputs)
    assert inputs.cutoff == 4
    assert report.passed
    assert report.params["n_max"] == 3
    assert report.params["field"] == qq.name
    assert report.timing_seconds is not None


def test_execute_refuses_characteristic_two():
    gf2 = FieldSpec(2)
    check = get_check("phi-k-centre")
    assert check.refuses(gf2)
    assert not get_check("main-theo").refuses(gf2)
    with pytest.raises(FieldRefused):
        check.execute(CheckInputs(field=gf2, n_max=2))
