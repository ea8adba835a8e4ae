import pytest

from planlearn.errors import ParseError, UnsupportedFeature
from planlearn.task import parse_sas


def test_minimal_file(minimal_sas_text):
    task = parse_sas(minimal_sas_text)
    assert len(task.variables) == 1
    assert task.variables[0].values == ("Atom off()", "Atom on()")
    assert len(task.actions) == 1
    assert task.actions[0].pre == ((0, 0),)
    assert task.actions[0].eff == ((0, 1),)
    assert task.init == (0,)
    assert task.goal == ((0, 1),)


def test_gripper_fixture(gripper_fdr):
    assert len(gripper_fdr.variables) == 4
    assert [len(v.values) for v in gripper_fdr.variables] == [2, 4, 2, 2]
    assert len(gripper_fdr.actions) == 10
    pick = next(a for a in gripper_fdr.actions if a.name == "pick ball1 rooma left")
    assert dict(pick.pre) == {0: 0, 1: 0, 2: 0}
    assert dict(pick.eff) == {1: 2, 2: 1}


def test_value_out_of_range_rejected(minimal_sas_text):
    broken = minimal_sas_text.replace("0 1\nend_goal", "0 7\nend_goal")
    with pytest.raises(ParseError):
        parse_sas(broken)


def test_wrong_version_rejected(minimal_sas_text):
    with pytest.raises(UnsupportedFeature):
        parse_sas(minimal_sas_text.replace("begin_version\n3", "begin_version\n2"))


def test_axioms_rejected(minimal_sas_text):
    assert minimal_sas_text.rstrip().endswith("0")
    broken = minimal_sas_text.rstrip()[:-1] + "1\n"
    with pytest.raises(UnsupportedFeature):
        parse_sas(broken)


def test_conditional_effects_rejected(minimal_sas_text):
    broken = minimal_sas_text.replace("0 0 0 1", "1 0 0 0 0 1")
    with pytest.raises(UnsupportedFeature):
        parse_sas(broken)


def test_truncated_file_rejected(minimal_sas_text):
    with pytest.raises(ParseError):
        parse_sas(minimal_sas_text[: len(minimal_sas_text) // 2])
