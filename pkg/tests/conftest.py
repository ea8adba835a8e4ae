from pathlib import Path

import pytest

from planlearn.task import ground, parse_pddl, parse_sas

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def gripper_domain_text():
    return (FIXTURES / "gripper-domain.pddl").read_text()


@pytest.fixture(scope="session")
def gripper_b1_text():
    return (FIXTURES / "gripper-b1.pddl").read_text()


@pytest.fixture(scope="session")
def gripper_lifted(gripper_domain_text, gripper_b1_text):
    return parse_pddl(gripper_domain_text, gripper_b1_text)


@pytest.fixture(scope="session")
def gripper_ground(gripper_lifted):
    return ground(gripper_lifted)


@pytest.fixture(scope="session")
def gripper_fdr():
    return parse_sas((FIXTURES / "gripper-b1.sas").read_text())


@pytest.fixture(scope="session")
def minimal_sas_text():
    return (FIXTURES / "minimal.sas").read_text()
