import pytest
from hypothesis import settings

from coideal_schur.scalars import GaussRational, ScalarField

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


@pytest.fixture
def rat():
    return ScalarField.rational(2, 3)


@pytest.fixture
def sym():
    return ScalarField.symbolic()


@pytest.fixture
def gauss_i():
    return ScalarField.gaussian(GaussRational(2), GaussRational(0, 1))


ACCEPTANCE = {}


def record_criterion(number: int, title: str, ok: bool) -> None:
    ACCEPTANCE[number] = (title, ok)
    print(f"criterion {number:2d} {'PASS' if ok else 'FAIL'}: {title}")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        title, ok = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:2d} {'PASS' if ok else 'FAIL'}: {title}")
