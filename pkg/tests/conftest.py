import pytest

from skewcodes import FrobPower, PetitAlgebra, field_make

from oracles import PolyField

SMALL_FIELDS = [(2, 1), (2, 2), (2, 3), (2, 4), (2, 5), (2, 6), (3, 1), (3, 2), (3, 3), (3, 4), (5, 1), (5, 2), (7, 1), (7, 2)]

GRID = [
    (2, 2, 1, 2),
    (2, 2, 1, 3),
    (2, 2, 1, 4),
    (3, 2, 1, 2),
    (3, 2, 1, 3),
    (3, 2, 1, 4),
    (5, 2, 1, 2),
    (5, 2, 1, 3),
    (2, 4, 2, 4),
]


@pytest.fixture(scope="session")
def F9():
    return field_make(3, 2)


@pytest.fixture(scope="session")
def F25():
    return field_make(5, 2)


@pytest.fixture(scope="session")
def F4():
    return field_make(2, 2)


def oracle_field(ctx):
    return PolyField(ctx.p, ctx.modulus)


def algebra(p, r, s, m, a):
    ctx = field_make(p, r)
    return PetitAlgebra.constacyclic(ctx, FrobPower(s, r), m, a)


ACCEPTANCE = {}


@pytest.fixture
def criterion(request):
    """Record one pass/fail line per acceptance criterion."""

    def record(number, ok, detail=""):
        ACCEPTANCE[number] = (ok, detail)
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'}" + (f" ({detail})" if detail else "")
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[number]
        terminalreporter.write_line(
            f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}" + (f"  {detail}" if detail else "")
        )
