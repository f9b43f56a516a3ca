from __future__ import annotations

from io import StringIO
from pathlib import Path
from types import ModuleType
from typing import TYPE_CHECKING, cast, final

from pytest import FixtureRequest, Function, fixture
from robot import run as run_robot

from frobpair._internal.algebra.field import PrimeField
from frobpair._internal.algebra.parser import parse_poly
from frobpair._internal.algebra.poly import VarContext

if TYPE_CHECKING:
    from frobpair._internal.algebra.poly import MultiPoly

# needed for fixtures that depend on other fixtures
# pylint:disable=redefined-outer-name


@final
class Ring:
    """shorthand for building polynomials in tests: `Ring(5, "x,y")("x^2 + y")`"""

    def __init__(self, p: int, variables: str) -> None:
        self.field = PrimeField(p)
        self.context = VarContext.from_text(variables)

    @property
    def p(self) -> int:
        return self.field.p

    def __call__(self, text: str) -> MultiPoly:
        return parse_poly(text, self.context, self.field)


@fixture
def robot_suite(request: FixtureRequest) -> Path:
    """the suite located at `tests/fixtures/[test file]/[test name].robot`, so robot tests can be
    written as real files instead of strings"""
    test = cast(Function, request.node)
    test_file = Path(cast(str, cast(ModuleType, test.module).__file__))
    suite = Path(__file__).parent / "fixtures" / test_file.stem / f"{test.originalname}.robot"
    if not suite.exists():
        raise Exception(f"no robot suite found for {test.originalname} at {suite}")
    return suite


@final
class RobotRun:
    def __init__(self, exit_code: int, output: str) -> None:
        self.exit_code = exit_code
        """the number of failed robot tests, capped at 250"""
        self.output = output


def run_suite(suite: Path, output_dir: Path) -> RobotRun:
    stdout = StringIO()
    exit_code = cast(
        int,
        run_robot(
            str(suite),
            outputdir=str(output_dir),
            output="NONE",
            log="NONE",
            report="NONE",
            stdout=stdout,
            stderr=stdout,
        ),
    )
    return RobotRun(exit_code, stdout.getvalue())
