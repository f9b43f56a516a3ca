from __future__ import annotations

from typing import TYPE_CHECKING

from tests.conftest import run_suite

if TYPE_CHECKING:
    from pathlib import Path


def test_level_keywords(robot_suite: Path, tmp_path: Path):
    result = run_suite(robot_suite, tmp_path)
    assert result.exit_code == 0, result.output


def test_curve_keywords(robot_suite: Path, tmp_path: Path):
    result = run_suite(robot_suite, tmp_path)
    assert result.exit_code == 0, result.output


def test_failing_keywords(robot_suite: Path, tmp_path: Path):
    result = run_suite(robot_suite, tmp_path)
    assert result.exit_code == 3, result.output
    assert "level: expected 1, got 2" in result.output
    assert "p-rank: expected 2, got 0" in result.output
    assert "y^2 = x^5 + 1 over F_11 is ordinary" in result.output
