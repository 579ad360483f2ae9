"""Guardrails for import direction between ``depthkit`` subpackages."""

import re
from pathlib import Path

import pytest

_REPO_ROOT = Path(__file__).resolve().parents[1]
_PACKAGE = _REPO_ROOT / "depthkit"


def _violations(root: Path, forbidden: re.Pattern[str]) -> list[str]:
    found: list[str] = []
    paths = [root] if root.is_file() else sorted(root.rglob("*.py"))
    for path in paths:
        for i, line in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
            if forbidden.search(line):
                found.append(f"{path.relative_to(_REPO_ROOT)}:{i}:{line.strip()}")
    return found


def _imports_of(*modules: str) -> re.Pattern[str]:
    names = "|".join(modules)
    return re.compile(rf"^\s*(from\s+depthkit\.({names})(\s|\.)|import\s+depthkit\.({names})(\s|$|\.))")


@pytest.mark.parametrize(
    "package",
    ["errors.py", "utils", "geometry", "univariate", "classical", "mmad", "boundary", "datagen", "analysis"],
)
def test_library_sources_do_not_import_cli(package: str) -> None:
    violations = _violations(_PACKAGE / package, _imports_of("cli"))
    assert not violations, "library code must not import depthkit.cli:\n" + "\n".join(violations)


@pytest.mark.parametrize("package", ["utils", "geometry", "univariate", "classical"])
def test_core_sources_do_not_import_depth_or_experiments(package: str) -> None:
    violations = _violations(_PACKAGE / package, _imports_of("mmad", "boundary", "datagen", "analysis"))
    assert not violations, f"depthkit.{package} must stay below the depth layer:\n" + "\n".join(violations)


def test_depth_sources_do_not_import_analysis() -> None:
    violations: list[str] = []
    for package in ("mmad", "boundary", "datagen"):
        violations += _violations(_PACKAGE / package, _imports_of("analysis"))
    assert not violations, "depth code must not import depthkit.analysis:\n" + "\n".join(violations)


def test_errors_module_imports_nothing_from_depthkit() -> None:
    violations = _violations(_PACKAGE / "errors.py", re.compile(r"^\s*(from|import)\s+depthkit\b"))
    assert not violations, "depthkit.errors is the base of the import graph:\n" + "\n".join(violations)
