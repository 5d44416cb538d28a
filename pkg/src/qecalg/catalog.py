"""Built-in code catalog shipped as data files in the code-file format."""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .code_analysis import CodeSpec
from .fileio import read_code

CATALOG = {
    "513": "five_qubit_513.code",
    "422": "four_two_two_422.code",
    "913shor": "shor_913.code",
    "311qutrit": "qutrit_repetition_311.code",
}


def names() -> list[str]:
    return sorted(CATALOG)


def _traversable(name: str):
    if name not in CATALOG:
        raise KeyError(f"unknown catalog code {name!r}; available: {names()}")
    return resources.files("qecalg").joinpath("codes", CATALOG[name])


def read_bytes(name: str) -> bytes:
    return _traversable(name).read_bytes()


def load(name: str) -> CodeSpec:
    with resources.as_file(_traversable(name)) as path:
        return read_code(path)


def resolve(source: str) -> tuple[str, "CodeSpec", bytes]:
    """Resolve a CLI code argument: catalog name first, then file path.

    Returns (display name, code, raw bytes for digesting).
    """
    if source in CATALOG:
        return f"catalog:{source}", load(source), read_bytes(source)
    path = Path(source)
    return str(path), read_code(path), path.read_bytes()
