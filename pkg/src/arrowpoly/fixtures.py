"""Bundled fixture tables and the transcription gate."""

from __future__ import annotations

from importlib import resources
from typing import Dict, List

from .arrow import arrow_normalized
from .gauss import GaussCode, parse_code, read_table
from .poly import ArrowPoly, parse_poly

__all__ = ["table_path", "load_codes", "load_expected", "gate"]


def table_path(name: str):
    return resources.files("arrowpoly") / "data" / name


def _rows(name: str):
    text = table_path(name).read_text()
    for _, key, value in read_table(text.splitlines()):
        yield key, value


def load_codes(name: str = "virtual.tsv") -> Dict[str, GaussCode]:
    return {key: parse_code(value) for key, value in _rows(name)}


def load_expected(name: str = "expected_arrow.tsv") -> Dict[str, ArrowPoly]:
    return {key: parse_poly(value) for key, value in _rows(name)}


def gate() -> Dict[str, bool]:
    """Map fixture name -> whether its computed normalized arrow polynomial
    equals the expected one.  A ``False`` entry flags the transcription."""
    codes = load_codes()
    return {name: arrow_normalized(codes[name]) == poly for name, poly in load_expected().items()}


def flagged() -> List[str]:
    return [name for name, ok in gate().items() if not ok]
