"""Loader for the shipped stability-generator tables and exact-angle strings.

File format, one generator per line::

    <case-id> <tau> <rho> <sigma> <sign> <c1> ... <c8>

Angles are ``0``, ``pi``, ``2pi/3`` or plain floats. Coefficients are plain
numbers or exact forms such as ``-3sqrt3/4`` and ``2/sqrt3``. ``#`` starts a
comment line.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

import numpy as np

from .gate import GateParams

_COEFF = re.compile(r"([+-]?)(\d*\.?\d*)(sqrt3)?(?:/(\d+\.?\d*|sqrt3))?$")
_ANGLE = re.compile(r"([+-]?)(\d*\.?\d*)\*?pi(?:/(\d+\.?\d*))?$")


class TableFormatError(ValueError):
    pass


def parse_coefficient(tok):
    m = _COEFF.match(tok.strip())
    if not m or not (m.group(2) or m.group(3)):
        raise TableFormatError("bad coefficient %r" % (tok,))
    sign, num, root, den = m.groups()
    v = float(num) if num else 1.0
    if root:
        v *= np.sqrt(3.0)
    if den:
        v /= np.sqrt(3.0) if den == "sqrt3" else float(den)
    return -v if sign == "-" else v


def parse_angle(tok):
    """Parse ``"2pi/3"``, ``"-pi/2"``, ``"pi"`` or a float string to radians."""
    tok = tok.strip().replace(" ", "")
    m = _ANGLE.match(tok)
    if m:
        sign, num, den = m.groups()
        v = np.pi * (float(num) if num else 1.0) / (float(den) if den else 1.0)
        return -v if sign == "-" else v
    try:
        return float(tok)
    except ValueError:
        raise TableFormatError("bad angle %r" % (tok,)) from None


@dataclass(frozen=True)
class TableEntry:
    case: str
    index: int  # 1-based position within its case
    params: GateParams
    sign: int
    coeffs: np.ndarray

    @property
    def name(self):
        return "%s/G%d" % (self.case, self.index)


def default_table_path():
    return resources.files("elwgate").joinpath("data/generators.txt")


def load_generator_table(path=None):
    """Parse a generator table file into :class:`TableEntry` records (file order)."""
    if path is None:
        text = default_table_path().read_text(encoding="utf-8")
    else:
        text = Path(path).read_text(encoding="utf-8")
    entries = []
    counts = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        tok = line.split()
        if len(tok) != 13:
            raise TableFormatError("line %d: expected 13 fields, got %d" % (lineno, len(tok)))
        try:
            params = GateParams(*(parse_angle(t) for t in tok[1:4]))
            sign = int(tok[4])
            coeffs = np.array([parse_coefficient(t) for t in tok[5:]])
        except (TableFormatError, ValueError) as exc:
            raise TableFormatError("line %d: %s" % (lineno, exc)) from None
        if sign not in (1, -1):
            raise TableFormatError("line %d: sign must be +1 or -1" % lineno)
        counts[tok[0]] = counts.get(tok[0], 0) + 1
        entries.append(TableEntry(tok[0], counts[tok[0]], params, sign, coeffs))
    return entries


def group_by_case(entries):
    out = {}
    for e in entries:
        out.setdefault(e.case, []).append(e)
    return out
