"""The ``ufmt1`` coefficient file: a header line, then ``re im`` per line,
index 0 first."""
from __future__ import annotations

from pathlib import Path

import numpy as np

from .series import CoefficientSeries

HEADER = "ufmt1"


class FormatError(ValueError):
    def __init__(self, path, lineno, msg):
        super().__init__(f"{path}:{lineno}: {msg}")
        self.lineno = lineno


def dumps_coeffs(coeffs) -> str:
    lines = [HEADER]
    for c in np.asarray(coeffs, dtype=np.complex128):
        lines.append("%.17g %.17g" % (c.real, c.imag))
    return "\n".join(lines) + "\n"


def write_coeffs(path, coeffs) -> None:
    Path(path).write_text(dumps_coeffs(coeffs))


def loads_coeffs(text: str, path="<string>") -> CoefficientSeries:
    lines = text.splitlines()
    if not lines or lines[0].strip() != HEADER:
        raise FormatError(path, 1, f"expected header {HEADER!r}")
    out = []
    for lineno, line in enumerate(lines[1:], start=2):
        s = line.strip()
        if not s:
            continue
        parts = s.split()
        if len(parts) != 2:
            raise FormatError(path, lineno, f"expected 're im', got {s!r}")
        try:
            out.append(complex(float(parts[0]), float(parts[1])))
        except ValueError:
            raise FormatError(path, lineno, f"not a number pair: {s!r}") from None
    if not out:
        raise FormatError(path, len(lines), "no coefficients")
    return CoefficientSeries(out)


def read_coeffs(path) -> CoefficientSeries:
    return loads_coeffs(Path(path).read_text(), str(path))
