"""Plain-text matrix/vector files and the complex literal grammar.

Literal forms (no spaces inside a literal): ``<float>``, ``<float>i``,
``<float>+<float>i``, ``<float>-<float>i``. Files start with a header line
(``complex-matrix <rows> <cols>`` or ``complex-vector <dim>``) followed by
exactly the declared number of whitespace-separated literals in row-major
order; lines whose first non-blank character is ``#`` are ignored.

Writing is canonical: shortest round-trip decimals (integral values drop
the trailing ``.0``), one matrix row per line, negative zero preserved, so
``parse(write(M))`` reproduces M bit for bit.
"""

from __future__ import annotations

import math
import re
from pathlib import Path

import numpy as np

from .errors import ParseError

_FLOAT = r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"
_UNSIGNED_TAIL = r"[+-](?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"
_COMPLEX_RE = re.compile(
    rf"^(?:(?P<re_only>{_FLOAT})|(?P<im_only>{_FLOAT})i|"
    rf"(?P<re_part>{_FLOAT})(?P<im_part>{_UNSIGNED_TAIL})i)$"
)

MATRIX_HEADER = "complex-matrix"
VECTOR_HEADER = "complex-vector"


def parse_complex(token: str, where: str = "literal") -> complex:
    """Parse one complex literal; reject anything outside the grammar."""
    m = _COMPLEX_RE.match(token)
    if m is None:
        raise ParseError(f"{where}: malformed complex literal {token!r}")
    if m.group("re_only") is not None:
        z = complex(float(m.group("re_only")), 0.0)
    elif m.group("im_only") is not None:
        z = complex(0.0, float(m.group("im_only")))
    else:
        z = complex(float(m.group("re_part")), float(m.group("im_part")))
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ParseError(f"{where}: literal {token!r} overflows double precision")
    return z


def _format_float(v: float) -> str:
    if v == 0.0:
        return "-0" if math.copysign(1.0, v) < 0 else "0"
    if v.is_integer() and abs(v) < 1e16:
        return str(int(v))
    return repr(v)


def format_complex(z: complex) -> str:
    """Canonical literal: shortest round-trip decimals, bitwise invertible."""
    re_, im = z.real, z.imag
    if im == 0.0 and math.copysign(1.0, im) > 0:
        return _format_float(re_)
    if re_ == 0.0 and math.copysign(1.0, re_) > 0 and im != 0.0:
        return _format_float(im) + "i"
    sign = "-" if math.copysign(1.0, im) < 0 else "+"
    mag = -im if math.copysign(1.0, im) < 0 else im
    return f"{_format_float(re_)}{sign}{_format_float(mag)}i"


def _content_lines(text: str):
    for line in text.splitlines():
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            yield stripped


def _load(path, expected_kind: str, header_fields: int):
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as err:
        raise ParseError(f"{path}: cannot read file ({err})") from err
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError(f"{path}: empty file (missing header)")
    header = lines[0].split()
    if len(header) != header_fields or header[0] != expected_kind:
        raise ParseError(f"{path}: expected header '{expected_kind} ...', got {lines[0]!r}")
    dims = []
    for field in header[1:]:
        if not re.fullmatch(r"\d+", field) or int(field) < 1:
            raise ParseError(f"{path}: bad dimension {field!r} in header")
        dims.append(int(field))
    tokens = [tok for line in lines[1:] for tok in line.split()]
    count = math.prod(dims)
    if len(tokens) != count:
        raise ParseError(
            f"{path}: expected {count} literals after header, found {len(tokens)}"
        )
    values = [parse_complex(tok, where=str(path)) for tok in tokens]
    return dims, values


def read_matrix(path) -> np.ndarray:
    """Parse a complex-matrix file into a 2-D complex128 array."""
    (rows, cols), values = _load(path, MATRIX_HEADER, 3)
    return np.array(values, dtype=np.complex128).reshape(rows, cols)


def read_vector(path) -> np.ndarray:
    """Parse a complex-vector file into a 1-D complex128 array."""
    (dim,), values = _load(path, VECTOR_HEADER, 2)
    return np.array(values, dtype=np.complex128)


def write_matrix(path, m: np.ndarray) -> None:
    """Write a matrix in canonical form (one row per line)."""
    m = np.asarray(m, dtype=np.complex128)
    rows, cols = m.shape
    lines = [f"{MATRIX_HEADER} {rows} {cols}"]
    for i in range(rows):
        lines.append(" ".join(format_complex(complex(v)) for v in m[i]))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def write_vector(path, v: np.ndarray) -> None:
    """Write a vector in canonical form (entries on one line)."""
    v = np.asarray(v, dtype=np.complex128)
    lines = [
        f"{VECTOR_HEADER} {v.shape[0]}",
        " ".join(format_complex(complex(x)) for x in v),
    ]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")
