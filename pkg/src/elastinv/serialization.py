"""JSON and CSV formats for tensors, harmonic tensors and binary forms.

Scalars are written as ``"p/q"`` strings in exact mode and as JSON numbers in
float mode. Complex values are ``[re, im]`` pairs.

* Elasticity tensor: ``{"voigt": 6x6}`` or ``{"components": 81 values}``
  (row-major ``C[i][j][k][l]``), or CSV with the 21 upper-triangle Voigt
  entries ``C11 C12 .. C16 C22 .. C66`` (comma or whitespace separated,
  ``#`` starts a comment).
* Binary form: ``{"degree": p, "raw": [c_0, .., c_p]}`` where ``c_j``
  multiplies ``u^(p-j) v^j``; written as ``[re, im]`` pairs, read as pairs
  or plain reals.
* Harmonic tensor: ``{"order": n, "components": [...]}`` holding the
  independent entries in :func:`~elastinv.harmonic.symmetric_index` order
  (``11 22 33 23 13 12`` for ``n = 2``).
"""
from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

import numpy as np

from .binary_forms import BinaryForm
from .errors import ModeError
from .harmonic import Poly3, poly_from_components, symmetric_components, symmetric_index
from .scalars import EXACT, GaussianRational, format_real, parse_scalar
from .tensor_core import ElasticityTensor, packed_to_tensor, tensor_to_voigt, voigt_to_tensor


class InputError(ValueError):
    """Malformed input file; the message names the offending field."""


def dump_scalar(x, mode: str, *, pair: bool = False):
    """Serialise one scalar.

    Values with a nonzero imaginary part, and every value when ``pair`` is
    set, become ``[re, im]``.
    """
    if mode == EXACT:
        g = x if isinstance(x, GaussianRational) else GaussianRational(Fraction(x))
        if g.imag == 0 and not pair:
            return format_real(g.real, mode)
        return [format_real(g.real, mode), format_real(g.imag, mode)]
    z = complex(x)
    return z.real if z.imag == 0 and not pair else [z.real, z.imag]


def _parse(token, mode, field):
    try:
        return parse_scalar(token, mode)
    except (ValueError, ZeroDivisionError, ModeError) as exc:
        raise InputError(f"{field}: {exc}") from None


def _parse_list(values, mode, field, length=None):
    if not isinstance(values, list):
        raise InputError(f"{field}: expected a list")
    if length is not None and len(values) != length:
        raise InputError(f"{field}: expected {length} entries, got {len(values)}")
    return [_parse(v, mode, f"{field}[{i}]") for i, v in enumerate(values)]


def tensor_from_json(obj, mode: str) -> ElasticityTensor:
    if not isinstance(obj, dict):
        raise InputError("top level: expected an object with 'voigt' or 'components'")
    if "voigt" in obj:
        rows = obj["voigt"]
        if not isinstance(rows, list) or len(rows) != 6:
            raise InputError("voigt: expected 6 rows")
        m = [_parse_list(r, mode, f"voigt[{a}]", 6) for a, r in enumerate(rows)]
        return voigt_to_tensor(m)
    if "components" in obj:
        vals = _parse_list(obj["components"], mode, "components", 81)
        arr = np.empty(81, dtype=object)
        arr[:] = vals
        arr = arr.reshape(3, 3, 3, 3)
        return ElasticityTensor(arr if mode == EXACT else arr.astype(np.float64))
    raise InputError("top level: expected key 'voigt' or 'components'")


def tensor_from_csv(text: str, mode: str) -> ElasticityTensor:
    tokens = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            for row in csv.reader([line.replace("\t", ",").replace(" ", ",")]):
                tokens += [t for t in row if t.strip()]
    if len(tokens) != 21:
        raise InputError(f"csv: expected 21 values, got {len(tokens)}")
    return packed_to_tensor([_parse(t, mode, f"csv value {i + 1}") for i, t in enumerate(tokens)])


def tensor_to_json(C: ElasticityTensor) -> dict:
    m = tensor_to_voigt(C)
    return {"voigt": [[dump_scalar(m[a, b], C.mode) for b in range(6)] for a in range(6)]}


def form_from_json(obj, mode: str) -> BinaryForm:
    if not isinstance(obj, dict) or "raw" not in obj:
        raise InputError("binary form: expected an object with 'degree' and 'raw'")
    raw = _parse_list(obj["raw"], mode, "raw")
    degree = obj.get("degree", len(raw) - 1)
    if not isinstance(degree, int) or degree != len(raw) - 1:
        raise InputError(f"degree: {degree!r} does not match {len(raw)} raw coefficients")
    return BinaryForm(raw)


def form_to_json(f: BinaryForm) -> dict:
    return {"degree": f.degree, "raw": [dump_scalar(c, f.mode, pair=True) for c in f.coeffs]}


def harmonic_from_json(obj, mode: str) -> Poly3:
    if not isinstance(obj, dict) or "order" not in obj or "components" not in obj:
        raise InputError("harmonic tensor: expected an object with 'order' and 'components'")
    order = obj["order"]
    if not isinstance(order, int) or order < 0:
        raise InputError(f"order: expected a nonnegative integer, got {order!r}")
    n = len(symmetric_index(order))
    return poly_from_components(order, _parse_list(obj["components"], mode, "components", n))


def harmonic_to_json(p: Poly3) -> dict:
    return {"order": p.degree,
            "components": [dump_scalar(c, p.mode) for c in symmetric_components(p)]}


def load_json_text(text: str, source: str = "input"):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{source}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def read_tensor(path: str, mode: str) -> ElasticityTensor:
    """Load a tensor from a ``.csv`` or JSON file."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if path.lower().endswith(".csv"):
        return tensor_from_csv(text, mode)
    return tensor_from_json(load_json_text(text, path), mode)


def rows_to_csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()
