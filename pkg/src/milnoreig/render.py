"""Eigentable renderers and the matching JSON loader.

All three formats list eigenvalues ascending by (denominator, numerator) and
columns by cohomological degree, so output is deterministic byte for byte.
"""

from __future__ import annotations

import json
from typing import Any

from .cyclotomic import RootOfUnity
from .eigenspaces import EigenTable
from .errors import InvalidInputError

FORMATS = ("text", "json", "csv")


def _column_count(table: EigenTable) -> int:
    return max((len(dims) for _, dims in table.items()), default=1)


def render(table: EigenTable, fmt: str = "text") -> str:
    """Render a table as ``text`` (a grid like the hand-written tables),
    ``json`` (see :func:`table_to_json_dict`), or ``csv``."""
    if fmt == "text":
        return _render_text(table)
    if fmt == "json":
        return _render_json(table)
    if fmt == "csv":
        return _render_csv(table)
    raise InvalidInputError(f"unknown format {fmt!r}; pick one of {FORMATS}")


def _render_json(table: EigenTable) -> str:
    data = table_to_json_dict(table)
    entries = ",\n".join(f"    {json.dumps(entry)}" for entry in data["entries"])
    return f'{{\n  "degree": {data["degree"]},\n  "entries": [\n{entries}\n  ]\n}}'


def _render_text(table: EigenTable) -> str:
    ncols = _column_count(table)
    header = ["eta \\ j"] + [str(j) for j in range(ncols)]
    rows = [[str(eta)] + [str(dims[j]) for j in range(ncols)] for eta, dims in table.items()]
    widths = [max(len(line[i]) for line in [header] + rows) for i in range(ncols + 1)]
    lines = []
    for line in [header] + rows:
        cells = [line[0].ljust(widths[0])] + [cell.rjust(widths[i + 1]) for i, cell in enumerate(line[1:])]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines)


def _render_csv(table: EigenTable) -> str:
    ncols = _column_count(table)
    lines = ["eigenvalue," + ",".join(str(j) for j in range(ncols))]
    for eta, dims in table.items():
        lines.append(str(eta) + "," + ",".join(str(dims[j]) for j in range(ncols)))
    return "\n".join(lines)


def table_to_json_dict(table: EigenTable) -> dict[str, Any]:
    """JSON shape: ``{"degree": r, "entries": [{"eigenvalue": "k/n", "dims": [...]}]}``."""
    entries = [
        {"eigenvalue": f"{eta.numerator}/{eta.denominator}", "dims": list(dims.dims)}
        for eta, dims in table.items()
    ]
    return {"degree": table.degree, "entries": entries}


def table_from_json(source: str | dict) -> EigenTable:
    """Inverse of the ``json`` rendering; accepts the JSON text or the dict."""
    data = json.loads(source) if isinstance(source, str) else source
    try:
        degree = data["degree"]
        entries = {}
        for entry in data["entries"]:
            k, n = entry["eigenvalue"].split("/")
            entries[RootOfUnity(int(k), int(n))] = entry["dims"]
    except (KeyError, TypeError, AttributeError, ValueError) as exc:
        raise InvalidInputError(f"malformed eigentable JSON: {exc}") from exc
    return EigenTable(degree, entries)
