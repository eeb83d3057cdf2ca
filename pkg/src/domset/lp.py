"""Integer program export in CPLEX LP text format.

One binary ``x_j`` per vertex, objective ``min sum x_j``, and one covering
row ``cov_i: sum_{j in N[i]} x_j >= 1`` per vertex.
"""
from __future__ import annotations

import re

import numpy as np

from .graph import Graph

_ROW = re.compile(r"^\s*(cov_(\d+))\s*:\s*(.+?)\s*>=\s*1\s*$")
_VAR = re.compile(r"^x_(\d+)$")


def _wrap(terms, indent=" ", width=72):
    lines, cur = [], indent
    for i, t in enumerate(terms):
        piece = t if i == 0 else f" + {t}"
        if len(cur) + len(piece) > width and cur.strip():
            lines.append(cur)
            cur = "   " + piece.lstrip()
        else:
            cur += piece
    lines.append(cur)
    return lines


def write_lp(g: Graph) -> str:
    names = [f"x_{j}" for j in range(1, g.n + 1)]
    out = ["\\ minimum dominating set", f"\\ n={g.n} m={g.m}", "Minimize"]
    out.extend(_wrap(names, indent=" obj: "))
    out.append("Subject To")
    for i in range(g.n):
        cols = sorted(int(j) + 1 for j in g.closed[i])
        row = _wrap([f"x_{j}" for j in cols], indent=f" cov_{i + 1}: ")
        row[-1] += " >= 1"
        out.extend(row)
    out.append("Binary")
    out.extend(f" {name}" for name in names)
    out.append("End")
    return "\n".join(out) + "\n"


class LpFormatError(ValueError):
    pass


def read_lp(text: str):
    """Parse text emitted by :func:`write_lp` into ``(objective_vars, rows, binaries)``.

    ``rows`` maps each constraint index to the sorted variable indices in
    it. Continuation lines are joined onto the preceding statement.
    """
    section = None
    statements: dict[str, list[str]] = {"Minimize": [], "Subject To": [], "Binary": []}
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("\\"):
            continue
        if line in statements or line == "End":
            section = line
            continue
        if section not in statements:
            raise LpFormatError(f"content outside a section: {line!r}")
        if section == "Binary":
            statements[section].extend(line.split())
        elif ":" in line or not statements[section]:
            statements[section].append(line)
        else:
            statements[section][-1] += " " + line
    if section != "End":
        raise LpFormatError("missing End")

    def variables(expr):
        out = []
        for term in expr.split("+"):
            match = _VAR.match(term.strip())
            if not match:
                raise LpFormatError(f"bad term {term!r}")
            out.append(int(match.group(1)))
        return out

    if len(statements["Minimize"]) != 1:
        raise LpFormatError("expected a single objective")
    obj = statements["Minimize"][0].split(":", 1)[1]
    objective = variables(obj)
    rows = {}
    for stmt in statements["Subject To"]:
        match = _ROW.match(stmt)
        if not match:
            raise LpFormatError(f"bad constraint {stmt!r}")
        rows[int(match.group(2))] = sorted(variables(match.group(3)))
    binaries = []
    for name in statements["Binary"]:
        match = _VAR.match(name)
        if not match:
            raise LpFormatError(f"bad binary {name!r}")
        binaries.append(int(match.group(1)))
    return objective, rows, binaries


def constraint_matrix(text: str) -> np.ndarray:
    """Dense 0/1 covering matrix rebuilt from LP text (row i-1 is ``cov_i``)."""
    objective, rows, binaries = read_lp(text)
    n = len(binaries)
    if sorted(objective) != list(range(1, n + 1)) or sorted(rows) != list(range(1, n + 1)):
        raise LpFormatError("objective, rows and binaries disagree on n")
    a = np.zeros((n, n), dtype=np.int8)
    for i, cols in rows.items():
        a[i - 1, np.array(cols) - 1] = 1
    return a
