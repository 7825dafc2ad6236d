"""JSON encodings of the package's value types.

Floats go through ``json``'s shortest round-trip repr, so decode(encode(x))
reproduces every value bit for bit.
"""
from __future__ import annotations

import json
import sys
from pathlib import Path

import numpy as np

from .exppoly import ExpMat, ExpPoly
from .nlft_d import DeltaDistribution
from .nlft_dual import GapVector
from .nlft_e import GridMat
from .su2core import QMat


def complex_to_json(c) -> dict:
    c = complex(c)
    return {"re": float(c.real), "im": float(c.imag)}


def complex_from_json(d) -> complex:
    return complex(float(d["re"]), float(d.get("im", 0.0)))


def exppoly_to_json(p: ExpPoly) -> list:
    return [{"freq": f, "re": c.real, "im": c.imag} for f, c in p]


def exppoly_from_json(items) -> ExpPoly:
    f = [float(t["freq"]) for t in items]
    c = [complex_from_json(t) for t in items]
    order = np.argsort(f, kind="stable")
    return ExpPoly(np.asarray(f)[order], np.asarray(c, dtype=complex)[order])


def expmat_to_json(m: ExpMat, form: str | None = None) -> dict:
    out = {"a": exppoly_to_json(m.a), "b": exppoly_to_json(m.b)}
    if form is not None:
        out["form"] = form
    return out


def expmat_from_json(d) -> tuple[ExpMat, str]:
    """Returns the matrix and its form tag (``"reduced"`` when absent)."""
    return ExpMat(exppoly_from_json(d["a"]), exppoly_from_json(d["b"])), d.get("form", "reduced")


def qmat_to_json(m: QMat) -> dict:
    return {"a": complex_to_json(m.a), "b": complex_to_json(m.b)}


def qmat_from_json(d) -> QMat:
    return QMat(complex_from_json(d["a"]), complex_from_json(d["b"]))


def dist_to_json(dist: DeltaDistribution) -> dict:
    return {"poles": [{"x": x, "re": u.real, "im": u.imag} for x, u in dist.poles]}


def dist_from_json(d) -> DeltaDistribution:
    poles = d["poles"]
    return DeltaDistribution([float(p["x"]) for p in poles], [complex_from_json(p) for p in poles])


def signal_to_json(u) -> dict:
    return {"u": [complex_to_json(c) for c in np.asarray(u, dtype=complex).tolist()]}


def signal_from_json(d) -> np.ndarray:
    return np.array([complex_from_json(c) for c in d["u"]], dtype=complex)


def grid_to_json(g: GridMat) -> dict:
    return {"N": g.N, "samples": [qmat_to_json(s) for s in g.samples]}


def grid_from_json(d) -> GridMat:
    g = GridMat.from_samples(qmat_from_json(s) for s in d["samples"])
    if "N" in d and int(d["N"]) != g.N:
        raise ValueError(f"N = {d['N']} but {g.N} samples given")
    return g


def gaps_to_json(xi: GapVector, with_positions: bool = False) -> dict:
    out = {"xi": xi.xi.tolist()}
    if with_positions:
        out["x"] = xi.positions.tolist()
    return out


def gaps_from_json(d) -> GapVector:
    return GapVector([float(v) for v in d["xi"]])


def constmass_job_to_json(g: GridMat) -> dict:
    return {"M": g.N, "samples": [qmat_to_json(s) for s in g.samples]}


def constmass_job_from_json(d) -> GridMat:
    g = GridMat.from_samples(qmat_from_json(s) for s in d["samples"])
    if "M" in d and int(d["M"]) != g.N:
        raise ValueError(f"M = {d['M']} but {g.N} samples given")
    return g


def dumps(obj) -> str:
    return json.dumps(obj, indent=1)


def write_json(obj, path) -> None:
    text = dumps(obj) + "\n"
    if path is None or str(path) == "-":
        print(text, end="")
    else:
        Path(path).write_text(text)


def read_json(path):
    if path is None or str(path) == "-":
        return json.load(sys.stdin)
    return json.loads(Path(path).read_text())
