"""Deterministic JSON encodings for every public object.

All rational numbers are rendered as strings "num/den" (or "num" when the
denominator is 1) so that round-trips are exact; every list is emitted in a
canonical sorted order so serialized output is byte-stable.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclotomic import CycloElement
from .formal import CycSym, EisSym, FormalClass, SouleSym, WeightFunction
from .measures import GroupSpec, Measure, TorsorSpec
from .numutil import parse_rat, rat_str
from .puiseux import PuiseuxSeries
from .tsym import TSym

__all__ = [
    "cyclo_to_json",
    "cyclo_from_json",
    "series_to_json",
    "series_from_json",
    "measure_to_json",
    "measure_from_json",
    "tsym_to_json",
    "tsym_from_json",
    "formal_to_json",
    "formal_from_json",
    "psi_to_json",
    "psi_from_json",
]


def cyclo_to_json(x: CycloElement) -> dict:
    return {"M": x.M, "coeffs": [rat_str(c) for c in x.coeffs]}


def cyclo_from_json(obj: dict) -> CycloElement:
    return CycloElement.from_poly(obj["M"], [parse_rat(c) for c in obj["coeffs"]])


def series_to_json(f: PuiseuxSeries) -> dict:
    return {
        "M": f.M,
        "T": f.T,
        "terms": [
            {"n": n, "coeff": cyclo_to_json(c)}
            for n, c in sorted(f.terms.items())
        ],
    }


def series_from_json(obj: dict) -> PuiseuxSeries:
    terms = {
        int(t["n"]): cyclo_from_json(t["coeff"]) for t in obj["terms"]
    }
    return PuiseuxSeries(obj["M"], obj["T"], terms)


def _spec_to_json(spec) -> dict:
    if isinstance(spec, TorsorSpec):
        return {
            "kind": "torsor",
            "ell": spec.ell,
            "r": spec.r,
            "N": spec.N,
            "d": spec.d,
            "flavor": spec.flavor,
            "t": list(spec.t),
        }
    return {"kind": "group", "m": spec.m, "d": spec.d}


def _spec_from_json(obj: dict):
    if obj["kind"] == "torsor":
        return TorsorSpec(
            obj["ell"], obj["r"], obj["N"], obj["d"], obj["flavor"], tuple(obj["t"])
        )
    return GroupSpec(obj["m"], obj["d"])


def measure_to_json(mu: Measure) -> dict:
    return {
        "spec": _spec_to_json(mu.spec),
        "values": [
            {"x": list(x), "v": rat_str(v)}
            for x, v in sorted(mu.values.items())
        ],
    }


def measure_from_json(obj: dict) -> Measure:
    spec = _spec_from_json(obj["spec"])
    values = {tuple(row["x"]): parse_rat(row["v"]) for row in obj["values"]}
    return Measure(spec, values)


def tsym_to_json(a: TSym) -> dict:
    return {
        "d": a.d,
        "ring": a.ring,
        "components": [
            {
                "k": k,
                "terms": [
                    {"n": list(n), "c": rat_str(Fraction(c))}
                    for n, c in sorted(comp.items())
                ],
            }
            for k, comp in sorted(a.comps.items())
        ],
    }


def tsym_from_json(obj: dict) -> TSym:
    comps = {}
    for block in obj["components"]:
        comps[int(block["k"])] = {
            tuple(t["n"]): parse_rat(t["c"]) for t in block["terms"]
        }
    return TSym(obj["d"], obj["ring"], comps)


def _sym_to_json(sym) -> dict:
    if isinstance(sym, EisSym):
        return {"kind": "Eis", "k": sym.k, "N": sym.N, "t": list(sym.t)}
    if isinstance(sym, SouleSym):
        return {
            "kind": "SouleElliptic",
            "k": sym.k,
            "N": sym.N,
            "c": sym.c,
            "t": list(sym.t),
        }
    return {"kind": "CycSoule", "k": sym.k, "N": sym.N, "b": sym.b}


def _sym_from_json(obj: dict):
    kind = obj["kind"]
    if kind == "Eis":
        return EisSym(obj["k"], obj["N"], tuple(obj["t"]))
    if kind == "SouleElliptic":
        return SouleSym(obj["k"], obj["N"], obj["c"], tuple(obj["t"]))
    if kind == "CycSoule":
        return CycSym(obj["k"], obj["N"], obj["b"])
    raise ValueError(f"unknown symbol kind {kind!r}")


def _sym_sort_key(entry):
    sym = entry["sym"]
    return (
        sym["kind"],
        sym["k"],
        sym["N"],
        sym.get("t", [sym.get("b", 0), 0]),
        sym.get("c", 0),
    )


def formal_to_json(x: FormalClass) -> list:
    rows = [
        {"sym": _sym_to_json(sym), "coeff": rat_str(v)}
        for sym, v in x.coeffs.items()
    ]
    rows.sort(key=_sym_sort_key)
    return rows


def formal_from_json(rows: list) -> FormalClass:
    return FormalClass(
        {_sym_from_json(row["sym"]): parse_rat(row["coeff"]) for row in rows}
    )


def psi_to_json(psi: WeightFunction) -> dict:
    return {
        "k": psi.k,
        "N": psi.N,
        "values": [
            {"t": list(t), "v": rat_str(v)}
            for t, v in sorted(psi.values.items())
        ],
    }


def psi_from_json(obj: dict) -> WeightFunction:
    return WeightFunction(
        obj["k"],
        obj["N"],
        {tuple(row["t"]): parse_rat(row["v"]) for row in obj["values"]},
    )
