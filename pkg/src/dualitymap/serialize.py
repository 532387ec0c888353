"""JSON encodings for spaces, elements, certificates, and suite reports.

Everything is plain JSON so certificates and reports stay diffable and
auditable: vectors and value lists are arrays of numbers, space descriptors
are ``{"space": "lp", "p": ...}`` / ``{"space": "l1", "weights": [...]}`` /
``{"space": "c01"}``, piecewise-linear functions are
``{"breakpoints": [...], "values": [...]}``, and measures are
``{"atoms": [[loc, weight], ...], "density": {...} | null}``.
"""

from __future__ import annotations

import numpy as np

from .c01 import C01Space, PwlFunction, RcaMeasure, StepDensity, pwl_tent
from .coderivative import NonMembershipCertificate
from .l1 import FiniteMeasureSpace
from .lp import LpSpace

__all__ = [
    "space_to_descriptor",
    "space_from_descriptor",
    "pwl_to_json",
    "pwl_from_json",
    "measure_to_json",
    "measure_from_json",
    "encode_primal",
    "decode_primal",
    "encode_dual",
    "decode_dual",
    "certificate_to_json",
]


def space_to_descriptor(space) -> dict:
    return space.descriptor()


def space_from_descriptor(descriptor: dict):
    name = descriptor.get("space")
    if name == "lp":
        return LpSpace(float(descriptor["p"]))
    if name == "l1":
        return FiniteMeasureSpace(np.asarray(descriptor["weights"], dtype=float))
    if name == "c01":
        return C01Space()
    raise ValueError(f"unknown space descriptor: {descriptor!r}")


def pwl_to_json(f: PwlFunction) -> dict:
    return {
        "breakpoints": [float(s) for s in f.breakpoints],
        "values": [float(v) for v in f.values],
    }


def pwl_from_json(obj) -> PwlFunction:
    if isinstance(obj, PwlFunction):
        return obj
    if obj == "tent":  # convenience shorthand used by the CLI
        return pwl_tent()
    return PwlFunction(
        np.asarray(obj["breakpoints"], dtype=float),
        np.asarray(obj["values"], dtype=float),
    )


def measure_to_json(mu: RcaMeasure) -> dict:
    density = None
    if mu.density is not None:
        density = {
            "breakpoints": [float(s) for s in mu.density.breakpoints],
            "values": [float(v) for v in mu.density.values],
        }
    return {"atoms": [[float(l), float(w)] for l, w in mu.atoms], "density": density}


def measure_from_json(obj) -> RcaMeasure:
    if isinstance(obj, RcaMeasure):
        return obj
    density = None
    if obj.get("density") is not None:
        density = StepDensity(
            np.asarray(obj["density"]["breakpoints"], dtype=float),
            np.asarray(obj["density"]["values"], dtype=float),
        )
    atoms = tuple((float(l), float(w)) for l, w in obj.get("atoms", []))
    return RcaMeasure(atoms=atoms, density=density)


def encode_primal(space, x):
    if isinstance(space, C01Space):
        return pwl_to_json(x)
    return [float(v) for v in np.asarray(x, dtype=float)]


def decode_primal(space, obj):
    if isinstance(space, C01Space):
        return pwl_from_json(obj)
    return np.asarray(obj, dtype=float)


def encode_dual(space, x_star):
    if isinstance(space, C01Space):
        return measure_to_json(x_star)
    return [float(v) for v in np.asarray(x_star, dtype=float)]


def decode_dual(space, obj):
    if isinstance(space, C01Space):
        return measure_from_json(obj)
    return np.asarray(obj, dtype=float)


def certificate_to_json(cert: NonMembershipCertificate, scenario: dict | None = None) -> dict:
    """Certificate record: query echo plus the stored samples and verdict."""
    record = {
        "curve": cert.curve_id,
        "t": [float(t) for t in cert.estimate.ts],
        "quotient": [float(q) for q in cert.estimate.quotients],
        "estimated_limit": float(cert.estimate.limit),
        "settled": bool(cert.estimate.settled),
        "settle_tol": float(cert.estimate.settle_tol),
        "t0_shrunk": bool(cert.estimate.t0_shrunk),
        "claimed_bound": None if cert.claimed_bound is None else float(cert.claimed_bound),
        "cert_tol": float(cert.cert_tol),
        "verdict": cert.verdict,
    }
    if scenario is not None:
        record["scenario"] = scenario
    return record
