"""Holomorphic vector bundles on diagonal Hopf manifolds."""

import json

from ._hopf import (
    ClassificationError,
    Config,
    DomainError,
    Factor,
    HopfError,
    HopfManifold,
    InvariantViolation,
    ModelInconsistency,
    ParseError,
    PreconditionError,
    UnsupportedKind,
    bisection_genus,
    cohomology,
    d_domain,
    degree,
    detect_monomial,
    filtrability,
    poisson_rank,
)
from . import _hopf

__all__ = [
    "ClassificationError", "Config", "DomainError", "Factor", "HopfError", "HopfManifold",
    "InvariantViolation", "ModelInconsistency", "ParseError", "PreconditionError",
    "UnsupportedKind", "bisection_genus", "cli", "cohomology", "cover", "d_domain", "degree",
    "detect_monomial", "filtrability", "homology", "moduli", "monopole", "poisson_rank",
    "serre", "stability",
]


def serre(X, L, Lprime, on_curve=(), off=0):
    """Bundle descriptor (dict) of 0 -> L -> E -> L' (x) I_Z -> 0."""
    return json.loads(_hopf._serre(X, L, Lprime, list(on_curve), off))


def stability(bundle, X, audit=False, cfg=None):
    """Stability verdict of a filtrable bundle descriptor on a surface."""
    args = (json.dumps(bundle), X, audit) + ((cfg,) if cfg is not None else ())
    return json.loads(_hopf._stability(*args))


def moduli(c2):
    return json.loads(_hopf._moduli(c2))


def monopole(mass, charge):
    return json.loads(_hopf._monopole(mass, charge))


def cover(X, r, branch, k=None, beta="proof"):
    return json.loads(_hopf._cover(X, r, branch, k, beta))


def homology(d):
    return json.loads(_hopf._homology(d))["H"]


def cli(*args):
    """Run the command line tool in-process: (exit code, parsed stdout or text, stderr)."""
    code, out, err = _hopf._cli([str(a) for a in args])
    try:
        out = json.loads(out)
    except ValueError:
        pass
    return code, out, err
