"""Verification suites shared by the CLI and the acceptance tests.

Every suite returns ``{"suite", "items", "ok"}`` where each item carries a
``key`` and ``ok`` plus whatever numbers explain the verdict.  Items are
sorted by key so reports are reproducible.
"""

from __future__ import annotations

import random
from fractions import Fraction

import numpy as np

from .cells import cell_from_content, cell_via_tableaux, is_convex, is_generic
from .group import GroupFamily
from .homotopy import (DEFAULT_GRID, HomotopyFamily, character_curves, discrete_at,
                       family_matrices, verify_decomposition, verify_decomposition_B,
                       verify_relations_on_grid)
from .rep import (build_representation, character, characters_equal, induce_classical,
                  specht_yof, verify_coxeter_relations)
from .tableaux import (FamilySpec, SkewShape, count_standard_fillings, enumerate_family,
                       partitions, skew_shapes)

SUITES = ("relations", "induction", "decomposition", "cells", "counts", "homotopy")
MAX_BASIS = 200


def _report(suite: str, items: list[dict]) -> dict:
    items = sorted(items, key=lambda it: it["key"])
    return {"suite": suite, "items": items, "ok": all(it["ok"] for it in items)}


def _signs(kind: str):
    return ("+", "-") if kind == "D" else (None,)


def _sign_tag(sign) -> str:
    return sign if sign else ""


def _shapes(n: int, shape: SkewShape | None):
    return [shape] if shape is not None else [SkewShape(lam) for lam in partitions(n)]


def family_specs(kind: str, shape: SkewShape, ms=(1, 2)) -> list[FamilySpec]:
    """Every family over ``shape``: each m, each zero variant, each sign."""
    specs = []
    for sign in _signs(kind):
        for m in ms:
            specs.append(FamilySpec(kind, shape, "m", sign, m))
        for v in ("vbar", "hbar"):
            specs.append(FamilySpec(kind, shape, v, sign))
    if kind == "D":
        specs.append(FamilySpec(kind, shape, "box"))
    return specs


def _min_n(kind: str) -> int:
    return 2 if kind == "D" else 1


def relations(kind: str, n: int, spec: FamilySpec | None = None,
              normalizations=("stochastic", "orthogonal")) -> dict:
    """Coxeter relations of every nonempty family up to rank ``n``, over
    straight shapes and connected skew shapes."""
    if spec is not None:
        specs = [spec]
    else:
        shapes = [sh for k in range(_min_n(kind), n + 1)
                  for sh in [SkewShape(lam) for lam in partitions(k)] + skew_shapes(k)]
        specs = [sp for sh in shapes for sp in family_specs(kind, sh)]
    items = []
    for sp in specs:
        for norm in normalizations:
            rep = build_representation(sp, norm)
            if rep.dim == 0 or rep.dim > MAX_BASIS:
                continue
            rel = verify_coxeter_relations(rep)
            items.append({"key": f"{sp.label()}:{norm}", "ok": rel.ok,
                          "residual": rel.worst_residual, "dim": rep.dim})
    return _report("relations", items)


def induction(kind: str, n: int, shape: SkewShape | None = None, ms=(1, 2)) -> dict:
    """Characters of ``rho^{lambda,m,+-}`` against induced Specht modules."""
    group = GroupFamily(kind, n)
    items = []
    for sh in _shapes(n, shape):
        inner = specht_yof(sh, "stochastic")
        for sign in _signs(kind):
            sub = "S0" if sign == "-" else "S1"
            induced = character(induce_classical(inner, group, sub))
            for m in ms:
                spec = FamilySpec(kind, sh, "m", sign, m)
                rep = build_representation(spec, "stochastic")
                items.append({"key": spec.label(), "ok": characters_equal(rep, induced),
                              "expected": int(induced.values[group.identity()]), "got": rep.dim})
    return _report("induction", items)


def decomposition(kind: str, n: int, shape: SkewShape | None = None, sign=None, m: int = 1) -> dict:
    items = []
    signs = [sign] if sign else _signs(kind)
    for sh in _shapes(n, shape):
        for sg in signs:
            if kind == "D":
                rep = verify_decomposition(sh, sg, m)
            else:
                rep = verify_decomposition_B(sh, m)
            items.append({"key": f"{kind}:{sh}:m={m}{_sign_tag(sg)}", "ok": rep.ok,
                          "expected": rep.rhs_dim, "got": rep.lhs_dim,
                          "parts": rep.dims})
    return _report("decomposition", items)


def counts(kind: str, n: int) -> dict:
    """``#T[lambda,m,+-] = 2^{n-1} f^lambda`` and the zero-family bijection
    (B: ``2^n f^lambda``) for every partition of every rank up to ``n``."""
    items = []
    for k in range(_min_n(kind), n + 1):
        power = 2 ** (k - 1) if kind == "D" else 2 ** k
        for lam in partitions(k):
            sh = SkewShape(lam)
            expected = power * count_standard_fillings(sh)
            for sign in _signs(kind):
                for m in (1, 2):
                    spec = FamilySpec(kind, sh, "m", sign, m)
                    got = len(enumerate_family(spec))
                    items.append({"key": spec.label(), "ok": got == expected,
                                  "expected": expected, "got": got})
                if kind == "D":
                    zero = FamilySpec(kind, sh, "zero", sign)
                    got = len(enumerate_family(zero))
                else:
                    got = sum(len(enumerate_family(FamilySpec(kind, sh, v))) for v in ("vbar", "hbar"))
                items.append({"key": f"{kind}:T[{sh},0{',' + sign if sign else ''}]",
                              "ok": got == expected, "expected": expected, "got": got})
    return _report("counts", items)


def tableau_corpus(kind: str, n: int) -> list:
    """Every standard tableau of every family over partitions of ``n``."""
    out = []
    for lam in partitions(n):
        for spec in family_specs(kind, SkewShape(lam)):
            out.extend(enumerate_family(spec))
    return out


def cells(kind: str, n: int, samples: int | None = None, seed: int = 0) -> dict:
    """Cell from content against the tableau description, plus convexity
    and genericity.  ``samples`` draws that many tableaux from the corpus."""
    group = GroupFamily(kind, n)
    corpus = tableau_corpus(kind, n)
    if samples is not None and samples < len(corpus):
        corpus = random.Random(seed).sample(corpus, samples)
    items = []
    for T in corpus:
        c = T.content_vector()
        cell = cell_from_content(c, group)
        via = cell_via_tableaux(T)
        same = cell.elements == via
        convex = is_convex(cell)
        generic = is_generic(c, cell)
        items.append({"key": f"{kind}:{T.placement.variant}{T.placement.base or ''}:{T.shape}:{T.half}",
                      "ok": same and convex and generic, "expected": len(via), "got": len(cell),
                      "convex": convex, "generic": generic})
    return _report("cells", items)


def homotopy(kind: str, n: int, shape: SkewShape | None = None, sign=None,
             xs=DEFAULT_GRID, tol: float = 1e-8) -> dict:
    """Relations on the grid, constant character curves and the integer
    specializations ``x = m - 1`` for ``m = 0..3``."""
    items = []
    signs = [sign] if sign else _signs(kind)
    for sh in _shapes(n, shape):
        for sg in signs:
            fam = HomotopyFamily(kind, sh, sg)
            tag = f"{kind}:{sh}{_sign_tag(sg)}"
            rel = verify_relations_on_grid(fam, xs, tol)
            items.append({"key": f"{tag}:relations", "ok": rel.ok, "residual": rel.worst_residual})
            curves = character_curves(fam, xs)
            spread = max(max(v) - min(v) for v in curves.values())
            items.append({"key": f"{tag}:curves", "ok": spread <= tol, "residual": spread})
            worst = 0.0
            for m in range(4):
                mats, _ = discrete_at(fam, m)
                g = family_matrices(fam, m - 1)
                worst = max([worst] + [float(np.max(np.abs(a - b))) for a, b in zip(mats, g)])
            items.append({"key": f"{tag}:integer-points", "ok": worst <= 1e-12, "residual": worst})
    return _report("homotopy", items)


def jsonable(obj):
    """Fractions and numpy scalars into JSON-friendly values."""
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, (np.floating,)):
        return float(obj)
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.bool_,)):
        return bool(obj)
    return obj
