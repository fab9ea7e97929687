"""The one-parameter family ``g_i(x)`` interpolating ``rho^{lambda,m}``.

Fix a seed: the row-reading standard filling of ``lambda`` by ``1..n`` with
base contents ``c`` (lower-left box at content 0, or 1/2 for B).  Every
standard half ``P`` of the right parity is ``seed^pi`` for a unique signed
permutation ``pi``, and its contents at parameter ``x`` are

    v_j = sign(pi^{-1}(j)) * (c_{|pi^{-1}(j)|} + x + 1).

At ``x = m - 1`` these are the contents of the lift ``T[lambda, m]``, so
``g_i(m - 1)`` is the generator matrix of that discrete family; ``x = -1``
gives the zero family.  Derived entries are affine in ``x`` with slope 0 or
``+-2``; those with slope 0 never move and those with nonzero slope tend
to infinity, giving the classical induced form in the limit.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .group import GroupFamily, SignedPermutation, generator, group_data
from .rep import (Representation, build_representation, character, characters_equal,
                  direct_sum, element_matrix, verify_coxeter_relations)
from .tableaux import (FamilySpec, Placement, SkewShape, derive, lift_m, lift_zero,
                       signed_fillings)

__all__ = [
    "HomotopyFamily", "family_matrices", "limit_matrices", "representation_at",
    "limit_representation", "verify_relations_on_grid", "character_curve",
    "verify_decomposition", "verify_decomposition_B", "aligned_basis",
    "DEFAULT_GRID", "discrete_at", "character_curves",
]

DEFAULT_GRID = (-1.0, -0.5, 0.0, 0.7, 1.0, 2.5)


@dataclass(frozen=True)
class HomotopyFamily:
    kind: str
    shape: SkewShape
    sign: str | None = "+"

    def __post_init__(self):
        if self.kind == "B":
            object.__setattr__(self, "sign", None)
        elif self.sign not in ("+", "-"):
            raise ValueError(f"sign must be '+' or '-', got {self.sign!r}")

    @property
    def n(self) -> int:
        return self.shape.n

    @property
    def group(self) -> GroupFamily:
        return GroupFamily(self.kind, self.n)

    @cached_property
    def seed(self) -> tuple[int, ...]:
        return tuple(range(1, self.n + 1))

    @cached_property
    def base_content(self) -> tuple:
        """Seed contents with the lower-left box at content 0 (1/2 for B)."""
        place = Placement(self.kind, "vbar")
        h = self.shape.h
        c = [0] * self.n
        for (r, col), k in zip(self.shape.boxes, self.seed):
            c[k - 1] = place.content((r - h + 1, col))
        return tuple(c)

    @cached_property
    def basis(self) -> tuple[tuple[int, ...], ...]:
        parity = None if self.kind == "B" else {"+": 0, "-": 1}[self.sign]
        return tuple(signed_fillings(self.shape, parity))

    @cached_property
    def perms(self) -> tuple[SignedPermutation, ...]:
        """``pi_P`` with ``P = seed^pi``: ``pi(k)`` is P's label where the
        seed holds ``k``."""
        out = []
        for P in self.basis:
            window = [0] * self.n
            for k, v in zip(self.seed, P):
                window[k - 1] = v
            out.append(SignedPermutation(tuple(window)))
        return tuple(out)

    @cached_property
    def _affine(self):
        """Per basis element, the derived vector as ``(constant, slope)`` pairs
        in ``y = x + 1``."""
        c = self.base_content
        out = []
        for pi in self.perms:
            inv = pi.inverse()
            const, slope = [], []
            for j in range(1, self.n + 1):
                k = inv(j)
                s = 1 if k > 0 else -1
                const.append(s * c[abs(k) - 1])
                slope.append(s)
            out.append(tuple(zip(derive(const, self.kind), derive(slope, self.kind))))
        return tuple(out)

    @cached_property
    def _partners(self):
        index = {P: k for k, P in enumerate(self.basis)}
        out = []
        for i in range(self.n):
            s = generator(self.group, i)
            out.append(tuple(index.get(tuple(s(v) for v in P), -1) for P in self.basis))
        return tuple(out)

    def derived(self, x: float):
        """Derived vectors of every basis element at parameter ``x``."""
        y = x + 1
        return [[a + b * y for a, b in row] for row in self._affine]

    def x_dependent(self) -> list[list[bool]]:
        return [[b != 0 for _, b in row] for row in self._affine]


def _matrices(fam: HomotopyFamily, coef) -> list[np.ndarray]:
    d = len(fam.basis)
    mats = []
    for i in range(fam.n):
        M = np.zeros((d, d))
        for k in range(d):
            a, b = coef(k, i)
            M[k, k] = a
            if b == 0:
                continue
            j = fam._partners[i][k]
            if j < 0:
                raise RuntimeError(f"s_{i} moves {fam.basis[k]} outside the basis")
            M[k, j] = b
        mats.append(M)
    return mats


def family_matrices(fam: HomotopyFamily, x: float) -> list[np.ndarray]:
    """Orthogonal matrices ``g_i(x)`` over ``fam.basis``."""
    if x < -1:
        raise ValueError(f"x must be >= -1, got {x}")
    f = fam.derived(x)

    def coef(k, i):
        a = 1.0 / float(f[k][i])
        if abs(abs(f[k][i]) - 1) < 1e-15:
            return a, 0.0
        return a, np.sqrt(1.0 - a * a)

    return _matrices(fam, coef)


def limit_matrices(fam: HomotopyFamily) -> list[np.ndarray]:
    """``x -> infinity``: moving entries become the pair (0, 1)."""
    dep = fam.x_dependent()
    f = fam.derived(-1)

    def coef(k, i):
        if dep[k][i]:
            return 0.0, 1.0
        a = 1.0 / float(f[k][i])
        return (a, 0.0) if abs(f[k][i]) == 1 else (a, np.sqrt(1.0 - a * a))

    return _matrices(fam, coef)


def _wrap(fam: HomotopyFamily, mats, name: str) -> Representation:
    return Representation(fam.group, fam.n, tuple(range(fam.n)), fam.basis, tuple(mats),
                          "orthogonal", False, name)


def representation_at(fam: HomotopyFamily, x: float) -> Representation:
    return _wrap(fam, family_matrices(fam, x), f"g(x={x})")


def limit_representation(fam: HomotopyFamily) -> Representation:
    return _wrap(fam, limit_matrices(fam), "g(inf)")


def aligned_basis(fam: HomotopyFamily, m: int) -> list:
    """The lifted tableau of each basis half: ``T[lambda, m]`` for ``m >= 1``,
    the zero family for ``m = 0``."""
    if m == 0:
        return [lift_zero(fam.shape, P, fam.kind) for P in fam.basis]
    return [lift_m(fam.shape, P, m, fam.kind) for P in fam.basis]


def discrete_at(fam: HomotopyFamily, m: int) -> tuple[list[np.ndarray], list[int]]:
    """Generator matrices of the discrete build at ``x = m - 1``, reordered to
    ``fam.basis``, plus the permutation used."""
    if m == 0:
        variants = ["vbar", "hbar"] if fam.kind == "B" else ["vbar", "hbar", "box"]
        parts = [build_representation(_spec(fam, v), "orthogonal") for v in variants]
        rep = direct_sum(parts)
    else:
        rep = build_representation(_spec(fam, "m", m), "orthogonal")
    where = {T: k for k, T in enumerate(rep.basis)}
    order = [where[T] for T in aligned_basis(fam, m)]
    return [rep.matrix(i)[np.ix_(order, order)] for i in range(fam.n)], order


def _spec(fam: HomotopyFamily, variant: str, m: int = 0) -> FamilySpec:
    sign = None if fam.kind == "B" or variant == "box" else fam.sign
    return FamilySpec(fam.kind, fam.shape, variant, sign, m)


@dataclass
class GridReport:
    ok: bool
    worst_residual: float
    per_x: dict


def verify_relations_on_grid(fam: HomotopyFamily, xs=DEFAULT_GRID, tol: float = 1e-8) -> GridReport:
    per_x = {}
    for x in xs:
        per_x[x] = verify_coxeter_relations(representation_at(fam, x), tol).worst_residual
    worst = max(per_x.values(), default=0.0)
    return GridReport(worst <= tol, worst, per_x)


def character_curve(fam: HomotopyFamily, w: SignedPermutation, xs=DEFAULT_GRID) -> list[float]:
    """``trace g(x)(w)`` along ``xs``, using the stored reduced word of ``w``."""
    word = group_data(fam.group).word(w)
    return [float(np.trace(element_matrix(representation_at(fam, x), word))) for x in xs]


def character_curves(fam: HomotopyFamily, xs=DEFAULT_GRID) -> dict:
    """All elements at once: ``{w: [trace at each x]}``."""
    chars = [character(representation_at(fam, x)) for x in xs]
    return {w: [float(ch.values[w]) for ch in chars] for w in group_data(fam.group).elements}


@dataclass
class DecompositionReport:
    ok: bool
    dims: dict
    lhs_dim: int
    rhs_dim: int

    def __bool__(self):
        return self.ok


def _decomposition(kind: str, shape: SkewShape, sign, m: int, variants) -> DecompositionReport:
    parts = {}
    for v in variants:
        s = None if kind == "B" or v == "box" else sign
        parts[v] = build_representation(FamilySpec(kind, shape, v, s), "stochastic")
    lhs = direct_sum(list(parts.values()))
    rhs = build_representation(FamilySpec(kind, shape, "m", sign, m), "stochastic")
    ok = lhs.dim == rhs.dim and characters_equal(lhs, rhs)
    return DecompositionReport(ok, {v: p.dim for v, p in parts.items()}, lhs.dim, rhs.dim)


def verify_decomposition(shape: SkewShape, sign: str, m: int = 1) -> DecompositionReport:
    """Exact check that box + vbar + hbar at zero is ``rho^{lambda,m,sign}``."""
    return _decomposition("D", shape, sign, m, ("box", "vbar", "hbar"))


def verify_decomposition_B(shape: SkewShape, m: int = 1) -> DecompositionReport:
    return _decomposition("B", shape, None, m, ("vbar", "hbar"))
