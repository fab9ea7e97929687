"""Minimal cells ``K^c`` cut out by a content vector.

``A_c`` is the set of reflections whose root pairs with ``c`` to ``+-1``;
the cell is the set of ``w`` with ``l(tw) > l(w)`` for every ``t`` in
``A_c``.  Roots pair as ``<c, alpha_ij> = c_i - c_j`` with
``c_{-i} = -c_i``.  B sign reflections pair as ``2 c_j``, the same scaling
as the first entry of the B derived vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .group import GroupFamily, Reflection, SignedPermutation, generator, group_data, reflections
from .tableaux import SignedTableau, act

__all__ = [
    "Cell", "pairing", "boundary_set", "cell_from_content", "cell_via_tableaux",
    "boundary_reflections", "is_generic", "is_convex", "is_convex_set", "CELL_GUARD",
]

CELL_GUARD = 10**4


def pairing(c, t: Reflection, kind: str = "D"):
    if t.is_sign:
        # only B has sign reflections
        return 2 * c[t.j - 1]
    ci = c[abs(t.i) - 1] if t.i > 0 else -c[abs(t.i) - 1]
    return ci - c[t.j - 1]


@dataclass(frozen=True)
class Cell:
    family: GroupFamily
    content: tuple
    elements: frozenset
    boundary_set: frozenset

    def __len__(self):
        return len(self.elements)

    def __contains__(self, w):
        return w in self.elements

    def sorted(self) -> list[SignedPermutation]:
        return sorted(self.elements)

    def to_json(self) -> dict:
        return {
            "group": str(self.family),
            "content": [str(v) for v in self.content],
            "elements": [str(w) for w in self.sorted()],
            "boundary": [str(t) for t in sorted(self.boundary_set)],
        }


def boundary_set(c, family: GroupFamily) -> frozenset:
    """``A_c``: reflections with ``<c, alpha_t> = +-1``."""
    if len(c) != family.rank:
        raise ValueError(f"content vector of length {len(c)} for {family}")
    return frozenset(t for t in reflections(family) if abs(pairing(c, t, family.kind)) == 1)


def cell_from_content(c, family: GroupFamily) -> Cell:
    c = tuple(c)
    A = boundary_set(c, family)
    data = group_data(family)
    n = family.rank
    ts = [t.element(n) for t in A]
    elements = frozenset(
        w for w, lw in zip(data.elements, data.lengths)
        if all(data.lengths[data.index[t * w]] > lw for t in ts)
    )
    return Cell(family, c, elements, A)


def cell_via_tableaux(T: SignedTableau) -> frozenset:
    """``{pi : T^{pi^{-1}} is standard}``."""
    family = GroupFamily(T.kind, T.n)
    return frozenset(pi for pi in group_data(family).elements if act(T, pi.inverse()).is_standard())


def boundary_reflections(cell: Cell) -> tuple[frozenset, frozenset]:
    """Interior and boundary reflection sets ``(T_K, T_dK)``."""
    n = cell.family.rank
    gens = cell.family.generators()
    inner, outer = set(), set()
    for w in cell.elements:
        winv = w.inverse()
        for s in gens:
            t = Reflection.from_element(w * s * winv)
            (inner if w * s in cell.elements else outer).add(t)
    return frozenset(inner), frozenset(outer)


def is_generic(c, cell: Cell) -> bool:
    """Conditions (i)-(iii) of genericity of ``c`` for ``cell``."""
    kind = cell.family.kind
    inner, outer = boundary_reflections(cell)
    if any(pairing(c, t, kind) in (0, 1, -1) for t in inner):
        return False
    if any(pairing(c, t, kind) not in (1, -1) for t in outer):
        return False
    n = cell.family.rank
    gens = cell.family.generators()
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if cell.family.coxeter_m(i, j) == 3]
    for w in cell.elements:
        winv = w.inverse()
        for i, j in pairs:
            ws, wt = w * gens[i], w * gens[j]
            if ws in cell.elements or wt in cell.elements:
                continue
            a = pairing(c, Reflection.from_element(ws * winv), kind)
            b = pairing(c, Reflection.from_element(wt * winv), kind)
            if a != b:
                return False
    return True


@lru_cache(maxsize=None)
def _distances(family: GroupFamily) -> np.ndarray:
    """``d(x, y) = l(x^{-1} y)``, the right Cayley graph distance."""
    data = group_data(family)
    N = len(data.elements)
    D = np.zeros((N, N), dtype=np.int16)
    lengths = data.lengths
    for a, x in enumerate(data.elements):
        xinv = x.inverse()
        D[a] = [lengths[data.index[xinv * y]] for y in data.elements]
    return D


def is_convex_set(elements, family: GroupFamily) -> bool:
    """Every geodesic between two members stays inside ``elements``."""
    elements = list(elements)
    if len(elements) > CELL_GUARD:
        raise ValueError(f"set of {len(elements)} elements is above the guard {CELL_GUARD}")
    data = group_data(family)
    D = _distances(family)
    idx = np.array(sorted(data.index[w] for w in elements), dtype=int)
    outside = np.ones(len(data.elements), dtype=bool)
    outside[idx] = False
    for x in idx:
        # z lies on a geodesic from x to y iff d(x,z) + d(z,y) = d(x,y)
        through = D[x][None, :] + D[np.ix_(idx, np.arange(len(data.elements)))]
        on_path = through == D[x, idx][:, None]
        if np.any(on_path[:, outside]):
            return False
    return True


def is_convex(cell: Cell) -> bool:
    return is_convex_set(cell.elements, cell.family)
