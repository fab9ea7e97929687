"""Representations from tableau families via the generalized Young form.

Matrices use the row convention: ``M[T, T']`` is the coefficient of ``T'``
in ``rho(T)``.  With that convention ``rho(w s)`` has matrix
``M_s @ M_w``, so a word ``[i1, ..., ik]`` (the element
``s_i1 ... s_ik``) evaluates to ``M_ik ... M_i1``.

Two scalar backends are supported.  ``exact`` stores Fractions and is only
available with the stochastic normalization; ``float`` stores doubles.
Internally, exact products are carried as an integer matrix over a common
denominator, which keeps the exhaustive character sweeps fast.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import lcm, sqrt

import numpy as np

from .group import GroupFamily, SignedPermutation, group_data, subgroup_elements, subgroup_generators, min_coset_reps, generator
from .tableaux import FamilySpec, SkewShape, enumerate_family, derived_vector, act, standard_fillings

__all__ = [
    "Representation", "Character", "build_representation", "element_matrix",
    "verify_coxeter_relations", "character", "characters_equal",
    "direct_sum", "specht_yof", "induce_classical", "FLOAT_TOL",
]

FLOAT_TOL = 1e-9
CHAR_TOL = 1e-8

NORMALIZATIONS = ("orthogonal", "stochastic")


def _check_norm(normalization: str, backend: str | None) -> bool:
    """Validate the pair and return whether the backend is exact."""
    if normalization not in NORMALIZATIONS:
        raise ValueError(f"unknown normalization {normalization!r}")
    if backend is None:
        backend = "exact" if normalization == "stochastic" else "float"
    if backend not in ("exact", "float"):
        raise ValueError(f"unknown backend {backend!r}")
    if backend == "exact" and normalization == "orthogonal":
        raise ValueError("the orthogonal normalization needs the float backend")
    return backend == "exact"


def coefficients(f, normalization: str, exact: bool):
    """Diagonal and off-diagonal coefficient for derived entry ``f``."""
    if f == 0:
        raise ZeroDivisionError("derived entry 0 has no Young coefficient")
    a = Fraction(1, 1) / f if exact else 1.0 / float(f)
    if abs(f) == 1:
        return a, 0
    if normalization == "orthogonal":
        return a, sqrt(1.0 - a * a)
    return a, 1 - a


@dataclass(frozen=True, eq=False)
class Representation:
    """Generator matrices over an ordered basis.

    ``group`` is None for symmetric-group representations, whose generators
    are labelled ``1..n-1``; otherwise labels are ``0..n-1``.
    """
    group: GroupFamily | None
    rank: int
    labels: tuple[int, ...]
    basis: tuple
    generators: tuple
    normalization: str
    exact: bool
    name: str = ""

    @property
    def dim(self) -> int:
        return len(self.basis)

    def matrix(self, label: int) -> np.ndarray:
        return self.generators[self.labels.index(label)]

    def coxeter_m(self, i: int, j: int) -> int:
        if self.group is not None:
            return self.group.coxeter_m(i, j)
        if i == j:
            return 1
        return 3 if abs(i - j) == 1 else 2

    @cached_property
    def _sparse(self) -> dict:
        return {lab: _sparse_form(M, self.exact) for lab, M in zip(self.labels, self.generators)}

    def identity(self) -> np.ndarray:
        return _identity(self.dim, self.exact)


def _identity(d: int, exact: bool) -> np.ndarray:
    if exact:
        out = np.full((d, d), Fraction(0), dtype=object)
        for k in range(d):
            out[k, k] = Fraction(1)
        return out
    return np.eye(d)


@dataclass(frozen=True)
class _SparseGen:
    """Rows as slots: row ``r`` is ``sum_k coef[k][r] * e_{col[k][r]}``,
    all over the common denominator ``denom``."""
    coefs: tuple
    cols: tuple
    denom: int | float


def _sparse_form(M: np.ndarray, exact: bool) -> _SparseGen:
    d = M.shape[0]
    rows = [[(c, M[r, c]) for c in range(d) if M[r, c] != 0] for r in range(d)]
    width = max((len(r) for r in rows), default=0)
    denom = 1
    if exact:
        for r in rows:
            for _, v in r:
                denom = lcm(denom, Fraction(v).denominator)
    coefs, cols = [], []
    for k in range(width):
        cf = np.zeros(d, dtype=object if exact else float)
        cl = np.zeros(d, dtype=int)
        for r in range(d):
            if k < len(rows[r]):
                c, v = rows[r][k]
                cl[r] = c
                cf[r] = int(Fraction(v) * denom) if exact else v
            else:
                cl[r] = r
                cf[r] = 0
        coefs.append(cf)
        cols.append(cl)
    return _SparseGen(tuple(coefs), tuple(cols), denom if exact else 1.0)


def _apply(g: _SparseGen, state):
    """Left-multiply a scaled matrix ``(num, den)`` by a sparse generator."""
    num, den = state
    if not g.coefs:
        return num.copy(), den * g.denom
    out = g.coefs[0][:, None] * num[g.cols[0]]
    for cf, cl in zip(g.coefs[1:], g.cols[1:]):
        out = out + cf[:, None] * num[cl]
    return out, den * g.denom


def _start(rep: Representation):
    d = rep.dim
    if rep.exact:
        num = np.zeros((d, d), dtype=object)
        for k in range(d):
            num[k, k] = 1
        return num, 1
    return np.eye(d), 1.0


def _word_state(rep: Representation, word):
    state = _start(rep)
    sparse = rep._sparse
    for i in word:
        if i not in sparse:
            raise IndexError(f"no generator {i} in this representation")
        state = _apply(sparse[i], state)
    return state


def _to_matrix(state, exact: bool) -> np.ndarray:
    num, den = state
    if not exact:
        return num / den
    out = np.empty(num.shape, dtype=object)
    for idx, v in np.ndenumerate(num):
        out[idx] = Fraction(int(v), den)
    return out


def _trace(state, exact: bool):
    num, den = state
    if exact:
        return Fraction(int(sum(num[k, k] for k in range(num.shape[0]))), den)
    return float(np.trace(num)) / den


def element_matrix(rep: Representation, word) -> np.ndarray:
    """Matrix of ``s_i1 ... s_ik`` for ``word = [i1, ..., ik]``."""
    return _to_matrix(_word_state(rep, list(word)), rep.exact)


# -- building -------------------------------------------------------------------

def _zero_rep(group, rank, labels, normalization, exact, name=""):
    empty = np.zeros((0, 0), dtype=object if exact else float)
    return Representation(group, rank, tuple(labels), (), tuple(empty for _ in labels),
                          normalization, exact, name)


def build_representation(spec: FamilySpec, normalization: str = "orthogonal",
                         backend: str | None = None) -> Representation:
    """Generator ``s_i`` sends ``T`` to ``(1/f_i) T + b T^{s_i}``."""
    exact = _check_norm(normalization, backend)
    group = GroupFamily(spec.kind, spec.n)
    labels = tuple(range(spec.n))
    basis = enumerate_family(spec)
    if not basis:
        return _zero_rep(group, spec.n, labels, normalization, exact, spec.label())
    index = {T: k for k, T in enumerate(basis)}
    d = len(basis)
    mats = []
    for i in labels:
        s = generator(group, i)
        M = np.zeros((d, d), dtype=object if exact else float)
        if exact:
            M[:, :] = Fraction(0)
        for k, T in enumerate(basis):
            f = derived_vector(T)[i]
            a, b = coefficients(f, normalization, exact)
            M[k, k] = a
            if abs(f) == 1:
                continue
            T2 = act(T, s)
            j = index.get(T2)
            if j is None:
                state = "standard" if T2.is_standard() else "non-standard"
                raise RuntimeError(f"{spec.label()}: s_{i} sends {T.half} to a {state} tableau outside the family")
            M[k, j] = b
        mats.append(M)
    return Representation(group, spec.n, labels, tuple(basis), tuple(mats),
                          normalization, exact, spec.label())


def specht_yof(shape: SkewShape, normalization: str = "orthogonal",
               backend: str | None = None) -> Representation:
    """Young's orthogonal form of ``S_n`` on standard fillings of ``shape``.

    The hook distance is ``h(i) = c_{i+1} - c_i`` with content
    ``col - row``; ``s_i`` acts by ``1/h(i)`` on the diagonal.
    """
    exact = _check_norm(normalization, backend)
    n = shape.n
    labels = tuple(range(1, n))
    basis = standard_fillings(shape)
    index = {q: k for k, q in enumerate(basis)}
    boxes = shape.boxes
    d = len(basis)
    mats = []
    for i in labels:
        M = np.zeros((d, d), dtype=object if exact else float)
        if exact:
            M[:, :] = Fraction(0)
        for k, q in enumerate(basis):
            where = {v: boxes[p] for p, v in enumerate(q)}
            (r1, c1), (r2, c2) = where[i], where[i + 1]
            h = (c2 - r2) - (c1 - r1)
            a, b = coefficients(h, normalization, exact)
            M[k, k] = a
            if abs(h) == 1:
                continue
            swapped = tuple(i + 1 if v == i else i if v == i + 1 else v for v in q)
            M[k, index[swapped]] = b
        mats.append(M)
    return Representation(None, n, labels, tuple(basis), tuple(mats), normalization,
                          exact, f"S^{shape}")


def direct_sum(parts) -> Representation:
    parts = list(parts)
    if not parts:
        raise ValueError("direct sum of nothing")
    first = parts[0]
    for p in parts[1:]:
        if p.exact != first.exact:
            raise ValueError("cannot mix exact and float backends")
        if (p.group, p.rank, p.labels) != (first.group, first.rank, first.labels):
            raise ValueError("parts act on different groups")
    live = [p for p in parts if p.dim]
    d = sum(p.dim for p in live)
    name = " + ".join(p.name for p in parts)
    if not live:
        return _zero_rep(first.group, first.rank, first.labels, first.normalization, first.exact, name)
    mats = []
    for lab in first.labels:
        M = np.zeros((d, d), dtype=object if first.exact else float)
        if first.exact:
            M[:, :] = Fraction(0)
        at = 0
        for p in live:
            M[at:at + p.dim, at:at + p.dim] = p.matrix(lab)
            at += p.dim
        mats.append(M)
    basis = tuple(b for p in live for b in p.basis)
    norm = first.normalization if all(p.normalization == first.normalization for p in live) else "mixed"
    return Representation(first.group, first.rank, first.labels, basis, tuple(mats),
                          norm, first.exact, name)


def _embedding(subgroup: str, label: int) -> int:
    """Symmetric-group label of a subgroup generator."""
    if subgroup == "S0" and label == 0:
        return 1
    return label


def induce_classical(inner: Representation, family: GroupFamily, subgroup: str = "S1") -> Representation:
    """Induce an ``S_n`` representation from ``S1`` or ``S0`` to ``family``.

    The basis is ``(sigma_k, v)`` over minimal coset representatives; for
    ``s sigma_j = sigma_k h`` the block ``(j, k)`` of ``s`` is ``rho(h)``.
    """
    if inner.group is not None or inner.rank != family.rank:
        raise ValueError("inner representation must be of S_n with the same n")
    gens = subgroup_generators(family, subgroup)
    H = subgroup_elements(family, gens)
    # matrices of every subgroup element, by BFS over the subgroup's generators
    states = {family.identity(): _start(inner)}
    queue = deque([family.identity()])
    while queue:
        h = queue.popleft()
        for g in gens:
            hs = h * generator(family, g)
            if hs not in states:
                states[hs] = _apply(inner._sparse[_embedding(subgroup, g)], states[h])
                queue.append(hs)
    assert len(states) == len(H)
    reps = min_coset_reps(family, subgroup)
    where = {}
    for k, sigma in enumerate(reps):
        for h in H:
            where[sigma * h] = (k, h)
    d = inner.dim
    D = len(reps) * d
    mats = []
    for i in range(family.rank):
        s = generator(family, i)
        M = np.zeros((D, D), dtype=object if inner.exact else float)
        if inner.exact:
            M[:, :] = Fraction(0)
        for j, sigma in enumerate(reps):
            k, h = where[s * sigma]
            M[j * d:(j + 1) * d, k * d:(k + 1) * d] = _to_matrix(states[h], inner.exact)
        mats.append(M)
    basis = tuple((sigma, b) for sigma in reps for b in inner.basis)
    return Representation(family, family.rank, tuple(range(family.rank)), basis, tuple(mats),
                          inner.normalization, inner.exact, f"Ind({inner.name},{subgroup})")


# -- verification ----------------------------------------------------------------

@dataclass
class RelationReport:
    ok: bool
    worst_residual: float
    # (i, j) -> residual of (M_i M_j)^m - I
    residuals: dict = field(default_factory=dict)


def _residual(state, exact: bool) -> float:
    num, den = state
    d = num.shape[0]
    worst = 0.0
    if exact:
        for (r, c), v in np.ndenumerate(num):
            target = den if r == c else 0
            if v != target:
                worst = max(worst, abs(float(Fraction(int(v) - target, den))))
        return worst
    if d == 0:
        return 0.0
    return float(np.max(np.abs(num / den - np.eye(d))))


def verify_coxeter_relations(rep: Representation, tol: float = FLOAT_TOL) -> RelationReport:
    """Check ``(M_i M_j)^{m(i,j)} = I`` for every pair, ``i = j`` included."""
    residuals = {}
    for a, i in enumerate(rep.labels):
        for j in rep.labels[a:]:
            word = [i, j] * rep.coxeter_m(i, j)
            residuals[(i, j)] = _residual(_word_state(rep, word), rep.exact)
    worst = max(residuals.values(), default=0.0)
    ok = worst == 0 if rep.exact else worst <= tol
    return RelationReport(ok, worst, residuals)


@dataclass(frozen=True)
class Character:
    group: GroupFamily
    values: dict
    exact: bool

    def __call__(self, w: SignedPermutation):
        return self.values[w]

    def items(self):
        return sorted(self.values.items())

    def to_json(self) -> list:
        return [{"element": str(w), "value": str(v) if self.exact else v} for w, v in self.items()]


def character(rep: Representation) -> Character:
    """Traces over the whole group, grown along the BFS tree of the group."""
    if rep.group is None:
        raise ValueError("characters are computed for B_n and D_n only")
    data = group_data(rep.group)
    states = {}
    values = {}
    for k in data.bfs_order:
        if data.parent[k] < 0:
            states[k] = _start(rep)
        else:
            states[k] = _apply(rep._sparse[data.gen[k]], states[data.parent[k]])
        values[data.elements[k]] = _trace(states[k], rep.exact)
    return Character(rep.group, values, rep.exact)


def characters_equal(a, b, tol: float = CHAR_TOL) -> bool:
    """Pointwise equality; exact when both sides are exact."""
    ca = a if isinstance(a, Character) else character(a)
    cb = b if isinstance(b, Character) else character(b)
    if ca.group != cb.group:
        raise ValueError(f"characters of different groups: {ca.group} and {cb.group}")
    if ca.exact and cb.exact:
        return ca.values == cb.values
    return all(abs(float(ca.values[w]) - float(cb.values[w])) <= tol for w in ca.values)


def matrix_to_json(M: np.ndarray, exact: bool) -> list:
    if exact:
        return [[str(Fraction(v)) for v in row] for row in M]
    return [[float(v) for v in row] for row in M]
