"""Signed permutation groups B_n and D_n.

Elements are stored in window notation ``(w(1), ..., w(n))`` and composed as
functions, ``(a * b)(k) = a(b(k))``.  The Coxeter generators are

* B_n: ``s_0 = (-1, 1)`` and ``s_i = (i, i+1)(-i, -i-1)``;
* D_n: ``s_0 = (1, -2)(2, -1)`` and the same ``s_i`` for ``i >= 1``.

>>> D3 = GroupFamily("D", 3)
>>> D3.generator(0)
SignedPermutation(window=(-2, -1, 3))
>>> len(enumerate_group(D3))
24
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from math import factorial

__all__ = [
    "GroupFamily", "SignedPermutation", "Reflection", "GroupData",
    "generator", "multiply", "length", "enumerate_group", "group_data",
    "reflections", "min_coset_reps", "subgroup_elements", "GROUP_GUARD",
]

# largest group we are willing to enumerate exhaustively
GROUP_GUARD = 10**7


@dataclass(frozen=True, order=True)
class SignedPermutation:
    window: tuple[int, ...]

    def __post_init__(self):
        if sorted(abs(v) for v in self.window) != list(range(1, len(self.window) + 1)):
            raise ValueError(f"not a signed permutation window: {self.window}")

    @classmethod
    def identity(cls, n: int) -> SignedPermutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def parse(cls, text: str) -> SignedPermutation:
        """Parse the comma-separated window form, e.g. ``"-2,-1,3"``."""
        return cls(tuple(int(tok) for tok in text.split(",")))

    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, k: int) -> int:
        v = self.window[abs(k) - 1]
        return v if k > 0 else -v

    def __mul__(self, other: SignedPermutation) -> SignedPermutation:
        return multiply(self, other)

    def inverse(self) -> SignedPermutation:
        inv = [0] * self.n
        for i, v in enumerate(self.window, start=1):
            inv[abs(v) - 1] = i if v > 0 else -i
        return SignedPermutation(tuple(inv))

    def negatives(self) -> int:
        return sum(1 for v in self.window if v < 0)

    def is_identity(self) -> bool:
        return self.window == tuple(range(1, self.n + 1))

    def __str__(self):
        return ",".join(str(v) for v in self.window)


def multiply(a: SignedPermutation, b: SignedPermutation) -> SignedPermutation:
    """Composition ``a * b``: apply ``b`` first, then ``a``."""
    if a.n != b.n:
        raise ValueError(f"rank mismatch: {a.n} != {b.n}")
    return SignedPermutation(tuple(a(v) for v in b.window))


@dataclass(frozen=True)
class GroupFamily:
    kind: str
    rank: int

    def __post_init__(self):
        if self.kind not in ("B", "D"):
            raise ValueError(f"unknown group kind {self.kind!r}")
        if self.rank < 1 or (self.kind == "D" and self.rank < 2):
            raise ValueError(f"{self.kind}_n needs a larger rank, got {self.rank}")

    @property
    def n(self) -> int:
        return self.rank

    @property
    def order(self) -> int:
        full = 2**self.rank * factorial(self.rank)
        return full if self.kind == "B" else full // 2

    def identity(self) -> SignedPermutation:
        return SignedPermutation.identity(self.rank)

    def generator(self, i: int) -> SignedPermutation:
        return generator(self, i)

    def generators(self) -> list[SignedPermutation]:
        return [generator(self, i) for i in range(self.rank)]

    def coxeter_m(self, i: int, j: int) -> int:
        """Order of ``s_i s_j``."""
        if i == j:
            return 1
        i, j = min(i, j), max(i, j)
        if i == 0:
            if self.kind == "B":
                return 4 if j == 1 else 2
            return 3 if j == 2 else 2
        return 3 if j == i + 1 else 2

    def coxeter_matrix(self) -> list[list[int]]:
        return [[self.coxeter_m(i, j) for j in range(self.rank)] for i in range(self.rank)]

    def contains(self, w: SignedPermutation) -> bool:
        return w.n == self.rank and (self.kind == "B" or w.negatives() % 2 == 0)

    def __str__(self):
        return f"{self.kind}{self.rank}"


def generator(family: GroupFamily, i: int) -> SignedPermutation:
    n = family.rank
    if not 0 <= i < n:
        raise IndexError(f"generator index {i} out of range for {family}")
    w = list(range(1, n + 1))
    if i == 0:
        if family.kind == "B":
            w[0] = -1
        else:
            w[0], w[1] = -2, -1
    else:
        w[i - 1], w[i] = w[i], w[i - 1]
    return SignedPermutation(tuple(w))


def length(w: SignedPermutation, family: GroupFamily) -> int:
    """Coxeter length from inversion statistics.

    D_n: inv + nsp, where nsp counts pairs i < j with w(i) + w(j) < 0.
    B_n additionally counts the negative entries.
    """
    win = w.window
    n = len(win)
    inv = nsp = 0
    for i in range(n):
        for j in range(i + 1, n):
            if win[i] > win[j]:
                inv += 1
            if win[i] + win[j] < 0:
                nsp += 1
    if family.kind == "B":
        return inv + nsp + w.negatives()
    return inv + nsp


def _check_guard(family: GroupFamily):
    if family.order > GROUP_GUARD:
        raise ValueError(f"{family} has {family.order} elements, above the guard {GROUP_GUARD}")


def enumerate_group(family: GroupFamily) -> list[SignedPermutation]:
    """All elements, lexicographic on windows."""
    _check_guard(family)
    n = family.rank
    out = []
    for perm in permutations(range(1, n + 1)):
        for signs in product((1, -1), repeat=n):
            w = SignedPermutation(tuple(s * p for s, p in zip(signs, perm)))
            if family.contains(w):
                out.append(w)
    out.sort()
    return out


@dataclass(frozen=True)
class GroupData:
    """Exhaustive tables for one group: canonical order, lengths and one
    reduced word per element, plus a BFS tree used for incremental
    products (``element = parent * s_gen``)."""
    family: GroupFamily
    elements: tuple[SignedPermutation, ...]
    index: dict
    words: tuple[tuple[int, ...], ...]
    lengths: tuple[int, ...]
    # BFS order over element indices; parent/gen are -1 for the identity
    bfs_order: tuple[int, ...]
    parent: tuple[int, ...]
    gen: tuple[int, ...]

    def word(self, w: SignedPermutation) -> tuple[int, ...]:
        return self.words[self.index[w]]


@lru_cache(maxsize=None)
def group_data(family: GroupFamily) -> GroupData:
    elements = enumerate_group(family)
    index = {w: k for k, w in enumerate(elements)}
    N = len(elements)
    gens = family.generators()
    words: list = [None] * N
    parent = [-1] * N
    gen = [-1] * N
    start = index[family.identity()]
    words[start] = ()
    order = [start]
    queue = deque([start])
    while queue:
        k = queue.popleft()
        w = elements[k]
        for i, s in enumerate(gens):
            j = index[w * s]
            if words[j] is None:
                words[j] = words[k] + (i,)
                parent[j] = k
                gen[j] = i
                order.append(j)
                queue.append(j)
    lengths = tuple(len(wd) for wd in words)
    return GroupData(family, tuple(elements), index, tuple(words), lengths,
                     tuple(order), tuple(parent), tuple(gen))


@dataclass(frozen=True, order=True)
class Reflection:
    """Reflection ``(i, j)(-i, -j)`` stored canonically with ``j > |i|``.

    Sign reflections of B_n, which only flip ``j``, are stored as
    ``(-j, j)``.
    """
    i: int
    j: int

    @classmethod
    def of(cls, i: int, j: int) -> Reflection:
        if i == 0 or j == 0 or abs(i) == abs(j) and i != -j:
            raise ValueError(f"invalid reflection ({i}, {j})")
        if i == -j:
            return cls(-abs(i), abs(i))
        if abs(j) < abs(i):
            i, j = -j, -i
        if j < 0:
            i, j = -i, -j
        return cls(i, j)

    @classmethod
    def from_element(cls, w: SignedPermutation) -> Reflection:
        moved = [k for k in range(1, w.n + 1) if w(k) != k]
        if len(moved) == 1 and w(moved[0]) == -moved[0]:
            return cls(-moved[0], moved[0])
        if len(moved) != 2:
            raise ValueError(f"{w} is not a reflection")
        k = moved[0]
        return cls.of(k, w(k))

    @property
    def is_sign(self) -> bool:
        return self.i == -self.j

    def element(self, n: int) -> SignedPermutation:
        w = list(range(1, n + 1))
        if self.is_sign:
            w[self.j - 1] = -self.j
            return SignedPermutation(tuple(w))
        i, j = self.i, self.j
        # i -> j and j -> i, extended oddly
        w[abs(i) - 1] = j if i > 0 else -j
        w[j - 1] = i
        return SignedPermutation(tuple(w))

    def root(self, n: int) -> tuple[int, ...]:
        """``e_i - e_j`` with ``e_{-k} = -e_k``; ``e_j`` for sign reflections."""
        v = [0] * n
        if self.is_sign:
            v[self.j - 1] = 1
            return tuple(v)
        v[abs(self.i) - 1] += 1 if self.i > 0 else -1
        v[self.j - 1] -= 1
        return tuple(v)

    def __str__(self):
        return f"({self.i},{self.j})"


def reflections(family: GroupFamily) -> list[Reflection]:
    n = family.rank
    out = set()
    for j in range(2, n + 1):
        for i in range(1, j):
            out.add(Reflection(i, j))
            out.add(Reflection(-i, j))
    if family.kind == "B":
        out.update(Reflection(-j, j) for j in range(1, n + 1))
    return sorted(out)


def subgroup_elements(family: GroupFamily, gens: list[int]) -> frozenset:
    """Closure of the parabolic subgroup generated by ``s_i, i in gens``."""
    seeds = [generator(family, i) for i in gens]
    seen = {family.identity()}
    queue = deque(seen)
    while queue:
        w = queue.popleft()
        for s in seeds:
            v = w * s
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return frozenset(seen)


def subgroup_generators(family: GroupFamily, subgroup: str) -> list[int]:
    n = family.rank
    if subgroup == "S1":
        return list(range(1, n))
    if subgroup == "S0" and family.kind == "D":
        return [0] + list(range(2, n))
    raise ValueError(f"unsupported subgroup {subgroup!r} for {family}")


def min_coset_reps(family: GroupFamily, subgroup: str) -> list[SignedPermutation]:
    """Minimal-length representatives of the left cosets ``w * H``.

    ``subgroup`` is ``"S1" = <s_1..s_{n-1}>`` or, for D_n only,
    ``"S0" = <s_0, s_2..s_{n-1}>``.  Sorted by length, then window.
    """
    H = subgroup_elements(family, subgroup_generators(family, subgroup))
    data = group_data(family)
    seen = set()
    reps = []
    for w in data.elements:
        if w in seen:
            continue
        coset = [w * h for h in H]
        seen.update(coset)
        reps.append(min(coset, key=lambda v: (length(v, family), v)))
    reps.sort(key=lambda v: (length(v, family), v))
    return reps
