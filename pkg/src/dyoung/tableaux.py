"""Skew shapes and D-/B-Young tableaux.

A signed tableau is stored as its *half*: a filling of the skew shape
``lambda`` (the boxes of nonnegative content) by signed labels, one of each
pair ``+-i``.  The other half is the 180-degree rotation with negated
entries and is rebuilt on demand.  Where the two halves sit relative to each
other is fixed by a :class:`Placement`.

Absolute coordinates: rows grow downward, columns to the right, and the
lower-left box of ``lambda`` sits at ``(0, base)``.  Contents are
``col - row`` for D and ``col - row + 1/2`` for B.  The mirror map is
``(r, c) -> (kr - r, kc - c)``:

=========  ==================  ==================
variant    D mirror (kr, kc)   B mirror (kr, kc)
=========  ==================  ==================
m >= 1     (1, 1)              (1, 0)
hbar       (1, 1)              (1, 0)
vbar       (-1, -1)            (0, -1)
box        (0, 0)              --
=========  ==================  ==================

For D, ``box`` makes the lower-left box its own mirror; it then holds the
pair ``{-i, +i}``, read as ``-i`` followed by ``+i`` along its row and column.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial

from .group import SignedPermutation

__all__ = [
    "SkewShape", "Placement", "SignedTableau", "FamilySpec",
    "content_vector", "derived_vector", "is_standard", "act",
    "standard_fillings", "signed_fillings", "count_standard_fillings",
    "hook_length_count", "is_standard_filling", "lift_zero", "lift_m",
    "zero_variant", "variant_available", "enumerate_family", "partitions",
    "derive",
]

HALF = Fraction(1, 2)


def partitions(n: int) -> list[tuple[int, ...]]:
    """Partitions of n in reverse lexicographic order."""
    out = []

    def rec(rest, largest, acc):
        if rest == 0:
            out.append(tuple(acc))
            return
        for part in range(min(rest, largest), 0, -1):
            rec(rest - part, part, acc + [part])

    rec(n, n, [])
    return out


def _parse_partition(text) -> tuple[int, ...]:
    if isinstance(text, str):
        text = text.strip()
        if not text:
            return ()
        return tuple(int(tok) for tok in text.split(","))
    return tuple(int(v) for v in text)


@dataclass(frozen=True)
class SkewShape:
    """The box set ``outer / inner``, normalized so that the bottom row
    starts in column 0 and there are no empty rows on top."""
    outer: tuple[int, ...]
    inner: tuple[int, ...] = ()

    def __post_init__(self):
        mu = [p for p in _parse_partition(self.outer) if p]
        nu = [p for p in _parse_partition(self.inner) if p]
        for part in (mu, nu):
            if any(a < b for a, b in zip(part, part[1:])):
                raise ValueError(f"{part} is not a partition")
        if len(nu) > len(mu) or any(b > a for a, b in zip(mu, nu)):
            raise ValueError(f"inner {tuple(nu)} does not fit in outer {tuple(mu)}")
        nu += [0] * (len(mu) - len(nu))
        while mu and mu[0] == nu[0]:
            mu.pop(0)
            nu.pop(0)
        if not mu:
            raise ValueError("empty shape")
        # drop empty bottom rows, then slide the bottom row to column 0
        while mu[-1] == nu[-1] or nu[-1]:
            while mu[-1] == nu[-1]:
                mu.pop()
                nu.pop()
            shift = nu[-1]
            mu = [a - shift for a in mu]
            nu = [b - shift for b in nu]
        while nu and nu[-1] == 0:
            nu.pop()
        object.__setattr__(self, "outer", tuple(mu))
        object.__setattr__(self, "inner", tuple(nu))

    @classmethod
    def parse(cls, outer: str, inner: str = "") -> SkewShape:
        return cls(_parse_partition(outer), _parse_partition(inner))

    @property
    def h(self) -> int:
        return len(self.outer)

    @property
    def ell(self) -> int:
        return len(self.inner)

    @property
    def last_row(self) -> int:
        """Length of the bottom row of the outer partition (``mu_h``)."""
        return self.outer[-1]

    def inner_part(self, r: int) -> int:
        return self.inner[r] if r < len(self.inner) else 0

    @property
    def boxes(self) -> tuple[tuple[int, int], ...]:
        return _boxes(self)

    @property
    def n(self) -> int:
        return sum(self.outer) - sum(self.inner)

    @property
    def is_straight(self) -> bool:
        return not self.inner

    def box_index(self, box) -> int:
        return _box_index(self)[box]

    @property
    def lower_left(self) -> int:
        return self.box_index((self.h - 1, 0))

    def __str__(self):
        outer = ",".join(map(str, self.outer))
        if self.inner:
            return f"({outer})/({','.join(map(str, self.inner))})"
        return f"({outer})"


@lru_cache(maxsize=None)
def _boxes(shape: SkewShape):
    return tuple((r, c) for r in range(shape.h)
                 for c in range(shape.inner_part(r), shape.outer[r]))


@lru_cache(maxsize=None)
def _box_index(shape: SkewShape):
    return {b: k for k, b in enumerate(_boxes(shape))}


def is_connected(shape: SkewShape) -> bool:
    boxes = set(shape.boxes)
    seen, stack = set(), [shape.boxes[0]]
    while stack:
        r, c = stack.pop()
        if (r, c) in seen:
            continue
        seen.add((r, c))
        stack += [b for b in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)) if b in boxes]
    return seen == boxes


def skew_shapes(n: int) -> list[SkewShape]:
    """Every connected, genuinely skew shape with ``n`` boxes, sorted.

    A connected shape with ``h`` rows and ``w`` columns has ``h + w - 1 <= n``,
    so the outer partitions are bounded and the list is finite."""
    found = set()
    for size in range(n + 1, n * n + 1):
        for mu in partitions(size):
            if mu[0] + len(mu) - 1 > n:
                continue
            for k in range(1, size - n + 1):
                if size - k != n:
                    continue
                for nu in partitions(k):
                    if len(nu) > len(mu) or any(b > a for a, b in zip(mu, nu)):
                        continue
                    sh = SkewShape(mu, nu)
                    if not sh.is_straight and is_connected(sh):
                        found.add(sh)
    return sorted(found, key=lambda sh: (sh.outer, sh.inner))


# -- standard fillings -------------------------------------------------------

def _addable(shape: SkewShape, filled: tuple[int, ...]):
    """Rows whose next box may receive the next label."""
    for r in range(shape.h):
        col = shape.inner_part(r) + filled[r]
        if col >= shape.outer[r]:
            continue
        if r > 0 and col >= shape.inner_part(r - 1) and col >= shape.inner_part(r - 1) + filled[r - 1]:
            continue
        yield r


def standard_fillings(shape: SkewShape) -> list[tuple[int, ...]]:
    """Standard fillings by 1..n, as label tuples in box order, sorted."""
    return list(_standard_fillings(shape))


@lru_cache(maxsize=None)
def _standard_fillings(shape: SkewShape):
    index = _box_index(shape)
    out = []
    labels = [0] * shape.n

    def rec(filled, k):
        if k > shape.n:
            out.append(tuple(labels))
            return
        for r in _addable(shape, filled):
            col = shape.inner_part(r) + filled[r]
            labels[index[(r, col)]] = k
            rec(filled[:r] + (filled[r] + 1,) + filled[r + 1:], k + 1)

    rec((0,) * shape.h, 1)
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def _lattice_count(shape: SkewShape, filled: tuple[int, ...]) -> int:
    if sum(filled) == shape.n:
        return 1
    return sum(_lattice_count(shape, filled[:r] + (filled[r] + 1,) + filled[r + 1:])
               for r in _addable(shape, filled))


def hook_length_count(outer: tuple[int, ...]) -> int:
    conj = [sum(1 for p in outer if p > c) for c in range(outer[0])]
    hooks = 1
    for r, row in enumerate(outer):
        for c in range(row):
            hooks *= (row - c - 1) + (conj[c] - r - 1) + 1
    return factorial(sum(outer)) // hooks


def count_standard_fillings(shape: SkewShape) -> int:
    """``f^lambda``: hook lengths for straight shapes, lattice paths otherwise."""
    if shape.is_straight:
        return hook_length_count(shape.outer)
    return _lattice_count(shape, (0,) * shape.h)


def is_standard_filling(shape: SkewShape, values) -> bool:
    index = _box_index(shape)
    for (r, c), k in index.items():
        right = index.get((r, c + 1))
        below = index.get((r + 1, c))
        if right is not None and values[right] <= values[k]:
            return False
        if below is not None and values[below] <= values[k]:
            return False
    return True


def signed_fillings(shape: SkewShape, parity: int | None = None) -> list[tuple[int, ...]]:
    """Standard fillings by one label from each pair ``+-1..+-n``.

    ``parity`` 0 or 1 keeps fillings with an even or odd number of
    negative entries.
    """
    n = shape.n
    syts = _standard_fillings(shape)
    out = []
    for signs in product((1, -1), repeat=n):
        if parity is not None and signs.count(-1) % 2 != parity:
            continue
        ranked = sorted(s * k for s, k in zip(signs, range(1, n + 1)))
        for q in syts:
            out.append(tuple(ranked[v - 1] for v in q))
    out.sort()
    return out


# -- placements and tableaux ------------------------------------------------

_MIRRORS = {
    ("D", "m"): (1, 1), ("D", "hbar"): (1, 1), ("D", "vbar"): (-1, -1), ("D", "box"): (0, 0),
    ("B", "m"): (1, 0), ("B", "hbar"): (1, 0), ("B", "vbar"): (0, -1),
}


@dataclass(frozen=True)
class Placement:
    kind: str
    variant: str
    base: int = 0

    def __post_init__(self):
        if (self.kind, self.variant) not in _MIRRORS:
            raise ValueError(f"no {self.variant!r} placement for type {self.kind}")
        if (self.variant == "m") != (self.base >= 1):
            raise ValueError(f"variant {self.variant!r} does not allow base {self.base}")

    @property
    def mirror(self) -> tuple[int, int]:
        return _MIRRORS[(self.kind, self.variant)]

    def content(self, box) -> int | Fraction:
        r, c = box
        return c - r + HALF if self.kind == "B" else c - r

    @property
    def offset(self) -> int | Fraction:
        return HALF if self.kind == "B" else 0


@dataclass(frozen=True)
class SignedTableau:
    shape: SkewShape
    placement: Placement
    half: tuple[int, ...]

    def __post_init__(self):
        half = tuple(self.half)
        if len(half) != self.shape.n or sorted(abs(v) for v in half) != list(range(1, self.shape.n + 1)):
            raise ValueError(f"half {half} does not use each of +-1..+-{self.shape.n} once")
        if self.placement.variant == "box":
            k = self.shape.lower_left
            half = half[:k] + (abs(half[k]),) + half[k + 1:]
        object.__setattr__(self, "half", half)

    @property
    def kind(self) -> str:
        return self.placement.kind

    @property
    def n(self) -> int:
        return self.shape.n

    def positive_boxes(self):
        """``(absolute box, label)`` for the half of nonnegative content."""
        h, base = self.shape.h, self.placement.base
        return [((r - h + 1, c + base), v) for (r, c), v in zip(self.shape.boxes, self.half)]

    def full_boxes(self) -> dict:
        """Absolute box -> tuple of labels, mirrored half included."""
        kr, kc = self.placement.mirror
        grid = {}
        for (r, c), v in self.positive_boxes():
            grid.setdefault((r, c), []).append(v)
            grid.setdefault((kr - r, kc - c), []).append(-v)
        return {b: tuple(sorted(vals)) for b, vals in grid.items()}

    @property
    def parity(self) -> int:
        return sum(1 for v in self.half if v < 0) % 2

    def content_vector(self) -> tuple:
        return content_vector(self)

    def derived_vector(self) -> tuple:
        return derived_vector(self)

    def is_standard(self) -> bool:
        return is_standard(self)

    def act(self, pi: SignedPermutation) -> SignedTableau:
        return act(self, pi)

    def sort_key(self):
        return (_VARIANT_ORDER[self.placement.variant], self.half)

    def render(self) -> str:
        grid = self.full_boxes()
        rows = [r for r, _ in grid]
        cols = [c for _, c in grid]
        cells = {}
        for b, vals in grid.items():
            cells[b] = f"+-{vals[1]}" if len(vals) == 2 else str(vals[0])
        width = max(len(s) for s in cells.values())
        lines = []
        for r in range(min(rows), max(rows) + 1):
            line = " ".join(cells.get((r, c), "." ).rjust(width) for c in range(min(cols), max(cols) + 1))
            lines.append(line.rstrip())
        return "\n".join(lines)

    def to_dict(self) -> dict:
        entries = []
        for (r, c), vals in sorted(self.full_boxes().items()):
            entries.append({"box": [r, c], "value": list(vals) if len(vals) == 2 else vals[0]})
        return {
            "kind": self.kind,
            "variant": self.placement.variant,
            "shape": {"outer": list(self.shape.outer), "inner": list(self.shape.inner)},
            "offset": str(self.placement.offset),
            "entries": entries,
        }


_VARIANT_ORDER = {"vbar": 0, "hbar": 1, "box": 2, "m": 3}


def content_vector(T: SignedTableau) -> tuple:
    """``(c_1, ..., c_n)``: content of the box holding ``+k``."""
    c = [0] * T.n
    for box, v in T.positive_boxes():
        val = T.placement.content(box)
        c[abs(v) - 1] = val if v > 0 else -val
    return tuple(c)


def derive(c, kind: str) -> tuple:
    """Derived vector: ``(c1 + c2, c2 - c1, ...)`` for D,
    ``(2 c1, c2 - c1, ...)`` for B."""
    first = 2 * c[0] if kind == "B" else c[0] + c[1]
    return (first,) + tuple(c[k + 1] - c[k] for k in range(len(c) - 1))


def derived_vector(T: SignedTableau) -> tuple:
    f = derive(content_vector(T), T.kind)
    return tuple(int(v) for v in f)


def _increasing(cells) -> bool:
    seq = [v for _, vals in sorted(cells) for v in vals]
    return all(a < b for a, b in zip(seq, seq[1:]))


def is_standard(T: SignedTableau) -> bool:
    rows, cols = {}, {}
    for (r, c), vals in T.full_boxes().items():
        if len(vals) == 2 and vals[0] != -vals[1]:
            # two different labels in one box only happens after the
            # halves collide, which is never standard
            return False
        rows.setdefault(r, []).append((c, vals))
        cols.setdefault(c, []).append((r, vals))
    return all(_increasing(v) for v in rows.values()) and all(_increasing(v) for v in cols.values())


def act(T: SignedTableau, pi: SignedPermutation) -> SignedTableau:
    """``T^pi``: every label ``i`` replaced by ``pi(i)``."""
    if pi.n != T.n:
        raise ValueError(f"rank mismatch: tableau has {T.n} labels, permutation {pi.n}")
    return SignedTableau(T.shape, T.placement, tuple(pi(v) for v in T.half))


# -- lifts --------------------------------------------------------------------

def variant_available(shape: SkewShape, variant: str, kind: str = "D") -> bool:
    """Which zero-diagonal placements exist for ``shape``.

    For D: vbar needs at least two rows of ``lambda`` meeting column 0
    (``h - ell >= 2``), hbar needs a bottom row of length ``>= 2``.
    Both always exist for B; box only for D.
    """
    if kind == "B":
        return variant in ("vbar", "hbar", "m")
    if variant == "vbar":
        return shape.h - shape.ell >= 2
    if variant == "hbar":
        return shape.last_row >= 2
    return variant in ("box", "m")


def _check_half(shape: SkewShape, half):
    half = tuple(half)
    if len(half) != shape.n or sorted(abs(v) for v in half) != list(range(1, shape.n + 1)):
        raise ValueError(f"{half} does not use each of +-1..+-{shape.n} once")
    if not is_standard_filling(shape, half):
        raise ValueError(f"{half} is not a standard filling of {shape}")
    return half


def zero_variant(shape: SkewShape, half, kind: str = "D") -> str:
    """Corner analysis deciding which zero placement makes ``half`` standard.

    With ``b`` the lower-left box, ``a`` the box above it and ``c`` the box
    to its right: ``|a| < |b| < |c|`` gives vbar, ``|a| > |b| > |c|`` hbar
    and ``|a| > |b| < |c|`` box; a missing neighbour drops its comparison.
    For B the sign of ``b`` decides: positive gives vbar, negative hbar.
    """
    h = shape.h
    b = half[shape.lower_left]
    if kind == "B":
        return "vbar" if b > 0 else "hbar"
    index = _box_index(shape)
    a = half[index[(h - 2, 0)]] if variant_available(shape, "vbar") else None
    c = half[index[(h - 1, 1)]] if variant_available(shape, "hbar") else None
    below_a = a is None or abs(a) > abs(b)
    below_c = c is None or abs(c) > abs(b)
    if a is not None and abs(a) < abs(b) and below_c:
        return "vbar"
    if c is not None and abs(c) < abs(b) and below_a:
        return "hbar"
    if below_a and below_c:
        return "box"
    raise AssertionError(f"no zero placement for {half}")


def lift_zero(shape: SkewShape, half, kind: str = "D") -> SignedTableau:
    """The unique standard tableau with zero-diagonal placement whose
    nonnegative half is ``half``."""
    half = _check_half(shape, half)
    return SignedTableau(shape, Placement(kind, zero_variant(shape, half, kind)), half)


def lift_m(shape: SkewShape, half, m: int, kind: str = "D") -> SignedTableau:
    """Place ``half`` with its lower-left box at content ``m`` (``m + 1/2``
    for B), mirror strictly to the southwest."""
    half = _check_half(shape, half)
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    return SignedTableau(shape, Placement(kind, "m", m), half)


# -- families -----------------------------------------------------------------

@dataclass(frozen=True)
class FamilySpec:
    """One of the sets ``T[lambda, m, +-]``, ``T[lambda, box]``,
    ``T[lambda, vbar, +-]``, ``T[lambda, hbar, +-]``, ``T[lambda, 0, +-]`` and
    their B analogues (no sign)."""
    kind: str
    shape: SkewShape
    variant: str
    sign: str | None = None
    m: int = 0

    def __post_init__(self):
        if self.kind not in ("B", "D"):
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.variant not in ("m", "box", "vbar", "hbar", "zero"):
            raise ValueError(f"unknown variant {self.variant!r}")
        if self.variant == "m" and self.m < 1:
            raise ValueError("variant 'm' needs m >= 1")
        if self.variant != "m" and self.m != 0:
            raise ValueError(f"variant {self.variant!r} takes no m")
        if self.kind == "B":
            if self.sign is not None:
                raise ValueError("B families carry no sign")
            if self.variant == "box":
                raise ValueError("B has no box variant")
        elif self.variant == "box":
            if self.sign is not None:
                raise ValueError("the box family carries no sign")
        elif self.sign not in ("+", "-"):
            raise ValueError(f"D variant {self.variant!r} needs sign '+' or '-'")
        if self.kind == "D" and self.shape.n < 2:
            raise ValueError("D families need n >= 2")

    @property
    def n(self) -> int:
        return self.shape.n

    @property
    def parity(self) -> int | None:
        if self.kind == "B":
            return None
        return {"+": 0, "-": 1, None: 0}[self.sign]

    def label(self) -> str:
        tag = f"{self.m}" if self.variant == "m" else self.variant
        sign = f",{self.sign}" if self.sign else ""
        return f"{self.kind}:T[{self.shape},{tag}{sign}]"


FAMILY_GUARD = 10**6


def enumerate_family(spec: FamilySpec) -> list[SignedTableau]:
    """All standard tableaux of the family, in canonical order
    (vbar, hbar, box blocks, each sorted by reading word)."""
    shape, kind = spec.shape, spec.kind
    if 2**shape.n * count_standard_fillings(shape) > FAMILY_GUARD:
        raise ValueError(f"{spec.label()} is too large to enumerate")
    halves = signed_fillings(shape, spec.parity)
    if spec.variant == "m":
        return [SignedTableau(shape, Placement(kind, "m", spec.m), h) for h in halves]
    wanted = {"zero": ("vbar", "hbar", "box")}.get(spec.variant, (spec.variant,))
    out = []
    if "box" in wanted and spec.parity == 1:
        # the shared box makes the sign of its label meaningless; the box
        # tableaux are listed once, from the even halves
        halves = sorted(set(halves) | set(signed_fillings(shape, 0)))
    for h in halves:
        variant = zero_variant(shape, h, kind)
        if variant not in wanted:
            continue
        if variant == "box" and sum(1 for v in h if v < 0) % 2:
            continue
        if variant != "box" and spec.parity is not None and sum(1 for v in h if v < 0) % 2 != spec.parity:
            continue
        out.append(SignedTableau(shape, Placement(kind, variant), h))
    out.sort(key=SignedTableau.sort_key)
    return out
