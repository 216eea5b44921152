"""Dense symbolic tensor fields on flat R^n.

Components are Poly values stored in a flat row-major list; a tensor of
valence (r, s) on dimension n has n**(r+s) entries, contravariant slots
first.  The ambient space is flat and the metric diagonal with +-1
entries, so covariant differentiation is the plain partial derivative
and raising/lowering at most flips component signs.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Callable, List, Sequence, Tuple

from .symalg import Poly, VarId, parse_poly


class TensorError(Exception):
    pass


class SlotKindMismatch(TensorError):
    """Raised when an index operation pairs slots of the wrong kind."""


@dataclass(frozen=True)
class Metric:
    """Constant diagonal metric on R^n; default Euclidean."""

    dimension: int
    signature: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.dimension < 2:
            raise TensorError("dimension must be >= 2")
        sig = self.signature or (1,) * self.dimension
        if len(sig) != self.dimension or any(s not in (1, -1) for s in sig):
            raise TensorError("signature must consist of +-1 entries, one per dimension")
        object.__setattr__(self, "signature", tuple(sig))


class TensorField:
    """Dense tensor field with Poly components.

    Index tuples are 0-based; slot k of an index tuple addresses the
    k-th contravariant slot for k < r and covariant slot k - r after.
    """

    __slots__ = ("n", "r", "s", "components")

    def __init__(self, n: int, valence: Tuple[int, int], components: Sequence[Poly]):
        r, s = valence
        if len(components) != n ** (r + s):
            raise TensorError(f"expected {n ** (r + s)} components, got {len(components)}")
        self.n = n
        self.r = r
        self.s = s
        self.components = list(components)

    # ---- construction --------------------------------------------------

    @classmethod
    def zero(cls, n: int, valence: Tuple[int, int]) -> "TensorField":
        r, s = valence
        return cls(n, valence, [Poly.zero()] * n ** (r + s))

    @classmethod
    def from_function(cls, n: int, valence: Tuple[int, int],
                      f: Callable[[Tuple[int, ...]], Poly]) -> "TensorField":
        r, s = valence
        return cls(n, valence, [f(idx) for idx in itertools.product(range(n), repeat=r + s)])

    @classmethod
    def identity_operator(cls, n: int) -> "TensorField":
        return cls.from_function(n, (1, 1),
                                 lambda ij: Poly.const(1 if ij[0] == ij[1] else 0))

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence[Poly]], valence: Tuple[int, int] = (0, 2)) -> "TensorField":
        n = len(rows)
        flat = [Poly._coerce(x) for row in rows for x in row]
        return cls(n, valence, flat)

    # ---- indexing ------------------------------------------------------

    @property
    def valence(self) -> Tuple[int, int]:
        return (self.r, self.s)

    def _offset(self, idx: Tuple[int, ...]) -> int:
        off = 0
        for i in idx:
            off = off * self.n + i
        return off

    def __getitem__(self, idx) -> Poly:
        if isinstance(idx, int):
            idx = (idx,)
        return self.components[self._offset(idx)]

    def indices(self):
        return itertools.product(range(self.n), repeat=self.r + self.s)

    def __eq__(self, other):
        return (isinstance(other, TensorField) and self.n == other.n
                and self.valence == other.valence and self.components == other.components)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def map(self, f: Callable[[Poly], Poly]) -> "TensorField":
        return TensorField(self.n, self.valence, [f(c) for c in self.components])

    def __add__(self, other: "TensorField") -> "TensorField":
        if self.valence != other.valence or self.n != other.n:
            raise TensorError("tensor shape mismatch in addition")
        return TensorField(self.n, self.valence,
                           [a + b for a, b in zip(self.components, other.components)])

    def __sub__(self, other: "TensorField") -> "TensorField":
        return self + other.map(lambda c: -c)

    def scale(self, q) -> "TensorField":
        return self.map(lambda c: c * q)

    def matrix(self) -> List[List[Poly]]:
        """Components of a 2-index tensor as nested lists."""
        if self.r + self.s != 2:
            raise TensorError("matrix() requires a 2-index tensor")
        return [[self[(i, j)] for j in range(self.n)] for i in range(self.n)]


# ---- operations --------------------------------------------------------


def partial_derivative(t: TensorField) -> TensorField:
    """Flat covariant derivative; appends one covariant slot (last)."""
    n = t.n

    def comp(idx):
        return t[idx[:-1]].diff(VarId("x", idx[-1] + 1))

    return TensorField.from_function(n, (t.r, t.s + 1), comp)


def raise_lower(t: TensorField, slot: int, direction: str, g: Metric) -> TensorField:
    """Move one slot up or down with the diagonal metric.

    `slot` counts within the kind being converted (0-based inside the
    covariant block for "up", inside the contravariant block for
    "down").  A raised slot lands at the end of the contravariant
    block; a lowered slot lands at the start of the covariant block.
    With a diagonal metric the component values change at most by sign.
    """
    if g.dimension != t.n:
        raise TensorError("metric dimension mismatch")
    if direction not in ("up", "down"):
        raise TensorError("direction must be 'up' or 'down'")
    if direction == "up":
        if not 0 <= slot < t.s:
            raise SlotKindMismatch(f"no covariant slot {slot}")
        new_valence = (t.r + 1, t.s - 1)

        def comp(idx):
            moved = idx[t.r]  # last contravariant slot of the output
            up = idx[:t.r]
            down = idx[t.r + 1:]
            src = up + down[:slot] + (moved,) + down[slot:]
            return t[src] * g.signature[moved]
    else:
        if not 0 <= slot < t.r:
            raise SlotKindMismatch(f"no contravariant slot {slot}")
        new_valence = (t.r - 1, t.s + 1)

        def comp(idx):
            moved = idx[t.r - 1]  # first covariant slot of the output
            up = idx[:t.r - 1]
            down = idx[t.r:]
            src = up[:slot] + (moved,) + up[slot:] + down
            return t[src] * g.signature[moved]

    return TensorField.from_function(t.n, new_valence, comp)


def contract(t: TensorField, slot_up: int, slot_down: int) -> TensorField:
    """Trace over one contravariant and one covariant slot."""
    if not 0 <= slot_up < t.r:
        raise SlotKindMismatch(f"slot {slot_up} is not contravariant")
    if not t.r <= slot_down < t.r + t.s:
        raise SlotKindMismatch(f"slot {slot_down} is not covariant")
    n = t.n

    def comp(idx):
        total = Poly.zero()
        for a in range(n):
            full = list(idx)
            full.insert(slot_up, a)
            full.insert(slot_down, a)
            total = total + t[tuple(full)]
        return total

    return TensorField.from_function(n, (t.r - 1, t.s - 1), comp)


def tensor_product(a: TensorField, b: TensorField) -> TensorField:
    """Outer product; slots of `a` precede slots of `b` within each kind."""
    if a.n != b.n:
        raise TensorError("dimension mismatch in tensor product")
    n = a.n
    valence = (a.r + b.r, a.s + b.s)

    def comp(idx):
        up = idx[:a.r + b.r]
        down = idx[a.r + b.r:]
        ia = up[:a.r] + down[:a.s]
        ib = up[a.r:] + down[a.s:]
        return a[ia] * b[ib]

    return TensorField.from_function(n, valence, comp)


def sym_antisym(t: TensorField, slots: Sequence[int], mode: str) -> TensorField:
    """Symmetrize or antisymmetrize over slots of one kind (1/k! weight)."""
    slots = list(slots)
    if mode not in ("sym", "antisym"):
        raise TensorError("mode must be 'sym' or 'antisym'")
    kinds = {("up" if s < t.r else "down") for s in slots}
    if len(kinds) > 1:
        raise SlotKindMismatch("cannot mix contravariant and covariant slots")
    perms = list(itertools.permutations(range(len(slots))))
    from fractions import Fraction
    weight = Fraction(1, len(perms))

    def comp(idx):
        total = Poly.zero()
        for perm in perms:
            src = list(idx)
            for pos, s in enumerate(slots):
                src[s] = idx[slots[perm[pos]]]
            term = t[tuple(src)]
            if mode == "antisym" and _parity(perm) < 0:
                term = -term
            total = total + term
        return total * weight

    return TensorField.from_function(t.n, t.valence, comp)


def _parity(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def hessian_operator(f: Poly, n: int) -> TensorField:
    """(1,1)-operator field with components d2 f / dx_i dx_j."""
    if f.has_negative_exponents():
        raise TensorError("hessian operator requires a polynomial generator")
    grads = [f.diff(VarId("x", i + 1)) for i in range(n)]
    return TensorField.from_function(
        n, (1, 1), lambda ij: grads[ij[0]].diff(VarId("x", ij[1] + 1)))


# ---- serialization -----------------------------------------------------


def to_json(t: TensorField) -> str:
    """Serialize as nested JSON arrays of poly text, contravariant slots
    first, row-major."""

    def nest(prefix):
        if len(prefix) == t.r + t.s:
            return str(t[tuple(prefix)])
        return [nest(prefix + (i,)) for i in range(t.n)]

    payload = {"dimension": t.n, "valence": [t.r, t.s], "components": nest(())}
    return json.dumps(payload, sort_keys=True)


def from_json(text: str) -> TensorField:
    payload = json.loads(text)
    n = payload["dimension"]
    r, s = payload["valence"]
    flat: List[Poly] = []

    def walk(node, depth):
        if depth == r + s:
            flat.append(parse_poly(node) if node != "0" else Poly.zero())
        else:
            for child in node:
                walk(child, depth + 1)

    walk(payload["components"], 0)
    return TensorField(n, (r, s), flat)
