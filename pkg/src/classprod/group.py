"""Finite groups as immutable multiplication tables over integer indices."""

from __future__ import annotations

import os
from array import array
from collections import deque
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .errors import (
    GroupMismatch,
    InvalidPermutation,
    NoIdentity,
    NoInverse,
    NotAssociative,
    OrderExceeded,
)
from .perm import Permutation

DEFAULT_MAX_ORDER = 4096
MAX_ORDER_ENV = "CLASSPROD_MAX_ORDER"


def max_order_cap() -> int:
    """Effective order cap; CLASSPROD_MAX_ORDER overrides the default of 4096."""
    raw = os.environ.get(MAX_ORDER_ENV)
    if raw is None:
        return DEFAULT_MAX_ORDER
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"{MAX_ORDER_ENV} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise ValueError(f"{MAX_ORDER_ENV} must be positive, got {cap}")
    return cap


def _as_row(row) -> array:
    """One table row as a compact int array; 4 bytes per entry at any order."""
    if isinstance(row, np.ndarray):
        out = array("i")
        out.frombytes(np.ascontiguousarray(row, dtype=np.int32).tobytes())
        return out
    return array("i", row)


class FiniteGroup:
    """A finite group on indices 0..order-1, index 0 being the identity.

    The table is row major: table[a][b] is the product a*b. Elements are
    ordered by construction: breadth-first discovery order for generator
    input, canonicalized table order (identity moved to the front) for raw
    table input. Instances are treated as immutable; derived data such as
    conjugacy classes is cached on first use under _cache.
    """

    identity_index = 0

    __slots__ = (
        "order",
        "group_id",
        "table",
        "inverse_table",
        "element_names",
        "named_elements",
        "generator_indices",
        "_cache",
    )

    def __init__(
        self,
        table: Sequence[Sequence[int]],
        group_id: str,
        element_names: Optional[List[str]] = None,
        named_elements: Optional[Dict[str, int]] = None,
        generator_indices: Tuple[int, ...] = (),
        inverse_table: Optional[List[int]] = None,
    ):
        n = len(table)
        if n == 0:
            raise NoIdentity("empty multiplication table")
        rows = [_as_row(r) for r in table]
        if rows[0] != array("i", range(n)):
            raise NoIdentity(f"row 0 of {group_id!r} is not the identity row")
        for i in range(n):
            if rows[i][0] != i:
                raise NoIdentity(f"column 0 of {group_id!r} is not the identity column")
        self.order = n
        self.group_id = group_id
        self.table = rows
        if inverse_table is None:
            inverse_table = [0] * n
            for i, row in enumerate(rows):
                try:
                    inverse_table[i] = row.index(0)
                except ValueError:
                    raise NoInverse(i) from None
        self.inverse_table = list(inverse_table)
        if element_names is not None and len(element_names) != n:
            raise ValueError(f"expected {n} element names, got {len(element_names)}")
        self.element_names = element_names
        self.named_elements = dict(named_elements or {})
        self.generator_indices = tuple(generator_indices)
        self._cache: Dict[str, object] = {}

    # -- index-level arithmetic ------------------------------------------

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse_table[a]

    def conj(self, a: int, g: int) -> int:
        """a conjugated by g, that is g^-1 * a * g."""
        t = self.table
        return t[t[self.inverse_table[g]][a]][g]

    def comm(self, a: int, g: int) -> int:
        """The commutator a^-1 * a^g."""
        return self.table[self.inverse_table[a]][self.conj(a, g)]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            return self.power(self.inverse_table[a], -k)
        acc = 0
        while k:
            if k & 1:
                acc = self.table[acc][a]
            a = self.table[a][a]
            k >>= 1
        return acc

    def order_of(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self.table[x][a]
            k += 1
        return k

    # -- element accessors -------------------------------------------------

    def element(self, index: int) -> "Element":
        return Element(self, index)

    def elements(self) -> Iterator["Element"]:
        for i in range(self.order):
            yield Element(self, i)

    def name_of(self, index: int) -> str:
        if self.element_names is not None:
            return self.element_names[index]
        return str(index)

    def np_table(self) -> np.ndarray:
        cached = self._cache.get("np_table")
        if cached is None:
            cached = np.asarray(self.table, dtype=np.int32)
            self._cache["np_table"] = cached
        return cached

    def __repr__(self) -> str:
        return f"FiniteGroup({self.group_id!r}, order={self.order})"


class Element:
    """A group element; an index bound to the group that owns it."""

    __slots__ = ("group", "index")

    def __init__(self, group: FiniteGroup, index: int):
        if not 0 <= index < group.order:
            raise ValueError(f"index {index} outside 0..{group.order - 1} for {group.group_id!r}")
        self.group = group
        self.index = index

    @property
    def group_id(self) -> str:
        return self.group.group_id

    @property
    def name(self) -> str:
        return self.group.name_of(self.index)

    def __mul__(self, other: "Element") -> "Element":
        return mul(self, other)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Element)
            and self.index == other.index
            and self.group.group_id == other.group.group_id
        )

    def __hash__(self) -> int:
        return hash((self.group.group_id, self.index))

    def __repr__(self) -> str:
        return f"<{self.name} #{self.index} in {self.group_id}>"


def _require_same_group(a: Element, b: Element) -> None:
    if a.group.group_id != b.group.group_id:
        raise GroupMismatch(f"elements of different groups: {a.group_id!r} vs {b.group_id!r}")


def mul(a: Element, b: Element) -> Element:
    _require_same_group(a, b)
    return Element(a.group, a.group.mul(a.index, b.index))


def inv(a: Element) -> Element:
    return Element(a.group, a.group.inv(a.index))


def conjugate(a: Element, g: Element) -> Element:
    """g^-1 * a * g."""
    _require_same_group(a, g)
    return Element(a.group, a.group.conj(a.index, g.index))


def commutator(a: Element, g: Element) -> Element:
    """a^-1 * a^g, written [a, g]."""
    _require_same_group(a, g)
    return Element(a.group, a.group.comm(a.index, g.index))


def element_order(a: Element) -> int:
    return a.group.order_of(a.index)


# -- construction from generators ---------------------------------------


def close_from_generators(
    gens: Sequence[Permutation],
    group_id: str,
    max_order: Optional[int] = None,
) -> FiniteGroup:
    """Breadth-first closure of permutation generators into a full group.

    Discovery order is deterministic: the queue is seeded with the identity
    and neighbors are produced by right multiplication in generator-list
    order, so element indices depend only on the generator sequence.
    """
    if not gens:
        raise InvalidPermutation("at least one generator is required")
    degree = gens[0].degree
    for g in gens:
        if g.degree != degree:
            raise InvalidPermutation(f"generators disagree on degree: {g.degree} vs {degree}")
    cap = max_order_cap() if max_order is None else max_order

    identity = Permutation.identity(degree)
    elems: List[Permutation] = [identity]
    index: Dict[Tuple[int, ...], int] = {identity.images: 0}
    queue = deque([identity])
    while queue:
        p = queue.popleft()
        for g in gens:
            q = p * g
            if q.images not in index:
                if len(elems) >= cap:
                    raise OrderExceeded(
                        f"closure of {group_id!r} exceeds the order cap {cap}"
                    )
                index[q.images] = len(elems)
                elems.append(q)
                queue.append(q)

    table = [[index[(p * q).images] for q in elems] for p in elems]
    names = [p.cycle_string() for p in elems]
    gen_indices = tuple(index[g.images] for g in gens)
    return FiniteGroup(table, group_id, element_names=names, generator_indices=gen_indices)


# -- construction from a raw table --------------------------------------


def from_cayley_table(
    rows: Sequence[Sequence[int]],
    group_id: str,
    element_names: Optional[Sequence[str]] = None,
    max_order: Optional[int] = None,
) -> FiniteGroup:
    """Validate a raw multiplication table and wrap it as a FiniteGroup.

    Checks, in order: shape and entry range, a two-sided identity, full
    associativity (the cubic loop, vectorized per row block), and two-sided
    inverses. Elements are then relabeled so the identity is index 0; other
    elements keep their relative order.
    """
    n = len(rows)
    if n == 0:
        raise NoIdentity("empty multiplication table")
    cap = max_order_cap() if max_order is None else max_order
    if n > cap:
        raise OrderExceeded(f"table of order {n} exceeds the order cap {cap}")
    table = [list(r) for r in rows]
    for i, row in enumerate(table):
        if len(row) != n:
            raise ValueError(f"row {i} has length {len(row)}, expected {n}")
        for v in row:
            if not isinstance(v, int) or not 0 <= v < n:
                raise ValueError(f"row {i} contains entry {v!r} outside 0..{n - 1}")

    ident_row = list(range(n))
    e = None
    for i in range(n):
        if table[i] == ident_row and all(table[x][i] == x for x in range(n)):
            e = i
            break
    if e is None:
        raise NoIdentity("no two-sided identity element")

    t = np.asarray(table, dtype=np.int32)
    for a in range(n):
        left = t[t[a]]       # (a*b)*c over all b, c
        right = t[a][t]      # a*(b*c)
        if not np.array_equal(left, right):
            b, c = map(int, np.argwhere(left != right)[0])
            raise NotAssociative(a, b, c)

    for x in range(n):
        row = table[x]
        try:
            y = row.index(e)
        except ValueError:
            raise NoInverse(x) from None
        if table[y][x] != e:
            raise NoInverse(x)

    names = list(element_names) if element_names is not None else None
    if e != 0:
        old_order = [e] + [i for i in range(n) if i != e]
        new_of_old = [0] * n
        for new, old in enumerate(old_order):
            new_of_old[old] = new
        table = [
            [new_of_old[table[a][b]] for b in old_order] for a in old_order
        ]
        if names is not None:
            names = [names[old] for old in old_order]
    return FiniteGroup(table, group_id, element_names=names)


def cayley_rows(group: FiniteGroup) -> List[List[int]]:
    """A fresh copy of the multiplication table, suitable for re-import."""
    return [list(row) for row in group.table]


# -- file formats --------------------------------------------------------


def load_gens(path: str) -> Tuple[int, List[Permutation]]:
    """Read a .gens file: a 'degree d' line, then 'gen (cycles)' lines.

    Lines may carry '#' comments. Cycles are 1-based and disjoint.
    """
    degree: Optional[int] = None
    gens: List[Permutation] = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if line.startswith("degree"):
                if degree is not None:
                    raise ValueError(f"{path}:{lineno}: duplicate degree line")
                parts = line.split()
                if len(parts) != 2 or not parts[1].isdigit() or int(parts[1]) < 1:
                    raise ValueError(f"{path}:{lineno}: malformed degree line {line!r}")
                degree = int(parts[1])
            elif line.startswith("gen"):
                if degree is None:
                    raise ValueError(f"{path}:{lineno}: gen line before degree line")
                try:
                    gens.append(Permutation.parse(degree, line[3:].strip()))
                except InvalidPermutation as exc:
                    raise ValueError(f"{path}:{lineno}: {exc}") from exc
            else:
                raise ValueError(f"{path}:{lineno}: unrecognized line {line!r}")
    if degree is None:
        raise ValueError(f"{path}: missing degree line")
    if not gens:
        raise ValueError(f"{path}: no generators")
    return degree, gens


def load_cayley(path: str) -> List[List[int]]:
    """Read a .cayley file: first line the order n, then n rows of n indices."""
    with open(path, "r", encoding="utf-8") as fh:
        lines = [ln.split("#", 1)[0].strip() for ln in fh]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError(f"{path}: empty file")
    try:
        n = int(lines[0])
    except ValueError:
        raise ValueError(f"{path}: first line must be the order, got {lines[0]!r}") from None
    if n < 1 or len(lines) != n + 1:
        raise ValueError(f"{path}: expected {n} table rows, found {len(lines) - 1}")
    rows = []
    for lineno, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        try:
            row = [int(p) for p in parts]
        except ValueError:
            raise ValueError(f"{path}:{lineno}: non-integer table entry") from None
        if len(row) != n:
            raise ValueError(f"{path}:{lineno}: expected {n} entries, found {len(row)}")
        rows.append(row)
    return rows


def save_cayley(group: FiniteGroup, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"{group.order}\n")
        for row in group.table:
            fh.write(" ".join(str(v) for v in row) + "\n")
