"""Conjugacy classes, class products, and subgroup structure predicates.

Everything here works on one group at a time; mixing groups raises
GroupMismatch. Derived data (classes, centralizers, closures, verdicts of the
structure predicates) is cached on the owning FiniteGroup. The caches are
idempotent pure computations, so a duplicated computation under concurrent
access is harmless.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .errors import GroupMismatch, NotInvariant, NotNormal, TrivialGroup
from .group import Element, FiniteGroup


class ElementSet:
    """An immutable subset of a group's elements, stored as a bitmask."""

    __slots__ = ("group", "mask")

    def __init__(self, group: FiniteGroup, mask: int = 0):
        if mask < 0 or mask >> group.order:
            raise ValueError(f"mask has bits outside 0..{group.order - 1}")
        self.group = group
        self.mask = mask

    @classmethod
    def from_indices(cls, group: FiniteGroup, indices) -> "ElementSet":
        mask = 0
        n = group.order
        for i in indices:
            if not 0 <= i < n:
                raise ValueError(f"index {i} outside 0..{n - 1}")
            mask |= 1 << i
        return cls(group, mask)

    @classmethod
    def full(cls, group: FiniteGroup) -> "ElementSet":
        return cls(group, (1 << group.order) - 1)

    @property
    def group_id(self) -> str:
        return self.group.group_id

    @property
    def members(self) -> Tuple[int, ...]:
        return tuple(self)

    def member_elements(self) -> List[Element]:
        return [Element(self.group, i) for i in self]

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[int]:
        m = self.mask
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    def __contains__(self, item) -> bool:
        i = item.index if isinstance(item, Element) else item
        return 0 <= i < self.group.order and (self.mask >> i) & 1 == 1

    def _require_same(self, other: "ElementSet") -> None:
        if self.group.group_id != other.group.group_id:
            raise GroupMismatch(
                f"sets of different groups: {self.group_id!r} vs {other.group_id!r}"
            )

    def __or__(self, other: "ElementSet") -> "ElementSet":
        self._require_same(other)
        return ElementSet(self.group, self.mask | other.mask)

    def __and__(self, other: "ElementSet") -> "ElementSet":
        self._require_same(other)
        return ElementSet(self.group, self.mask & other.mask)

    def __sub__(self, other: "ElementSet") -> "ElementSet":
        self._require_same(other)
        return ElementSet(self.group, self.mask & ~other.mask)

    def issubset(self, other: "ElementSet") -> bool:
        self._require_same(other)
        return self.mask & ~other.mask == 0

    def isdisjoint(self, other: "ElementSet") -> bool:
        self._require_same(other)
        return self.mask & other.mask == 0

    def conjugate_by(self, g: int) -> "ElementSet":
        grp = self.group
        mask = 0
        for x in self:
            mask |= 1 << grp.conj(x, g)
        return ElementSet(grp, mask)

    def translate_left(self, c: int) -> "ElementSet":
        """The set {c*s : s in this set}."""
        row = self.group.table[c]
        mask = 0
        for x in self:
            mask |= 1 << row[x]
        return ElementSet(self.group, mask)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ElementSet)
            and self.mask == other.mask
            and self.group.group_id == other.group.group_id
        )

    def __hash__(self) -> int:
        return hash((self.group.group_id, self.mask))

    def __repr__(self) -> str:
        shown = ",".join(str(i) for i in list(self)[:8])
        tail = ",..." if len(self) > 8 else ""
        return f"ElementSet({self.group_id}, {{{shown}{tail}}})"


@dataclass(frozen=True)
class ConjugacyClass:
    """A conjugacy class with its canonical (least index) representative."""

    representative: Element
    carrier: ElementSet

    @property
    def size(self) -> int:
        return len(self.carrier)

    def __repr__(self) -> str:
        return f"ConjugacyClass({self.representative.name}, size={self.size})"


@dataclass(frozen=True)
class ClassDecomposition:
    """A conjugation-invariant set split into the classes it contains."""

    source: ElementSet
    classes: Tuple[ConjugacyClass, ...]

    @property
    def eta(self) -> int:
        return len(self.classes)


@dataclass(frozen=True)
class QuotientMap:
    """A quotient group together with the projection map and its kernel."""

    source: FiniteGroup
    quotient: FiniteGroup
    projection: Tuple[int, ...]
    kernel: ElementSet

    def project(self, a: Element) -> Element:
        if a.group.group_id != self.source.group_id:
            raise GroupMismatch(
                f"element of {a.group_id!r} projected along {self.source.group_id!r}"
            )
        return Element(self.quotient, self.projection[a.index])


# -- class table ---------------------------------------------------------


def _class_data(group: FiniteGroup) -> Tuple[Tuple[ConjugacyClass, ...], List[int]]:
    cached = group._cache.get("class_data")
    if cached is not None:
        return cached
    n = group.order
    table = group.table
    invt = group.inverse_table
    class_id = [-1] * n
    classes: List[ConjugacyClass] = []
    for i in range(n):
        if class_id[i] >= 0:
            continue
        row_of = table
        orbit = {row_of[row_of[invt[g]][i]][g] for g in range(n)}
        cid = len(classes)
        mask = 0
        for x in orbit:
            class_id[x] = cid
            mask |= 1 << x
        classes.append(ConjugacyClass(Element(group, i), ElementSet(group, mask)))
    data = (tuple(classes), class_id)
    group._cache["class_data"] = data
    return data


def conjugacy_classes(group: FiniteGroup) -> Tuple[ConjugacyClass, ...]:
    """All classes, ordered by their least representatives."""
    return _class_data(group)[0]


def class_id_of(a: Element) -> int:
    return _class_data(a.group)[1][a.index]


def conjugacy_class(a: Element) -> ConjugacyClass:
    classes, class_id = _class_data(a.group)
    return classes[class_id[a.index]]


def centralizer(a: Element) -> ElementSet:
    """All g with a^g = a."""
    return ElementSet(a.group, _centralizer_masks(a.group)[a.index])


def _centralizer_masks(group: FiniteGroup) -> List[int]:
    cached = group._cache.get("centralizer_masks")
    if cached is not None:
        return cached
    n = group.order
    table = group.table
    invt = group.inverse_table
    masks = [0] * n
    for a in range(n):
        m = 0
        for g in range(n):
            if table[table[invt[g]][a]][g] == a:
                m |= 1 << g
        masks[a] = m
    group._cache["centralizer_masks"] = masks
    return masks


def centralizer_buckets(group: FiniteGroup) -> Dict[int, Tuple[int, ...]]:
    """Group elements by their exact centralizer mask."""
    cached = group._cache.get("centralizer_buckets")
    if cached is not None:
        return cached
    buckets: Dict[int, List[int]] = {}
    for i, m in enumerate(_centralizer_masks(group)):
        buckets.setdefault(m, []).append(i)
    out = {m: tuple(v) for m, v in buckets.items()}
    group._cache["centralizer_buckets"] = out
    return out


def commutator_set(a: Element) -> ElementSet:
    """[a, G] = {a^-1 * a^g : g in G}."""
    group = a.group
    memo: Dict[int, int] = group._cache.setdefault("commutator_masks", {})
    mask = memo.get(a.index)
    if mask is None:
        table = group.table
        invt = group.inverse_table
        i = a.index
        ai = invt[i]
        mask = 0
        for g in range(group.order):
            mask |= 1 << table[ai][table[table[invt[g]][i]][g]]
        memo[a.index] = mask
    return ElementSet(group, mask)


def center(group: FiniteGroup) -> ElementSet:
    """Elements commuting with everything; computed by a direct loop."""
    mask = group._cache.get("center_mask")
    if mask is None:
        n = group.order
        table = group.table
        mask = 0
        for z in range(n):
            row = table[z]
            if all(row[g] == table[g][z] for g in range(n)):
                mask |= 1 << z
        group._cache["center_mask"] = mask
    return ElementSet(group, mask)


def is_abelian(group: FiniteGroup) -> bool:
    return len(center(group)) == group.order


# -- set products and decomposition --------------------------------------


def set_product(x: ElementSet, y: ElementSet) -> ElementSet:
    """The product set {u*v : u in x, v in y}."""
    x._require_same(y)
    table = x.group.table
    ys = list(y)
    mask = 0
    for u in x:
        row = table[u]
        for v in ys:
            mask |= 1 << row[v]
    return ElementSet(x.group, mask)


def class_product(a: Element, b: Element) -> ElementSet:
    """a^G * b^G, memoized per ordered pair of classes."""
    if a.group.group_id != b.group.group_id:
        raise GroupMismatch(f"elements of different groups: {a.group_id!r} vs {b.group_id!r}")
    group = a.group
    classes, class_id = _class_data(group)
    key = (class_id[a.index], class_id[b.index])
    memo: Dict[Tuple[int, int], int] = group._cache.setdefault("class_products", {})
    mask = memo.get(key)
    if mask is None:
        mask = set_product(classes[key[0]].carrier, classes[key[1]].carrier).mask
        memo[key] = mask
    return ElementSet(group, mask)


def decompose(x: ElementSet) -> ClassDecomposition:
    """Split a conjugation-invariant set into its conjugacy classes.

    Raises NotInvariant with a witness pair (element, conjugator) if some
    member has a conjugate outside the set.
    """
    group = x.group
    classes, class_id = _class_data(group)
    seen: Dict[int, None] = {}
    for i in x:
        cid = class_id[i]
        if cid in seen:
            continue
        if not classes[cid].carrier.issubset(x):
            for g in range(group.order):
                if group.conj(i, g) not in x:
                    raise NotInvariant(i, g)
        seen[cid] = None
    parts = tuple(sorted((classes[cid] for cid in seen), key=lambda c: c.representative.index))
    return ClassDecomposition(source=x, classes=parts)


def eta(x: ElementSet) -> int:
    """Number of conjugacy classes a G-invariant set splits into."""
    return decompose(x).eta


def eta_of_product(a: Element, b: Element) -> int:
    return decompose(class_product(a, b)).eta


# -- subgroup predicates --------------------------------------------------


def is_subgroup(s: ElementSet) -> bool:
    """Nonempty and closed under the group product."""
    if len(s) == 0:
        return False
    memo: Dict[int, bool] = s.group._cache.setdefault("is_subgroup_memo", {})
    verdict = memo.get(s.mask)
    if verdict is None:
        verdict = True
        mask = s.mask
        table = s.group.table
        ms = list(s)
        for u in ms:
            row = table[u]
            for v in ms:
                if not (mask >> row[v]) & 1:
                    verdict = False
                    break
            if not verdict:
                break
        memo[s.mask] = verdict
    return verdict


def is_normal(s: ElementSet) -> bool:
    """A subgroup fixed by conjugation; checked by conjugating every member."""
    if not is_subgroup(s):
        return False
    group = s.group
    memo: Dict[int, bool] = group._cache.setdefault("is_normal_memo", {})
    verdict = memo.get(s.mask)
    if verdict is None:
        verdict = True
        mask = s.mask
        for g in range(group.order):
            for x in s:
                if not (mask >> group.conj(x, g)) & 1:
                    verdict = False
                    break
            if not verdict:
                break
        memo[s.mask] = verdict
    return verdict


def subgroup_generated(s: ElementSet) -> ElementSet:
    """Closure of a set under products; the empty set generates the trivial group."""
    group = s.group
    table = group.table
    gens = list(s)
    mask = 1
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            row = table[x]
            for g in gens:
                y = row[g]
                if not (mask >> y) & 1:
                    mask |= 1 << y
                    nxt.append(y)
        frontier = nxt
    return ElementSet(group, mask)


def normal_closure(a: Element) -> ElementSet:
    """Least normal subgroup containing a: the closure of a's class."""
    group = a.group
    memo: Dict[int, int] = group._cache.setdefault("normal_closures", {})
    cid = class_id_of(a)
    mask = memo.get(cid)
    if mask is None:
        mask = subgroup_generated(conjugacy_class(a).carrier).mask
        memo[cid] = mask
    return ElementSet(group, mask)


def normal_subgroups(group: FiniteGroup) -> Tuple[ElementSet, ...]:
    """All normal subgroups: joins of normal closures of class representatives."""
    cached = group._cache.get("normal_subgroups")
    if cached is None:
        closures = {1}
        for cls in conjugacy_classes(group):
            closures.add(normal_closure(cls.representative).mask)
        found = set(closures)
        worklist = list(closures)
        while worklist:
            m = worklist.pop()
            for other in list(found):
                joined = subgroup_generated(ElementSet(group, m | other)).mask
                if joined not in found:
                    found.add(joined)
                    worklist.append(joined)
        cached = tuple(
            sorted(found, key=lambda m: (m.bit_count(), ElementSet(group, m).members))
        )
        group._cache["normal_subgroups"] = cached
    return tuple(ElementSet(group, m) for m in cached)


def minimal_normal_subgroups(group: FiniteGroup) -> List[ElementSet]:
    """Nontrivial normal subgroups minimal under inclusion.

    Sorted by (order, member tuple). Raises TrivialGroup on the one-element
    group, which has none.
    """
    if group.order == 1:
        raise TrivialGroup("the trivial group has no minimal normal subgroups")
    cached = group._cache.get("minimal_normals")
    if cached is None:
        closures = set()
        for cls in conjugacy_classes(group):
            if cls.representative.index != 0:
                closures.add(normal_closure(cls.representative).mask)
        minimal = [
            m
            for m in closures
            if not any(other != m and other & ~m == 0 for other in closures)
        ]
        cached = tuple(
            sorted(minimal, key=lambda m: (m.bit_count(), ElementSet(group, m).members))
        )
        group._cache["minimal_normals"] = cached
    return [ElementSet(group, m) for m in cached]


# -- quotients -------------------------------------------------------------


def quotient(group: FiniteGroup, n: ElementSet) -> QuotientMap:
    """G/N for a normal subgroup N, cosets ordered by least member.

    The identity coset is N itself and lands at index 0.
    """
    if n.group.group_id != group.group_id:
        raise GroupMismatch(f"subgroup of {n.group_id!r} used with {group.group_id!r}")
    if not is_normal(n):
        raise NotNormal(f"not a normal subgroup of {group.group_id!r}: {sorted(n)}")
    table = group.table
    members = list(n)
    coset_id = [-1] * group.order
    reps: List[int] = []
    for x in range(group.order):
        if coset_id[x] >= 0:
            continue
        cid = len(reps)
        reps.append(x)
        row = table[x]
        for s in members:
            coset_id[row[s]] = cid
    k = len(reps)
    qtable = [[coset_id[table[reps[i]][reps[j]]] for j in range(k)] for i in range(k)]
    names = [f"[{group.name_of(r)}]" for r in reps]
    smallest = members[1] if len(members) > 1 else 0
    qid = f"{group.group_id}/N{len(members)}m{smallest}"
    q = FiniteGroup(qtable, qid, element_names=names)
    return QuotientMap(source=group, quotient=q, projection=tuple(coset_id), kernel=n)


# -- structure predicates --------------------------------------------------


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def is_prime_power(n: int) -> bool:
    """Whether n = p^k for a prime p, k >= 1; n = 1 counts (trivial p-group)."""
    if n < 2:
        return n == 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            return n == 1
        p += 1
    return True


def is_nilpotent(group: FiniteGroup) -> bool:
    """Whether the lower central series reaches the trivial subgroup."""
    cached = group._cache.get("is_nilpotent")
    if cached is None:
        n = group.order
        current = ElementSet.full(group)
        while True:
            gens = set()
            for x in current:
                for g in range(n):
                    gens.add(group.comm(x, g))
            nxt = subgroup_generated(ElementSet.from_indices(group, gens))
            if len(nxt) == 1:
                cached = True
                break
            if nxt.mask == current.mask:
                cached = False
                break
            current = nxt
        group._cache["is_nilpotent"] = cached
    return cached


def is_supersolvable(group: FiniteGroup, tie_break: Optional[random.Random] = None) -> bool:
    """Whether one chief series (hence any) has all factors of prime order.

    The series is built by repeatedly taking a minimal normal subgroup of the
    current quotient; the canonical choice is the least one by (order,
    members). Passing a random tie_break picks among the minimal candidates
    instead, which must not change the verdict.
    """
    if tie_break is None:
        cached = group._cache.get("is_supersolvable")
        if cached is not None:
            return cached
    current = group
    verdict = True
    while current.order > 1:
        candidates = minimal_normal_subgroups(current)
        chosen = tie_break.choice(candidates) if tie_break is not None else candidates[0]
        if not _is_prime(len(chosen)):
            verdict = False
            break
        current = quotient(current, chosen).quotient
    if tie_break is None:
        group._cache["is_supersolvable"] = verdict
    return verdict


def is_simple_nonabelian(group: FiniteGroup) -> bool:
    """Nonabelian with no proper nontrivial normal subgroup.

    Every normal closure of a nonidentity element must be the whole group;
    closures are constant on classes, so representatives suffice.
    """
    cached = group._cache.get("is_simple_nonabelian")
    if cached is None:
        if is_abelian(group):
            cached = False
        else:
            full = (1 << group.order) - 1
            cached = all(
                normal_closure(cls.representative).mask == full
                for cls in conjugacy_classes(group)
                if cls.representative.index != 0
            )
        group._cache["is_simple_nonabelian"] = cached
    return cached
