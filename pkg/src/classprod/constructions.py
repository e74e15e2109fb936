"""Builders for the stock groups and the group-spec mini-language.

Spec strings: cyclic:N, dihedral:N, sym:N, alt:N, q8, es:P, es:P^K,
prod(SPEC,SPEC,...), file:PATH. The canonical string of a spec doubles as the
group_id of the group it builds.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .errors import EvenN, NotOddPrime, OrderExceeded
from .group import (
    Element,
    FiniteGroup,
    close_from_generators,
    from_cayley_table,
    load_cayley,
    load_gens,
    max_order_cap,
)
from .perm import Permutation


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# -- permutation-model families -------------------------------------------


def cyclic(n: int, max_order: Optional[int] = None) -> FiniteGroup:
    """Cyclic group of order n, generated by the n-cycle (1 2 ... n)."""
    if n < 1:
        raise ValueError(f"cyclic order must be >= 1, got {n}")
    if n == 1:
        gens = [Permutation.identity(1)]
    else:
        gens = [Permutation.from_cycles(n, [tuple(range(1, n + 1))])]
    return close_from_generators(gens, f"cyclic:{n}", max_order=max_order)


def dihedral(n: int, max_order: Optional[int] = None) -> FiniteGroup:
    """Dihedral group of order 2n: rotation (1..n) plus the reflection fixing 1."""
    if n < 1:
        raise ValueError(f"dihedral parameter must be >= 1, got {n}")
    if n == 1:
        gens = [Permutation.from_cycles(2, [(1, 2)])]
    elif n == 2:
        gens = [Permutation.from_cycles(4, [(1, 2)]), Permutation.from_cycles(4, [(3, 4)])]
    else:
        rot = Permutation.from_cycles(n, [tuple(range(1, n + 1))])
        refl = Permutation([1] + [n + 2 - i for i in range(2, n + 1)])
        gens = [rot, refl]
    return close_from_generators(gens, f"dihedral:{n}", max_order=max_order)


def symmetric(n: int, max_order: Optional[int] = None) -> FiniteGroup:
    """Symmetric group on n points; n! must stay under the order cap."""
    if n < 1:
        raise ValueError(f"symmetric degree must be >= 1, got {n}")
    cap = max_order_cap() if max_order is None else max_order
    if math.factorial(n) > cap:
        raise OrderExceeded(f"sym:{n} has order {math.factorial(n)}, over the cap {cap}")
    if n == 1:
        gens = [Permutation.identity(1)]
    elif n == 2:
        gens = [Permutation.from_cycles(2, [(1, 2)])]
    else:
        gens = [
            Permutation.from_cycles(n, [(1, 2)]),
            Permutation.from_cycles(n, [tuple(range(1, n + 1))]),
        ]
    return close_from_generators(gens, f"sym:{n}", max_order=max_order)


def alternating(n: int, max_order: Optional[int] = None) -> FiniteGroup:
    """Alternating group on n points, generated by consecutive 3-cycles."""
    if n < 1:
        raise ValueError(f"alternating degree must be >= 1, got {n}")
    order = math.factorial(n) // 2 if n > 1 else 1
    cap = max_order_cap() if max_order is None else max_order
    if order > cap:
        raise OrderExceeded(f"alt:{n} has order {order}, over the cap {cap}")
    if n <= 2:
        gens = [Permutation.identity(max(n, 1))]
    else:
        gens = [Permutation.from_cycles(n, [(i, i + 1, i + 2)]) for i in range(1, n - 1)]
    return close_from_generators(gens, f"alt:{n}", max_order=max_order)


def quaternion8() -> FiniteGroup:
    """The quaternion group of order 8 in its regular permutation model.

    Elements carry the usual names 1, -1, i, -i, j, -j, k, -k, with k = i*j.
    """
    gens = [
        Permutation.from_cycles(8, [(1, 2, 3, 4), (5, 6, 7, 8)]),
        Permutation.from_cycles(8, [(1, 5, 3, 7), (2, 8, 4, 6)]),
    ]
    g = close_from_generators(gens, "q8")
    i, j = g.generator_indices
    named = {
        "1": 0,
        "i": i,
        "j": j,
        "-1": g.mul(i, i),
        "k": g.mul(i, j),
        "-i": g.inv(i),
        "-j": g.inv(j),
        "-k": g.inv(g.mul(i, j)),
    }
    names = [""] * 8
    for name, idx in named.items():
        names[idx] = name
    return FiniteGroup(
        [list(r) for r in g.table],
        "q8",
        element_names=names,
        named_elements=named,
        generator_indices=g.generator_indices,
        inverse_table=list(g.inverse_table),
    )


# -- extraspecial groups ---------------------------------------------------


def extraspecial_p3(p: int, max_order: Optional[int] = None) -> FiniteGroup:
    """Extraspecial group of order p^3 and exponent p, for odd prime p.

    Model: triples (a, b, c) over Z_p with
    (a, b, c) * (a', b', c') = (a + a', b + b', c + c' + a*b'),
    indexed as a*p^2 + b*p + c. The center is {(0, 0, c)}.
    """
    if p == 2 or not _is_prime(p):
        raise NotOddPrime(f"extraspecial p^3 model needs an odd prime, got {p}")
    n = p ** 3
    cap = max_order_cap() if max_order is None else max_order
    if n > cap:
        raise OrderExceeded(f"es:{p} has order {n}, over the cap {cap}")
    idx = np.arange(n, dtype=np.int64)
    a, b, c = idx // (p * p), (idx // p) % p, idx % p
    a1, b1, c1 = a[:, None], b[:, None], c[:, None]
    a2, b2, c2 = a[None, :], b[None, :], c[None, :]
    table = (
        ((a1 + a2) % p) * (p * p)
        + ((b1 + b2) % p) * p
        + ((c1 + c2 + a1 * b2) % p)
    ).astype(np.int32)
    inverse = ((-a % p) * (p * p) + (-b % p) * p + ((a * b - c) % p)).astype(np.int32)
    names = [f"({ai},{bi},{ci})" for ai, bi, ci in zip(a.tolist(), b.tolist(), c.tolist())]
    named = {name: i for i, name in enumerate(names)}
    g = FiniteGroup(
        table,
        f"es:{p}",
        element_names=names,
        named_elements=named,
        generator_indices=(p * p, p),  # (1,0,0) and (0,1,0)
        inverse_table=inverse.tolist(),
    )
    g._cache["np_table"] = table
    return g


def direct_product(
    g: FiniteGroup,
    k: FiniteGroup,
    group_id: Optional[str] = None,
    max_order: Optional[int] = None,
) -> FiniteGroup:
    """Direct product with x-major indexing: (x, y) -> x*|K| + y."""
    n = g.order * k.order
    cap = max_order_cap() if max_order is None else max_order
    if n > cap:
        raise OrderExceeded(
            f"prod({g.group_id},{k.group_id}) has order {n}, over the cap {cap}"
        )
    gt = g.np_table().astype(np.int64)
    kt = k.np_table().astype(np.int64)
    ko = k.order
    table = (gt[:, None, :, None] * ko + kt[None, :, None, :]).reshape(n, n).astype(np.int32)
    ginv = np.asarray(g.inverse_table, dtype=np.int64)
    kinv = np.asarray(k.inverse_table, dtype=np.int64)
    inverse = (ginv[:, None] * ko + kinv[None, :]).reshape(n).astype(np.int32)
    names = [f"({g.name_of(x)},{k.name_of(y)})" for x in range(g.order) for y in range(k.order)]
    gen_indices = tuple(gi * ko for gi in g.generator_indices) + tuple(
        int(ki) for ki in k.generator_indices
    )
    gid = group_id if group_id is not None else f"prod({g.group_id},{k.group_id})"
    out = FiniteGroup(
        table,
        gid,
        element_names=names,
        generator_indices=gen_indices,
        inverse_table=inverse.tolist(),
    )
    out._cache["np_table"] = table
    return out


def es_power(p: int, copies: int, max_order: Optional[int] = None) -> FiniteGroup:
    """Direct product of `copies` copies of the extraspecial p^3 group."""
    if copies < 1:
        raise ValueError(f"copies must be >= 1, got {copies}")
    base = extraspecial_p3(p, max_order=max_order)
    g = base
    for i in range(2, copies + 1):
        g = direct_product(g, base, group_id=f"es:{p}^{i}", max_order=max_order)
    return g


def odd_eta1_witness(n: int, max_order: Optional[int] = None) -> Tuple[FiniteGroup, Element]:
    """A group with a class of odd size n whose square is one class.

    For n = p1^e1 * ... * pr^er the group is the direct product of e_i copies
    of the extraspecial p_i^3 group over each prime, of order n^3, and the
    witness has the coordinate (1,0,0) in every factor. For n = 1 the trivial
    group and its identity are returned.
    """
    if n < 1 or n % 2 == 0:
        raise EvenN(f"witness construction needs odd n >= 1, got {n}")
    cap = max_order_cap() if max_order is None else max_order
    if n ** 3 > cap:
        raise OrderExceeded(f"witness for n={n} has order {n ** 3}, over the cap {cap}")
    if n == 1:
        g = cyclic(1, max_order=max_order)
        return g, Element(g, 0)

    factors: List[Tuple[int, int]] = []
    rest = n
    p = 3
    while p * p <= rest:
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            factors.append((p, e))
        p += 2
    if rest > 1:
        factors.append((rest, 1))

    group: Optional[FiniteGroup] = None
    witness = 0
    for prime, e in factors:
        base = extraspecial_p3(prime, max_order=max_order)
        block, w = base, prime * prime  # (1,0,0)
        for i in range(2, e + 1):
            block = direct_product(block, base, group_id=f"es:{prime}^{i}", max_order=max_order)
            w = w * base.order + prime * prime
        if group is None:
            group, witness = block, w
        else:
            witness = witness * block.order + w
            group = direct_product(group, block, max_order=max_order)
    assert group is not None
    return group, Element(group, witness)


# -- spec strings ----------------------------------------------------------


@dataclass(frozen=True)
class GroupSpec:
    """A parsed group description.

    kind is one of cyclic, dihedral, symmetric, alternating, quaternion8,
    extraspecial_p3, direct_product, from_file; params carries the ints,
    child specs, or path.
    """

    kind: str
    params: tuple = ()

    @classmethod
    def parse(cls, text: str) -> "GroupSpec":
        s = text.strip()
        if not s:
            raise ValueError("empty group spec")
        if s == "q8":
            return cls("quaternion8")
        if s.startswith("prod(") and s.endswith(")"):
            inner = s[5:-1]
            parts, depth, start = [], 0, 0
            for i, ch in enumerate(inner):
                if ch == "(":
                    depth += 1
                elif ch == ")":
                    depth -= 1
                    if depth < 0:
                        raise ValueError(f"unbalanced parentheses in {text!r}")
                elif ch == "," and depth == 0:
                    parts.append(inner[start:i])
                    start = i + 1
            if depth != 0:
                raise ValueError(f"unbalanced parentheses in {text!r}")
            parts.append(inner[start:])
            if len(parts) < 2:
                raise ValueError(f"prod(...) needs at least two factors: {text!r}")
            specs = [cls.parse(p) for p in parts]
            out = specs[0]
            for nxt in specs[1:]:
                out = cls("direct_product", (out, nxt))
            return out
        if s.startswith("file:"):
            path = s[5:].strip()
            if not path:
                raise ValueError(f"file spec without a path: {text!r}")
            return cls("from_file", (path,))
        if ":" not in s:
            raise ValueError(f"unrecognized group spec {text!r}")
        head, _, tail = s.partition(":")
        if head == "es":
            base, _, power = tail.partition("^")
            copies = 1
            if power:
                if not power.isdigit() or int(power) < 1:
                    raise ValueError(f"bad es power in {text!r}")
                copies = int(power)
            if not base.isdigit():
                raise ValueError(f"bad es prime in {text!r}")
            return cls("extraspecial_p3", (int(base), copies))
        kinds = {
            "cyclic": "cyclic",
            "dihedral": "dihedral",
            "dih": "dihedral",
            "sym": "symmetric",
            "alt": "alternating",
        }
        if head not in kinds:
            raise ValueError(f"unrecognized group spec {text!r}")
        if not tail.isdigit():
            raise ValueError(f"parameter of {head!r} must be a positive integer: {text!r}")
        value = int(tail)
        if value < 1:
            raise ValueError(f"parameter of {head!r} must be >= 1: {text!r}")
        return cls(kinds[head], (value,))

    def canonical(self) -> str:
        if self.kind == "quaternion8":
            return "q8"
        if self.kind == "cyclic":
            return f"cyclic:{self.params[0]}"
        if self.kind == "dihedral":
            return f"dihedral:{self.params[0]}"
        if self.kind == "symmetric":
            return f"sym:{self.params[0]}"
        if self.kind == "alternating":
            return f"alt:{self.params[0]}"
        if self.kind == "extraspecial_p3":
            p, copies = self.params
            return f"es:{p}" if copies == 1 else f"es:{p}^{copies}"
        if self.kind == "direct_product":
            left, right = self.params
            return f"prod({left.canonical()},{right.canonical()})"
        if self.kind == "from_file":
            return f"file:{os.path.basename(self.params[0])}"
        raise ValueError(f"unknown spec kind {self.kind!r}")

    def build(self, max_order: Optional[int] = None) -> FiniteGroup:
        if self.kind == "quaternion8":
            return quaternion8()
        if self.kind == "cyclic":
            return cyclic(self.params[0], max_order=max_order)
        if self.kind == "dihedral":
            return dihedral(self.params[0], max_order=max_order)
        if self.kind == "symmetric":
            return symmetric(self.params[0], max_order=max_order)
        if self.kind == "alternating":
            return alternating(self.params[0], max_order=max_order)
        if self.kind == "extraspecial_p3":
            p, copies = self.params
            return es_power(p, copies, max_order=max_order)
        if self.kind == "direct_product":
            left, right = self.params
            return direct_product(
                left.build(max_order=max_order),
                right.build(max_order=max_order),
                group_id=self.canonical(),
                max_order=max_order,
            )
        if self.kind == "from_file":
            return _build_from_file(self.params[0], self.canonical(), max_order)
        raise ValueError(f"unknown spec kind {self.kind!r}")


def _build_from_file(path: str, group_id: str, max_order: Optional[int]) -> FiniteGroup:
    if path.endswith(".cayley"):
        return from_cayley_table(load_cayley(path), group_id, max_order=max_order)
    if path.endswith(".gens"):
        _, gens = load_gens(path)
        return close_from_generators(gens, group_id, max_order=max_order)
    raise ValueError(f"unsupported group file {path!r} (expected .gens or .cayley)")


_BUILD_CACHE: Dict[Tuple[str, Optional[int]], FiniteGroup] = {}


def build_group(spec: "GroupSpec | str", max_order: Optional[int] = None) -> FiniteGroup:
    """Parse (if needed) and build, memoizing everything except file specs."""
    parsed = GroupSpec.parse(spec) if isinstance(spec, str) else spec
    if parsed.kind == "from_file":
        return parsed.build(max_order=max_order)
    key = (parsed.canonical(), max_order)
    cached = _BUILD_CACHE.get(key)
    if cached is None:
        cached = parsed.build(max_order=max_order)
        _BUILD_CACHE[key] = cached
    return cached
