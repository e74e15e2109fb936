"""Executable checkers for the statements about homogeneous class products.

Every checker computes both sides of its claim through independent code
paths: products go through set_product/decompose, membership conditions
through commutator_set/is_normal, never deriving one side from the other.
A checker never adjudicates; it reports holds, fails, vacuous, or
discrepancy (a sub-clause disagreeing while the main claim stands) together
with witnesses.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .classalg import (
    ElementSet,
    center,
    centralizer,
    centralizer_buckets,
    class_product,
    commutator_set,
    conjugacy_class,
    conjugacy_classes,
    decompose,
    eta_of_product,
    is_nilpotent,
    is_normal,
    is_prime_power,
    is_simple_nonabelian,
    is_subgroup,
    is_supersolvable,
    normal_subgroups,
    minimal_normal_subgroups,
    quotient,
    QuotientMap,
    set_product,
)
from .constructions import direct_product
from .errors import HypothesisViolated, OrderExceeded
from .group import Element, FiniteGroup, conjugate, max_order_cap

STATEMENT_IDS: Tuple[str, ...] = (
    "theorem-a",
    "theorem-b",
    "product-formula",
    "subgroup-implies-normal",
    "quotient-monotonicity",
    "center-intersection",
    "size2-classes",
    "supersolvable-two-power",
    "nilpotent-odd-size",
    "direct-product-eta",
)

_VERDICTS = ("holds", "fails", "vacuous", "discrepancy")
_SEVERITY = {"vacuous": 0, "holds": 1, "discrepancy": 2, "fails": 3}
_WITNESS_CAP = 40


@dataclass
class VerifierReport:
    """Outcome of one statement checked on one group (or one pair)."""

    statement_id: str
    group_id: str
    hypotheses_met: bool
    pairs_checked: int
    verdict: str
    witnesses: List[dict] = field(default_factory=list)
    clause_verdicts: Dict[str, str] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)

    def __post_init__(self) -> None:
        if self.verdict not in _VERDICTS:
            raise ValueError(f"unknown verdict {self.verdict!r}")
        if self.verdict in ("fails", "discrepancy") and not self.witnesses:
            raise ValueError(f"verdict {self.verdict!r} requires at least one witness")
        if self.pairs_checked == 0 and self.verdict != "vacuous":
            raise ValueError("zero pairs checked must be reported as vacuous")

    @property
    def ok(self) -> bool:
        return self.verdict in ("holds", "vacuous")

    def to_dict(self) -> dict:
        return {
            "statement_id": self.statement_id,
            "group_id": self.group_id,
            "verdict": self.verdict,
            "hypotheses_met": self.hypotheses_met,
            "pairs_checked": self.pairs_checked,
            "witnesses": self.witnesses,
            "clause_verdicts": self.clause_verdicts,
            "notes": self.notes,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "VerifierReport":
        return cls(
            statement_id=data["statement_id"],
            group_id=data["group_id"],
            hypotheses_met=data["hypotheses_met"],
            pairs_checked=data["pairs_checked"],
            verdict=data["verdict"],
            witnesses=list(data.get("witnesses", [])),
            clause_verdicts=dict(data.get("clause_verdicts", {})),
            notes=list(data.get("notes", [])),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(", ", ": "))


def _vacuous(statement_id: str, group: FiniteGroup, note: str, hypotheses_met: bool = False) -> VerifierReport:
    return VerifierReport(
        statement_id=statement_id,
        group_id=group.group_id,
        hypotheses_met=hypotheses_met,
        pairs_checked=0,
        verdict="vacuous",
        notes=[note],
    )


def _merge(statement_id: str, group: FiniteGroup, parts: Sequence[VerifierReport],
           notes: Iterable[str] = ()) -> VerifierReport:
    if not parts:
        return _vacuous(statement_id, group, "no qualifying pairs", hypotheses_met=True)
    verdict = max((p.verdict for p in parts), key=_SEVERITY.__getitem__)
    witnesses: List[dict] = []
    for p in parts:
        witnesses.extend(p.witnesses)
    total = len(witnesses)
    merged_notes = list(dict.fromkeys(n for p in parts for n in p.notes))
    for n in notes:
        if n not in merged_notes:
            merged_notes.append(n)
    if total > _WITNESS_CAP:
        witnesses = witnesses[:_WITNESS_CAP]
        merged_notes.append(f"witness list truncated to {_WITNESS_CAP} of {total}")
    clauses: Dict[str, str] = {}
    for p in parts:
        for name, v in p.clause_verdicts.items():
            if name not in clauses or _SEVERITY[v] > _SEVERITY[clauses[name]]:
                clauses[name] = v
    return VerifierReport(
        statement_id=statement_id,
        group_id=group.group_id,
        hypotheses_met=True,
        pairs_checked=sum(p.pairs_checked for p in parts),
        verdict=verdict,
        witnesses=witnesses,
        clause_verdicts=clauses,
        notes=merged_notes,
    )


def _require_equal_centralizers(statement_id: str, a: Element, b: Element) -> None:
    if centralizer(a) != centralizer(b):
        raise HypothesisViolated(
            f"{statement_id}: centralizers of {a.name} and {b.name} differ in {a.group_id}"
        )


def equal_centralizer_pairs(group: FiniteGroup) -> List[Tuple[Element, Element]]:
    """All (class representative a, element b) with C(a) = C(b) as sets.

    Restricting the first coordinate to representatives loses nothing: every
    condition checked downstream is conjugation-covariant, so (a, b) and
    (a^g, b^g) stand or fall together.
    """
    buckets = centralizer_buckets(group)
    pairs: List[Tuple[Element, Element]] = []
    for cls in conjugacy_classes(group):
        a = cls.representative
        for b in buckets[centralizer(a).mask]:
            pairs.append((a, Element(group, b)))
    return pairs


# -- pairwise checkers -----------------------------------------------------


def check_theorem_a(group: FiniteGroup, a: Element, b: Element) -> VerifierReport:
    """Homogeneity of a^G b^G against the commutator-set criterion.

    Main claim, for C(a) = C(b): a^G b^G is a single class if and only if
    [a,G] = [b,G] = [ab,G] and [ab,G] is a normal subgroup. For b = a the
    shortcut clause ("a^G a^G = (a^2)^G iff [a,G] is normal") is tracked
    separately as clause in-particular; it can disagree with the main claim,
    which is reported as a discrepancy, not a failure.
    """
    _require_equal_centralizers("theorem-a", a, b)
    ab = a * b
    lhs = class_product(a, b) == conjugacy_class(ab).carrier
    sa = commutator_set(a)
    sb = commutator_set(b)
    sab = commutator_set(ab)
    rhs = sa == sb and sb == sab and is_normal(sab)
    witnesses: List[dict] = []
    verdict = "holds"
    if lhs != rhs:
        verdict = "fails"
        witnesses.append(
            {
                "a": a.index,
                "b": b.index,
                "a_name": a.name,
                "b_name": b.name,
                "single_class": lhs,
                "comm_sets_match": sa == sb and sb == sab,
                "comm_set_ab_is_normal": is_normal(sab),
                "eta": eta_of_product(a, b),
            }
        )
    clauses: Dict[str, str] = {}
    if a.index == b.index:
        shortcut = is_normal(sa)
        if lhs == shortcut:
            clauses["in-particular"] = "holds"
        else:
            clauses["in-particular"] = "discrepancy"
            witnesses.append(
                {
                    "a": a.index,
                    "a_name": a.name,
                    "clause": "in-particular",
                    "comm_set": list(sa),
                    "comm_set_is_normal": shortcut,
                    "single_class": lhs,
                    "eta": eta_of_product(a, a),
                }
            )
            if verdict == "holds":
                verdict = "discrepancy"
    return VerifierReport(
        statement_id="theorem-a",
        group_id=group.group_id,
        hypotheses_met=True,
        pairs_checked=1,
        verdict=verdict,
        witnesses=witnesses,
        clause_verdicts=clauses,
    )


def check_theorem_b(group: FiniteGroup) -> VerifierReport:
    """In a nonabelian simple group the only homogeneous product is 1*1."""
    if not is_simple_nonabelian(group):
        raise HypothesisViolated(f"theorem-b: {group.group_id} is not nonabelian simple")
    witnesses: List[dict] = []
    pairs = equal_centralizer_pairs(group)
    identity_pair_seen = False
    for a, b in pairs:
        if eta_of_product(a, b) != 1:
            continue
        if a.index == 0 and b.index == 0:
            identity_pair_seen = True
        else:
            witnesses.append(
                {"a": a.index, "b": b.index, "a_name": a.name, "b_name": b.name, "eta": 1}
            )
    verdict = "holds" if identity_pair_seen and not witnesses else "fails"
    if verdict == "fails" and not witnesses:
        witnesses.append({"a": 0, "b": 0, "note": "identity pair missing"})
    return VerifierReport(
        statement_id="theorem-b",
        group_id=group.group_id,
        hypotheses_met=True,
        pairs_checked=len(pairs),
        verdict=verdict,
        witnesses=witnesses,
    )


_PRODUCT_FORMULA_NOTE = "identity checked: a^G b^G = ab.[a^b,G].[b,G] with a^b = b^-1 a b"


def check_product_formula(group: FiniteGroup, a: Element, b: Element) -> VerifierReport:
    """Factorization of a class product through two commutator sets.

    When a and b commute the conjugate collapses and the same identity reads
    a^G b^G = ab.[a,G].[b,G]; that case is recorded under clause
    commuting-case.
    """
    ab = a * b
    lhs = class_product(a, b)
    rhs = _comm_product(conjugate(a, b), b).translate_left(ab.index)
    witnesses: List[dict] = []
    clauses: Dict[str, str] = {}
    verdict = "holds"
    if lhs != rhs:
        verdict = "fails"
        witnesses.append(
            {
                "a": a.index,
                "b": b.index,
                "a_name": a.name,
                "b_name": b.name,
                "lhs_size": len(lhs),
                "rhs_size": len(rhs),
                "only_lhs": list(lhs - rhs),
                "only_rhs": list(rhs - lhs),
            }
        )
    if conjugate(a, b) == a:
        plain = _comm_product(a, b).translate_left(ab.index)
        if lhs == plain:
            clauses["commuting-case"] = "holds"
        else:
            clauses["commuting-case"] = "fails"
            verdict = "fails"
            witnesses.append(
                {
                    "a": a.index,
                    "b": b.index,
                    "clause": "commuting-case",
                    "lhs_size": len(lhs),
                    "rhs_size": len(plain),
                }
            )
    return VerifierReport(
        statement_id="product-formula",
        group_id=group.group_id,
        hypotheses_met=True,
        pairs_checked=1,
        verdict=verdict,
        witnesses=witnesses,
        clause_verdicts=clauses,
        notes=[_PRODUCT_FORMULA_NOTE],
    )


def _comm_product(x: Element, y: Element) -> ElementSet:
    """[x,G].[y,G] as a plain set product."""
    return set_product(commutator_set(x), commutator_set(y))


def check_subgroup_implies_normal(group: FiniteGroup) -> VerifierReport:
    """Every commutator set that is a subgroup must be a normal one."""
    witnesses: List[dict] = []
    closed = 0
    for c in range(group.order):
        s = commutator_set(Element(group, c))
        if not is_subgroup(s):
            continue
        closed += 1
        if not is_normal(s):
            witnesses.append(
                {"c": c, "c_name": group.name_of(c), "comm_set": list(s)}
            )
    return VerifierReport(
        statement_id="subgroup-implies-normal",
        group_id=group.group_id,
        hypotheses_met=True,
        pairs_checked=group.order,
        verdict="fails" if witnesses else "holds",
        witnesses=witnesses,
        notes=[f"{closed} of {group.order} commutator sets are subgroups"],
    )


def _quotient_eta_part(group: FiniteGroup, qm: QuotientMap, a: Element, b: Element) -> VerifierReport:
    eta_parent = eta_of_product(a, b)
    qa, qb = qm.project(a), qm.project(b)
    eta_quot = eta_of_product(qa, qb)
    witnesses: List[dict] = []
    clauses: Dict[str, str] = {}
    verdict = "holds"
    if eta_quot > eta_parent:
        verdict = "fails"
        witnesses.append(
            {
                "a": a.index,
                "b": b.index,
                "kernel": list(qm.kernel),
                "eta_parent": eta_parent,
                "eta_quotient": eta_quot,
            }
        )
    if conjugacy_class(qa).carrier.isdisjoint(conjugacy_class(qb).carrier):
        if conjugacy_class(a).carrier.isdisjoint(conjugacy_class(b).carrier):
            clauses["disjointness"] = "holds"
        else:
            clauses["disjointness"] = "fails"
            verdict = "fails"
            witnesses.append(
                {
                    "a": a.index,
                    "b": b.index,
                    "kernel": list(qm.kernel),
                    "clause": "disjointness",
                }
            )
    notes = []
    if not is_prime_power(group.order):
        notes.append(
            "group order is not a prime power; the inequality is checked without that hypothesis"
        )
    return VerifierReport(
        statement_id="quotient-monotonicity",
        group_id=group.group_id,
        hypotheses_met=True,
        pairs_checked=1,
        verdict=verdict,
        witnesses=witnesses,
        clause_verdicts=clauses,
        notes=notes,
    )


def check_quotient_eta(group: FiniteGroup, n: ElementSet, a: Element, b: Element) -> VerifierReport:
    """Passing to a quotient never increases the class count of a product.

    Second clause: classes that become disjoint in the quotient were already
    disjoint upstairs. Raises NotNormal for a bad n.
    """
    return _quotient_eta_part(group, quotient(group, n), a, b)


def check_center_intersection(group: FiniteGroup, a: Element) -> VerifierReport:
    """In odd-order groups, a^G a^G meets the center only for central a.

    Rider: for |a^G| > 1 every class inside a^G a^G has size > 1. Both
    clauses fail in some even-order groups (q8 squares its order-4 classes
    straight into the center), hence the hard hypothesis.
    """
    if group.order % 2 == 0:
        raise HypothesisViolated(
            f"center-intersection: {group.group_id} has even order {group.order}; "
            "the claim can fail there (q8 squares land in the center)"
        )
    square = class_product(a, a)
    size = conjugacy_class(a).size
    meets_center = not center(group).isdisjoint(square)
    witnesses: List[dict] = []
    clauses: Dict[str, str] = {}
    verdict = "holds"
    if meets_center != (size == 1):
        verdict = "fails"
        witnesses.append(
            {
                "a": a.index,
                "a_name": a.name,
                "class_size": size,
                "meets_center": meets_center,
            }
        )
    if size > 1:
        singletons = [c for c in decompose(square).classes if c.size == 1]
        if singletons:
            clauses["rider"] = "fails"
            verdict = "fails"
            witnesses.append(
                {
                    "a": a.index,
                    "clause": "rider",
                    "singleton_members": [c.representative.index for c in singletons],
                }
            )
        else:
            clauses["rider"] = "holds"
    return VerifierReport(
        statement_id="center-intersection",
        group_id=group.group_id,
        hypotheses_met=True,
        pairs_checked=1,
        verdict=verdict,
        witnesses=witnesses,
        clause_verdicts=clauses,
    )


def check_size2(group: FiniteGroup, a: Element, b: Element) -> VerifierReport:
    """For C(a) = C(b) and |a^G| = 2 the product splits into exactly 2 classes.

    Also checks the four-element shape of the product:
    a^G b^G = {ab, ab.s, ab.t, ab.s.t} where [a,G] = {1, s}, [b,G] = {1, t}.
    """
    _require_equal_centralizers("size2-classes", a, b)
    if conjugacy_class(a).size != 2:
        raise HypothesisViolated(
            f"size2-classes: |class({a.name})| = {conjugacy_class(a).size}, need 2"
        )
    product = class_product(a, b)
    e = decompose(product).eta
    s = [x for x in commutator_set(a) if x != 0]
    t = [x for x in commutator_set(b) if x != 0]
    witnesses: List[dict] = []
    clauses: Dict[str, str] = {}
    verdict = "holds"
    if e != 2:
        verdict = "fails"
        witnesses.append({"a": a.index, "b": b.index, "eta": e})
    if len(s) == 1 and len(t) == 1:
        ab = (a * b).index
        mul = group.mul
        shape = ElementSet.from_indices(
            group, {ab, mul(ab, s[0]), mul(ab, t[0]), mul(ab, mul(s[0], t[0]))}
        )
        if shape == product:
            clauses["product-shape"] = "holds"
        else:
            clauses["product-shape"] = "fails"
            verdict = "fails"
            witnesses.append(
                {
                    "a": a.index,
                    "b": b.index,
                    "clause": "product-shape",
                    "shape": list(shape),
                    "product": list(product),
                }
            )
    return VerifierReport(
        statement_id="size2-classes",
        group_id=group.group_id,
        hypotheses_met=True,
        pairs_checked=1,
        verdict=verdict,
        witnesses=witnesses,
        clause_verdicts=clauses,
    )


def check_supersolvable_pow2(group: FiniteGroup, a: Element, b: Element) -> VerifierReport:
    """Supersolvable groups admit no homogeneous product over a 2-power class."""
    if not is_supersolvable(group):
        raise HypothesisViolated(f"supersolvable-two-power: {group.group_id} is not supersolvable")
    _require_equal_centralizers("supersolvable-two-power", a, b)
    size = conjugacy_class(a).size
    if size < 2 or size & (size - 1):
        raise HypothesisViolated(
            f"supersolvable-two-power: |class({a.name})| = {size} is not a 2-power > 1"
        )
    e = eta_of_product(a, b)
    witnesses: List[dict] = []
    if e < 2:
        witnesses.append(
            {"a": a.index, "b": b.index, "a_name": a.name, "b_name": b.name,
             "class_size": size, "eta": e}
        )
    return VerifierReport(
        statement_id="supersolvable-two-power",
        group_id=group.group_id,
        hypotheses_met=True,
        pairs_checked=1,
        verdict="fails" if witnesses else "holds",
        witnesses=witnesses,
    )


def check_nilpotent_odd(group: FiniteGroup) -> VerifierReport:
    """In nilpotent groups a homogeneous class square forces odd class size."""
    if not is_nilpotent(group):
        raise HypothesisViolated(f"nilpotent-odd-size: {group.group_id} is not nilpotent")
    witnesses: List[dict] = []
    classes = conjugacy_classes(group)
    for cls in classes:
        a = cls.representative
        if eta_of_product(a, a) == 1 and cls.size % 2 == 0:
            witnesses.append(
                {"a": a.index, "a_name": a.name, "class_size": cls.size, "eta": 1}
            )
    return VerifierReport(
        statement_id="nilpotent-odd-size",
        group_id=group.group_id,
        hypotheses_met=True,
        pairs_checked=len(classes),
        verdict="fails" if witnesses else "holds",
        witnesses=witnesses,
    )


def check_direct_product_eta(
    group: FiniteGroup,
    a: Element,
    k: FiniteGroup,
    b: Element,
    product_group: Optional[FiniteGroup] = None,
) -> VerifierReport:
    """Homogeneous squares stay homogeneous in a direct product.

    Conclusions checked on G x K: the class of (a, b) has size
    |a^G| * |b^K|, and its square is again one class. The product group can
    be passed in to amortize construction over many pairs.
    """
    if eta_of_product(a, a) != 1 or eta_of_product(b, b) != 1:
        raise HypothesisViolated(
            "direct-product-eta: both factors need a homogeneous class square"
        )
    prod = product_group if product_group is not None else direct_product(group, k)
    pair = Element(prod, a.index * k.order + b.index)
    size = conjugacy_class(pair).size
    expected = conjugacy_class(a).size * conjugacy_class(b).size
    e = eta_of_product(pair, pair)
    witnesses: List[dict] = []
    if size != expected or e != 1:
        witnesses.append(
            {
                "a": a.index,
                "b": b.index,
                "pair_index": pair.index,
                "pair_class_size": size,
                "expected_size": expected,
                "eta": e,
            }
        )
    return VerifierReport(
        statement_id="direct-product-eta",
        group_id=prod.group_id,
        hypotheses_met=True,
        pairs_checked=1,
        verdict="fails" if witnesses else "holds",
        witnesses=witnesses,
    )


# -- per-group aggregation -------------------------------------------------


def _agg_theorem_a(group: FiniteGroup) -> VerifierReport:
    parts = [check_theorem_a(group, a, b) for a, b in equal_centralizer_pairs(group)]
    return _merge("theorem-a", group, parts)


def _agg_theorem_b(group: FiniteGroup) -> VerifierReport:
    if not is_simple_nonabelian(group):
        return _vacuous("theorem-b", group, "needs a nonabelian simple group")
    return check_theorem_b(group)


def _product_formula_pairs(group: FiniteGroup) -> Tuple[List[Tuple[Element, Element]], str]:
    n = group.order
    if n <= 27:
        pairs = [
            (Element(group, i), Element(group, j)) for i in range(n) for j in range(n)
        ]
        return pairs, "pair strategy: all ordered element pairs"
    reps = [cls.representative for cls in conjugacy_classes(group)]
    if n <= 120:
        pairs = [(a, Element(group, j)) for a in reps for j in range(n)]
        return pairs, "pair strategy: class representatives against all elements"
    pairs = [(a, b) for a in reps for b in reps]
    return pairs, "pair strategy: class representatives only"


def _agg_product_formula(group: FiniteGroup) -> VerifierReport:
    pairs, strategy = _product_formula_pairs(group)
    parts = [check_product_formula(group, a, b) for a, b in pairs]
    return _merge("product-formula", group, parts, notes=[strategy])


def _agg_quotient_eta(group: FiniteGroup) -> VerifierReport:
    n = group.order
    if n <= 27:
        kernels = list(normal_subgroups(group))
        pairs = [
            (Element(group, i), Element(group, j)) for i in range(n) for j in range(n)
        ]
        strategy = "all normal subgroups, all ordered element pairs"
    else:
        kernels = [ElementSet.from_indices(group, [0])] + list(minimal_normal_subgroups(group))
        reps = [cls.representative for cls in conjugacy_classes(group)]
        pairs = [(a, b) for a in reps for b in reps]
        strategy = "minimal normal subgroups, class representatives only"
    parts: List[VerifierReport] = []
    for kernel in kernels:
        qm = quotient(group, kernel)
        for a, b in pairs:
            parts.append(_quotient_eta_part(group, qm, a, b))
    return _merge("quotient-monotonicity", group, parts, notes=[f"kernel strategy: {strategy}"])


def _agg_center_intersection(group: FiniteGroup) -> VerifierReport:
    if group.order % 2 == 0:
        return _vacuous(
            "center-intersection", group, f"even order {group.order}; hypothesis not met"
        )
    parts = [
        check_center_intersection(group, cls.representative)
        for cls in conjugacy_classes(group)
    ]
    return _merge("center-intersection", group, parts)


def _agg_size2(group: FiniteGroup) -> VerifierReport:
    parts = [
        check_size2(group, a, b)
        for a, b in equal_centralizer_pairs(group)
        if conjugacy_class(a).size == 2
    ]
    return _merge("size2-classes", group, parts)


def _agg_supersolvable_pow2(group: FiniteGroup) -> VerifierReport:
    if not is_supersolvable(group):
        return _vacuous("supersolvable-two-power", group, "group is not supersolvable")
    parts = []
    for a, b in equal_centralizer_pairs(group):
        size = conjugacy_class(a).size
        if size > 1 and size & (size - 1) == 0:
            parts.append(check_supersolvable_pow2(group, a, b))
    return _merge("supersolvable-two-power", group, parts)


def _agg_nilpotent_odd(group: FiniteGroup) -> VerifierReport:
    if not is_nilpotent(group):
        return _vacuous("nilpotent-odd-size", group, "group is not nilpotent")
    return check_nilpotent_odd(group)


def _agg_direct_product_eta(group: FiniteGroup) -> VerifierReport:
    cap = max_order_cap()
    if group.order * group.order > cap:
        return _vacuous(
            "direct-product-eta",
            group,
            f"self-product order {group.order * group.order} exceeds the cap {cap}",
        )
    reps = [
        cls.representative
        for cls in conjugacy_classes(group)
        if eta_of_product(cls.representative, cls.representative) == 1
    ]
    if not reps:
        return _vacuous(
            "direct-product-eta", group, "no class with a homogeneous square", hypotheses_met=True
        )
    prod = direct_product(group, group)
    parts = [
        check_direct_product_eta(group, a, group, b, product_group=prod)
        for a in reps
        for b in reps
    ]
    return _merge(
        "direct-product-eta", group, parts, notes=["second factor is the group itself"]
    )


_AGGREGATORS = {
    "theorem-a": _agg_theorem_a,
    "theorem-b": _agg_theorem_b,
    "product-formula": _agg_product_formula,
    "subgroup-implies-normal": check_subgroup_implies_normal,
    "quotient-monotonicity": _agg_quotient_eta,
    "center-intersection": _agg_center_intersection,
    "size2-classes": _agg_size2,
    "supersolvable-two-power": _agg_supersolvable_pow2,
    "nilpotent-odd-size": _agg_nilpotent_odd,
    "direct-product-eta": _agg_direct_product_eta,
}


def run_statement(group: FiniteGroup, statement_id: str) -> VerifierReport:
    """One aggregated report for one statement over all qualifying inputs."""
    try:
        agg = _AGGREGATORS[statement_id]
    except KeyError:
        raise ValueError(
            f"unknown statement id {statement_id!r}; known: {', '.join(STATEMENT_IDS)}"
        ) from None
    return agg(group)


def check_all(group: FiniteGroup) -> List[VerifierReport]:
    """Every statement on one group, in canonical statement order.

    Statements whose hypotheses the group fails come back vacuous instead of
    raising, so the result always has one row per statement id.
    """
    return [run_statement(group, sid) for sid in STATEMENT_IDS]
