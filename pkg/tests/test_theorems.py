import json

import pytest

from classprod import (
    Element,
    ElementSet,
    HypothesisViolated,
    STATEMENT_IDS,
    VerifierReport,
    build_group,
    check_all,
    normal_subgroups,
    run_statement,
)
from classprod.verify import (
    check_center_intersection,
    check_direct_product_eta,
    check_product_formula,
    check_quotient_eta,
    check_size2,
    check_supersolvable_pow2,
    check_theorem_a,
    check_theorem_b,
    equal_centralizer_pairs,
)


class TestReportModel:
    def test_fails_requires_witness(self):
        with pytest.raises(ValueError):
            VerifierReport("theorem-a", "q8", True, 3, "fails")

    def test_discrepancy_requires_witness(self):
        with pytest.raises(ValueError):
            VerifierReport("theorem-a", "q8", True, 3, "discrepancy")

    def test_zero_pairs_must_be_vacuous(self):
        with pytest.raises(ValueError):
            VerifierReport("theorem-a", "q8", True, 0, "holds")

    def test_unknown_verdict(self):
        with pytest.raises(ValueError):
            VerifierReport("theorem-a", "q8", True, 1, "maybe")

    def test_roundtrip(self):
        r = VerifierReport(
            "size2-classes", "sym:3", True, 4, "holds",
            clause_verdicts={"product-shape": "holds"}, notes=["n"],
        )
        again = VerifierReport.from_dict(json.loads(r.to_json()))
        assert again == r

    def test_dict_key_order(self):
        r = VerifierReport("theorem-b", "alt:5", True, 14, "holds")
        assert list(r.to_dict()) == [
            "statement_id", "group_id", "verdict", "hypotheses_met",
            "pairs_checked", "witnesses", "clause_verdicts", "notes",
        ]

    def test_ok_property(self):
        assert VerifierReport("theorem-b", "alt:5", True, 1, "holds").ok
        assert VerifierReport("theorem-b", "q8", False, 0, "vacuous").ok
        bad = VerifierReport(
            "theorem-b", "x", True, 1, "fails", witnesses=[{"a": 0}]
        )
        assert not bad.ok


class TestHypothesisGates:
    def test_theorem_a_needs_equal_centralizers(self, groups):
        g = groups["q8"]
        i, j = g.named_elements["i"], g.named_elements["j"]
        with pytest.raises(HypothesisViolated):
            check_theorem_a(g, Element(g, i), Element(g, j))

    def test_theorem_b_needs_simple_nonabelian(self, groups):
        with pytest.raises(HypothesisViolated):
            check_theorem_b(groups["sym:4"])

    def test_center_intersection_needs_odd_order(self, groups):
        with pytest.raises(HypothesisViolated):
            check_center_intersection(groups["q8"], Element(groups["q8"], 1))

    def test_size2_needs_size_two_classes(self, groups):
        g = groups["q8"]
        with pytest.raises(HypothesisViolated):
            check_size2(g, Element(g, 0), Element(g, 0))

    def test_supersolvable_gate(self, groups):
        g = groups["alt:4"]
        with pytest.raises(HypothesisViolated):
            check_supersolvable_pow2(g, Element(g, 1), Element(g, 1))

    def test_quotient_checker_rejects_non_normal_kernel(self, groups):
        # a bad kernel is caller error, not a failed statement hypothesis
        from classprod import NotNormal, subgroup_generated

        g = groups["sym:3"]
        t = g.element_names.index("(1 2)")
        sub = subgroup_generated(ElementSet.from_indices(g, [t]))
        with pytest.raises(NotNormal):
            check_quotient_eta(g, sub, Element(g, 1), Element(g, 2))


class TestPerPairCheckers:
    def test_theorem_a_holds_in_e27(self, groups):
        g = groups["es:3"]
        a = Element(g, g.named_elements["(1,0,0)"])
        b = Element(g, g.named_elements["(2,0,0)"])
        r = check_theorem_a(g, a, b)
        assert r.verdict == "holds" and r.pairs_checked == 1

    def test_theorem_a_in_particular_discrepancy_on_q8(self, groups):
        g = groups["q8"]
        i = Element(g, g.named_elements["i"])
        r = check_theorem_a(g, i, i)
        assert r.verdict == "discrepancy"
        assert r.clause_verdicts["in-particular"] == "discrepancy"
        (w,) = r.witnesses
        assert w["a_name"] == "i" and w["comm_set_is_normal"] and not w["single_class"]
        assert w["eta"] == 2

    def test_product_formula_commuting_clause(self, groups):
        g = groups["cyclic:6"]
        r = check_product_formula(g, Element(g, 1), Element(g, 2))
        assert r.verdict == "holds"
        assert r.clause_verdicts.get("commuting-case") == "holds"

    def test_product_formula_everywhere_on_s4(self, groups):
        g = groups["sym:4"]
        for a in range(g.order):
            for b in range(g.order):
                assert check_product_formula(g, Element(g, a), Element(g, b)).ok

    def test_direct_product_eta_explicit(self, groups):
        e27, e125 = groups["es:3"], build_group("es:5")
        a = Element(e27, e27.named_elements["(1,0,0)"])
        b = Element(e125, e125.named_elements["(1,0,0)"])
        r = check_direct_product_eta(e27, a, e125, b)
        assert r.verdict == "holds"


class TestAggregates:
    # exact shape of the q8 rows; these change only if the checkers change
    Q8_EXPECT = {
        "theorem-a": ("discrepancy", 10),
        "theorem-b": ("vacuous", 0),
        "product-formula": ("holds", 64),
        "subgroup-implies-normal": ("holds", 8),
        "quotient-monotonicity": ("holds", 384),
        "center-intersection": ("vacuous", 0),
        "size2-classes": ("holds", 6),
        "supersolvable-two-power": ("holds", 6),
        "nilpotent-odd-size": ("holds", 5),
        "direct-product-eta": ("holds", 4),
    }

    def test_q8_snapshot(self, groups):
        rows = check_all(groups["q8"])
        assert [r.statement_id for r in rows] == list(STATEMENT_IDS)
        for r in rows:
            want_verdict, want_pairs = self.Q8_EXPECT[r.statement_id]
            assert (r.verdict, r.pairs_checked) == (want_verdict, want_pairs), r.statement_id

    def test_q8_subgroup_note(self, groups):
        r = run_statement(groups["q8"], "subgroup-implies-normal")
        assert "8 of 8 commutator sets are subgroups" in r.notes

    def test_theorem_b_on_simple_groups(self):
        for spec, pairs in (("alt:5", 14), ("alt:6", 28)):
            r = run_statement(build_group(spec), "theorem-b")
            assert r.verdict == "holds" and r.pairs_checked == pairs

    def test_theorem_b_vacuous_elsewhere(self, groups):
        for spec in ("sym:4", "cyclic:6", "q8"):
            r = run_statement(groups[spec], "theorem-b")
            assert r.verdict == "vacuous" and r.pairs_checked == 0

    def test_trivial_group_rows_never_fail(self):
        for r in check_all(build_group("cyclic:1")):
            assert r.verdict in ("holds", "vacuous"), r.statement_id

    def test_unknown_statement_id(self, groups):
        with pytest.raises(ValueError) as exc:
            run_statement(groups["q8"], "theorem-z")
        assert "theorem-a" in str(exc.value)

    def test_small_groups_satisfy_core_statements(self, groups):
        # exhaustive strategies kick in at order <= 27
        for spec, g in groups.items():
            if g.order > 27:
                continue
            for sid in ("product-formula", "quotient-monotonicity"):
                r = run_statement(g, sid)
                assert r.verdict == "holds", (spec, sid)

    def test_center_intersection_on_odd_groups(self, groups):
        for spec in ("es:3", "cyclic:9", "es:5"):
            g = build_group(spec)
            r = run_statement(g, "center-intersection")
            assert r.verdict == "holds"
            if spec != "cyclic:9":
                # rider clause only appears once some class has size > 1
                assert r.clause_verdicts.get("rider") == "holds"

    def test_quotient_monotonicity_counts_kernels(self, groups):
        g = groups["sym:3"]
        r = run_statement(g, "quotient-monotonicity")
        n_kernels = len(normal_subgroups(g))
        assert r.pairs_checked == n_kernels * g.order * g.order


class TestPairEnumeration:
    def test_equal_centralizer_pairs_are_valid(self, groups):
        from classprod import centralizer

        g = groups["sym:4"]
        pairs = list(equal_centralizer_pairs(g))
        assert pairs
        for a, b in pairs:
            assert set(centralizer(a)) == set(centralizer(b))

    def test_pairs_cover_every_class_rep(self, groups):
        from classprod import conjugacy_classes

        g = groups["q8"]
        reps = {c.representative.index for c in conjugacy_classes(g)}
        seen = {a.index for a, _ in equal_centralizer_pairs(g)}
        assert reps == seen
