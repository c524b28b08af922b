import pytest

import polymat as pm
from conftest import I, M, veronese

O = pm.VariableOrder


class TestSortGenerators:
    def test_veronese22_lex(self):
        seq = pm.sort_generators(veronese(2, 2), "lex", O.identity(2))
        assert seq.seq == (M("x1^2", 2), M("x1*x2", 2), M("x2^2", 2))

    def test_veronese22_revlex_agrees(self):
        seq = pm.sort_generators(veronese(2, 2), "revlex", O.identity(2))
        assert seq.seq == (M("x1^2", 2), M("x1*x2", 2), M("x2^2", 2))

    def test_remark_ideal_lex_321(self, remark_ideal):
        # rank by exponent of x3 first, then x2, then x1
        seq = pm.sort_generators(remark_ideal, "lex", O((3, 2, 1)))
        assert seq.seq == (M("x1*x3^2"), M("x2^2*x3"), M("x1*x2*x3"), M("x1^2*x3"))

    def test_requires_equigenerated(self):
        with pytest.raises(pm.NotEquigeneratedError):
            pm.sort_generators(I("x1 + x2^2"), "lex", O.identity(2))

    def test_free_form_sequence_must_be_permutation(self, remark_ideal):
        with pytest.raises(ValueError):
            pm.GeneratorSequence(remark_ideal, "lex", O.identity(3), remark_ideal.gens[:2])


class TestHasLinearQuotients:
    def test_veronese22_lex(self):
        seq = pm.sort_generators(veronese(2, 2), "lex", O.identity(2))
        assert pm.has_linear_quotients(seq)

    def test_remark_fails_lex_321(self, remark_ideal):
        failure = pm.linear_quotients_failure(
            pm.sort_generators(remark_ideal, "lex", O((3, 2, 1)))
        )
        assert failure is not None
        assert failure.position == 2
        assert failure.blocker == M("x1*x3^2")

    def test_remark_fails_revlex_321(self, remark_ideal):
        failure = pm.linear_quotients_failure(
            pm.sort_generators(remark_ideal, "revlex", O((3, 2, 1)))
        )
        assert failure is not None
        assert failure.position == 2

    def test_remark_holds_identity_lex(self, remark_ideal):
        seq = pm.sort_generators(remark_ideal, "lex", O.identity(3))
        assert pm.has_linear_quotients(seq)

    def test_cross_check_agrees_on_corpus(self):
        identity = O.identity(3)
        for item in pm.enumerate_corpus(pm.CorpusSpec(n=3, d=2)):
            for kind in ("lex", "revlex"):
                seq = pm.sort_generators(item.ideal, kind, identity)
                plain = pm.linear_quotients_failure(seq)
                checked = pm.linear_quotients_failure(seq, cross_check=True)
                assert plain == checked


class TestAllOrders:
    def test_veronese_all_lex(self):
        assert pm.has_lq_all_orders(veronese(3, 2), "lex")

    def test_remark_first_failing_revlex_perm(self, remark_ideal):
        order, failure = pm.lq_all_orders_failure(remark_ideal, "revlex")
        assert order == O((3, 2, 1))
        assert failure.position == 2

    def test_remark_first_failing_lex_perm(self, remark_ideal):
        order, failure = pm.lq_all_orders_failure(remark_ideal, "lex")
        assert order == O((3, 2, 1))

    def test_disjoint_pairs_fail_immediately(self):
        order, failure = pm.lq_all_orders_failure(I("x1*x2 + x3*x4"), "lex")
        assert order == O((1, 2, 3, 4))
        assert failure.position == 2

    def test_permutation_guard(self):
        wide = pm.make_ideal(9, pm.monomials_of_degree(9, 1).elems)
        with pytest.raises(pm.BoundExceededError):
            pm.has_lq_all_orders(wide, "lex")
        # an ideal failing at the very first permutation keeps the lifted
        # sweep cheap
        disjoint = I("x1*x2 + x8*x9", 9)
        with pytest.raises(pm.BoundExceededError):
            pm.has_lq_all_orders(disjoint, "lex")
        assert not pm.has_lq_all_orders(disjoint, "lex", max_vars=9)

    def test_permutation_guard_env_override(self, monkeypatch):
        disjoint = I("x1*x2 + x8*x9", 9)
        monkeypatch.setenv("POLYMAT_MAX_PERMS", "9")
        assert not pm.has_lq_all_orders(disjoint, "lex")


class TestTheoremEquivalence:
    def test_veronese33_consistent_true(self):
        check = pm.theorem_equivalence(veronese(3, 3))
        assert check.consistent and check.polymatroidal

    def test_remark_consistent_false(self, remark_ideal):
        check = pm.theorem_equivalence(remark_ideal)
        assert check.consistent and not check.polymatroidal

    def test_exhaustive_n3_d2(self):
        for item in pm.enumerate_corpus(pm.CorpusSpec(n=3, d=2)):
            assert pm.theorem_equivalence(item.ideal).consistent, item.ideal


class TestConjectureProbe:
    def test_veronese(self):
        probe = pm.conjecture_probe(veronese(3, 2))
        assert probe.outcome is pm.ConjectureOutcome.POLYMATROIDAL

    def test_refuted(self):
        probe = pm.conjecture_probe(I("x1*x2 + x3*x4"))
        assert probe.outcome is pm.ConjectureOutcome.REFUTED
        assert probe.refuting_order == O((1, 2, 3, 4))

    def test_no_counterexamples_small_corpus(self):
        for d in (1, 2):
            for item in pm.enumerate_corpus(pm.CorpusSpec(n=3, d=d)):
                outcome = pm.conjecture_probe(item.ideal).outcome
                assert outcome is not pm.ConjectureOutcome.COUNTEREXAMPLE


def test_polymatroidal_has_lq_both_kinds_all_orders():
    for n, d in ((3, 2), (3, 3), (4, 2)):
        for item in pm.enumerate_corpus(pm.CorpusSpec(n=n, d=d)):
            if pm.is_polymatroidal(item.ideal):
                assert pm.has_lq_all_orders(item.ideal, "lex"), item.ideal
                assert pm.has_lq_all_orders(item.ideal, "revlex"), item.ideal


class TestQuotientsWithLinearResolution:
    def test_remark_all_twelve(self, remark_ideal):
        for kind in ("lex", "revlex"):
            for order in pm.all_variable_orders(3):
                seq = pm.sort_generators(remark_ideal, kind, order)
                assert pm.has_quotients_with_linear_resolution(seq), (kind, order)

    def test_veronese23_principal_colons(self):
        for kind in ("lex", "revlex"):
            for order in pm.all_variable_orders(2):
                seq = pm.sort_generators(veronese(2, 3), kind, order)
                assert pm.has_quotients_with_linear_resolution(seq)

    def test_lq_implies_qwlr_on_corpus(self):
        identity = O.identity(3)
        for item in pm.enumerate_corpus(pm.CorpusSpec(n=3, d=2)):
            for kind in ("lex", "revlex"):
                seq = pm.sort_generators(item.ideal, kind, identity)
                if pm.has_linear_quotients(seq):
                    assert pm.has_quotients_with_linear_resolution(seq)

    def test_multidegree_colon_blocks(self):
        # (x1^2, x2^2): the colon of the second by the first is x2^2, not
        # linear, but worse: the full ideal has no linear resolution
        seq = pm.sort_generators(I("x1^2 + x2^2"), "lex", O.identity(2))
        assert not pm.has_quotients_with_linear_resolution(seq)
