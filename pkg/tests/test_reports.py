from weylg.cellexpr import SymbolTable, parse_chain, table_for
from weylg.cells import Chain, boundary
from weylg.reports import (
    Report,
    corollary_combination,
    corollary_witness,
    degenerate_correction,
    verify_corollary_witnesses,
    verify_lemma_witnesses,
    verify_table1,
)


class TestTable:
    def test_all_rows_verify(self):
        report = verify_table1()
        assert report.ok
        assert len(report.lines) == 32

    def test_two_rows_are_flagged(self):
        report = verify_table1()
        flagged = [l for l in report.lines if not l.printed_exact]
        assert len(flagged) == 2
        names = {l.name for l in flagged}
        assert names == {"boundary of [a|||b,c]", "boundary of [a||||b]"}
        assert all(l.note for l in flagged)

    def test_level_four_formula_value(self):
        table = table_for("[a|||b]")
        computed = boundary(parse_chain("[a||||b]", table))
        expected = parse_chain("-[a|||b] - [b|||a]", table)
        assert computed == expected


class TestWitnesses:
    def test_all_witnesses_verify(self):
        report = verify_lemma_witnesses()
        assert report.ok
        assert len(report.lines) == 9

    def test_product_rules_exact_inverse_rules_repaired(self):
        report = verify_lemma_witnesses()
        exact = [l for l in report.lines if l.printed_exact]
        repaired = [l for l in report.lines if not l.printed_exact]
        assert len(exact) == 6
        assert len(repaired) == 3
        assert all("inverse rule" in l.name for l in repaired)
        assert all("degenerate correction" in l.note for l in repaired)


class TestCorollaries:
    def test_derived_witnesses_are_exact(self):
        report = verify_corollary_witnesses()
        assert report.ok
        assert len(report.lines) == 3

    def test_combination_and_witness_agree_on_fresh_symbols(self):
        table = SymbolTable.free("pqrs")
        from weylg.cellexpr import parse_element

        args = tuple(parse_element(n, table) for n in ("p", "q", "r"))
        combo = corollary_combination(0, args)
        witness = corollary_witness(0, table, ("p", "q", "r"))
        assert boundary(witness) == combo


class TestDegenerateCorrection:
    def test_zero_junk(self):
        assert degenerate_correction(Chain.zero()) == Chain.zero()

    def test_non_degenerate_junk_rejected(self):
        table = SymbolTable.free("a")
        chain = parse_chain("[a,a]", table)
        assert degenerate_correction(chain) is None


def test_report_failure_listing():
    report = Report()
    report.record("good", True)
    report.record("bad", False, "broken")
    assert not report.ok
    assert report.failures()[0].name == "bad"
