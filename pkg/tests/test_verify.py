import json
from fractions import Fraction

import pytest

from grouptensor import (
    Config,
    SpecError,
    builtin_corpus,
    check_theorem,
    group_from_spec,
    run_suite,
    tensor_degree,
    tensor_square,
)
from grouptensor.verify import (
    ALL_CHECK_IDS,
    DISCREPANCY_NOTE,
    THEOREM_IDS,
    corpus_from_file,
    normalize_check_ids,
    summarize,
)


def failures(report):
    return [c for c in report.checks if not c.skipped and c.note is None and c.holds is False]


def test_builtin_corpus_membership():
    specs8 = [e.spec for e in builtin_corpus(8)]
    for expected in ["C1", "C8", "C2xC2", "C2xC4", "C2xC2xC2", "D8", "Q8", "S3"]:
        assert expected in specs8
    assert "D10" not in specs8 and "A4" not in specs8
    assert [e.spec for e in builtin_corpus(1)] == ["C1"]
    assert len(builtin_corpus(16)) >= 25
    specs24 = [e.spec for e in builtin_corpus(24)]
    assert "S4" in specs24 and "A4" in specs24


def test_corpus_entries_reparse(tmp_path):
    for entry in builtin_corpus(12):
        rebuilt = group_from_spec(entry.spec)
        assert rebuilt.mul == entry.group.mul
    path = tmp_path / "corpus.txt"
    path.write_text("# comment\nC4  # inline\n\nS3\n")
    entries = corpus_from_file(str(path), 16)
    assert [e.spec for e in entries] == ["C4", "S3"]


def test_corpus_entry_limit_marker():
    entry = [e for e in builtin_corpus(8) if e.spec == "Q8"][0]
    assert entry.ensure_tensor(Config(max_cosets=4)) is None
    assert entry.status == "exceeded-limit"
    fresh = [e for e in builtin_corpus(8) if e.spec == "Q8"][0]
    assert fresh.ensure_tensor() is not None
    assert fresh.status == "ok" and fresh.tensor.order == 64


def test_normalize_check_ids():
    assert normalize_check_ids("all") == ALL_CHECK_IDS
    assert normalize_check_ids("thm-2.2,ex-3.3") == ("thm-2.2", "ex-3.3")
    with pytest.raises(SpecError):
        normalize_check_ids("thm-9.9")
    with pytest.raises(SpecError):
        normalize_check_ids("")


def test_check_theorem_single_instances():
    # a subgroup-index bound evaluated on one instance with exact sides
    s3 = group_from_spec("S3")
    a3 = [x for x in s3.elements() if s3.element_order(x) in (1, 3)]
    check = check_theorem("thm-2.2", {"group": "S3", "subgroup": a3, "n": 1})
    assert check.holds is True
    assert check.lhs is not None and check.rhs is not None
    assert check.rhs == Fraction(2) ** 2 * check_theorem(
        "thm-2.2", {"group": "S3", "subgroup": list(range(6)), "n": 1}
    ).lhs

    bound = check_theorem("thm-1.3", {"group": "S3"})
    assert bound.rhs == Fraction(1, 2)
    assert bound.lhs == tensor_degree(s3, tensor_square(s3))
    assert bound.holds is True


def test_check_theorem_skips_inapplicable():
    # the tensor-center hypothesis fails for abelian groups
    skipped = check_theorem("thm-1.3", {"group": "C4"})
    assert skipped.skipped and skipped.note == "hypothesis-not-met"
    # tensor class of C2 is 2, so the class <= 1 hypothesis fails at n = 1
    skipped2 = check_theorem("lem-2.7", {"group": "C2", "n": 1})
    assert skipped2.skipped
    held = check_theorem("lem-2.7", {"group": "C2", "n": 2})
    assert held.holds is True and held.lhs == Fraction(1)


def test_example_checks():
    ex2 = check_theorem("ex-3.2", {"group": "C4", "subgroup": [0, 2], "n": 2})
    assert ex2.holds is True and ex2.lhs == 1 and ex2.rhs == 1

    ex3 = check_theorem(
        "ex-3.3", {"group": "D8", "subgroup": [0, 2, 5, 7], "n": 4}
    )
    assert ex3.holds is False
    assert ex3.note == DISCREPANCY_NOTE
    assert ex3.lhs == Fraction(1)
    assert ex3.rhs == Fraction(3, 32)
    assert ex3.witness["reference"] == "192/2048"


def test_trivial_group_suite_all_holds():
    report = run_suite(builtin_corpus(1), "all", Config(max_order=1))
    assert failures(report) == []
    assert report.summary["fail"] == 0
    assert all(c.holds or c.skipped for c in report.checks)


def test_suite_determinism_and_summary():
    config = Config(max_order=6)
    corpus = builtin_corpus(6)
    r1 = run_suite(corpus, "all", config)
    r2 = run_suite(corpus, "all", config)
    assert r1.to_json() == r2.to_json()
    assert r1.to_csv() == r2.to_csv()
    total = sum(r1.summary.values())
    assert total == len(r1.checks)
    assert summarize(r1.checks) == r1.summary


def test_suite_parallel_matches_serial():
    corpus = builtin_corpus(8)
    serial = run_suite(corpus, ("thm-2.2", "thm-quot", "ex-3.3"), Config(max_order=8, jobs=1))
    parallel = run_suite(corpus, ("thm-2.2", "thm-quot", "ex-3.3"), Config(max_order=8, jobs=4))
    assert serial.to_json() == parallel.to_json()


def test_exactly_one_flagged_record():
    report = run_suite(builtin_corpus(8), "all", Config(max_order=8))
    flagged = [c for c in report.checks if c.note is not None and not c.skipped]
    assert len(flagged) == 1
    assert flagged[0].id == "ex-3.3"
    assert report.summary["flagged"] == 1


def test_exceeded_limit_records_skips():
    report = run_suite(builtin_corpus(8), "all", Config(max_order=8, max_cosets=4))
    skipped = [c for c in report.checks if c.skipped]
    assert skipped, "tiny coset limits must surface as skipped records"
    assert all("exceeded-limit" in (c.note or "") for c in skipped)
    # C1 still enumerates (1 coset) and tensor-free checks still run
    assert any(not c.skipped for c in report.checks)


def test_hypothesis_filtering_in_suite():
    report = run_suite(builtin_corpus(8), "all", Config(max_order=8))
    abelian = {"C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8",
               "C2xC2", "C2xC4", "C2xC2xC2"}
    for check in report.checks:
        if check.id == "thm-1.3" and not check.skipped:
            assert check.group not in abelian
        if check.id == "thm-2.8" and not check.skipped:
            assert check.group == "S3"
        if check.id == "thm-3cases" and not check.skipped:
            g = group_from_spec(check.group)
            assert len(check.subgroup) < g.order


def test_report_shapes():
    report = run_suite(builtin_corpus(4), ("thm-1.1", "ex-3.2"), Config(max_order=4))
    doc = json.loads(report.to_json())
    assert set(doc) == {"version", "config", "checks", "summary"}
    assert set(doc["summary"]) == {"pass", "fail", "skipped", "flagged"}
    for rec in doc["checks"]:
        assert rec["id"] in ("thm-1.1", "ex-3.2")
        assert rec["lhs"] is None or "/" in rec["lhs"]
        assert "lhs_decimal" in rec and "rhs_decimal" in rec
        assert rec["relation"] in ("le", "eq")
    csv_text = report.to_csv()
    lines = csv_text.strip().splitlines()
    assert len(lines) == len(report.checks) + 1
    assert lines[0].startswith("id,group,subgroup")
    table = report.to_table()
    assert "pass" in table and "verdict" in table


def test_report_ordering_sorted():
    report = run_suite(builtin_corpus(6), "all", Config(max_order=6))
    keys = [c.sort_key() for c in report.checks]
    assert keys == sorted(keys)


def test_violations_have_witnesses_and_reproduce():
    report = run_suite(builtin_corpus(8), "all", Config(max_order=8))
    bad = failures(report)
    assert bad, "the corpus is known to violate some published bounds"
    for check in bad:
        assert check.witness is not None, check
        instance = {"group": check.group}
        if check.subgroup is not None:
            instance["subgroup"] = list(check.subgroup)
        if check.normal is not None:
            instance["normal"] = list(check.normal)
        if check.n is not None:
            instance["n"] = check.n
        if check.variant is not None:
            instance["variant"] = check.variant
        again = check_theorem(check.id, instance)
        assert again.lhs == check.lhs and again.rhs == check.rhs
        assert again.holds is False


def test_known_violation_instances():
    # d_{2}(C2) = 1 exceeds (1 + d_1(C2)) / 2 = 7/8
    c = check_theorem("thm-2.3", {"group": "C2", "subgroup": [0, 1], "n": 1})
    assert c.holds is False
    assert c.lhs == Fraction(1) and c.rhs == Fraction(7, 8)
    # the n = 1 case of the class-bound statement fails on C2
    c2 = check_theorem("thm-2.6", {"group": "C2", "n": 1})
    assert c2.holds is False
    assert c2.lhs == Fraction(3, 4) and c2.rhs == Fraction(5, 8)


def test_theorem_id_list_is_complete():
    assert set(THEOREM_IDS) == {
        "thm-1.1", "thm-1.2", "thm-1.3", "lem-2.1", "thm-2.2", "thm-2.3",
        "thm-2.5", "thm-2.6", "lem-2.7", "thm-2.8", "thm-3cases", "thm-quot",
        "sanity-erl", "sanity-lescot",
    }
