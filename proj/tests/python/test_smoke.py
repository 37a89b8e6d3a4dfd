import pytest

import edp


def test_named_colorings():
    assert edp.signs("liouville", 6) == [1, -1, -1, 1, -1, 1]
    assert edp.signs("bcc", 7) == [1, -1, 1, 1, -1, -1, 1]
    assert edp.eval("alternating", 4) == -1
    assert edp.eval("liouville", 12) == -1


def test_prime_assignment():
    a = edp.PrimeAssignment("all_minus", {2: 1})
    assert a(8) == 1
    assert a(6) == -1
    assert a.overrides == {2: 1}
    assert edp.PrimeAssignment.bcc()(3) == 1
    with pytest.raises(ValueError):
        edp.PrimeAssignment("all_minus", {4: 1})


def test_bcc_identity_small():
    s = 0
    for k, v in enumerate(edp.signs("bcc", 3000), start=1):
        s += v
        assert s == edp.count_ones_base3(k)


def test_primes():
    assert edp.primes_upto(20) == [2, 3, 5, 7, 11, 13, 17, 19]
    assert edp.count_f(17377) == 854
    assert edp.check_mccurley(17377)["pass"]
    assert edp.check_f_bound(10**6)["count"] == 35181
    with pytest.raises(ValueError):
        edp.check_mccurley(100)


def test_scan_and_cute_pairs():
    assert edp.scan_max_discrepancy("alternating", 5000, steps="odd")["max_abs_sum"] == 1
    assert edp.scan_max_discrepancy("bcc", 5000, lengths="base3free")["max_abs_sum"] == 0
    assert edp.hap_sum("liouville", 1, 9) == -1


def test_theorem1():
    c = edp.construct_balanced(16)
    assert c["flips"] == [13]
    assert c["final_sum"] == 0
    assert c["assignment"](26) == 1
    assert edp.verify_theorem1(16, 100000)["max_abs_sum"] == 0


def test_rejmer():
    run = edp.run_rejmer(16)
    assert "".join("+" if v > 0 else "-" for v in run["signs"]) == "+--+-+--++---+++"
    assert run["log"][-1] == (16, 11, -1)
    r = edp.r_sequence(210)
    assert r[40] == 1 and r[96] == 1 and r[100] == 1


def test_search():
    assert edp.polya_scan(100)["first_violation"] is None
    assert edp.flip_experiment([2], 100)["first_violation"] == 2
    assert edp.min_h(10)["h"] == 1
    out = edp.bounded_sum_search(12, 1, "two")
    assert out["status"] in ("satisfiable", "unsatisfiable")


def test_rainbow_and_graham():
    assert edp.gk_adjacent(6, 9, 3)
    assert not edp.gk_adjacent(2, 5, 2)
    found = edp.search_rainbow(2, 100)
    assert found["status"] == "found"
    assert edp.verify_rainbow(2, found["colors"])["ok"]
    bad = edp.verify_rainbow(2, [0, 0, 0, 0])
    assert bad["step"] == 1 and bad["clash"] == (1, 2)
    assert edp.graham_witness([2, 4, 6, 8, 10])["ratio"] == 5


def test_cli_in_process():
    code, out, err = edp.cli(["polya", "--limit", "100"])
    assert code == 0
    assert '"first_violation": null' in out
    code, _, err = edp.cli(["polya", "--bogus"])
    assert code == 2
    assert "Usage" in err
