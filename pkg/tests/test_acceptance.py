"""End-to-end acceptance checks, one test per criterion, each with a pinned time limit.

Run with ``pytest tests/test_acceptance.py -s`` to see the PASS/FAIL lines.
"""
import time

from spechtcomb.algebra import ONE, q
from spechtcomb.characters import simple_characters
from spechtcomb.decomposition import decomp_entry
from spechtcomb.partitions import Partition, StandardTableau, dominates, enumerate_std
from spechtcomb.paths import Path2, deg_path, wall_hits
from spechtcomb.regularisation import dstd, reg_e, reg_ep, reg_prime, std_by_target, w_tuple
from spechtcomb.verification import ACCEPTANCE_GRID, CENSUS_S, CENSUS_T1, CENSUS_T2, counterexample_census, run_suite

P = Partition.parse


def check(label: str, limit: float, body) -> None:
    """Run body() -> bool, print a PASS/FAIL line, and assert both the result and the time limit."""
    start = time.perf_counter()
    ok = body()
    elapsed = time.perf_counter() - start
    status = "PASS" if ok and elapsed < limit else "FAIL"
    print(f"\n{status} {label} ({elapsed:.2f}s, limit {limit:g}s)")
    assert ok, label
    assert elapsed < limit, f"{label} took {elapsed:.2f}s"


def suites_pass(*runs) -> bool:
    ok = True
    for suite, kwargs in runs:
        rep = run_suite(suite, **kwargs)
        print(f"\n  {rep.summary()}")
        if rep.first_failure:
            print(f"  first failure: {rep.first_failure}")
        ok = ok and rep.passed
    return ok


def test_small_block_example_e2_p2():
    def body():
        lam = P("2,2,1,1")
        groups = std_by_target(lam, 2, 2)
        mus = [lam, P("2,1^4"), P("1^6")]
        return (
            len(list(enumerate_std(lam))) == 9
            and len(dstd(lam, 2, 2)) == 4
            and {mu: len(ts) for mu, ts in groups.items()} == {lam: 4, P("2,1^4"): 4, P("1^6"): 1}
            and [decomp_entry(lam, mu, 2, 2) for mu in mus] == [ONE, q, ONE]
        )

    check("small block example e=p=2, shape (2,2,1,1)", 1.0, body)


def test_single_reflection_example_e4():
    def body():
        pi = Path2.from_word("++++-++++--+++----+")
        res = reg_e(pi, 4)
        return (
            deg_path(pi, 4) == 0
            and res.r == 1
            and deg_path(res.output, 4) == -1
            and res.output.shape() == P("2^5,1^9")
        )

    check("single reflection example e=4", 1.0, body)


def test_three_stage_example_e3_p2():
    def body():
        pi = Path2.from_word("++++++-++++++----+----++++-+-")
        chain = reg_ep(pi, 3, 2)
        eta = chain.output
        return (
            pi.n == 29
            and wall_hits(pi, 3) == (2, 5, 7, 10, 13, 16, 18, 21, 23, 26, 28)
            and chain.zset == (2, 1, 0)
            and w_tuple(chain.zset, eta, 3, 2) == (13, 23, 28)
            and eta.shape() == P("2^4,1^21")
            and deg_path(pi, 3) == 3
            and deg_path(eta, 3) == -2
            and deg_path(reg_prime(pi, 3, 2), 3) == 2
            and chain.r == 1
        )

    check("three-stage regularisation example e=3, p=2", 1.0, body)


def test_three_column_degree_census():
    def body():
        rep = counterexample_census()
        t1, t2, s = (StandardTableau.from_rows(r) for r in (CENSUS_T1, CENSUS_T2, CENSUS_S))
        degs = {row["rows"]: row["degree"] for row in rep["tableaux"]}
        return (
            rep["passed"]
            and sorted(r for r, d in degs.items() if d == 2) == sorted([str(t1), str(t2)])
            and [r for r, d in degs.items() if d == -2] == [str(s)]
            and not dominates(t1, t2)
            and not dominates(t2, t1)
        )

    check("degree census of (4,3,1) at e=3", 1.0, body)


def test_degree_formulas_agree():
    check("degree formulas agree, n<=16, e=2..6", 30.0, lambda: suites_pass(("degrees", {"max_n": 16, "es": [2, 3, 4, 5, 6]})))


def test_character_identities():
    check("character identities, n<=14, full (e,p) grid", 120.0, lambda: suites_pass(("characters", {"max_n": 14})))


def test_decomposition_cross_check():
    check("closed-form vs counted decomposition numbers, n<=14", 120.0, lambda: suites_pass(("decomp", {"max_n": 14})))


def test_adjustment_identity():
    check("D^p = D^0 times adjustment matrix, n<=14", 30.0, lambda: suites_pass(("adjustment", {"max_n": 14})))


def test_structural_suites():
    def bar_invariant() -> bool:
        for e, p in ACCEPTANCE_GRID:
            for n in range(15):
                if not all(ch.is_bar_invariant() for ch in simple_characters(n, e, p).values()):
                    print(f"\n  bar-invariance fails at n={n}, e={e}, p={p}")
                    return False
        print("\n  simple characters bar-invariant on the full grid")
        return True

    def body():
        ok = suites_pass(("regularisation", {"max_n": 14}), ("inequality", {"max_n": 14}))
        return bar_invariant() and ok

    check("structural suites: reflections, preimages, involution, bar-invariance, non-negativity", 120.0, body)


def test_homomorphism_shadows():
    check("kernel/image shadows, n<=14, e<=5", 60.0, lambda: suites_pass(("section5", {"max_n": 14, "es": [2, 3, 4, 5]})))
