import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import dominant_walks, naive_reg, naive_reg_ep
from spechtcomb import kernels
from spechtcomb.partitions import Partition, StandardTableau, enumerate_std, partitions_two_column
from spechtcomb.paths import Path2, deg_path, path2_from_tableau, tableau_from_path, wall_hits
from spechtcomb.regularisation import (
    apply_reg_e,
    apply_reg_ep,
    dstd,
    ep_compatible,
    iota,
    is_regular,
    preimage_reg_e,
    r_e,
    RegResult,
    reg_e,
    reg_ep,
    reg_prime,
    render_chain,
    rho_Z,
    std_by_target,
    w_tuple,
)

P = Partition.parse
WORD_E4 = "++++-++++--+++----+"
WORD_E3P2 = "++++++-++++++----+----++++-+-"
NINE = ["+-+-++", "+-++-+", "++--++", "++-+-+", "+-+++-", "++-++-", "+++-+-", "++++--", "+++--+"]
GRID = [(2, 0), (3, 0), (2, 2), (3, 3), (3, 2), (2, 3), (4, 3), (5, 2)]


def _tab(word):
    return tableau_from_path(Path2.from_word(word))


def test_ep_compatible():
    assert ep_compatible(2, 0) and ep_compatible(3, 3) and ep_compatible(3, 2)
    assert not ep_compatible(4, 2) and not ep_compatible(6, 3) and not ep_compatible(3, 1)


def test_reg_e_example():
    pi = Path2.from_word(WORD_E4)
    res = reg_e(pi, 4)
    assert res.r == 1 and res.position == 15 and res.wall == 2
    assert deg_path(pi, 4) == 0 and deg_path(res.output, 4) == -1
    assert res.output.shape() == P("2^5,1^9")
    assert apply_reg_e(_tab(WORD_E4), 4).shape == P("2^5,1^9")


def test_reg_e_trivial_and_errors():
    low = Path2.from_word("+-+-+")
    assert reg_e(low, 3) == RegResult(low, 0, None, None)
    with pytest.raises(ValueError):
        reg_e(Path2.from_word("-"), 2)
    with pytest.raises(TypeError):
        reg_e("++", 2)


@pytest.mark.parametrize("e", [2, 3, 4])
def test_reg_e_invariants_exhaustive(e):
    for n in range(0, 12):
        for h in dominant_walks(n):
            pi = Path2(h)
            res = reg_e(pi, e)
            assert (res.output.heights, res.r) == naive_reg(h, e)
            assert reg_e(res.output, e).r == 0
            assert res.output.residues(e) == pi.residues(e)
            assert deg_path(res.output, e) == deg_path(pi, e) - res.r
            assert res.output.end >= pi.end
            assert (res.r == 0) == (res.output == pi)


def test_nine_tableaux_of_2211():
    lam = P("2,2,1,1")
    tabs = [_tab(w) for w in NINE]
    assert sorted(t.cols for t in tabs) == [t.cols for t in enumerate_std(lam)]
    assert dstd(lam, 2, 2) == sorted(tabs[:4], key=lambda t: t.cols)
    groups = std_by_target(lam, 2, 2)
    assert {mu: len(ts) for mu, ts in groups.items()} == {lam: 4, P("2,1^4"): 4, P("1^6"): 1}
    for w in NINE[4:8]:
        pi = Path2.from_word(w)
        # each visits the modulus-4 wall at height 3 and ends below it, so z = 1 moves it;
        # reg_2 reflects at the same visit, so the image is the same either way
        chain = reg_ep(pi, 2, 2)
        assert chain.zset == (1,)
        assert chain.output == reg_e(pi, 2).output
        assert chain.output.shape() == P("2,1^4")
    chain = reg_ep(Path2.from_word(NINE[8]), 2, 2)
    assert chain.zset == (1, 0)
    assert chain.output == Path2.from_word("++++++")
    assert chain.r == 0


def test_three_stage_example_e3_p2():
    eta_src = Path2.from_word(WORD_E3P2)
    assert eta_src.n == 29
    assert wall_hits(eta_src, 3) == (2, 5, 7, 10, 13, 16, 18, 21, 23, 26, 28)
    chain = reg_ep(eta_src, 3, 2)
    assert chain.zset == (2, 1, 0)
    eta = chain.output
    assert eta.shape() == P("2^4,1^21")
    assert w_tuple(chain.zset, eta, 3, 2) == (13, 23, 28)
    assert deg_path(eta_src, 3) == 3
    assert deg_path(eta, 3) == -2
    assert chain.r == 1
    out = reg_prime(eta_src, 3, 2)
    expected = (
        tuple(range(0, 7)) + (5,) + tuple(range(6, 15)) + (13,) + tuple(range(14, 18)) + (16,)
        + tuple(range(17, 21)) + (19, 20, 21)
    )
    assert out.heights == expected
    assert deg_path(out, 3) == 2
    # only the arcs [16,18] (wall 14) and [21,23] (wall 17) differ from eta
    diff = [a for a in range(30) if out[a] != eta[a]]
    assert diff == [17, 22]
    assert out.residues(3) == eta_src.residues(3)
    assert chain.to_json()[0]["z"] == 2 and chain.to_json()[-1]["endpoint"] == 21
    assert "modulus 12" in render_chain(chain)


def test_rho_and_w_trivial_cases():
    eta = Path2.from_word(WORD_E3P2)
    assert rho_Z(eta, (2, 1, 0), 3, 0) == eta
    assert rho_Z(eta, (), 3, 2) == eta
    assert w_tuple((), eta, 3, 2) == ()
    assert w_tuple((1, 0), Path2.from_word("+-+"), 3, 2) == (0, 0)


def test_regular_path_has_empty_chain():
    chain = reg_ep(Path2.from_word("+-+-++"), 2, 2)
    assert chain.stages == () and chain.output == chain.source and chain.zset == ()
    assert reg_ep(Path2.from_word("+-"), 4, 2).extrapolated


@pytest.mark.parametrize("e, p", GRID + [(4, 2), (6, 3)])
def test_reg_ep_matches_naive(e, p):
    for n in range(0, 12):
        for h in dominant_walks(n):
            chain = reg_ep(Path2(h), e, p)
            assert chain.output.heights == naive_reg_ep(h, e, p)
            zs = chain.zset
            assert all(a > b for a, b in zip(zs, zs[1:]))
            ends = [h[-1]] + [st.path.end for st in chain.stages]
            assert all(a < b for a, b in zip(ends, ends[1:]))
            out = chain.output.heights
            moduli = [e] if p == 0 else [e * p**z for z in range(6)]
            assert all(kernels.reg(out, m)[1] == 0 for m in moduli)
    assert reg_ep(Path2.from_word("+"), 4, 2).extrapolated == (not ep_compatible(4, 2))


@pytest.mark.parametrize("e", [2, 3])
def test_dstd_p0_is_dstd_e(e):
    for lam in partitions_two_column(9):
        assert dstd(lam, e, 0) == [t for t in enumerate_std(lam) if r_e(t, e) == 0 and apply_reg_e(t, e) == t]


def test_dstd_below_first_wall():
    lam = P("1^3")
    assert dstd(lam, 5, 0) == list(enumerate_std(lam))


def test_preimage_example():
    s = _tab("++++++")
    pre = preimage_reg_e(s, 2)
    assert len(pre) == 2
    assert s in pre
    (t,) = [x for x in pre if x != s]
    assert t.shape == P("2,1^4")
    assert apply_reg_e(t, 2) == s
    assert preimage_reg_e(_tab("+++-"), 2) == []


@pytest.mark.parametrize("e", [2, 3, 4])
def test_preimage_matches_brute_inversion(e):
    for n in range(0, 12):
        paths = dominant_walks(n)
        fibres = {}
        for h in paths:
            fibres.setdefault(naive_reg(h, e)[0], set()).add(h)
        for h in paths:
            got = {x.heights for x in preimage_reg_e(Path2(h), e)}
            assert got == fibres.get(h, set())


@pytest.mark.parametrize("e, p", GRID)
def test_target_structure(e, p):
    for n in range(0, 11):
        for lam in partitions_two_column(n):
            for mu, ts in std_by_target(lam, e, p).items():
                regular = dstd(mu, e, p)
                zsets = {reg_ep(t, e, p).zset for t in ts}
                rs = {r_e(t, e) for t in ts}
                assert len(zsets) == 1 and len(rs) == 1
                images = [apply_reg_ep(t, e, p) for t in ts]
                assert sorted(x.cols for x in images) == [s.cols for s in regular]
                primes = [reg_prime(t, e, p) for t in ts]
                assert sorted(x.cols for x in primes) == [s.cols for s in regular]
                (r,) = rs
                for t, s in zip(ts, primes):
                    assert is_regular(s, e, p)
                    assert deg_path(path2_from_tableau(s), e) == deg_path(path2_from_tableau(t), e) - r
                    assert path2_from_tableau(s).residues(e) == path2_from_tableau(t).residues(e)


@pytest.mark.parametrize("e, p", GRID)
def test_iota(e, p):
    for n in range(0, 11):
        for lam in partitions_two_column(n):
            regular = dstd(lam, e, p)
            images = [iota(t, e) for t in regular]
            assert sorted(x.cols for x in images) == [t.cols for t in regular]
            for t, u in zip(regular, images):
                assert iota(u, e) == t
                assert u.shape == t.shape
                pt, pu = path2_from_tableau(t), path2_from_tableau(u)
                assert pu.residues(e) == pt.residues(e)
                assert deg_path(pu, e) == -deg_path(pt, e)


def test_arc_free_path_fixed_by_iota():
    pi = Path2.from_word("+++++")
    assert iota(pi, 2) == pi


@settings(max_examples=100)
@given(st.lists(st.sampled_from([1, -1]), max_size=22), st.sampled_from(GRID))
def test_reg_ep_idempotent(steps, ep):
    e, p = ep
    h = [0]
    for s in steps:
        h.append(h[-1] + s if h[-1] + s >= 0 else 1)
    out = apply_reg_ep(Path2(tuple(h)), e, p)
    assert reg_ep(out, e, p).stages == ()


def test_tableau_round_trip_through_maps():
    t = StandardTableau.from_rows([(1, 2), (3, 4), (5,), (6,)])
    assert isinstance(apply_reg_ep(t, 2, 2), StandardTableau)
    assert isinstance(iota(t, 2), StandardTableau)
