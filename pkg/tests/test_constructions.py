import pytest

from flipshift.constructions import (BlockFlipSpec, OneBlockConjugacySpec,
                                     build_flip_pair, decompose_conjugacy,
                                     higher_block, verify_decomposition)
from flipshift.equivalence import sse_verify, verify_prop22
from flipshift.errors import SpecError
from flipshift.fixtures import (example1_pair, example1_symmetric_pair,
                                golden_mean_pair, one_point_pair)
from flipshift.shifts import (blocks, count_pmn_bruteforce, enumerate_periodic,
                              word_center)
from flipshift.zeta import lind_zeta


def test_higher_block_one_point():
    p = one_point_pair()
    hb, chain = higher_block(p, 3)
    assert hb.size == 1
    assert chain.lag == 3
    assert sse_verify(chain).passed


def test_higher_block_golden_mean():
    gm = golden_mean_pair()
    hb, chain = higher_block(gm, 1)
    assert hb.alphabet == ("1 1", "1 2", "2 1")
    assert dict(hb.tau) == {"1 1": "1 1", "1 2": "2 1", "2 1": "1 2"}
    assert chain.pairs[0] == gm
    assert chain.lag == 1
    assert sse_verify(chain).passed
    assert verify_prop22(chain.links[0], 5).passed


def test_higher_block_example1():
    p1 = example1_pair()
    hb, chain = higher_block(p1, 1)
    assert hb.size == 8
    assert sse_verify(chain).passed
    assert lind_zeta(hb, 10) == lind_zeta(p1, 10)


def test_higher_block_random_pairs():
    import random

    from corpus import random_flip_pair
    rng = random.Random(59)
    for _ in range(5):
        p = random_flip_pair(rng, max_size=4)
        for n in (1, 2):
            hb, chain = higher_block(p, n)
            assert chain.lag == n
            assert sse_verify(chain).passed
            for link in chain.links:
                assert verify_prop22(link, 4).passed


def test_block_flip_identity_rule():
    gm = golden_mean_pair()
    spec = BlockFlipSpec(gm.A, 0, {(a,): a for a in gm.alphabet})
    built, code = build_flip_pair(spec)
    relabeled = built.relabel({f"{a}|{a}": a for a in gm.alphabet})
    assert relabeled.reorder(gm.alphabet) == gm
    x = ("1", "2")
    assert code.apply_point(x) == ("1|1", "2|2")


def test_block_flip_involution_rule_collapses():
    p1 = example1_pair()
    spec = BlockFlipSpec(p1.A, 0, {(a,): p1.tau[a] for a in p1.alphabet})
    built, _ = build_flip_pair(spec)
    relabeled = built.relabel({f"{a}|{p1.tau[a]}": a for a in p1.alphabet})
    assert relabeled.reorder(p1.alphabet) == p1


def test_block_flip_window_one():
    gm = golden_mean_pair()
    rule = {w: w[2] for w in blocks(gm.A, 3)}
    spec = BlockFlipSpec(gm.A, 1, rule)
    built, code = build_flip_pair(spec)
    for m in range(1, 6):
        assert len(enumerate_periodic(built.A, m)) == len(enumerate_periodic(gm.A, m))
        for n in (0, 1):
            assert count_pmn_bruteforce(built, m, n) == spec.count_pmn(m, n)
        images = {code.apply_point(x) for x in enumerate_periodic(gm.A, m)}
        assert images == set(enumerate_periodic(built.A, m))


def test_block_flip_rule_must_be_total():
    gm = golden_mean_pair()
    with pytest.raises(SpecError) as e:
        BlockFlipSpec(gm.A, 0, {("1",): "1"})
    assert e.value.reason == "phi_total"


def test_block_flip_rule_must_be_involutive():
    gm = golden_mean_pair()
    with pytest.raises(SpecError) as e:
        BlockFlipSpec(gm.A, 1, {w: "1" for w in blocks(gm.A, 3)})
    assert e.value.reason == "phi_involution"


def test_block_flip_rule_must_stay_admissible():
    gm = golden_mean_pair()
    with pytest.raises(SpecError) as e:
        BlockFlipSpec(gm.A, 1, {w: "2" for w in blocks(gm.A, 3)})
    assert e.value.reason == "phi_into"


def _center_read_spec(base, n):
    """Conjugacy from the (2n+1)-block pair down to the base, reading centers."""
    hb, _ = higher_block(base, 2 * n)
    psi = {lab: word_center(tuple(lab.split(" "))) for lab in hb.alphabet}
    return OneBlockConjugacySpec(hb, base, psi, n)


def test_decompose_identity_conjugacy():
    gm = golden_mean_pair()
    spec = OneBlockConjugacySpec(gm, gm, {a: a for a in gm.alphabet}, 0)
    dec = decompose_conjugacy(spec)
    assert dec.chain.lag == 0
    assert dec.chain.pairs == (gm,)
    assert verify_decomposition(dec, spec, 6).passed


def test_decompose_relabeling():
    gm = golden_mean_pair()
    target = gm.relabel({"1": "b", "2": "a"}).reorder(("a", "b"))
    spec = OneBlockConjugacySpec(gm, target, {"1": "b", "2": "a"}, 0)
    dec = decompose_conjugacy(spec)
    assert dec.chain.lag == 0
    assert dec.source_recoding == {"1": "b", "2": "a"}
    assert verify_decomposition(dec, spec, 6).passed


def test_decompose_center_read():
    gm = golden_mean_pair()
    spec = _center_read_spec(gm, 1)
    dec = decompose_conjugacy(spec)
    assert dec.chain.lag == 4
    assert dec.chain.pairs[0] == spec.source
    assert dec.chain.pairs[-1] == gm
    assert sse_verify(dec.chain).passed
    assert verify_decomposition(dec, spec, 6).passed


def test_decompose_center_read_example1():
    p1 = example1_pair()
    spec = _center_read_spec(p1, 1)
    dec = decompose_conjugacy(spec)
    assert dec.chain.lag == 4
    assert verify_decomposition(dec, spec, 5).passed


def test_conjugacy_spec_rejects_non_bijection():
    gm = golden_mean_pair()
    with pytest.raises(SpecError):
        OneBlockConjugacySpec(gm, gm, {"1": "1", "2": "1"}, 0)


def test_conjugacy_spec_rejects_wrong_window():
    # the center-read map genuinely needs window 1; window 0 must be refused
    gm = golden_mean_pair()
    hb, _ = higher_block(gm, 2)
    psi = {lab: word_center(tuple(lab.split(" "))) for lab in hb.alphabet}
    with pytest.raises(SpecError) as e:
        OneBlockConjugacySpec(hb, gm, psi, 0)
    assert e.value.reason in ("inverse_window", "psi_bijective")


def test_conjugacy_spec_rejects_flip_breaking_map():
    # the identity map intertwines the shifts of (A,J) and (A,I) but not the flips
    p1 = example1_pair()
    p1i = example1_symmetric_pair()
    with pytest.raises(SpecError) as e:
        OneBlockConjugacySpec(p1, p1i, {a: a for a in p1.alphabet}, 0)
    assert e.value.reason == "psi_flip"
