import random

import pytest

from cantrans import (
    Alphabet,
    INITIAL,
    Transducer,
    TransducerError,
    canonical_form,
    compose,
    eval_point,
    guaranteed_output,
    identity_transducer,
    invert,
    merge_equivalent_states,
    minimize,
    parse_word,
    remove_inaccessible,
    remove_incomplete_response,
)
from cantrans.fixtures import sample_3_2, synchronous_core_3, torsion_core_2, \
    unbalanced_core_3
from cantrans.machine import relabel
from cantrans.randgen import random_transducer

from helpers import random_points

w = parse_word


def toy_loop():
    trans = {
        ("q0", -1): ((-1,), "q"),
        ("q", 0): (w("0 0"), "q"),
        ("q", 1): (w("0 1"), "q"),
    }
    return Transducer(2, 1, INITIAL, ["q0", "q"], "q0", trans)


def omega_equivalent(a, b, rng, n, points=10, depth=30):
    for x in random_points(rng, n, points):
        ya = eval_point(a, x)
        yb = eval_point(b, x)
        if ya.expand(depth) != yb.expand(depth):
            return False
    return True


def test_shift_formula_on_toy_loop():
    t = remove_incomplete_response(toy_loop())
    assert t.trans[("q", 0)] == (w("0 0"), "q")
    assert t.trans[("q", 1)] == (w("1 0"), "q")
    assert t.trans[("q0", -1)] == (w(".0 0"), "q")
    rng = random.Random(0)
    assert omega_equivalent(toy_loop(), t, rng, 2)
    assert guaranteed_output(t)["q"] == ()


def test_complete_machines_unchanged():
    for t in [sample_3_2(), identity_transducer(Alphabet(2, 1))]:
        again = remove_incomplete_response(t)
        assert again.trans == t.trans
    f5 = torsion_core_2()
    assert remove_incomplete_response(f5).trans == f5.trans


def test_remove_inaccessible():
    t = sample_3_2()
    trans = dict(t.trans)
    for x in range(3):
        trans[("junk", x)] = ((x,), "junk")
    bigger = Transducer(3, 2, INITIAL, list(t.states) + ["junk"], "q0", trans)
    cleaned = remove_inaccessible(bigger)
    assert set(cleaned.states) == set(t.states)
    assert remove_inaccessible(t).trans == t.trans
    ident = identity_transducer(Alphabet(2, 1))
    assert remove_inaccessible(ident).trans == ident.trans


def test_merge_duplicate_states():
    # two separate echo states reachable from q0 collapse to one
    trans = {
        ("q0", -1): ((-1,), "e1"),
        ("q0", -2): ((-2,), "e2"),
        ("e1", 0): ((0,), "e1"), ("e1", 1): ((1,), "e1"),
        ("e1", 2): ((2,), "e1"), ("e2", 2): ((2,), "e2"),
        ("e2", 0): ((0,), "e2"), ("e2", 1): ((1,), "e2"),
    }
    t = Transducer(3, 2, INITIAL, ["q0", "e1", "e2"], "q0", trans)
    merged = merge_equivalent_states(t)
    assert len(merged.states) == 2
    f2 = unbalanced_core_3()
    assert len(merge_equivalent_states(f2).states) == 3
    # duplicate row of the synchronous core's second state merges away
    f4 = synchronous_core_3()
    trans = dict(f4.trans)
    for x in range(3):
        out, tgt = trans[("b", x)]
        trans[("b2", x)] = (out, tgt)
    trans[("a", 2)] = (trans[("a", 2)][0], "b2")
    doubled = Transducer(3, None, "core", ["a", "b", "b2"], None, trans)
    assert len(merge_equivalent_states(doubled).states) == 2


def test_merge_requires_complete_response():
    with pytest.raises(TransducerError):
        merge_equivalent_states(toy_loop())


def test_minimize_idempotent_and_unique():
    rng = random.Random(9)
    for seed in range(25):
        t = random_transducer(Alphabet(2, 1), 3, 2, seed)
        m = minimize(t)
        assert canonical_form(minimize(m)) == canonical_form(m)
        names = list(t.states)
        perm = names[:]
        rng.shuffle(perm)
        relabeled = relabel(t, dict(zip(names, perm)))
        assert canonical_form(minimize(relabeled)) == canonical_form(m)
        assert omega_equivalent(t, m, rng, 2, points=5)


def test_minimize_steps_preserve_map():
    rng = random.Random(21)
    for seed in range(10):
        t = random_transducer(Alphabet(3, 2), 3, 2, 100 + seed)
        s1 = remove_incomplete_response(t)
        s2 = remove_inaccessible(s1)
        s3 = merge_equivalent_states(s2)
        for x in random_points(rng, 3, 20):
            base = eval_point(t, x).expand(50)
            for stage in (s1, s2, s3):
                assert eval_point(stage, x).expand(50) == base


def test_minimize_certificate():
    for seed in range(10):
        t = random_transducer(Alphabet(2, 1), 4, 2, 500 + seed)
        m = minimize(t)
        v = guaranteed_output(m)
        assert all(v[q] == () for q in m.states if q != m.initial)
        assert len(m.reachable()) == len(m.states)
        assert len(merge_equivalent_states(m).states) == len(m.states)


def test_roundtrip_minimizes_to_identity():
    t = sample_3_2()
    rt = compose(t, invert(t))
    assert canonical_form(rt) == canonical_form(
        identity_transducer(Alphabet(3, 2)))


def test_identity_expansion_collapses():
    # q0 echoes the root silently, a completes it, b echoes: two states
    trans = {
        ("q0", -1): ((), "a"),
        ("a", 0): (w(".0 0"), "b"), ("a", 1): (w(".0 1"), "b"),
        ("b", 0): ((0,), "b"), ("b", 1): ((1,), "b"),
    }
    t = Transducer(2, 1, INITIAL, ["q0", "a", "b"], "q0", trans)
    m = minimize(t)
    assert len(m.states) == 2
    assert canonical_form(m) == canonical_form(
        identity_transducer(Alphabet(2, 1)))


def test_minimize_collapses_duplicated_states():
    # split a state into two copies (incoming transitions divided
    # between them): the reduction must fold the machine back
    rng = random.Random(31)
    for seed in range(20):
        t = random_transducer(Alphabet(2, 1), 3, 2, 900 + seed)
        base = canonical_form(minimize(t))
        victim = rng.choice([q for q in t.states if q != t.initial])
        copy = victim + "_dup"
        trans = dict(t.trans)
        for x in range(t.n):
            trans[(copy, x)] = trans[(victim, x)]
        incoming = [k for k, (_w, tgt) in trans.items() if tgt == victim]
        rng.shuffle(incoming)
        for k in incoming[: max(1, len(incoming) // 2)]:
            w, _ = trans[k]
            trans[k] = (w, copy)
        doubled = Transducer(2, 1, INITIAL, list(t.states) + [copy],
                             t.initial, trans)
        assert canonical_form(minimize(doubled)) == base
