"""Shared generators and oracles for the test suite."""

import random
from itertools import product

from cantrans import (
    EventuallyPeriodicPoint,
    INITIAL,
    Transducer,
    compose,
    minimize,
    run_word,
    sync_level,
)
from cantrans.randgen import random_gnr_element, random_transducer
from cantrans.synchro import _tracked_states


def brute_force_level(t, max_level=8):
    """Oracle: smallest m such that every digit word of length m sends
    all tracked states to one place, by plain enumeration."""
    tracked = _tracked_states(t)
    if len(tracked) <= 1:
        return 0
    for m in range(1, max_level + 1):
        if all(
            len({run_word(t, q, word)[1] for q in tracked}) == 1
            for word in product(range(t.n), repeat=m)
        ):
            return m
    return None


def random_synchronizing(alphabet, states, max_out, seed, tries=200):
    """Rejection-sample valid machines until one synchronizes."""
    for k in range(tries):
        t = random_transducer(alphabet, states, max_out, seed * 1_000 + k)
        if sync_level(minimize(t)) is not None:
            return t
    raise AssertionError("no synchronizing machine found; widen the search")


def random_bisync(alphabet, seed):
    """A random bi-synchronizing map: a digit permutation twist composed
    with a random prefix-exchange map (varied cores, always invertible)."""
    rng = random.Random(seed)
    sigma = list(range(alphabet.n))
    rng.shuffle(sigma)
    from cantrans import twist_transducer
    return compose(twist_transducer(tuple(sigma), alphabet),
                   random_gnr_element(alphabet, seed))


def random_layered(alphabet, states, max_out, seed):
    """Random machine whose digit transitions strictly increase a state
    rank until an echo sink: the pair graph can hold no cycle, so these
    synchronize at every level up to the depth, with the level varying
    by draw."""
    rng = random.Random(seed)
    names = [f"s{i}" for i in range(states)]
    trans = {}
    for k in range(alphabet.r):
        trans[("q0", -(k + 1))] = ((-(k + 1),), names[0])
    last = states - 1
    for i, q in enumerate(names):
        for d in range(alphabet.n):
            if i == last:
                trans[(q, d)] = ((d,), q)
            else:
                out = tuple(rng.randrange(alphabet.n)
                            for _ in range(rng.randrange(max_out + 1)))
                trans[(q, d)] = (out, names[rng.randrange(i + 1, states)])
    return Transducer(alphabet.n, alphabet.r, INITIAL,
                      ["q0", *names], "q0", trans)


def random_points(rng, n, count, depth=4):
    for _ in range(count):
        u = (-1,) + tuple(rng.randrange(n) for _ in range(rng.randrange(depth)))
        v = tuple(rng.randrange(n) for _ in range(1 + rng.randrange(depth)))
        yield EventuallyPeriodicPoint(u, v)


def delayed_copy():
    """Synchronizing endomorphism whose inverse is no transducer: writes
    yesterday's letter, so the image misses every cone starting with 1."""
    trans = {
        ("q0", -1): ((-1,), "s"),
        ("s", 0): ((0,), "s"), ("s", 1): ((0,), "t"),
        ("t", 0): ((1,), "s"), ("t", 1): ((1,), "t"),
    }
    return Transducer(2, 1, INITIAL, ["q0", "s", "t"], "q0", trans)
