"""Classification of bi-synchronizing maps and arithmetic on cores.

The core of a minimal bi-synchronizing machine determines the map's
outer class; two maps lie in the same class exactly when their cores
are strongly isomorphic.  Cores multiply (pair product, reduce, take
the core again), which makes the classes a group; the classifiers below
place a map in the chain

    prefix-exchange maps  <  synchronous cores  <  balanced cores  < all,

where "balanced" means every cycle of the core writes as many letters
as it reads.  Balance is the implemented bi-Lipschitz criterion: an
unbalanced cycle is exactly a certificate of unbounded local expansion
or contraction.
"""

from dataclasses import dataclass

from .machine import CORE, TransducerError, canonical_form
from .minimize import minimize
from .synchro import NotSynchronizing, core_of, core_product, \
    is_bisynchronizing, sync_level


def _minimal_core(t):
    """Core of the minimal machine for t (t may already be a core)."""
    return core_of(minimize(t))


def is_identity_core(c):
    return (len(c.states) == 1 and
            all(c.step(c.states[0], x)[0] == (x,) for x in range(c.n)))


def is_in_Gnr(t):
    """Membership in the prefix-exchange group: the minimal machine is
    bi-synchronizing and its core is the single identity-echo state."""
    ok, _level = is_bisynchronizing(t)
    if not ok:
        return False
    return is_identity_core(_minimal_core(t))


def outer_class_equal(a, b):
    """Same outer class: the minimal cores are strongly isomorphic."""
    if a.n != b.n:
        raise TransducerError("alphabet mismatch")
    return canonical_form(_minimal_core(a)) == canonical_form(_minimal_core(b))


def outer_product(a, b):
    """The group operation on cores: pair product over all state pairs,
    reduction adapted to core mode, then core extraction."""
    if a.mode != CORE or b.mode != CORE:
        raise TransducerError("outer_product expects core-mode machines")
    return core_product(a, b)


def order_in_On(a, cap=64):
    """Order of a core in the outer-class group, searched up to `cap`.

    Returns ("finite", k) at the first power equal to the identity core,
    ("infinite", None) when a canonical form repeats before the identity
    shows up (the powers then cycle forever without reaching it), and
    ("unknown", None) if the cap runs out first.  Powers are bucketed by
    state count so canonical forms are only computed when a collision is
    possible."""
    if a.mode != CORE:
        raise TransducerError("order_in_On expects a core-mode machine")
    if cap < 1:
        raise ValueError("cap must be >= 1")
    a = minimize(a)
    if sync_level(a) is None:
        raise NotSynchronizing("order search needs a synchronizing core")
    by_size = {}
    power = a
    for k in range(1, cap + 1):
        if is_identity_core(power):
            return "finite", k
        bucket = by_size.setdefault(len(power.states), [])
        form = canonical_form(power) if bucket else None
        if form is not None and form in (
                canonical_form(old) for old in bucket):
            return "infinite", None
        bucket.append(power)
        if k < cap:
            power = outer_product(power, a)
    return "unknown", None


def cycle_balance(core):
    """Check that every cycle of a strongly connected core emits exactly
    as many letters as it reads.

    All cycles balance exactly when the per-edge weight (output length
    minus one) is a potential difference between states, which one
    breadth-first sweep decides; a failed edge is expanded into an
    explicit unbalanced simple cycle for the diagnostic.

    Returns (True, None) or (False, (cycle states, read, written)).
    """
    if core.mode != CORE:
        raise TransducerError("cycle_balance expects a core-mode machine")
    start = core.states[0]
    phi = {start: 0}
    todo = [start]
    while todo:
        q = todo.pop()
        for x in range(core.n):
            w, tgt = core.step(q, x)
            want = phi[q] + len(w) - 1
            if tgt not in phi:
                phi[tgt] = want
                todo.append(tgt)
            elif phi[tgt] != want:
                return False, _unbalanced_cycle(core)
    return True, None


def _unbalanced_cycle(core):
    """Some simple cycle whose output length differs from its length."""
    for first in core.states:
        stack = [(first, [first], 0, 0)]
        while stack:
            q, path, read, written = stack.pop()
            for x in range(core.n):
                w, tgt = core.step(q, x)
                if tgt == first:
                    if read + 1 != written + len(w):
                        return tuple(path), read + 1, written + len(w)
                elif tgt not in path:
                    stack.append((tgt, path + [tgt],
                                  read + 1, written + len(w)))
    raise AssertionError("potential check failed but no witness cycle found")


def is_synchronous(core):
    return all(len(w) == 1 for w, _ in core.trans.values())


@dataclass(frozen=True)
class SubgroupFlags:
    in_Gnr: bool
    in_Pn: bool
    in_Ln: bool
    in_On: bool
    level: int
    core_states: int
    unbalanced: tuple | None


def classify_subgroup(t):
    """Flags for the subgroup chain, computed on the minimal core.

    The map must be bi-synchronizing (otherwise there is no core class
    to talk about and this raises).  in_Pn means the core is synchronous
    (single-letter outputs); in_Ln means the core is cycle-balanced, the
    criterion this library uses for the bi-Lipschitz subgroup; in_Gnr
    means the core is the one-state identity."""
    ok, level = is_bisynchronizing(t)
    if not ok:
        raise NotSynchronizing("map is not bi-synchronizing")
    core = _minimal_core(t)
    balanced, witness = cycle_balance(core)
    return SubgroupFlags(
        in_Gnr=is_identity_core(core),
        in_Pn=is_synchronous(core),
        in_Ln=balanced,
        in_On=True,
        level=level,
        core_states=len(core.states),
        unbalanced=witness,
    )


def check_permutation_state(t, q):
    """Analysis of a digit-reading state's one-letter outputs.

    Reports whether they are single letters forming a permutation, and,
    when the state is its own target on every letter, that the local map
    is the corresponding iterated-permutation twist.

    Returns (is_permutation, sigma or None, is_twist)."""
    if t.mode != CORE and q == t.initial:
        raise TransducerError("the initial state reads root letters")
    outs = []
    targets = []
    for x in range(t.n):
        w, tgt = t.step(q, x)
        outs.append(w)
        targets.append(tgt)
    if any(len(w) != 1 for w in outs):
        return False, None, False
    image = [w[0] for w in outs]
    if sorted(image) != list(range(t.n)):
        return False, None, False
    sigma = tuple(image)
    is_twist = all(tgt == q for tgt in targets)
    return True, sigma, is_twist
