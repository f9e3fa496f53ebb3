"""Synchronization levels, core extraction and the bi-synchronizing test.

A machine is synchronizing at level m when every digit word of length m
drives every digit-reading state to the same state, so that after m
letters the active state depends on the input alone.  The states every
long word lands in form the core: an inescapable, strongly connected
sub-machine that is the invariant of the outer class.
"""

from collections import deque

from .words import EMPTY
from .machine import CORE, Transducer, TransducerError, check_valid, \
    validate, _strongly_connected
from .minimize import merge_equivalent_states, minimize, \
    remove_incomplete_response
from .algebra import NotInvertible, _advance, _viability, compose, invert


class NotSynchronizing(TransducerError):
    pass


def _tracked_states(t):
    """States synchronization is measured over: every state in core
    mode; in initial mode the states that have emitted their leading
    root letter.  Pre-root states only ever process the first few
    letters after the root and never recur, so they are not required to
    fall in line (tracking them would inflate the level of machines
    whose inverses wait before committing to a root letter)."""
    if t.mode == CORE:
        return list(t.states)
    pre = t.pre_root_states()
    return [q for q in t.states if q not in pre]


def _pair_graph(t):
    """Successors of each unordered non-diagonal state pair under the
    digit letters, on integer-indexed states; a pair has no successor
    for letters that merge it."""
    tracked = _tracked_states(t)
    idx = {q: i for i, q in enumerate(tracked)}
    k = len(tracked)
    succ = [[idx[t.step(q, x)[1]] for x in range(t.n)] for q in tracked]

    def pid(i, j):
        return i * k + j if i < j else j * k + i

    graph = {}
    for i in range(k):
        for j in range(i + 1, k):
            out = []
            for x in range(t.n):
                a, b = succ[i][x], succ[j][x]
                if a != b:
                    out.append(pid(a, b))
            graph[i * k + j] = out
    return graph, tracked, k


def sync_level(t):
    """Least m such that every digit word of length m is synchronizing,
    or None when no such m exists.

    Runs on the pair automaton: a pair of distinct states that can reach
    a cycle of distinct pairs survives arbitrarily long words, so the
    machine is not synchronizing; otherwise the pair graph is a DAG and
    the level is one more than its longest path.  Level 0 means a single
    tracked state."""
    if len(_tracked_states(t)) <= 1:
        return 0
    graph, _tracked, _k = _pair_graph(t)
    color = {}
    order = []
    for node in graph:
        if color.get(node, 0):
            continue
        stack = [(node, iter(graph[node]))]
        color[node] = 1
        while stack:
            cur, it = stack[-1]
            advanced = False
            for nxt in it:
                c = color.get(nxt, 0)
                if c == 1:
                    return None
                if c == 0:
                    color[nxt] = 1
                    stack.append((nxt, iter(graph[nxt])))
                    advanced = True
                    break
            if not advanced:
                stack.pop()
                color[cur] = 2
                order.append(cur)
    depth = {}
    for node in order:
        depth[node] = max((depth[s] + 1 for s in graph[node]), default=0)
    return 1 + max(depth.values())


def witness_pair(t):
    """For a non-synchronizing machine: a pair of states that some cycle
    of the pair automaton keeps apart forever, or None."""
    graph, tracked, k = _pair_graph(t)
    color = {}
    for node in graph:
        if color.get(node, 0):
            continue
        stack = [(node, iter(graph[node]))]
        color[node] = 1
        while stack:
            cur, it = stack[-1]
            advanced = False
            for nxt in it:
                c = color.get(nxt, 0)
                if c == 1:
                    return tuple(sorted((tracked[nxt // k], tracked[nxt % k]),
                                        key=str))
                if c == 0:
                    color[nxt] = 1
                    stack.append((nxt, iter(graph[nxt])))
                    advanced = True
                    break
            if not advanced:
                stack.pop()
                color[cur] = 2
    return None


def _attractor(t, steps):
    """Forward closure of the state reached by reading `steps` zeros: for
    a machine synchronizing at level <= steps this is exactly the core's
    state set.  The walk shortcuts once it enters its cycle under 0."""
    q = _tracked_states(t)[0]
    seen_at = {}
    walked = []
    remaining = steps
    while remaining > 0 and q not in seen_at:
        seen_at[q] = len(walked)
        walked.append(q)
        q = t.step(q, 0)[1]
        remaining -= 1
    if remaining > 0:
        enter = seen_at[q]
        cycle = walked[enter:]
        q = cycle[remaining % len(cycle)]
    states = {q}
    todo = deque([q])
    while todo:
        p = todo.popleft()
        for x in range(t.n):
            tgt = t.step(p, x)[1]
            if tgt not in states:
                states.add(tgt)
                todo.append(tgt)
    trans = {(p, x): t.step(p, x) for p in states for x in range(t.n)}
    return Transducer(t.n, None, CORE, sorted(states, key=str), None, trans)


def core_of(t):
    """The sub-machine on the states long inputs force the machine into.

    Reads one fixed word of the synchronizing length to land in a core
    state, then closes forward under the digit letters.  The result is a
    core-mode machine on the original state names; it is asserted to be
    strongly connected and closed."""
    m = sync_level(t)
    if m is None:
        raise NotSynchronizing("machine is not synchronizing; it has no core")
    core = _attractor(t, m)
    assert _strongly_connected(core), "core must be strongly connected"
    return check_valid(core)


def core_product(a, b):
    """Product of two cores reduced back to a minimal core: full pair
    product, completion of responses, state merging, core extraction.

    Products of synchronizing machines are synchronizing (the first
    coordinate synchronizes on its own and the second over the first's
    outputs), so the core is extracted by a long-word walk: any word of
    the pair-count length is past the level.  Strong connectivity of the
    result is asserted; callers must pass genuine cores."""
    raw = compose(a, b, reduce=False)
    bad = validate(raw)
    if bad:
        raise TransducerError("degenerate product: " + "; ".join(bad))
    reduced = merge_equivalent_states(remove_incomplete_response(raw))
    k = len(_tracked_states(reduced))
    core = minimize(_attractor(reduced, k * (k - 1) // 2 + 1))
    if not _strongly_connected(core):
        raise NotSynchronizing("product of non-synchronizing cores")
    return core


def _is_identity_core(c):
    return (len(c.states) == 1 and
            all(c.step(c.states[0], x)[0] == (x,) for x in range(c.n)))


def invert_core(c):
    """The inverse core: the machine this core's outer class inverts to.

    States are pairs (state of c, pending input not yet matched); the
    construction explores the forced-emission dynamics from every
    (state, empty) seed, then keeps the largest sub-machine on which
    every digit can always be read (a configuration surviving that
    pruning accepts every continuation, which is exactly what deep
    states of an inverse must do).  The result must synchronize, and
    both core products with the original must reduce to the identity
    core; otherwise the class is not invertible."""
    if c.mode != CORE:
        raise TransducerError("invert_core expects a core-mode machine")
    c = minimize(c)
    viable = _viability(c)
    bound = len(c.states) * (1 + c.max_output_len())

    trans = {}
    dead = set()
    seen = set()
    todo = deque((q, EMPTY) for q in c.states)
    seen.update(todo)
    while todo:
        state = todo.popleft()
        q, u = state
        for y in range(c.n):
            try:
                out, nxt = _advance(c, viable, q, u + (y,))
            except NotInvertible:
                dead.add(state)
                continue
            if len(nxt[1]) > bound:
                raise NotInvertible(
                    "not invertible by finite transducer: pending word "
                    f"exceeds bound {bound}"
                )
            trans[(state, y)] = (out, nxt)
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)

    alive = set(seen)
    changed = True
    while changed:
        changed = False
        for state in list(alive):
            if state in dead:
                alive.discard(state)
                changed = True
                continue
            for y in range(c.n):
                tgt = trans.get((state, y))
                if tgt is None or tgt[1] not in alive:
                    alive.discard(state)
                    changed = True
                    break
    if not alive:
        raise NotInvertible(
            "not invertible: no configuration of the inverse accepts "
            "every continuation"
        )
    sub = Transducer(c.n, None, CORE, sorted(alive, key=str), None,
                     {k: v for k, v in trans.items() if k[0] in alive})
    if sync_level(sub) is None:
        raise NotInvertible("inverse dynamics do not synchronize")
    d = minimize(core_of(sub))
    if not _is_identity_core(core_product(c, d)) \
            or not _is_identity_core(core_product(d, c)):
        raise NotInvertible(
            "round-trip verification failed: core products are not trivial"
        )
    return d


def is_bisynchronizing(t):
    """(flag, level): whether the map and its inverse both admit
    synchronizing machines; the level reported is the larger of the two.
    An inversion failure means the map is no homeomorphism (or the core
    no invertible class), so the answer is (False, None) rather than an
    error."""
    m = minimize(t)
    fwd = sync_level(m)
    if fwd is None:
        return False, None
    try:
        inv = invert_core(m) if t.mode == CORE else invert(m)
    except NotInvertible:
        return False, None
    bwd = sync_level(inv)
    if bwd is None:
        return False, None
    return True, max(fwd, bwd)
