"""Bundled example machines used across the test suite and the docs.

Each is stored in the document format; loaders parse (and therefore
validate) on every call, so tests always start from a fresh object.

Overview:

* SAMPLE_3_2      five-state machine on C_{3,2}; bi-synchronizing at
                  level 2 with a three-state synchronous core, and not
                  a prefix-exchange map.
* UNBALANCED_CORE_3  three-state core over C_3 of infinite order whose
                  a->b->a cycle reads two letters but writes three: not
                  bi-Lipschitz.
* UNBALANCED_4_2  the previous core wrapped as a machine on C_{4,2}
                  (one extra echo letter and an entry state).
* BALANCED_CORE_2 ten-state core over C_2: cycle-balanced (bi-Lipschitz
                  criterion holds) but not synchronous; infinite order.
* SYNCHRONOUS_CORE_3  two-state synchronous core over C_3 of infinite
                  order.
* TORSION_CORE_2  four-state core over C_2 of order two that is not
                  cycle-balanced.
"""

from .document import parse

SAMPLE_3_2 = """\
cantor-transducer 1
alphabet n=3 r=2
initial q0
q0 .0 -> q1 : -
q0 .1 -> q2 : .1 1
q1 0 -> q3 : .0
q1 1 -> q2 : .1 0
q1 2 -> q4 : .1 2
q2 0 -> q2 : 1
q2 1 -> q3 : 2
q2 2 -> q4 : 0
q3 0 -> q2 : 0
q3 1 -> q3 : 2
q3 2 -> q4 : 1
q4 0 -> q3 : 2
q4 1 -> q2 : 1
q4 2 -> q4 : 0
"""

UNBALANCED_CORE_3 = """\
cantor-transducer 1
alphabet n=3 core
a 0 -> a : 2
a 1 -> a : 0
a 2 -> b : 1
b 0 -> a : 0 0
b 1 -> c : -
b 2 -> b : 1
c 0 -> a : 0 2
c 1 -> a : 2
c 2 -> b : 0 1
"""

UNBALANCED_4_2 = """\
cantor-transducer 1
alphabet n=4 r=2
initial q0
q0 .0 -> a : .0
q0 .1 -> a : .1
a 0 -> a : 2
a 1 -> a : 0
a 2 -> b : 1
a 3 -> a : 3
b 0 -> a : 0 0
b 1 -> c : -
b 2 -> b : 1
b 3 -> a : 3
c 0 -> a : 0 2
c 1 -> a : 2
c 2 -> b : 0 1
c 3 -> a : 0 3
"""

BALANCED_CORE_2 = """\
cantor-transducer 1
alphabet n=2 core
a 0 -> b : -
a 1 -> e : -
b 0 -> c : 1 0 0
b 1 -> g : 0 1
c 0 -> c : 0
c 1 -> d : 1
d 0 -> a : -
d 1 -> g : -
e 0 -> a : 0 1
e 1 -> d : 1 0 1
f 0 -> a : 1
f 1 -> d : 0 1
g 0 -> j : 0 0
g 1 -> h : 1 1
h 0 -> j : 0
h 1 -> h : 1
i 0 -> c : 0 0
i 1 -> g : 1
j 0 -> i : -
j 1 -> f : -
"""

SYNCHRONOUS_CORE_3 = """\
cantor-transducer 1
alphabet n=3 core
a 0 -> a : 1
a 1 -> a : 2
a 2 -> b : 0
b 0 -> a : 2
b 1 -> a : 1
b 2 -> b : 0
"""

TORSION_CORE_2 = """\
cantor-transducer 1
alphabet n=2 core
a 0 -> a : 0
a 1 -> b : 1
b 0 -> a : 1 0
b 1 -> c : -
c 0 -> a : 0
c 1 -> d : 1 1
d 0 -> a : 0
d 1 -> d : 1
"""

ALL = {
    "sample_3_2": SAMPLE_3_2,
    "unbalanced_core_3": UNBALANCED_CORE_3,
    "unbalanced_4_2": UNBALANCED_4_2,
    "balanced_core_2": BALANCED_CORE_2,
    "synchronous_core_3": SYNCHRONOUS_CORE_3,
    "torsion_core_2": TORSION_CORE_2,
}


def sample_3_2():
    return parse(SAMPLE_3_2)


def unbalanced_core_3():
    return parse(UNBALANCED_CORE_3)


def unbalanced_4_2():
    return parse(UNBALANCED_4_2)


def balanced_core_2():
    return parse(BALANCED_CORE_2)


def synchronous_core_3():
    return parse(SYNCHRONOUS_CORE_3)


def torsion_core_2():
    return parse(TORSION_CORE_2)
