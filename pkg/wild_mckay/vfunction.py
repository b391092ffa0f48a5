"""
The v-function of a representation V on G-covers of the formal disk.

For a connected cover with upper jumps u and lower jumps l,

    v_V = sum over blocks d_i, sum over digit tuples (i_0, ..., i_{n-1}) of
          the integers e < d_i, of
          ceil((i_0 p^{n-1} l_0 + i_1 p^{n-2} l_1 + ... + i_{n-1} l_{n-1}) / p^n).

A disconnected cover takes the value of its connected component over the
stabilizer, with V restricted to it.
"""

import functools

from wild_mckay import representation
from wild_mckay.errors import DomainError
from wild_mckay.ramification import JumpSequence, telescoped_lower, upper_jumps


@functools.lru_cache(maxsize=None)
def _weights(d, p, n):
    # For each e < d, the coefficients i_m p^{n-1-m} of l_m in its numerator.
    rows = []
    for e in range(d):
        row = []
        for m in range(n):
            e, digit = divmod(e, p)
            row.append(digit * p ** (n - 1 - m))
        rows.append(tuple(row))
    return tuple(rows)


def _v_block(d, p, n, lower):
    modulus = p ** n
    total = 0
    for row in _weights(d, p, n):
        numerator = sum(w * l for w, l in zip(row, lower))
        total += -(-numerator // modulus)
    return total


def v_formula(V, t):
    """
    Evaluates the ceiling sum on any tuple of n positive integers; the lower
    jumps are computed from t by the telescoping formula whether or not t is
    admissible.

    :param V: a Representation
    :param t: a tuple of n positive integers
    :return: the non-negative integer v_V(t)
    """
    t = tuple(t)
    p, n = V.spec.p, V.spec.n
    if len(t) != n or any(not isinstance(x, int) or x < 1 for x in t):
        raise DomainError("v_formula needs {} positive integers, got {!r}".format(n, t))
    lower = telescoped_lower(t, p)
    return sum(_v_block(d, p, n, lower) for d in V.summands)


def v_jumps(V, u):
    """
    v on an admissible jump sequence (a JumpSequence or plain tuple).
    """
    if not isinstance(u, JumpSequence):
        u = JumpSequence(V.spec, u)
    return v_formula(V, u.entries)


def v_stratum(V, j):
    """
    v on the stratum labelled by j. Connected strata go through their upper
    jumps; when j_0 is BOTTOM the cover's component lives over the index-p
    subgroup, so recurse with restrict(V) and (j_1, ..., j_{n-1}).
    """
    while True:
        if j.is_trivial:
            return 0
        if j.is_connected:
            return v_formula(V, upper_jumps(j).entries)
        V = representation.restrict(V)
        j = j.truncate()


def v_cyclic(d, p, j):
    """
    The n = 1 case for a single block: sum_{i=1}^{d-1} ceil(i j / p).
    """
    return sum(-(-i * j // p) for i in range(1, d))


def check_decomposition(V, r, q):
    """
    Checks v_V(r + p^n q) = sum_m D_V^(m) q_m + v_V(r).

    :param r: n positive integers
    :param q: n non-negative integers
    """
    r, q = tuple(r), tuple(q)
    n = V.spec.n
    if len(q) != n or any(not isinstance(x, int) or x < 0 for x in q):
        raise DomainError("q must be {} non-negative integers, got {!r}".format(n, q))
    modulus = V.spec.order
    shifted = tuple(ri + modulus * qi for ri, qi in zip(r, q))
    linear = sum(representation.invariant_D(V, m) * q[m] for m in range(n))
    return v_formula(V, shifted) == linear + v_formula(V, r)
