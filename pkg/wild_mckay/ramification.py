"""
Strata of the moduli of G-covers of the formal disk and their ramification
data.

A stratum is labelled by an order tuple j = (j_0, ..., j_{n-1}): the pole
orders of a reduced Witt vector, each a positive integer prime to p or
BOTTOM (a zero component). A cover is connected exactly when j_0 is set.

Upper jumps use the convention u_m = max{p^{m-i} j_i : i <= m, j_i set},
equivalently u_0 = j_0 and u_m = max(p u_{m-1}, j_m). The formula written
with exponent m-1-i over i <= m-1 is the same rule shifted by one index and
leaves u_0 undefined.
"""

import itertools
import json

from wild_mckay.errors import DomainError, NotConnectedError, ParseError
from wild_mckay.grothendieck import L, L_MINUS_ONE, ONE

# A zero Witt component. Serialized as '_' on the command line and null in JSON.
BOTTOM = None


def _sort_key(entry):
    return 0 if entry is BOTTOM else entry


class OrderTuple(object):
    """
    A stratum label. Entries are BOTTOM or positive integers prime to p.
    """
    __slots__ = ('__spec', '__entries')

    def __init__(self, spec, entries):
        entries = tuple(BOTTOM if e is BOTTOM else int(e) for e in entries)
        if len(entries) != spec.n:
            raise DomainError("Order tuple {} needs {} entries".format(_format_entries(entries), spec.n))
        for e in entries:
            if e is not BOTTOM and (e < 1 or e % spec.p == 0):
                raise DomainError("Order {} must be a positive integer prime to {}".format(e, spec.p))
        self.__spec = spec
        self.__entries = entries

    @property
    def spec(self):
        return self.__spec

    @property
    def entries(self):
        return self.__entries

    @property
    def is_connected(self):
        return self.__entries[0] is not BOTTOM

    @property
    def is_trivial(self):
        return all(e is BOTTOM for e in self.__entries)

    @property
    def largest_entry(self):
        """
        :return: the largest set entry, 0 when every entry is BOTTOM
        """
        return max(_sort_key(e) for e in self.__entries)

    def truncate(self):
        """
        Drops j_0: the label of the connected component's stratum over the
        index-p subgroup.
        """
        return OrderTuple(self.__spec.subgroup(), self.__entries[1:])

    def __eq__(self, other):
        if not isinstance(other, OrderTuple):
            return NotImplemented
        return (self.spec, self.entries) == (other.spec, other.entries)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __lt__(self, other):
        return tuple(map(_sort_key, self.entries)) < tuple(map(_sort_key, other.entries))

    def __hash__(self):
        return hash((self.spec, self.entries))

    def __repr__(self):
        return "OrderTuple({})".format(_format_entries(self.entries))

    def __str__(self):
        return _format_entries(self.entries)


class JumpSequence(object):
    """
    An admissible sequence of upper ramification jumps.
    """
    __slots__ = ('__spec', '__entries')

    def __init__(self, spec, entries):
        entries = tuple(int(u) for u in entries)
        if len(entries) != spec.n:
            raise DomainError("Jump sequence {} needs {} entries".format(_format_entries(entries), spec.n))
        if not is_admissible(entries, spec.p):
            raise DomainError("{} is not an admissible upper jump sequence for p={}".format(
                _format_entries(entries), spec.p))
        self.__spec = spec
        self.__entries = entries

    @property
    def spec(self):
        return self.__spec

    @property
    def entries(self):
        return self.__entries

    def __eq__(self, other):
        if not isinstance(other, JumpSequence):
            return NotImplemented
        return (self.spec, self.entries) == (other.spec, other.entries)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.spec, self.entries))

    def __repr__(self):
        return "JumpSequence({})".format(_format_entries(self.entries))

    def __str__(self):
        return _format_entries(self.entries)


#-------------------------------------------------------------------------------
# Jumps
#-------------------------------------------------------------------------------

def is_admissible(u, p):
    """
    True iff u occurs as the upper jumps of a Z/p^nZ-extension: u is a
    strictly increasing sequence of positive integers, p does not divide u_0,
    and each u_i is either p u_{i-1} or both larger than p u_{i-1} and prime
    to p.
    """
    u = tuple(u)
    if not u or any(not isinstance(x, int) or x < 1 for x in u):
        return False
    if u[0] % p == 0:
        return False
    for prev, cur in zip(u, u[1:]):
        if cur == p * prev:
            continue
        if cur <= p * prev or cur % p == 0:
            return False
    return True


def _upper(entries, p):
    jumps = []
    for m, j in enumerate(entries):
        prev = p * jumps[-1] if jumps else 0
        jumps.append(max(prev, _sort_key(j)))
    return tuple(jumps)


def upper_jumps(j):
    """
    :param j: a connected order tuple
    :return: the upper jumps u_m = max{p^{m-i} j_i : i <= m, j_i set}
    :raises NotConnectedError: if j_0 is BOTTOM
    """
    if not j.is_connected:
        raise NotConnectedError("Order tuple {} has j_0 = BOTTOM: the cover is not connected".format(j))
    return JumpSequence(j.spec, _upper(j.entries, j.spec.p))


def lower_jumps(u):
    """
    l_i = u_0 + (u_1 - u_0) p + ... + (u_i - u_{i-1}) p^i.
    """
    return telescoped_lower(u.entries, u.spec.p)


def telescoped_lower(t, p):
    lower = []
    for i, x in enumerate(t):
        lower.append(x if i == 0 else lower[-1] + (x - t[i - 1]) * p ** i)
    return tuple(lower)


def _fiber_choices(spec, u):
    p = spec.p
    choices = [(u[0],)]
    for m in range(1, spec.n):
        if u[m] == p * u[m - 1]:
            choices.append((BOTTOM,) + tuple(v for v in range(1, u[m]) if v % p))
        else:
            choices.append((u[m],))
    return choices


def fiber_J(u):
    """
    All connected order tuples with upper jumps u. Since u_m = max(p u_{m-1},
    j_m), position m is forced to u_m when u_m > p u_{m-1}, and otherwise
    ranges over BOTTOM and the orders below u_m.

    :return: a frozenset of OrderTuple
    """
    return frozenset(OrderTuple(u.spec, entries)
                     for entries in itertools.product(*_fiber_choices(u.spec, u.entries)))


def fiber_J_bruteforce(u):
    """
    The literal definition: try every j_i in BOTTOM and the orders up to u_i,
    keep the connected ones whose upper jumps are u.
    """
    p = u.spec.p
    ranges = [(BOTTOM,) + tuple(v for v in range(1, x + 1) if v % p) for x in u.entries]
    return frozenset(OrderTuple(u.spec, entries) for entries in itertools.product(*ranges)
                     if entries[0] is not BOTTOM and _upper(entries, p) == u.entries)


#-------------------------------------------------------------------------------
# Classes
#-------------------------------------------------------------------------------

def _order_class(j, p):
    return L_MINUS_ONE * L ** (j - 1 - j // p)


def stratum_class(j):
    """
    [GCov(D; j)] = prod over set entries of (L - 1) L^{j_m - 1 - floor(j_m/p)};
    the all-BOTTOM stratum is a point.
    """
    result = ONE
    for e in j.entries:
        if e is not BOTTOM:
            result = result * _order_class(e, j.spec.p)
    return result


def fiber_class(u):
    """
    The sum of stratum_class over fiber_J(u), in product form: position m
    contributes (L - 1) L^{u_m - 1 - floor(u_m/p)} when forced, and
    1 + sum_v (L - 1) L^{v - 1 - floor(v/p)} = L^{u_m - u_m/p} when free.
    """
    p = u.spec.p
    result = ONE
    for m, x in enumerate(u.entries):
        if m > 0 and x == p * u.entries[m - 1]:
            result = result * L ** (x - x // p)
        else:
            result = result * _order_class(x, p)
    return result


#-------------------------------------------------------------------------------
# Enumeration
#-------------------------------------------------------------------------------

def _orders_up_to(bound, p):
    return tuple(v for v in range(1, bound + 1) if v % p)


def enumerate_order_tuples(spec, bound):
    """
    Yields every order tuple whose set entries are <= bound, in lexicographic
    order with BOTTOM first. 'bound' may also be a sequence of n per-position
    bounds.

    With a single bound there are (1 + bound - floor(bound/p))^n tuples.
    """
    bounds = _bounds(spec, bound)
    ranges = [(BOTTOM,) + _orders_up_to(b, spec.p) for b in bounds]
    for entries in itertools.product(*ranges):
        yield OrderTuple(spec, entries)


def count_order_tuples(spec, bound):
    total = 1
    for b in _bounds(spec, bound):
        total *= 1 + b - b // spec.p
    return total


def _bounds(spec, bound):
    if isinstance(bound, int):
        bounds = (bound,) * spec.n
    else:
        bounds = tuple(int(b) for b in bound)
    if len(bounds) != spec.n or any(b < 0 for b in bounds):
        raise DomainError("Bound {!r} must be a non-negative integer or {} of them".format(bound, spec.n))
    return bounds


def enumerate_jump_sequences(spec, bound):
    """
    Yields every admissible jump sequence with u_{n-1} <= bound, in
    lexicographic order.
    """
    p = spec.p

    def extend(prefix):
        if len(prefix) == spec.n:
            yield JumpSequence(spec, prefix)
            return
        # u_{n-1} >= p^{n-1-m} u_m, so later entries bound the current one.
        room = bound // p ** (spec.n - 1 - len(prefix))
        if not prefix:
            candidates = _orders_up_to(room, p)
        else:
            base = p * prefix[-1]
            candidates = ((base,) if base <= room else ()) + tuple(
                v for v in range(base + 1, room + 1) if v % p)
        for x in candidates:
            for result in extend(prefix + (x,)):
                yield result

    return extend(())


#-------------------------------------------------------------------------------
# Text and JSON forms
#-------------------------------------------------------------------------------

def _format_entries(entries):
    return ','.join('_' if e is BOTTOM else str(e) for e in entries)


def _parse_entries(text, allow_bottom):
    entries = []
    for piece in (text or '').split(','):
        piece = piece.strip()
        if piece == '_' and allow_bottom:
            entries.append(BOTTOM)
        elif piece.isdigit():
            entries.append(int(piece))
        else:
            raise ParseError("Malformed entry '{}' in '{}'".format(piece, text))
    return entries


def parse_order_tuple(spec, text):
    """
    Reads '1,3' or '_,1' (underscore = BOTTOM).
    """
    return OrderTuple(spec, _parse_entries(text, allow_bottom=True))


def parse_jumps(spec, text):
    """
    Reads '1,3' into an admissible jump sequence.
    """
    return JumpSequence(spec, _parse_entries(text, allow_bottom=False))


def order_tuple_to_json(j):
    return list(j.entries)


def order_tuple_from_json(spec, data):
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except ValueError:
            raise ParseError("Malformed order tuple JSON: {!r}".format(data))
    if not isinstance(data, list) or not all(e is None or isinstance(e, int) for e in data):
        raise ParseError("Order tuple JSON must be a list of integers and nulls")
    return OrderTuple(spec, data)
