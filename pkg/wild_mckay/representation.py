"""
Representations of G = Z/p^nZ in characteristic p.

The indecomposables are the Jordan blocks W_1, ..., W_{p^n}, so a
representation is a multiset of block sizes. This module houses the
invariants built on them: effectiveness, pseudo-reflections, restriction to
the index-p subgroup, and the additive invariants D_V^(m).
"""

import json
import numbers
import re

import sympy

from wild_mckay import digits
from wild_mckay.errors import DomainError, ParseError
from wild_mckay.grothendieck import rational


class GroupSpec(object):
    """
    The prime p and exponent n fixing G = Z/p^nZ.
    """
    __slots__ = ('__p', '__n')

    def __init__(self, p, n):
        if not isinstance(p, int) or not sympy.isprime(p):
            raise DomainError("p={} is not a prime".format(p))
        if not isinstance(n, int) or n < 1:
            raise DomainError("n={} must be an integer >= 1".format(n))
        self.__p = p
        self.__n = n

    @property
    def p(self):
        return self.__p

    @property
    def n(self):
        return self.__n

    @property
    def order(self):
        return self.__p ** self.__n

    def subgroup(self):
        """
        :return: the spec of the index-p subgroup Z/p^{n-1}Z
        """
        if self.__n == 1:
            raise DomainError("Z/{}Z has no proper nontrivial p-power subgroup".format(self.__p))
        return GroupSpec(self.__p, self.__n - 1)

    def __eq__(self, other):
        if not isinstance(other, GroupSpec):
            return NotImplemented
        return (self.p, self.n) == (other.p, other.n)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.p, self.n))

    def __repr__(self):
        return "GroupSpec(p={}, n={})".format(self.p, self.n)


class Representation(object):
    """
    A G-representation, as the multiset of its indecomposable dimensions.
    Summands are kept sorted in descending order.
    """
    __slots__ = ('__spec', '__summands')

    def __init__(self, spec, summands):
        summands = tuple(summands)
        for e in summands:
            if not isinstance(e, numbers.Integral):
                raise DomainError("Summand dimensions must be integers, got {!r}".format(e))
        summands = tuple(sorted((int(e) for e in summands), reverse=True))
        if not summands:
            raise DomainError("A representation needs at least one summand")
        for e in summands:
            if not 1 <= e <= spec.order:
                raise DomainError("Summand dimension {} is outside [1, {}]".format(e, spec.order))
        self.__spec = spec
        self.__summands = summands

    @classmethod
    def indecomposable(cls, spec, d):
        return cls(spec, (d,))

    @property
    def spec(self):
        return self.__spec

    @property
    def summands(self):
        return self.__summands

    @property
    def dim(self):
        return sum(self.__summands)

    @property
    def is_indecomposable(self):
        return len(self.__summands) == 1

    def direct_sum(self, other):
        if other.spec != self.spec:
            raise DomainError("Cannot add representations of {} and {}".format(self.spec, other.spec))
        return Representation(self.spec, self.summands + other.summands)

    __add__ = direct_sum

    def __eq__(self, other):
        if not isinstance(other, Representation):
            return NotImplemented
        return (self.spec, self.summands) == (other.spec, other.summands)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.spec, self.summands))

    def __repr__(self):
        return "Representation({}, {})".format(self.spec, list(self.summands))

    def __str__(self):
        return format_representation(self)


#-------------------------------------------------------------------------------
# Group-theoretic predicates
#-------------------------------------------------------------------------------

def is_effective(V):
    """
    True iff sigma acts with full order p^n, i.e. some Jordan block is longer
    than p^{n-1}.
    """
    return max(V.summands) > V.spec.order // V.spec.p


def fixed_codimension(V, a):
    """
    Codimension of the subspace fixed by sigma^{p^a}. On a block of size e,
    (sigma - 1)^{p^a} = sigma^{p^a} - 1 has rank max(e - p^a, 0).
    """
    step = V.spec.p ** a
    return sum(max(e - step, 0) for e in V.summands)


def pseudo_reflection_witness(V):
    """
    :return: the smallest a in 0..n-1 for which sigma^{p^a} is a
             pseudo-reflection, or None
    """
    for a in range(V.spec.n):
        if fixed_codimension(V, a) == 1:
            return a
    return None


def has_pseudo_reflection(V):
    """
    Every nontrivial element generates the same subgroup as some sigma^{p^a},
    and so fixes the same subspace; it suffices to look at those n elements.
    """
    return pseudo_reflection_witness(V) is not None


def restrict(V):
    """
    Restricts V to the index-p subgroup. A block of size d = r + qp
    (0 <= r < p) becomes r blocks of size q + 1 and p - r blocks of size q;
    size-zero blocks are dropped.
    """
    spec = V.spec.subgroup()
    p = V.spec.p
    summands = []
    for d in V.summands:
        q, r = divmod(d, p)
        summands.extend([q + 1] * r)
        if q:
            summands.extend([q] * (p - r))
    return Representation(spec, summands)


#-------------------------------------------------------------------------------
# The invariants D_V^(m)
#-------------------------------------------------------------------------------

def _check_index(V, m):
    if not isinstance(m, int) or not 0 <= m < V.spec.n:
        raise DomainError("Index m={} must satisfy 0 <= m <= {}".format(m, V.spec.n - 1))


def _block_D(d, spec, m):
    p, n = spec.p, spec.n
    S = digits.digit_sums(d, spec)
    return p ** (n - 1) * S[m] - (p - 1) * sum(p ** (n - 1 + m - l) * S[l] for l in range(m + 1, n))


def invariant_D(V, m):
    """
    D_V^(m) = sum over blocks d_i of
        p^{n-1} S^(m) - (p - 1) sum_{l=m+1}^{n-1} p^{n-1+m-l} S^(l).
    Every power of p is non-negative, so the value is an integer.
    """
    _check_index(V, m)
    return sum(_block_D(d, V.spec, m) for d in V.summands)


def invariants_D(V):
    return tuple(invariant_D(V, m) for m in range(V.spec.n))


def invariant_D_oracle(V, m):
    """
    D_V^(m) read off the v-function: v(r + p^n e_m) - v(r) for the minimal
    jump sequence r = (1, p, ..., p^{n-1}).
    """
    from wild_mckay.vfunction import v_formula

    _check_index(V, m)
    p, n = V.spec.p, V.spec.n
    r = tuple(p ** i for i in range(n))
    shifted = tuple(r[i] + (p ** n if i == m else 0) for i in range(n))
    return v_formula(V, shifted) - v_formula(V, r)


def weighted_tail(V, m):
    """
    :return: sum_{l=m}^{n-1} D_V^(l) / p^{2n-1-l} as an exact rational
    """
    _check_index(V, m)
    p, n = V.spec.p, V.spec.n
    return sum((rational(invariant_D(V, l), p ** (2 * n - 1 - l)) for l in range(m, n)), rational(0))


#-------------------------------------------------------------------------------
# Text and JSON forms
#-------------------------------------------------------------------------------

_REP_PATTERN = re.compile(r'^\s*p\s*=\s*(\d+)\s*,\s*n\s*=\s*(\d+)\s*,\s*dims\s*=\s*(\d+(?:\s*\+\s*\d+)*)\s*$')


def parse_representation(text):
    """
    Reads the command-line form 'p=2,n=3,dims=5+3+1'.
    """
    match = _REP_PATTERN.match(text or '')
    if not match:
        raise ParseError("Malformed representation '{}': expected p=<prime>,n=<int>,dims=<d1+d2+...>".format(text))
    p, n, dims = match.groups()
    return Representation(GroupSpec(int(p), int(n)), [int(x) for x in dims.split('+')])


def format_representation(V):
    return "p={},n={},dims={}".format(V.spec.p, V.spec.n, '+'.join(str(e) for e in V.summands))


def representation_from_json(data):
    """
    Reads {"p": 2, "n": 3, "dims": [5, 3, 1]} (a dict or its JSON text).
    """
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except ValueError:
            raise ParseError("Malformed representation JSON: {!r}".format(data))
    try:
        p, n, dims = data['p'], data['n'], data['dims']
    except (KeyError, TypeError):
        raise ParseError("Representation JSON needs keys 'p', 'n' and 'dims'")
    if not isinstance(dims, list):
        raise ParseError("Representation JSON 'dims' must be a list, got {!r}".format(dims))
    if not all(isinstance(x, int) for x in [p, n] + list(dims)):
        raise ParseError("Representation JSON values must be integers")
    return Representation(GroupSpec(p, n), dims)


def representation_to_json(V):
    return {'p': V.spec.p, 'n': V.spec.n, 'dims': list(V.summands)}
