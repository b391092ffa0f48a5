"""
Base-p digits and the digit sums S_d^(m): the sum of the m-th base-p digits
of 0, 1, ..., d - 1.

Every function takes a group spec (anything with integer attributes p and n)
and admits 1 <= d <= p^n. The regular representation d = p^n is written with
top digit p.
"""

import functools

from wild_mckay.errors import DomainError


def _check(d, spec, m=None):
    if not isinstance(d, int) or not 1 <= d <= spec.p ** spec.n:
        raise DomainError("Dimension d={} must satisfy 1 <= d <= {}^{}".format(d, spec.p, spec.n))
    if m is not None and not (isinstance(m, int) and 0 <= m < spec.n):
        raise DomainError("Digit index m={} must satisfy 0 <= m <= {}".format(m, spec.n - 1))


def base_p_digits(d, spec):
    """
    Writes d as d_0 + d_1 p + ... + d_{n-1} p^{n-1} with 0 <= d_m < p below
    the top position and 0 <= d_{n-1} <= p.

    :param d: an integer with 1 <= d <= p^n
    :param spec: the group spec fixing p and n
    :return: the digit tuple (d_0, ..., d_{n-1})
    """
    _check(d, spec)
    return _digits(d, spec.p, spec.n)


def _digits(d, p, n):
    digits = []
    for _ in range(n - 1):
        d, digit = divmod(d, p)
        digits.append(digit)
    digits.append(d)
    return tuple(digits)


def digit_sum_bruteforce(d, spec, m):
    """
    Adds up the m-th base-p digit of every e in 0..d-1 by enumeration.
    """
    _check(d, spec, m)
    p = spec.p
    return sum((e // p ** m) % p for e in range(d))


def digit_sum(d, spec, m):
    """
    S_d^(m) through the recursion S_d^(m) = p S_q^(m-1) + d_0 d_m with
    q = (d - d_0)/p, grounded at the closed form for m = 0.

    :param d: an integer with 1 <= d <= p^n
    :param spec: the group spec fixing p and n
    :param m: the digit position, 0 <= m <= n - 1
    """
    _check(d, spec, m)
    return _digit_sum(d, spec.p, spec.n, m)


@functools.lru_cache(maxsize=None)
def _digit_sum(d, p, n, m):
    if d == 0:
        return 0
    d0 = d % p
    q = (d - d0) // p
    if m == 0:
        return q * p * (p - 1) // 2 + d0 * (d0 - 1) // 2
    # q has n - 1 digits; its (m-1)-th is d_m
    dm = _digits(d, p, n)[m]
    return p * _digit_sum(q, p, n - 1, m - 1) + d0 * dm


def digit_sum_closed(d, spec, m):
    """
    S_d^(m) = p^m S^(0)_{d_m + ... + d_{n-1} p^{n-1-m}} + sum_{l<m} p^l d_l d_m,
    the fully unrolled form of the recursion.
    """
    _check(d, spec, m)
    p = spec.p
    digits = _digits(d, p, spec.n)
    head = sum(digits[k] * p ** (k - m) for k in range(m, spec.n))
    h0 = head % p
    s0 = (head - h0) // p * p * (p - 1) // 2 + h0 * (h0 - 1) // 2
    return p ** m * s0 + sum(p ** l * digits[l] * digits[m] for l in range(m))


def digit_sums(d, spec):
    """
    :return: (S_d^(0), ..., S_d^(n-1))
    """
    return tuple(digit_sum(d, spec, m) for m in range(spec.n))
