"""
Truncations of the integral of L^{d - v} over the moduli of G-covers, taken
as the stratified sum over order tuples j of [GCov(D; j)] L^{d - v(j)}.

A truncation keeps the strata whose entries are all <= bound (a hypercube in
j-space). Terms are independent, so the sum may be spread over worker
processes; coefficient addition is exact and commutative, so the result does
not depend on how it was split.
"""

import itertools
import multiprocessing

from wild_mckay import loggers
from wild_mckay import representation as rep
from wild_mckay.errors import DomainError
from wild_mckay.grothendieck import (NEG_INFINITY, degree_to_json, poly_sum,
                                     poly_to_json)
from wild_mckay.ramification import (count_order_tuples, enumerate_jump_sequences,
                                     enumerate_order_tuples, fiber_class,
                                     stratum_class, order_tuple_to_json)
from wild_mckay.vfunction import v_formula, v_stratum

CHUNK_SIZE = 256


def term(V, j):
    """
    [GCov(D; j)] L^{d - v(j)}.
    """
    return stratum_class(j).shift(V.dim - v_stratum(V, j))


class SeriesTruncation(object):
    """
    The partial sum over every stratum with entries <= bound.
    """
    def __init__(self, bound, partial_sum, term_count, max_term_dim, per_stratum=None):
        self.bound = bound
        self.partial_sum = partial_sum
        self.term_count = term_count
        self.max_term_dim = max_term_dim
        self.per_stratum = per_stratum

    @property
    def partial_sum_degree(self):
        return self.partial_sum.degree

    def to_json(self):
        data = {
            'bound': self.bound if isinstance(self.bound, int) else list(self.bound),
            'partial_sum': poly_to_json(self.partial_sum),
            'term_count': self.term_count,
            'max_term_dim': degree_to_json(self.max_term_dim),
            'partial_sum_degree': degree_to_json(self.partial_sum_degree),
        }
        if self.per_stratum is not None:
            data['per_stratum'] = [[order_tuple_to_json(j), poly_to_json(t)] for j, t in self.per_stratum]
        return data


def _evaluate_chunk(args):
    V, strata, keep = args
    terms = [term(V, j) for j in strata]
    max_dim = max([t.degree for t in terms] or [NEG_INFINITY])
    per_stratum = list(zip(strata, terms)) if keep else None
    return poly_sum(terms), len(terms), max_dim, per_stratum


def _chunks(iterable, size):
    iterator = iter(iterable)
    while True:
        chunk = list(itertools.islice(iterator, size))
        if not chunk:
            return
        yield chunk


def truncated_integral(V, bound, per_stratum=False, workers=1):
    """
    Sums term(V, j) over every order tuple with entries <= bound.

    :param V: a Representation
    :param bound: a positive integer, or a sequence of n per-position bounds
    :param per_stratum: keep the list of (OrderTuple, term) pairs
    :param workers: number of worker processes (1 evaluates in-process)
    :return: a SeriesTruncation
    """
    logger = loggers.get_logger('wild_mckay')
    logger.debug("truncating at {} for {}: {} strata, {} worker(s)".format(
        bound, rep.format_representation(V), count_order_tuples(V.spec, bound), workers))

    jobs = ((V, chunk, per_stratum) for chunk in _chunks(enumerate_order_tuples(V.spec, bound), CHUNK_SIZE))
    if workers > 1:
        with multiprocessing.Pool(workers) as pool:
            results = pool.map(_evaluate_chunk, list(jobs))
    else:
        results = [_evaluate_chunk(job) for job in jobs]

    partial_sum = poly_sum(r[0] for r in results)
    term_count = sum(r[1] for r in results)
    max_term_dim = max([r[2] for r in results] or [NEG_INFINITY])
    kept = None
    if per_stratum:
        kept = [pair for r in results for pair in r[3]]
    logger.verbose("partial sum at {}: {}".format(bound, partial_sum))
    return SeriesTruncation(bound, partial_sum, term_count, max_term_dim, kept)


def split_integral(V, bound):
    """
    Splits truncated_integral into the strata with j_0 = BOTTOM (covers whose
    components live over the index-p subgroup) and the connected strata.

    :return: (bottom_part, connected_part) as LaurentPoly
    """
    bottom, connected = [], []
    for j in enumerate_order_tuples(V.spec, bound):
        (connected if j.is_connected else bottom).append(term(V, j))
    return poly_sum(bottom), poly_sum(connected)


def bottom_terms(V, bound):
    """
    :return: {truncated tuple: term} for the strata with j_0 = BOTTOM
    """
    return {j.truncate(): term(V, j) for j in enumerate_order_tuples(V.spec, bound)
            if not j.is_connected}


def fiber_grouped_integral(V, bound):
    """
    The connected part of the integral regrouped by upper jumps: the sum over
    admissible u of fiber_class(u) L^{d - v(u)}. Unlike the hypercube
    truncation, this keeps every stratum whose upper jumps are <= bound.
    """
    return poly_sum(fiber_class(u).shift(V.dim - v_formula(V, u.entries))
                    for u in enumerate_jump_sequences(V.spec, bound))


class TrajectoryRow(object):
    def __init__(self, bound, num_strata, max_term_dim, tail_max_dim, partial_sum):
        self.bound = bound
        self.num_strata = num_strata
        self.max_term_dim = max_term_dim
        self.tail_max_dim = tail_max_dim
        self.partial_sum = partial_sum

    @property
    def partial_sum_degree(self):
        return self.partial_sum.degree

    def to_json(self):
        return {
            'bound': self.bound,
            'num_strata': self.num_strata,
            'max_term_dim': degree_to_json(self.max_term_dim),
            'tail_max_dim': degree_to_json(self.tail_max_dim),
            'partial_sum_degree': degree_to_json(self.partial_sum_degree),
            'partial_sum': poly_to_json(self.partial_sum),
        }


def dimension_trajectory(V, bounds, workers=1):
    """
    Term dimensions along growing truncations.

    Row B reports the largest term dimension among strata with entries <= B,
    and tail_max_dim: the largest among the strata that are new since the
    previous row, i.e. whose largest entry exceeds the previous bound
    (floor(B/p) for the first row). For a convergent integral the tail
    eventually drops; for an unbounded one max_term_dim keeps climbing.

    :param bounds: a non-empty strictly increasing list of positive integers
    """
    bounds = list(bounds)
    if not bounds or any(b <= a for a, b in zip(bounds, bounds[1:])) or bounds[0] < 1:
        raise DomainError("bounds must be a non-empty strictly increasing list of positive integers")

    full = truncated_integral(V, bounds[-1], per_stratum=True, workers=workers)
    by_largest = {}
    for j, t in full.per_stratum:
        by_largest.setdefault(j.largest_entry, []).append(t)

    rows = []
    included = []
    previous = bounds[0] // V.spec.p
    for bound in bounds:
        shell = [t for key, terms in by_largest.items() if previous < key <= bound for t in terms]
        included.extend(t for key, terms in by_largest.items()
                        if key <= bound and (not rows or key > rows[-1].bound) for t in terms)
        tail = max([t.degree for t in shell] or [NEG_INFINITY])
        max_dim = max([t.degree for t in included] or [NEG_INFINITY])
        rows.append(TrajectoryRow(bound, len(included), max_dim, tail, poly_sum(included)))
        previous = bound
    return rows
