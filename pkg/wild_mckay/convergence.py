"""
The convergence criterion for the integral of L^{d - v} over G-covers and
the singularity verdicts it implies for the quotient V/G.

Everything is decided on the exact rationals

    c_m = 1 - 1/p^{n-m} - sum_{l=m}^{n-1} D_V^(l) / p^{2n-1-l},  m = 0..n-1.

All c_m < 0 is convergence (canonical); all c_m <= 0 is bounded term
dimensions (log canonical); any c_m > 0 is neither.
"""

import enum

from wild_mckay import loggers
from wild_mckay import representation as rep
from wild_mckay.errors import HypothesisError
from wild_mckay.grothendieck import format_rational, rational, sign

HYPOTHESES_VIOLATED = "formula value only — wild McKay hypotheses violated"


class Status(enum.Enum):
    STRICT = 'STRICT'
    BOUNDED_BOUNDARY = 'BOUNDED_BOUNDARY'
    UNBOUNDED = 'UNBOUNDED'


class Canonical(enum.Enum):
    YES_IF_CONVERGENT = 'YES_IF_CONVERGENT'
    NO = 'NO'
    CONDITIONAL_ON_LOG_RESOLUTION_NO = 'CONDITIONAL_ON_LOG_RESOLUTION_NO'


class ConvergenceReport(object):
    """
    The values c_m and the status they determine.
    """
    def __init__(self, c_values):
        self.c_values = tuple(c_values)
        signs = [sign(c) for c in self.c_values]
        if any(s > 0 for s in signs):
            self.status = Status.UNBOUNDED
        elif all(s < 0 for s in signs):
            self.status = Status.STRICT
        else:
            self.status = Status.BOUNDED_BOUNDARY

    @property
    def converges(self):
        return self.status is Status.STRICT

    @property
    def bounded(self):
        return self.status is not Status.UNBOUNDED

    def to_json(self):
        return {
            'c_values': [format_rational(c) for c in self.c_values],
            'status': self.status.value,
        }

    def __repr__(self):
        return "ConvergenceReport({}, {})".format(
            [format_rational(c) for c in self.c_values], self.status.value)


class SingularityVerdict(object):
    """
    What the criterion says about X = V/G. The verdict is a theorem only when
    hypotheses_ok; otherwise 'label' marks it as a bare formula value.
    """
    def __init__(self, report, log_canonical, canonical, hypotheses_ok, warnings=None, notes=None):
        self.report = report
        self.log_canonical = log_canonical
        self.canonical = canonical
        self.hypotheses_ok = hypotheses_ok
        self.warnings = list(warnings or [])
        self.notes = list(notes or [])

    @property
    def label(self):
        return 'theorem' if self.hypotheses_ok else HYPOTHESES_VIOLATED

    def to_json(self):
        data = self.report.to_json()
        data.update({
            'log_canonical': self.log_canonical,
            'canonical': self.canonical.value,
            'hypotheses_ok': self.hypotheses_ok,
            'label': self.label,
            'warnings': self.warnings,
            'notes': self.notes,
        })
        return data


class SylowVerdict(object):
    """
    Verdict for X~ = V~/G~ where G~ has cyclic p-Sylow subgroup G and V is
    the restriction of V~ to G.
    """
    def __init__(self, report, log_terminal, log_canonical, hypotheses_ok, warnings=None):
        self.report = report
        self.log_terminal = log_terminal
        self.log_canonical = log_canonical
        self.hypotheses_ok = hypotheses_ok
        self.warnings = list(warnings or [])

    @property
    def label(self):
        return 'theorem' if self.hypotheses_ok else HYPOTHESES_VIOLATED

    def to_json(self):
        data = self.report.to_json()
        data.update({
            'log_terminal': self.log_terminal,
            'log_canonical': self.log_canonical,
            'hypotheses_ok': self.hypotheses_ok,
            'label': self.label,
            'warnings': self.warnings,
        })
        return data


class DimensionVerdict(object):
    """
    The threshold form of the criterion for an indecomposable V = W_d. The
    bounds are None for n = 1, where no threshold applies.
    """
    def __init__(self, d, canonical_bound, log_canonical_bound, canonical, log_canonical, notes=None):
        self.d = d
        self.canonical_bound = canonical_bound
        self.log_canonical_bound = log_canonical_bound
        self.canonical = canonical
        self.log_canonical = log_canonical
        self.notes = list(notes or [])

    def to_json(self):
        return {
            'd': self.d,
            'canonical_bound': self.canonical_bound,
            'log_canonical_bound': self.log_canonical_bound,
            'canonical': self.canonical.value,
            'log_canonical': self.log_canonical,
            'notes': self.notes,
        }


#-------------------------------------------------------------------------------
# The criterion
#-------------------------------------------------------------------------------

def criterion_values(V):
    """
    :return: [c_0, ..., c_{n-1}] as exact rationals
    """
    p, n = V.spec.p, V.spec.n
    return [1 - rational(1, p ** (n - m)) - rep.weighted_tail(V, m) for m in range(n)]


def convergence_status(V):
    return ConvergenceReport(criterion_values(V))


def connected_criterion(V):
    """
    The report governing the integral over connected covers alone. Its c_m
    coincide with the full criterion's: the disconnected part contributes
    the criterion of restrict(V), whose values reappear as c_1, ..., c_{n-1}.
    """
    return convergence_status(V)


def restriction_chain(V):
    """
    Reports for V, restrict(V), restrict(restrict(V)), ... down to n = 1.
    Each report's values are its predecessor's with c_0 dropped.
    """
    chain = [(V, convergence_status(V))]
    while V.spec.n > 1:
        V = rep.restrict(V)
        chain.append((V, convergence_status(V)))
    return chain


def hypothesis_warnings(V):
    """
    :return: one message per violated wild McKay hypothesis
    """
    warnings = []
    if not rep.is_effective(V):
        warnings.append("V is not effective: no block is longer than p^(n-1) = {}".format(
            V.spec.order // V.spec.p))
    a = rep.pseudo_reflection_witness(V)
    if a is not None:
        warnings.append("V has a pseudo-reflection: sigma^{} fixes a hyperplane".format(V.spec.p ** a))
    return warnings


def classify_quotient(V):
    """
    Canonical / log canonical verdict for X = V/G.

    Log canonical iff no c_m is positive. Canonical is asserted when every
    c_m is negative; otherwise 'not canonical' holds only given a log
    resolution of X.
    """
    logger = loggers.get_logger('wild_mckay')
    report = convergence_status(V)
    warnings = hypothesis_warnings(V)
    for warning in warnings:
        logger.warning("{}: {}".format(rep.format_representation(V), warning))

    if report.status is Status.STRICT:
        canonical = Canonical.YES_IF_CONVERGENT
    else:
        canonical = Canonical.CONDITIONAL_ON_LOG_RESOLUTION_NO

    notes = []
    if V.spec.n == 1:
        notes.append("n=1 case")
    logger.debug("{} -> {}".format(rep.format_representation(V), report))
    return SingularityVerdict(report, report.bounded, canonical, not warnings, warnings, notes)


def sylow_classify(V):
    """
    Verdict for a quotient by a group whose p-Sylow subgroup is G, given the
    restriction V. Log terminal when every c_m is negative; log canonical
    iff none is positive.
    """
    logger = loggers.get_logger('wild_mckay')
    report = convergence_status(V)
    warnings = hypothesis_warnings(V)
    for warning in warnings:
        logger.warning("{}: {}".format(rep.format_representation(V), warning))
    return SylowVerdict(report, report.converges, report.bounded, not warnings, warnings)


def dimension_criterion(V):
    """
    For an effective indecomposable W_d with no pseudo-reflection: canonical
    if d >= p + p^{n-1}, log canonical iff d >= p - 1 + p^{n-1}.

    The threshold argument covers n >= 2. For n = 1 the thresholds p and
    p + 1 say nothing about d <= p, so the verdict is read off the exact
    criterion instead and both bounds are None.

    :raises HypothesisError: naming the first violated hypothesis
    """
    spec = V.spec
    if not V.is_indecomposable:
        raise HypothesisError('indecomposable', "{} is decomposable".format(rep.format_representation(V)))
    if not rep.is_effective(V):
        raise HypothesisError('effective', "{} is not effective".format(rep.format_representation(V)))
    a = rep.pseudo_reflection_witness(V)
    if a is not None:
        raise HypothesisError('no pseudo-reflection', "{} has a pseudo-reflection (sigma^{})".format(
            rep.format_representation(V), spec.p ** a))

    d = V.dim
    if spec.n == 1:
        report = convergence_status(V)
        if report.status is Status.STRICT:
            canonical = Canonical.YES_IF_CONVERGENT
        elif report.status is Status.BOUNDED_BOUNDARY:
            canonical = Canonical.CONDITIONAL_ON_LOG_RESOLUTION_NO
        else:
            canonical = Canonical.NO
        return DimensionVerdict(d, None, None, canonical, report.bounded,
                                ["n=1 case: verdict taken from the criterion values"])

    top = spec.order // spec.p
    canonical_bound = spec.p + top
    log_canonical_bound = spec.p - 1 + top
    if d >= canonical_bound:
        canonical = Canonical.YES_IF_CONVERGENT
    elif d >= log_canonical_bound:
        canonical = Canonical.CONDITIONAL_ON_LOG_RESOLUTION_NO
    else:
        canonical = Canonical.NO

    notes = []
    if spec.n == 2:
        notes.append("n=2 case rests on the earlier Z/p^2 criterion")
    return DimensionVerdict(d, canonical_bound, log_canonical_bound, canonical,
                            d >= log_canonical_bound, notes)


class SweepRow(object):
    def __init__(self, d, report, hypotheses_ok):
        self.d = d
        self.report = report
        self.hypotheses_ok = hypotheses_ok

    def to_json(self):
        data = self.report.to_json()
        data.update({'d': self.d, 'hypotheses_ok': self.hypotheses_ok})
        return data


class SweepResult(object):
    def __init__(self, spec, rows):
        self.spec = spec
        self.rows = list(rows)

    def _first(self, predicate):
        for row in self.rows:
            if predicate(row.report):
                return row.d
        return None

    @property
    def first_log_canonical(self):
        return self._first(lambda report: report.bounded)

    @property
    def first_canonical(self):
        return self._first(lambda report: report.converges)

    def to_json(self):
        return {
            'p': self.spec.p,
            'n': self.spec.n,
            'first_log_canonical': self.first_log_canonical,
            'first_canonical': self.first_canonical,
            'rows': [row.to_json() for row in self.rows],
        }


def _sweep_row(args):
    p, n, d = args
    V = rep.Representation.indecomposable(rep.GroupSpec(p, n), d)
    return SweepRow(d, convergence_status(V), not hypothesis_warnings(V))


def sweep(spec, workers=1):
    """
    Runs the criterion over every indecomposable W_d, 1 <= d <= p^n.
    """
    jobs = [(spec.p, spec.n, d) for d in range(1, spec.order + 1)]
    logger = loggers.get_logger('wild_mckay')
    logger.debug("sweeping {} dimensions for {} with {} worker(s)".format(len(jobs), spec, workers))
    if workers > 1:
        import multiprocessing
        with multiprocessing.Pool(workers) as pool:
            rows = pool.map(_sweep_row, jobs)
    else:
        rows = [_sweep_row(job) for job in jobs]
    return SweepResult(spec, rows)
