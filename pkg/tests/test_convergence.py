import pytest

from wild_mckay import convergence, digits
from wild_mckay import representation as rep
from wild_mckay.convergence import Canonical, Status
from wild_mckay.errors import HypothesisError
from wild_mckay.grothendieck import format_rational, rational
from wild_mckay.representation import GroupSpec, Representation


def make(p, n, *dims):
    return Representation(GroupSpec(p, n), dims)


def c_strings(V):
    return [format_rational(c) for c in convergence.criterion_values(V)]


@pytest.mark.parametrize('dims, p, n, expected, status', [
    ((3,), 2, 2, ["1/8", "0/1"], Status.UNBOUNDED),
    ((6,), 2, 3, ["-9/16", "-1/2", "-1/2"], Status.STRICT),
    ((4,), 2, 2, ["-1/2", "-1/2"], Status.STRICT),
    ((2,), 2, 1, ["0/1"], Status.BOUNDED_BOUNDARY),
    ((5,), 2, 3, ["-3/32", "-1/8", "0/1"], Status.BOUNDED_BOUNDARY),
])
def test_criterion_values(dims, p, n, expected, status):
    V = make(p, n, *dims)
    assert c_strings(V) == expected
    assert convergence.convergence_status(V).status is status


def test_values_are_exact():
    c = convergence.criterion_values(make(2, 3, 6))
    assert c[0] == rational(-9, 16)
    assert sum(c) == rational(-25, 16)


def test_report_json():
    report = convergence.convergence_status(make(2, 3, 6))
    assert report.converges and report.bounded
    assert report.to_json() == {'c_values': ["-9/16", "-1/2", "-1/2"], 'status': 'STRICT'}


def test_connected_criterion_matches_full_criterion():
    V = make(3, 2, 5)
    assert convergence.connected_criterion(V).c_values == convergence.convergence_status(V).c_values


def test_restriction_chain_drops_leading_value():
    chain = convergence.restriction_chain(make(2, 3, 6))
    assert [V.spec.n for V, _ in chain] == [3, 2, 1]
    for (_, upper), (_, lower) in zip(chain, chain[1:]):
        assert lower.c_values == upper.c_values[1:]


def test_classify_effective_convergent():
    verdict = convergence.classify_quotient(make(2, 3, 6))
    assert verdict.report.status is Status.STRICT
    assert verdict.log_canonical
    assert verdict.canonical is Canonical.YES_IF_CONVERGENT
    assert verdict.hypotheses_ok
    assert verdict.label == 'theorem'
    assert verdict.warnings == []


def test_classify_unbounded_is_conditional():
    verdict = convergence.classify_quotient(make(2, 2, 3))
    assert not verdict.log_canonical
    assert verdict.canonical is Canonical.CONDITIONAL_ON_LOG_RESOLUTION_NO


def test_classify_reports_violated_hypotheses(capsys):
    verdict = convergence.classify_quotient(make(2, 1, 2))
    assert verdict.report.status is Status.BOUNDED_BOUNDARY
    assert verdict.log_canonical
    assert not verdict.hypotheses_ok
    assert verdict.label == convergence.HYPOTHESES_VIOLATED
    assert any('pseudo-reflection' in w for w in verdict.warnings)
    assert verdict.notes == ["n=1 case"]
    assert 'pseudo-reflection' in capsys.readouterr().err


def test_classify_not_effective():
    verdict = convergence.classify_quotient(make(3, 2, 3, 2))
    assert not verdict.hypotheses_ok
    assert any('not effective' in w for w in verdict.warnings)


def test_sylow():
    verdict = convergence.sylow_classify(make(2, 3, 6))
    assert verdict.log_terminal and verdict.log_canonical
    verdict = convergence.sylow_classify(make(2, 3, 5))
    assert not verdict.log_terminal and verdict.log_canonical
    assert verdict.to_json()['status'] == 'BOUNDED_BOUNDARY'


@pytest.mark.parametrize('d, canonical, log_canonical', [
    (5, Canonical.CONDITIONAL_ON_LOG_RESOLUTION_NO, True),
    (6, Canonical.YES_IF_CONVERGENT, True),
    (9, Canonical.YES_IF_CONVERGENT, True),
])
def test_dimension_criterion(d, canonical, log_canonical):
    verdict = convergence.dimension_criterion(make(3, 2, d))
    assert (verdict.log_canonical_bound, verdict.canonical_bound) == (5, 6)
    assert verdict.canonical is canonical
    assert verdict.log_canonical is log_canonical
    assert verdict.notes


@pytest.mark.parametrize('dims, p, n, hypothesis', [
    ((5, 1), 3, 2, 'indecomposable'),
    ((3,), 3, 2, 'effective'),
    ((4,), 3, 2, 'no pseudo-reflection'),
    ((5,), 2, 3, 'no pseudo-reflection'),
])
def test_dimension_criterion_hypotheses(dims, p, n, hypothesis):
    with pytest.raises(HypothesisError) as error:
        convergence.dimension_criterion(make(p, n, *dims))
    assert error.value.hypothesis == hypothesis


@pytest.mark.parametrize('p, n', [(3, 1), (5, 1), (7, 1), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2)])
def test_thresholds_agree_with_criterion(p, n):
    spec = GroupSpec(p, n)
    for d in range(1, spec.order + 1):
        V = Representation.indecomposable(spec, d)
        if convergence.hypothesis_warnings(V):
            continue
        verdict = convergence.dimension_criterion(V)
        report = convergence.convergence_status(V)
        assert verdict.log_canonical == report.bounded, d
        assert (verdict.canonical is Canonical.YES_IF_CONVERGENT) == report.converges, d


def test_sweep_thresholds():
    result = convergence.sweep(GroupSpec(3, 3))
    assert result.first_log_canonical == 11
    assert result.first_canonical == 12
    assert [row.d for row in result.rows] == list(range(1, 28))
    data = result.to_json()
    assert data['first_log_canonical'] == 11
    assert len(data['rows']) == 27


def test_sweep_with_workers():
    spec = GroupSpec(2, 3)
    serial = convergence.sweep(spec)
    parallel = convergence.sweep(spec, workers=2)
    assert [r.report.c_values for r in parallel.rows] == [r.report.c_values for r in serial.rows]


@pytest.mark.parametrize('p, n', [(3, 2), (2, 3), (3, 3), (5, 2)])
def test_boundary_constants(p, n):
    spec = GroupSpec(p, n)
    top = p ** (n - 1)

    V = Representation.indecomposable(spec, p - 1 + top)
    assert digits.digit_sum(V.dim, spec, n - 1) == p - 1
    assert convergence.criterion_values(V)[n - 1] == 0

    V = Representation.indecomposable(spec, p + top)
    assert digits.digit_sum(V.dim, spec, n - 1) == p
    assert rep.invariant_D(V, n - 1) == p ** n
    assert all(c < 0 for c in convergence.criterion_values(V))


def test_dimension_criterion_for_cyclic_group():
    verdict = convergence.dimension_criterion(make(5, 1, 4))
    assert convergence.convergence_status(make(5, 1, 4)).c_values == (rational(-2, 5),)
    assert verdict.canonical is Canonical.YES_IF_CONVERGENT
    assert verdict.log_canonical
    assert verdict.canonical_bound is None and verdict.log_canonical_bound is None
    assert verdict.to_json()['canonical_bound'] is None


@pytest.mark.parametrize('p, n', [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2)])
def test_effective_range_is_strictly_monotone(p, n):
    spec = GroupSpec(p, n)
    effective = [Representation.indecomposable(spec, d) for d in range(spec.order // p + 1, spec.order + 1)]
    for V, W in zip(effective, effective[1:]):
        for m in range(n):
            assert rep.weighted_tail(W, m) > rep.weighted_tail(V, m), (W.dim, m)
        assert all(b < a for a, b in zip(convergence.criterion_values(V), convergence.criterion_values(W))), W.dim
