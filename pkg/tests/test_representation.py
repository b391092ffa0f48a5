import pytest

from wild_mckay import representation as rep
from wild_mckay.errors import DomainError, ParseError
from wild_mckay.grothendieck import rational
from wild_mckay.representation import GroupSpec, Representation


def make(p, n, *dims):
    return Representation(GroupSpec(p, n), dims)


def random_rep(rng, p, n):
    return make(p, n, *[rng.randint(1, p ** n) for _ in range(rng.randint(1, 3))])


def test_group_spec():
    spec = GroupSpec(3, 2)
    assert spec.order == 9
    assert spec.subgroup() == GroupSpec(3, 1)
    with pytest.raises(DomainError):
        GroupSpec(4, 1)
    with pytest.raises(DomainError):
        GroupSpec(2, 0)
    with pytest.raises(DomainError):
        GroupSpec(2, 1).subgroup()


def test_summands_are_sorted_and_checked():
    V = make(2, 3, 1, 5, 3)
    assert V.summands == (5, 3, 1)
    assert V.dim == 9
    assert not V.is_indecomposable
    assert V == make(2, 3, 3, 1, 5)
    with pytest.raises(DomainError):
        make(2, 3, 9)
    with pytest.raises(DomainError):
        make(2, 3, 0)
    with pytest.raises(DomainError):
        make(2, 3)
    with pytest.raises(DomainError):
        make(2, 3, 2.5)
    with pytest.raises(DomainError):
        make(2, 3, "3")


def test_direct_sum():
    V = make(2, 2, 3) + make(2, 2, 1)
    assert V.summands == (3, 1)
    with pytest.raises(DomainError):
        make(2, 2, 3) + make(3, 2, 1)


def test_effective():
    assert rep.is_effective(make(2, 2, 3))
    assert not rep.is_effective(make(2, 2, 2, 2))
    assert rep.is_effective(make(3, 1, 2))


@pytest.mark.parametrize('dims, p, n, witness', [
    ((2,), 2, 1, 0),
    ((3,), 2, 2, 1),
    ((4,), 2, 2, None),
    ((6,), 2, 3, None),
    ((5,), 2, 3, 2),
    ((4,), 3, 2, 1),
    ((5,), 3, 2, None),
    ((2, 1), 3, 1, 0),
])
def test_pseudo_reflections(dims, p, n, witness):
    V = make(p, n, *dims)
    assert rep.pseudo_reflection_witness(V) == witness
    assert rep.has_pseudo_reflection(V) == (witness is not None)


@pytest.mark.parametrize('before, p, n, after', [
    ((5,), 2, 3, (3, 2)),
    ((4,), 2, 2, (2, 2)),
    ((1,), 3, 2, (1,)),
    ((7, 2), 3, 2, (3, 2, 2, 1, 1)),
])
def test_restrict(before, p, n, after):
    restricted = rep.restrict(make(p, n, *before))
    assert restricted.spec == GroupSpec(p, n - 1)
    assert restricted.summands == after


def test_restrict_keeps_dimension(rng):
    for p, n in [(2, 2), (2, 3), (3, 2), (5, 2)]:
        for _ in range(20):
            V = random_rep(rng, p, n)
            assert rep.restrict(V).dim == V.dim


@pytest.mark.parametrize('dims, p, n, expected', [
    ((3,), 2, 2, (1, 2)),
    ((6,), 2, 3, (6, 4, 8)),
    ((5,), 2, 3, (3, 6, 4)),
    ((4,), 2, 2, (2, 4)),
    ((2,), 2, 1, (1,)),
    ((3, 3), 2, 2, (2, 4)),
])
def test_invariants_D(dims, p, n, expected):
    assert rep.invariants_D(make(p, n, *dims)) == expected


SWEEP = [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2)]


@pytest.mark.parametrize('p, n', SWEEP)
def test_invariants_of_indecomposables(p, n):
    spec = GroupSpec(p, n)
    for d in range(1, spec.order + 1):
        V = Representation.indecomposable(spec, d)
        for m in range(n):
            D = rep.invariant_D(V, m)
            assert D == rep.invariant_D_oracle(V, m), (d, m)
            assert D >= 0, (d, m)


def test_invariants_match_v_function(rng):
    for p, n in SWEEP:
        for _ in range(10):
            V = random_rep(rng, p, n)
            for m in range(n):
                assert rep.invariant_D(V, m) == rep.invariant_D_oracle(V, m), (V, m)


@pytest.mark.parametrize('p, n', SWEEP)
def test_pseudo_reflections_of_indecomposables(p, n):
    spec = GroupSpec(p, n)
    one_more = {p ** a + 1 for a in range(n)}
    for d in range(1, spec.order + 1):
        assert rep.has_pseudo_reflection(Representation.indecomposable(spec, d)) == (d in one_more), d


def test_invariants_are_additive(rng):
    for _ in range(20):
        V, W = random_rep(rng, 3, 2), random_rep(rng, 3, 2)
        assert rep.invariants_D(V + W) == tuple(a + b for a, b in zip(rep.invariants_D(V), rep.invariants_D(W)))


def test_weighted_tail():
    V = make(2, 3, 6)
    assert rep.weighted_tail(V, 2) == 1
    assert rep.weighted_tail(V, 1) == rational(5, 4)
    assert rep.weighted_tail(V, 0) == rational(23, 16)
    with pytest.raises(DomainError):
        rep.weighted_tail(V, 3)


def test_parse_and_format():
    V = rep.parse_representation("p=2,n=3,dims=5+3+1")
    assert V == make(2, 3, 5, 3, 1)
    assert rep.format_representation(V) == "p=2,n=3,dims=5+3+1"
    assert str(rep.parse_representation(" p = 3 , n = 1 , dims = 1 + 2 ")) == "p=3,n=1,dims=2+1"


@pytest.mark.parametrize('text', ["", "p=2;n=3;dims=5", "p=2,n=3", "p=2,n=3,dims=5+", "p=x,n=1,dims=1"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        rep.parse_representation(text)


def test_parse_reaches_domain_checks():
    with pytest.raises(DomainError):
        rep.parse_representation("p=4,n=1,dims=1")
    with pytest.raises(DomainError):
        rep.parse_representation("p=2,n=3,dims=9")


def test_json_form():
    V = rep.representation_from_json({"p": 2, "n": 3, "dims": [1, 5]})
    assert V == make(2, 3, 5, 1)
    assert rep.representation_to_json(V) == {"p": 2, "n": 3, "dims": [5, 1]}
    assert rep.representation_from_json('{"p": 2, "n": 3, "dims": [5, 1]}') == V
    with pytest.raises(ParseError):
        rep.representation_from_json('{"p": 2}')
    with pytest.raises(ParseError):
        rep.representation_from_json('not json')
    with pytest.raises(ParseError):
        rep.representation_from_json({"p": 2, "n": 2, "dims": 3})


@pytest.mark.parametrize('p, n', SWEEP)
def test_invariants_scale_under_restriction(p, n):
    spec = GroupSpec(p, n)
    for d in range(1, spec.order + 1):
        V = Representation.indecomposable(spec, d)
        W = rep.restrict(V)
        for m in range(1, n):
            assert rep.invariant_D(V, m) == p * rep.invariant_D(W, m - 1), (d, m)
