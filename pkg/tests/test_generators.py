from collections import Counter
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hamdecomp.cycles import edge_set
from hamdecomp.generators import (
    Generator,
    canonicalize,
    compositions_of_sigma,
    counts_by_sigma,
    enumerate_generators,
    generator_of,
    is_canonical,
)
from hamdecomp.modmath import HypergraphParams, ParameterError
from hamdecomp.ordering import adopted_order, difference_vector

from .oracles import bounded_compositions, matrix, rotations, translation_orbits


def G(*v):
    return Generator(tuple(v[:-1]), v[-1])


class TestCompositions:
    def test_sigma4_n7_k3(self):
        # bounded_compositions(4, 2, 3) == [(1, 3), (2, 2), (3, 1)]
        assert list(compositions_of_sigma(4, HypergraphParams(7, 3))) == [(1, 3), (2, 2), (3, 1)]

    def test_sigma2_n7_k3(self):
        assert list(compositions_of_sigma(2, HypergraphParams(7, 3))) == [(1, 1)]

    def test_sigma4_n11_k5(self):
        assert list(compositions_of_sigma(4, HypergraphParams(11, 5))) == [(1, 1, 1, 1)]

    @pytest.mark.parametrize("sigma", [1, 5])
    def test_out_of_range(self, sigma):
        with pytest.raises(ParameterError):
            list(compositions_of_sigma(sigma, HypergraphParams(7, 3)))

    @pytest.mark.parametrize("n, k", list(matrix(max_n=13)))
    def test_matches_product_enumeration(self, n, k):
        p = HypergraphParams(n, k)
        for sigma in range(p.sigma_min, p.sigma_max + 1):
            got = list(compositions_of_sigma(sigma, p))
            assert got == bounded_compositions(sigma, k - 1, n - sigma)

    def test_is_lazy(self):
        it = compositions_of_sigma(30, HypergraphParams(61, 30))
        assert next(it) == (1,) * 28 + (2,)


class TestCanonicalize:
    @pytest.mark.parametrize(
        "gaps, expected",
        [
            ((3, 1, 3), (1, 3, 3)),
            ((4, 1, 1, 1, 4), (1, 1, 1, 4, 4)),
            ((2, 2, 3), (2, 2, 3)),
            ((1, 4, 1, 1, 4), (1, 1, 4, 1, 4)),
        ],
    )
    def test_examples(self, gaps, expected):
        assert canonicalize(gaps) == expected

    @given(st.lists(st.integers(1, 6), min_size=2, max_size=9))
    def test_class_invariant_and_idempotent(self, gaps):
        canon = canonicalize(gaps)
        assert canon in rotations(gaps)
        assert canon[-1] == max(gaps)
        assert canonicalize(canon) == canon
        assert is_canonical(canon)
        assert {canonicalize(r) for r in rotations(gaps)} == {canon}


class TestEnumerate:
    def test_k5_2(self):
        assert list(enumerate_generators(HypergraphParams(5, 2))) == [G(1, -1), G(2, -2)]

    def test_k7_3(self):
        assert list(enumerate_generators(HypergraphParams(7, 3))) == [
            G(1, 1, -2), G(1, 2, -3), G(2, 1, -3), G(1, 3, 3), G(2, 2, 3)
        ]

    def test_k11_5_counts(self):
        p = HypergraphParams(11, 5)
        gens = list(enumerate_generators(p))
        assert len(gens) == 42
        assert Counter(g.sigma for g in gens) == {4: 1, 5: 4, 6: 10, 7: 18, 8: 9}
        assert counts_by_sigma(p) == {4: 1, 5: 4, 6: 10, 7: 18, 8: 9}

    @pytest.mark.parametrize("n, k", list(matrix(max_n=13)))
    def test_one_generator_per_translation_orbit(self, n, k):
        p = HypergraphParams(n, k)
        gens = list(enumerate_generators(p))
        built = {frozenset(frozenset(e) for e in edge_set(g, p)) for g in gens}
        assert len(gens) == p.N
        assert built == translation_orbits(n, k)

    @pytest.mark.parametrize("n, k", list(matrix()))
    def test_structure(self, n, k):
        p = HypergraphParams(n, k)
        prev = None
        count = 0
        for g in enumerate_generators(p):
            count += 1
            key = (g.sigma, g.parts)
            assert prev is None or key > prev
            prev = key
            assert p.sigma_min <= g.sigma <= p.sigma_max
            assert all(1 <= c <= n - g.sigma for c in g.parts)
            assert g.last == (-g.sigma if g.sigma <= n // 2 else n - g.sigma)
            assert sum(g.gaps(n)) == n
            assert canonicalize(g.gaps(n)) == g.gaps(n)
        assert count == p.N

    @pytest.mark.parametrize("n, k", list(matrix()))
    def test_canonicalization_is_identity_below_case3(self, n, k):
        p = HypergraphParams(n, k)
        limit = n // 2 + k // 2
        for sigma in range(p.sigma_min, min(limit, p.sigma_max + 1)):
            for c in compositions_of_sigma(sigma, p):
                assert n - sigma not in c


class TestGeneratorOf:
    P73 = HypergraphParams(7, 3)

    @pytest.mark.parametrize(
        "subset, expected",
        [({1, 2, 4}, G(1, 2, -3)), ({2, 4, 6}, G(2, 2, 3)), ({1, 4, 5}, G(1, 3, 3))],
    )
    def test_k7_3(self, subset, expected):
        assert generator_of(subset, self.P73) == expected

    def test_k11_5_representative(self):
        assert generator_of({1, 2, 3, 4, 5}, HypergraphParams(11, 5)) == G(1, 1, 1, 1, -4)

    @pytest.mark.parametrize("n, k", list(matrix(max_n=13)))
    def test_fibers_exhaustive(self, n, k):
        p = HypergraphParams(n, k)
        fibers = Counter()
        for a in combinations(range(1, n + 1), k):
            g = generator_of(a, p)
            fibers[g] += 1
            assert frozenset(a) in {frozenset(e) for e in edge_set(g, p)}
        assert set(fibers) == set(enumerate_generators(p))
        assert set(fibers.values()) == {n}

    @pytest.mark.parametrize("n, k", list(matrix()))
    def test_no_subset_beyond_sigma_max(self, n, k):
        # sampled here; the exhaustive sweep lives in the acceptance suite
        p = HypergraphParams(n, k)
        for i, a in enumerate(combinations(range(1, n + 1), k)):
            if i > 3000:
                break
            assert difference_vector(adopted_order(a, p).entries, n).gamma <= p.sigma_max

    @given(st.data())
    def test_round_trip_large_primes(self, data):
        n = data.draw(st.sampled_from([29, 31, 37, 41, 43, 47, 53, 59, 61]))
        k = data.draw(st.integers(2, (n - 1) // 2))
        a = data.draw(st.sets(st.integers(1, n), min_size=k, max_size=k))
        p = HypergraphParams(n, k)
        g = generator_of(a, p)
        assert frozenset(a) in {frozenset(e) for e in edge_set(g, p)}
        assert canonicalize(g.gaps(n)) == g.gaps(n)
