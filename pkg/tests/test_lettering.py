import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lettericity.graph import Graph, complement, relabel
from lettericity.lettering import (
    THRESHOLD_DECODER,
    Inconsistent,
    Lettering,
    canonical_word,
    complement_decoder,
    decode,
    first_discrepancy,
    infer_decoder,
    reverse_lettering,
    threshold_lettering,
    verify,
)

A, B = 0, 1


def w(text):
    return canonical_word(text)[0]


@st.composite
def words_and_decoders(draw, max_n=9, max_k=4):
    k = draw(st.integers(1, max_k))
    n = draw(st.integers(0, max_n))
    word = tuple(draw(st.lists(st.integers(0, k - 1), min_size=n, max_size=n)))
    pairs = [(a, b) for a in range(k) for b in range(k)]
    dec = frozenset(p for p in pairs if draw(st.booleans()))
    return word, dec


class TestDecode:
    def test_single_pair(self):
        assert decode(w("ab"), {(A, B)}) == Graph.complete(2)

    def test_star(self):
        assert decode(w("aab"), {(A, B), (B, B)}).edges() == [(0, 2), (1, 2)]

    def test_abab(self):
        # pairs (i<j) whose letters read (a,b): (0,1) (0,3) (2,3)
        g = decode(w("abab"), {(A, B)})
        assert g.edges() == [(0, 1), (0, 3), (2, 3)]
        assert relabel(Graph.path(4), [1, 0, 3, 2]) == g

    @given(words_and_decoders(), st.data())
    def test_monotone_in_decoder(self, wd, data):
        word, dec = wd
        extra = data.draw(st.tuples(st.integers(0, 3), st.integers(0, 3)))
        small, big = decode(word, dec), decode(word, dec | {extra})
        assert set(small.edges()) <= set(big.edges())

    @given(words_and_decoders())
    def test_complement_decoder(self, wd):
        word, dec = wd
        assert decode(word, complement_decoder(word, dec)) == complement(decode(word, dec))

    @given(words_and_decoders())
    def test_reversal(self, wd):
        word, dec = wd
        g = decode(word, dec)
        rev = decode(word[::-1], {(b, a) for a, b in dec})
        n = len(word)
        assert rev == relabel(g, [n - 1 - i for i in range(n)])


class TestVerify:
    def test_single_vertex(self):
        assert verify(Graph.empty(1), Lettering((0,), frozenset(), (0,)))

    def test_k2(self):
        assert verify(Graph.complete(2), Lettering((0, 0), frozenset({(0, 0)}), (0, 1)))

    def test_k2_missing_edge(self):
        l = Lettering((0, 0), frozenset(), (0, 1))
        assert not verify(Graph.complete(2), l)
        assert first_discrepancy(Graph.complete(2), l) == (0, 1, 0, 1)

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            verify(Graph.complete(3), Lettering((0, 0), frozenset(), (0, 1)))

    def test_not_bijection(self):
        with pytest.raises(ValueError):
            Lettering((0, 0), frozenset(), (0, 0))

    def test_json_round_trip(self):
        l = Lettering((0, 1, 0), frozenset({(0, 1)}), (2, 0, 1))
        assert Lettering.from_json(l.to_json()) == l


class TestInferDecoder:
    def test_triangle(self):
        assert infer_decoder(Graph.complete(3), (0, 0, 0), (0, 1, 2)) == {(A, A)}

    def test_p3_inconsistent(self):
        res = infer_decoder(Graph.path(3), (0, 0, 0), (0, 1, 2))
        assert isinstance(res, Inconsistent)
        assert res.letters == (A, A)
        assert res.edge_pair == (0, 1) and res.non_edge_pair == (0, 2)

    def test_abab_path(self):
        g = decode(w("abab"), {(A, B)})
        # (a,b): pairs 01 03 23 all edges; (b,a): pair 12 non-edge;
        # (a,a): 02 non-edge; (b,b): 13 non-edge
        assert infer_decoder(g, w("abab"), range(4)) == {(A, B)}

    def test_unconstrained_pairs_omitted(self):
        # in "ab" the pair (b,a) never occurs
        assert infer_decoder(Graph.complete(2), (0, 1), (0, 1)) == {(A, B)}

    @settings(max_examples=200)
    @given(words_and_decoders(max_n=8), st.randoms(use_true_random=False))
    def test_success_implies_verify(self, wd, rnd):
        word, dec = wd
        g = decode(word, dec)
        perm = list(range(len(word)))
        rnd.shuffle(perm)
        h = relabel(g, perm)
        d = infer_decoder(h, word, perm)
        assert not isinstance(d, Inconsistent)
        assert verify(h, Lettering(word, d, tuple(perm)))

    @settings(max_examples=200)
    @given(st.integers(2, 7).flatmap(lambda n: st.tuples(
        st.just(n),
        st.lists(st.booleans(), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2),
        st.lists(st.integers(0, 2), min_size=n, max_size=n),
    )))
    def test_inconsistent_means_no_decoder(self, case):
        n, bits, word = case
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        g = Graph.from_edges(n, [p for p, b in zip(pairs, bits) if b])
        res = infer_decoder(g, word, range(n))
        letters = sorted(set(word))
        all_pairs = [(a, b) for a in letters for b in letters]
        exists = False
        for mask in range(1 << len(all_pairs)):
            d = {p for i, p in enumerate(all_pairs) if (mask >> i) & 1}
            if decode(word, d) == g:
                exists = True
                break
        assert exists == (not isinstance(res, Inconsistent))


class TestThreshold:
    def test_edgeless(self):
        l = threshold_lettering(Graph.empty(4))
        assert l.word == (A, A, A, A) and l.decoder == THRESHOLD_DECODER
        assert verify(Graph.empty(4), l)

    def test_triangle(self):
        l = threshold_lettering(Graph.complete(3))
        assert l.word == (A, B, B)
        assert verify(Graph.complete(3), l)

    def test_p4_not_threshold(self):
        p4 = Graph.path(4)
        # degrees 1,2,2,1: nobody is isolated (0) or dominating (3)
        assert all(0 < p4.degree(v) < 3 for v in range(4))
        assert threshold_lettering(p4) is None

    def test_c4_not_threshold(self):
        assert threshold_lettering(Graph.cycle(4)) is None

    @given(st.lists(st.booleans(), max_size=12), st.randoms(use_true_random=False))
    def test_built_graphs_recognized(self, steps, rnd):
        n = len(steps)
        edges = [(i, j) for j in range(n) if steps[j] for i in range(j)]
        g = Graph.from_edges(n, edges)
        perm = list(range(n))
        rnd.shuffle(perm)
        h = relabel(g, perm)
        l = threshold_lettering(h)
        assert l is not None and verify(h, l) and l.alphabet_size <= 2


class TestReverse:
    def test_palindrome_symmetric_decoder(self):
        l = Lettering(w("abba"), frozenset({(A, B), (B, A)}), (0, 1, 2, 3))
        r = reverse_lettering(l)
        assert decode(r.word, r.decoder) == decode(l.word, l.decoder)

    def test_ab(self):
        l = Lettering((A, B), frozenset({(A, B)}), (0, 1))
        r = reverse_lettering(l)
        assert r.word == (B, A) and r.decoder == {(B, A)}
        assert decode(r.word, r.decoder) == decode(l.word, l.decoder) == Graph.complete(2)

    @given(words_and_decoders(), st.randoms(use_true_random=False))
    def test_involution_and_validity(self, wd, rnd):
        word, dec = wd
        perm = list(range(len(word)))
        rnd.shuffle(perm)
        l = Lettering(word, dec, tuple(perm))
        g = relabel(decode(word, dec), perm)
        assert reverse_lettering(reverse_lettering(l)) == l
        assert verify(g, reverse_lettering(l))
