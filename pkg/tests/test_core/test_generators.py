from __future__ import annotations

from itertools import combinations

import pytest
from pydantic import ValidationError

from isk4_detect import GenSpec, SplitMix64, build_graph, detect_isk4, generate, verify_isk4
from isk4_detect.core import Isk4Found, Isk4Free
from isk4_detect.generators import (
    FAMILIES,
    complete_bipartite_2n,
    cubic_line,
    gnp,
    line_graph,
    planted_isk4,
    random_cubic_graph,
    random_forest,
    subdivided_k4,
    twin_wheel,
)
from tests.graphs import complete, path_graph, star


class TestSplitMix64:
    def test_reference_sequence(self) -> None:
        rng = SplitMix64(0)
        assert rng.next_u64() == 0xE220A8397B1DCDAF
        assert rng.next_u64() == 0x6E789E6AA1B965F4

    def test_same_seed_same_stream(self) -> None:
        a, b = SplitMix64(42), SplitMix64(42)
        assert [a.next_u64() for _ in range(8)] == [b.next_u64() for _ in range(8)]

    def test_split_gives_a_fresh_stream(self) -> None:
        parent = SplitMix64(7)
        child = parent.split()
        assert child.next_u64() != parent.next_u64()

    def test_random_in_unit_interval(self) -> None:
        rng = SplitMix64(1)
        values = [rng.random() for _ in range(1000)]
        assert all(0.0 <= v < 1.0 for v in values)

    def test_randrange(self) -> None:
        rng = SplitMix64(3)
        draws = {rng.randrange(5) for _ in range(500)}
        assert draws == {0, 1, 2, 3, 4}
        with pytest.raises(ValueError):
            rng.randrange(0)

    def test_permutation(self) -> None:
        assert sorted(SplitMix64(9).permutation(20)) == list(range(20))


class TestFamilies:
    def test_gnp_extremes(self) -> None:
        assert gnp(8, 0.0, SplitMix64(0)).m == 0
        assert gnp(8, 1.0, SplitMix64(0)).m == 28

    def test_forest(self) -> None:
        tree = random_forest(30, 0.0, SplitMix64(5))
        assert tree.m == 29
        assert random_forest(30, 1.0, SplitMix64(5)).m == 0
        assert detect_isk4(random_forest(40, 0.1, SplitMix64(6))) == Isk4Free()

    def test_complete_bipartite(self) -> None:
        g = complete_bipartite_2n(7)
        assert g.m == 10
        assert g.neighbors(0) == frozenset(range(2, 7))
        assert detect_isk4(g) == Isk4Free()

    def test_twin_wheel(self) -> None:
        g = twin_wheel(9, SplitMix64(2))
        assert (g.n, g.m) == (9, 11)
        verdict = detect_isk4(g)
        assert isinstance(verdict, Isk4Found)
        assert verify_isk4(g, verdict.certificate.vertices)

    @pytest.mark.parametrize("n", [4, 10, 22])
    def test_subdivided_k4(self, n: int) -> None:
        g = subdivided_k4(n, SplitMix64(n))
        assert (g.n, g.m) == (n, n + 2)
        assert verify_isk4(g, range(n))

    def test_planted_isk4_is_found(self) -> None:
        g = planted_isk4(18, 0.2, SplitMix64(11))
        verdict = detect_isk4(g)
        assert isinstance(verdict, Isk4Found)
        assert verify_isk4(g, verdict.certificate.vertices)

    def test_random_cubic(self) -> None:
        g = random_cubic_graph(12, SplitMix64(4))
        assert g.m == 18
        assert all(g.degree(v) == 3 for v in g.vertices())

    def test_random_cubic_needs_even_order(self) -> None:
        with pytest.raises(ValueError):
            random_cubic_graph(7, SplitMix64(0))

    def test_cubic_line_is_free(self) -> None:
        g = cubic_line(10, SplitMix64(8))
        assert g.n == 15
        assert all(g.degree(v) == 4 for v in g.vertices())
        assert detect_isk4(g) == Isk4Free()


class TestLineGraph:
    def test_path(self) -> None:
        g = line_graph(path_graph(3))
        assert (g.n, g.edges()) == (2, [(0, 1)])

    def test_triangle(self) -> None:
        assert line_graph(complete(3)).edges() == [(0, 1), (0, 2), (1, 2)]

    def test_claw_becomes_triangle(self) -> None:
        assert line_graph(star(3)).edges() == [(0, 1), (0, 2), (1, 2)]

    def test_edge_order_is_lexicographic(self) -> None:
        # vertex 0 is the edge (0,1), which shares no endpoint with vertex 2, the edge (2,3)
        g = line_graph(build_graph(4, [(2, 3), (0, 2), (0, 1)]))
        assert g.edges() == [(0, 1), (1, 2)]

    @pytest.mark.parametrize("seed", range(5))
    def test_adjacent_iff_edges_share_an_endpoint(self, seed: int) -> None:
        g = gnp(9, 0.4, SplitMix64(seed))
        lines = line_graph(g)
        edges = g.edges()
        assert lines.n == len(edges)
        for i, j in combinations(range(len(edges)), 2):
            assert lines.adjacent(i, j) == bool(set(edges[i]) & set(edges[j]))


class TestGenSpec:
    @pytest.mark.parametrize("family", FAMILIES)
    def test_reproducible(self, family: str) -> None:
        spec = GenSpec(family=family, n=12, p=0.3, seed=17)  # type: ignore[arg-type]
        assert generate(spec).edges() == generate(spec).edges()

    def test_seed_changes_the_instance(self) -> None:
        a = generate(GenSpec(family="gnp", n=24, seed=1))
        b = generate(GenSpec(family="gnp", n=24, seed=2))
        assert a.edges() != b.edges()

    def test_cubic_line_order(self) -> None:
        assert generate(GenSpec(family="cubic_line", n=8)).n == 12

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"family": "cubic_line", "n": 5},
            {"family": "cubic_line", "n": 2},
            {"family": "twin_wheel", "n": 4},
            {"family": "subdivided_k4", "n": 23},
            {"family": "planted_isk4", "n": 3},
            {"family": "complete_bipartite_2n", "n": 1},
            {"family": "gnp", "n": 5, "p": 1.5},
            {"family": "gnp", "n": 5, "seed": -1},
            {"family": "gnp", "n": -1},
            {"family": "nope", "n": 5},
        ],
    )
    def test_invalid(self, kwargs: dict[str, object]) -> None:
        with pytest.raises(ValidationError):
            GenSpec(**kwargs)  # type: ignore[arg-type]
