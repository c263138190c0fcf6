import random

import pytest

from distdet.blocks import UnsupportedBlockError
from distdet.formulas import (
    cactus_det,
    compose_ghh,
    cycle_detcof,
    det_cof_closed,
    edge_detcof,
    theta_detcof,
    theta_path_det,
    theta_prime_det,
    unicyclic_det,
)
from distdet.graphs import (
    BlockRequest,
    Graph,
    attach_path,
    build_theta,
    cycle_graph,
    path_graph,
    random_block_graph,
)
from distdet.linalg import DetCof
from distdet.verify import det_cof_oracle


def test_edge_values():
    assert edge_detcof() == DetCof(-1, -2)


class TestCycle:
    @pytest.mark.parametrize("n, expected", [(3, (2, 3)), (5, (6, 5)), (7, (12, 7)), (4, (0, 0)), (6, (0, 0))])
    def test_values(self, n, expected):
        assert cycle_detcof(n) == expected

    def test_against_oracle(self):
        for n in range(3, 15):
            assert cycle_detcof(n) == det_cof_oracle(cycle_graph(n))

    def test_rejects_short(self):
        with pytest.raises(ValueError):
            cycle_detcof(2)


class TestUnicyclic:
    @pytest.mark.parametrize("l, m, expected", [(3, 0, 2), (3, 1, -7), (5, 0, 6), (4, 7, 0), (6, 2, 0)])
    def test_values(self, l, m, expected):
        assert unicyclic_det(l, m) == expected

    def test_placement_independence(self):
        for seed in range(6):
            g = random_block_graph(BlockRequest(edges=3, cycles=(5,)), seed)
            assert det_cof_oracle(g).det == unicyclic_det(5, 3)

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            unicyclic_det(2, 0)
        with pytest.raises(ValueError):
            unicyclic_det(3, -1)


class TestCactus:
    @pytest.mark.parametrize(
        "lengths, m, expected",
        [((3,), 1, -7), ((3, 5), 0, 28), ((4, 3), 2, 0), ((), 3, -12), ((3, 3, 3), 0, 54)],
    )
    def test_values(self, lengths, m, expected):
        assert cactus_det(lengths, m) == expected

    def test_against_oracle(self):
        for seed in range(6):
            g = random_block_graph(BlockRequest(edges=2, cycles=(3, 7)), seed)
            assert det_cof_oracle(g).det == cactus_det((3, 7), 2)

    def test_rejects_short_cycle(self):
        with pytest.raises(ValueError):
            cactus_det((2, 5), 0)


class TestTheta:
    @pytest.mark.parametrize(
        "triple, expected",
        [
            ((1, 2, 2), (-4, -4)),
            ((1, 2, 4), (-9, -6)),
            ((1, 4, 4), (-16, -8)),
            ((2, 2, 2), (-16, -16)),
            ((2, 2, 3), (4, 4)),
            ((2, 2, 5), (20, 12)),
            ((1, 2, 3), (0, 0)),
            ((2, 3, 3), (0, 0)),
            ((2, 2, 4), (0, 0)),
            ((3, 4, 5), (0, 0)),
        ],
    )
    def test_values(self, triple, expected):
        assert theta_detcof(*triple) == expected

    def test_unsorted_input_is_normalized(self):
        assert theta_detcof(4, 2, 1) == theta_detcof(1, 2, 4)

    def test_against_oracle_sample(self):
        for triple in [(1, 2, 2), (1, 4, 6), (2, 2, 2), (2, 2, 7), (2, 4, 4), (3, 3, 4)]:
            assert theta_detcof(*triple) == det_cof_oracle(build_theta(*triple))

    def test_rejects_invalid(self):
        with pytest.raises(ValueError):
            theta_detcof(1, 1, 3)


class TestThetaPrime:
    @pytest.mark.parametrize(
        "triple, expected",
        [((1, 2, 2), 12), ((1, 2, 4), 24), ((2, 2, 2), 48), ((2, 2, 3), -12), ((2, 3, 3), 0), ((2, 2, 4), 0)],
    )
    def test_values(self, triple, expected):
        assert theta_prime_det(*triple) == expected

    def test_attachment_independence_sample(self):
        for triple in [(1, 2, 2), (2, 2, 2), (2, 2, 3)]:
            g = build_theta(*triple)
            dets = {det_cof_oracle(attach_path(g, v, 1)).det for v in range(g.n)}
            assert dets == {theta_prime_det(*triple)}

    def test_relation_to_theta(self):
        # cof of the theta block equals -2 det(theta) - det(theta with pendant)
        for triple in [(1, 2, 2), (2, 2, 2), (2, 2, 5), (1, 4, 4), (2, 3, 3)]:
            base = theta_detcof(*triple)
            assert base.cof == -2 * base.det - theta_prime_det(*triple)


class TestThetaPath:
    @pytest.mark.parametrize(
        "p, q, m, expected",
        [(2, 2, 0, -4), (2, 2, 1, 12), (2, 4, 3, 144), (4, 4, 2, -96), (2, 2, 5, 448)],
    )
    def test_values(self, p, q, m, expected):
        assert theta_path_det(p, q, m) == expected

    def test_matches_theta_and_prime(self):
        for p, q in [(2, 2), (2, 4), (4, 6)]:
            assert theta_path_det(p, q, 0) == theta_detcof(1, p, q).det
            assert theta_path_det(p, q, 1) == theta_prime_det(1, p, q)

    def test_against_oracle(self):
        for p, q, m in [(2, 2, 2), (2, 4, 3), (4, 4, 1)]:
            g = attach_path(build_theta(1, p, q), 0, m)
            assert det_cof_oracle(g).det == theta_path_det(p, q, m)

    def test_rejects_odd_lengths(self):
        with pytest.raises(ValueError):
            theta_path_det(2, 3, 1)
        with pytest.raises(ValueError):
            theta_path_det(2, 2, -1)


class TestCompose:
    def test_single_block_identity(self):
        assert compose_ghh([DetCof(5, 7)]) == DetCof(5, 7)

    def test_worked_three_block_example(self):
        parts = [DetCof(-1, -2), DetCof(2, 3), DetCof(-4, -4)]
        assert compose_ghh(parts) == DetCof(52, 24)

    def test_zero_cofactor_block(self):
        assert compose_ghh([DetCof(0, 0), DetCof(2, 3)]) == DetCof(0, 0)

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            compose_ghh([])


class TestClosedForm:
    def test_trees_match_graham_pollack(self):
        rng = random.Random(9)
        for n in range(2, 10):
            g = random_block_graph(BlockRequest(edges=n - 1), rng.randrange(2**30))
            result = det_cof_closed(g)
            assert result.det == (-1) ** (n - 1) * (n - 1) * 2 ** (n - 2)
            assert result.cof == (-2) ** (n - 1)

    def test_worked_composite(self):
        g = random_block_graph(BlockRequest(edges=1, cycles=(3,), thetas=((1, 2, 2),)), seed=7)
        result = det_cof_closed(g)
        assert (result.det, result.cof) == (52, 24)
        assert "census" in result.provenance

    def test_zero_block_short_circuit(self):
        g = random_block_graph(BlockRequest(edges=2, cycles=(4,), thetas=((1, 2, 2),)), seed=1)
        result = det_cof_closed(g)
        assert (result.det, result.cof) == (0, 0)
        assert "zero block" in result.provenance

    def test_single_vertex_convention(self):
        result = det_cof_closed(Graph(1, frozenset()))
        assert (result.det, result.cof) == (0, 0)
        assert result.provenance == "single vertex"

    def test_matches_oracle_on_mixed_graphs(self):
        req = BlockRequest(edges=2, cycles=(3, 5), thetas=((2, 2, 3),))
        for seed in range(5):
            g = random_block_graph(req, seed)
            assert det_cof_closed(g).detcof == det_cof_oracle(g)

    def test_unsupported_block_raises(self):
        k4 = Graph.from_edges(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
        with pytest.raises(UnsupportedBlockError):
            det_cof_closed(k4)

    def test_path_golden_values(self):
        assert det_cof_closed(path_graph(4)).detcof == DetCof(-12, -8)
