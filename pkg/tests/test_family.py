import math

import numpy as np
import pytest
from hypothesis import given, settings

from conftest import connected_graphs
from specbisect.eigen import algebraic_connectivity, eigendecompose, fiedler_space
from specbisect.family import (
    FamilyConfig,
    FamilyError,
    FamilySpec,
    analytic_spectrum,
    build_family,
    build_l_star,
    cone_augment,
    lambda_pm,
    lemma1_rayleigh_bound,
    mu_pm,
    ones_complement_basis,
    spectral_gap_budget,
    subspace_decomposition,
    tensor,
    w0_rayleigh_min,
    witness_vector,
)
from specbisect.generators import (
    base_graph,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    hypercube_graph,
    path_graph,
)
from specbisect.graph import Graph, GraphError, is_connected, laplacian, write_edge_list


class TestLStar:
    def test_m2_blocks(self):
        lstar = build_l_star(2)
        eye, ones = np.eye(2), np.ones((2, 2))
        assert lstar.shape == (8, 8)
        assert np.array_equal(lstar[0:2, 0:2], eye)
        assert np.array_equal(lstar[2:4, 2:4], 3 * eye)
        assert np.array_equal(lstar[4:6, 4:6], 3 * eye)
        assert np.array_equal(lstar[6:8, 6:8], eye)
        assert np.array_equal(lstar[0:2, 2:4], -eye)
        assert np.array_equal(lstar[2:4, 4:6], -ones)
        assert np.array_equal(lstar[4:6, 6:8], -eye)
        assert np.array_equal(lstar, lstar.T)
        assert not lstar[0:2, 4:8].any()

    @pytest.mark.parametrize("m", [2, 5, 9])
    def test_rows_sum_to_zero(self, m):
        lstar = build_l_star(m)
        assert not lstar.sum(axis=1).any()
        assert not (lstar @ np.ones(4 * m, dtype=np.int64)).any()

    def test_rejects_small_m(self):
        with pytest.raises(FamilyError):
            build_l_star(1)


class TestTensor:
    def test_cases(self):
        assert tensor([1, -1], [1, 1]).tolist() == [1, 1, -1, -1]
        assert tensor([1], [3, 4, 5]).tolist() == [3, 4, 5]
        assert tensor([1, -1, -1, 1], np.ones(3)).tolist() == [1] * 3 + [-1] * 6 + [1] * 3
        assert np.array_equal(witness_vector(3), tensor([1, -1, -1, 1], np.ones(3)))

    def test_empty(self):
        with pytest.raises(FamilyError):
            tensor([], [1])


class TestAnalyticSpectrum:
    def test_m2_values(self):
        spec = analytic_spectrum(2)
        r5, r2 = math.sqrt(5), math.sqrt(2)
        assert spec.lambda_minus == pytest.approx(3 - r5)
        assert spec.lambda_plus == pytest.approx(3 + r5)
        assert spec.mu_minus == pytest.approx(2 - r2)
        assert spec.mu_plus == pytest.approx(2 + r2)
        expected = sorted([0, 3 - r5, 2 - r2, 2 - r2, 2, 2 + r2, 2 + r2, 3 + r5])
        assert spec.sorted_eigenvalues() == pytest.approx(expected, abs=1e-14)

    @pytest.mark.parametrize("m", range(2, 11))
    def test_residuals_and_count(self, m):
        spec = analytic_spectrum(m)
        lstar = build_l_star(m)
        assert len(spec.pairs()) == 4 * m == 1 + 2 + 2 * (2 * m - 2) + 1
        bound = 1e-10 * max(1.0, np.linalg.norm(lstar))
        for lam, v in spec.pairs():
            assert np.linalg.norm(lstar @ v - lam * v) <= bound

    @pytest.mark.parametrize("m", range(2, 11))
    def test_matches_numeric(self, m):
        numeric = eigendecompose(build_l_star(m)).eigenvalues
        assert numeric == pytest.approx(analytic_spectrum(m).sorted_eigenvalues(), abs=1e-8)

    @pytest.mark.parametrize("m", [2, 3, 10, 40])
    def test_ordering(self, m):
        spec = analytic_spectrum(m)
        assert spec.lambda_minus < 2 < spec.lambda_plus
        assert spec.mu_minus < spec.lambda_minus

    def test_gap_m2(self):
        gap = spectral_gap_budget(2)
        assert gap == pytest.approx(1 - math.sqrt(5) + math.sqrt(2))
        assert 0 < gap < 0.5

    def test_gap_below_one_over_m(self):
        for m in range(2, 65):
            assert 0 < spectral_gap_budget(m) < 1 / m

    def test_ones_complement_basis(self):
        xi = ones_complement_basis(5)
        assert xi.shape == (5, 4)
        assert np.allclose(xi.T @ xi, np.eye(4), atol=1e-14)
        assert np.allclose(xi.sum(axis=0), 0, atol=1e-14)

    def test_labels(self):
        spec = analytic_spectrum(3)
        phi = spec.vector("phi_2")
        assert np.allclose(phi * math.sqrt(12), witness_vector(3))


class TestSubspaces:
    def test_dimensions(self):
        dec = subspace_decomposition(2)
        assert dec.dims == (3, 4)
        assert sum(dec.dims) + 1 == 8

    @pytest.mark.parametrize("m", [2, 4, 7])
    def test_orthogonality(self, m):
        dec = subspace_decomposition(m)
        ones = np.ones(4 * m)
        assert np.abs(dec.w0_basis.T @ dec.w1_basis).max() <= 1e-10
        assert np.abs(ones @ dec.w0_basis).max() <= 1e-10
        assert np.abs(ones @ dec.w1_basis).max() <= 1e-10

    @pytest.mark.parametrize(
        "bases", [[cycle_graph(3)] * 4, [complete_graph(3), path_graph(3), cycle_graph(3), complete_graph(3)]]
    )
    def test_w1_invariant_under_l(self, bases):
        _, lap = build_family(FamilySpec(3, bases))
        w1 = subspace_decomposition(3).w1_basis
        image = lap @ w1
        residual = image - w1 @ (w1.T @ image)
        assert np.abs(residual).max() <= 1e-9


class TestFamilySpec:
    def test_valid(self):
        spec = FamilySpec(4, [cycle_graph(4)] * 4, 2)
        assert spec.n == 18

    @pytest.mark.parametrize(
        "kwargs",
        [
            dict(m=1, base_graphs=[Graph(1)] * 4),
            dict(m=3, base_graphs=[cycle_graph(3)] * 3),
            dict(m=3, base_graphs=[cycle_graph(4)] * 4),
            dict(m=3, base_graphs=[cycle_graph(3)] * 4, cone_count=4),
            dict(m=3, base_graphs=[Graph(3, frozenset({(0, 1)}))] + [cycle_graph(3)] * 3),
        ],
    )
    def test_invalid(self, kwargs):
        with pytest.raises(FamilyError):
            FamilySpec(**kwargs)

    def test_long_paths_fail_hypothesis(self):
        # a(P_30) = 2(1 - cos(pi/30)) ~ 0.011 is below lambda_- - mu_- ~ 0.0166
        with pytest.raises(FamilyError, match="base graph 2"):
            FamilySpec(30, [cycle_graph(30), path_graph(30), cycle_graph(30), cycle_graph(30)])

    def test_short_paths_pass(self):
        FamilySpec(10, [path_graph(10)] * 4)


class TestBuildFamily:
    def test_m2_k2(self):
        g, lap = build_family(FamilySpec(2, [complete_graph(2)] * 4))
        assert (g.n, g.n_edges) == (8, 12)
        assert np.array_equal(laplacian(g), lap)

    def test_m3_lemma1(self):
        _, lap = build_family(FamilySpec(3, [cycle_graph(3)] * 4))
        assert algebraic_connectivity(lap) == pytest.approx(4 - math.sqrt(10), abs=1e-12)

    def test_m3_cones_zero_fiedler_entries(self):
        g, lap = build_family(FamilySpec(3, [cycle_graph(3)] * 4, 2))
        assert g.n == 14
        space = fiedler_space(lap)
        assert space.multiplicity == 1
        v = space.basis[:, 0]
        assert np.abs(v[12:]).max() <= 1e-12
        assert np.abs(v[:12]).min() > 1e-3

    def test_mixed_base_graphs(self):
        bases = [complete_graph(4), cycle_graph(4), complete_bipartite_graph(2, 2), hypercube_graph(2)]
        g, lap = build_family(FamilySpec(4, bases, 1))
        assert is_connected(g)
        assert np.array_equal(laplacian(g), lap)


class TestCone:
    def test_k2_to_k3(self):
        assert cone_augment(complete_graph(2)) == complete_graph(3)
        assert eigendecompose(laplacian(cone_augment(complete_graph(2)))).eigenvalues == pytest.approx(
            [0, 3, 3], abs=1e-12
        )

    def test_eigenvectors_extend_by_zero(self):
        g = path_graph(5)
        spec = eigendecompose(laplacian(g))
        cone = laplacian(cone_augment(g))
        for k in range(1, 5):
            lam, v = spec.pair(k)
            ext = np.append(v, 0.0)
            assert np.linalg.norm(cone @ ext - (lam + 1) * ext) <= 1e-10

    @settings(max_examples=50, deadline=None)
    @given(connected_graphs(max_n=10))
    def test_spectrum_shift(self, g):
        lam = eigendecompose(laplacian(g)).eigenvalues
        expected = np.concatenate([[0.0], lam[1:] + 1, [g.n + 1]])
        got = eigendecompose(laplacian(cone_augment(g))).eigenvalues
        assert got == pytest.approx(np.sort(expected), abs=1e-8)


class TestLemma1:
    def test_m3_cycles(self):
        w1_min, bound = lemma1_rayleigh_bound(FamilySpec(3, [cycle_graph(3)] * 4))
        assert w1_min >= bound - 1e-9
        assert w1_min > 4 - math.sqrt(10)

    def test_m2_k2_bound(self):
        # a(K_2) = 2
        _, bound = lemma1_rayleigh_bound(FamilySpec(2, [complete_graph(2)] * 4))
        assert bound == pytest.approx(2 + 2 - math.sqrt(2))

    @pytest.mark.parametrize("m", [2, 3, 6])
    def test_w0_min_is_lambda_minus(self, m):
        spec = FamilySpec(m, [complete_graph(m)] * 4)
        assert w0_rayleigh_min(spec) == pytest.approx(lambda_pm(m)[0], abs=1e-9)

    def test_requires_cone_free(self):
        with pytest.raises(FamilyError):
            lemma1_rayleigh_bound(FamilySpec(3, [cycle_graph(3)] * 4, 1))

    @pytest.mark.parametrize("m", [3, 4, 5, 8])
    def test_fiedler_is_phi_minus(self, m):
        spec = FamilySpec(m, [cycle_graph(m)] * 4)
        _, lap = build_family(spec)
        space = fiedler_space(lap)
        phi = analytic_spectrum(m).vector("phi_minus")
        assert space.multiplicity == 1
        assert abs(space.eigenvalue - lambda_pm(m)[0]) <= 1e-8
        assert abs(space.basis[:, 0] @ phi) >= 1 - 1e-8


class TestGenerators:
    @pytest.mark.parametrize(
        "kind, m, extra, edges",
        [
            ("path", 4, (), 3),
            ("cycle", 4, (), 4),
            ("complete", 4, (), 6),
            ("complete_bipartite", 5, (2, 3), 6),
            ("hypercube", 8, (), 12),
        ],
    )
    def test_edge_counts(self, kind, m, extra, edges):
        g = base_graph(kind, m, *extra)
        assert (g.n, g.n_edges) == (m, edges)
        assert is_connected(g)

    @pytest.mark.parametrize(
        "kind, m, extra",
        [("nope", 3, ()), ("hypercube", 6, ()), ("complete_bipartite", 5, (2, 2)), ("cycle", 2, ())],
    )
    def test_bad_parameters(self, kind, m, extra):
        with pytest.raises(GraphError):
            base_graph(kind, m, *extra)

    def test_file(self, tmp_path):
        path = tmp_path / "g.txt"
        write_edge_list(cycle_graph(5), path)
        assert base_graph("file", 5, str(path)) == cycle_graph(5)
        with pytest.raises(GraphError):
            base_graph("file", 6, str(path))


class TestConfig:
    def test_text_roundtrip(self, tmp_path):
        path = tmp_path / "b.txt"
        write_edge_list(complete_graph(4), path)
        cfg = FamilyConfig(4, ("cycle", "complete_bipartite 2 2", "hypercube", f"file {path}"), 3)
        again = FamilyConfig.from_text(cfg.to_text())
        assert again == cfg
        spec = again.to_spec()
        assert spec.base_graphs[3] == complete_graph(4)
        assert spec.n == 19

    def test_json_roundtrip(self):
        import json

        cfg = FamilyConfig(5, ("cycle",) * 4, 1)
        assert FamilyConfig.from_dict(json.loads(cfg.to_json())) == cfg

    def test_shared_base(self):
        cfg = FamilyConfig.from_text("m 3\nbase complete\n")
        assert cfg.bases == ("complete",) * 4
        assert FamilyConfig.from_dict({"m": 3, "bases": "complete"}) == cfg

    def test_missing_m(self):
        with pytest.raises(FamilyError):
            FamilyConfig.from_text("base cycle\n")
