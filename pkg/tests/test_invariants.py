import pytest

from loquad.complexes import HypothesisError, lovasz_complex
from loquad.embeddings import lovasz_from_quadrangulation
from loquad.generators import klein_grid, torus_grid
from loquad.graphs import Graph, chromatic_number
from loquad.invariants import (build_labeling, cyclic_quad_count, gray_count,
                               invariant_report, is_gray, labeled_quads,
                               symmetric_triangulation, verify_theorems)
from loquad.surfaces import SurfaceClass


def complete_graph(n):
    return Graph.from_edges(n, [(i, j) for i in range(n)
                                for j in range(i + 1, n)])


class TestLabeling:
    def test_k4_labeling_golden(self):
        L = lovasz_complex(complete_graph(4))
        lab = build_labeling(L)
        for v in range(4):
            single = (v,)
            other = tuple(u for u in range(4) if u != v)
            assert lab[single] == v + 1
            assert lab[other] == -(v + 1)

    def test_labels_paired_by_involution(self, t33):
        L = lovasz_from_quadrangulation(t33)
        lab = build_labeling(L)
        for a, value in lab.items():
            i = L.vertex_of(a)
            assert lab[L.labels[L.nu[i]]] == -value

    def test_no_singletons_is_an_error(self):
        c4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
        with pytest.raises(HypothesisError):
            build_labeling(lovasz_complex(c4))


class TestSymmetricTriangulation:
    def test_sizes(self, k4p, t33):
        Lk = lovasz_from_quadrangulation(k4p)
        assert len(symmetric_triangulation(Lk)) == 12
        Lt = lovasz_from_quadrangulation(t33)
        assert len(symmetric_triangulation(Lt)) == 36

    def test_triangulation_is_involution_invariant(self, k4p, klein_odd):
        for e in (k4p, klein_odd):
            L = lovasz_from_quadrangulation(e)
            lab = build_labeling(L)
            for rule in ("min", "max"):
                tris = {frozenset(lab[v] for v in t)
                        for t in symmetric_triangulation(L, lab, rule)}
                for t in tris:
                    mirror = frozenset(-x for x in t)
                    assert mirror in tris
                    assert mirror != t

    def test_unknown_rule_rejected(self, k4p):
        L = lovasz_from_quadrangulation(k4p)
        with pytest.raises(ValueError):
            symmetric_triangulation(L, rule="diagonal")


class TestGrayness:
    def test_is_gray_examples(self):
        lab = {"a": 1, "b": -2, "c": 3, "d": -4}
        assert is_gray(("a", "b", "c"), lab)          # signs +,-,+
        assert not is_gray(("a", "b", "d"), lab)      # signs +,-,-
        assert is_gray(("b", "c", "d"), lab)          # signs -,+,-
        assert not is_gray(("a", "c", "d"), lab)      # middle agrees with lo

    def test_gray_count_k4(self, k4p):
        L = lovasz_from_quadrangulation(k4p)
        lab = build_labeling(L)
        assert gray_count(symmetric_triangulation(L, lab), lab) == 3

    def test_rule_choice_preserves_parity(self, fixtures):
        for fx in fixtures:
            e = fx.embedding
            if e.graph.__class__ is not Graph:
                continue
            try:
                L = lovasz_from_quadrangulation(e)
            except HypothesisError:
                continue
            lab = build_labeling(L)
            g_min = gray_count(symmetric_triangulation(L, lab, "min"), lab)
            g_max = gray_count(symmetric_triangulation(L, lab, "max"), lab)
            assert g_min % 2 == g_max % 2

    def test_gray_parity_equals_cyclic_parity(self, k4p, t33, klein_odd,
                                              klein_even):
        for e in (k4p, t33, klein_odd, klein_even):
            L = lovasz_from_quadrangulation(e)
            lab = build_labeling(L)
            g = gray_count(symmetric_triangulation(L, lab), lab)
            r = cyclic_quad_count(labeled_quads(L), lab)
            assert g % 2 == r % 2

    def test_relabeling_invariance_of_gray_parity(self, k4p):
        base = invariant_report(k4p).gray_count % 2
        perm = [2, 0, 3, 1]
        g = k4p.graph
        edges = [(perm[u], perm[v]) for u, v in g.edges]
        rotations = [()] * g.n
        for v in range(g.n):
            rotations[perm[v]] = tuple(perm[u] for u in k4p.rotations[v])
        neg = [(perm[u], perm[v]) for (u, v), s in k4p.signs.items()
               if s == -1]
        from loquad.embeddings import embedded
        relabeled = embedded(g.n, edges, rotations, neg)
        assert invariant_report(relabeled).gray_count % 2 == base


class TestInvariantReport:
    def test_k4_projective(self, k4p):
        r = invariant_report(k4p)
        assert r.gray_count == 3
        assert r.cyclic_count == 1
        assert (r.cohom_ind, r.ind, r.coind) == (2, 2, 2)
        assert r.chromatic_lower_bound == 4
        assert r.lo_class == SurfaceClass(True, 0, 2)
        assert r.odd is True
        assert not r.non_tidy
        assert r.but_manifold
        assert chromatic_number(k4p.graph)[0] == 4

    def test_torus_grid(self, t33):
        r = invariant_report(t33)
        assert r.lo_class == SurfaceClass(True, 1, 0)
        assert r.odd is None
        assert (r.cohom_ind, r.ind, r.coind) == (1, 1, 1)
        assert r.chromatic_lower_bound == 3
        assert r.gray_count % 2 == 0

    def test_klein_instances(self, klein_odd, klein_even):
        r = invariant_report(klein_odd)
        assert r.odd is True
        assert r.gray_count % 2 == 1
        assert (r.cohom_ind, r.ind, r.coind) == (2, 2, 1)
        assert r.non_tidy and r.but_manifold
        assert r.lo_class == SurfaceClass(False, 2, 0)
        assert r.chromatic_lower_bound == 4

        r = invariant_report(klein_even)
        assert r.odd is False
        assert r.gray_count % 2 == 0
        assert (r.cohom_ind, r.ind, r.coind) == (1, 1, 1)
        assert not r.non_tidy
        assert r.lo_class == SurfaceClass(True, 1, 0)

    def test_bipartite_input_rejected(self):
        with pytest.raises(HypothesisError):
            invariant_report(torus_grid(4, 4))


class TestVerifyTheorems:
    def test_all_pass_on_good_fixtures(self, k4p, t33, klein_odd):
        for e in (k4p, t33, klein_odd):
            verdicts = verify_theorems(e)
            assert all(v.status != "fail" for v in verdicts), verdicts
            names = {v.name for v in verdicts}
            assert "double_cover_surface" in names
            assert "gray_parity_agreement" in names

    def test_non_facial_instance_reports_witness(self, t34):
        verdicts = {v.name: v for v in verify_theorems(t34)}
        v = verdicts["non_facial_rejection"]
        assert v.status == "pass"
        assert v.detail

    def test_oracle_mode(self, k4p):
        verdicts = {v.name: v for v in verify_theorems(k4p, run_oracle=True)}
        assert verdicts["gray_parity_agreement"].status == "pass"
