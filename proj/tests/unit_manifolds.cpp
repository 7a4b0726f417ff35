#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "augmental/generators.hpp"
#include "augmental/manifolds.hpp"

using namespace augmental;

namespace {
SimplicialComplex cx(std::vector<Face> facets) { return SimplicialComplex::from_facets(facets); }

SimplicialComplex pinched_torus() {
    // boundary of the cone over the cylinder
    return boundary(cone(cylinder6()), Coefficients::Z());
}
}  // namespace

TEST_CASE("pseudomanifold flags") {
    CHECK(is_pseudomanifold(sphere_boundary(3)));
    CHECK_FALSE(is_pseudomanifold(cx({{"a", "b", "c"}, {"c", "d", "e"}})));  // vertex-glued
    CHECK(is_pseudomanifold(one_point()));
    CHECK(is_pseudomanifold(two_points()));
    CHECK_FALSE(is_pseudomanifold(cx({{"a"}, {"b"}, {"c"}})));
    CHECK(is_pseudomanifold(cx({{}})));
    CHECK(is_pseudomanifold(moebius5()));
}

TEST_CASE("the pinched torus separates pseudo from quasi") {
    SimplicialComplex pt = pinched_torus();
    CHECK(is_pseudomanifold(pt));
    CHECK_FALSE(is_quasi_manifold(pt));
}

TEST_CASE("quasi-manifold flags") {
    CHECK(is_quasi_manifold(two_points()));
    CHECK(is_quasi_manifold(one_point()));
    CHECK(is_quasi_manifold(cylinder6()));
    CHECK(is_quasi_manifold(sphere_boundary(3)));
    CHECK_FALSE(is_quasi_manifold(cx({{"a", "b"}, {"c", "d"}})));  // disconnected
}

TEST_CASE("homology manifold flags") {
    CHECK(is_homology_manifold(moebius5(), Coefficients::Z()));
    CHECK(is_homology_manifold(sphere_boundary(3), Coefficients::Z()));
    CHECK(is_homology_manifold(rp2_6(), Coefficients::Z()));
    CHECK(is_homology_manifold(two_points(), Coefficients::Z()));
    // the theta graph: join of the 0-sphere with three points
    SimplicialComplex theta = join(two_points(), cx({{"x"}, {"y"}, {"z"}}));
    CHECK_FALSE(is_homology_manifold(theta, Coefficients::Z()));
    CHECK_FALSE(is_homology_manifold(cx({{"a"}, {"b"}, {"c"}}), Coefficients::Z()));
}

TEST_CASE("flag monotonicity on the corpus") {
    auto corpus = manifold_corpus(7, 80);
    for (const SimplicialComplex& c : corpus) {
        bool hm = is_homology_manifold(c, Coefficients::Z());
        bool quasi = is_quasi_manifold(c);
        bool pseudo = is_pseudomanifold(c);
        if (hm) CHECK(quasi);
        if (quasi) CHECK(pseudo);
    }
}

TEST_CASE("boundary landmarks") {
    CHECK(boundary(rp2_6(), Coefficients::Z()).is_empty_face_only());
    CHECK(boundary(one_point(), Coefficients::Z()).is_empty_face_only());
    CHECK(boundary(sphere_boundary(3), Coefficients::Z()).is_void());
    CHECK(boundary(two_points(), Coefficients::Z()).is_void());

    // Moebius band: the boundary is its pentagon circle
    SimplicialComplex bd = boundary(moebius5(), Coefficients::Z());
    CHECK(bd == cx({{"1", "3"}, {"3", "5"}, {"2", "5"}, {"2", "4"}, {"1", "4"}}));

    // cone of the Moebius band: the boundary has the projective plane's homology
    SimplicialComplex mc_bd = boundary(cone(moebius5()), Coefficients::Z());
    HomologyTable h = homology(mc_bd, Coefficients::Z());
    CHECK(h.groups.size() == 1);
    CHECK(h.at(1) == canonicalize(0, {Integer(2)}));

    CHECK_THROWS(boundary(pinched_torus(), Coefficients::Z()));
}

TEST_CASE("pseudo boundary") {
    CHECK(pseudo_boundary(one_point()).is_empty_face_only());
    CHECK(pseudo_boundary(two_points()).is_void());
    CHECK(pseudo_boundary(sphere_boundary(2)).is_void());
    CHECK(pseudo_boundary(moebius5()) ==
          cx({{"1", "3"}, {"3", "5"}, {"2", "5"}, {"2", "4"}, {"1", "4"}}));
}

TEST_CASE("boundary components") {
    auto comps = boundary_components(cylinder6(), Coefficients::Z());
    REQUIRE(comps.size() == 2);
    for (const auto& c : comps) {
        HomologyTable h = homology(c, Coefficients::Z());
        CHECK(h.at(1) == free_group(1));  // each a circle
    }
    // a disk: one circle
    CHECK(boundary_components(cone(cycle(4)), Coefficients::Z()).size() == 1);
    CHECK(boundary_components(moebius5(), Coefficients::Z()).size() == 1);
    CHECK(boundary_components(sphere_boundary(2), Coefficients::Z()).empty());
}

TEST_CASE("orientability") {
    CHECK_FALSE(orientable(moebius5(), Coefficients::Z()));
    CHECK(orientable(moebius5(), Coefficients::Zp(2)));
    CHECK(orientable(sphere_boundary(3), Coefficients::Z()));
    CHECK_FALSE(orientable(rp2_6(), Coefficients::Zp(3)));
    CHECK(orientable(rp2_6(), Coefficients::Zp(2)));
    CHECK_FALSE(orientable(rp2_6(), Coefficients::Z()));
}

TEST_CASE("homologically instable faces") {
    CHECK(hip_set(sphere_boundary(3), Coefficients::Z()).empty());
    // the projective plane has H_1 = Z_2, so even the empty face is stable
    CHECK(hip_set(rp2_6(), Coefficients::Z()).empty());
    // in a cone over it, exactly the apex-free faces are instable
    SimplicialComplex c = cone(rp2_6());
    REQUIRE(c.contains_face({"cp0"}));
    std::vector<Face> hip = hip_set(c, Coefficients::Z());
    std::size_t apex_free = 0;
    for (Mask f : c.face_masks()) {
        Face face = c.face_of(f);
        if (!std::binary_search(face.begin(), face.end(), std::string("cp0"))) ++apex_free;
    }
    CHECK(hip.size() == apex_free);
    for (const Face& f : hip)
        CHECK_FALSE(std::binary_search(f.begin(), f.end(), std::string("cp0")));
}

TEST_CASE("boundary formula for join and product landmarks") {
    // Moebius * point: boundary is the projective plane
    auto r = verify_boundary_formula(moebius5(), one_point(), ConstructOp::join_op,
                                     Coefficients::Z());
    REQUIRE(r.has_value());
    CHECK(*r);
    // cylinder * point: boundary is the pinched torus
    r = verify_boundary_formula(cylinder6(), one_point(), ConstructOp::join_op,
                                Coefficients::Z());
    REQUIRE(r.has_value());
    CHECK(*r);
    // disk x disk: the boundary is the 3-sphere
    SimplicialComplex disk = cone(cycle(3));
    r = verify_boundary_formula(disk, disk, ConstructOp::product_op, Coefficients::Z());
    REQUIRE(r.has_value());
    CHECK(*r);
    OrderedComplex od = OrderedComplex::by_label_order(disk);
    SimplicialComplex bd_dd = boundary(product(od, od).complex, Coefficients::Z());
    HomologyTable h3 = homology(bd_dd, Coefficients::Z());
    CHECK(h3.groups.size() == 1);
    CHECK(h3.at(3) == free_group(1));

    // special case: point x X
    r = verify_boundary_formula(one_point(), moebius5(), ConstructOp::product_op,
                                Coefficients::Z());
    REQUIRE(r.has_value());
    CHECK(*r);
    // excluded product factors are skipped
    CHECK_FALSE(verify_boundary_formula(two_points(), moebius5(), ConstructOp::product_op,
                                        Coefficients::Z())
                    .has_value());
}

TEST_CASE("boundary formula over a small factor matrix") {
    std::vector<SimplicialComplex> factors = {one_point(),       two_points(),
                                              sphere_boundary(2), simplex(2),
                                              moebius5(),        cycle(4)};
    for (const auto& a : factors)
        for (const auto& b : factors) {
            for (Coefficients g : {Coefficients::Z(), Coefficients::Zp(2)}) {
                auto rj = verify_boundary_formula(a, b, ConstructOp::join_op, g);
                if (rj) CHECK(*rj);
                auto rp = verify_boundary_formula(a, b, ConstructOp::product_op, g);
                if (rp) CHECK(*rp);
            }
        }
}

TEST_CASE("manifoldness and orientability transfer across joins and products") {
    std::vector<SimplicialComplex> factors = {one_point(), two_points(),    cycle(4),
                                              moebius5(),  simplex(2),      rp2_6(),
                                              cx({{"a"}, {"b"}, {"c"}}),    cx({{"a", "b"}, {"b", "c"}})};
    Coefficients Z = Coefficients::Z();
    // the join direction needs joinable factors: the sphere-or-disk local
    // pattern must hold at the empty face too, i.e. for absolute homology
    auto joinable_hm = [&](const SimplicialComplex& c) {
        if (!is_homology_manifold(c, Z)) return false;
        HomologyTable h = homology(c, Z);
        int n = c.dim().finite();
        for (const auto& [q, g] : h.groups)
            if (q != n || !(g == free_group(1))) return false;
        return true;
    };
    for (const auto& a : factors)
        for (const auto& b : factors) {
            SimplicialComplex j = join(a, b);
            CHECK(is_pseudomanifold(j) == (is_pseudomanifold(a) && is_pseudomanifold(b)));
            CHECK(is_quasi_manifold(j) == (is_quasi_manifold(a) && is_quasi_manifold(b)));
            CHECK(is_homology_manifold(j, Z) == (joinable_hm(a) && joinable_hm(b)));
            if (is_quasi_manifold(a) && is_quasi_manifold(b))
                CHECK(orientable(j, Z) == (orientable(a, Z) && orientable(b, Z)));
            // products, under the theorem's exclusions
            if (detail::is_two_points(a) || detail::is_two_points(b)) continue;
            OrderedComplex p = product(OrderedComplex::by_label_order(a),
                                       OrderedComplex::by_label_order(b));
            CHECK(is_homology_manifold(p.complex, Z) ==
                  (is_homology_manifold(a, Z) && is_homology_manifold(b, Z)));
            if (is_quasi_manifold(a) && is_quasi_manifold(b) &&
                is_quasi_manifold(p.complex))
                CHECK(orientable(p.complex, Z) == (orientable(a, Z) && orientable(b, Z)));
        }
}

TEST_CASE("strong connectivity matches top-degree injectivity") {
    SimplicialComplex s = sphere_boundary(3);
    auto r = verify_strong_connect_injection(s, SimplicialComplex::void_complex(),
                                             contrastar(s, {"v1"}), Coefficients::Z());
    REQUIRE(r.has_value());
    CHECK(*r);

    // annulus: a boundary circle inside a full-dimensional contrastar
    SimplicialComplex ann = cylinder6();
    SimplicialComplex circle1 = cx({{"1", "2"}, {"2", "3"}, {"1", "3"}});
    SimplicialComplex gamma = contrastar(ann, {"4"});
    REQUIRE(gamma.has_subcomplex(circle1));
    r = verify_strong_connect_injection(ann, circle1, gamma, Coefficients::Z());
    REQUIRE(r.has_value());
    CHECK(*r);
    // a boundary circle of positive codimension is outside the hypothesis
    SimplicialComplex both = complex_union(circle1, cx({{"4", "5"}, {"5", "6"}, {"4", "6"}}));
    CHECK_FALSE(
        verify_strong_connect_injection(ann, circle1, both, Coefficients::Z()).has_value());

    // removing the full boundary of the Moebius band keeps it strongly connected
    SimplicialComplex mb = moebius5();
    SimplicialComplex bd = pseudo_boundary(mb);
    CHECK(poset_strongly_connected(mb, bd));
    r = verify_strong_connect_injection(mb, bd, contrastar(mb, {"1", "2", "3"}),
                                        Coefficients::Z());
    if (r) CHECK(*r);
}

TEST_CASE("theorem sweep over random pseudomanifold slices") {
    std::mt19937_64 rng(61);
    auto corpus = manifold_corpus(19, 40);
    for (const SimplicialComplex& c : corpus) {
        if (c.dim().finite() < 1 || c.face_count() > 300) continue;
        // slice by random contrastars
        Face f = c.face_of(c.face_masks()[rng() % c.face_count()]);
        if (f.empty()) continue;
        SimplicialComplex gamma = contrastar(c, f);
        if (gamma.is_void() || gamma.dim() != c.dim()) continue;
        auto r = verify_strong_connect_injection(c, SimplicialComplex::void_complex(), gamma,
                                                 Coefficients::Z());
        if (r) CHECK(*r);
    }
}

TEST_CASE("link boundaries restrict the boundary complex") {
    // Bd(Lk_S s) = Lk_{Bd S} s for s in the boundary of a quasi-manifold
    for (const SimplicialComplex& c : {moebius5(), cylinder6(), cone(cycle(4))}) {
        SimplicialComplex bd = boundary(c, Coefficients::Z());
        if (bd.is_void() || bd.is_empty_face_only()) continue;
        for (const Face& f : bd.all_faces()) {
            if (f.empty()) continue;
            SimplicialComplex lk = link(c, f);
            SimplicialComplex lhs = boundary(lk, Coefficients::Z());
            SimplicialComplex rhs = link(bd, f);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("classification report") {
    ManifoldReport r = classify(moebius5(), Coefficients::Z());
    CHECK(r.pseudo);
    CHECK(r.quasi);
    CHECK(r.homology_manifold);
    CHECK(r.has_boundary);
    CHECK(r.boundary_component_count == 1);
    REQUIRE(r.orientable_flag.has_value());
    CHECK_FALSE(*r.orientable_flag);
    CHECK(r.ordinary);

    ManifoldReport rv = classify(SimplicialComplex::void_complex(), Coefficients::Z());
    CHECK(rv.pseudo);
    CHECK(rv.dimension == ExtDim::minus_infinity());
}
