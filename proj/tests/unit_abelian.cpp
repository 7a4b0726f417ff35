#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "augmental/abelian.hpp"

using namespace augmental;

namespace {
FgAbelianGroup grp(int rank, std::vector<long long> tors) {
    std::vector<Integer> t;
    for (long long x : tors) t.push_back(Integer(x));
    return canonicalize(rank, std::move(t));
}
}  // namespace

TEST_CASE("canonicalize merges coprime factors and splits invariant factors") {
    CHECK(grp(0, {2, 3}) == grp(0, {6}));
    CHECK(grp(1, {}) == free_group(1));
    FgAbelianGroup g = grp(0, {4, 6});
    REQUIRE(g.torsion.size() == 2);
    CHECK(g.torsion[0] == Integer(2));
    CHECK(g.torsion[1] == Integer(12));
    // idempotent and order-independent
    CHECK(grp(0, {6, 4}) == g);
    CHECK(canonicalize(g.rank, g.torsion) == g);
}

TEST_CASE("direct sums") {
    CHECK(direct_sum(free_group(1), zero_group()) == free_group(1));
    CHECK(direct_sum(grp(0, {2}), grp(0, {2})) == grp(0, {2, 2}));
    CHECK(direct_sum(grp(0, {2}), grp(0, {4})) == grp(0, {2, 4}));
}

TEST_CASE("tensor products") {
    CHECK(tensor(free_group(1), free_group(1)) == free_group(1));
    CHECK(tensor(grp(0, {2}), grp(0, {3})) == zero_group());
    CHECK(tensor(grp(1, {2}), grp(0, {4})) == grp(0, {2, 4}));
}

TEST_CASE("torsion products") {
    CHECK(tor1(free_group(1), grp(0, {5})) == zero_group());
    CHECK(tor1(grp(0, {4}), grp(0, {6})) == grp(0, {2}));
    CHECK(tor1(grp(1, {2}), grp(0, {2})) == grp(0, {2}));
}

TEST_CASE("field base change dimensions") {
    BaseChange z_over_z2 = base_change(free_group(1), Coefficients::Zp(2));
    CHECK(z_over_z2.tensor_dim == 1);
    CHECK(z_over_z2.tor_dim == 0);
    BaseChange z2_over_z3 = base_change(grp(0, {2}), Coefficients::Zp(3));
    CHECK(z2_over_z3.tensor_dim == 0);
    CHECK(z2_over_z3.tor_dim == 0);
    BaseChange z2_over_z2 = base_change(grp(0, {2}), Coefficients::Zp(2));
    CHECK(z2_over_z2.tensor_dim == 1);
    CHECK(z2_over_z2.tor_dim == 1);
    CHECK(base_change(grp(2, {9}), Coefficients::Q()).tensor_dim == 2);
}

TEST_CASE("tensor and tor are commutative and distribute over sums") {
    std::mt19937_64 rng(3);
    auto rand_group = [&]() {
        std::vector<long long> t;
        int k = (int)(rng() % 3);
        for (int i = 0; i < k; ++i) t.push_back(2 + (long long)(rng() % 11));
        return grp((int)(rng() % 3), t);
    };
    for (int i = 0; i < 300; ++i) {
        FgAbelianGroup a = rand_group(), b = rand_group(), c = rand_group();
        CHECK(tensor(a, b) == tensor(b, a));
        CHECK(tor1(a, b) == tor1(b, a));
        CHECK(tensor(a, direct_sum(b, c)) == direct_sum(tensor(a, b), tensor(a, c)));
        CHECK(tor1(a, direct_sum(b, c)) == direct_sum(tor1(a, b), tor1(a, c)));
        CHECK(tensor(a, free_group(1)) == a);
        CHECK(tor1(a, free_group(1)) == zero_group());
    }
}

TEST_CASE("rendering grammar") {
    CHECK(render_group(zero_group()) == "0");
    CHECK(render_group(free_group(1)) == "Z");
    CHECK(render_group(grp(2, {2, 12})) == "Z^2 + Z_2 + Z_12");
    CHECK(render_group(grp(0, {2, 2})) == "Z_2 + Z_2");
    CHECK(render_group(grp(1, {}), Coefficients::Zp(2)) == "Z_2");
    CHECK(render_group(grp(3, {}), Coefficients::Q()) == "Q^3");
}

TEST_CASE("coefficient spec grammar") {
    CHECK(Coefficients::parse("Z").is_integers());
    CHECK(Coefficients::parse("Q").kind == Coefficients::Kind::rationals);
    CHECK(Coefficients::parse("Zp:7").p == 7);
    CHECK_THROWS(Coefficients::parse("Zp:6"));
    CHECK_THROWS(Coefficients::parse("Zp:x"));
    CHECK_THROWS(Coefficients::parse("GF2"));
}
