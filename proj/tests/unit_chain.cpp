#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "augmental/chain.hpp"
#include "augmental/generators.hpp"

using namespace augmental;

namespace {

SimplicialComplex cx(std::vector<Face> facets) { return SimplicialComplex::from_facets(facets); }

FgAbelianGroup grp(int rank, std::vector<long long> tors) {
    std::vector<Integer> t;
    for (long long x : tors) t.push_back(Integer(x));
    return canonicalize(rank, std::move(t));
}

// Independent oracle: facewise boundary matrices over Z_p reduced with a
// self-contained elimination, no shared code with the engine's SNF path.
int oracle_rank_mod_p(std::vector<std::vector<long long>> a, long long p) {
    int rows = (int)a.size();
    if (rows == 0) return 0;
    int cols = (int)a[0].size();
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][c] % p != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        for (int r = 0; r < rows; ++r) {
            if (r == rank) continue;
            while (a[r][c] % p != 0) {
                for (int cc = 0; cc < cols; ++cc)
                    a[r][cc] = ((a[r][cc] - a[rank][cc]) % p + p) % p;
            }
        }
        ++rank;
    }
    return rank;
}

// Betti numbers over Z_p straight from the face set, independently of the
// chain module: dim ker - rank of the incoming boundary.
std::map<int, int> oracle_betti_mod_p(const SimplicialComplex& c, long long p) {
    std::map<int, int> betti;
    if (c.is_void()) return betti;
    int n = c.dim().finite();
    std::vector<std::vector<Mask>> basis(n + 2);
    for (Mask f : c.face_masks()) basis[face_card(f)].push_back(f);
    std::vector<int> rank_d(n + 3, 0);  // rank of the boundary out of degree q at q+1
    for (int q = 0; q <= n; ++q) {
        std::map<Mask, int> row;
        for (int i = 0; i < (int)basis[q].size(); ++i) row[basis[q][i]] = i;
        std::vector<std::vector<long long>> m(basis[q].size(),
                                              std::vector<long long>(basis[q + 1].size(), 0));
        for (int col = 0; col < (int)basis[q + 1].size(); ++col) {
            Mask f = basis[q + 1][col];
            int j = 0;
            for (int v = 0; v < 64; ++v)
                if ((f >> v) & 1) {
                    m[row[f & ~(Mask(1) << v)]][col] = (j % 2 == 0) ? 1 : p - 1;
                    ++j;
                }
        }
        rank_d[q + 1] = oracle_rank_mod_p(m, p);
    }
    for (int q = -1; q <= n; ++q) {
        int dim = (int)basis[q + 1].size();
        int b = dim - rank_d[q + 1] - (q + 2 <= n + 1 ? rank_d[q + 2] : 0);
        if (b != 0) betti[q] = b;
    }
    return betti;
}

std::map<int, int> field_dims(const HomologyTable& t) {
    std::map<int, int> d;
    for (const auto& [q, g] : t.groups) d[q] = g.rank;
    return d;
}

}  // namespace

TEST_CASE("smith normal form basics") {
    Matrix m(2, 2);
    m.at(0, 0) = Integer(2);
    m.at(1, 1) = Integer(3);
    SmithResult s = smith_normal_form(m);
    REQUIRE(s.rank == 2);
    CHECK(s.diagonal[0] == Integer(1));
    CHECK(s.diagonal[1] == Integer(6));

    Matrix z(3, 4);
    CHECK(smith_normal_form(z).rank == 0);

    Matrix id(3, 3);
    for (int i = 0; i < 3; ++i) id.at(i, i) = Integer(1);
    SmithResult si = smith_normal_form(id);
    REQUIRE(si.rank == 3);
    for (const Integer& d : si.diagonal) CHECK(d == Integer(1));
}

TEST_CASE("smith normal form divisibility chain on random matrices") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        int r = 1 + (int)(rng() % 5), c = 1 + (int)(rng() % 5);
        Matrix m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m.at(i, j) = Integer((long long)(rng() % 19) - 9);
        SmithResult s = smith_normal_form(m);
        for (int i = 1; i < s.rank; ++i)
            CHECK((s.diagonal[i] % s.diagonal[i - 1]).is_zero());
        // rank agrees with elimination over the rationals
        CHECK(s.rank == rank_over_q(m));
        // kernel columns really annihilate the matrix
        Matrix k = kernel_basis_int(m);
        for (int col = 0; col < k.cols; ++col)
            for (int row = 0; row < r; ++row) {
                Integer acc(0);
                for (int j = 0; j < c; ++j) acc += m.at(row, j) * k.at(j, col);
                CHECK(acc.is_zero());
            }
        CHECK(k.cols == c - s.rank);
    }
}

TEST_CASE("chain bottom cases") {
    ChainComplex cc = build_chain(ComplexPair::absolute(cx({{}})));
    CHECK(cc.top == -1);
    CHECK(cc.dim_of(-1) == 1);

    ChainComplex void_cc = build_chain(
        ComplexPair(SimplicialComplex::void_complex(), SimplicialComplex::void_complex()));
    CHECK(void_cc.top == -2);

    ChainComplex pt = build_chain(ComplexPair::absolute(one_point()));
    REQUIRE(pt.dim_of(0) == 1);
    REQUIRE(pt.boundary_of(0).rows == 1);
    CHECK(pt.boundary_of(0).at(0, 0) == Integer(1));  // augmentation
}

TEST_CASE("homology bottom cases") {
    HomologyTable h_empty = homology(cx({{}}), Coefficients::Z());
    CHECK(h_empty.groups.size() == 1);
    CHECK(h_empty.at(-1) == free_group(1));

    CHECK(homology(SimplicialComplex::void_complex(), Coefficients::Z()).is_zero());
    CHECK(homology(one_point(), Coefficients::Z()).is_zero());
}

TEST_CASE("landmark homology values") {
    HomologyTable sphere = homology(sphere_boundary(3), Coefficients::Z());
    CHECK(sphere.groups.size() == 1);
    CHECK(sphere.at(2) == free_group(1));

    HomologyTable rp2 = homology(rp2_6(), Coefficients::Z());
    CHECK(rp2.groups.size() == 1);
    CHECK(rp2.at(1) == grp(0, {2}));

    // cross-check the projective plane with the independent field oracle
    auto z2 = oracle_betti_mod_p(rp2_6(), 2);
    CHECK(z2 == std::map<int, int>{{1, 1}, {2, 1}});
    auto z3 = oracle_betti_mod_p(rp2_6(), 3);
    CHECK(z3.empty());
    CHECK(field_dims(homology(rp2_6(), Coefficients::Zp(2))) == z2);
    CHECK(field_dims(homology(rp2_6(), Coefficients::Zp(3))) == z3);

    // Moebius band and cylinder both retract to their core circles
    HomologyTable mob = homology(moebius5(), Coefficients::Z());
    CHECK(mob.groups.size() == 1);
    CHECK(mob.at(1) == free_group(1));
    HomologyTable cyl = homology(cylinder6(), Coefficients::Z());
    CHECK(cyl.groups.size() == 1);
    CHECK(cyl.at(1) == free_group(1));
}

TEST_CASE("relative homology and the classical/reduced split") {
    // H_0(S, {empty}) = H_0(S, Void) + Z for present S != {empty}
    std::mt19937_64 rng(37);
    for (int i = 0; i < 40; ++i) {
        SimplicialComplex r = random_complex(rng, {6, 6, 4, false});
        HomologyTable reduced = homology(r, Coefficients::Z());
        HomologyTable classical =
            homology(ComplexPair(r, SimplicialComplex::empty_face_complex()),
                     Coefficients::Z());
        CHECK(classical.at(0) == direct_sum(reduced.at(0), free_group(1)));
        for (int q = 1; q <= (reduced.is_zero() ? 0 : reduced.max_degree()); ++q)
            CHECK(classical.at(q) == reduced.at(q));
        CHECK(classical.at(-1).is_zero());
    }
}

TEST_CASE("field homology equals the oracle on random complexes") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 60; ++i) {
        SimplicialComplex r = random_complex(rng, {6, 7, 5, false});
        for (long long p : {2LL, 3LL, 5LL}) {
            auto expected = oracle_betti_mod_p(r, p);
            CHECK(field_dims(homology(r, Coefficients::Zp(p))) == expected);
        }
    }
}

TEST_CASE("euler characteristic equals the alternating rank sum") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 50; ++i) {
        SimplicialComplex r = random_complex(rng, {6, 7, 5, true});
        HomologyTable h = homology(r, Coefficients::Z());
        long long chi = 0;
        for (const auto& [q, g] : h.groups) chi += (q % 2 == 0 ? 1 : -1) * (long long)g.rank;
        CHECK(chi == euler_reduced(r));
    }
}

TEST_CASE("cohomology satisfies the dual universal coefficient relation") {
    std::mt19937_64 rng(47);
    CHECK(cohomology(ComplexPair::absolute(cx({{}})), Coefficients::Z()).at(-1) ==
          free_group(1));
    CHECK(cohomology(ComplexPair::absolute(sphere_boundary(3)), Coefficients::Z()).at(2) ==
          free_group(1));
    HomologyTable rp2_coh = cohomology(ComplexPair::absolute(rp2_6()), Coefficients::Z());
    CHECK(rp2_coh.groups.size() == 1);
    CHECK(rp2_coh.at(2) == grp(0, {2}));
    for (int i = 0; i < 25; ++i) {
        SimplicialComplex r = random_complex(rng, {6, 6, 4, false});
        HomologyTable h = homology(r, Coefficients::Z());
        HomologyTable ch = cohomology(ComplexPair::absolute(r), Coefficients::Z());
        int hi = 1 + std::max(h.is_zero() ? 0 : h.max_degree(),
                              ch.is_zero() ? 0 : ch.max_degree());
        for (int q = -1; q <= hi; ++q) {
            FgAbelianGroup expected = free_group(h.at(q).rank);
            for (const Integer& t : h.at(q - 1).torsion) expected.torsion.push_back(t);
            expected = canonicalize(expected.rank, expected.torsion);
            CHECK(ch.at(q) == expected);
        }
    }
}

TEST_CASE("local homology computes both routes and they agree") {
    HomologyTable lk = local_homology(sphere_boundary(3), {"v1"}, Coefficients::Z());
    CHECK(lk.groups.size() == 1);
    CHECK(lk.at(2) == free_group(1));

    HomologyTable edge_top = local_homology(cx({{"a", "b"}}), {"a", "b"}, Coefficients::Z());
    CHECK(edge_top.groups.size() == 1);
    CHECK(edge_top.at(1) == free_group(1));

    // cost of the empty face is void, so local homology there is absolute
    SimplicialComplex r = rp2_6();
    CHECK(local_homology(r, {}, Coefficients::Z()) == homology(r, Coefficients::Z()));
    CHECK_THROWS(local_homology(r, {"1", "2", "3", "4"}, Coefficients::Z()));
}

TEST_CASE("top degree induced maps detect dying cycle classes") {
    // a path of two edges relative to endpoints vs relative to all vertices
    SimplicialComplex path = cx({{"a", "b"}, {"b", "c"}});
    SimplicialComplex ends = cx({{"a"}, {"c"}});
    SimplicialComplex allv = cx({{"a"}, {"b"}, {"c"}});
    CHECK(top_degree_map_injective(path, ends, allv, Coefficients::Z()));

    // two disjoint circles: striking one of them kills its fundamental class
    SimplicialComplex circles =
        cx({{"a", "b"}, {"b", "c"}, {"a", "c"}, {"d", "e"}, {"e", "f"}, {"d", "f"}});
    SimplicialComplex second = cx({{"d", "e"}, {"e", "f"}, {"d", "f"}});
    CHECK_FALSE(top_degree_map_injective(circles, SimplicialComplex::void_complex(), second,
                                         Coefficients::Z()));
    CHECK_FALSE(top_degree_map_injective(circles, SimplicialComplex::void_complex(), second,
                                         Coefficients::Zp(5)));
}
