#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "jtrace/omega2.hpp"
#include "jtrace/symfunc.hpp"

using namespace jtrace;
using namespace jtrace::omega2;
using symfunc::Partition;

namespace {
Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }
}

TEST_CASE("generator enumeration") {
    CHECK(enumerate_generators(0).empty());
    CHECK(enumerate_generators(1).empty());

    auto g2 = enumerate_generators(2);
    REQUIRE(g2.size() == 2);
    CHECK(g2[0] == PairWord{{1}, {2}});
    CHECK(g2[1] == PairWord{{2}, {1}});

    CHECK(enumerate_generators(3).size() == 2u * 6u);
    CHECK(enumerate_generators(4).size() == 3u * 24u);
    CHECK(enumerate_generators(5).size() == 4u * 120u);

    // ordered by left length, then lexicographically
    auto g4 = enumerate_generators(4);
    CHECK(g4.front() == PairWord{{1}, {2, 3, 4}});
    CHECK(g4.back() == PairWord{{4, 3, 2}, {1}});
    for (std::size_t i = 1; i < g4.size(); ++i) {
        auto a = std::make_tuple(g4[i - 1].left.size(), g4[i - 1].left, g4[i - 1].right);
        auto b = std::make_tuple(g4[i].left.size(), g4[i].left, g4[i].right);
        CHECK(a < b);
    }
}

TEST_CASE("relation rows: structure and counts") {
    auto rs = relation_rows(3);
    // 2 * 12 symmetry rows + 6 IHX1 rows + 12 TRI rows
    CHECK(rs.rows.nrows == 42);
    int s3 = 0, s4 = 0, ihx = 0, tri = 0;
    for (auto t : rs.tags) {
        if (t == RowTag::s3) ++s3;
        if (t == RowTag::s4) ++s4;
        if (t == RowTag::ihx1) ++ihx;
        if (t == RowTag::tri) ++tri;
    }
    CHECK(s3 == 12);
    CHECK(s4 == 12);
    CHECK(ihx == 6);
    CHECK(tri == 12);

    SUBCASE("S4 on [1|2] pairs the two generators") {
        auto rs2 = relation_rows(2);
        // row order: S3 rows first, then S4; [1|2] is generator 0
        const auto& s4row = rs2.rows.rows[2];
        REQUIRE(s4row.size() == 2);
        CHECK(s4row[0] == exactlin::Entry{0, rat(1)});
        CHECK(s4row[1] == exactlin::Entry{1, rat(-1)});
    }
    SUBCASE("TRI on [1|2] reduces to the generator itself") {
        auto rs2 = relation_rows(2);
        const auto& trirow = rs2.rows.rows[4];
        REQUIRE(trirow.size() == 1);
        CHECK(trirow[0] == exactlin::Entry{0, rat(1)});
    }
}

TEST_CASE("relation rows stay S_h-stable") {
    // permuting any relation row by an adjacent transposition keeps it in
    // the row span: its projection through the quotient vanishes
    for (int h = 2; h <= 4; ++h) {
        CAPTURE(h);
        auto rs = relation_rows(h);
        auto q = exactlin::build_quotient(static_cast<int>(rs.basis.size()), rs.rows);
        for (int t = 1; t < h; ++t) {
            std::vector<int> perm(h + 1);
            std::iota(perm.begin(), perm.end(), 0);
            std::swap(perm[t], perm[t + 1]);
            for (const auto& row : rs.rows.rows) {
                std::map<int, Rational> permuted;
                for (const auto& [col, c] : row) {
                    PairWord g = rs.basis[col];
                    for (int& x : g.left) x = perm[x];
                    for (int& x : g.right) x = perm[x];
                    permuted[rs.index.at(g)] += c;
                }
                exactlin::SparseRow pr;
                for (const auto& [col, c] : permuted)
                    if (c != 0) pr.emplace_back(col, c);
                CHECK(q.project(pr).empty());
            }
        }
    }
}

TEST_CASE("quotient dimensions") {
    CHECK(quotient_dim(0) == 0);
    CHECK(quotient_dim(1) == 0);
    CHECK(quotient_dim(2) == 0);
    CHECK(quotient_dim(3) == 0);
    CHECK(quotient_dim(4) == 4);
    CHECK(quotient_dim(5) == 21);
}

TEST_CASE("equivariant decompositions") {
    SUBCASE("h = 4") {
        auto eq = equivariant_decomposition(4);
        CHECK(eq.quotient.dim() == 4);
        CHECK(eq.nonzero() ==
              std::map<Partition, long long>{{P({1, 1, 1, 1}), 1}, {P({3, 1}), 1}});
    }
    SUBCASE("h = 5") {
        auto eq = equivariant_decomposition(5);
        CHECK(eq.quotient.dim() == 21);
        CHECK(eq.nonzero() == std::map<Partition, long long>{{P({3, 1, 1}), 2},
                                                             {P({2, 2, 1}), 1},
                                                             {P({2, 1, 1, 1}), 1}});
    }
    SUBCASE("h = 3 is empty") {
        auto eq = equivariant_decomposition(3);
        CHECK(eq.quotient.dim() == 0);
        CHECK(eq.nonzero().empty());
    }
}

TEST_CASE("alphabet-mode quotients") {
    SUBCASE("single letter, h = 4: weight space of the computed decomposition") {
        // weights (4): only [4] could contribute and its multiplicity is 0
        auto q = alphabet_quotient(1, 4);
        CHECK(q.dim() == 0);
    }
    SUBCASE("two letters, h = 2") {
        auto q = alphabet_quotient(2, 2);
        long long expect = 0;  // distinct-label dim is 0, so every weight dies
        CHECK(q.dim() == expect);
    }
    SUBCASE("two letters, h = 4 matches the GL weight count") {
        auto q = alphabet_quotient(2, 4);
        auto eq = equivariant_decomposition(4);
        long long expect = 0;
        for (const auto& [lambda, m] : eq.decomposition)
            expect += m * symfunc::dim_gl(lambda, 2);
        CHECK(q.dim() == expect);
        CHECK(expect == 3);  // dim_gl([3,1],2) = 3, [1^4] dies at n = 2
    }
    SUBCASE("three letters, h = 4 matches the GL weight count") {
        auto q = alphabet_quotient(3, 4);
        auto eq = equivariant_decomposition(4);
        long long expect = 0;
        for (const auto& [lambda, m] : eq.decomposition)
            expect += m * symfunc::dim_gl(lambda, 3);
        CHECK(q.dim() == expect);
    }
    CHECK_THROWS_AS(alphabet_quotient(12, 6), std::invalid_argument);
}

TEST_CASE("block projector") {
    BlockProjector proj;
    SUBCASE("relation rows project to zero") {
        auto rs = relation_rows(4);
        for (const auto& row : rs.rows.rows) {
            std::map<PairWord, Rational> raw;
            for (const auto& [col, c] : row) raw[rs.basis[col]] = c;
            CHECK(proj.project(raw).zero());
        }
    }
    SUBCASE("projection is linear and idempotent on representatives") {
        std::map<PairWord, Rational> raw{{PairWord{{1}, {2, 3, 4}}, rat(1)},
                                         {PairWord{{2, 1}, {3, 4}}, rat(-2)}};
        auto once = proj.project(raw);
        std::map<PairWord, Rational> again(once.coords.begin(), once.coords.end());
        CHECK(proj.project(again) == once);
    }
    SUBCASE("single-hair words vanish") {
        std::map<PairWord, Rational> raw{{PairWord{{7}, {9}}, rat(5)}};
        CHECK(proj.project(raw).zero());
    }
    SUBCASE("blocks with equal patterns share the cache across letter sets") {
        std::map<PairWord, Rational> a{{PairWord{{0}, {1, 2, 3}}, rat(1)}};
        std::map<PairWord, Rational> b{{PairWord{{10}, {11, 12, 13}}, rat(1)}};
        auto pa = proj.project(a);
        auto pb = proj.project(b);
        CHECK(pa.coords.size() == pb.coords.size());
        CHECK(!pa.zero());  // distinct-letter block at h=4 has dimension 4
    }
}
