#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "halg/linalg.hpp"

using namespace halg;

TEST_CASE("rref, rank, kernel") {
    QMat m(3, 4);
    // rows: [1 2 0 1], [2 4 1 0], [3 6 1 1]  (row3 = row1+row2)
    m.row(0) = {rat(1), rat(2), rat(0), rat(1)};
    m.row(1) = {rat(2), rat(4), rat(1), rat(0)};
    m.row(2) = {rat(3), rat(6), rat(1), rat(1)};
    CHECK(m.rank() == 2);
    auto ker = m.kernel();
    CHECK(ker.size() == 2);
    for (const auto& v : ker) CHECK(qvec_is_zero(m.apply(v)));
}

TEST_CASE("solve consistent and inconsistent") {
    QMat m(2, 2);
    m.row(0) = {rat(1), rat(1)};
    m.row(1) = {rat(1), rat(-1)};
    auto x = m.solve({rat(3), rat(1)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == rat(2));
    CHECK((*x)[1] == rat(1));

    QMat s(2, 1);
    s.row(0) = {rat(1)};
    s.row(1) = {rat(2)};
    CHECK(!s.solve({rat(1), rat(1)}).has_value());
    CHECK(s.solve({rat(1), rat(2)}).has_value());
}

TEST_CASE("subspace membership and intersection") {
    Subspace s(3);
    CHECK(s.add({rat(1), rat(0), rat(1)}));
    CHECK(s.add({rat(0), rat(1), rat(1)}));
    CHECK(!s.add({rat(1), rat(1), rat(2)}));
    CHECK(s.dim() == 2);
    CHECK(s.contains({rat(2), rat(-1), rat(1)}));
    CHECK(!s.contains({rat(0), rat(0), rat(1)}));

    Subspace t(3);
    t.add({rat(1), rat(0), rat(0)});
    t.add({rat(0), rat(0), rat(1)});
    auto meet = s.intersect(t);
    CHECK(meet.dim() == 1);
    CHECK(meet.contains({rat(1), rat(0), rat(1)}));
    CHECK(s.sum(t).dim() == 3);
}

TEST_CASE("quotient space projection") {
    Subspace rel(3);
    rel.add({rat(1), rat(-1), rat(0)});  // e0 ~ e1
    QuotientSpace q(3, rel);
    CHECK(q.dim() == 2);
    auto pe0 = q.project({rat(1), rat(0), rat(0)});
    auto pe1 = q.project({rat(0), rat(1), rat(0)});
    CHECK(pe0 == pe1);
    CHECK(qvec_is_zero(q.project({rat(1), rat(-1), rat(0)})));
}

TEST_CASE("random matrix identities (seeded)") {
    std::uint64_t state = 12345;
    auto next = [&]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<long>((state >> 33) % 19) - 9;
    };
    for (int trial = 0; trial < 20; ++trial) {
        QMat a(4, 4), b(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                a.at(i, j) = rat(next());
                b.at(i, j) = rat(next(), 1 + trial);
            }
        // (A B)^T = B^T A^T
        CHECK(a.multiply(b).transpose() == b.transpose().multiply(a.transpose()));
        // rank(A) + dim ker(A) = 4
        CHECK(a.rank() + a.kernel().size() == 4);
    }
}
