#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include <nilstrat/jordan.hpp>
#include <nilstrat/partition.hpp>

#include "oracles.hpp"

using nilstrat::ErrorKind;
using nilstrat::Partition;

namespace {

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const nilstrat::Error& e) {
        return e.kind();
    }
    FAIL("expected nilstrat::Error");
    return ErrorKind::io;
}

}  // namespace

TEST_CASE("make_partition normalizes order", "[partition]") {
    const std::vector<long long> values{1, 3, 2};
    const auto p = nilstrat::make_partition(values);
    CHECK(p.parts() == std::vector<int>{3, 2, 1});
    CHECK(p.size() == 6);
    CHECK(p.part(7) == 0);

    const auto empty = nilstrat::make_partition(std::vector<long long>{});
    CHECK(empty.size() == 0);
    CHECK(empty.empty());

    CHECK(kind_of([] { Partition{2, 0}; }) == ErrorKind::invalid_part);
    CHECK(kind_of([] { Partition{-1}; }) == ErrorKind::invalid_part);
}

TEST_CASE("conjugate", "[partition]") {
    CHECK(nilstrat::conjugate(Partition{4}) == Partition{1, 1, 1, 1});
    CHECK(nilstrat::conjugate(Partition{2, 1}) == Partition{2, 1});
    CHECK(nilstrat::conjugate(Partition{3, 1}) == Partition{2, 1, 1});
    CHECK(nilstrat::conjugate(Partition{}) == Partition{});

    for (int n = 0; n <= 10; ++n) {
        for (const auto& mu : nilstrat::all_partitions(n)) {
            CHECK(nilstrat::conjugate(mu) == oracle::conjugate_by_diagram(mu));
            CHECK(nilstrat::conjugate(nilstrat::conjugate(mu)) == mu);
        }
    }
}

TEST_CASE("all_partitions counts", "[partition]") {
    // p(n) for n = 0..12
    const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    for (int n = 0; n < static_cast<int>(counts.size()); ++n) {
        const auto all = nilstrat::all_partitions(n);
        CHECK(all.size() == counts[static_cast<std::size_t>(n)]);
        for (const auto& p : all) CHECK(p.size() == n);
    }
}

TEST_CASE("dominance examples", "[partition]") {
    CHECK(nilstrat::dominance_leq(Partition{1, 1, 1}, Partition{3}));
    CHECK_FALSE(nilstrat::dominance_leq(Partition{3}, Partition{1, 1, 1}));
    CHECK_FALSE(nilstrat::dominance_leq(Partition{2, 2, 2}, Partition{3, 1, 1, 1}));
    CHECK_FALSE(nilstrat::dominance_leq(Partition{3, 1, 1, 1}, Partition{2, 2, 2}));
    CHECK(nilstrat::dominance_leq(Partition{2, 1}, Partition{2, 1}));
    CHECK(kind_of([] { nilstrat::dominance_leq(Partition{2}, Partition{2, 1}); }) == ErrorKind::incomparable_sizes);
}

TEST_CASE("dominance is a partial order", "[partition][exhaustive]") {
    for (int n = 1; n <= 7; ++n) {
        const auto all = nilstrat::all_partitions(n);
        for (const auto& a : all) {
            CHECK(nilstrat::dominance_leq(a, a));
            for (const auto& b : all) {
                const bool ab = nilstrat::dominance_leq(a, b);
                CHECK(ab == oracle::leq_by_definition(a, b));
                if (ab && nilstrat::dominance_leq(b, a)) CHECK(a == b);
                for (const auto& c : all) {
                    if (ab && nilstrat::dominance_leq(b, c)) CHECK(nilstrat::dominance_leq(a, c));
                }
            }
        }
    }
}

TEST_CASE("meet and join", "[partition]") {
    CHECK(nilstrat::meet(Partition{3, 1, 1, 1}, Partition{2, 2, 2}) == Partition{2, 2, 1, 1});
    CHECK(nilstrat::meet(Partition{3, 1}, Partition{3, 1}) == Partition{3, 1});
    CHECK(nilstrat::join(Partition{2, 2}, Partition{3, 1}) == Partition{3, 1});
    CHECK(nilstrat::join(Partition{3, 1, 1, 1}, Partition{2, 2, 2}) == Partition{3, 2, 1});
    CHECK(kind_of([] { nilstrat::meet(Partition{2}, Partition{1}); }) == ErrorKind::incomparable_sizes);
    CHECK(kind_of([] { nilstrat::join(Partition{2}, Partition{1}); }) == ErrorKind::incomparable_sizes);

    for (int n = 1; n <= 8; ++n) {
        const auto all = nilstrat::all_partitions(n);
        for (const auto& a : all) {
            for (const auto& b : all) {
                const auto m = nilstrat::meet(a, b);
                const auto j = nilstrat::join(a, b);
                REQUIRE(m == oracle::brute_meet(a, b));
                REQUIRE(j == oracle::brute_join(a, b));
                CHECK(nilstrat::meet(a, b) == nilstrat::meet(b, a));
            }
        }
    }
}

TEST_CASE("minimum of a set", "[partition]") {
    const std::vector<Partition> chain{Partition{3}, Partition{2, 1}};
    CHECK(nilstrat::minimum(chain) == Partition{2, 1});

    const std::vector<Partition> antichain{Partition{2, 2, 2}, Partition{3, 1, 1, 1}};
    CHECK_FALSE(nilstrat::minimum(antichain).has_value());

    const std::vector<Partition> single{Partition{4, 2}};
    CHECK(nilstrat::minimum(single) == Partition{4, 2});

    CHECK(kind_of([] { nilstrat::minimum(std::vector<Partition>{}); }) == ErrorKind::empty_input);
    CHECK(kind_of([] { nilstrat::minimum(std::vector<Partition>{Partition{1}, Partition{2}}); }) ==
          ErrorKind::incomparable_sizes);
}

TEST_CASE("jordan_matrix layout", "[partition]") {
    CHECK(nilstrat::jordan_matrix(Partition{1, 1}).is_zero());
    CHECK(nilstrat::jordan_matrix(Partition{2}) == nilstrat::RationalMatrix{{0, 1}, {0, 0}});
    CHECK(nilstrat::jordan_matrix(Partition{2, 1}) == nilstrat::RationalMatrix{{0, 1, 0}, {0, 0, 0}, {0, 0, 0}});
    CHECK(nilstrat::jordan_matrix(Partition{}).rows() == 0);
}

TEST_CASE("dominance matches Jordan rank order", "[partition][exhaustive]") {
    for (int n = 1; n <= 6; ++n) {
        const auto all = nilstrat::all_partitions(n);
        std::vector<std::vector<std::size_t>> ranks;
        for (const auto& mu : all) {
            std::vector<std::size_t> r;
            const auto nmu = nilstrat::jordan_matrix(mu);
            for (int i = 1; i < n; ++i) r.push_back(nilstrat::rank(nilstrat::mat_pow(nmu, i)));
            ranks.push_back(r);
        }
        for (std::size_t a = 0; a < all.size(); ++a) {
            for (std::size_t b = 0; b < all.size(); ++b) {
                bool by_rank = true;
                for (std::size_t i = 0; i < ranks[a].size(); ++i) by_rank = by_rank && ranks[a][i] <= ranks[b][i];
                CHECK(by_rank == nilstrat::dominance_leq(all[a], all[b]));
            }
        }
    }
}
