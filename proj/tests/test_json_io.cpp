#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <nilstrat/json_io.hpp>

#include "oracles.hpp"

namespace io = nilstrat::io;
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

TEST_CASE("partition JSON", "[io]") {
    CHECK(io::partition_from_json(io::parse("[1,3,1]")) == Partition{3, 1, 1});
    CHECK(io::dump(io::to_json(Partition{1, 3, 1})) == "[3,1,1]");
    CHECK(io::partition_from_json(io::parse("[]")) == Partition{});
    CHECK(kind_of([] { io::partition_from_json(io::parse("[1,0]")); }) == ErrorKind::invalid_part);
    CHECK(kind_of([] { io::partition_from_json(io::parse("[1.5]")); }) == ErrorKind::parse);
    CHECK(kind_of([] { io::partition_from_json(io::parse("{}")); }) == ErrorKind::parse);
    CHECK(kind_of([] { io::parse("[1,"); }) == ErrorKind::parse);
}

TEST_CASE("matrix JSON", "[io]") {
    const auto m = io::matrix_from_json(io::parse(R"({"rows":2,"cols":2,"entries":[[1,"-2/4"],["3",0]]})"));
    REQUIRE(std::holds_alternative<nilstrat::RationalMatrix>(m));
    const auto& r = std::get<nilstrat::RationalMatrix>(m);
    CHECK(r(0, 1) == nilstrat::Rational(-1, 2));
    CHECK(io::dump(io::to_json(r)) == R"({"rows":2,"cols":2,"entries":[[1,"-1/2"],[3,0]]})");

    const auto p = io::matrix_from_json(io::parse(R"({"rows":1,"cols":2,"modulus":7,"entries":[[-1,"1/2"]]})"));
    REQUIRE(std::holds_alternative<nilstrat::PrimeMatrix>(p));
    const auto& pm = std::get<nilstrat::PrimeMatrix>(p);
    CHECK(pm(0, 0) == 6);
    CHECK(pm(0, 1) == 4);  // 2 * 4 = 8 = 1 mod 7

    const nilstrat::Rational huge = nilstrat::Rational(nilstrat::BigInt(1) << 80, 3);
    nilstrat::RationalMatrix big(1, 1);
    big.set(0, 0, huge);
    const auto again = io::matrix_from_json(io::parse(io::dump(io::to_json(big))));
    CHECK(std::get<nilstrat::RationalMatrix>(again) == big);

    CHECK(kind_of([] { io::matrix_from_json(io::parse(R"({"rows":2,"cols":1,"entries":[[1]]})")); }) ==
          ErrorKind::parse);
    CHECK(kind_of([] { io::matrix_from_json(io::parse(R"({"rows":1,"cols":1,"entries":[["1/0"]]})")); }) ==
          ErrorKind::parse);
    CHECK(kind_of([] { io::matrix_from_json(io::parse(R"({"rows":1,"cols":1,"entries":[["x"]]})")); }) ==
          ErrorKind::parse);
    CHECK(kind_of([] { io::matrix_from_json(io::parse(R"({"rows":1,"cols":1,"modulus":6,"entries":[[1]]})")); }) ==
          ErrorKind::invalid_argument);
}

TEST_CASE("matrix JSON round trip", "[io][property]") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const auto m = oracle::random_rational(1 + trial % 4, 1 + trial % 3, rng, 20);
        const auto back = io::matrix_from_json(io::parse(io::dump(io::to_json(m))));
        CHECK(std::get<nilstrat::RationalMatrix>(back) == m);
    }
}

TEST_CASE("spec and complex JSON", "[io]") {
    const auto spec = io::spec_from_json(io::parse(R"({"label":"t","tau_dim":3,"tau_type":[1,2],"mult":2})"));
    CHECK(spec.tau_type == Partition{2, 1});
    CHECK(io::spec_from_json(io::to_json(spec)) == spec);
    CHECK(kind_of([] { io::spec_from_json(io::parse(R"({"label":"t","tau_dim":3,"tau_type":[2],"mult":1})")); }) ==
          ErrorKind::size_mismatch);
    CHECK(kind_of([] { io::spec_from_json(io::parse(R"({"label":"t","tau_dim":1,"tau_type":[1]})")); }) ==
          ErrorKind::parse);

    const auto c = io::complex_from_json(
        io::parse(R"({"n":3,"components":{"b":[1,1,1],"a":[2,1]},"points":{"p":["b","a","a"]}})"));
    CHECK(c.incidence("p") == std::vector<std::string>{"a", "b"});
    CHECK(io::complex_from_json(io::to_json(c)) == c);
    CHECK(io::dump(io::to_json(c)) == R"({"n":3,"components":{"a":[2,1],"b":[1,1,1]},"points":{"p":["a","b"]}})");
    CHECK(kind_of([] { io::complex_from_json(io::parse(R"({"n":3,"components":[],"points":{}})")); }) ==
          ErrorKind::parse);
}

TEST_CASE("ring element JSON", "[io]") {
    const auto e = io::ring_elem_from_json(io::parse(R"([1,"-123456789012345678901234567890",0])"));
    CHECK(e.arity() == 3);
    CHECK(io::ring_elem_from_json(io::to_json(e)) == e);
    CHECK(kind_of([] { io::ring_elem_from_json(io::parse("[]")); }) == ErrorKind::invalid_argument);
    CHECK(kind_of([] { io::ring_elem_from_json(io::parse("[true]")); }) == ErrorKind::parse);
}
