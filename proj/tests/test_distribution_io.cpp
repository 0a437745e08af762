#include <doctest.h>

#include <string>
#include <variant>

#include "geoskew/distribution_io.hpp"

using namespace geoskew;

namespace {
std::string fixture(const char* name) { return std::string(GEOSKEW_FIXTURE_DIR) + "/" + name; }
}  // namespace

TEST_CASE("JSON and CSV fixtures") {
  const ProbVec p = load_weights_file(fixture("p_half.json"));
  CHECK(p.size() == 2);
  CHECK(p[0] == 0.5);
  const ProbVec q_json = load_weights_file(fixture("q_quarter.json"));
  const ProbVec q_csv = load_weights_file(fixture("q_quarter.csv"));
  CHECK(q_json[0] == doctest::Approx(0.25));
  CHECK(q_json[1] == doctest::Approx(0.75));
  CHECK((q_json.weights() - q_csv.weights()).cwiseAbs().maxCoeff() <= 1e-15);
  CHECK(load_weights_file(fixture("three.csv")).size() == 3);
}

TEST_CASE("malformed input is a parse error") {
  CHECK_THROWS_AS(load_weights_file(fixture("bad_type.json")), ParseError);
  CHECK_THROWS_AS(load_weights_file(fixture("bad_number.csv")), ParseError);
  CHECK_THROWS_AS(load_weights_file(fixture("truncated.json")), ParseError);
  CHECK_THROWS_AS(load_weights_file(fixture("does_not_exist.json")), ParseError);
  CHECK_THROWS_AS(parse_weights(""), ParseError);
  CHECK_THROWS_AS(parse_weights(R"({"weights": [1, 2], "normalize": "yes"})"), ParseError);
  CHECK_THROWS_AS(parse_weights(R"({"values": [1, 2]})"), ParseError);
}

TEST_CASE("invalid values are domain errors") {
  CHECK_THROWS_AS(load_weights_file(fixture("bad_sum.json")), DomainError);
  CHECK_THROWS_AS(load_weights_file(fixture("q_zero.json")), DomainError);
  CHECK_THROWS_AS(parse_weights("0.5\n-0.5\n1.0\n"), DomainError);
}

TEST_CASE("clamp policy lifts zeros") {
  LoadOptions clamp;
  clamp.policy = ZeroPolicy::clamp;
  const ProbVec q = load_weights_file(fixture("q_zero.json"), clamp);
  CHECK(q[0] > 0.0);
  CHECK(q[0] < 1e-11);
}

TEST_CASE("generator descriptors") {
  const Distribution b = resolve_distribution("binomial:10:0.3");
  REQUIRE(std::holds_alternative<ProbVec>(b));
  CHECK(std::get<ProbVec>(b).size() == 11);

  const Distribution g = resolve_distribution("gaussian:0:0.5");
  REQUIRE(std::holds_alternative<DensityFn>(g));
  CHECK(std::get<DensityFn>(g).gaussian()->sigma2 == 0.5);

  const Distribution f = resolve_distribution(fixture("three.csv"));
  CHECK(std::holds_alternative<ProbVec>(f));

  CHECK_THROWS_AS(resolve_distribution("binomial:10"), ParseError);
  CHECK_THROWS_AS(resolve_distribution("binomial:ten:0.3"), ParseError);
  CHECK_THROWS_AS(resolve_distribution("binomial:2.5:0.3"), DomainError);
  CHECK_THROWS_AS(resolve_distribution("gaussian:0:-1"), DomainError);
}
