#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "surfbraid/audit.hpp"
#include "surfbraid/errors.hpp"
#include "surfbraid/klein.hpp"
#include "surfbraid/rewrite.hpp"

using namespace surfbraid;

namespace {

// Substituting each rho by its expression must give back c r c^-1 up to free
// reduction, for every relator r and coset representative c.
void check_substitution_identity(const Presentation& pres, const RewriteResult& res,
                                 std::size_t odd) {
  std::vector<FormalWord> expected;
  for (const FormalWord& r : pres.relators) {
    expected.push_back(freely_reduce(r));
    FormalWord conj{{odd, 1}};
    conj.insert(conj.end(), r.begin(), r.end());
    conj.push_back({odd, -1});
    expected.push_back(freely_reduce(conj));
  }
  std::vector<FormalWord> got;
  for (const FormalWord& rel : res.subgroup.relators) {
    FormalWord sub;
    for (FormalLetter l : rel) {
      const FormalWord& e = res.generators.at(l.generator).expression;
      if (l.sign > 0) {
        sub.insert(sub.end(), e.begin(), e.end());
      } else {
        FormalWord inv = formal_inverse(e);
        sub.insert(sub.end(), inv.begin(), inv.end());
      }
    }
    got.push_back(freely_reduce(sub));
  }
  auto less = [](const FormalWord& a, const FormalWord& b) {
    return std::lexicographical_compare(
        a.begin(), a.end(), b.begin(), b.end(), [](FormalLetter x, FormalLetter y) {
          return x.generator != y.generator ? x.generator < y.generator : x.sign < y.sign;
        });
  };
  std::sort(expected.begin(), expected.end(), less);
  std::sort(got.begin(), got.end(), less);
  CHECK(got == expected);
  for (const SchreierGenerator& t : res.trivial) {
    CHECK(freely_reduce(t.expression).empty());
  }
  for (const SchreierGenerator& g : res.generators) {
    CHECK_FALSE(g.expression.empty());
  }
}

}  // namespace

TEST_CASE("cyclic group of order 4") {
  const Presentation p = parse_presentation("a\na^4\n");
  const std::vector<int> parity{1};
  const RewriteResult res = rs_rewrite_index2(p, parity, 0);
  REQUIRE(res.subgroup.generators.size() == 1);
  CHECK(res.subgroup.generators[0] == "rho(a,a)");
  CHECK(to_string(res.generators[0].expression, p.generators) == "a^2");
  REQUIRE(res.trivial.size() == 1);
  CHECK(res.trivial[0].name == "rho(1,a)");
  REQUIRE(res.subgroup.relators.size() == 2);
  for (const FormalWord& r : res.subgroup.relators) {
    CHECK(to_string(r, res.subgroup.generators) == "rho(a,a)^2");
  }
  check_substitution_identity(p, res, 0);
}

TEST_CASE("free group of rank one") {
  const Presentation p = parse_presentation("a\n");
  const std::vector<int> parity{1};
  const RewriteResult res = rs_rewrite_index2(p, parity, 0);
  REQUIRE(res.subgroup.generators.size() == 1);
  CHECK(to_string(res.generators[0].expression, p.generators) == "a^2");
  CHECK(res.subgroup.relators.empty());
}

TEST_CASE("free abelian group of rank two") {
  const Presentation p = parse_presentation("a b\na b a^-1 b^-1\n");
  const std::vector<int> parity{1, 0};
  const RewriteResult res = rs_rewrite_index2(p, parity, 0);
  // rank 2*(2-1)+1 = 3 generators for the subgroup of a rank 2 free group
  CHECK(res.subgroup.generators.size() == 3);
  CHECK(res.subgroup.relators.size() == 2);
  check_substitution_identity(p, res, 0);
}

TEST_CASE("braid group of the Klein bottle") {
  const Presentation p = klein::braid_presentation();
  REQUIRE(p.generators == std::vector<std::string>{"a1", "a2", "sigma"});
  CHECK(p.relators.size() == 4);
  const std::vector<int> parity{0, 0, 1};
  const RewriteResult res = rs_rewrite_index2(p, parity, 2);
  std::vector<std::string> names = res.subgroup.generators;
  CHECK(names == std::vector<std::string>{"rho(1,a1)", "rho(1,a2)", "rho(sigma,a1)",
                                          "rho(sigma,a2)", "rho(sigma,sigma)"});
  REQUIRE(res.trivial.size() == 1);
  CHECK(res.trivial[0].name == "rho(1,sigma)");
  CHECK(res.subgroup.relators.size() == 8);
  check_substitution_identity(p, res, 2);

  for (const auto& c : audit::klein_schreier_rewrite()) {
    INFO(c.name << " " << c.detail);
    CHECK(c.holds);
  }
}

TEST_CASE("rejected inputs") {
  const Presentation p = parse_presentation("a b\na b a^-1 b^-1\n");
  CHECK_THROWS_AS(rs_rewrite_index2(p, std::vector<int>{1}, 0), std::invalid_argument);
  CHECK_THROWS_AS(rs_rewrite_index2(p, std::vector<int>{2, 0}, 0), std::invalid_argument);
  CHECK_THROWS_AS(rs_rewrite_index2(p, std::vector<int>{1, 0}, 1), std::invalid_argument);
  const Presentation odd = parse_presentation("a b\na b^2\n");
  CHECK_THROWS_AS(rs_rewrite_index2(odd, std::vector<int>{1, 0}, 0), std::invalid_argument);
}

TEST_CASE("presentation text format") {
  const Presentation p = parse_presentation(
      "# comment\n"
      "\n"
      "a b\n"
      "a b = b a   # commutator\n"
      "a^3\n");
  CHECK(p.generators == std::vector<std::string>{"a", "b"});
  REQUIRE(p.relators.size() == 2);
  CHECK(to_string(p.relators[0], p.generators) == "a b a^-1 b^-1");
  CHECK(to_string(p.relators[1], p.generators) == "a^3");
  CHECK(p.index_of("b") == 1);
  CHECK_THROWS_AS(p.index_of("c"), std::out_of_range);
  CHECK_THROWS_AS(parse_presentation("a\na c\n"), ParseError);
  const Presentation again = parse_presentation(to_string(p));
  CHECK(again.generators == p.generators);
  CHECK(again.relators == p.relators);
}
