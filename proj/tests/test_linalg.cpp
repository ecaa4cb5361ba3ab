#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "solvclass/linalg.hpp"
#include "support.hpp"

using namespace solvclass;
using namespace solvclass::testing;

namespace {

RatMatrix from_rows(const std::vector<std::vector<std::string>>& rows) {
  RatMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(static_cast<int>(r), static_cast<int>(c)) = rat(rows[r][c]);
  return m;
}

// root matrix of the five-node diagram 12>3, 13>4, 23>5
RatMatrix example_root_matrix() {
  return from_rows({{"-1", "-1", "1", "0", "0"},
                    {"-1", "0", "-1", "1", "0"},
                    {"0", "-1", "-1", "0", "1"}});
}

}  // namespace

TEST_CASE("kernel of the worked five-node root matrix") {
  auto basis = kernel_basis(example_root_matrix());
  REQUIRE(basis.size() == 2);
  for (const RatVec& v : basis) {
    // kernel pattern (l3 - l2, l2, l3, 2 l3 - l2, l2 + l3)
    CHECK(v[0] == v[2] - v[1]);
    CHECK(v[3] == 2 * v[2] - v[1]);
    CHECK(v[4] == v[1] + v[2]);
  }
}

TEST_CASE("kernel edge cases") {
  RatMatrix zero(3, 3);
  auto b = kernel_basis(zero);
  REQUIRE(b.size() == 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(b[i][j] == (i == j ? 1 : 0));

  RatMatrix id(3, 3);
  for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
  CHECK(kernel_basis(id).empty());
}

TEST_CASE("rank plus kernel dimension is the column count") {
  Rng rng(11);
  for (int it = 0; it < 50; ++it) {
    int r = rng.pick(1, 5), c = rng.pick(1, 5);
    RatMatrix m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m.at(i, j) = rng.rational(3, 3);
    auto basis = kernel_basis(m);
    CHECK(rank(m) + static_cast<int>(basis.size()) == c);
    for (const RatVec& v : basis)
      for (const Rational& entry : m.apply(v)) CHECK(entry == 0);
  }
}

TEST_CASE("affine solve: unique X of the dimension-4 worked example") {
  // transpose of the root matrix of 12>3, 13>4
  RatMatrix tM = from_rows({{"-1", "-1"}, {"-1", "0"}, {"1", "-1"}, {"0", "1"}});
  Rational two_tr = 2 * rat("49/51");
  RatVec b = {two_tr * rat("-23/51"), two_tr * rat("-2/17"), two_tr * rat("-11/51"),
              two_tr * rat("1/3")};
  auto sol = solve_affine(tM, b);
  REQUIRE(sol.has_value());
  CHECK(sol->unique());
  CHECK(sol->particular == ratvec({"196/867", "98/153"}));
}

TEST_CASE("affine solve: inconsistent and parametric cases") {
  RatMatrix zero(2, 2);
  CHECK(!solve_affine(zero, ratvec({"1", "0"})).has_value());

  auto full = solve_affine(zero, ratvec({"0", "0"}));
  REQUIRE(full.has_value());
  CHECK(full->basis.size() == 2);

  // one equation, two unknowns: x + y = 1
  RatMatrix m = from_rows({{"1", "1"}});
  auto sol = solve_affine(m, ratvec({"1"}));
  REQUIRE(sol.has_value());
  CHECK(sol->basis.size() == 1);
  RatVec shifted = sol->particular;
  for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += sol->basis[0][i];
  CHECK(m.apply(shifted) == ratvec({"1"}));
}

TEST_CASE("affine solve substitution on random consistent systems") {
  Rng rng(77);
  for (int it = 0; it < 60; ++it) {
    int r = rng.pick(1, 4), c = rng.pick(1, 4);
    RatMatrix m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m.at(i, j) = rng.rational(3, 3);
    RatVec x0(c);
    for (int j = 0; j < c; ++j) x0[j] = rng.rational(3, 3);
    RatVec b = m.apply(x0);
    auto sol = solve_affine(m, b);
    REQUIRE(sol.has_value());
    CHECK(m.apply(sol->particular) == b);
    for (const RatVec& v : sol->basis) {
      RatVec y = sol->particular;
      for (int j = 0; j < c; ++j) y[j] += v[j];
      CHECK(m.apply(y) == b);
    }
  }
}

namespace {
F2Matrix f2_from_rows(const std::vector<std::vector<int>>& rows) {
  F2Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      m.at(static_cast<int>(r), static_cast<int>(c)) = static_cast<std::uint8_t>(rows[r][c]);
  return m;
}
}  // namespace

TEST_CASE("GF(2) affine solve reproduces the worked signature sets") {
  // dimension-4 example: rows of M_2 for 12>3, 13>4, plus eps_1 eps_2 = -1
  F2Matrix sys = f2_from_rows({{1, 1, 1, 0}, {1, 0, 1, 1}, {1, 1, 0, 0}});
  auto sol = f2_solve_affine(sys, {0, 0, 1});
  REQUIRE(sol.has_value());
  auto all = sol->enumerate();
  REQUIRE(all.size() == 2);
  std::set<F2Vec> got(all.begin(), all.end());
  CHECK(got.count({1, 0, 1, 0}));  // eps = (-1, 1, -1, 1)
  CHECK(got.count({0, 1, 1, 1}));  // eps = (1, -1, -1, -1)
}

TEST_CASE("GF(2) affine solve: inconsistent five-node case") {
  // M_2 of 12>3, 13>4, 23>5 with logsign X = 0, plus eps_1 eps_5 = -1
  F2Matrix sys = f2_from_rows(
      {{1, 1, 1, 0, 0}, {1, 0, 1, 1, 0}, {0, 1, 1, 0, 1}, {1, 0, 0, 0, 1}});
  CHECK(!f2_solve_affine(sys, {0, 0, 0, 1}).has_value());
}

TEST_CASE("GF(2) full space and brute-force count") {
  F2Matrix zero(2, 3);
  auto sol = f2_solve_affine(zero, {0, 0});
  REQUIRE(sol.has_value());
  CHECK(sol->enumerate().size() == 8);

  Rng rng(13);
  for (int it = 0; it < 60; ++it) {
    int r = rng.pick(1, 4), c = rng.pick(1, 5);
    F2Matrix m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m.at(i, j) = static_cast<std::uint8_t>(rng.pick(0, 1));
    F2Vec b(r);
    for (int i = 0; i < r; ++i) b[i] = static_cast<std::uint8_t>(rng.pick(0, 1));

    std::size_t brute = 0;
    for (unsigned mask = 0; mask < (1u << c); ++mask) {
      F2Vec x(c);
      for (int j = 0; j < c; ++j) x[j] = (mask >> j) & 1;
      if (m.apply(x) == b) ++brute;
    }
    auto s = f2_solve_affine(m, b);
    std::size_t got = s ? s->enumerate().size() : 0;
    CHECK(got == brute);
  }
}

TEST_CASE("logsign") {
  CHECK(logsign(ratvec({"196/867", "98/153"})) == F2Vec{0, 0});
  CHECK(logsign(ratvec({"-1", "1", "-1", "1"})) == F2Vec{1, 0, 1, 0});
  CHECK(logsign(ratvec({"3", "-22", "-4312/289", "-422576/14739"})) == F2Vec{0, 1, 1, 1});
  CHECK_THROWS_AS(logsign(ratvec({"1", "0"})), std::domain_error);
  CHECK(logsign(rxvec({"sqrt(2)-1", "-sqrt(3)"})) == F2Vec{0, 1});
}
