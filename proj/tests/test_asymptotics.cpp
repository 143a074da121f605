#include <cmath>

#include <doctest.h>

#include "permsub/asymptotics.hpp"
#include "permsub/errors.hpp"
#include "permsub/series.hpp"

using namespace permsub;

TEST_CASE("dominant roots live in (1/4, 2/5) with tiny residuals") {
  for (int j = 1; j <= 10; ++j) {
    const AsymptoticParams p = dominant_root(RadicandFamily::pj, j);
    CHECK(to_double(p.root) > 0.25);
    CHECK(to_double(p.root) < 0.4);
    CHECK(to_double(p.residual) < 1e-12);
    CHECK(to_double(p.growth) * to_double(p.root) == doctest::Approx(1.0));
  }
  for (int m = 1; m <= 5; ++m) {
    const AsymptoticParams p = dominant_root(RadicandFamily::lj_complement, m);
    CHECK(to_double(p.root) > 0.25);
    CHECK(to_double(p.root) < 0.4);
    CHECK(to_double(p.residual) < 1e-12);
  }
}

TEST_CASE("roots decay toward 1/4 like 2^-(j+4)") {
  double prev = 0;
  for (int j = 5; j <= 20; ++j) {
    const double excess =
        to_double(dominant_root(RadicandFamily::pj, j).root) - 0.25;
    // excess = 2^-(j+4) (1 + O(j 2^-j)): the halving ratio tightens as j
    // grows, with the largest deviation (~2.5%) at the first step.
    CHECK(excess * std::pow(2.0, j + 4) == doctest::Approx(1.0).epsilon(0.07));
    if (j > 5) CHECK(excess / prev == doctest::Approx(0.5).epsilon(0.04));
    prev = excess;
  }
}

TEST_CASE("degenerate complement rejects a root request") {
  CHECK_THROWS_AS(dominant_root(RadicandFamily::lj_complement, 0),
                  numeric_failure);
  CHECK_THROWS_AS(dominant_root(RadicandFamily::pj, 0), invalid_input);
}

TEST_CASE("asymptotic estimates converge on exact coefficients") {
  const auto table = pj_coefficients_linear(1, 200).coeff;
  double prev_err = 1.0;
  for (int n : {50, 100, 200}) {
    const Real est = asymptotic_coefficient(RadicandFamily::pj, 1, n);
    const Real exact(table[static_cast<std::size_t>(n)]);
    const double rel = std::abs(to_double(est / exact) - 1.0);
    CHECK(rel < prev_err);
    prev_err = rel;
  }
  CHECK(prev_err < 0.05);
}

TEST_CASE("avoider ratio, exact against asymptotic at m = 5") {
  // n = 50 rows of both forms; larger sizes live in the acceptance suite.
  const double exact = to_double(avoider_ratio_exact(5, 50));
  const double asym = to_double(avoider_ratio_asymptotic(5, 50));
  CHECK(std::trunc(exact * 1000) == 986);
  CHECK(std::round(asym * 1000) == 988);
  CHECK(std::abs(exact - asym) < 0.01);
}

TEST_CASE("paired-root ratio at m = 5") {
  const double ratio = to_double(root_ratio(5));
  CHECK(std::abs(ratio - 0.999765) < 1e-6);
  CHECK(ratio < 1.0);
}
