#include "eulerfact/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "eulerfact/special_core.hpp"
#include "gamma_oracle.hpp"

namespace ef = eulerfact;
using ef::FamilyKind;

namespace {

constexpr double kSqrtE = 1.6487212707001282;
constexpr double kRelationGrid[] = {0.5, 1.0, 2.0, 3.0, 5.0};

double rel(double got, double want) {
  return std::abs(got - want) / std::abs(want);
}

}  // namespace

TEST_CASE("constant_A closed-form values") {
  // a=b=1 collapses to sqrt(2 pi)
  CHECK(rel(ef::constant_A({1, 1}), 2.5066282746310002) <= 1e-13);
  // a=2, b=1: sqrt(2 pi)/e
  CHECK(rel(ef::constant_A({2, 1}), 0.9221370088957891) <= 1e-13);
  // a=1, b=2: Gamma(1/2) cancels sqrt(pi), leaving sqrt(2 e)
  CHECK(rel(ef::constant_A({1, 2}), 2.3316439815971242) <= 1e-13);
}

TEST_CASE("constant_A for a = b is sqrt(2 pi / b)") {
  for (double b : {0.5, 1.0, 2.0, 3.7}) {
    CHECK(rel(ef::constant_A({b, b}), std::sqrt(2.0 * M_PI / b)) <= 1e-14);
  }
}

TEST_CASE("constant_B is constant_A with b doubled") {
  CHECK(ef::constant_B({1, 1}) == ef::constant_A({1, 2}));  // definitional
  CHECK(rel(ef::constant_B({1, 1}), 2.3316439815971242) <= 1e-13);
  // a=2, b=1: sqrt(2 pi) / Gamma(1) * 2^(-1/2) * e^0 = sqrt(pi)
  CHECK(rel(ef::constant_B({2, 1}), 1.7724538509055160) <= 1e-13);
}

TEST_CASE("constant_k equals Delta(1/2) and its closed form") {
  CHECK(rel(ef::constant_k({1, 1}), 0.7978845608028654) <= 1e-13);
  CHECK(rel(ef::constant_k({2, 1}), 1.2533141373155003) <= 1e-13);
  // both reduce to sqrt(2) Gamma(3/2)
  CHECK(rel(ef::constant_k({2, 1}), ef::theta({1, 1}, 0.5).value()) <= 1e-13);
  for (double a : kRelationGrid) {
    for (double b : kRelationGrid) {
      const ef::Parameters p{a, b};
      CHECK(ef::constant_k(p) == std::exp(ef::delta(p, 0.5).log_abs));
      // closed form (2b)^(1/2) Gamma(1/2 + a/(2b)) / Gamma(a/(2b))
      const double s2 = a / (2.0 * b);
      const double closed = std::sqrt(2.0 * b) *
                            std::exp(ef::log_gamma(0.5 + s2) - ef::log_gamma(s2));
      CHECK(rel(ef::constant_k(p), closed) <= 1e-13);
    }
  }
}

TEST_CASE("constant_C values and derived closed form") {
  // B = sqrt(2 e), k = sqrt(2/pi): C = B/(k sqrt(e)) = sqrt(pi)
  CHECK(rel(ef::constant_C({1, 1}), 1.7724538509055160) <= 1e-13);
  // a=2, b=1: B = sqrt(pi), k = sqrt(pi/2): C = sqrt(2/e)
  CHECK(rel(ef::constant_C({2, 1}), 0.8577638849607068) <= 1e-13);
  // the defining inversion B = C k sqrt(e)
  CHECK(rel(ef::constant_B({1, 1}),
            ef::constant_C({1, 1}) * ef::constant_k({1, 1}) * kSqrtE) <= 1e-13);
  // redundant closed form sqrt(2 pi) (2b)^(-a/2b) e^(1/2-a/2b) / Gamma(1/2+a/2b)
  for (double a : kRelationGrid) {
    for (double b : kRelationGrid) {
      const double s2 = a / (2.0 * b);
      const double closed = std::sqrt(2.0 * M_PI) * std::pow(2.0 * b, -s2) *
                            std::exp(0.5 - s2) / ef::gamma(0.5 + s2);
      CHECK(rel(ef::constant_C({a, b}), closed) <= 1e-12);
    }
  }
}

TEST_CASE("constant relations hold on the 25-pair grid") {
  for (double a : kRelationGrid) {
    for (double b : kRelationGrid) {
      const auto c = ef::assemble_constants({a, b});
      CHECK(std::abs(c.A - c.B * c.C / kSqrtE) / c.A <= 1e-12);
      CHECK(std::abs(c.B - c.C * c.k * kSqrtE) / c.B <= 1e-12);
      CHECK(std::abs(c.A - c.B * c.B / (M_E * c.k)) / c.A <= 1e-12);
    }
  }
}

TEST_CASE("assemble_constants bundles the reference quadruple") {
  const auto c = ef::assemble_constants({1, 1});
  CHECK(c.A == doctest::Approx(2.5066282746).epsilon(1e-9));
  CHECK(c.B == doctest::Approx(2.3316439816).epsilon(1e-9));
  CHECK(c.C == doctest::Approx(1.7724538509).epsilon(1e-9));
  CHECK(c.k == doctest::Approx(0.7978845608).epsilon(1e-9));
  CHECK(c.A == doctest::Approx(c.B * c.C / kSqrtE).epsilon(1e-12));
}

TEST_CASE("leading_asymptote undershoots the exact value by ~1/(12x)") {
  // Stirling-type deficit: ratio in [0.998, 1.0] at x = 50
  const double r_ge = std::exp(
      ef::leading_asymptote(FamilyKind::GammaE, {1, 1}, 50.0).log_abs -
      ef::gamma_e({1, 1}, 50.0).log_abs);
  CHECK(r_ge >= 0.998);
  CHECK(r_ge <= 1.0);
  const double r_d =
      std::exp(ef::leading_asymptote(FamilyKind::Delta, {1, 1}, 50.0).log_abs -
               ef::delta({1, 1}, 50.0).log_abs);
  CHECK(std::abs(r_d - 1.0) <= 1e-2);
  const double r_t =
      std::exp(ef::leading_asymptote(FamilyKind::Theta, {1, 1}, 50.0).log_abs -
               ef::theta({1, 1}, 50.0).log_abs);
  CHECK(std::abs(r_t - 1.0) <= 1e-2);
}

TEST_CASE("leading_asymptote requires a positive power base") {
  // a=1, b=1, x=0 puts the base at exactly zero
  CHECK_THROWS_AS(ef::leading_asymptote(FamilyKind::GammaE, {1, 1}, 0.0),
                  std::domain_error);
  CHECK_THROWS_AS(ef::leading_asymptote(FamilyKind::Delta, {1, 1}, 0.5),
                  std::domain_error);
  CHECK(std::isfinite(
      ef::leading_asymptote(FamilyKind::GammaE, {1, 1}, 0.01).log_abs));
}

TEST_CASE("estimate_constant recovers A, B and C from the products") {
  const auto e4 = ef::estimate_constant(FamilyKind::GammaE, {1, 1}, 10000);
  CHECK(e4.n_used == 10000);
  CHECK(rel(e4.estimate, 2.5066282746310002) <= 2e-5);
  CHECK(e4.closed_form == doctest::Approx(2.5066282746310002).epsilon(1e-13));
  CHECK(e4.relative_error <= 2e-5);

  const auto e2 = ef::estimate_constant(FamilyKind::GammaE, {1, 1}, 100);
  CHECK(e2.relative_error <= 1e-3);

  const auto d4 = ef::estimate_constant(FamilyKind::Delta, {1, 1}, 10000);
  CHECK(rel(d4.estimate, ef::constant_B({1, 1})) <= 1e-4);

  const auto d3 = ef::estimate_constant(FamilyKind::Delta, {2, 3}, 1000);
  CHECK(d3.relative_error <= 1e-3);

  const auto t4 = ef::estimate_constant(FamilyKind::Theta, {1, 1}, 10000);
  CHECK(rel(t4.estimate, ef::constant_C({1, 1})) <= 1e-4);
}

TEST_CASE("estimate_constant error decreases like 1/n") {
  double prev = 1.0;
  for (long long n : {100LL, 1000LL, 10000LL}) {
    const auto e = ef::estimate_constant(FamilyKind::GammaE, {1, 1}, n);
    CHECK(e.relative_error <= 1.0 / static_cast<double>(n));
    CHECK(e.relative_error < prev);
    prev = e.relative_error;
  }
}

TEST_CASE("estimate_constant rejects n < 10") {
  CHECK_THROWS_AS(ef::estimate_constant(FamilyKind::GammaE, {1, 1}, 9),
                  std::invalid_argument);
  CHECK_NOTHROW(ef::estimate_constant(FamilyKind::GammaE, {1, 1}, 10));
}

TEST_CASE("em_corrected_log converges to the exact continuation") {
  CHECK(std::abs(ef::em_corrected_log(FamilyKind::GammaE, {1, 1}, 20.0, 4).log_abs -
                 ef::gamma_e({1, 1}, 20.0).log_abs) <= 1e-12);
  CHECK(std::abs(ef::em_corrected_log(FamilyKind::Delta, {2, 3}, 15.0, 4).log_abs -
                 ef::delta({2, 3}, 15.0).log_abs) <= 1e-11);
  CHECK(std::abs(ef::em_corrected_log(FamilyKind::Theta, {1, 1}, 25.0, 4).log_abs -
                 ef::theta({1, 1}, 25.0).log_abs) <= 1e-11);
}

TEST_CASE("em_corrected_log with no terms is the leading asymptote") {
  for (auto kind : {FamilyKind::GammaE, FamilyKind::Delta, FamilyKind::Theta}) {
    CHECK(ef::em_corrected_log(kind, {2, 3}, 7.0, 0).log_abs ==
          ef::leading_asymptote(kind, {2, 3}, 7.0).log_abs);
  }
}

TEST_CASE("em_corrected_log each added term tightens the log error") {
  const double exact = ef::gamma_e({1, 1}, 12.0).log_abs;
  double prev = std::abs(
      ef::em_corrected_log(FamilyKind::GammaE, {1, 1}, 12.0, 0).log_abs - exact);
  for (int terms = 1; terms <= 4; ++terms) {
    const double err = std::abs(
        ef::em_corrected_log(FamilyKind::GammaE, {1, 1}, 12.0, terms).log_abs -
        exact);
    CHECK(err < prev);
    prev = err;
  }
}

TEST_CASE("em_corrected_log argument errors") {
  CHECK_THROWS_AS(ef::em_corrected_log(FamilyKind::GammaE, {1, 1}, 20.0, 31),
                  std::invalid_argument);
  CHECK_THROWS_AS(ef::em_corrected_log(FamilyKind::GammaE, {1, 1}, 0.0, 2),
                  std::domain_error);
}

TEST_CASE("log_family_constant matches the linear-scale constants") {
  const ef::Parameters p{2.5, 0.75};
  CHECK(std::exp(ef::log_family_constant(FamilyKind::GammaE, p)) ==
        doctest::Approx(ef::constant_A(p)).epsilon(1e-14));
  CHECK(std::exp(ef::log_family_constant(FamilyKind::Delta, p)) ==
        doctest::Approx(ef::constant_B(p)).epsilon(1e-14));
  CHECK(std::exp(ef::log_family_constant(FamilyKind::Theta, p)) ==
        doctest::Approx(ef::constant_C(p)).epsilon(1e-12));
}
