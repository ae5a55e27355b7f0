#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "lsd/chain.hpp"
#include "lsd/errors.hpp"
#include "lsd/periodicity.hpp"
#include "lsd/tight_binding.hpp"

using namespace lsd;

namespace {

const Chain kSeed = Chain::from_string("ABCDEFG");

double hamiltonian_norm_bound(const Hamiltonian& h) {
  double bound = h.diagonal.cwiseAbs().maxCoeff();
  if (h.offdiagonal.size() > 0) bound += 2.0 * h.offdiagonal.cwiseAbs().maxCoeff();
  if (h.corner) bound += 2.0 * std::abs(*h.corner);
  return std::max(1.0, bound);
}

double max_residual(const Hamiltonian& h, const Spectrum& s) {
  const Eigen::MatrixXd dense = h.dense();
  double worst = 0.0;
  for (Eigen::Index k = 0; k < s.size(); ++k)
    worst = std::max(worst, (dense * s.eigenvectors.col(k) -
                             s.eigenvalues[k] * s.eigenvectors.col(k))
                                .norm());
  return worst;
}

double orthonormality_defect(const Spectrum& s) {
  return (s.eigenvectors.transpose() * s.eigenvectors -
          Eigen::MatrixXd::Identity(s.size(), s.size()))
      .cwiseAbs()
      .maxCoeff();
}

Hamiltonian random_tridiagonal(std::mt19937& rng, int n) {
  std::uniform_real_distribution<double> diag_dist(-3.0, 3.0), off_dist(0.2, 2.0);
  Hamiltonian h;
  h.diagonal.resize(n);
  h.offdiagonal.resize(std::max(n - 1, 0));
  for (int i = 0; i < n; ++i) h.diagonal[i] = diag_dist(rng);
  for (int i = 0; i + 1 < n; ++i) h.offdiagonal[i] = off_dist(rng);
  return h;
}

}  // namespace

TEST_CASE("build_hamiltonian") {
  SUBCASE("defaults on AB") {
    const Hamiltonian h = build_hamiltonian(Chain::from_string("AB"));
    REQUIRE(h.size() == 2);
    CHECK(h.diagonal[0] == 1.0);
    CHECK(h.diagonal[1] == 2.0);
    REQUIRE(h.offdiagonal.size() == 1);
    CHECK(h.offdiagonal[0] == 1.0);
    CHECK(!h.corner);
  }
  SUBCASE("figure chain sizes") {
    CHECK(build_hamiltonian(generate_cells(kSeed, LsdRule{7, 1}, 3)).size() == 56);
    CHECK(build_hamiltonian(generate_cells(kSeed, LsdRule{7, 6}, 3)).size() == 76);
  }
  SUBCASE("unmapped symbol is named") {
    CHECK_THROWS_WITH_AS(build_hamiltonian(Chain::from_string("ABH")),
                         "no on-site energy for symbol H", std::invalid_argument);
  }
  SUBCASE("parameter validation") {
    TbParams zero;
    zero.coupling = 0.0;
    CHECK_THROWS_AS(build_hamiltonian(Chain::from_string("AB"), zero), std::invalid_argument);
    TbParams ring;
    ring.boundary = Boundary::periodic;
    CHECK_THROWS_AS(build_hamiltonian(Chain::from_string("AB"), ring), std::invalid_argument);
    CHECK_THROWS_AS(build_hamiltonian(Chain()), std::invalid_argument);
  }
}

TEST_CASE("eigendecompose closed forms") {
  SUBCASE("single site") {
    const Spectrum s = eigendecompose(build_hamiltonian(Chain::from_string("D")));
    REQUIRE(s.size() == 1);
    CHECK(s.eigenvalues[0] == doctest::Approx(4.0));
    CHECK(s.eigenvectors(0, 0) == doctest::Approx(1.0));
  }
  SUBCASE("two sites") {
    const Spectrum s = eigendecompose(build_hamiltonian(Chain::from_string("AB")));
    CHECK(s.eigenvalues[0] == doctest::Approx((3.0 - std::sqrt(5.0)) / 2.0).epsilon(1e-12));
    CHECK(s.eigenvalues[1] == doctest::Approx((3.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-12));
  }
  SUBCASE("open monomer chain") {
    const Spectrum s = eigendecompose(build_hamiltonian(Chain::from_string(std::string(20, 'A'))));
    for (int k = 1; k <= 20; ++k) {
      const double expected = 1.0 + 2.0 * std::cos(k * M_PI / 21.0);
      CHECK(std::abs(s.eigenvalues[20 - k] - expected) < 1e-10);
    }
  }
  SUBCASE("monomer ring matches the analytic circle spectrum") {
    TbParams ring;
    ring.boundary = Boundary::periodic;
    const int n = 8;
    const Spectrum s = eigendecompose(build_hamiltonian(Chain::from_string(std::string(n, 'A')), ring));
    std::vector<double> expected;
    for (int k = 0; k < n; ++k) expected.push_back(1.0 + 2.0 * std::cos(2.0 * M_PI * k / n));
    std::sort(expected.begin(), expected.end());
    for (int k = 0; k < n; ++k) CHECK(std::abs(s.eigenvalues[k] - expected[k]) < 1e-10);
  }
}

TEST_CASE("spectrum invariants on random tridiagonals") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 25; ++trial) {
    std::uniform_int_distribution<int> n_dist(1, 60);
    const Hamiltonian h = random_tridiagonal(rng, n_dist(rng));
    const Spectrum s = eigendecompose(h);
    const double scale = hamiltonian_norm_bound(h);

    for (Eigen::Index k = 0; k + 1 < s.size(); ++k)
      CHECK(s.eigenvalues[k] <= s.eigenvalues[k + 1]);
    CHECK(max_residual(h, s) <= 1e-8 * scale);
    CHECK(orthonormality_defect(s) <= 1e-10);
    CHECK(std::abs(s.eigenvalues.sum() - h.diagonal.sum()) <= 1e-9 * s.size() * scale);

    // sign convention: first component of visible magnitude is positive
    for (Eigen::Index k = 0; k < s.size(); ++k) {
      for (Eigen::Index i = 0; i < s.size(); ++i) {
        if (std::abs(s.eigenvectors(i, k)) > 1e-12) {
          CHECK(s.eigenvectors(i, k) > 0.0);
          break;
        }
      }
    }
  }
}

TEST_CASE("sturm bisection oracle") {
  SUBCASE("two sites to closed form") {
    const Eigen::VectorXd v = sturm_eigenvalues(build_hamiltonian(Chain::from_string("AB")), 1e-12);
    CHECK(std::abs(v[0] - (3.0 - std::sqrt(5.0)) / 2.0) < 1e-11);
    CHECK(std::abs(v[1] - (3.0 + std::sqrt(5.0)) / 2.0) < 1e-11);
  }
  SUBCASE("agrees with QL on the 7:1 chain") {
    const Hamiltonian h = build_hamiltonian(generate_cells(kSeed, LsdRule{7, 1}, 3));
    const Eigen::VectorXd oracle = sturm_eigenvalues(h, 1e-12);
    const Spectrum s = eigendecompose(h);
    CHECK((s.eigenvalues - oracle).cwiseAbs().maxCoeff() < 1e-10);
  }
  SUBCASE("agrees with QL on random tridiagonals up to N=200") {
    std::mt19937 rng(99);
    for (int n : {1, 2, 3, 17, 80, 200}) {
      const Hamiltonian h = random_tridiagonal(rng, n);
      const Spectrum s = eigendecompose(h);
      const Eigen::VectorXd oracle = sturm_eigenvalues(h, 1e-12);
      CAPTURE(n);
      CHECK((s.eigenvalues - oracle).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
  SUBCASE("Gershgorin containment") {
    const Hamiltonian h = build_hamiltonian(generate_cells(kSeed, LsdRule{7, 3}, 3));
    const Eigen::VectorXd v = sturm_eigenvalues(h, 1e-10);
    const double lo = h.diagonal.minCoeff() - 2.0, hi = h.diagonal.maxCoeff() + 2.0;
    CHECK(v.minCoeff() >= lo);
    CHECK(v.maxCoeff() <= hi);
  }
  SUBCASE("requires an open chain and a positive tolerance") {
    TbParams ring;
    ring.boundary = Boundary::periodic;
    const Hamiltonian h = build_hamiltonian(Chain::from_string("AAAA"), ring);
    CHECK_THROWS_AS(sturm_eigenvalues(h, 1e-10), std::invalid_argument);
    CHECK_THROWS_AS(sturm_eigenvalues(build_hamiltonian(Chain::from_string("AB")), 0.0),
                    std::invalid_argument);
  }
}

TEST_CASE("degeneracy census") {
  SUBCASE("monomer ring pairs up except at the band edges") {
    TbParams ring;
    ring.boundary = Boundary::periodic;
    const Spectrum s = eigendecompose(build_hamiltonian(Chain::from_string("AAAAAAAA"), ring));
    const auto clusters = degeneracy_census(s, 1e-9);
    REQUIRE(clusters.size() == 5);
    CHECK(clusters.front().second == 1);
    CHECK(clusters.back().second == 1);
    for (std::size_t i = 1; i + 1 < clusters.size(); ++i) CHECK(clusters[i].second == 2);
  }
  SUBCASE("open monomer chain is non-degenerate") {
    const Spectrum s = eigendecompose(build_hamiltonian(Chain::from_string("AAAAAAAA")));
    for (const auto& [value, mult] : degeneracy_census(s, 1e-9)) CHECK(mult == 1);
  }
  SUBCASE("single site") {
    const Spectrum s = eigendecompose(build_hamiltonian(Chain::from_string("C")));
    const auto clusters = degeneracy_census(s, 1e-9);
    REQUIRE(clusters.size() == 1);
    CHECK(clusters[0].first == doctest::Approx(3.0));
    CHECK(clusters[0].second == 1);
  }
}

TEST_CASE("dimer chain keeps its band gap open") {
  std::string text;
  for (int i = 0; i < 40; ++i) text += (i % 2 ? 'B' : 'A');
  const Spectrum s = eigendecompose(build_hamiltonian(Chain::from_string(text)));
  const double half_width = std::sqrt(1.0 + 0.25) - 1.0;  // sqrt(C^2 + (dD/2)^2) - C
  for (Eigen::Index k = 0; k < s.size(); ++k) {
    CHECK((s.eigenvalues[k] <= 1.5 - half_width || s.eigenvalues[k] >= 1.5 + half_width));
  }
}

TEST_CASE("site reversal maps the spectrum onto itself") {
  const Chain a = Chain::from_string("ABCDEFGFEDCABGE");
  const std::string fwd = to_string(a);
  const Chain b = Chain::from_string(std::string(fwd.rbegin(), fwd.rend()));
  const Spectrum sa = eigendecompose(build_hamiltonian(a));
  const Spectrum sb = eigendecompose(build_hamiltonian(b));
  CHECK((sa.eigenvalues - sb.eigenvalues).cwiseAbs().maxCoeff() < 1e-12);
  for (Eigen::Index k = 0; k < sa.size(); ++k) {
    const Eigen::VectorXd va = sa.eigenvectors.col(k).cwiseAbs();
    const Eigen::VectorXd vb = sb.eigenvectors.col(k).reverse().cwiseAbs();
    CHECK((va - vb).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("periodic path satisfies the same invariants") {
  TbParams ring;
  ring.boundary = Boundary::periodic;
  const Hamiltonian h = build_hamiltonian(generate(kSeed, LsdRule{7, 2}, 40), ring);
  const Spectrum s = eigendecompose(h);
  CHECK(max_residual(h, s) <= 1e-8 * hamiltonian_norm_bound(h));
  CHECK(orthonormality_defect(s) <= 1e-10);
  CHECK(std::abs(s.eigenvalues.sum() - h.diagonal.sum()) <= 1e-9 * s.size());
}
