#include "spectral/eigensolver.hpp"
#include "spectral/error.hpp"
#include "spectral/laplacian.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace spectral;
using namespace spectral::testing;

namespace {

double orthonormality_defect(const Matrix& v) {
  return (v.transpose() * v - Matrix::Identity(v.cols(), v.cols())).cwiseAbs().maxCoeff();
}

void check_sign_convention(const Matrix& v) {
  for (Index j = 0; j < v.cols(); ++j) {
    for (Index i = 0; i < v.rows(); ++i) {
      if (std::abs(v(i, j)) > 1e-9) {
        CHECK(v(i, j) > 0.0);
        break;
      }
    }
  }
}

}  // namespace

TEST_CASE("sym_eig basics") {
  SUBCASE("identity") {
    const Spectrum s = sym_eig(Matrix::Identity(4, 4));
    CHECK((s.eigenvalues.array() - 1.0).abs().maxCoeff() <= 1e-15);
    CHECK(orthonormality_defect(s.eigenvectors) <= 1e-12);
  }
  SUBCASE("diagonal") {
    const Spectrum s = sym_eig(Vector{{3.0, 1.0, 2.0}}.asDiagonal());
    CHECK(s.eigenvalues == Vector{{1.0, 2.0, 3.0}});
    CHECK(s.eigenvectors == Matrix{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
  }
  SUBCASE("worked-example Laplacian has the constant vector in its kernel") {
    const Spectrum s = sym_eig(laplacian(worked_example_graph()));
    CHECK(std::abs(s.eigenvalues(0)) <= 1e-12);
    CHECK((s.eigenvectors.col(0) - Vector::Constant(3, 1.0 / std::sqrt(3.0))).norm() <= 1e-12);
  }
  SUBCASE("empty and zero matrices") {
    CHECK(sym_eig(Matrix(0, 0)).size() == 0);
    const Spectrum z = sym_eig(Matrix::Zero(3, 3));
    CHECK(z.eigenvalues.isZero(0.0));
  }
}

TEST_CASE("sym_eig errors") {
  Matrix a = Matrix::Identity(3, 3);
  a(0, 1) = 1.0;
  try {
    sym_eig(a);
    FAIL("expected NotSymmetric");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSymmetric);
  }
  std::mt19937_64 rng(3);
  JacobiOptions one_sweep;
  one_sweep.max_sweeps = 1;
  try {
    sym_eig(random_symmetric(12, rng), one_sweep);
    FAIL("expected NoConvergence");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoConvergence);
  }
}

TEST_CASE("sym_eig residual and orthonormality on random symmetric matrices") {
  std::mt19937_64 rng(17);
  for (Index n : {1, 2, 3, 7, 20, 45, 100}) {
    const Matrix a = random_symmetric(n, rng);
    const Spectrum s = sym_eig(a);
    const Matrix residual = a * s.eigenvectors - s.eigenvectors * s.eigenvalues.asDiagonal();
    CHECK(residual.norm() <= 1e-9 * a.norm());
    CHECK(orthonormality_defect(s.eigenvectors) <= 1e-9);
    for (Index i = 1; i < n; ++i) CHECK(s.eigenvalues(i - 1) <= s.eigenvalues(i));
    check_sign_convention(s.eigenvectors);
    // trace is preserved
    CHECK(s.eigenvalues.sum() == doctest::Approx(a.trace()).epsilon(1e-10).scale(a.norm()));
  }
}

TEST_CASE("generalized_eig on the worked example") {
  const auto g = worked_example_graph();
  const Matrix l = laplacian(g);
  const Vector d = degree_vector(g);

  // The stated eigenpairs satisfy L w = lambda D w by direct substitution.
  const std::vector<std::pair<double, Vector>> stated = {
      {0.0, Vector{{1.0, 1.0, 1.0}}}, {1.0, Vector{{-0.8, 0.0, 0.2}}}, {2.0, Vector{{1.0, -1.0, 1.0}}}};
  for (const auto& [lambda, w] : stated) CHECK(substitution_residual(l, d, w, lambda) <= 1e-15);

  const Spectrum s = generalized_eig(l, d);
  CHECK(s.convention == Convention::DWeightedNorm);
  for (std::size_t u = 0; u < stated.size(); ++u) {
    const auto idx = static_cast<Index>(u);
    CHECK(s.eigenvalues(idx) == doctest::Approx(stated[u].first).epsilon(1e-9).scale(1.0));
    const Vector w = s.eigenvectors.col(idx);
    CHECK(substitution_residual(l, d, w, s.eigenvalues(idx)) <= 1e-10);
    const Vector ref = stated[u].second;
    const double cosine = std::abs(w.dot(ref)) / (w.norm() * ref.norm());
    CHECK(cosine == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(w.cwiseAbs2().dot(d) == doctest::Approx(1.0).epsilon(1e-12));
  }
  // w_1 = 1 / sqrt(1^T D 1)
  CHECK((s.eigenvectors.col(0) - Vector::Constant(3, 1.0 / std::sqrt(d.sum()))).norm() <= 1e-12);
  check_sign_convention(s.eigenvectors);
}

TEST_CASE("generalized_eig on the two-subgraph example") {
  const auto g = two_subgraph_example();
  const Spectrum s = generalized_eig(laplacian(g), degree_vector(g));
  CHECK(std::abs(s.eigenvalues(0)) <= 1e-12);
  CHECK(std::abs(s.eigenvalues(1)) <= 1e-12);
  CHECK(s.eigenvalues(2) > 1e-3);
  const Vector pattern{{0.25, -1.0 / 3, 0.25, -1.0 / 3, 0.25, -1.0 / 3, 0.25}};
  CHECK(distance_to_span(s.eigenvectors.leftCols(2), pattern) <= 1e-10);
  CHECK(kernel_multiplicity(s) == 2);
}

TEST_CASE("generalized_eig rejects isolated nodes") {
  const auto g = from_edge_list(3, {{0, 1, 1.0}});
  CHECK_THROWS_AS(generalized_eig(laplacian(g), degree_vector(g)), Error);
}

TEST_CASE("rayleigh_objective examples") {
  const auto g = worked_example_graph();
  const Matrix l = laplacian(g);
  CHECK(rayleigh_objective(l, Vector::Ones(3)) == doctest::Approx(0.0));

  Vector w2{{-0.8, 0.0, 0.2}};
  w2 /= std::sqrt(w2.cwiseAbs2().dot(degree_vector(g)));
  CHECK(rayleigh_objective(l, w2) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(pairwise_objective(g.weights(), w2) == doctest::Approx(1.0).epsilon(1e-12));

  const double w = 0.7;
  const auto pair = from_edge_list(2, {{0, 1, w}});
  const Vector x{{1.0, -1.0}};
  CHECK(rayleigh_objective(laplacian(pair), x) == doctest::Approx(4.0 * w));
  CHECK(pairwise_objective(pair.weights(), x) == doctest::Approx(4.0 * w));

  CHECK_THROWS_AS(rayleigh_objective(l, Vector::Ones(2)), Error);
}

TEST_CASE("kernel_multiplicity") {
  const auto chain = path_graph(6);
  CHECK(kernel_multiplicity(generalized_eig(laplacian(chain), degree_vector(chain))) == 1);

  std::mt19937_64 rng(23);
  for (int k = 1; k <= 5; ++k) {
    std::vector<Index> sizes(static_cast<std::size_t>(k));
    for (auto& s : sizes) s = 2 + static_cast<Index>(rng() % 5);
    // cliques: density 1
    std::vector<int> labels;
    const auto g = random_disjoint_blocks(sizes, rng, labels, 1.0);
    CHECK(kernel_multiplicity(generalized_eig(laplacian(g), degree_vector(g))) ==
          union_find_components(g.weights()));
  }
  Spectrum s;
  s.eigenvalues = Vector{{0.0, 1e-3, 2.0}};
  CHECK(kernel_multiplicity(s, 1e-2) == 2);
}

TEST_CASE("spectral invariants on random graphs") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const int blocks = 1 + static_cast<int>(rng() % 5);
    std::vector<Index> sizes(static_cast<std::size_t>(blocks));
    for (auto& s : sizes) s = 2 + static_cast<Index>(rng() % 8);
    std::vector<int> labels;
    const auto g = random_disjoint_blocks(sizes, rng, labels);
    const Matrix l = laplacian(g);
    const Vector d = degree_vector(g);

    const Spectrum ordinary = sym_eig(l);
    const Spectrum general = generalized_eig(l, d);
    const Spectrum hat = sym_normalized_eig(l, d);
    for (const Spectrum* s : {&ordinary, &general, &hat}) {
      const double top = s->eigenvalues(s->size() - 1);
      CHECK(s->eigenvalues.minCoeff() >= -1e-10 * top);
    }
    CHECK((general.eigenvalues - hat.eigenvalues).cwiseAbs().maxCoeff() <= 1e-12);

    const double lnorm = l.norm();
    for (Index u = 0; u < general.size(); ++u) {
      const Vector w = general.eigenvectors.col(u);
      CHECK((l * w - general.eigenvalues(u) * d.cwiseProduct(w)).norm() <= 1e-9 * lnorm);
    }
    const Matrix gram = general.eigenvectors.transpose() * d.asDiagonal() * general.eigenvectors;
    CHECK((gram - Matrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff() <= 1e-9);

    const Matrix back = generalized_to_hat(hat_to_generalized(hat.eigenvectors, d), d);
    CHECK((back - hat.eigenvectors).cwiseAbs().maxCoeff() <= 1e-12);

    CHECK(kernel_multiplicity(general) == connected_components(g).count);
    CHECK(kernel_multiplicity(general) == blocks);

    if (blocks == 1) {
      for (Index u = 1; u < general.size(); ++u) {
        CHECK(std::abs(general.eigenvectors.col(u).dot(d)) <= 1e-9);
        CHECK(std::abs(ordinary.eigenvectors.col(u).sum()) <= 1e-9);
      }
    }
  }
}
