#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sgfem/assembly.hpp"
#include "sgfem/errors.hpp"

using namespace sgfem;

namespace {

/// Interpolate a smooth vector field into the discrete displacement space.
/// Shared DoFs are written consistently because the functionals are global.
Eigen::VectorXd interpolate_global(const Mesh& mesh, const DofMap& dm,
                                   const ReferenceBasis& ref,
                                   const std::array<ScalarField, 2>& field) {
  Eigen::VectorXd u = Eigen::VectorXd::Zero(dm.n_u);
  for (int t = 0; t < mesh.n_triangles(); ++t) {
    const ElementBasis basis(ref, element_geometry(mesh, t));
    const auto ids = dm.cell_dofs(mesh, t);
    for (int c = 0; c < 2; ++c) {
      const Eigen::VectorXd local = basis.interpolate(field[static_cast<size_t>(c)]);
      for (size_t j = 0; j < ids.size(); ++j)
        u(dm.displacement_dof(ids[j], c)) = local(static_cast<Eigen::Index>(j));
    }
  }
  return u;
}

/// Dense bivariate polynomial of degree <= 3 with analytic derivatives.
struct Poly2 {
  std::array<std::array<double, 4>, 4> c{};  // c[i][j] x^i y^j, i + j <= 3

  double at(double x, double y) const {
    double s = 0.0;
    for (int i = 0; i <= 3; ++i)
      for (int j = 0; j + i <= 3; ++j)
        s += c[static_cast<size_t>(i)][static_cast<size_t>(j)] * std::pow(x, i) * std::pow(y, j);
    return s;
  }
  Poly2 dx() const {
    Poly2 d;
    for (int i = 1; i <= 3; ++i)
      for (int j = 0; j + i <= 3; ++j)
        d.c[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] =
            i * c[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return d;
  }
  Poly2 dy() const {
    Poly2 d;
    for (int i = 0; i <= 3; ++i)
      for (int j = 1; j + i <= 3; ++j)
        d.c[static_cast<size_t>(i)][static_cast<size_t>(j - 1)] =
            j * c[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return d;
  }
  static Poly2 random(std::mt19937& rng) {
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    Poly2 p;
    for (int i = 0; i <= 3; ++i)
      for (int j = 0; j + i <= 3; ++j)
        p.c[static_cast<size_t>(i)][static_cast<size_t>(j)] = unif(rng);
    return p;
  }
};

ScalarField field_of(const Poly2& p) {
  const Poly2 px = p.dx(), py = p.dy();
  return {[p](double x, double y) { return p.at(x, y); },
          [px, py](double x, double y) {
            return Eigen::Vector2d(px.at(x, y), py.at(x, y));
          }};
}

const VectorField kZeroLoad = [](double, double) { return Eigen::Vector2d::Zero(); };

double matrix_inf_norm(const Eigen::SparseMatrix<double>& m) {
  double mx = 0.0;
  for (int k = 0; k < m.outerSize(); ++k)
    for (Eigen::SparseMatrix<double>::InnerIterator it(m, k); it; ++it)
      mx = std::max(mx, std::abs(it.value()));
  return mx;
}

}  // namespace

TEST_CASE("assembled blocks are symmetric") {
  const Mesh mesh = unit_square_mesh(4, 0.2, 11);
  const DofMap dm = build_dofmap(mesh, 2);
  const ReferenceBasis ref(2);
  const MaterialParams params = MaterialParams::from_E_nu(1.0, 0.3, 0.1);
  const AssembledBlocks blocks = assemble_blocks(mesh, dm, ref, params, kZeroLoad);
  const Eigen::SparseMatrix<double> dA = blocks.A - Eigen::SparseMatrix<double>(blocks.A.transpose());
  const Eigen::SparseMatrix<double> dC = blocks.C - Eigen::SparseMatrix<double>(blocks.C.transpose());
  CHECK(matrix_inf_norm(dA) < 1e-12 * matrix_inf_norm(blocks.A));
  CHECK(matrix_inf_norm(dC) < 1e-12);
  CHECK(blocks.load.norm() == 0.0);
}

TEST_CASE("rigid-body fields lie in the null space of the elastic block") {
  const Mesh mesh = unit_square_mesh(4, 0.2, 19);
  const DofMap dm = build_dofmap(mesh, 2);
  const ReferenceBasis ref(2);
  const MaterialParams params = MaterialParams::from_E_nu(1.0, 0.3, 0.1);
  const AssembledBlocks blocks = assemble_blocks(mesh, dm, ref, params, kZeroLoad);
  const double scale = matrix_inf_norm(blocks.A);

  const ScalarField zero{[](double, double) { return 0.0; },
                         [](double, double) { return Eigen::Vector2d::Zero(); }};
  const ScalarField one{[](double, double) { return 1.0; },
                        [](double, double) { return Eigen::Vector2d::Zero(); }};
  const ScalarField minus_y{[](double, double y) { return -y; },
                            [](double, double) { return Eigen::Vector2d(0, -1); }};
  const ScalarField plus_x{[](double x, double) { return x; },
                           [](double, double) { return Eigen::Vector2d(1, 0); }};

  const std::array<std::array<ScalarField, 2>, 3> rigid{{{one, zero},      // translation x
                                                          {zero, one},     // translation y
                                                          {minus_y, plus_x}}};  // rotation
  for (const auto& mode : rigid) {
    const Eigen::VectorXd u = interpolate_global(mesh, dm, ref, mode);
    CHECK((blocks.A * u).lpNorm<Eigen::Infinity>() < 1e-10 * scale);
  }
}

TEST_CASE("strain-gradient term scales quadratically in the length parameter") {
  const Mesh mesh = unit_square_mesh(2, 0.2, 4);
  const DofMap dm = build_dofmap(mesh, 2);
  const ReferenceBasis ref(2);
  auto mk = [&](double iota) {
    MaterialParams p = MaterialParams::from_E_nu(1.0, 0.3, 1.0);
    p.iota = iota;
    return assemble_blocks(mesh, dm, ref, p, kZeroLoad);
  };
  // A(iota) = A0 + iota^2 G, so A(2 iota) - A0 = 4 (A(iota) - A0).
  const double iota = 0.25;
  const Eigen::SparseMatrix<double> a0 = mk(1e-300).A;
  const Eigen::SparseMatrix<double> a1 = mk(iota).A;
  const Eigen::SparseMatrix<double> a2 = mk(2 * iota).A;
  const Eigen::SparseMatrix<double> diff = (a2 - a0) - 4.0 * (a1 - a0);
  CHECK(matrix_inf_norm(diff) < 1e-10 * matrix_inf_norm(a2));
}

TEST_CASE("pointwise divergence-free discrete fields lie in the kernel of B") {
  const Mesh mesh = unit_square_mesh(4, 0.2, 23);
  const DofMap dm = build_dofmap(mesh, 2);
  const ReferenceBasis ref(2);
  const MaterialParams params = MaterialParams::from_E_nu(1.0, 0.3, 0.3);
  const AssembledBlocks blocks = assemble_blocks(mesh, dm, ref, params, kZeroLoad);
  // u = (y^2, x^2) is quadratic (hence reproduced exactly) and div-free.
  const ScalarField y2{[](double, double y) { return y * y; },
                       [](double, double y) { return Eigen::Vector2d(0, 2 * y); }};
  const ScalarField x2{[](double x, double) { return x * x; },
                       [](double x, double) { return Eigen::Vector2d(2 * x, 0); }};
  const Eigen::VectorXd u = interpolate_global(mesh, dm, ref, {y2, x2});
  CHECK((blocks.B * u).lpNorm<Eigen::Infinity>() < 1e-11);
}

TEST_CASE("the interpolation operator preserves the constraint form") {
  // b_{iota,h}(pi_h v, q) = b_iota(v, q) for every discrete q and smooth v
  // vanishing on the boundary (the edge terms of the commuting argument only
  // cancel for v with zero trace). v = x(1-x)y(1-y) * random cubic.
  const Mesh mesh = unit_square_mesh(4, 0.2, 31);
  const DofMap dm = build_dofmap(mesh, 2);
  const ReferenceBasis ref(2);
  MaterialParams params = MaterialParams::from_E_nu(1.0, 0.3, 1.0);
  params.iota = 0.5;
  const AssembledBlocks blocks = assemble_blocks(mesh, dm, ref, params, kZeroLoad);
  const QuadRule rule = triangle_quadrature(14);
  std::mt19937 rng(303);

  auto bubble = [](double x, double y) { return (x - x * x) * (y - y * y); };
  auto bubble_grad = [](double x, double y) {
    return Eigen::Vector2d((1 - 2 * x) * (y - y * y), (x - x * x) * (1 - 2 * y));
  };
  for (int trial = 0; trial < 10; ++trial) {
    const Poly2 p1 = Poly2::random(rng);
    const Poly2 p2 = Poly2::random(rng);
    const std::array<ScalarField, 2> v = {
        ScalarField{[&bubble, p1](double x, double y) { return bubble(x, y) * p1.at(x, y); },
                    [&, p1](double x, double y) {
                      const Poly2 px = p1.dx(), py = p1.dy();
                      return (bubble_grad(x, y) * p1.at(x, y) +
                              bubble(x, y) * Eigen::Vector2d(px.at(x, y), py.at(x, y)))
                          .eval();
                    }},
        ScalarField{[&bubble, p2](double x, double y) { return bubble(x, y) * p2.at(x, y); },
                    [&, p2](double x, double y) {
                      const Poly2 px = p2.dx(), py = p2.dy();
                      return (bubble_grad(x, y) * p2.at(x, y) +
                              bubble(x, y) * Eigen::Vector2d(px.at(x, y), py.at(x, y)))
                          .eval();
                    }}};
    const Eigen::VectorXd u = interpolate_global(mesh, dm, ref, v);

    // div v and grad(div v), analytically, via the product rule.
    const Poly2 p1x = p1.dx(), p1y = p1.dy(), p2x = p2.dx(), p2y = p2.dy();
    const Poly2 p1xx = p1x.dx(), p1xy = p1x.dy(), p2xy = p2x.dy(), p2yy = p2y.dy();
    auto div_at = [&](double x, double y) {
      const double B = bubble(x, y);
      const Eigen::Vector2d g = bubble_grad(x, y);
      return g.x() * p1.at(x, y) + B * p1x.at(x, y) + g.y() * p2.at(x, y) +
             B * p2y.at(x, y);
    };
    auto graddiv_at = [&](double x, double y) {
      const double B = bubble(x, y);
      const Eigen::Vector2d g = bubble_grad(x, y);
      const double Bxx = -2 * (y - y * y), Byy = -2 * (x - x * x);
      const double Bxy = (1 - 2 * x) * (1 - 2 * y);
      const double dx = Bxx * p1.at(x, y) + 2 * g.x() * p1x.at(x, y) + B * p1xx.at(x, y) +
                        Bxy * p2.at(x, y) + g.y() * p2x.at(x, y) + g.x() * p2y.at(x, y) +
                        B * p2xy.at(x, y);
      const double dy = Bxy * p1.at(x, y) + g.y() * p1x.at(x, y) + g.x() * p1y.at(x, y) +
                        B * p1xy.at(x, y) + Byy * p2.at(x, y) + 2 * g.y() * p2y.at(x, y) +
                        B * p2yy.at(x, y);
      return Eigen::Vector2d(dx, dy);
    };

    // Exact moments b_iota(v, hat_a) against every pressure hat function.
    Eigen::VectorXd exact = Eigen::VectorXd::Zero(dm.n_p);
    for (int t = 0; t < mesh.n_triangles(); ++t) {
      const TriangleGeometry geom = element_geometry(mesh, t);
      const auto& tri = mesh.triangles[static_cast<size_t>(t)];
      for (size_t k = 0; k < rule.size(); ++k) {
        const auto& l = rule.points[k];
        const Eigen::Vector2d x = geom.point(l[0], l[1], l[2]);
        const double w = rule.weights[k] * geom.area;
        const double dv = div_at(x.x(), x.y());
        const Eigen::Vector2d gd = graddiv_at(x.x(), x.y());
        for (int a = 0; a < 3; ++a)
          exact(tri[static_cast<size_t>(a)]) +=
              w * (dv * l[static_cast<size_t>(a)] +
                   params.iota * params.iota *
                       gd.dot(geom.grad_lambda[static_cast<size_t>(a)]));
      }
    }
    const double diff = (blocks.B * u - exact).lpNorm<Eigen::Infinity>();
    CHECK(diff < 1e-9 * (1.0 + exact.lpNorm<Eigen::Infinity>()));
  }
}

TEST_CASE("load vector integrates polynomial data exactly") {
  const Mesh mesh = unit_square_mesh(4, 0.0);
  const DofMap dm = build_dofmap(mesh, 2);
  const ReferenceBasis ref(2);
  const MaterialParams params = MaterialParams::from_E_nu(1.0, 0.3, 0.1);
  const VectorField f = [](double, double) { return Eigen::Vector2d(1.0, 2.0); };
  const AssembledBlocks blocks = assemble_blocks(mesh, dm, ref, params, f);
  // load . (interpolant of g) = int f . g for quadratic g, here
  // g = (x^2, x y):  int x^2 + 2 x y = 1/3 + 1/2 = 5/6.
  const ScalarField g1{[](double x, double) { return x * x; },
                       [](double x, double) { return Eigen::Vector2d(2 * x, 0); }};
  const ScalarField g2{[](double x, double y) { return x * y; },
                       [](double x, double y) { return Eigen::Vector2d(y, x); }};
  const Eigen::VectorXd g = interpolate_global(mesh, dm, ref, {g1, g2});
  CHECK(blocks.load.dot(g) == doctest::Approx(5.0 / 6.0).epsilon(1e-12));
}

TEST_CASE("insufficient quadrature degree is rejected") {
  const Mesh mesh = unit_square_mesh(2, 0.0);
  const DofMap dm = build_dofmap(mesh, 2);
  const ReferenceBasis ref(2);
  const MaterialParams params = MaterialParams::from_E_nu(1.0, 0.3, 0.1);
  CHECK_THROWS_AS(assemble_blocks(mesh, dm, ref, params, kZeroLoad, 3), CapabilityError);
}

TEST_CASE("material parameter validation and derived moduli") {
  const MaterialParams p = MaterialParams::from_E_nu(1.0, 0.4999, 1e-6);
  CHECK(p.lambda == doctest::Approx(1.6664e3).epsilon(1e-3));
  CHECK(p.mu == doctest::Approx(0.3334).epsilon(1e-3));
  CHECK_THROWS_AS(MaterialParams::from_E_nu(1.0, 0.5, 1e-6), ParameterError);
  CHECK_THROWS_AS(MaterialParams::from_E_nu(1.0, 0.3, 0.0), ParameterError);
  CHECK_THROWS_AS(MaterialParams::from_E_nu(1.0, 0.3, 2.0), ParameterError);
}

TEST_CASE("reduced saddle system is symmetric and correctly sized") {
  const Mesh mesh = unit_square_mesh(4, 0.2, 8);
  const DofMap dm = build_dofmap(mesh, 2);
  const ReferenceBasis ref(2);
  const MaterialParams params = MaterialParams::from_E_nu(1.0, 0.3, 0.1);
  const AssembledBlocks blocks = assemble_blocks(mesh, dm, ref, params, kZeroLoad);
  const BcValues bc = apply_essential_bcs(dm, mesh, BoundaryData::homogeneous());
  const SaddleSystem sys = build_saddle_system(blocks, dm, mesh, params, bc, true);
  const int expected = static_cast<int>(sys.u_free.size() + sys.p_free.size()) + 1;
  CHECK(sys.K.rows() == expected);
  CHECK(sys.K.cols() == expected);
  CHECK(sys.has_mean_row);
  const Eigen::SparseMatrix<double> dK = sys.K - Eigen::SparseMatrix<double>(sys.K.transpose());
  CHECK(matrix_inf_norm(dK) < 1e-12 * matrix_inf_norm(sys.K));

  const SaddleSystem sys2 = build_saddle_system(blocks, dm, mesh, params, bc, false);
  CHECK(sys2.K.rows() == expected - 1);
  CHECK_FALSE(sys2.has_mean_row);
}
