#include "fncalc/g2/projections.hpp"

#include <array>

#include "fncalc/exterior/coordinates.hpp"

namespace fncalc::g2 {

using exterior::basis_sets;
using exterior::DomainError;
using linalg::Matrix;

namespace {

/// Matrix (columns = images of the canonical basis) of a linear map Λ^p → Λ^q.
template <typename F>
Matrix matrix_of(const ModelSpace& space, int p, int q, F&& f) {
  std::vector<std::vector<ExactScalar>> columns;
  for (auto set : basis_sets(space.dim, p)) {
    columns.push_back(exterior::constant_coordinates(f(DifferentialForm::basis(space, set))));
  }
  return Matrix::from_columns(exterior::binomial(space.dim, q), columns);
}

std::array<Matrix, 5> build() {
  const auto space = ModelSpace::affine(7);
  const auto phi = standard_phi(space).phi;
  const Rational third(1, 3);

  const Matrix t = matrix_of(space, 2, 2, [&](const DifferentialForm& b) {
    return exterior::hodge_star(exterior::wedge(phi, b));
  });
  const Matrix id2 = Matrix::identity(21);
  const Matrix p2_7 = ExactScalar(third) * (t + id2);
  const Matrix p2_14 = ExactScalar(third) * (ExactScalar(2) * id2 - t);

  const Matrix phi_col = exterior::as_column(exterior::constant_coordinates(phi));
  const Matrix p3_1 = ExactScalar(Rational(1, 7)) * (phi_col * phi_col.transpose());
  const Matrix s = matrix_of(space, 1, 3, [&](const DifferentialForm& a) {
    return exterior::hodge_star(exterior::wedge(a, phi));
  });
  const Matrix p3_7 = ExactScalar(Rational(1, 4)) * (s * s.transpose());
  const Matrix p3_27 = Matrix::identity(35) - p3_1 - p3_7;
  return {p2_7, p2_14, p3_1, p3_7, p3_27};
}

}  // namespace

std::string to_string(G2Type type) {
  switch (type) {
    case G2Type::two_7: return "2_7";
    case G2Type::two_14: return "2_14";
    case G2Type::three_1: return "3_1";
    case G2Type::three_7: return "3_7";
    case G2Type::three_27: return "3_27";
  }
  return "?";
}

G2Type parse_g2_type(const std::string& text) {
  for (auto t : {G2Type::two_7, G2Type::two_14, G2Type::three_1, G2Type::three_7, G2Type::three_27}) {
    if (to_string(t) == text) return t;
  }
  throw DomainError("unknown G2 type '" + text + "'");
}

int type_degree(G2Type type) { return (type == G2Type::two_7 || type == G2Type::two_14) ? 2 : 3; }

const Matrix& projection_matrix(G2Type type) {
  static const std::array<Matrix, 5> table = build();
  return table[static_cast<std::size_t>(type)];
}

DifferentialForm g2_type_project(const DifferentialForm& a, G2Type type) {
  if (a.space().dim != 7) throw DomainError("g2_type_project: requires a 7-dimensional space");
  if (a.degree() != type_degree(type)) {
    throw DomainError("g2_type_project: a " + std::to_string(a.degree()) + "-form has no " + to_string(type) +
                      " component");
  }
  return exterior::apply_pointwise(projection_matrix(type), a, a.degree());
}

}  // namespace fncalc::g2
