#include "fncalc/g2/structure.hpp"

#include <array>

#include "fncalc/exterior/coordinates.hpp"
#include "fncalc/linalg/elimination.hpp"

namespace fncalc::g2 {

using exterior::DomainError;
using exterior::IndexSet;

G2Structure standard_phi(const ModelSpace& space) {
  if (space.dim != 7) throw DomainError("standard_phi: requires a 7-dimensional space, got " + space.name());
  const std::pair<std::array<int, 3>, int> terms[] = {
      {{1, 2, 3}, 1}, {{1, 4, 5}, 1}, {{1, 6, 7}, 1}, {{2, 4, 6}, 1},
      {{2, 5, 7}, -1}, {{3, 4, 7}, -1}, {{3, 5, 6}, -1},
  };
  DifferentialForm phi(space, 3);
  for (const auto& [labels, sign] : terms) {
    phi += DifferentialForm::basis(space, IndexSet::from_labels(std::vector<int>(labels.begin(), labels.end())), ExactScalar(sign));
  }
  return {phi};
}

DifferentialForm star_phi(const G2Structure& g2) { return exterior::hodge_star(g2.phi); }

linalg::Matrix bilinear_form(const DifferentialForm& phi) {
  const int n = phi.space().dim;
  if (phi.degree() != 3) throw DomainError("bilinear_form: φ must be a 3-form");
  if (!phi.has_constant_coefficients()) throw DomainError("bilinear_form: φ must have constant coefficients");
  std::vector<DifferentialForm> inserted;
  for (int i = 0; i < n; ++i) inserted.push_back(exterior::insert_frame(i, phi));
  const IndexSet top = IndexSet::full(n);
  linalg::Matrix b(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const auto volume = exterior::wedge(exterior::wedge(inserted[static_cast<std::size_t>(i)],
                                                          inserted[static_cast<std::size_t>(j)]),
                                          phi);
      const ExactScalar v = volume.coefficient(top).constant_value();
      b(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = v;
      b(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = v;
    }
  }
  return b;
}

VectorValuedForm chi(const G2Structure& g2) {
  const auto b = bilinear_form(g2.phi);
  if (!(b == ExactScalar(6) * linalg::Matrix::identity(7))) {
    throw DomainError("chi: φ does not induce the flat metric; use cayley_map");
  }
  return exterior::contract_metric(star_phi(g2));
}

std::size_t insertion_rank(const DifferentialForm& psi) {
  if (!psi.has_constant_coefficients()) throw DomainError("insertion_rank: Ψ must have constant coefficients");
  const int n = psi.space().dim;
  if (psi.degree() < 1) return 0;
  std::vector<std::vector<ExactScalar>> columns;
  for (int i = 0; i < n; ++i) columns.push_back(exterior::constant_coordinates(exterior::insert_frame(i, psi)));
  return linalg::rank(linalg::Matrix::from_columns(exterior::binomial(n, psi.degree() - 1), columns));
}

bool multisymplectic_check(const DifferentialForm& psi) {
  return insertion_rank(psi) == static_cast<std::size_t>(psi.space().dim);
}

}  // namespace fncalc::g2
