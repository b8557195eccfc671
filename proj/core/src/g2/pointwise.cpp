#include "fncalc/g2/pointwise.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>

namespace fncalc::g2 {

using exterior::DomainError;
using exterior::Flavor;

namespace {

using Mat7 = Eigen::Matrix<double, 7, 7>;

constexpr int kDim = 7;
constexpr double kPositivityTolerance = 1e-9;

Mat7 to_eigen(const Square7& a) {
  Mat7 m;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) m(i, j) = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return m;
}

Square7 from_eigen(const Mat7& m) {
  Square7 a{};
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, j);
  return a;
}

std::vector<std::uint32_t> masks_of_size(int n, int p) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 0; m < (1U << n); ++m)
    if (std::popcount(m) == p) out.push_back(m);
  return out;
}

int wedge_sign(std::uint32_t a, std::uint32_t b) { return exterior::wedge_sign(exterior::IndexSet(a), exterior::IndexSet(b)); }

NumericForm wedge(const NumericForm& a, const NumericForm& b) {
  NumericForm out(a.dim, a.degree + b.degree);
  if (out.degree > a.dim) return out;
  for (auto ma : masks_of_size(a.dim, a.degree)) {
    const double x = a.at(ma);
    if (x == 0.0) continue;
    for (auto mb : masks_of_size(a.dim, b.degree)) {
      const double y = b.at(mb);
      if (y == 0.0 || (ma & mb) != 0U) continue;
      out.at(ma | mb) += wedge_sign(ma, mb) * x * y;
    }
  }
  return out;
}

NumericForm insert_frame(int index0, const NumericForm& a) {
  NumericForm out(a.dim, a.degree - 1);
  if (a.degree == 0) return out;
  const std::uint32_t bit = 1U << index0;
  for (auto m : masks_of_size(a.dim, a.degree)) {
    if ((m & bit) == 0U || a.at(m) == 0.0) continue;
    const int below = std::popcount(m & (bit - 1U));
    out.at(m & ~bit) += ((below & 1) ? -1.0 : 1.0) * a.at(m);
  }
  return out;
}

void axpy(double s, const NumericForm& x, NumericForm& y) {
  for (std::size_t i = 0; i < y.coeffs.size(); ++i) y.coeffs[i] += s * x.coeffs[i];
}

NumericForm basis1(int n, int j) {
  NumericForm e(n, 1);
  e.at(1U << j) = 1.0;
  return e;
}

/// dα = Σ_j e^j ∧ ∂_j α from the partials of α.
NumericForm exterior_derivative(const std::vector<NumericForm>& partials, int n, int degree) {
  NumericForm out(n, degree + 1);
  for (int j = 0; j < n; ++j) axpy(1.0, wedge(basis1(n, j), partials[static_cast<std::size_t>(j)]), out);
  return out;
}

}  // namespace

NumericForm::NumericForm(int n, int p) : dim(n), degree(p), coeffs(std::size_t{1} << n, 0.0) {}

double NumericForm::max_abs() const {
  double m = 0.0;
  for (double c : coeffs) m = std::max(m, std::abs(c));
  return m;
}

NumericVectorForm::NumericVectorForm(int n, int p) : dim(n), degree(p), components(static_cast<std::size_t>(n), NumericForm(n, p)) {}

double NumericVectorForm::max_abs() const {
  double m = 0.0;
  for (const auto& c : components) m = std::max(m, c.max_abs());
  return m;
}

double NumericVectorForm::distance(const NumericVectorForm& other) const {
  double m = 0.0;
  for (std::size_t i = 0; i < components.size(); ++i)
    for (std::size_t j = 0; j < components[i].coeffs.size(); ++j)
      m = std::max(m, std::abs(components[i].coeffs[j] - other.components[i].coeffs[j]));
  return m;
}

std::string NumericVectorForm::to_string(int digits) const {
  const double cutoff = std::pow(10.0, -digits);
  std::string out;
  char buf[64];
  for (int i = 0; i < dim; ++i) {
    std::string comp;
    for (auto m : masks_of_size(dim, degree)) {
      const double c = components[static_cast<std::size_t>(i)].at(m);
      if (std::abs(c) < cutoff) continue;
      std::snprintf(buf, sizeof buf, "%.*g", digits, std::abs(c));
      if (!comp.empty()) comp += c < 0 ? " - " : " + ";
      else if (c < 0) comp += "-";
      comp += buf;
      comp += " " + exterior::IndexSet(m).to_string();
    }
    if (comp.empty()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + comp + ")\xE2\x8A\x97" "e" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

NumericForm evaluate_form(const DifferentialForm& a, std::span<const double> point) {
  if (a.space().flavor != Flavor::affine) throw DomainError("evaluate_form: affine forms only");
  NumericForm out(a.space().dim, a.degree());
  if (a.degree() < 0 || a.degree() > a.space().dim) return out;
  for (const auto& [index, coeff] : a.terms()) out.at(index.bits()) = coeff.evaluate_numeric(point).real();
  return out;
}

NumericForm to_numeric(const DifferentialForm& constant_form) {
  if (!constant_form.has_constant_coefficients()) throw DomainError("to_numeric: coefficients are not constant");
  const std::vector<double> origin(static_cast<std::size_t>(constant_form.space().dim), 0.0);
  return evaluate_form(constant_form, origin);
}

NumericForm pullback(const Square7& a, const NumericForm& form) {
  const Mat7 m = to_eigen(a);
  NumericForm out(form.dim, form.degree);
  const auto masks = masks_of_size(form.dim, form.degree);
  for (auto mi : masks) {
    const double c = form.at(mi);
    if (c == 0.0) continue;
    std::vector<int> rows;
    for (int r = 0; r < kDim; ++r)
      if ((mi >> r) & 1U) rows.push_back(r);
    for (auto mj : masks) {
      std::vector<int> cols;
      for (int s = 0; s < kDim; ++s)
        if ((mj >> s) & 1U) cols.push_back(s);
      const auto p = static_cast<Eigen::Index>(rows.size());
      Eigen::MatrixXd minor(p, p);
      for (Eigen::Index x = 0; x < p; ++x)
        for (Eigen::Index y = 0; y < p; ++y) minor(x, y) = m(rows[static_cast<std::size_t>(x)], cols[static_cast<std::size_t>(y)]);
      out.at(mj) += c * (p == 0 ? 1.0 : minor.determinant());
    }
  }
  return out;
}

NumericVectorForm pullback(const Square7& a, const NumericVectorForm& k) {
  const Mat7 inv = to_eigen(a).inverse();
  NumericVectorForm out(k.dim, k.degree);
  for (int i = 0; i < kDim; ++i) {
    const NumericForm pulled = pullback(a, k.components[static_cast<std::size_t>(i)]);
    for (int j = 0; j < kDim; ++j) axpy(inv(j, i), pulled, out.components[static_cast<std::size_t>(j)]);
  }
  return out;
}

NumericForm hodge_star(const Square7& g, const NumericForm& form) {
  // With M = L^{-T} for g = L L^T, M^T g M = 1 and det M > 0, so
  // *_g α = (M^{-1})^* *_flat (M^* α).
  Eigen::LLT<Mat7> llt(to_eigen(g));
  if (llt.info() != Eigen::Success) throw DomainError("hodge_star: metric is not positive definite");
  const Mat7 lower = llt.matrixL();
  const Mat7 m = lower.transpose().inverse();
  const NumericForm pulled = pullback(from_eigen(m), form);
  NumericForm flat(form.dim, form.dim - form.degree);
  const std::uint32_t full = (1U << form.dim) - 1U;
  for (auto mi : masks_of_size(form.dim, form.degree)) {
    if (pulled.at(mi) == 0.0) continue;
    flat.at(full & ~mi) += wedge_sign(mi, full & ~mi) * pulled.at(mi);
  }
  return pullback(from_eigen(m.inverse()), flat);
}

Square7 metric_from_3form(const NumericForm& phi) {
  if (phi.dim != kDim || phi.degree != 3) throw DomainError("metric_from_3form: expects a 3-form in dimension 7");
  std::vector<NumericForm> inserted;
  for (int i = 0; i < kDim; ++i) inserted.push_back(insert_frame(i, phi));
  const std::uint32_t full = (1U << kDim) - 1U;
  Mat7 b;
  for (int i = 0; i < kDim; ++i) {
    for (int j = i; j < kDim; ++j) {
      const double v = wedge(wedge(inserted[static_cast<std::size_t>(i)], inserted[static_cast<std::size_t>(j)]), phi).at(full) / 6.0;
      b(i, j) = v;
      b(j, i) = v;
    }
  }
  Eigen::SelfAdjointEigenSolver<Mat7> eig(b);
  if (eig.eigenvalues().minCoeff() <= kPositivityTolerance) {
    throw DomainError("metric_from_3form: φ is not a positive 3-form (B is not positive definite)");
  }
  const double det = b.determinant();
  return from_eigen(std::pow(det, -1.0 / 9.0) * b);
}

PointwiseMetric metric_from_3form(const G2Structure& g2, std::span<const double> point) {
  PointwiseMetric out;
  out.point.assign(point.begin(), point.end());
  out.matrix = metric_from_3form(evaluate_form(g2.phi, point));
  return out;
}

NumericVectorForm cayley_map(const NumericForm& phi) {
  const Square7 g = metric_from_3form(phi);
  const Mat7 ginv = to_eigen(g).inverse();
  const NumericForm psi = hodge_star(g, phi);
  NumericVectorForm out(kDim, 3);
  for (int i = 0; i < kDim; ++i) {
    const NumericForm inserted = insert_frame(i, psi);
    for (int j = 0; j < kDim; ++j) {
      if (ginv(i, j) != 0.0) axpy(ginv(i, j), inserted, out.components[static_cast<std::size_t>(j)]);
    }
  }
  return out;
}

NumericVectorForm cayley_map(const G2Structure& g2, std::span<const double> point) {
  return cayley_map(evaluate_form(g2.phi, point));
}

NumericVectorForm jet_fn_bracket(const NumericVectorForm& k, const std::vector<NumericVectorForm>& dk,
                                 const NumericVectorForm& l, const std::vector<NumericVectorForm>& dl) {
  const int n = k.dim;
  const bool odd = (k.degree % 2) != 0;
  NumericVectorForm out(n, k.degree + l.degree);
  auto partials = [n](const std::vector<NumericVectorForm>& d, int comp) {
    std::vector<NumericForm> p;
    for (int j = 0; j < n; ++j) p.push_back(d[static_cast<std::size_t>(j)].components[static_cast<std::size_t>(comp)]);
    return p;
  };
  std::vector<NumericForm> dalpha;
  std::vector<NumericForm> dbeta;
  for (int a = 0; a < n; ++a) {
    dalpha.push_back(exterior_derivative(partials(dk, a), n, k.degree));
    dbeta.push_back(exterior_derivative(partials(dl, a), n, l.degree));
  }
  for (int a = 0; a < n; ++a) {
    const NumericForm& alpha = k.components[static_cast<std::size_t>(a)];
    for (int b = 0; b < n; ++b) {
      const NumericForm& beta = l.components[static_cast<std::size_t>(b)];
      auto& into_a = out.components[static_cast<std::size_t>(a)];
      auto& into_b = out.components[static_cast<std::size_t>(b)];
      axpy(1.0, wedge(alpha, dl[static_cast<std::size_t>(a)].components[static_cast<std::size_t>(b)]), into_b);
      axpy(-1.0, wedge(dk[static_cast<std::size_t>(b)].components[static_cast<std::size_t>(a)], beta), into_a);
      const double s = odd ? -1.0 : 1.0;
      if (l.degree > 0) axpy(s, wedge(dalpha[static_cast<std::size_t>(a)], insert_frame(a, beta)), into_b);
      if (k.degree > 0) axpy(s, wedge(insert_frame(b, alpha), dbeta[static_cast<std::size_t>(b)]), into_a);
    }
  }
  return out;
}

NumericVectorForm pointwise_fn_square(const std::function<NumericVectorForm(std::span<const double>)>& field,
                                      std::span<const double> point, double h) {
  const NumericVectorForm k = field(point);
  std::vector<NumericVectorForm> dk;
  std::vector<double> shifted(point.begin(), point.end());
  for (std::size_t j = 0; j < shifted.size(); ++j) {
    const double x = shifted[j];
    shifted[j] = x + h;
    const NumericVectorForm plus = field(shifted);
    shifted[j] = x - h;
    const NumericVectorForm minus = field(shifted);
    shifted[j] = x;
    NumericVectorForm d(k.dim, k.degree);
    for (std::size_t c = 0; c < d.components.size(); ++c) {
      axpy(0.5 / h, plus.components[c], d.components[c]);
      axpy(-0.5 / h, minus.components[c], d.components[c]);
    }
    dk.push_back(std::move(d));
  }
  return jet_fn_bracket(k, dk, k, dk);
}

}  // namespace fncalc::g2
