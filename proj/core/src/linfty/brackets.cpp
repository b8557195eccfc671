#include "fncalc/linfty/brackets.hpp"

#include <algorithm>

#include "fncalc/exterior/text.hpp"

namespace fncalc::linfty {

using exact::ExactScalar;
using exact::Rational;
using exterior::CoefficientFunction;
using exterior::DomainError;
using exterior::Exponent;
using exterior::IndexSet;

namespace {

int parity(const NormalValuedForm& a) { return ((a.degree() % 2) + 2) % 2; }

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

ExactScalar random_scalar(std::mt19937_64& rng) {
  int num = uniform(rng, -3, 2);
  if (num >= 0) ++num;  // skip zero
  return ExactScalar(Rational(num, uniform(rng, 1, 3)));
}

Exponent random_monomial(std::mt19937_64& rng, int vars, int max_degree) {
  Exponent e{};
  const int degree = uniform(rng, 0, max_degree);
  for (int i = 0; i < degree; ++i) ++e[static_cast<std::size_t>(uniform(rng, 0, vars - 1))];
  return e;
}

IndexSet random_basis(std::mt19937_64& rng, int n, int p) {
  const auto sets = exterior::basis_sets(n, p);
  return sets[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(sets.size()) - 1))];
}

/// All monomials in `vars` variables of total degree <= max_degree.
std::vector<Exponent> monomials(int vars, int max_degree) {
  std::vector<Exponent> out{Exponent{}};
  std::vector<Exponent> frontier{Exponent{}};
  for (int d = 1; d <= max_degree; ++d) {
    std::vector<Exponent> next;
    for (const auto& e : frontier) {
      // Only raise variables at or after the last one used, so each monomial appears once.
      int last = 0;
      for (int j = 0; j < vars; ++j)
        if (e[static_cast<std::size_t>(j)] != 0) last = j;
      for (int j = last; j < vars; ++j) {
        Exponent f = e;
        ++f[static_cast<std::size_t>(j)];
        next.push_back(f);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

std::string describe(const FlatAssociativeModel& model, const std::vector<NormalValuedForm>& args) {
  std::string out;
  for (const auto& a : args) {
    if (!out.empty()) out += " ; ";
    out += to_string(model, a);
  }
  return out;
}

void record(CheckCount& c, bool ok, const std::string& what) {
  ++c.checked;
  if (ok) return;
  if (c.failed == 0) c.first_failure = what;
  ++c.failed;
}

}  // namespace

NormalValuedForm multibracket(const FlatAssociativeModel& model, const std::vector<NormalValuedForm>& args) {
  VectorValuedForm k = exp_pullback(model.chi());
  for (const auto& a : args) {
    if (k.is_zero()) break;
    k = exterior::fn_bracket(k, exp_pullback(vertical_lift(model, a)));
  }
  int degree = model.chi().degree();
  for (const auto& a : args) degree += a.degree();
  if (k.is_zero()) return NormalValuedForm(model, degree);
  return project_P(model, k);
}

NormalValuedForm mk_via_lie(const FlatAssociativeModel& model, const std::vector<NormalValuedForm>& fields) {
  for (const auto& v : fields) {
    if (v.degree() != 0 && !v.is_zero()) throw DomainError("mk_via_lie: inputs must be normal vector fields (degree 0)");
  }
  VectorValuedForm k = exp_pullback(model.chi());
  for (auto it = fields.rbegin(); it != fields.rend(); ++it) {
    const auto x = vertical_lift(model, -NormalValuedForm(model, 0, it->components())).to_vector_field();
    k = exterior::lie_tensor(x, k);
  }
  return project_P(model, k);
}

std::vector<std::vector<int>> shuffles(int k, int l) {
  const int n = k + l;
  std::vector<std::vector<int>> out;
  std::vector<bool> pick(static_cast<std::size_t>(n), false);
  std::fill(pick.begin(), pick.begin() + k, true);
  // prev_permutation over a sorted-descending mask enumerates the k-subsets in lexicographic order.
  do {
    std::vector<int> sigma;
    for (int i = 0; i < n; ++i)
      if (pick[static_cast<std::size_t>(i)]) sigma.push_back(i);
    for (int i = 0; i < n; ++i)
      if (!pick[static_cast<std::size_t>(i)]) sigma.push_back(i);
    out.push_back(std::move(sigma));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

int koszul_sign(const std::vector<int>& sigma, const std::vector<int>& parities) {
  int exponent = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    for (std::size_t j = i + 1; j < sigma.size(); ++j) {
      if (sigma[i] > sigma[j]) {
        exponent += parities[static_cast<std::size_t>(sigma[i])] * parities[static_cast<std::size_t>(sigma[j])];
      }
    }
  }
  return (exponent % 2 == 0) ? 1 : -1;
}

NormalValuedForm generalized_jacobi(const FlatAssociativeModel& model, const std::vector<NormalValuedForm>& args) {
  const int n = static_cast<int>(args.size());
  std::vector<int> parities;
  for (const auto& a : args) parities.push_back(parity(a));
  NormalValuedForm total(model, 0);
  for (int k = 0; k <= n; ++k) {
    for (const auto& sigma : shuffles(k, n - k)) {
      std::vector<NormalValuedForm> inner;
      for (int i = 0; i < k; ++i) inner.push_back(args[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])]);
      std::vector<NormalValuedForm> outer{multibracket(model, inner)};
      for (int i = k; i < n; ++i) outer.push_back(args[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])]);
      const NormalValuedForm term = multibracket(model, outer);
      total = total + ExactScalar(koszul_sign(sigma, parities)) * term;
    }
  }
  return total;
}

NormalValuedForm explicit_jacobi(const FlatAssociativeModel& model, const std::vector<NormalValuedForm>& args) {
  auto m = [&](std::vector<NormalValuedForm> xs) { return multibracket(model, xs); };
  auto sign = [](int e) { return ExactScalar((e % 2 == 0) ? 1 : -1); };
  switch (args.size()) {
    case 1: return m({m({args[0]})});
    case 2: {
      const auto& a = args[0];
      const auto& b = args[1];
      const int ab = parity(a) * parity(b);
      return m({m({a, b})}) + m({m({a}), b}) + sign(ab) * m({m({b}), a});
    }
    case 3: {
      const auto& a = args[0];
      const auto& b = args[1];
      const auto& c = args[2];
      const int pa = parity(a);
      const int pb = parity(b);
      const int pc = parity(c);
      return m({m({a, b, c})}) + m({m({a, b}), c}) + sign(pb * pc) * m({m({a, c}), b}) +
             sign(pa * (pb + pc)) * m({m({b, c}), a}) + m({m({a}), b, c}) + sign(pa * pb) * m({m({b}), a, c}) +
             sign((pa + pb) * pc) * m({m({c}), a, b});
    }
    default: throw DomainError("explicit_jacobi: written-out identities exist for n = 1, 2, 3 only");
  }
}

NormalValuedForm random_normal_form(const FlatAssociativeModel& model, int degree, std::mt19937_64& rng, int terms,
                                    int max_poly) {
  const auto& space = model.plane_space();
  NormalValuedForm out(model, degree);
  const int count = uniform(rng, 1, terms);
  for (int t = 0; t < count; ++t) {
    const int a = uniform(rng, 0, 3);
    const auto coeff = CoefficientFunction::term(space, random_monomial(rng, 3, max_poly), random_scalar(rng));
    const auto alpha = DifferentialForm::basis(space, random_basis(rng, 3, degree), coeff);
    out = out + NormalValuedForm::decomposable(model, alpha, a);
  }
  return out;
}

VectorValuedForm random_kernel_element(const FlatAssociativeModel& model, std::mt19937_64& rng, int terms) {
  const auto& space = model.ambient();
  const int degree = uniform(rng, 0, 2);
  VectorValuedForm out(space, degree);
  const int count = uniform(rng, 1, terms);
  for (int t = 0; t < count; ++t) {
    const bool tangential = uniform(rng, 0, 1) == 0;
    Exponent mono = random_monomial(rng, 7, 2);
    IndexSet basis = random_basis(rng, 7, degree);
    int direction = 0;
    if (tangential) {
      direction = model.plane()[static_cast<std::size_t>(uniform(rng, 0, 2))];
    } else {
      direction = model.normal()[static_cast<std::size_t>(uniform(rng, 0, 3))];
      // Force the term to vanish on L: a normal coordinate factor, or a normal coframe index.
      const int nj = model.normal()[static_cast<std::size_t>(uniform(rng, 0, 3))];
      if (degree > 0 && uniform(rng, 0, 1) == 0 && !basis.contains(nj)) {
        const auto idx = basis.indices();
        basis = basis.without(idx[static_cast<std::size_t>(uniform(rng, 0, degree - 1))]).with(nj);
      } else {
        ++mono[static_cast<std::size_t>(nj)];
      }
    }
    const auto coeff = CoefficientFunction::term(space, mono, random_scalar(rng));
    out = out + VectorValuedForm::decomposable(DifferentialForm::basis(space, basis, coeff), direction);
  }
  return out;
}

bool in_kernel(const FlatAssociativeModel& model, const VectorValuedForm& k) { return project_P(model, k).is_zero(); }

VDataReport vdata_check(const FlatAssociativeModel& model, std::uint64_t seed, int random_samples) {
  VDataReport report;
  std::mt19937_64 rng(seed);

  // (a) Lifted elements commute: all single terms with coefficient degree <= 2
  // and form degree <= 2, pairwise, then random sums.
  std::vector<VectorValuedForm> lifts;
  std::vector<std::string> names;
  for (int p = 0; p <= 2; ++p) {
    for (auto set : exterior::basis_sets(3, p)) {
      for (const auto& mono : monomials(3, 2)) {
        for (int a = 0; a < 4; ++a) {
          const auto coeff = CoefficientFunction::term(model.plane_space(), mono, ExactScalar(1));
          const auto omega =
              NormalValuedForm::decomposable(model, DifferentialForm::basis(model.plane_space(), set, coeff), a);
          lifts.push_back(vertical_lift(model, omega));
        }
      }
    }
  }
  for (std::size_t i = 0; i < lifts.size(); ++i) {
    for (std::size_t j = i; j < lifts.size(); ++j) {
      const bool ok = exterior::fn_bracket(lifts[i], lifts[j]).is_zero();
      record(report.abelian, ok, ok ? "" : "[" + exterior::to_string(lifts[i]) + ", " + exterior::to_string(lifts[j]) + "]");
    }
  }
  for (int s = 0; s < random_samples; ++s) {
    const auto a = random_normal_form(model, uniform(rng, 0, 2), rng);
    const auto b = random_normal_form(model, uniform(rng, 0, 2), rng);
    const bool ok = exterior::fn_bracket(vertical_lift(model, a), vertical_lift(model, b)).is_zero();
    record(report.abelian, ok, ok ? "" : describe(model, {a, b}));
  }

  // (b) ker P is closed: single terms of coefficient degree <= 1 and form
  // degree <= 1 lying in ker P, pairwise, then random sums.
  std::vector<VectorValuedForm> kernel;
  for (int p = 0; p <= 1; ++p) {
    for (auto set : exterior::basis_sets(7, p)) {
      for (const auto& mono : monomials(7, 1)) {
        for (int dir = 0; dir < 7; ++dir) {
          const auto coeff = CoefficientFunction::term(model.ambient(), mono, ExactScalar(1));
          const auto k = VectorValuedForm::decomposable(DifferentialForm::basis(model.ambient(), set, coeff), dir);
          if (in_kernel(model, k)) kernel.push_back(k);
        }
      }
    }
  }
  for (std::size_t i = 0; i < kernel.size(); ++i) {
    for (std::size_t j = i; j < kernel.size(); ++j) {
      const bool ok = in_kernel(model, exterior::fn_bracket(kernel[i], kernel[j]));
      record(report.kernel_closed, ok,
             ok ? "" : "[" + exterior::to_string(kernel[i]) + ", " + exterior::to_string(kernel[j]) + "]");
    }
  }
  for (int s = 0; s < random_samples; ++s) {
    const auto a = random_kernel_element(model, rng);
    const auto b = random_kernel_element(model, rng);
    const bool ok = in_kernel(model, exterior::fn_bracket(a, b));
    record(report.kernel_closed, ok, ok ? "" : "[" + exterior::to_string(a) + ", " + exterior::to_string(b) + "]");
  }

  // (c) [χ, χ] = 0.
  const auto chi = exp_pullback(model.chi());
  report.chi_square_zero = exterior::fn_bracket(chi, chi).is_zero();
  report.chi_in_kernel = in_kernel(model, chi);
  return report;
}

bool JacobiReport::ok() const {
  auto all = [](const std::vector<CheckCount>& v) {
    return std::all_of(v.begin(), v.end(), [](const CheckCount& c) { return c.ok(); });
  };
  return all(by_arity) && all(explicit_form) && symmetry.ok() && lie_agreement.ok();
}

JacobiReport jacobi_suite(const FlatAssociativeModel& model, int max_arity, int samples, std::uint64_t seed) {
  JacobiReport report;
  std::mt19937_64 rng(seed);
  // Mostly degree-0 inputs, where the brackets are nonzero; some of degree 1, 2.
  auto random_degree = [&] { return std::max(0, uniform(rng, -2, 2)); };
  auto draw = [&](int count, bool fields_only) {
    std::vector<NormalValuedForm> args;
    for (int i = 0; i < count; ++i) args.push_back(random_normal_form(model, fields_only ? 0 : random_degree(), rng));
    return args;
  };

  for (int n = 1; n <= max_arity; ++n) {
    CheckCount shuffle_form;
    CheckCount written;
    for (int s = 0; s < samples; ++s) {
      const auto args = draw(n, false);
      const auto total = generalized_jacobi(model, args);
      record(shuffle_form, total.is_zero(), total.is_zero() ? "" : describe(model, args));
      if (n <= 3) {
        const auto e = explicit_jacobi(model, args);
        record(written, e.is_zero(), e.is_zero() ? "" : describe(model, args));
      }
    }
    report.by_arity.push_back(shuffle_form);
    if (n <= 3) report.explicit_form.push_back(written);
  }

  for (int k = 1; k <= max_arity; ++k) {
    std::size_t nonzero = 0;
    for (int s = 0; s < samples; ++s) {
      const auto fields = draw(k, true);
      const auto via_brackets = multibracket(model, fields);
      if (!via_brackets.is_zero()) ++nonzero;
      const bool ok = via_brackets == mk_via_lie(model, fields);
      record(report.lie_agreement, ok, ok ? "" : describe(model, fields));
      if (k < 2) continue;
      const auto args = draw(k, false);
      const auto base = multibracket(model, args);
      for (int i = 0; i + 1 < k; ++i) {
        auto swapped = args;
        std::swap(swapped[static_cast<std::size_t>(i)], swapped[static_cast<std::size_t>(i + 1)]);
        const int e = parity(args[static_cast<std::size_t>(i)]) * parity(args[static_cast<std::size_t>(i + 1)]);
        const bool sym = base == ExactScalar(e % 2 == 0 ? 1 : -1) * multibracket(model, swapped);
        record(report.symmetry, sym, sym ? "" : describe(model, args));
      }
    }
    report.nonzero_brackets.push_back(nonzero);
  }
  return report;
}

}  // namespace fncalc::linfty
