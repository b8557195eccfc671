#include "common.hpp"

#include <regex>
#include <stdexcept>

#include "fncalc/exterior/text.hpp"
#include "fncalc/g2/auxiliary.hpp"
#include "fncalc/g2/structure.hpp"

namespace fncalc::cli {

int infer_dimension(const std::string& text) {
  int dim = 0;
  auto bump = [&](const std::string& digits) { dim = std::max(dim, std::stoi(digits)); };
  static const std::regex basis(R"(e\{([0-9,\s]+)\})");
  static const std::regex single(R"(e_?([0-9]+))");
  static const std::regex variable(R"(x([0-9]+))");
  static const std::regex frequency(R"(<([-0-9,\s]+)>)");
  static const std::regex number(R"([0-9]+)");
  for (std::sregex_iterator it(text.begin(), text.end(), basis), end; it != end; ++it) {
    const std::string inner = (*it)[1];
    for (std::sregex_iterator n(inner.begin(), inner.end(), number); n != end; ++n) bump(n->str());
  }
  for (const auto* re : {&single, &variable}) {
    for (std::sregex_iterator it(text.begin(), text.end(), *re), end; it != end; ++it) bump((*it)[1]);
  }
  for (std::sregex_iterator it(text.begin(), text.end(), frequency), end; it != end; ++it) {
    const std::string inner = (*it)[1];
    int count = 1;
    for (char c : inner) count += c == ',' ? 1 : 0;
    dim = std::max(dim, count);
  }
  return std::max(dim, 1);
}

PsiChoice resolve_psi(const std::string& psi, std::optional<int> dim, bool torus, int kahler_default) {
  auto space_of = [&](int n) { return torus ? ModelSpace::toroidal(n) : ModelSpace::affine(n); };
  if (psi == "star-phi") {
    if (dim && *dim != 7) throw std::invalid_argument("star-phi lives in dimension 7");
    return {"star-phi", g2::star_phi(g2::standard_phi(space_of(7)))};
  }
  if (psi == "spin7") {
    if (dim && *dim != 8) throw std::invalid_argument("spin7 lives in dimension 8");
    return {"spin7", g2::spin7_form(space_of(8))};
  }
  if (psi == "kahler") {
    const int n = dim.value_or(kahler_default);
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("kahler needs an even dimension");
    return {"kahler", g2::kahler_form(space_of(n))};
  }
  const int n = dim.value_or(infer_dimension(psi));
  return {psi, exterior::parse_form(psi, space_of(n))};
}

}  // namespace fncalc::cli
