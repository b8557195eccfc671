#include "fncalc/exterior/text.hpp"

#include <cctype>
#include <string_view>
#include <vector>

namespace fncalc::exterior {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::invalid_argument(message + " at position " + std::to_string(position)), position_(position) {}

namespace {

constexpr std::string_view kTensor = "\xE2\x8A\x97";  // U+2297

struct ParsedTerm {
  ExactScalar scalar{1};
  Exponent exponent{};
  std::optional<IndexSet> basis;  // empty for a 0-form term
  std::size_t start = 0;
};

class Parser {
 public:
  Parser(std::string_view text, const ModelSpace& space) : text_(text), space_(space) {}

  std::size_t pos() const { return pos_; }
  void reset(std::size_t p) { pos_ = p; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool starts_with(std::string_view s) {
    skip_ws();
    return text_.substr(pos_).starts_with(s);
  }
  bool accept(std::string_view s) {
    if (!starts_with(s)) return false;
    pos_ += s.size();
    return true;
  }
  void expect(std::string_view s) {
    if (!accept(s)) fail("expected '" + std::string(s) + "'");
  }
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }
  [[noreturn]] void fail_at(const std::string& message, std::size_t at) const { throw ParseError(message, at); }

  std::string_view digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  long number() {
    skip_ws();
    const std::size_t start = pos_;
    std::string_view d = digits();
    if (d.empty()) fail("expected a number");
    if (d.size() > 9) fail_at("number too large", start);
    return std::stol(std::string(d));
  }

  long signed_number() {
    skip_ws();
    const bool negative = accept("-");
    const long v = number();
    return negative ? -v : v;
  }

  int label() {
    skip_ws();
    const std::size_t start = pos_;
    const long v = number();
    if (v < 1 || v > space_.dim) {
      fail_at("index " + std::to_string(v) + " out of range for " + space_.name(), start);
    }
    return static_cast<int>(v) - 1;
  }

  /// A scalar literal at the cursor, if one starts here.
  std::optional<ExactScalar> scalar() {
    skip_ws();
    if (pos_ >= text_.size()) return std::nullopt;
    const std::size_t start = pos_;
    const char c = text_[pos_];
    if (c == '(') {
      const std::size_t close = text_.find(')', pos_);
      if (close == std::string_view::npos) fail("unbalanced parenthesis");
      pos_ = close + 1;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        if (digits().empty()) fail("expected a denominator");
      }
      if (pos_ < text_.size() && text_[pos_] == 'i') ++pos_;
    } else if (c == 'i') {
      ++pos_;
    } else {
      return std::nullopt;
    }
    try {
      return ExactScalar::parse(text_.substr(start, pos_ - start));
    } catch (const std::exception& e) {
      fail_at(std::string("malformed scalar: ") + e.what(), start);
    }
  }

  bool at_factor() { return starts_with("x") || starts_with("exp("); }

  void factor(Exponent& exponent) {
    skip_ws();
    const std::size_t start = pos_;
    if (accept("exp(")) {
      if (space_.flavor != Flavor::toroidal) fail_at("Fourier mode on the affine space " + space_.name(), start);
      expect("i");
      expect("<");
      std::vector<long> k;
      k.push_back(signed_number());
      while (accept(",")) k.push_back(signed_number());
      expect(">");
      expect(")");
      if (k.size() != static_cast<std::size_t>(space_.dim)) {
        fail_at("frequency vector must have " + std::to_string(space_.dim) + " entries", start);
      }
      for (std::size_t j = 0; j < k.size(); ++j) {
        const long total = exponent[j] + k[j];
        if (total > 32767 || total < -32768) fail_at("frequency too large", start);
        exponent[j] = static_cast<std::int16_t>(total);
      }
      return;
    }
    expect("x");
    if (space_.flavor != Flavor::affine) fail_at("polynomial coordinate on the torus " + space_.name(), start);
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected a coordinate label after 'x'");
    }
    const int j = label();
    long power = 1;
    if (accept("^")) power = number();
    const long total = exponent[static_cast<std::size_t>(j)] + power;
    if (total > 32767) fail_at("exponent too large", start);
    exponent[static_cast<std::size_t>(j)] = static_cast<std::int16_t>(total);
  }

  std::optional<IndexSet> basis() {
    skip_ws();
    const std::size_t start = pos_;
    if (accept("e{")) {
      std::vector<int> labels{label()};
      while (accept(",")) {
        const std::size_t at = pos_;
        labels.push_back(label());
        if (labels.back() <= labels[labels.size() - 2]) fail_at("basis indices must be strictly increasing", at);
      }
      expect("}");
      IndexSet set;
      for (int j : labels) set = set.with(j);
      return set;
    }
    if (pos_ < text_.size() && text_[pos_] == '1') {
      const std::size_t next = pos_ + 1;
      const bool boundary = next >= text_.size() || !(std::isdigit(static_cast<unsigned char>(text_[next])) ||
                                                      text_[next] == '/' || text_[next] == 'i');
      if (boundary) {
        ++pos_;
        return IndexSet{};
      }
    }
    reset(start);
    return std::nullopt;
  }

  ParsedTerm term() {
    skip_ws();
    ParsedTerm t;
    t.start = pos_;
    bool have_coeff = false;
    if (auto s = scalar()) {
      t.scalar = *s;
      have_coeff = true;
      if (accept("*")) {
        factor(t.exponent);
        while (accept("*")) factor(t.exponent);
      }
    } else if (at_factor()) {
      have_coeff = true;
      factor(t.exponent);
      while (accept("*")) factor(t.exponent);
    }
    auto b = basis();
    if (b && b->empty()) b.reset();
    if (!have_coeff && !b) fail("expected a term");
    t.basis = b;
    return t;
  }

  /// form := term (('+'|'-') term)*; stops before ')' or '⊗' or end.
  std::vector<ParsedTerm> form_terms() {
    std::vector<ParsedTerm> terms;
    bool negative = accept("-");
    for (;;) {
      ParsedTerm t = term();
      if (negative) t.scalar = -t.scalar;
      terms.push_back(std::move(t));
      if (accept("+")) {
        negative = false;
      } else if (accept("-")) {
        negative = true;
      } else {
        break;
      }
    }
    return terms;
  }

 private:
  std::string_view text_;
  const ModelSpace& space_;
  std::size_t pos_ = 0;
};

DifferentialForm assemble(const std::vector<ParsedTerm>& parsed, const ModelSpace& space,
                          std::optional<int> degree, const Parser& parser) {
  std::optional<int> seen;
  std::vector<DifferentialForm::Term> terms;
  for (const auto& t : parsed) {
    const int d = t.basis ? t.basis->size() : 0;
    if (t.scalar.is_zero()) {
      if (t.basis) {
        if (seen && *seen != d) parser.fail_at("terms of different degrees", t.start);
        seen = d;
      }
      continue;
    }
    if (seen && *seen != d) parser.fail_at("terms of different degrees", t.start);
    seen = d;
    terms.emplace_back(t.basis.value_or(IndexSet{}), CoefficientFunction::term(space, t.exponent, t.scalar));
  }
  if (degree && seen && *degree != *seen) {
    throw ParseError("expected a " + std::to_string(*degree) + "-form, found degree " + std::to_string(*seen), 0);
  }
  const int deg = seen.value_or(degree.value_or(0));
  return DifferentialForm::from_terms(space, deg, std::move(terms));
}

std::string monomial_text(const Exponent& e, const ModelSpace& space) {
  std::string out;
  if (space.flavor == Flavor::toroidal) {
    bool nonzero = false;
    for (int j = 0; j < space.dim; ++j) nonzero = nonzero || e[static_cast<std::size_t>(j)] != 0;
    if (!nonzero) return out;
    out = "exp(i<";
    for (int j = 0; j < space.dim; ++j) {
      if (j > 0) out += ',';
      out += std::to_string(e[static_cast<std::size_t>(j)]);
    }
    return out + ">)";
  }
  for (int j = 0; j < space.dim; ++j) {
    const int p = e[static_cast<std::size_t>(j)];
    if (p == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(j + 1);
    if (p > 1) out += '^' + std::to_string(p);
  }
  return out;
}

bool is_negative(const ExactScalar& c) {
  return c.real().sign() < 0 || (c.real().is_zero() && c.imag().sign() < 0);
}

}  // namespace

DifferentialForm parse_form(std::string_view text, const ModelSpace& space, std::optional<int> degree) {
  Parser p(text, space);
  if (p.at_end()) p.fail("empty form");
  auto terms = p.form_terms();
  if (!p.at_end()) p.fail("unexpected character '" + std::string(1, p.peek()) + "'");
  return assemble(terms, space, degree, p);
}

std::string to_string(const DifferentialForm& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [index, coeff] : a.terms()) {
    const std::string basis = index.empty() ? std::string() : index.to_string();
    for (const auto& [exponent, value] : coeff.terms()) {
      const bool negative = is_negative(value);
      const ExactScalar magnitude = negative ? -value : value;
      const std::string mono = monomial_text(exponent, a.space());
      std::string body;
      if (!magnitude.is_one() || mono.empty()) body = magnitude.to_string();
      if (!mono.empty()) body += body.empty() ? mono : "*" + mono;
      if (magnitude.is_one() && mono.empty() && !basis.empty()) body.clear();
      std::string text = body;
      if (!basis.empty()) text += (body.empty() ? "" : " ") + basis;
      if (out.empty()) {
        out = negative ? "-" + text : text;
      } else {
        out += negative ? " - " : " + ";
        out += text;
      }
    }
  }
  return out;
}

VectorValuedForm parse_vector_form(std::string_view text, const ModelSpace& space, std::optional<int> degree) {
  Parser p(text, space);
  if (p.at_end()) p.fail("empty vector-valued form");
  if (p.accept("0") && p.at_end()) return VectorValuedForm(space, degree.value_or(0));
  p.reset(0);

  std::vector<std::vector<ParsedTerm>> per_component(static_cast<std::size_t>(space.dim));
  bool negative = p.accept("-");
  for (;;) {
    std::vector<ParsedTerm> terms;
    const std::size_t start = p.pos();
    bool grouped = false;
    if (p.accept("(")) {
      terms = p.form_terms();
      if (p.accept(")") && p.starts_with(kTensor)) {
        grouped = true;
      } else {
        p.reset(start);
      }
    }
    if (!grouped) terms = {p.term()};
    p.expect(kTensor);
    p.expect("e");
    p.accept("_");
    const int j = p.label();
    if (negative) {
      for (auto& t : terms) t.scalar = -t.scalar;
    }
    auto& bucket = per_component[static_cast<std::size_t>(j)];
    bucket.insert(bucket.end(), terms.begin(), terms.end());
    if (p.accept("+")) {
      negative = false;
    } else if (p.accept("-")) {
      negative = true;
    } else {
      break;
    }
  }
  if (!p.at_end()) p.fail("unexpected character '" + std::string(1, p.peek()) + "'");

  // All components share one degree; find it from any component that fixes it.
  std::vector<ParsedTerm> all;
  for (const auto& bucket : per_component) all.insert(all.end(), bucket.begin(), bucket.end());
  const int deg = assemble(all, space, degree, p).degree();
  std::vector<DifferentialForm> comps;
  comps.reserve(per_component.size());
  for (const auto& bucket : per_component) comps.push_back(assemble(bucket, space, deg, p));
  return VectorValuedForm(space, deg, std::move(comps));
}

std::string to_string(const VectorValuedForm& k) {
  std::string out;
  for (int j = 0; j < k.space().dim; ++j) {
    const auto& c = k.component(j);
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(c) + ")" + std::string(kTensor) + "e" + std::to_string(j + 1);
  }
  return out.empty() ? "0" : out;
}

}  // namespace fncalc::exterior
