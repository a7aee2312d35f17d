#include "nova/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace nova {

bool GradedLex::operator()(const Monomial& a, const Monomial& b) const {
  const auto da = std::accumulate(a.begin(), a.end(), 0u);
  const auto db = std::accumulate(b.begin(), b.end(), 0u);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Poly::Poly(const Scalar& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

Poly Poly::variable(std::vector<std::string> variables, std::size_t index) {
  if (variables.size() > kMaxPolyVariables)
    throw DimensionError("polynomials support at most " + std::to_string(kMaxPolyVariables) + " variables");
  if (index >= variables.size()) throw DimensionError("variable index out of range");
  Poly p;
  Monomial m(variables.size(), 0);
  m[index] = 1;
  p.vars_ = std::move(variables);
  p.terms_.emplace(std::move(m), Scalar(1));
  return p;
}

bool Poly::is_constant() const {
  for (const auto& [m, c] : terms_)
    for (auto e : m)
      if (e != 0) return false;
  return true;
}

Scalar Poly::constant_term() const {
  for (const auto& [m, c] : terms_)
    if (std::all_of(m.begin(), m.end(), [](unsigned e) { return e == 0; })) return c;
  return 0;
}

unsigned Poly::total_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, std::accumulate(m.begin(), m.end(), 0u));
  return d;
}

Scalar Poly::evaluate(std::span<const Scalar> values) const {
  if (values.size() != vars_.size()) throw DimensionError("evaluate: wrong number of values");
  Scalar sum = 0;
  for (const auto& [m, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (unsigned e = 0; e < m[i]; ++e) t *= values[i];
    sum += t;
  }
  return sum;
}

std::vector<std::string> Poly::merged(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  if (a == b) return a;
  std::vector<std::string> out = a;
  for (const auto& v : b)
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  if (out.size() > kMaxPolyVariables)
    throw DimensionError("polynomials support at most " + std::to_string(kMaxPolyVariables) + " variables");
  return out;
}

Poly Poly::over(const std::vector<std::string>& vars) const {
  if (vars == vars_) return *this;
  std::vector<std::size_t> where(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i)
    where[i] = static_cast<std::size_t>(std::find(vars.begin(), vars.end(), vars_[i]) - vars.begin());
  Poly p;
  p.vars_ = vars;
  for (const auto& [m, c] : terms_) {
    Monomial nm(vars.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) nm[where[i]] = m[i];
    p.terms_.emplace(std::move(nm), c);
  }
  return p;
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  const auto vars = merged(vars_, o.vars_);
  if (vars != vars_) *this = over(vars);
  const Poly rhs = o.over(vars);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly& Poly::operator*=(const Poly& o) {
  const auto vars = merged(vars_, o.vars_);
  const Poly lhs = over(vars);
  const Poly rhs = o.over(vars);
  Poly out;
  out.vars_ = vars;
  for (const auto& [ma, ca] : lhs.terms_)
    for (const auto& [mb, cb] : rhs.terms_) {
      Monomial m(vars.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  return *this = std::move(out);
}

Poly operator-(Poly a) {
  for (auto& [m, c] : a.terms_) c = -c;
  return a;
}

bool operator==(const Poly& a, const Poly& b) {
  const auto vars = Poly::merged(a.vars_, b.vars_);
  return a.over(vars).terms_ == b.over(vars).terms_;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest degree first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    const Scalar a = abs(c);
    if (mono.empty()) os << a.get_str();
    else if (a == 1) os << mono;
    else os << a.get_str() << "*" << mono;
    first = false;
  }
  return os.str();
}

bool poly_is_zero(const Poly& p) { return p.is_zero(); }

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::vector<std::string> vars) : text_(text), vars_(std::move(vars)) {}

  Poly parse() {
    skip();
    Poly sum;
    bool first = true;
    while (pos_ < text_.size()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Poly t = term();
      sum += negative ? -t : t;
      first = false;
      skip();
    }
    if (first) fail("empty expression");
    return sum;
  }

  const std::vector<std::string>& variables() const { return vars_; }

 private:
  Poly term() {
    Poly t = factor();
    skip();
    while (peek() == '*') {
      ++pos_;
      skip();
      t *= factor();
      skip();
    }
    return t;
  }

  Poly factor() {
    skip();
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const auto start = pos_;
      while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/'))
        ++pos_;
      return Poly(parse_scalar(text_.substr(start, pos_ - start)));
    }
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      const auto start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) {
        if (vars_.size() >= kMaxPolyVariables) fail("too many variables");
        vars_.push_back(name);
        it = vars_.end() - 1;
      }
      Poly v = Poly::variable(vars_, static_cast<std::size_t>(it - vars_.begin()));
      skip();
      if (peek() == '^') {
        ++pos_;
        skip();
        const auto s = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (s == pos_) fail("expected exponent");
        const auto e = std::stoul(std::string(text_.substr(s, pos_ - s)));
        Poly p(1);
        for (unsigned long i = 0; i < e; ++i) p *= v;
        return p;
      }
      return v;
    }
    fail("expected number or variable");
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("polynomial '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + why);
  }

  std::string_view text_;
  std::vector<std::string> vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const std::vector<std::string>& variables) {
  PolyParser parser(text, variables);
  Poly p = parser.parse();
  // Pin the full variable list even if some variables cancelled out.
  return p.over(parser.variables());
}

}  // namespace nova
