#include "vcmkit/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <sstream>

#include "vcmkit/errors.hpp"

namespace vcmkit {

namespace {

// Exponent vectors are compared after dropping trailing zeros, so constants
// (stored as the empty vector) combine with polynomials of any arity.
Polynomial::Exponent normalized(Polynomial::Exponent e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
  return e;
}

}  // namespace

Polynomial::Polynomial(int constant) {
  if (constant != 0) terms_.emplace(Exponent{}, BigInt(constant));
}

Polynomial Polynomial::variable(int id, int variable_count) {
  Exponent e(static_cast<std::size_t>(variable_count), 0);
  e[static_cast<std::size_t>(id)] = 1;
  Polynomial p;
  p.add_term(e, BigInt(1));
  return p;
}

Polynomial Polynomial::constant(BigInt value) {
  Polynomial p;
  p.add_term(Exponent{}, value);
  return p;
}

void Polynomial::add_term(const Exponent& e, const BigInt& c) {
  if (c == 0) return;
  const Exponent key = normalized(e);
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator-(Polynomial a) {
  for (auto& [e, c] : a.terms_) c = -c;
  return a;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Polynomial::Exponent e(std::max(ea.size(), eb.size()), 0);
      for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::substitute(const std::vector<int>& map) const {
  Polynomial out;
  for (const auto& [e, c] : terms_) {
    Exponent moved(map.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) moved[static_cast<std::size_t>(map[i])] += e[i];
    out.add_term(moved, c);
  }
  return out;
}

std::string Polynomial::to_string(const Shape& shape) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest exponent vectors first reads closer to conventional notation.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const BigInt magnitude = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (magnitude != 1 || std::all_of(e.begin(), e.end(), [](int x) { return x == 0; })) {
      os << magnitude;
      wrote = true;
    }
    for (std::size_t id = 0; id < e.size(); ++id) {
      for (int k = 0; k < e[id]; ++k) {
        const Vertex v = shape.vertex(static_cast<int>(id));
        os << (wrote ? "*" : "") << "x_" << v.component << '_' << v.index;
        wrote = true;
      }
    }
  }
  return os.str();
}

namespace {

class PolynomialParser {
 public:
  PolynomialParser(const std::string& text, const Shape& shape, const std::map<std::string, Vertex>& labels)
      : text_(text), shape_(shape), labels_(labels) {}

  Polynomial parse() {
    Polynomial result;
    skip_space();
    if (pos_ == text_.size()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    while (true) {
      Polynomial term = parse_term();
      result += negative ? -term : term;
      skip_space();
      if (pos_ == text_.size()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      negative = peek() == '-';
      ++pos_;
    }
    return result;
  }

 private:
  Polynomial parse_term() {
    Polynomial term = parse_factor();
    skip_space();
    while (pos_ < text_.size() && peek() == '*') {
      ++pos_;
      term *= parse_factor();
      skip_space();
    }
    return term;
  }

  Polynomial parse_factor() {
    skip_space();
    if (pos_ == text_.size()) fail("expected a factor");
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      return Polynomial::constant(BigInt(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
      return variable(text_.substr(start, pos_ - start), start);
    }
    fail(std::string("unexpected character '") + peek() + "'");
  }

  Polynomial variable(const std::string& name, std::size_t at) {
    const int count = shape_.vertex_count();
    if (const auto it = labels_.find(name); it != labels_.end()) {
      return Polynomial::variable(shape_.id(it->second), count);
    }
    int component = 0;
    int index = 0;
    char tail = 0;
    if (std::sscanf(name.c_str(), "x_%d_%d%c", &component, &index, &tail) != 2) {
      pos_ = at;
      fail("unknown variable '" + name + "'");
    }
    const Vertex v{component, index};
    if (!shape_.is_valid(v)) {
      pos_ = at;
      fail("variable '" + name + "' is not in X_" + shape_.format());
    }
    return Polynomial::variable(shape_.id(v), count);
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw InvalidInput("polynomial \"" + text_ + "\" at offset " + std::to_string(pos_) + ": " + message);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[nodiscard]] char peek() const { return text_[pos_]; }

  const std::string& text_;
  const Shape& shape_;
  const std::map<std::string, Vertex>& labels_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const Shape& shape, const std::map<std::string, Vertex>& labels) {
  return PolynomialParser(text, shape, labels).parse();
}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeMismatch("cannot multiply " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " by " +
                        std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  PolyMatrix out(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      Polynomial acc;
      for (Eigen::Index k = 0; k < a.cols(); ++k) {
        if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
        acc += a(i, k) * b(k, j);
      }
      out(i, j) = std::move(acc);
    }
  }
  return out;
}

}  // namespace vcmkit
