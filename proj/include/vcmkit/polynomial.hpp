#pragma once

#include <map>
#include <string>
#include <vector>

#include "vcmkit/exact_matrix.hpp"
#include "vcmkit/shape.hpp"

namespace vcmkit {

/// Integer polynomial in the Cox ring variables x_{i,j}.
///
/// Terms map exponent vectors (one slot per vertex id) to non-zero
/// coefficients; std::map keeps them in a canonical order, so structural
/// equality is polynomial equality.
class Polynomial {
 public:
  using Exponent = std::vector<int>;

  Polynomial() = default;
  Polynomial(int constant);  // NOLINT: integer literals are polynomials

  static Polynomial variable(int id, int variable_count);
  static Polynomial constant(BigInt value);

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] const std::map<Exponent, BigInt>& terms() const { return terms_; }

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Renames variables: exponent slot `id` moves to `map[id]`.
  [[nodiscard]] Polynomial substitute(const std::vector<int>& map) const;

  /// Canonical text form: terms like "-2*x_1_0*x_2_1", joined by " + "/" - ".
  [[nodiscard]] std::string to_string(const Shape& shape) const;

 private:
  void add_term(const Exponent& e, const BigInt& c);

  std::map<Exponent, BigInt> terms_;
};

/// Parses "x_1_0*x_2_2 - 3*x_1_1 + 2". `labels` optionally names variables
/// (e.g. "a" -> x_1_0). Throws InvalidInput with the character offset.
[[nodiscard]] Polynomial parse_polynomial(const std::string& text, const Shape& shape,
                                          const std::map<std::string, Vertex>& labels = {});

}  // namespace vcmkit

namespace Eigen {

template <>
struct NumTraits<vcmkit::Polynomial> : GenericNumTraits<vcmkit::Polynomial> {
  using Real = vcmkit::Polynomial;
  using NonInteger = vcmkit::Polynomial;
  using Literal = vcmkit::Polynomial;
  using Nested = vcmkit::Polynomial;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 16,
    AddCost = 32,
    MulCost = 64
  };
};

}  // namespace Eigen

namespace vcmkit {

using PolyMatrix = DenseMatrix<Polynomial>;

/// Exact product; throws ShapeMismatch when the inner dimensions differ.
[[nodiscard]] PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b);

}  // namespace vcmkit
