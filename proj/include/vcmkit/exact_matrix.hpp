#pragma once

#include <cstdint>
#include <string>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

namespace vcmkit {

/// Arbitrary-precision integer with expression templates disabled so it can
/// serve as an Eigen scalar.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

}  // namespace vcmkit

namespace Eigen {

template <>
struct NumTraits<vcmkit::BigInt> : GenericNumTraits<vcmkit::BigInt> {
  using Real = vcmkit::BigInt;
  using NonInteger = vcmkit::BigInt;
  using Literal = vcmkit::BigInt;
  using Nested = vcmkit::BigInt;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 8,
    MulCost = 16
  };
  static inline int digits10() { return 0; }
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline Real highest() { return 0; }
  static inline Real lowest() { return 0; }
};

}  // namespace Eigen

namespace vcmkit {

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntMatrix = DenseMatrix<std::int64_t>;

/// Either the prime field with p elements or the rationals.
class CoefficientField {
 public:
  /// Throws InvalidInput unless p is a prime below 2^31.
  static CoefficientField prime(std::int64_t p);
  static CoefficientField rationals() { return CoefficientField(0); }

  /// Accepts "Q" or a decimal prime.
  static CoefficientField parse(const std::string& text);

  [[nodiscard]] bool is_rational() const { return p_ == 0; }
  [[nodiscard]] std::int64_t characteristic() const { return p_; }
  [[nodiscard]] std::string name() const { return p_ == 0 ? "Q" : std::to_string(p_); }

  friend bool operator==(const CoefficientField&, const CoefficientField&) = default;

 private:
  explicit CoefficientField(std::int64_t p) : p_(p) {}
  std::int64_t p_;
};

/// An integer matrix read over a coefficient field.
///
/// Entries are integers (reduced into [0, p) for a prime field); over the
/// rationals an integer matrix is already in lowest terms.
class ExactMatrix {
 public:
  ExactMatrix(CoefficientField field, IntMatrix entries);

  [[nodiscard]] const CoefficientField& field() const { return field_; }
  [[nodiscard]] const IntMatrix& entries() const { return entries_; }
  [[nodiscard]] Eigen::Index rows() const { return entries_.rows(); }
  [[nodiscard]] Eigen::Index cols() const { return entries_.cols(); }

  [[nodiscard]] Eigen::Index rank() const;

 private:
  CoefficientField field_;
  IntMatrix entries_;
};

[[nodiscard]] bool is_prime(std::int64_t n);

/// Rank over F_p by Gaussian elimination on a copy of `m`.
[[nodiscard]] Eigen::Index rank_mod_p(IntMatrix m, std::int64_t p);

/// Rank over Q by fraction-free (Bareiss) elimination in exact integers.
[[nodiscard]] Eigen::Index rank_bareiss(DenseMatrix<BigInt> m);

/// Rank of an integer matrix over `field`.
[[nodiscard]] Eigen::Index rank(const IntMatrix& m, const CoefficientField& field);

}  // namespace vcmkit
