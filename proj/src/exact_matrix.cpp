#include "vcmkit/exact_matrix.hpp"

#include <utility>

#include "vcmkit/errors.hpp"

namespace vcmkit {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

CoefficientField CoefficientField::prime(std::int64_t p) {
  if (!is_prime(p) || p >= (std::int64_t{1} << 31)) {
    throw InvalidInput("field characteristic " + std::to_string(p) + " is not a prime below 2^31");
  }
  return CoefficientField(p);
}

CoefficientField CoefficientField::parse(const std::string& text) {
  if (text == "Q" || text == "q" || text == "0") return rationals();
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw InvalidInput("field must be 'Q' or a prime, got '" + text + "'");
  }
  if (used != text.size()) throw InvalidInput("field must be 'Q' or a prime, got '" + text + "'");
  return prime(value);
}

ExactMatrix::ExactMatrix(CoefficientField field, IntMatrix entries)
    : field_(field), entries_(std::move(entries)) {
  if (!field_.is_rational()) {
    const std::int64_t p = field_.characteristic();
    entries_ = entries_.unaryExpr([p](std::int64_t x) { return ((x % p) + p) % p; });
  }
}

Eigen::Index ExactMatrix::rank() const { return vcmkit::rank(entries_, field_); }

Eigen::Index rank_mod_p(IntMatrix m, std::int64_t p) {
  m = m.unaryExpr([p](std::int64_t x) { return ((x % p) + p) % p; });
  const auto inverse = [p](std::int64_t a) {
    // Fermat: a^(p-2) mod p.
    std::int64_t result = 1;
    std::int64_t base = a;
    for (std::int64_t e = p - 2; e > 0; e >>= 1) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
    }
    return result;
  };
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < m.cols() && rank < m.rows(); ++col) {
    Eigen::Index pivot = rank;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.row(pivot).swap(m.row(rank));
    const std::int64_t inv = inverse(m(rank, col));
    for (Eigen::Index c = col; c < m.cols(); ++c) m(rank, c) = m(rank, c) * inv % p;
    for (Eigen::Index row = rank + 1; row < m.rows(); ++row) {
      const std::int64_t factor = m(row, col);
      if (factor == 0) continue;
      for (Eigen::Index c = col; c < m.cols(); ++c) {
        m(row, c) = ((m(row, c) - factor * m(rank, c)) % p + p) % p;
      }
    }
    ++rank;
  }
  return rank;
}

Eigen::Index rank_bareiss(DenseMatrix<BigInt> m) {
  BigInt previous = 1;
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < m.cols() && rank < m.rows(); ++col) {
    Eigen::Index pivot = rank;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(rank, c));
    }
    const BigInt& p = m(rank, col);
    for (Eigen::Index row = rank + 1; row < m.rows(); ++row) {
      for (Eigen::Index c = col + 1; c < m.cols(); ++c) {
        // Sylvester's identity guarantees exact division.
        m(row, c) = (p * m(row, c) - m(row, col) * m(rank, c)) / previous;
      }
      m(row, col) = 0;
    }
    previous = p;
    ++rank;
  }
  return rank;
}

Eigen::Index rank(const IntMatrix& m, const CoefficientField& field) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (!field.is_rational()) return rank_mod_p(m, field.characteristic());
  return rank_bareiss(m.cast<BigInt>());
}

}  // namespace vcmkit
