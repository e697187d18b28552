#pragma once

#include <cstddef>
#include <string>

namespace gaspin {

inline constexpr int kMaxDimension = 5;
inline constexpr std::size_t kMaxBlades = std::size_t{1} << kMaxDimension;

/// Metric signature (p, q) of a real Clifford algebra Cl(p,q): p generators
/// square to +1, the following q square to -1. Dimensions 1..5 only.
class Signature {
 public:
  /// Throws Error(InvalidSignature) unless p, q >= 0 and 1 <= p+q <= 5.
  Signature(int p, int q);

  int p() const noexcept { return p_; }
  int q() const noexcept { return q_; }
  int n() const noexcept { return p_ + q_; }

  /// Number of basis blades, 2^n.
  std::size_t blade_count() const noexcept { return std::size_t{1} << n(); }

  /// Diagonal metric entry eta^{aa} for a 1-based generator index.
  int metric(int a) const;

  std::string to_string() const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  int p_;
  int q_;
};

}  // namespace gaspin
