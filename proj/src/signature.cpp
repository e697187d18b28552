#include "gaspin/signature.hpp"

#include "gaspin/error.hpp"

namespace gaspin {

Signature::Signature(int p, int q) : p_(p), q_(q) {
  if (p < 0 || q < 0 || p + q < 1 || p + q > kMaxDimension) {
    throw Error(ErrorCode::InvalidSignature,
                "signature (" + std::to_string(p) + "," + std::to_string(q) +
                    ") must have p,q >= 0 and 1 <= p+q <= 5");
  }
}

int Signature::metric(int a) const {
  if (a < 1 || a > n()) {
    throw Error(ErrorCode::InvalidArgument,
                "generator index " + std::to_string(a) + " out of range for " +
                    to_string());
  }
  return a <= p_ ? 1 : -1;
}

std::string Signature::to_string() const {
  return "Cl(" + std::to_string(p_) + "," + std::to_string(q_) + ")";
}

}  // namespace gaspin
