#pragma once

#include <cstdint>
#include <stdexcept>

namespace moff {

/// GF(2^r) in a fixed polynomial basis, r = 1..8. The modulus per degree is
/// pinned (primitive, so x generates the multiplicative group) and recorded
/// in output files for bit-reproducibility.
class GF2r {
 public:
  using Elem = std::uint32_t;  // low r bits

  explicit GF2r(int r) : r_(r), mod_(modulus(r)) {}

  /// Pinned primitive polynomial for degree r, with the x^r bit included.
  static std::uint32_t modulus(int r) {
    static constexpr std::uint32_t table[9] = {
        0,
        0b11,         // x + 1
        0b111,        // x^2 + x + 1
        0b1011,       // x^3 + x + 1
        0b10011,      // x^4 + x + 1
        0b100101,     // x^5 + x^2 + 1
        0b1000011,    // x^6 + x + 1
        0b10000011,   // x^7 + x + 1
        0b100011101,  // x^8 + x^4 + x^3 + x^2 + 1
    };
    if (r < 1 || r > 8) throw std::invalid_argument("GF2r: degree must be in 1..8");
    return table[r];
  }

  int degree() const { return r_; }
  std::uint32_t order() const { return 1u << r_; }

  Elem add(Elem a, Elem b) const { return a ^ b; }

  Elem mul(Elem a, Elem b) const {
    std::uint32_t acc = 0;
    while (b) {
      if (b & 1) acc ^= a;
      b >>= 1;
      a <<= 1;
      if (a & (1u << r_)) a ^= mod_;
    }
    return acc;
  }

  Elem pow(Elem a, std::uint64_t e) const {
    Elem acc = 1;
    while (e) {
      if (e & 1) acc = mul(acc, a);
      a = mul(a, a);
      e >>= 1;
    }
    return acc;
  }

  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("GF2r: inverse of zero");
    return pow(a, order() - 2);
  }

  Elem frobenius(Elem a) const { return mul(a, a); }

  /// Trace map GF(2^r) -> GF(2).
  int trace(Elem a) const {
    Elem s = 0, t = a;
    for (int i = 0; i < r_; ++i) {
      s ^= t;
      t = frobenius(t);
    }
    return static_cast<int>(s & 1);
  }

 private:
  int r_;
  std::uint32_t mod_;
};

}  // namespace moff
