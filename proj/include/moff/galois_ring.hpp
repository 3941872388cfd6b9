#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "moff/gf2.hpp"

namespace moff {

/// The Galois ring GR(4, r) = Z4[x]/(h), where h is the Hensel lift of the
/// pinned GF(2^r) modulus. Supplies the Teichmueller set, Frobenius and the
/// trace to Z4 used by the complex MUB construction in even characteristic.
class GaloisRing {
 public:
  using Elem = std::vector<std::uint8_t>;  // r coefficients mod 4, low degree first

  explicit GaloisRing(int r);

  int degree() const { return r_; }

  /// Coefficients of the monic Hensel-lifted modulus, degree r.
  const std::vector<std::uint8_t>& modulus() const { return mod_; }

  Elem zero() const { return Elem(r_, 0); }
  Elem from_constant(std::uint8_t c) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;

  /// Teichmueller set in fixed order: T[0] = 0, T[j] = xi^(j-1) where
  /// xi is the class of x (a (2^r - 1)-th root of unity).
  const std::vector<Elem>& teichmuller() const { return teich_; }
  std::size_t teich_size() const { return teich_.size(); }

  /// Indices (ja, jb) into the Teichmueller set with z = T[ja] + 2 T[jb].
  std::pair<std::size_t, std::size_t> two_adic_split(const Elem& z) const;

  /// phi(a + 2b) = a^2 + 2 b^2 on the 2-adic components.
  Elem frobenius(const Elem& z) const;

  /// Trace GR(4,r) -> Z4: sum of the Frobenius orbit.
  int trace_z4(const Elem& z) const;

 private:
  Elem teich_pow(std::size_t exponent) const;  // xi^exponent as ring element
  std::size_t teich_index_of_square(std::size_t j) const;

  int r_;
  std::vector<std::uint8_t> mod_;       // r+1 coefficients, monic
  std::vector<Elem> teich_;             // 2^r elements
  std::unordered_map<std::uint32_t, std::size_t> mod2_to_teich_;
};

}  // namespace moff
