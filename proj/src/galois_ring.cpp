#include "moff/galois_ring.hpp"

#include <stdexcept>

namespace moff {
namespace {

// Polynomial product mod 4, then reduction modulo the monic modulus.
std::vector<std::uint8_t> polymul_mod(const std::vector<std::uint8_t>& a,
                                      const std::vector<std::uint8_t>& b,
                                      const std::vector<std::uint8_t>& mod, int r) {
  std::vector<std::uint8_t> prod(2 * r, 0);
  for (int i = 0; i < r; ++i) {
    if (!a[i]) continue;
    for (int j = 0; j < r; ++j)
      prod[i + j] = static_cast<std::uint8_t>((prod[i + j] + a[i] * b[j]) & 3);
  }
  // reduce: x^r = -(mod[0] + ... + mod[r-1] x^(r-1))
  for (int d = 2 * r - 1; d >= r; --d) {
    std::uint8_t c = prod[d];
    if (!c) continue;
    prod[d] = 0;
    for (int k = 0; k < r; ++k)
      prod[d - r + k] =
          static_cast<std::uint8_t>((prod[d - r + k] + (4 - mod[k] % 4) * c) & 3);
  }
  prod.resize(r);
  return prod;
}

std::uint32_t mod2_key(const std::vector<std::uint8_t>& e) {
  std::uint32_t k = 0;
  for (std::size_t i = 0; i < e.size(); ++i) k |= static_cast<std::uint32_t>(e[i] & 1) << i;
  return k;
}

}  // namespace

GaloisRing::GaloisRing(int r) : r_(r) {
  std::uint32_t f = GF2r::modulus(r);

  // Hensel lift by the Graeffe step: write f = e(x^2) + x o(x^2) over Z4,
  // then h(y) = +-(e(y)^2 - y o(y)^2) with the sign fixing monicity.
  std::vector<int> even((r / 2) + 1, 0), odd((r + 1) / 2, 0);
  for (int i = 0; i <= r; ++i) {
    int bit = (f >> i) & 1;
    if (i % 2 == 0)
      even[i / 2] = bit;
    else
      odd[i / 2] = bit;
  }
  std::vector<int> h(r + 1, 0);
  for (std::size_t i = 0; i < even.size(); ++i)
    for (std::size_t j = 0; j < even.size(); ++j) h[i + j] += even[i] * even[j];
  for (std::size_t i = 0; i < odd.size(); ++i)
    for (std::size_t j = 0; j < odd.size(); ++j) h[i + j + 1] -= odd[i] * odd[j];
  if (((h[r] % 4) + 4) % 4 != 1)
    for (auto& c : h) c = -c;
  mod_.resize(r + 1);
  for (int i = 0; i <= r; ++i) mod_[i] = static_cast<std::uint8_t>(((h[i] % 4) + 4) % 4);
  if (mod_[r] != 1) throw std::logic_error("GaloisRing: lift is not monic");

  // Teichmueller set: 0, then powers of xi = x.
  std::size_t q = std::size_t(1) << r;
  teich_.reserve(q);
  teich_.push_back(zero());
  Elem xi = zero();
  if (r == 1)
    xi[0] = static_cast<std::uint8_t>((4 - mod_[0]) & 3);  // root of the linear modulus
  else
    xi[1] = 1;
  Elem cur = from_constant(1);
  for (std::size_t j = 0; j + 1 < q; ++j) {
    teich_.push_back(cur);
    cur = mul(cur, xi);
  }
  if (!(cur == from_constant(1)))
    throw std::logic_error("GaloisRing: xi does not have order 2^r - 1");

  for (std::size_t j = 0; j < teich_.size(); ++j) mod2_to_teich_[mod2_key(teich_[j])] = j;
  if (mod2_to_teich_.size() != q)
    throw std::logic_error("GaloisRing: Teichmueller reductions not distinct");
}

GaloisRing::Elem GaloisRing::from_constant(std::uint8_t c) const {
  Elem e = zero();
  e[0] = static_cast<std::uint8_t>(c & 3);
  return e;
}

GaloisRing::Elem GaloisRing::add(const Elem& a, const Elem& b) const {
  Elem e(r_);
  for (int i = 0; i < r_; ++i) e[i] = static_cast<std::uint8_t>((a[i] + b[i]) & 3);
  return e;
}

GaloisRing::Elem GaloisRing::mul(const Elem& a, const Elem& b) const {
  return polymul_mod(a, b, mod_, r_);
}

std::pair<std::size_t, std::size_t> GaloisRing::two_adic_split(const Elem& z) const {
  std::size_t ja = mod2_to_teich_.at(mod2_key(z));
  const Elem& a = teich_[ja];
  Elem half(r_);
  for (int i = 0; i < r_; ++i) {
    std::uint8_t diff = static_cast<std::uint8_t>((z[i] + 4 - a[i]) & 3);
    if (diff & 1) throw std::logic_error("GaloisRing: bad 2-adic split");
    half[i] = static_cast<std::uint8_t>((diff >> 1) & 1);
  }
  std::size_t jb = mod2_to_teich_.at(mod2_key(half));
  return {ja, jb};
}

std::size_t GaloisRing::teich_index_of_square(std::size_t j) const {
  if (j == 0) return 0;
  std::size_t ord = teich_.size() - 1;  // 2^r - 1
  return 1 + (2 * (j - 1)) % ord;
}

GaloisRing::Elem GaloisRing::frobenius(const Elem& z) const {
  auto [ja, jb] = two_adic_split(z);
  Elem a2 = teich_[teich_index_of_square(ja)];
  Elem b2 = teich_[teich_index_of_square(jb)];
  Elem two_b2(r_);
  for (int i = 0; i < r_; ++i) two_b2[i] = static_cast<std::uint8_t>((2 * b2[i]) & 3);
  return add(a2, two_b2);
}

int GaloisRing::trace_z4(const Elem& z) const {
  Elem acc = zero();
  Elem cur = z;
  for (int i = 0; i < r_; ++i) {
    acc = add(acc, cur);
    cur = frobenius(cur);
  }
  for (int i = 1; i < r_; ++i)
    if (acc[i] != 0) throw std::logic_error("GaloisRing: trace not in Z4");
  return acc[0];
}

}  // namespace moff
