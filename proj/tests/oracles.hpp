#pragma once

// Independent reference implementations for the tests. Nothing here touches
// the log tables or the library's polynomial code.

#include <array>
#include <cstdint>
#include <vector>

namespace oracle {

using Digits = std::vector<unsigned>;  // constant term first

inline Digits trim(Digits d) {
  while (!d.empty() && d.back() == 0) d.pop_back();
  return d;
}

inline Digits poly_mod(Digits a, const Digits& m, unsigned p) {
  a = trim(std::move(a));
  const std::size_t dm = m.size() - 1;
  const unsigned lead_inv = [&] {
    for (unsigned x = 1; x < p; ++x)
      if (x * m.back() % p == 1) return x;
    return 1u;
  }();
  while (a.size() > dm && !a.empty()) {
    const unsigned c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + p * p - c * m[i] % p) % p;
    a = trim(std::move(a));
  }
  return a;
}

inline Digits poly_mul(const Digits& a, const Digits& b, unsigned p) {
  if (a.empty() || b.empty()) return {};
  Digits r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return trim(r);
}

/// Trial division by every monic polynomial of degree 1..deg/2.
inline bool irreducible(const Digits& f, unsigned p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      Digits g(d + 1, 0);
      std::uint64_t rest = c;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = rest % p;
        rest /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

/// Monic irreducible of degree e, smallest when (c_0, c_1, ...) is compared
/// lexicographically.
inline Digits smallest_modulus(unsigned p, unsigned e) {
  std::uint64_t count = 1;
  for (unsigned i = 0; i < e; ++i) count *= p;
  for (std::uint64_t c = 0; c < count; ++c) {
    Digits f(e + 1, 0);
    std::uint64_t rest = c;
    // c_0 is the most significant digit of the walk.
    for (unsigned i = e; i-- > 0;) {
      f[i] = rest % p;
      rest /= p;
    }
    f[e] = 1;
    if (irreducible(f, p)) return f;
  }
  return {};
}

struct NaiveField {
  unsigned p;
  unsigned e;
  Digits modulus;
  std::uint64_t q = 1;

  NaiveField(unsigned p_, unsigned e_, Digits m) : p(p_), e(e_), modulus(std::move(m)) {
    for (unsigned i = 0; i < e; ++i) q *= p;
  }

  Digits digits(std::uint32_t code) const {
    Digits d(e, 0);
    for (unsigned i = 0; i < e; ++i) {
      d[i] = code % p;
      code /= p;
    }
    return trim(d);
  }

  std::uint32_t code(const Digits& d) const {
    std::uint32_t c = 0;
    for (std::size_t i = d.size(); i-- > 0;) c = c * p + d[i];
    return c;
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    Digits x = digits(a), y = digits(b);
    x.resize(e, 0);
    y.resize(e, 0);
    for (unsigned i = 0; i < e; ++i) x[i] = (x[i] + y[i]) % p;
    return code(trim(x));
  }

  std::uint32_t neg(std::uint32_t a) const {
    Digits x = digits(a);
    for (auto& c : x) c = (p - c) % p;
    return code(x);
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return code(poly_mod(poly_mul(digits(a), digits(b), p), modulus, p));
  }

  std::uint32_t pow(std::uint32_t a, std::uint64_t k) const {
    std::uint32_t r = 1;
    for (std::uint64_t i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }

  std::uint32_t frob(std::uint32_t a) const { return pow(a, p); }
};

/// 2 x 2 matrices over a NaiveField, row-major.
using Mat2 = std::array<std::uint32_t, 4>;

inline Mat2 mul2(const NaiveField& f, const Mat2& a, const Mat2& b) {
  return {f.add(f.mul(a[0], b[0]), f.mul(a[1], b[2])), f.add(f.mul(a[0], b[1]), f.mul(a[1], b[3])),
          f.add(f.mul(a[2], b[0]), f.mul(a[3], b[2])), f.add(f.mul(a[2], b[1]), f.mul(a[3], b[3]))};
}

}  // namespace oracle
