#include "fcensus/poly.hpp"

#include <numeric>
#include <sstream>

namespace fcensus {

Poly::Poly(Field field, std::vector<Code> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  normalize();
}

void Poly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Poly::check_same(const Poly& o) const {
  if (!field_->same_as(*o.field_)) throw Error(Errc::kMixedFields, "polynomials over different fields");
}

Poly Poly::operator+(const Poly& o) const {
  check_same(o);
  std::vector<Code> out(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_->add((*this)[i], o[i]);
  return Poly(field_, std::move(out));
}

Poly Poly::operator-(const Poly& o) const {
  check_same(o);
  std::vector<Code> out(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_->sub((*this)[i], o[i]);
  return Poly(field_, std::move(out));
}

Poly Poly::operator*(const Poly& o) const {
  check_same(o);
  if (is_zero() || o.is_zero()) return Poly(field_);
  std::vector<Code> out(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      out[i + j] = field_->add(out[i + j], field_->mul(c_[i], o.c_[j]));
    }
  }
  return Poly(field_, std::move(out));
}

Poly Poly::scaled(Code s) const {
  std::vector<Code> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = field_->mul(c_[i], s);
  return Poly(field_, std::move(out));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_->inv(leading()));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(field_);
  std::vector<Code> out(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) {
    out[i - 1] = field_->mul(c_[i], field_->from_int(static_cast<std::int64_t>(i)));
  }
  return Poly(field_, std::move(out));
}

Code Poly::eval(Code x) const noexcept {
  Code acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, x), c_[i]);
  return acc;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    const std::string coef = FieldElement(field_, c_[i]).to_string();
    const bool paren = coef.find('+') != std::string::npos;
    if (i == 0 || c_[i] != 1) os << (paren ? "(" + coef + ")" : coef);
    if (i > 0) os << "x";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(Errc::kDivisionByZero, "polynomial division by zero");
  if (!a.field()->same_as(*b.field())) throw Error(Errc::kMixedFields, "polynomials over different fields");
  const auto& f = a.field();
  std::vector<Code> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const Code lead_inv = f->inv(b.leading());
  if (rem.size() < bc.size()) return {Poly(f), a};
  std::vector<Code> quo(rem.size() - bc.size() + 1, 0);
  for (std::size_t k = quo.size(); k-- > 0;) {
    const Code t = f->mul(rem[k + bc.size() - 1], lead_inv);
    quo[k] = t;
    if (t == 0) continue;
    for (std::size_t i = 0; i < bc.size(); ++i) rem[k + i] = f->sub(rem[k + i], f->mul(t, bc[i]));
  }
  rem.resize(bc.size() - 1);
  return {Poly(f, std::move(quo)), Poly(f, std::move(rem))};
}

Poly poly_gcd(const Poly& f, const Poly& g) {
  Poly a = f;
  Poly b = g;
  if (!a.field()->same_as(*b.field())) throw Error(Errc::kMixedFields, "polynomials over different fields");
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

bool poly_is_squarefree(const Poly& f) {
  const Poly g = poly_gcd(f, f.derivative());
  return g.degree() == 0;
}

Poly powmod(const Poly& base, const BigInt& exponent, const Poly& modulus) {
  Poly result = divmod(Poly::constant(base.field(), 1), modulus).second;
  Poly b = divmod(base, modulus).second;
  BigInt e = exponent;
  while (e > 0) {
    if ((e & 1) != 0) result = divmod(result * b, modulus).second;
    b = divmod(b * b, modulus).second;
    e >>= 1;
  }
  return result;
}

Poly embed(const Poly& f, const Field& target) {
  const auto& table = embedding_table(f.field(), target);
  std::vector<Code> out(f.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = table[f.coeffs()[i]];
  return Poly(target, std::move(out));
}

unsigned root_multiplicity(const Poly& f, Code r) {
  const auto& field = f.field();
  std::vector<Code> c = f.coeffs();
  unsigned mult = 0;
  while (c.size() > 1) {
    // Synthetic division by (x - r).
    std::vector<Code> quo(c.size() - 1);
    Code carry = 0;
    for (std::size_t i = c.size(); i-- > 1;) {
      carry = field->add(field->mul(carry, r), c[i]);
      quo[i - 1] = carry;
    }
    const Code remainder = field->add(field->mul(carry, r), c[0]);
    if (remainder != 0) break;
    ++mult;
    c = std::move(quo);
  }
  return mult;
}

std::vector<Root> poly_roots_in_extension(const Poly& f, unsigned k, std::uint64_t cap) {
  const auto& base = f.field();
  const Field ext = make_field(base->p(), base->e() * k, cap);
  const Poly g = embed(f, ext);
  std::vector<Root> roots;
  if (g.is_zero()) return roots;
  for (Code t = 0; t < ext->q(); ++t) {
    if (g.eval(t) == 0) roots.push_back({FieldElement(ext, t), root_multiplicity(g, t)});
  }
  return roots;
}

std::vector<unsigned> irreducible_factor_degrees(const Poly& f) {
  std::vector<unsigned> out;
  if (f.degree() < 1) return out;
  const auto& field = f.field();
  const Poly x = Poly::x(field);
  const BigInt q(field->q());
  std::vector<int> weighted(static_cast<std::size_t>(f.degree()) + 1, 0);  // d * N_d
  Poly h = divmod(x, f).second;
  for (int d = 1; d <= f.degree(); ++d) {
    h = powmod(h, q, f);
    const int g_deg = poly_gcd(f, h - x).degree();
    int rest = g_deg;
    for (int dd = 1; dd < d; ++dd) {
      if (d % dd == 0) rest -= weighted[static_cast<std::size_t>(dd)];
    }
    weighted[static_cast<std::size_t>(d)] = rest;
    if (rest > 0) out.push_back(static_cast<unsigned>(d));
  }
  return out;
}

}  // namespace fcensus
