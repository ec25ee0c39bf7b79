#include "fcensus/finite_field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

namespace fcensus {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::kNonPrime: return "NonPrime";
    case Errc::kFieldTooLarge: return "FieldTooLarge";
    case Errc::kDivisionByZero: return "DivisionByZero";
    case Errc::kMixedFields: return "MixedFields";
    case Errc::kNoEmbedding: return "NoEmbedding";
    case Errc::kSizeMismatch: return "SizeMismatch";
    case Errc::kAmbientMismatch: return "AmbientMismatch";
    case Errc::kNotSemisimple: return "NotSemisimple";
    case Errc::kTooManyVertices: return "TooManyVertices";
    case Errc::kNotBalanced: return "NotBalanced";
    case Errc::kDuplicateEigenvalues: return "DuplicateEigenvalues";
    case Errc::kNotNilpotent: return "NotNilpotent";
    case Errc::kOutOfRange: return "OutOfRange";
    case Errc::kNotAPowerOfP: return "NotAPowerOfP";
    case Errc::kWrongPartCount: return "WrongPartCount";
    case Errc::kNotAPartition: return "NotAPartition";
    case Errc::kNonIntegerResult: return "NonIntegerResult";
    case Errc::kWorkCapExceeded: return "WorkCapExceeded";
    case Errc::kInsufficientData: return "InsufficientData";
    case Errc::kZeroCount: return "ZeroCount";
    case Errc::kWrongSize: return "WrongSize";
    case Errc::kDegenerateV: return "DegenerateV";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

using PrimePoly = std::vector<std::uint32_t>;  // constant term first

void trim(PrimePoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo a monic g over F_p.
PrimePoly prime_mod(PrimePoly f, const PrimePoly& g, std::uint32_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() >= g.size()) {
    const std::uint32_t lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = (f[shift + i] + (p - lead) * g[i]) % p;
    }
    trim(f);
  }
  return f;
}

bool prime_irreducible(const PrimePoly& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t t = 0; t < count; ++t) {
      PrimePoly g(d + 1);
      std::uint64_t rest = t;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      g[d] = 1;
      if (prime_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

PrimePoly smallest_irreducible(std::uint32_t p, std::uint32_t e) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < e; ++i) count *= p;
  for (std::uint64_t t = 0; t < count; ++t) {
    // c_0 is the most significant digit of t, so t increases in lex order.
    PrimePoly f(e + 1);
    std::uint64_t rest = t;
    for (std::uint32_t i = e; i-- > 0;) {
      f[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    f[e] = 1;
    if (prime_irreducible(f, p)) return f;
  }
  throw Error(Errc::kNonPrime, "no irreducible polynomial found");
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

struct FieldCache {
  std::mutex mu;
  std::map<std::pair<std::uint32_t, std::uint32_t>, Field> fields;
  std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, std::vector<Code>> embeddings;
};

FieldCache& cache() {
  static FieldCache instance;
  return instance;
}

}  // namespace

Field make_field(std::uint32_t p, std::uint32_t e, std::uint64_t cap) {
  if (!is_prime(p)) throw Error(Errc::kNonPrime, "p = " + std::to_string(p));
  if (e < 1) throw Error(Errc::kFieldTooLarge, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > cap) {
      throw Error(Errc::kFieldTooLarge,
                  std::to_string(p) + "^" + std::to_string(e) + " exceeds cap " + std::to_string(cap));
    }
  }
  auto& c = cache();
  {
    std::lock_guard lock(c.mu);
    auto it = c.fields.find({p, e});
    if (it != c.fields.end()) return it->second;
  }
  // Built outside the lock; a racing builder produces an identical field.
  auto field = std::make_shared<const FieldDescriptor>(p, e, smallest_irreducible(p, e));
  std::lock_guard lock(c.mu);
  return c.fields.emplace(std::make_pair(p, e), std::move(field)).first->second;
}

FieldDescriptor::FieldDescriptor(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus)
    : p_(p), e_(e), modulus_(std::move(modulus)) {
  q_ = 1;
  for (std::uint32_t i = 0; i < e_; ++i) q_ *= p_;
  if (modulus_.size() != e_ + 1 || modulus_.back() != 1 || !prime_irreducible(modulus_, p_)) {
    throw Error(Errc::kNonPrime, "modulus is not monic irreducible of degree e");
  }
  gen_ = e_ == 1 ? (p_ - modulus_[0]) % p_ : p_;
  primitive_ = find_primitive();
  if (q_ <= kTableThreshold) build_tables();
}

std::string FieldDescriptor::name() const {
  return e_ == 1 ? "F_" + std::to_string(p_) : "F_" + std::to_string(p_) + "^" + std::to_string(e_);
}

std::vector<std::uint32_t> FieldDescriptor::coeffs(Code a) const {
  std::vector<std::uint32_t> out(e_);
  for (std::uint32_t i = 0; i < e_; ++i) {
    out[i] = a % p_;
    a /= p_;
  }
  return out;
}

Code FieldDescriptor::from_coeffs(std::span<const std::uint32_t> c) const {
  Code out = 0;
  Code place = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    const std::uint32_t digit = i < c.size() ? c[i] % p_ : 0;
    out += digit * place;
    place *= p_;
  }
  return out;
}

Code FieldDescriptor::from_int(std::int64_t v) const {
  const auto p = static_cast<std::int64_t>(p_);
  return static_cast<Code>(((v % p) + p) % p);
}

Code FieldDescriptor::add_slow(Code a, Code b) const noexcept {
  Code out = 0;
  Code place = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    out += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return out;
}

Code FieldDescriptor::neg_slow(Code a) const noexcept {
  Code out = 0;
  Code place = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    out += ((p_ - a % p_) % p_) * place;
    a /= p_;
    place *= p_;
  }
  return out;
}

Code FieldDescriptor::mul_slow(Code a, Code b) const noexcept {
  std::uint32_t da[32] = {};
  std::uint32_t db[32] = {};
  std::uint64_t prod[64] = {};
  for (std::uint32_t i = 0; i < e_; ++i) {
    da[i] = a % p_;
    a /= p_;
    db[i] = b % p_;
    b /= p_;
  }
  for (std::uint32_t i = 0; i < e_; ++i) {
    if (da[i] == 0) continue;
    for (std::uint32_t j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_;
  }
  for (std::uint32_t k = 2 * e_ - 1; k-- > e_;) {
    const std::uint64_t lead = prod[k];
    if (lead == 0) continue;
    prod[k] = 0;
    const std::size_t shift = k - e_;
    for (std::uint32_t i = 0; i < e_; ++i) {
      prod[shift + i] = (prod[shift + i] + (p_ - lead) * modulus_[i]) % p_;
    }
  }
  Code out = 0;
  Code place = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    out += static_cast<Code>(prod[i]) * place;
    place *= p_;
  }
  return out;
}

Code FieldDescriptor::inv(Code a) const {
  if (a == 0) throw Error(Errc::kDivisionByZero, "inverse of zero in " + name());
  if (has_tables()) {
    const std::uint32_t l = log_[a];
    return exp_[l == 0 ? 0 : static_cast<std::uint32_t>(q_ - 1) - l];
  }
  return pow(a, q_ - 2);
}

Code FieldDescriptor::pow(Code a, std::uint64_t exponent) const {
  if (exponent == 0) return 1;
  if (a == 0) return 0;
  exponent %= (q_ - 1);
  if (has_tables()) return exp_[(static_cast<std::uint64_t>(log_[a]) * exponent) % (q_ - 1)];
  Code result = 1;
  Code base = a;
  while (exponent > 0) {
    if (exponent & 1) result = mul(result, base);
    base = mul(base, base);
    exponent >>= 1;
  }
  return result;
}

Code FieldDescriptor::pow(Code a, const BigInt& exponent) const {
  if (exponent < 0) return pow(inv(a), static_cast<BigInt>(-exponent));
  if (exponent == 0) return 1;
  if (a == 0) return 0;
  const BigInt reduced = exponent % BigInt(q_ - 1);
  return pow(a, static_cast<std::uint64_t>(reduced));
}

Code FieldDescriptor::frobenius_once(Code a) const noexcept {
  if (has_tables()) return frob_[a];
  Code result = 1;
  for (std::uint32_t i = 0; i < p_; ++i) result = mul(result, a);
  return result;
}

Code FieldDescriptor::frobenius(Code a, std::uint64_t r) const noexcept {
  r %= e_;
  for (std::uint64_t i = 0; i < r; ++i) a = frobenius_once(a);
  return a;
}

Code FieldDescriptor::find_primitive() const {
  if (q_ == 2) return 1;
  const auto factors = prime_factors(q_ - 1);
  for (Code c = 2; c < q_; ++c) {
    bool ok = true;
    for (auto r : factors) {
      if (pow(c, (q_ - 1) / r) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return c;
  }
  return 1;
}

void FieldDescriptor::build_tables() {
  const auto m = static_cast<std::size_t>(q_ - 1);
  std::vector<std::uint32_t> exp(2 * m);
  std::vector<std::uint32_t> log(q_, 0);
  Code x = 1;
  for (std::size_t k = 0; k < m; ++k) {
    exp[k] = x;
    log[x] = static_cast<std::uint32_t>(k);
    x = mul_slow(x, primitive_);
  }
  for (std::size_t k = m; k < 2 * m; ++k) exp[k] = exp[k - m];
  std::vector<std::int32_t> zech(m);
  for (std::size_t k = 0; k < m; ++k) {
    const Code s = add_slow(1, exp[k]);
    zech[k] = s == 0 ? -1 : static_cast<std::int32_t>(log[s]);
  }
  std::vector<Code> neg(q_);
  std::vector<Code> frob(q_);
  for (Code a = 0; a < q_; ++a) {
    neg[a] = neg_slow(a);
    frob[a] = a == 0 ? 0 : exp[(static_cast<std::uint64_t>(log[a]) * p_) % m];
  }
  exp_ = std::move(exp);
  log_ = std::move(log);
  zech_ = std::move(zech);
  neg_ = std::move(neg);
  frob_ = std::move(frob);
}

FieldElement::FieldElement(Field field, Code code) : field_(std::move(field)), code_(code) {
  if (code_ >= field_->q()) throw Error(Errc::kOutOfRange, "element code outside the field");
}

void FieldElement::check_same(const FieldElement& o) const {
  if (!field_ || !o.field_ || !field_->same_as(*o.field_)) {
    throw Error(Errc::kMixedFields, "operands live in different fields");
  }
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->add(code_, o.code_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->sub(code_, o.code_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->mul(code_, o.code_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->div(code_, o.code_)};
}

std::string FieldElement::to_string() const {
  if (field_->e() == 1) return std::to_string(code_);
  const auto c = coeffs();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << c[i];
    } else {
      if (c[i] != 1) os << c[i] << '*';
      os << 'g';
      if (i > 1) os << '^' << i;
    }
  }
  if (first) os << '0';
  return os.str();
}

FieldElement frobenius(const FieldElement& x, std::uint64_t r) {
  return {x.field(), x.field()->frobenius(x.code(), r)};
}

const std::vector<Code>& embedding_table(const Field& source, const Field& target) {
  if (source->p() != target->p() || target->e() % source->e() != 0) {
    throw Error(Errc::kNoEmbedding, source->name() + " does not embed in " + target->name());
  }
  auto& c = cache();
  const auto key = std::make_tuple(source->p(), source->e(), target->e());
  {
    std::lock_guard lock(c.mu);
    auto it = c.embeddings.find(key);
    if (it != c.embeddings.end()) return it->second;
  }
  // Image of the source generator: smallest root of the source modulus.
  const auto& mod = source->modulus();
  Code root = 0;
  bool found = false;
  for (Code t = 0; t < target->q() && !found; ++t) {
    Code acc = 0;
    for (std::size_t i = mod.size(); i-- > 0;) acc = target->add(target->mul(acc, t), mod[i]);
    if (acc == 0) {
      root = t;
      found = true;
    }
  }
  if (!found) throw Error(Errc::kNoEmbedding, "source modulus has no root in target");
  std::vector<Code> powers(source->e());
  powers[0] = 1;
  for (std::size_t i = 1; i < powers.size(); ++i) powers[i] = target->mul(powers[i - 1], root);
  std::vector<Code> table(source->q());
  for (Code a = 0; a < source->q(); ++a) {
    const auto digits = source->coeffs(a);
    Code image = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) {
      image = target->add(image, target->mul(target->from_int(digits[i]), powers[i]));
    }
    table[a] = image;
  }
  std::lock_guard lock(c.mu);
  return c.embeddings.emplace(key, std::move(table)).first->second;
}

FieldElement embed(const FieldElement& x, const Field& target) {
  return {target, embedding_table(x.field(), target)[x.code()]};
}

}  // namespace fcensus
