#include "stratsum/ring.hpp"

#include <stdexcept>

#include "stratsum/errors.hpp"

namespace stratsum {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// Dense univariate polynomials over F_p, low degree first, for the
// irreducibility search. Trailing zeros are kept trimmed.
using FpPoly = std::vector<long>;

void trim(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of a mod b, b monic.
FpPoly poly_rem(FpPoly a, const FpPoly& b, long p) {
  trim(a);
  const int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= db) {
    long lead = a.back();
    int shift = static_cast<int>(a.size()) - 1 - db;
    for (int i = 0; i <= db; ++i) {
      a[shift + i] = ((a[shift + i] - lead * b[i]) % p + p) % p;
    }
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

bool divides(const FpPoly& d, const FpPoly& f, long p) {
  return poly_rem(f, d, p).empty();
}

// Monic degree-e candidate with coefficient tuple encoded by `code`:
// code = a_{e-1} * p^{e-1} + ... + a_1 * p + a_0.
FpPoly candidate(long p, int e, std::uint64_t code) {
  FpPoly f(e + 1, 0);
  f[e] = 1;
  for (int i = e - 1; i >= 0; --i) {
    // a_{e-1} is the most significant digit of the tuple ordering.
    std::uint64_t digit = code;
    for (int j = 0; j < i; ++j) digit /= static_cast<std::uint64_t>(p);
    f[i] = static_cast<long>(digit % static_cast<std::uint64_t>(p));
  }
  return f;
}

bool irreducible(const FpPoly& f, long p) {
  const int e = static_cast<int>(f.size()) - 1;
  // Trial division by every monic polynomial of degree 1..e/2.
  for (int d = 1; 2 * d <= e; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= static_cast<std::uint64_t>(p);
    for (std::uint64_t code = 0; code < count; ++code) {
      FpPoly g(d + 1, 0);
      g[d] = 1;
      std::uint64_t c = code;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<long>(c % static_cast<std::uint64_t>(p));
        c /= static_cast<std::uint64_t>(p);
      }
      if (divides(g, f, p)) return false;
    }
  }
  return true;
}

std::uint64_t ipow(long base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= static_cast<std::uint64_t>(base);
  return r;
}

}  // namespace

Ring Ring::prime_field(long p) {
  if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  Ring r;
  r.kind_ = RingKind::PrimeField;
  r.p_ = p;
  r.e_ = 1;
  r.q_ = static_cast<std::uint64_t>(p);
  return r;
}

Ring Ring::prime_square(long p) {
  if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  Ring r;
  r.kind_ = RingKind::PrimeSquare;
  r.p_ = p;
  r.e_ = 1;
  r.q_ = static_cast<std::uint64_t>(p) * static_cast<std::uint64_t>(p);
  return r;
}

Ring Ring::extension(long p, int e) {
  if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  if (e < 1 || e > 4) throw std::invalid_argument("extension degree must be in [1,4]");
  if (e == 1) return prime_field(p);

  Ring r;
  r.kind_ = RingKind::ExtensionField;
  r.p_ = p;
  r.e_ = e;
  r.q_ = ipow(p, e);

  const std::uint64_t tuples = ipow(p, e);
  for (std::uint64_t code = 0; code < tuples; ++code) {
    FpPoly f = candidate(p, e, code);
    if (irreducible(f, p)) {
      r.modulus_.assign(e, 0);
      for (int i = 0; i < e; ++i) r.modulus_[i] = static_cast<std::uint32_t>(f[i]);
      break;
    }
  }
  if (r.modulus_.empty()) throw std::logic_error("no irreducible polynomial found");
  r.build_log_tables();
  return r;
}

std::vector<std::uint32_t> Ring::decode(std::uint64_t a) const {
  std::vector<std::uint32_t> c(static_cast<std::size_t>(e_), 0);
  for (int i = 0; i < e_; ++i) {
    c[i] = static_cast<std::uint32_t>(a % static_cast<std::uint64_t>(p_));
    a /= static_cast<std::uint64_t>(p_);
  }
  return c;
}

std::uint64_t Ring::encode(const std::vector<std::uint32_t>& coeffs) const {
  if (coeffs.size() != static_cast<std::size_t>(e_))
    throw std::invalid_argument("coefficient vector has wrong length");
  std::uint64_t a = 0;
  for (int i = e_ - 1; i >= 0; --i) {
    if (coeffs[i] >= static_cast<std::uint32_t>(p_))
      throw std::invalid_argument("coefficient out of range");
    a = a * static_cast<std::uint64_t>(p_) + coeffs[i];
  }
  return a;
}

std::uint64_t Ring::add(std::uint64_t a, std::uint64_t b) const {
  if (kind_ != RingKind::ExtensionField) return (a + b) % q_;
  const auto up = static_cast<std::uint64_t>(p_);
  std::uint64_t r = 0, mult = 1;
  for (int i = 0; i < e_; ++i) {
    r += mult * ((a % up + b % up) % up);
    a /= up;
    b /= up;
    mult *= up;
  }
  return r;
}

std::uint64_t Ring::neg(std::uint64_t a) const {
  if (kind_ != RingKind::ExtensionField) return a == 0 ? 0 : q_ - a;
  const auto up = static_cast<std::uint64_t>(p_);
  std::uint64_t r = 0, mult = 1;
  for (int i = 0; i < e_; ++i) {
    std::uint64_t d = a % up;
    r += mult * (d == 0 ? 0 : up - d);
    a /= up;
    mult *= up;
  }
  return r;
}

std::uint64_t Ring::sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

std::uint64_t Ring::mul(std::uint64_t a, std::uint64_t b) const {
  if (kind_ != RingKind::ExtensionField) return (a * b) % q_;
  if (a == 0 || b == 0) return 0;
  if (!log_.empty()) {
    std::uint64_t s = log_[a] + log_[b];
    const std::uint64_t order = q_ - 1;
    if (s >= order) s -= order;
    return exp_[s];
  }
  // Schoolbook product with reduction; used only while bootstrapping tables.
  const auto up = static_cast<std::uint64_t>(p_);
  std::vector<std::uint64_t> prod(2 * e_ - 1, 0);
  auto ca = decode(a);
  auto cb = decode(b);
  for (int i = 0; i < e_; ++i)
    for (int j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(ca[i]) * cb[j]) % up;
  for (int k = 2 * e_ - 2; k >= e_; --k) {
    std::uint64_t lead = prod[k];
    if (lead == 0) continue;
    prod[k] = 0;
    // x^e = -modulus_[e-1] x^{e-1} - ... - modulus_[0]
    for (int i = 0; i < e_; ++i) {
      std::uint64_t m = modulus_[i];
      prod[k - e_ + i] = (prod[k - e_ + i] + (up - m % up) * lead) % up;
    }
  }
  std::vector<std::uint32_t> out(e_);
  for (int i = 0; i < e_; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return encode(out);
}

std::uint64_t Ring::pow(std::uint64_t a, std::uint64_t k) const {
  std::uint64_t r = from_residue(1), base = a;
  while (k) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

std::uint64_t Ring::inv(std::uint64_t a) const {
  if (a == 0) throw std::domain_error("inversion of zero");
  switch (kind_) {
    case RingKind::PrimeField:
      return pow(a, q_ - 2);
    case RingKind::ExtensionField: {
      const std::uint64_t order = q_ - 1;
      return exp_[(order - log_[a]) % order];
    }
    case RingKind::PrimeSquare: {
      if (a % static_cast<std::uint64_t>(p_) == 0)
        throw std::domain_error("inversion of a non-unit modulo p^2");
      // Extended Euclid on (a, q).
      long long t = 0, newt = 1;
      long long r = static_cast<long long>(q_), newr = static_cast<long long>(a);
      while (newr != 0) {
        long long quo = r / newr;
        long long tmp = t - quo * newt;
        t = newt;
        newt = tmp;
        tmp = r - quo * newr;
        r = newr;
        newr = tmp;
      }
      long long res = t % static_cast<long long>(q_);
      if (res < 0) res += static_cast<long long>(q_);
      return static_cast<std::uint64_t>(res);
    }
  }
  throw std::logic_error("unreachable");
}

std::uint64_t Ring::from_residue(long long r) const {
  const long long m = kind_ == RingKind::ExtensionField ? p_ : static_cast<long long>(q_);
  long long v = r % m;
  if (v < 0) v += m;
  return static_cast<std::uint64_t>(v);
}

void Ring::build_log_tables() {
  const std::uint64_t order = q_ - 1;
  // Smallest element code that generates the multiplicative group.
  for (std::uint64_t g = 1; g < q_; ++g) {
    std::vector<std::uint32_t> exps;
    exps.reserve(order);
    std::uint64_t x = from_residue(1);
    bool hit_one_early = false;
    for (std::uint64_t k = 0; k < order; ++k) {
      if (k > 0 && x == from_residue(1)) {
        hit_one_early = true;
        break;
      }
      exps.push_back(static_cast<std::uint32_t>(x));
      x = mul(x, g);
    }
    if (hit_one_early || x != from_residue(1)) continue;
    exp_.assign(exps.begin(), exps.end());
    log_.assign(q_, 0);
    for (std::uint64_t k = 0; k < order; ++k) log_[exp_[k]] = static_cast<std::uint32_t>(k);
    return;
  }
  throw std::logic_error("no generator found");
}

std::string Ring::to_string(std::uint64_t a) const {
  if (kind_ != RingKind::ExtensionField) return std::to_string(a);
  auto c = decode(a);
  std::string out;
  for (int i = e_ - 1; i >= 0; --i) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += std::to_string(c[i]);
    } else {
      if (c[i] != 1) out += std::to_string(c[i]);
      out += "t";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

std::string Ring::name() const {
  switch (kind_) {
    case RingKind::PrimeField:
      return "F_" + std::to_string(p_);
    case RingKind::ExtensionField:
      return "F_" + std::to_string(q_);
    case RingKind::PrimeSquare:
      return "Z/" + std::to_string(q_) + "Z";
  }
  return "?";
}

}  // namespace stratsum
