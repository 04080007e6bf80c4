#include "stratsum/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

#include "stratsum/errors.hpp"

namespace stratsum {

namespace {

bool exps_less_desc(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::uint32_t term_degree(const Term& t) {
  std::uint32_t d = 0;
  for (auto e : t.exps) d += e;
  return d;
}

constexpr std::uint32_t kMaxExponent = 64;

struct Parser {
  std::string_view text;
  std::size_t pos = 0;
  int nvars;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  Int parse_integer() {
    skip_ws();
    std::size_t start = pos;
    Int v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      ++pos;
    }
    if (pos == start) throw ParseError("expected digits", pos);
    return v;
  }

  std::uint32_t parse_small_nat(const char* what, std::uint32_t max) {
    skip_ws();
    std::size_t start = pos;
    std::uint64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
      if (v > max) throw ParseError(std::string(what) + " out of range", start);
      ++pos;
    }
    if (pos == start) throw ParseError(std::string("expected ") + what, pos);
    return static_cast<std::uint32_t>(v);
  }

  // term := [integer] ['*'] monomial* with '*' also allowed between monomials
  Term parse_term(int sign) {
    Term t;
    t.exps.assign(nvars, 0);
    bool any = false;
    Int coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_integer();
      any = true;
      if (peek() == '*') ++pos;
    }
    while (peek() == 'x') {
      std::size_t xpos = pos;
      ++pos;
      std::uint32_t idx = parse_small_nat("variable index", 4096);
      if (idx < 1 || idx > static_cast<std::uint32_t>(nvars))
        throw ParseError("variable index out of range", xpos);
      std::uint32_t exp = 1;
      if (peek() == '^') {
        ++pos;
        exp = parse_small_nat("exponent", kMaxExponent);
      }
      std::uint64_t total = static_cast<std::uint64_t>(t.exps[idx - 1]) + exp;
      if (total > kMaxExponent) throw ParseError("exponent out of range", xpos);
      t.exps[idx - 1] = static_cast<std::uint32_t>(total);
      any = true;
      if (peek() == '*') ++pos;
    }
    if (!any) throw ParseError("expected a term", pos);
    t.coeff = sign > 0 ? coeff : -coeff;
    return t;
  }

  std::vector<Term> parse_poly() {
    std::vector<Term> terms;
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    }
    terms.push_back(parse_term(sign));
    while (!eof()) {
      char c = peek();
      if (c == '+' || c == '-') {
        ++pos;
        terms.push_back(parse_term(c == '-' ? -1 : 1));
      } else {
        throw ParseError("unexpected character", pos);
      }
    }
    return terms;
  }
};

}  // namespace

MultiPoly MultiPoly::zero(int nvars) {
  if (nvars < 1) throw std::invalid_argument("nvars must be >= 1");
  MultiPoly f;
  f.nvars_ = nvars;
  return f;
}

MultiPoly MultiPoly::from_terms(int nvars, std::vector<Term> terms) {
  if (nvars < 1) throw std::invalid_argument("nvars must be >= 1");
  std::map<std::vector<std::uint32_t>, Int> merged;
  for (auto& t : terms) {
    if (t.exps.size() != static_cast<std::size_t>(nvars))
      throw std::invalid_argument("term exponent vector has wrong length");
    merged[t.exps] += t.coeff;
  }
  MultiPoly f;
  f.nvars_ = nvars;
  for (auto& [exps, coeff] : merged) {
    if (coeff == 0) continue;
    f.terms_.push_back(Term{coeff, exps});
  }
  std::sort(f.terms_.begin(), f.terms_.end(),
            [](const Term& a, const Term& b) { return exps_less_desc(a.exps, b.exps); });
  f.degree_ = 0;
  f.homogeneous_ = true;
  for (std::size_t i = 0; i < f.terms_.size(); ++i) {
    std::uint32_t d = term_degree(f.terms_[i]);
    if (i == 0) {
      f.degree_ = static_cast<int>(d);
    } else if (static_cast<int>(d) != f.degree_) {
      f.homogeneous_ = false;
      f.degree_ = std::max(f.degree_, static_cast<int>(d));
    }
  }
  return f;
}

MultiPoly MultiPoly::parse(std::string_view text, int nvars) {
  if (nvars < 1) throw std::invalid_argument("nvars must be >= 1");
  Parser p{text, 0, nvars};
  MultiPoly f = from_terms(nvars, p.parse_poly());
  if (f.is_zero()) throw ParseError("zero polynomial rejected", 0);
  return f;
}

MultiPoly MultiPoly::derivative(int var) const {
  if (var < 0 || var >= nvars_) throw std::invalid_argument("variable index out of range");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.exps[var] == 0) continue;
    Term d;
    d.coeff = t.coeff * t.exps[var];
    d.exps = t.exps;
    --d.exps[var];
    out.push_back(std::move(d));
  }
  return from_terms(nvars_, std::move(out));
}

std::vector<MultiPoly> MultiPoly::gradient() const {
  std::vector<MultiPoly> g;
  g.reserve(nvars_);
  for (int i = 0; i < nvars_; ++i) g.push_back(derivative(i));
  return g;
}

Int MultiPoly::eval_int(const std::vector<long long>& point) const {
  if (point.size() != static_cast<std::size_t>(nvars_))
    throw std::invalid_argument("point dimension mismatch");
  Int acc = 0;
  for (const auto& t : terms_) {
    Int v = t.coeff;
    for (int i = 0; i < nvars_; ++i)
      for (std::uint32_t k = 0; k < t.exps[i]; ++k) v *= point[i];
    acc += v;
  }
  return acc;
}

std::uint64_t MultiPoly::eval_mod(const std::vector<std::uint64_t>& point, const Ring& ring) const {
  if (point.size() != static_cast<std::size_t>(nvars_))
    throw std::invalid_argument("point dimension mismatch");
  CompiledPoly c(*this, ring);
  return c.eval(point.data());
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    Int mag = t.coeff < 0 ? Int(-t.coeff) : t.coeff;
    bool neg = t.coeff < 0;
    if (i == 0) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mono;
    for (int v = 0; v < nvars_; ++v) {
      if (t.exps[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(v + 1);
      if (t.exps[v] > 1) mono += "^" + std::to_string(t.exps[v]);
    }
    if (mono.empty()) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str() + "*";
      out += mono;
    }
  }
  return out;
}

CompiledPoly::CompiledPoly(const MultiPoly& f, const Ring& ring)
    : ring_(&ring), nvars_(f.nvars()), max_exp_(0) {
  if (nvars_ > 8) throw std::invalid_argument("at most 8 variables supported");
  const Int modulus = ring.kind() == RingKind::ExtensionField
                          ? Int(ring.p())
                          : Int(static_cast<long long>(ring.q()));
  for (const auto& t : f.terms()) {
    Int r = t.coeff % modulus;
    if (r < 0) r += modulus;
    std::uint64_t code = ring.from_residue(r.convert_to<long long>());
    if (code == 0) continue;
    for (auto e : t.exps) max_exp_ = std::max(max_exp_, e);
    terms_.push_back(CTerm{code, t.exps});
  }
}

std::uint64_t CompiledPoly::eval(const std::uint64_t* point) const {
  // Tabulate x_i^k once per point; degrees are small.
  std::uint64_t powers[8][kMaxExponent + 1];
  for (int i = 0; i < nvars_; ++i) {
    powers[i][0] = ring_->from_residue(1);
    for (std::uint32_t k = 1; k <= max_exp_; ++k)
      powers[i][k] = ring_->mul(powers[i][k - 1], point[i]);
  }
  std::uint64_t acc = 0;
  for (const auto& t : terms_) {
    std::uint64_t v = t.coeff;
    for (int i = 0; i < nvars_; ++i)
      if (t.exps[i]) v = ring_->mul(v, powers[i][t.exps[i]]);
    acc = ring_->add(acc, v);
  }
  return acc;
}

FormReport analyze_form(const MultiPoly& f, long p, int kmax) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (kmax < 1 || kmax > 4) throw std::invalid_argument("kmax must be in [1,4]");
  FormReport rep;
  rep.homogeneous = f.homogeneous() && !f.is_zero();
  rep.degree = f.degree();
  rep.d_mod_p = f.degree() % p;
  rep.p_divides_d = rep.d_mod_p == 0 && f.degree() > 0;
  rep.searched_kmax = kmax;

  const int n = f.nvars();
  auto grads = f.gradient();
  for (int e = 1; e <= kmax && !rep.witness; ++e) {
    Ring ring = Ring::extension(p, e);
    CompiledPoly cf(f, ring);
    std::vector<CompiledPoly> cg;
    cg.reserve(n);
    for (auto& g : grads) cg.emplace_back(g, ring);

    std::vector<std::uint64_t> x(n, 0);
    const std::uint64_t q = ring.q();
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= q;
    for (std::uint64_t idx = 1; idx < total; ++idx) {
      // Odometer with the last coordinate fastest.
      std::uint64_t t = idx;
      for (int i = n - 1; i >= 0; --i) {
        x[i] = t % q;
        t /= q;
      }
      if (cf.eval(x.data()) != 0) continue;
      bool singular = true;
      for (int i = 0; i < n && singular; ++i)
        if (cg[i].eval(x.data()) != 0) singular = false;
      if (singular) {
        Witness w;
        w.ext_degree = e;
        w.point = x;
        std::string s = "(";
        for (int i = 0; i < n; ++i) {
          if (i) s += ", ";
          s += ring.to_string(x[i]);
        }
        s += ") over " + ring.name();
        w.pretty = s;
        rep.witness = std::move(w);
        break;
      }
    }
  }
  return rep;
}

void check_hypotheses(const MultiPoly& f, long p, int kmax) {
  if (f.is_zero()) throw HypothesisError("zero polynomial rejected");
  if (!f.homogeneous()) throw HypothesisError("form must be homogeneous");
  if (f.degree() < 2) throw HypothesisError("form must have degree >= 2");
  if (!is_prime(p)) throw HypothesisError("p = " + std::to_string(p) + " is not prime");
  if (f.degree() % p == 0)
    throw HypothesisError("p = " + std::to_string(p) + " divides the degree d = " +
                          std::to_string(f.degree()));
  FormReport rep = analyze_form(f, p, kmax);
  if (rep.witness) {
    throw HypothesisError("form is singular modulo " + std::to_string(p) +
                          ": witness " + rep.witness->pretty);
  }
}

}  // namespace stratsum
