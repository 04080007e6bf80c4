#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "stratsum/ring.hpp"

namespace stratsum {

using Int = boost::multiprecision::cpp_int;

struct Term {
  Int coeff;
  std::vector<std::uint32_t> exps;  // one exponent per variable
};

/// Sparse multivariate polynomial with integer coefficients.
///
/// Canonical form: no zero coefficients, no repeated exponent vectors, terms
/// sorted by descending lexicographic exponent order. The zero polynomial is
/// representable (empty term list) so gradients can carry zero entries, but
/// parse() rejects it.
class MultiPoly {
public:
  // Grammar: poly := term (('+'|'-') term)* ; term := [integer] ['*'] monomial*
  // with monomial := 'x' index ['^' exponent]; juxtaposition multiplies and
  // whitespace is ignored, e.g. "2x1^2 - x1x2 + 3x3^4".
  static MultiPoly parse(std::string_view text, int nvars);
  static MultiPoly from_terms(int nvars, std::vector<Term> terms);
  static MultiPoly zero(int nvars);

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  bool homogeneous() const { return homogeneous_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }

  MultiPoly derivative(int var) const;
  std::vector<MultiPoly> gradient() const;

  Int eval_int(const std::vector<long long>& point) const;
  // Point coordinates are element codes of `ring`.
  std::uint64_t eval_mod(const std::vector<std::uint64_t>& point, const Ring& ring) const;

  std::string to_string() const;

private:
  int nvars_ = 1;
  int degree_ = 0;
  bool homogeneous_ = true;
  std::vector<Term> terms_;
};

/// Polynomial with coefficients pre-reduced into a ring, for enumeration
/// loops. Exponents are capped per variable so powers can be tabulated.
class CompiledPoly {
public:
  CompiledPoly(const MultiPoly& f, const Ring& ring);
  std::uint64_t eval(const std::uint64_t* point) const;
  int nvars() const { return nvars_; }

private:
  struct CTerm {
    std::uint64_t coeff;
    std::vector<std::uint32_t> exps;
  };
  const Ring* ring_;
  int nvars_;
  std::uint32_t max_exp_;
  std::vector<CTerm> terms_;
};

struct Witness {
  int ext_degree;                      // e with the point in F_{p^e}^n
  std::vector<std::uint64_t> point;    // element codes
  std::string pretty;
};

/// analyze_form output: homogeneity, degree data and the result of the
/// bounded singular-point search.
struct FormReport {
  bool homogeneous = false;
  int degree = 0;
  long d_mod_p = 0;
  bool p_divides_d = false;
  int searched_kmax = 0;
  std::optional<Witness> witness;  // first x != 0 with F(x) = grad F(x) = 0

  bool nonsingular() const { return !witness.has_value(); }
};

// Searches F_{p^e}^n for e = 1..kmax, odometer order, for a nonzero common
// zero of F and its gradient.
FormReport analyze_form(const MultiPoly& f, long p, int kmax);

// Shared engine gate: homogeneous, degree >= 2, p prime not dividing d, and
// no singular witness up to `kmax`. Throws HypothesisError otherwise.
void check_hypotheses(const MultiPoly& f, long p, int kmax);

}  // namespace stratsum
