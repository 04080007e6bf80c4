#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace stratsum {

enum class RingKind { PrimeField, ExtensionField, PrimeSquare };

bool is_prime(long n);

/// One of the supported coefficient rings: F_p, F_{p^e} (e <= 4), or Z/p^2Z.
///
/// Elements are passed around as integer codes in [0, q). For F_p and Z/p^2Z
/// the code is the residue itself. For F_{p^e} the code is the base-p odometer
/// index of the coefficient vector (c_0, ..., c_{e-1}), c_0 least significant,
/// so enumeration order 0, 1, ..., q-1 walks the coefficient odometer.
class Ring {
public:
  static Ring prime_field(long p);
  static Ring prime_square(long p);
  // e = 1 degenerates to the prime field. The modulus polynomial is the
  // lexicographically first monic irreducible of degree e over F_p, comparing
  // coefficient tuples (a_{e-1}, ..., a_1, a_0).
  static Ring extension(long p, int e);

  RingKind kind() const { return kind_; }
  long p() const { return p_; }
  int e() const { return e_; }
  std::uint64_t q() const { return q_; }
  // Monic modulus as (a_0, ..., a_{e-1}); empty unless an extension with e >= 2.
  const std::vector<std::uint32_t>& modulus_poly() const { return modulus_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg(std::uint64_t a) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t inv(std::uint64_t a) const;  // throws on zero / non-unit
  std::uint64_t pow(std::uint64_t a, std::uint64_t k) const;

  // Canonical image of an arbitrary integer residue (mod p for extensions,
  // mod q otherwise).
  std::uint64_t from_residue(long long r) const;

  std::vector<std::uint32_t> decode(std::uint64_t a) const;
  std::uint64_t encode(const std::vector<std::uint32_t>& coeffs) const;
  std::string to_string(std::uint64_t a) const;
  std::string name() const;

private:
  Ring() = default;
  void build_log_tables();

  RingKind kind_ = RingKind::PrimeField;
  long p_ = 2;
  int e_ = 1;
  std::uint64_t q_ = 2;
  std::vector<std::uint32_t> modulus_;
  // Discrete-log tables over a fixed generator; only for proper extensions.
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
};

}  // namespace stratsum
