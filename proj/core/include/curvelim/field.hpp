#pragma once

#include <cstdint>
#include <optional>

namespace curvelim {

// Exact arithmetic in the prime field F_p.  Moduli are odd primes p with
// 3 <= p < 2^31, so a product of two reduced residues fits in int64_t
// without overflow.  All values are kept reduced to the range [0, p).

// Reduce an arbitrary signed value into [0, p).
int64_t mod_reduce(int64_t v, int64_t p);

inline int64_t add_mod(int64_t a, int64_t b, int64_t p) {
  int64_t s = a + b;
  return s >= p ? s - p : s;
}

inline int64_t sub_mod(int64_t a, int64_t b, int64_t p) {
  int64_t s = a - b;
  return s < 0 ? s + p : s;
}

inline int64_t mul_mod(int64_t a, int64_t b, int64_t p) { return (a * b) % p; }

inline int64_t neg_mod(int64_t a, int64_t p) { return a == 0 ? 0 : p - a; }

int64_t pow_mod(int64_t base, int64_t exp, int64_t p);  // exp >= 0

// Multiplicative inverse; throws std::domain_error on a == 0 (mod p).
int64_t inv_mod(int64_t a, int64_t p);

// Deterministic primality test (trial division; moduli are < 2^31).
bool is_prime(int64_t n);

// Throws std::invalid_argument unless 3 <= p < 2^31 and p is prime.
void require_odd_prime_modulus(int64_t p);

// Legendre symbol (a/p): 0 if a == 0, +1 for nonzero squares, -1 otherwise.
int legendre_symbol(int64_t a, int64_t p);

// Square root in F_p via Tonelli-Shanks.  Returns the smaller of the two
// roots (deterministic), or nullopt when a is a non-residue.
std::optional<int64_t> sqrt_mod(int64_t a, int64_t p);

// A field element bundled with its modulus.  Used at API boundaries where a
// bare residue would lose the field it lives in (residue values, pairing
// reports).  Mixed-modulus arithmetic throws std::invalid_argument.
class Fp {
 public:
  Fp(int64_t value, int64_t p);

  int64_t value() const { return v_; }
  int64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  Fp operator+(const Fp& o) const;
  Fp operator-(const Fp& o) const;
  Fp operator*(const Fp& o) const;
  Fp operator-() const;
  Fp inverse() const;

  bool operator==(const Fp& o) const = default;

 private:
  int64_t v_;
  int64_t p_;
};

}  // namespace curvelim
