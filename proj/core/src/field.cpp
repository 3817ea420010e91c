#include "curvelim/field.hpp"

#include <stdexcept>
#include <string>

namespace curvelim {

int64_t mod_reduce(int64_t v, int64_t p) {
  int64_t r = v % p;
  return r < 0 ? r + p : r;
}

int64_t pow_mod(int64_t base, int64_t exp, int64_t p) {
  if (exp < 0) throw std::invalid_argument("pow_mod: negative exponent");
  int64_t b = mod_reduce(base, p);
  int64_t r = 1 % p;
  while (exp > 0) {
    if (exp & 1) r = mul_mod(r, b, p);
    b = mul_mod(b, b, p);
    exp >>= 1;
  }
  return r;
}

int64_t inv_mod(int64_t a, int64_t p) {
  a = mod_reduce(a, p);
  if (a == 0) throw std::domain_error("inv_mod: division by zero in F_p");
  // Extended Euclid on (a, p); p prime so gcd is 1.
  int64_t r0 = a, r1 = p, s0 = 1, s1 = 0;
  while (r1 != 0) {
    int64_t q = r0 / r1;
    int64_t r2 = r0 - q * r1;
    int64_t s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  return mod_reduce(s0, p);
}

bool is_prime(int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (int64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

void require_odd_prime_modulus(int64_t p) {
  if (p < 3 || p >= (int64_t{1} << 31) || p % 2 == 0 || !is_prime(p)) {
    throw std::invalid_argument("modulus must be an odd prime below 2^31, got " +
                                std::to_string(p));
  }
}

int legendre_symbol(int64_t a, int64_t p) {
  a = mod_reduce(a, p);
  if (a == 0) return 0;
  return pow_mod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

std::optional<int64_t> sqrt_mod(int64_t a, int64_t p) {
  a = mod_reduce(a, p);
  if (a == 0) return int64_t{0};
  if (legendre_symbol(a, p) != 1) return std::nullopt;

  int64_t root;
  if (p % 4 == 3) {
    root = pow_mod(a, (p + 1) / 4, p);
  } else {
    // Tonelli-Shanks.  Write p - 1 = q * 2^s with q odd.
    int64_t q = p - 1;
    int s = 0;
    while (q % 2 == 0) {
      q /= 2;
      ++s;
    }
    // Find a non-residue z (deterministic scan keeps results reproducible).
    int64_t z = 2;
    while (legendre_symbol(z, p) != -1) ++z;

    int64_t m = s;
    int64_t c = pow_mod(z, q, p);
    int64_t t = pow_mod(a, q, p);
    int64_t r = pow_mod(a, (q + 1) / 2, p);
    while (t != 1) {
      int64_t i = 0;
      int64_t t2 = t;
      while (t2 != 1) {
        t2 = mul_mod(t2, t2, p);
        ++i;
        if (i == m) throw std::logic_error("sqrt_mod: Tonelli-Shanks failed");
      }
      int64_t b = c;
      for (int64_t j = 0; j < m - i - 1; ++j) b = mul_mod(b, b, p);
      m = i;
      c = mul_mod(b, b, p);
      t = mul_mod(t, c, p);
      r = mul_mod(r, b, p);
    }
    root = r;
  }
  int64_t other = p - root;
  return root <= other ? root : other;
}

Fp::Fp(int64_t value, int64_t p) : v_(mod_reduce(value, p)), p_(p) {
  if (p < 2) throw std::invalid_argument("Fp: modulus must be at least 2");
}

namespace {
void require_same_modulus(const Fp& a, const Fp& b) {
  if (a.modulus() != b.modulus()) {
    throw std::invalid_argument("Fp: mixed moduli " + std::to_string(a.modulus()) +
                                " and " + std::to_string(b.modulus()));
  }
}
}  // namespace

Fp Fp::operator+(const Fp& o) const {
  require_same_modulus(*this, o);
  return Fp(add_mod(v_, o.v_, p_), p_);
}

Fp Fp::operator-(const Fp& o) const {
  require_same_modulus(*this, o);
  return Fp(sub_mod(v_, o.v_, p_), p_);
}

Fp Fp::operator*(const Fp& o) const {
  require_same_modulus(*this, o);
  return Fp(mul_mod(v_, o.v_, p_), p_);
}

Fp Fp::operator-() const { return Fp(neg_mod(v_, p_), p_); }

Fp Fp::inverse() const { return Fp(inv_mod(v_, p_), p_); }

}  // namespace curvelim
