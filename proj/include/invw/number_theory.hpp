#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace invw {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m);
/// Inverse of a modulo m; throws std::domain_error when gcd(a, m) != 1.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);

/// Deterministic Miller-Rabin for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Prime factorisation as (prime, exponent) pairs in increasing order.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

/// Smallest positive k with a^k = 1 mod m; requires gcd(a, m) = 1.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);

/// Smallest generator of (Z/p)^*.
std::uint64_t primitive_root(std::uint64_t p);

/// (p, k) with q = p^k, or nothing if q is not a prime power.
std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t q);

/// Smallest prime p > bound with p = 1 mod modulus.
std::uint64_t next_prime_congruent_one(std::uint64_t modulus, std::uint64_t bound);

}  // namespace invw
