#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace epg {

using std::uint64_t;

inline uint64_t gcd(uint64_t a, uint64_t b) { return std::gcd(a, b); }
inline uint64_t lcm(uint64_t a, uint64_t b) { return (a == 0 || b == 0) ? 0 : a / std::gcd(a, b) * b; }

/// Prime factorization by trial division, primes ascending.
std::vector<std::pair<uint64_t, unsigned>> factorize(uint64_t n);

std::vector<uint64_t> prime_divisors(uint64_t n);

bool is_prime(uint64_t n);

/// (p, e) when n = p^e with e >= 1.
std::optional<std::pair<uint64_t, unsigned>> prime_power(uint64_t n);

uint64_t euler_phi(uint64_t n);

/// Largest power of p dividing n.
uint64_t p_part(uint64_t n, uint64_t p);

uint64_t ipow(uint64_t base, unsigned exp);

}  // namespace epg
