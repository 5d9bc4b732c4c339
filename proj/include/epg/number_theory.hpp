#pragma once

#include <cstdint>
#include <optional>

namespace epg {

/// Euler's totient: number of k in [1, n] coprime to n. Throws on n == 0.
std::uint64_t euler_phi(std::uint64_t n);

/// Returns the prime p when n = p^k with k >= 1, std::nullopt otherwise.
/// n == 1 is not a prime power; callers handle the identity separately.
std::optional<std::uint64_t> prime_power_base(std::uint64_t n);

inline bool is_prime_power(std::uint64_t n) { return prime_power_base(n).has_value(); }

}  // namespace epg
