#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace dubois {

bool is_prime(std::uint64_t n) noexcept;

/// Primes in [lo, hi], endpoints inclusive.
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

/// Parses "2,3,5", "2..50" or a mix such as "2,5..13". Ranges are filtered
/// to primes; explicit entries are kept verbatim (validation is the
/// caller's job). Result is sorted and deduplicated.
std::vector<std::uint64_t> parse_prime_spec(std::string_view text);

}  // namespace dubois
