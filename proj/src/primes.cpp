#include "dubois/primes.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "dubois/errors.hpp"

namespace dubois {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = lo; n <= hi; ++n) {
    if (is_prime(n)) out.push_back(n);
    if (n == hi) break;
  }
  return out;
}

namespace {

std::uint64_t parse_uint(std::string_view text, std::size_t offset) {
  std::uint64_t value = 0;
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw ParseError("expected an unsigned integer in prime list, got '" + std::string(text) + "'", offset);
  }
  return value;
}

}  // namespace

std::vector<std::uint64_t> parse_prime_spec(std::string_view text) {
  std::vector<std::uint64_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(start, comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1), ++start;
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (auto dots = item.find(".."); dots != std::string_view::npos) {
      const auto lo = parse_uint(item.substr(0, dots), start);
      const auto hi = parse_uint(item.substr(dots + 2), start + dots + 2);
      if (lo > hi) throw ParseError("empty prime range", start);
      auto range = primes_in_range(lo, hi);
      out.insert(out.end(), range.begin(), range.end());
    } else {
      out.push_back(parse_uint(item, start));
    }
    start = comma + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace dubois
