#pragma once

#include <bit>
#include <cstdint>

// Small helpers for 64-bit subset masks. Bit i stands for the i-th element
// (or vertex) in sorted label order.
namespace nec::bits {

constexpr std::uint64_t bit(unsigned i) { return std::uint64_t{1} << i; }
constexpr bool test(std::uint64_t m, unsigned i) { return (m >> i) & 1u; }
constexpr int count(std::uint64_t m) { return std::popcount(m); }
constexpr bool subset(std::uint64_t a, std::uint64_t b) { return (a & ~b) == 0; }
constexpr unsigned lowest(std::uint64_t m) { return static_cast<unsigned>(std::countr_zero(m)); }

template <class F>
void for_each(std::uint64_t m, F&& f) {
  while (m != 0) {
    f(lowest(m));
    m &= m - 1;
  }
}

// Mask of the first n positions.
constexpr std::uint64_t first(unsigned n) { return n >= 64 ? ~std::uint64_t{0} : bit(n) - 1; }

}  // namespace nec::bits
