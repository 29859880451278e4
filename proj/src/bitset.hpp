#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>

namespace gcq::detail {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

inline void set_bit(Word* row, std::size_t i) { row[i / kWordBits] |= Word{1} << (i % kWordBits); }
inline void clear_bit(Word* row, std::size_t i) { row[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
inline bool test_bit(const Word* row, std::size_t i) {
  return (row[i / kWordBits] >> (i % kWordBits)) & Word{1};
}

inline std::size_t popcount(const Word* row, std::size_t words) {
  std::size_t c = 0;
  for (std::size_t w = 0; w < words; ++w) c += static_cast<std::size_t>(std::popcount(row[w]));
  return c;
}

// Calls f(i) for every set bit, ascending.
template <typename F>
inline void for_each_bit(const Word* row, std::size_t words, F&& f) {
  for (std::size_t w = 0; w < words; ++w) {
    Word bits = row[w];
    while (bits) {
      f(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
}

}  // namespace gcq::detail
