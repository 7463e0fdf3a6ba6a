#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lzca {

// A cyclic row of binary cells, bit-packed 64 per word. Cell x lives in bit
// x % 64 of word x / 64; padding bits past `width` in the last word are kept
// zero so that word-level comparisons and popcounts stay exact.
class Configuration {
  public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    // All-zero row. Throws UsageError for width 0.
    explicit Configuration(std::size_t width);

    // Strict '0'/'1' string, cell 0 first. Throws ParseError on any other
    // character (whitespace included) or on an empty string.
    static Configuration from_string(std::string_view bits);

    std::size_t width() const noexcept { return width_; }
    std::size_t word_count() const noexcept { return words_.size(); }

    bool get(std::size_t x) const noexcept { return (words_[x / kWordBits] >> (x % kWordBits)) & 1u; }
    bool operator[](std::size_t x) const noexcept { return get(x); }
    void set(std::size_t x, bool value) noexcept {
        const Word mask = Word{1} << (x % kWordBits);
        if (value) {
            words_[x / kWordBits] |= mask;
        } else {
            words_[x / kWordBits] &= ~mask;
        }
    }

    std::span<const Word> words() const noexcept { return words_; }
    // Mutable word access for kernels. Callers must keep the padding bits zero.
    std::span<Word> words_mut() noexcept { return words_; }
    // Mask of the valid bits in the last word.
    Word tail_mask() const noexcept;

    std::size_t popcount() const noexcept;
    std::string to_string() const;
    std::string to_string(std::size_t start, std::size_t length) const;

    // Cyclic shift to the right: result[(x + k) mod width] = this[x].
    // Negative k shifts left.
    Configuration rotated(std::ptrdiff_t k) const;

    friend bool operator==(const Configuration&, const Configuration&) = default;

  private:
    std::size_t width_ = 0;
    std::vector<Word> words_;
};

// Cells are independently 1 with probability `density`. Uses std::mt19937_64
// seeded with `seed`, one 64-bit draw per cell in x order; the draw's top 53
// bits form u in [0,1) and the cell is set when u < density.
Configuration random_configuration(std::size_t width, double density, std::uint64_t seed);

// Repeats `pattern` cyclically to fill `width` cells.
Configuration tile_configuration(const Configuration& pattern, std::size_t width);

} // namespace lzca
