#include "lzca/configuration.hpp"

#include <bit>
#include <random>
#include <string>

#include "lzca/error.hpp"

namespace lzca {

Configuration::Configuration(std::size_t width) : width_(width), words_((width + kWordBits - 1) / kWordBits, 0) {
    if (width == 0) {
        throw UsageError("configuration width must be positive");
    }
}

Configuration Configuration::from_string(std::string_view bits) {
    if (bits.empty()) {
        throw ParseError("configuration has zero digits");
    }
    Configuration config(bits.size());
    for (std::size_t x = 0; x < bits.size(); ++x) {
        const char c = bits[x];
        if (c == '1') {
            config.set(x, true);
        } else if (c != '0') {
            throw ParseError(std::string("illegal character '") + c + "' in configuration string", x);
        }
    }
    return config;
}

Configuration::Word Configuration::tail_mask() const noexcept {
    const std::size_t used = width_ % kWordBits;
    return used == 0 ? ~Word{0} : (Word{1} << used) - 1;
}

std::size_t Configuration::popcount() const noexcept {
    std::size_t n = 0;
    for (const Word w : words_) {
        n += static_cast<std::size_t>(std::popcount(w));
    }
    return n;
}

std::string Configuration::to_string() const { return to_string(0, width_); }

std::string Configuration::to_string(std::size_t start, std::size_t length) const {
    std::string out(length, '0');
    for (std::size_t i = 0; i < length; ++i) {
        if (get((start + i) % width_)) {
            out[i] = '1';
        }
    }
    return out;
}

Configuration Configuration::rotated(std::ptrdiff_t k) const {
    const auto w = static_cast<std::ptrdiff_t>(width_);
    const std::size_t shift = static_cast<std::size_t>(((k % w) + w) % w);
    Configuration out(width_);
    for (std::size_t x = 0; x < width_; ++x) {
        if (get(x)) {
            out.set((x + shift) % width_, true);
        }
    }
    return out;
}

Configuration random_configuration(std::size_t width, double density, std::uint64_t seed) {
    if (!(density >= 0.0 && density <= 1.0)) {
        throw RangeError("density must lie in [0, 1]");
    }
    Configuration config(width);
    std::mt19937_64 gen(seed);
    constexpr double kScale = 1.0 / 9007199254740992.0; // 2^-53
    for (std::size_t x = 0; x < width; ++x) {
        const double u = static_cast<double>(gen() >> 11) * kScale;
        if (u < density) {
            config.set(x, true);
        }
    }
    return config;
}

Configuration tile_configuration(const Configuration& pattern, std::size_t width) {
    Configuration out(width);
    for (std::size_t x = 0; x < width; ++x) {
        if (pattern.get(x % pattern.width())) {
            out.set(x, true);
        }
    }
    return out;
}

} // namespace lzca
