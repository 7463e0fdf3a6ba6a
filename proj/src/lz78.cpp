#include "lzca/lz78.hpp"

#include <string>

#include "lzca/error.hpp"

namespace lzca {

namespace {

void require_binary(std::string_view bits) {
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != '0' && bits[i] != '1') {
            throw ParseError(std::string("non-binary symbol '") + bits[i] + "' in LZ78 input", i);
        }
    }
}

} // namespace

std::size_t Lz78Counter::count(std::string_view bits) {
    require_binary(bits);
    return count(bits.size(), [bits](std::size_t i) { return bits[i] == '1'; });
}

std::size_t Lz78Counter::count(const Configuration& row, std::size_t start, std::size_t length) {
    if (start > row.width() || length > row.width() - start) {
        throw RangeError("LZ78 range exceeds configuration width");
    }
    const auto words = row.words();
    return count(length, [&words, start](std::size_t i) {
        const std::size_t x = start + i;
        return (words[x / Configuration::kWordBits] >> (x % Configuration::kWordBits)) & 1u;
    });
}

PhraseList lz78_parse(std::string_view bits) {
    require_binary(bits);
    PhraseList out;
    Lz78Dictionary dict;
    Lz78Dictionary::Node node = Lz78Dictionary::kRoot;
    std::size_t phrase_start = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        const unsigned bit = bits[i] == '1';
        const Lz78Dictionary::Node child = dict.child(node, bit);
        if (child != Lz78Dictionary::kAbsent) {
            node = child;
            continue;
        }
        dict.add(node, bit);
        out.phrases.emplace_back(bits.substr(phrase_start, i + 1 - phrase_start));
        phrase_start = i + 1;
        node = Lz78Dictionary::kRoot;
    }
    if (phrase_start < bits.size()) {
        out.phrases.emplace_back(bits.substr(phrase_start));
    }
    return out;
}

std::size_t lz78_phrase_count(std::string_view bits) {
    Lz78Counter counter;
    return counter.count(bits);
}

std::size_t lz78_phrase_count(const Configuration& row) { return lz78_phrase_count(row, 0, row.width()); }

std::size_t lz78_phrase_count(const Configuration& row, std::size_t start, std::size_t length) {
    Lz78Counter counter;
    return counter.count(row, start, length);
}

} // namespace lzca
