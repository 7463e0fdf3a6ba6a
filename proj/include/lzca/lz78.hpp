#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lzca/configuration.hpp"

namespace lzca {

// Result of an LZ78 parse. Concatenating `phrases` reproduces the input.
struct PhraseList {
    std::vector<std::string> phrases;

    std::size_t count() const noexcept { return phrases.size(); }
};

// Binary trie of known phrases. Node 0 is the empty phrase; every other node
// is one phrase, numbered in creation order.
class Lz78Dictionary {
  public:
    using Node = std::uint32_t;
    static constexpr Node kRoot = 0;
    static constexpr Node kAbsent = 0; // the root is never anyone's child

    Lz78Dictionary() { clear(); }

    void clear() {
        children_.clear();
        children_.push_back({kAbsent, kAbsent});
    }
    void reserve(std::size_t nodes) { children_.reserve(nodes); }

    std::size_t node_count() const noexcept { return children_.size(); }
    Node child(Node node, unsigned bit) const noexcept { return children_[node][bit]; }

    Node add(Node parent, unsigned bit) {
        const auto id = static_cast<Node>(children_.size());
        children_.push_back({kAbsent, kAbsent});
        children_[parent][bit] = id;
        return id;
    }

  private:
    std::vector<std::array<Node, 2>> children_;
};

// Phrase counter that keeps its trie allocation between calls. Each call
// starts from an empty dictionary. Not thread-safe; use one per thread.
class Lz78Counter {
  public:
    // `next(i)` yields the i-th symbol (0 or 1) for i in [0, length).
    template <class BitAt>
    std::size_t count(std::size_t length, BitAt&& next) {
        dict_.clear();
        dict_.reserve(length + 1);
        std::size_t phrases = 0;
        Lz78Dictionary::Node node = Lz78Dictionary::kRoot;
        for (std::size_t i = 0; i < length; ++i) {
            const unsigned bit = static_cast<unsigned>(next(i)) & 1u;
            const Lz78Dictionary::Node child = dict_.child(node, bit);
            if (child != Lz78Dictionary::kAbsent) {
                node = child;
            } else {
                dict_.add(node, bit);
                ++phrases;
                node = Lz78Dictionary::kRoot;
            }
        }
        // Input ended inside a known phrase: that repeat is the final phrase.
        if (node != Lz78Dictionary::kRoot) {
            ++phrases;
        }
        return phrases;
    }

    std::size_t count(std::string_view bits);
    // Cells [start, start + length) of `row`, read in increasing x. The range
    // must lie within the row (no wrap-around).
    std::size_t count(const Configuration& row, std::size_t start, std::size_t length);
    std::size_t count(const Configuration& row) { return count(row, 0, row.width()); }

    const Lz78Dictionary& dictionary() const noexcept { return dict_; }

  private:
    Lz78Dictionary dict_;
};

// Greedy left-to-right LZ78 division. Throws ParseError on symbols other
// than '0'/'1'.
PhraseList lz78_parse(std::string_view bits);

// Same count as lz78_parse(bits).count() without materializing phrases.
std::size_t lz78_phrase_count(std::string_view bits);
std::size_t lz78_phrase_count(const Configuration& row);
std::size_t lz78_phrase_count(const Configuration& row, std::size_t start, std::size_t length);

} // namespace lzca
