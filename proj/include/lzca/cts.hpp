#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace lzca {

// Cyclic appendant table. Appendants may be empty; the table may not.
class CtsSystem {
  public:
    // Throws UsageError for an empty table, ParseError for non-binary symbols.
    explicit CtsSystem(std::vector<std::string> appendants);

    std::size_t size() const noexcept { return appendants_.size(); }
    const std::string& appendant(std::size_t i) const { return appendants_.at(i); }
    const std::vector<std::string>& appendants() const noexcept { return appendants_; }

  private:
    std::vector<std::string> appendants_;
};

// Tape word, index of the appendant consulted next, and steps taken so far.
struct CtsState {
    std::string word;
    std::size_t index = 0;
    std::uint64_t step = 0;

    friend bool operator==(const CtsState&, const CtsState&) = default;
};

// Terminal marker: the tape emptied at `step`.
struct Halted {
    std::uint64_t step = 0;

    friend bool operator==(const Halted&, const Halted&) = default;
};

using CtsStepResult = std::variant<CtsState, Halted>;

// Deletes the head symbol; a '1' appends the current appendant, a '0' skips
// it. The index advances cyclically either way. Throws UsageError when the
// word is already empty or the index is out of range.
CtsStepResult cts_step(const CtsState& state, const CtsSystem& system);

struct CtsTrace {
    // Word at steps 0, 1, ... while stored verbatim. Once the stored symbol
    // total would exceed the cap, words stop being recorded and only
    // `lengths` continues.
    std::vector<std::string> words;
    // |word| at every visited non-halted step.
    std::vector<std::size_t> lengths;
    bool words_truncated = false;
    bool halted = false;
    // Step of the last state reached (the halting step when halted).
    std::uint64_t final_step = 0;
};

inline constexpr std::uint64_t kDefaultCtsMaxSteps = 1'000'000;
inline constexpr std::size_t kDefaultCtsStoredSymbols = std::size_t{1} << 24;

CtsTrace cts_run(const CtsState& initial, const CtsSystem& system, std::uint64_t max_steps = kDefaultCtsMaxSteps,
                 std::size_t max_stored_symbols = kDefaultCtsStoredSymbols);

// Text description: first significant line is the initial word, each later
// line one appendant. '#' starts a comment; blank lines are skipped; a line
// holding only '-' denotes the empty word.
struct CtsDescription {
    CtsState initial;
    CtsSystem system;
};

CtsDescription parse_cts_description(std::string_view text);
CtsDescription load_cts_description(const std::filesystem::path& path);

} // namespace lzca
