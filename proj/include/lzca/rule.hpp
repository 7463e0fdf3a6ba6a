#pragma once

#include <array>
#include <cstdint>

namespace lzca {

// Transition table of an elementary (two-state, radius-1) cellular automaton.
// entries[k] is the next state for the neighborhood whose cells (left,
// center, right) spell k in binary, i.e. k = 4*left + 2*center + right.
class RuleTable {
  public:
    std::uint8_t rule_number() const noexcept { return number_; }
    const std::array<std::uint8_t, 8>& entries() const noexcept { return entries_; }

    std::uint8_t next_state(unsigned left, unsigned center, unsigned right) const noexcept {
        return entries_[((left & 1u) << 2) | ((center & 1u) << 1) | (right & 1u)];
    }

    // Rebuilds the rule number from the entries (bit k <- entries[k]).
    std::uint8_t encode() const noexcept;

    friend bool operator==(const RuleTable&, const RuleTable&) = default;

  private:
    friend RuleTable make_rule_table(int);
    RuleTable() = default;

    std::uint8_t number_ = 0;
    std::array<std::uint8_t, 8> entries_{};
};

// Throws RangeError unless 0 <= rule_number <= 255.
RuleTable make_rule_table(int rule_number);

} // namespace lzca
