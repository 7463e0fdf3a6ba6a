#include "lzca/rule.hpp"

#include <string>

#include "lzca/error.hpp"

namespace lzca {

RuleTable make_rule_table(int rule_number) {
    if (rule_number < 0 || rule_number > 255) {
        throw RangeError("rule number " + std::to_string(rule_number) + " outside 0..255");
    }
    RuleTable table;
    table.number_ = static_cast<std::uint8_t>(rule_number);
    for (unsigned k = 0; k < 8; ++k) {
        table.entries_[k] = static_cast<std::uint8_t>((rule_number >> k) & 1);
    }
    return table;
}

std::uint8_t RuleTable::encode() const noexcept {
    unsigned n = 0;
    for (unsigned k = 0; k < 8; ++k) {
        n |= static_cast<unsigned>(entries_[k] & 1u) << k;
    }
    return static_cast<std::uint8_t>(n);
}

} // namespace lzca
