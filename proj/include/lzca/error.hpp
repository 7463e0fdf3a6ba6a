#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lzca {

// Argument outside its documented domain (rule number, region bounds).
class RangeError : public std::out_of_range {
  public:
    using std::out_of_range::out_of_range;
};

// Caller violated a precondition (bad width, stepping a halted system, ...).
class UsageError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Malformed input data. `offset` is the byte offset of the offending
// character when known.
class ParseError : public std::runtime_error {
  public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    explicit ParseError(const std::string& what, std::size_t offset = npos)
        : std::runtime_error(what), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

  private:
    std::size_t offset_;
};

// Request exceeds what the implementation supports (e.g. ether search bound).
class CapabilityError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace lzca
