#include "lzca/cts.hpp"

#include <fstream>
#include <sstream>

#include "lzca/error.hpp"

namespace lzca {

namespace {

void require_binary_word(std::string_view word, const char* what) {
    for (const char c : word) {
        if (c != '0' && c != '1') {
            throw ParseError(std::string("non-binary symbol in ") + what);
        }
    }
}

// Tape with O(1) amortized pop-front: consumed symbols are dropped lazily.
class Tape {
  public:
    explicit Tape(std::string word) : buf_(std::move(word)) {}

    bool empty() const noexcept { return head_ == buf_.size(); }
    std::size_t size() const noexcept { return buf_.size() - head_; }
    std::string_view view() const noexcept { return std::string_view(buf_).substr(head_); }

    char pop() {
        const char c = buf_[head_++];
        if (head_ > 4096 && head_ * 2 > buf_.size()) {
            buf_.erase(0, head_);
            head_ = 0;
        }
        return c;
    }
    void append(std::string_view s) { buf_.append(s); }

  private:
    std::string buf_;
    std::size_t head_ = 0;
};

} // namespace

CtsSystem::CtsSystem(std::vector<std::string> appendants) : appendants_(std::move(appendants)) {
    if (appendants_.empty()) {
        throw UsageError("appendant table must not be empty");
    }
    for (const auto& a : appendants_) {
        require_binary_word(a, "appendant");
    }
}

CtsStepResult cts_step(const CtsState& state, const CtsSystem& system) {
    if (state.word.empty()) {
        throw UsageError("cannot step a halted cyclic tag system");
    }
    if (state.index >= system.size()) {
        throw UsageError("appendant index out of range");
    }
    CtsState next;
    next.word = state.word.substr(1);
    if (state.word.front() == '1') {
        next.word += system.appendant(state.index);
    }
    next.index = (state.index + 1) % system.size();
    next.step = state.step + 1;
    if (next.word.empty()) {
        return Halted{next.step};
    }
    return next;
}

CtsTrace cts_run(const CtsState& initial, const CtsSystem& system, std::uint64_t max_steps,
                 std::size_t max_stored_symbols) {
    require_binary_word(initial.word, "initial word");
    if (initial.index >= system.size()) {
        throw UsageError("appendant index out of range");
    }
    CtsTrace trace;
    trace.final_step = initial.step;
    Tape tape(initial.word);
    std::size_t index = initial.index;
    std::size_t stored = 0;

    auto record = [&] {
        trace.lengths.push_back(tape.size());
        if (!trace.words_truncated && stored + tape.size() <= max_stored_symbols) {
            trace.words.emplace_back(tape.view());
            stored += tape.size();
        } else {
            trace.words_truncated = true;
        }
    };

    if (tape.empty()) {
        trace.halted = true;
        return trace;
    }
    record();
    for (std::uint64_t n = 0; n < max_steps; ++n) {
        if (tape.pop() == '1') {
            tape.append(system.appendant(index));
        }
        index = (index + 1) % system.size();
        ++trace.final_step;
        if (tape.empty()) {
            trace.halted = true;
            break;
        }
        record();
    }
    return trace;
}

CtsDescription parse_cts_description(std::string_view text) {
    std::vector<std::string> words;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::string word;
        for (const char c : line) {
            if (c == ' ' || c == '\t' || c == '\r') {
                continue;
            }
            word += c;
        }
        if (word.empty()) {
            continue;
        }
        if (word == "-") {
            word.clear();
        } else if (word.find_first_not_of("01") != std::string::npos) {
            throw ParseError("line " + std::to_string(line_no) + ": expected a binary word or '-'");
        }
        words.push_back(std::move(word));
    }
    if (words.size() < 2) {
        throw ParseError("CTS description needs an initial word and at least one appendant");
    }
    CtsState initial{words.front(), 0, 0};
    words.erase(words.begin());
    return CtsDescription{std::move(initial), CtsSystem(std::move(words))};
}

CtsDescription load_cts_description(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_cts_description(buf.str());
}

} // namespace lzca
