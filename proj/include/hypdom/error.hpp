#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hypdom {

enum class Errc {
    IndexOutOfRange,
    EmptyEdge,
    DuplicateEdge,
    InvalidParams,
    Overflow,
    ParseError,
    Infeasible,
    BudgetExceeded,
    TooLarge,
    NotApplicable,
    SearchFailed,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::IndexOutOfRange: return "IndexOutOfRange";
        case Errc::EmptyEdge: return "EmptyEdge";
        case Errc::DuplicateEdge: return "DuplicateEdge";
        case Errc::InvalidParams: return "InvalidParams";
        case Errc::Overflow: return "Overflow";
        case Errc::ParseError: return "ParseError";
        case Errc::Infeasible: return "Infeasible";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::TooLarge: return "TooLarge";
        case Errc::NotApplicable: return "NotApplicable";
        case Errc::SearchFailed: return "SearchFailed";
    }
    return "Unknown";
}

/// Library error. `position()` identifies the offending edge index (for
/// hypergraph validation) or input line number (for parsers); npos otherwise.
class Error : public std::runtime_error {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    Error(Errc code, const std::string& msg, std::size_t position = npos)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
          code_(code),
          position_(position) {}

    Errc code() const { return code_; }
    std::size_t position() const { return position_; }

private:
    Errc code_;
    std::size_t position_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg,
                              std::size_t position = Error::npos) {
    throw Error(code, msg, position);
}

}  // namespace hypdom
