#include "bes/error.hpp"

namespace bes {

const char* to_string(ParseErrorCode code) noexcept {
    switch (code) {
        case ParseErrorCode::malformed_header: return "malformed-header";
        case ParseErrorCode::bad_triple: return "bad-triple";
        case ParseErrorCode::unsorted_triple: return "unsorted-triple";
        case ParseErrorCode::unsorted_edges: return "unsorted-edges";
        case ParseErrorCode::duplicate_edge: return "duplicate-edge";
        case ParseErrorCode::out_of_range: return "out-of-range";
        case ParseErrorCode::edge_count_mismatch: return "edge-count-mismatch";
        case ParseErrorCode::bad_witness: return "bad-witness";
        case ParseErrorCode::trailing_content: return "trailing-content";
    }
    return "unknown";
}

ParseError::ParseError(ParseErrorCode code, std::size_t line, const std::string& detail)
    : InputError("line " + std::to_string(line) + ": " + to_string(code) + ": " + detail),
      code_(code),
      line_(line) {}

}  // namespace bes
