#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace singspace {

// Error categories. The CLI maps these onto its exit-status contract:
// input errors exit 2, precondition errors exit 3, verification
// failures exit 1.
enum class Errc {
    ZeroInverse,
    BadField,
    SyntaxError,
    UnknownVariable,
    NonHomogeneousGenerator,
    DimensionMismatch,
    CharDividesDegree,
    NoStabilization,
    NotACurve,
    LeadingMismatch,
    DomainError,
    TheoremViolation,
    BadDocument,
};

class Error : public std::runtime_error {
  public:
    static constexpr std::size_t no_offset = static_cast<std::size_t>(-1);

    Error(Errc code, const std::string& what, std::size_t offset = no_offset)
        : std::runtime_error(what), code_(code), offset_(offset) {}

    Errc code() const { return code_; }

    // Byte offset into the offending input text, when known.
    std::size_t offset() const { return offset_; }

  private:
    Errc code_;
    std::size_t offset_;
};

const char* errc_name(Errc code);

}  // namespace singspace
