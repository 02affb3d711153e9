#pragma once

#include <stdexcept>
#include <string>

namespace dnacodes {

// Base class for every error raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An enumeration would exceed the configured word budget. Callers must
// skip or fall back; a partial enumeration is never a valid answer.
struct CapExceeded : Error {
    explicit CapExceeded(const std::string& what) : Error(what) {}
    CapExceeded(double log2_words, std::uint64_t cap)
        : Error("enumeration of 2^" + std::to_string(log2_words) +
                " words exceeds cap of " + std::to_string(cap)),
          log2_words(log2_words) {}
    double log2_words = 0;
};

struct ParseError : Error {
    ParseError(const std::string& what, int line)
        : Error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line = 0;
};

struct BadSymbol : Error {
    BadSymbol(char c, std::size_t offset)
        : Error(std::string("bad symbol '") + c + "' at offset " +
                std::to_string(offset)),
          offset(offset) {}
    std::size_t offset = 0;
};

struct UnknownGroup : Error {
    using Error::Error;
};
struct OddOrderUnsupported : Error {
    using Error::Error;
};
struct NotInvolution : Error {
    using Error::Error;
};
struct BadReps : Error {
    using Error::Error;
};
struct IdentityElement : Error {
    using Error::Error;
};
struct InnerOrderMismatch : Error {
    using Error::Error;
};
struct ShapeMismatch : Error {
    using Error::Error;
};
struct InconsistentSpectrum : Error {
    using Error::Error;
};
struct BadRange : Error {
    using Error::Error;
};
struct TooManyWords : Error {
    using Error::Error;
};
struct MissingCode : Error {
    using Error::Error;
};

}  // namespace dnacodes
