#ifndef KEGRAPH_ERRORS_HPP
#define KEGRAPH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kegraph {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input exceeds a documented size bound (solver or codec limit).
struct BoundError : Error {
    using Error::Error;
};

struct Graph6Error : Error {
    enum class Kind {
        MalformedLength,   // empty input or unusable size byte
        UnsupportedSize,   // multi-byte size encoding, or n > 62 on encode
        InvalidCharacter,  // byte outside the 63..126 range
        InsufficientData,  // fewer bit bytes than the size requires
        TrailingData,      // extra bytes after the bit section
        NonzeroPadding,    // pad bits of the last byte not all zero
    };

    Graph6Error(Kind k, const std::string& msg) : Error(msg), kind(k) {}

    Kind kind;
};

// Corona spec or catalog file did not match the line-oriented format.
struct SpecFileError : Error {
    using Error::Error;
};

}  // namespace kegraph

#endif
