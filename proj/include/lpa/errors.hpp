#ifndef LPA_ERRORS_HPP
#define LPA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lpa {

// Bad user input (malformed matrices, out-of-range sizes). CLI exit code 3.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A violated internal contract (e.g. a graph that matches no atlas class).
// CLI exit code 4; never raised on merely bad input.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

struct NonSquareError : InputError {
    NonSquareError() : InputError("adjacency matrix is not square") {}
};
struct NotSingError : InputError {
    NotSingError() : InputError("adjacency entry exceeds 1 (parallel edges are not supported)") {}
};
struct EmptyGraphError : InputError {
    EmptyGraphError() : InputError("graph must have at least one vertex") {}
};
struct NotHereditaryError : InputError {
    NotHereditaryError() : InputError("vertex set is not hereditary") {}
};
struct SizeMismatchError : InputError {
    SizeMismatchError() : InputError("operands have different vertex counts") {}
};
struct SizeLimitError : InputError {
    explicit SizeLimitError(const std::string& what) : InputError(what) {}
};
struct DimensionMismatchError : InputError {
    DimensionMismatchError() : InputError("vector length does not match matrix rows") {}
};
struct NotASinkError : InputError {
    NotASinkError() : InputError("vertex is not a sink") {}
};
struct UnsupportedFormatError : InputError {
    explicit UnsupportedFormatError(const std::string& f)
        : InputError("unsupported format: " + f) {}
};
struct TooLargeError : InputError {
    TooLargeError() : InputError("classification supports at most 3 vertices") {}
};

}  // namespace lpa

#endif
