#pragma once

#include <stdexcept>
#include <string>

namespace gp {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed phrase text or an invalid letter id.
struct SyntaxError : Error {
    using Error::Error;
};

/// Some letter occurs a number of times other than exactly two.
struct NotGaussError : Error {
    NotGaussError(std::string letter_, int count_)
        : Error("letter " + letter_ + " occurs " + std::to_string(count_) +
                " times (expected 2)"),
          letter(std::move(letter_)), count(count_) {}
    std::string letter;
    int count;
};

struct UnknownLetterError : Error {
    explicit UnknownLetterError(const std::string &letter)
        : Error("unknown letter " + letter) {}
};

struct NotSingleComponentError : Error {
    explicit NotSingleComponentError(const std::string &letter)
        : Error("letter " + letter + " is not a single-component letter") {}
};

struct BadIndexError : Error {
    using Error::Error;
};

struct BadSpanError : Error {
    using Error::Error;
};

struct BadPermutationError : Error {
    using Error::Error;
};

/// A move site does not match the phrase it is applied to.
struct InvalidSiteError : Error {
    using Error::Error;
};

struct DimensionError : Error {
    using Error::Error;
};

/// Matrix is not symmetric with zero diagonal (or not square).
struct BadMatrixError : Error {
    using Error::Error;
};

/// A letter id longer than one character cannot be rendered compactly.
struct CompactFormatError : Error {
    using Error::Error;
};

/// A realization target violates its admissibility condition.
struct InadmissibleError : Error {
    InadmissibleError(int component_, const std::string &what_)
        : Error("component " + std::to_string(component_) + ": " + what_),
          component(component_) {}
    int component;
};

} // namespace gp
