#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fps {

/// Base class of every exception thrown by this library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Structurally invalid input: empty coefficient list, zero denominator,
/// mismatched precisions, negative exponent, ...
class MalformedInputError : public Error {
  public:
    using Error::Error;
};

/// A coefficient beyond a series' truncation precision was requested.
/// Coefficients past the precision are unknown, never implicitly zero.
class PrecisionExceededError : public Error {
  public:
    using Error::Error;
};

/// reciprocal() of a series whose constant term is zero.
class NotInvertibleError : public Error {
  public:
    using Error::Error;
};

/// compose(f, g) where the inner series g has a nonzero constant term.
class NotComposableError : public Error {
  public:
    using Error::Error;
};

/// Compositional inverse of a series that is not regular
/// (regular: zero constant term, nonzero linear term).
class NotRegularError : public Error {
  public:
    using Error::Error;
};

/// ord() of a series all of whose known coefficients vanish. The order is
/// undefined at this truncation; the caller may retry at higher precision.
class ZeroAtPrecisionError : public Error {
  public:
    using Error::Error;
};

/// Expression division a/b where some coefficient of a below ord(b) is
/// nonzero, i.e. the quotient would not be a power series.
class DivisionOrderError : public Error {
  public:
    using Error::Error;
};

/// An operation precondition was violated (unit slope, order bounds, ...).
class PreconditionError : public Error {
  public:
    using Error::Error;
};

/// Syntax error in the expression language, with the byte offset of the
/// offending input position and the set of tokens that were acceptable there.
class ParseError : public Error {
  public:
    ParseError(std::size_t offset, std::vector<std::string> expected)
        : Error(format(offset, expected)), offset_(offset), expected_(std::move(expected)) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

  private:
    static std::string format(std::size_t offset, const std::vector<std::string>& expected) {
        std::string msg = "syntax error at offset " + std::to_string(offset);
        if (!expected.empty()) {
            msg += ": expected ";
            for (std::size_t i = 0; i < expected.size(); ++i) {
                if (i > 0) msg += (i + 1 == expected.size()) ? " or " : ", ";
                msg += expected[i];
            }
        }
        return msg;
    }

    std::size_t offset_;
    std::vector<std::string> expected_;
};

/// An identifier outside the expression language's function set.
class UnknownIdentifierError : public Error {
  public:
    UnknownIdentifierError(std::size_t offset, std::string name)
        : Error("unknown identifier \"" + name + "\" at offset " + std::to_string(offset)),
          offset_(offset),
          name_(std::move(name)) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::string& name() const noexcept { return name_; }

  private:
    std::size_t offset_;
    std::string name_;
};

}  // namespace fps
