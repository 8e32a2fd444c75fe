#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fw {

/// Base of every error raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define FW_DEFINE_ERROR(Name)                   \
    class Name : public Error {                 \
    public:                                     \
        using Error::Error;                     \
    }

// operator algebra
FW_DEFINE_ERROR(NonIncreasingOrder);

// transformation pipelines
FW_DEFINE_ERROR(MissingMassTerm);
FW_DEFINE_ERROR(NoConvergence);
FW_DEFINE_ERROR(BareFAnomaly);
FW_DEFINE_ERROR(EliminationFailure);
FW_DEFINE_ERROR(OddResidual);
FW_DEFINE_ERROR(NotStationary);

// Dirac reduction
FW_DEFINE_ERROR(UnreducedWord);

// numerics
FW_DEFINE_ERROR(SingularSign);
FW_DEFINE_ERROR(UnboundSymbol);

// specification language
FW_DEFINE_ERROR(UnknownSymbol);
FW_DEFINE_ERROR(DuplicateDeclaration);

#undef FW_DEFINE_ERROR

/// Parse failure with a 1-based position and the tokens that would have
/// been accepted there.
class SyntaxError : public Error {
public:
    SyntaxError(int line, int column, std::vector<std::string> expected, const std::string& found)
        : Error(message(line, column, expected, found)), line_(line), column_(column), expected_(std::move(expected))
    {
    }

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    static std::string message(int line, int column, const std::vector<std::string>& expected, const std::string& found)
    {
        std::string m = std::to_string(line) + ":" + std::to_string(column) + ": expected ";
        for (std::size_t k = 0; k < expected.size(); ++k) {
            if (k > 0) m += k + 1 == expected.size() ? " or " : ", ";
            m += expected[k];
        }
        return m + ", found " + found;
    }

    int line_;
    int column_;
    std::vector<std::string> expected_;
};

}  // namespace fw
