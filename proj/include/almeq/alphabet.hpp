/* alphabet.hpp -- declared finite alphabets and common error types. */

#ifndef ALMEQ_ALPHABET_HPP_
#define ALMEQ_ALPHABET_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace almeq {

using SymbolId = std::uint32_t;
using State = std::uint32_t;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input text; `position` is a byte offset into the source.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t position)
        : Error(what), position(position) {}
    std::size_t position;
};

/// A literal that is not a member of the declared alphabet.
struct UndeclaredSymbolError : ParseError {
    UndeclaredSymbolError(std::string token, std::size_t position)
        : ParseError("undeclared symbol '" + token + "'", position),
          token(std::move(token)) {}
    std::string token;
};

/// Two operands of a binary construction carry different alphabets.
struct AlphabetMismatchError : Error {
    using Error::Error;
};

/// A configurable resource cap (subset count, horizon, enumeration size, ...)
/// was exceeded.
struct CapacityError : Error {
    using Error::Error;
};

/// An ordered list of distinct symbol tokens. The order is fixed and
/// observable; it drives canonical serialization and string enumeration.
///
/// Tokens are arbitrary non-empty strings without whitespace or the
/// characters reserved by the regex surface grammar: ( ) | * .
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> tokens);

    /// Builds from a comma-separated list, e.g. "a1,a2,a3".
    static Alphabet from_csv(std::string_view csv);

    std::size_t size() const { return tokens_.size(); }
    const std::string& token(SymbolId id) const { return tokens_.at(id); }
    const std::vector<std::string>& tokens() const { return tokens_; }

    std::optional<SymbolId> find(std::string_view token) const;
    SymbolId require(std::string_view token) const;

    bool operator==(const Alphabet& other) const { return tokens_ == other.tokens_; }
    bool operator!=(const Alphabet& other) const { return !(*this == other); }

    /// Renders a symbol sequence as space-separated tokens.
    std::string render(const std::vector<SymbolId>& word) const;

private:
    std::vector<std::string> tokens_;
    std::unordered_map<std::string, SymbolId> index_;
};

}  // namespace almeq

#endif  // ALMEQ_ALPHABET_HPP_
