#include "almeq/alphabet.hpp"

#include <cctype>

namespace almeq {

namespace {

bool valid_token(std::string_view token) {
    if (token.empty()) return false;
    for (char c : token) {
        if (std::isspace(static_cast<unsigned char>(c))) return false;
        if (c == '(' || c == ')' || c == '|' || c == '*' || c == '.') return false;
    }
    return true;
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
    if (tokens_.empty()) {
        throw Error("alphabet must contain at least one symbol");
    }
    for (SymbolId id = 0; id < tokens_.size(); ++id) {
        const std::string& t = tokens_[id];
        if (!valid_token(t)) {
            throw Error("invalid alphabet token '" + t + "'");
        }
        if (!index_.emplace(t, id).second) {
            throw Error("duplicate alphabet token '" + t + "'");
        }
    }
}

Alphabet Alphabet::from_csv(std::string_view csv) {
    std::vector<std::string> tokens;
    std::size_t start = 0;
    while (start <= csv.size()) {
        std::size_t comma = csv.find(',', start);
        if (comma == std::string_view::npos) comma = csv.size();
        std::string_view piece = csv.substr(start, comma - start);
        while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.front()))) piece.remove_prefix(1);
        while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.back()))) piece.remove_suffix(1);
        if (!piece.empty()) tokens.emplace_back(piece);
        if (comma == csv.size()) break;
        start = comma + 1;
    }
    return Alphabet(std::move(tokens));
}

std::optional<SymbolId> Alphabet::find(std::string_view token) const {
    auto it = index_.find(std::string(token));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

SymbolId Alphabet::require(std::string_view token) const {
    auto id = find(token);
    if (!id) throw Error("symbol '" + std::string(token) + "' not in alphabet");
    return *id;
}

std::string Alphabet::render(const std::vector<SymbolId>& word) const {
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i > 0) out += ' ';
        out += token(word[i]);
    }
    return out;
}

}  // namespace almeq
