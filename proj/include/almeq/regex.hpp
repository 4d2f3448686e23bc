/* regex.hpp -- regular expression syntax trees, the text grammar, and
 * compilation to an epsilon-free NFA.
 *
 * Surface grammar (precedence: star > concatenation > union):
 *
 *   union  := concat ('|' concat)*
 *   concat := factor (('.')? factor)*
 *   factor := atom '*'*
 *   atom   := '(' union ')' | '0' | '1' | literal
 *
 * `0` is the empty language and `1` the empty string. Literals are resolved
 * against the declared alphabet by longest match; declared tokens take
 * precedence over the `0`/`1` constants. Whitespace separates tokens and is
 * otherwise ignored.
 */

#ifndef ALMEQ_REGEX_HPP_
#define ALMEQ_REGEX_HPP_

#include <memory>
#include <string>
#include <string_view>

#include "almeq/nfa.hpp"

namespace almeq {

enum class RegexKind { Empty, Epsilon, Literal, Concat, Union, Star };

/// Immutable regular-expression tree. Copies share structure.
class Regex {
public:
    Regex() : Regex(empty()) {}

    static Regex empty();
    static Regex epsilon();
    static Regex literal(SymbolId symbol);
    static Regex concat(Regex left, Regex right);
    static Regex alternation(Regex left, Regex right);
    static Regex star(Regex child);

    RegexKind kind() const;
    SymbolId symbol() const;  // Literal only
    Regex left() const;       // Concat/Union
    Regex right() const;      // Concat/Union
    Regex child() const;      // Star

    /// Number of tree nodes, counting shared subtrees with multiplicity.
    std::size_t node_count() const;

    /// Structural equality.
    bool operator==(const Regex& other) const;
    bool operator!=(const Regex& other) const { return !(*this == other); }

private:
    struct Node;
    explicit Regex(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Parses the grammar above. Literals must be declared in `alphabet`;
/// an unknown identifier raises UndeclaredSymbolError with its position.
Regex parse_regex(std::string_view text, const Alphabet& alphabet);

/// Canonical fully parenthesized form; parse(print(r)) == r.
std::string print_regex(const Regex& regex, const Alphabet& alphabet);

/// Thompson construction through an intermediate epsilon-NFA, then epsilon
/// elimination and restriction to reachable states. The result has no
/// epsilon transitions and at most 2 * node_count() states.
Nfa compile_to_nfa(const Regex& regex, const Alphabet& alphabet);

}  // namespace almeq

#endif  // ALMEQ_REGEX_HPP_
