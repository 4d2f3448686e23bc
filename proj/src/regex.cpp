#include "almeq/regex.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <queue>
#include <unordered_map>
#include <vector>

namespace almeq {

struct Regex::Node {
    RegexKind kind;
    SymbolId symbol = 0;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
};

Regex Regex::empty() {
    return Regex(std::make_shared<Node>(Node{RegexKind::Empty, 0, nullptr, nullptr}));
}

Regex Regex::epsilon() {
    return Regex(std::make_shared<Node>(Node{RegexKind::Epsilon, 0, nullptr, nullptr}));
}

Regex Regex::literal(SymbolId symbol) {
    return Regex(std::make_shared<Node>(Node{RegexKind::Literal, symbol, nullptr, nullptr}));
}

Regex Regex::concat(Regex l, Regex r) {
    return Regex(std::make_shared<Node>(Node{RegexKind::Concat, 0, l.node_, r.node_}));
}

Regex Regex::alternation(Regex l, Regex r) {
    return Regex(std::make_shared<Node>(Node{RegexKind::Union, 0, l.node_, r.node_}));
}

Regex Regex::star(Regex c) {
    return Regex(std::make_shared<Node>(Node{RegexKind::Star, 0, c.node_, nullptr}));
}

RegexKind Regex::kind() const { return node_->kind; }
SymbolId Regex::symbol() const { return node_->symbol; }

Regex Regex::left() const { return Regex(node_->left); }
Regex Regex::right() const { return Regex(node_->right); }
Regex Regex::child() const { return Regex(node_->left); }

std::size_t Regex::node_count() const {
    std::unordered_map<const Node*, std::size_t> memo;
    auto count = [&](auto&& self, const Node* n) -> std::size_t {
        if (n == nullptr) return 0;
        auto it = memo.find(n);
        if (it != memo.end()) return it->second;
        std::size_t total = 1 + self(self, n->left.get()) + self(self, n->right.get());
        memo.emplace(n, total);
        return total;
    };
    return count(count, node_.get());
}

bool Regex::operator==(const Regex& other) const {
    auto eq = [](auto&& self, const Node* a, const Node* b) -> bool {
        if (a == b) return true;
        if (a == nullptr || b == nullptr) return false;
        if (a->kind != b->kind || a->symbol != b->symbol) return false;
        return self(self, a->left.get(), b->left.get()) &&
               self(self, a->right.get(), b->right.get());
    };
    return eq(eq, node_.get(), other.node_.get());
}

// --------------------------------------------------------------------------
// Parser

namespace {

enum class Tok { LParen, RParen, Pipe, Dot, Star, Empty, Epsilon, Symbol, End };

struct Token {
    Tok kind;
    SymbolId symbol = 0;
    std::size_t position = 0;
};

class Lexer {
public:
    Lexer(std::string_view text, const Alphabet& alphabet)
        : text_(text), alphabet_(alphabet) {}

    Token next() {
        skip_ws();
        std::size_t pos = pos_;
        if (pos_ >= text_.size()) return {Tok::End, 0, pos};
        char c = text_[pos_];
        switch (c) {
            case '(': ++pos_; return {Tok::LParen, 0, pos};
            case ')': ++pos_; return {Tok::RParen, 0, pos};
            case '|': ++pos_; return {Tok::Pipe, 0, pos};
            case '.': ++pos_; return {Tok::Dot, 0, pos};
            case '*': ++pos_; return {Tok::Star, 0, pos};
            default: break;
        }
        // Declared tokens win over the constants; take the longest match.
        std::size_t best = 0;
        SymbolId best_id = 0;
        for (SymbolId id = 0; id < alphabet_.size(); ++id) {
            const std::string& t = alphabet_.token(id);
            if (t.size() > best && text_.compare(pos_, t.size(), t) == 0) {
                best = t.size();
                best_id = id;
            }
        }
        if (best > 0) {
            pos_ += best;
            return {Tok::Symbol, best_id, pos};
        }
        if (c == '0') { ++pos_; return {Tok::Empty, 0, pos}; }
        if (c == '1') { ++pos_; return {Tok::Epsilon, 0, pos}; }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t end = pos_ + 1;
            while (end < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) {
                ++end;
            }
            throw UndeclaredSymbolError(std::string(text_.substr(pos_, end - pos_)), pos);
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::string_view text_;
    const Alphabet& alphabet_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    Parser(std::string_view text, const Alphabet& alphabet) : lexer_(text, alphabet) {
        advance();
    }

    Regex parse() {
        Regex r = parse_union();
        expect(Tok::End, "trailing input");
        return r;
    }

private:
    void advance() { current_ = lexer_.next(); }

    void expect(Tok kind, const char* message) {
        if (current_.kind != kind) throw ParseError(message, current_.position);
    }

    static bool starts_atom(Tok t) {
        return t == Tok::LParen || t == Tok::Empty || t == Tok::Epsilon || t == Tok::Symbol;
    }

    Regex parse_union() {
        Regex r = parse_concat();
        while (current_.kind == Tok::Pipe) {
            advance();
            r = Regex::alternation(std::move(r), parse_concat());
        }
        return r;
    }

    Regex parse_concat() {
        Regex r = parse_factor();
        for (;;) {
            if (current_.kind == Tok::Dot) {
                advance();
                r = Regex::concat(std::move(r), parse_factor());
            } else if (starts_atom(current_.kind)) {
                r = Regex::concat(std::move(r), parse_factor());
            } else {
                return r;
            }
        }
    }

    Regex parse_factor() {
        Regex r = parse_atom();
        while (current_.kind == Tok::Star) {
            advance();
            r = Regex::star(std::move(r));
        }
        return r;
    }

    Regex parse_atom() {
        switch (current_.kind) {
            case Tok::LParen: {
                advance();
                Regex r = parse_union();
                expect(Tok::RParen, "expected ')'");
                advance();
                return r;
            }
            case Tok::Empty:
                advance();
                return Regex::empty();
            case Tok::Epsilon:
                advance();
                return Regex::epsilon();
            case Tok::Symbol: {
                Regex r = Regex::literal(current_.symbol);
                advance();
                return r;
            }
            default:
                throw ParseError("expected an expression", current_.position);
        }
    }

    Lexer lexer_;
    Token current_;
};

}  // namespace

Regex parse_regex(std::string_view text, const Alphabet& alphabet) {
    return Parser(text, alphabet).parse();
}

namespace {

void print_rec(const Regex& r, const Alphabet& alphabet, std::string& out) {
    switch (r.kind()) {
        case RegexKind::Empty: out += '0'; return;
        case RegexKind::Epsilon: out += '1'; return;
        case RegexKind::Literal: out += alphabet.token(r.symbol()); return;
        case RegexKind::Concat:
            out += '(';
            print_rec(r.left(), alphabet, out);
            out += '.';
            print_rec(r.right(), alphabet, out);
            out += ')';
            return;
        case RegexKind::Union:
            out += '(';
            print_rec(r.left(), alphabet, out);
            out += '|';
            print_rec(r.right(), alphabet, out);
            out += ')';
            return;
        case RegexKind::Star:
            out += '(';
            print_rec(r.child(), alphabet, out);
            out += ")*";
            return;
    }
}

}  // namespace

std::string print_regex(const Regex& regex, const Alphabet& alphabet) {
    std::string out;
    print_rec(regex, alphabet, out);
    return out;
}

// --------------------------------------------------------------------------
// Thompson construction

namespace {

struct EpsNfa {
    std::vector<std::vector<State>> eps;                       // [q] -> targets
    std::vector<std::vector<std::pair<SymbolId, State>>> sym;  // [q] -> (a, target)

    State fresh() {
        eps.emplace_back();
        sym.emplace_back();
        return static_cast<State>(eps.size() - 1);
    }
};

struct Frag {
    State start, accept;
};

Frag build(EpsNfa& nfa, const Regex& r) {
    switch (r.kind()) {
        case RegexKind::Empty: {
            State s = nfa.fresh(), a = nfa.fresh();
            return {s, a};
        }
        case RegexKind::Epsilon: {
            State s = nfa.fresh(), a = nfa.fresh();
            nfa.eps[s].push_back(a);
            return {s, a};
        }
        case RegexKind::Literal: {
            State s = nfa.fresh(), a = nfa.fresh();
            nfa.sym[s].emplace_back(r.symbol(), a);
            return {s, a};
        }
        case RegexKind::Concat: {
            Frag l = build(nfa, r.left());
            Frag rr = build(nfa, r.right());
            nfa.eps[l.accept].push_back(rr.start);
            return {l.start, rr.accept};
        }
        case RegexKind::Union: {
            Frag l = build(nfa, r.left());
            Frag rr = build(nfa, r.right());
            State s = nfa.fresh(), a = nfa.fresh();
            nfa.eps[s].push_back(l.start);
            nfa.eps[s].push_back(rr.start);
            nfa.eps[l.accept].push_back(a);
            nfa.eps[rr.accept].push_back(a);
            return {s, a};
        }
        case RegexKind::Star: {
            Frag c = build(nfa, r.child());
            State s = nfa.fresh(), a = nfa.fresh();
            nfa.eps[s].push_back(c.start);
            nfa.eps[s].push_back(a);
            nfa.eps[c.accept].push_back(c.start);
            nfa.eps[c.accept].push_back(a);
            return {s, a};
        }
    }
    throw Error("unreachable regex kind");
}

void validate_symbols(const Regex& r, const Alphabet& alphabet) {
    switch (r.kind()) {
        case RegexKind::Literal:
            if (r.symbol() >= alphabet.size()) {
                throw Error("regex literal outside the declared alphabet");
            }
            return;
        case RegexKind::Concat:
        case RegexKind::Union:
            validate_symbols(r.left(), alphabet);
            validate_symbols(r.right(), alphabet);
            return;
        case RegexKind::Star:
            validate_symbols(r.child(), alphabet);
            return;
        default:
            return;
    }
}

}  // namespace

namespace {
Nfa merge_identical_states(const Nfa& nfa);
}  // namespace

Nfa compile_to_nfa(const Regex& regex, const Alphabet& alphabet) {
    validate_symbols(regex, alphabet);

    EpsNfa eps_nfa;
    Frag frag = build(eps_nfa, regex);
    const State n = static_cast<State>(eps_nfa.eps.size());

    // Epsilon closures, one bounded DFS per state.
    std::vector<State> closure;
    std::vector<bool> seen(n, false);
    std::vector<State> stack;

    // Epsilon-free view over the original numbering.
    std::vector<std::vector<std::pair<SymbolId, State>>> moves(n);
    std::vector<bool> acc(n, false);

    for (State q = 0; q < n; ++q) {
        closure.clear();
        stack.assign(1, q);
        seen[q] = true;
        while (!stack.empty()) {
            State p = stack.back();
            stack.pop_back();
            closure.push_back(p);
            for (State t : eps_nfa.eps[p]) {
                if (!seen[t]) {
                    seen[t] = true;
                    stack.push_back(t);
                }
            }
        }
        for (State p : closure) {
            seen[p] = false;
            if (p == frag.accept) acc[q] = true;
            for (auto [a, t] : eps_nfa.sym[p]) moves[q].emplace_back(a, t);
        }
    }

    // Keep only states reachable from the start, numbered in BFS order.
    std::vector<State> renumber(n, n);
    std::vector<State> order;
    renumber[frag.start] = 0;
    order.push_back(frag.start);
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (auto [a, t] : moves[order[i]]) {
            if (renumber[t] == n) {
                renumber[t] = static_cast<State>(order.size());
                order.push_back(t);
            }
        }
    }

    Nfa out(alphabet, static_cast<State>(order.size()), 0);
    for (State id = 0; id < order.size(); ++id) {
        out.accepting[id] = acc[order[id]];
        for (auto [a, t] : moves[order[id]]) out.add_transition(id, a, renumber[t]);
    }
    return merge_identical_states(out);
}

namespace {

/// Language-preserving reduction: repeatedly merges states with identical
/// acceptance and identical successor sets, then renumbers in BFS order.
Nfa merge_identical_states(const Nfa& nfa) {
    const std::size_t arity = nfa.alphabet.size();
    std::vector<State> representative(nfa.state_count);
    for (State q = 0; q < nfa.state_count; ++q) representative[q] = q;

    // Fixpoint of "same acceptance, same successor sets": each round maps
    // state signatures onto class representatives.
    for (;;) {
        std::map<std::pair<bool, std::vector<std::vector<State>>>, State> classes;
        std::vector<State> next(nfa.state_count);
        for (State q = 0; q < nfa.state_count; ++q) {
            std::vector<std::vector<State>> signature(arity);
            for (SymbolId a = 0; a < arity; ++a) {
                std::vector<State> targets;
                for (State t : nfa.successors(q, a)) targets.push_back(representative[t]);
                std::sort(targets.begin(), targets.end());
                targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
                signature[a] = std::move(targets);
            }
            auto [it, fresh] =
                classes.emplace(std::make_pair(nfa.accepting[q], std::move(signature)), q);
            next[q] = it->second;
            (void)fresh;
        }
        if (next == representative) break;
        representative = std::move(next);
    }

    // Renumber representatives in BFS order from the initial state.
    constexpr State kUnset = ~State(0);
    std::vector<State> renumber(nfa.state_count, kUnset);
    std::vector<State> order{representative[nfa.initial]};
    renumber[representative[nfa.initial]] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (SymbolId a = 0; a < arity; ++a) {
            for (State t : nfa.successors(order[i], a)) {
                State rep = representative[t];
                if (renumber[rep] == kUnset) {
                    renumber[rep] = static_cast<State>(order.size());
                    order.push_back(rep);
                }
            }
        }
    }

    Nfa out(nfa.alphabet, static_cast<State>(order.size()), 0);
    for (State id = 0; id < order.size(); ++id) {
        State q = order[id];
        out.accepting[id] = nfa.accepting[q];
        for (SymbolId a = 0; a < arity; ++a) {
            for (State t : nfa.successors(q, a)) {
                out.add_transition(id, a, renumber[representative[t]]);
            }
        }
    }
    return out;
}

}  // namespace

}  // namespace almeq
