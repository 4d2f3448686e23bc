#include "almeq/analysis.hpp"

#include <algorithm>
#include <queue>

namespace almeq {

namespace {

std::vector<bool> reachable_set(const Dfa& d) {
    std::vector<bool> seen(d.state_count, false);
    std::vector<State> stack{d.initial};
    seen[d.initial] = true;
    while (!stack.empty()) {
        State q = stack.back();
        stack.pop_back();
        for (SymbolId a = 0; a < d.alphabet.size(); ++a) {
            State t = d.next(q, a);
            if (!seen[t]) {
                seen[t] = true;
                stack.push_back(t);
            }
        }
    }
    return seen;
}

/// BFS tree from the initial state; parent edge = (state, symbol).
struct BfsTree {
    std::vector<State> parent;
    std::vector<SymbolId> via;
    std::vector<std::uint32_t> depth;
    std::vector<State> order;
};

BfsTree bfs_from_initial(const Dfa& d) {
    constexpr State kUnset = ~State(0);
    BfsTree tree;
    tree.parent.assign(d.state_count, kUnset);
    tree.via.assign(d.state_count, 0);
    tree.depth.assign(d.state_count, 0);
    tree.order.push_back(d.initial);
    tree.parent[d.initial] = d.initial;
    for (std::size_t i = 0; i < tree.order.size(); ++i) {
        State q = tree.order[i];
        for (SymbolId a = 0; a < d.alphabet.size(); ++a) {
            State t = d.next(q, a);
            if (tree.parent[t] == kUnset) {
                tree.parent[t] = q;
                tree.via[t] = a;
                tree.depth[t] = tree.depth[q] + 1;
                tree.order.push_back(t);
            }
        }
    }
    return tree;
}

std::vector<SymbolId> path_from_initial(const Dfa& d, const BfsTree& tree, State target) {
    std::vector<SymbolId> word;
    State q = target;
    while (q != d.initial) {
        word.push_back(tree.via[q]);
        q = tree.parent[q];
    }
    std::reverse(word.begin(), word.end());
    return word;
}

}  // namespace

SccDecomposition sccs(const Dfa& d) {
    const std::size_t arity = d.alphabet.size();

    SccDecomposition out;
    out.component.assign(d.state_count, -1);

    // Iterative Tarjan restricted to the reachable subgraph.
    constexpr std::uint32_t kUnvisited = ~std::uint32_t(0);
    std::vector<std::uint32_t> index(d.state_count, kUnvisited);
    std::vector<std::uint32_t> lowlink(d.state_count, 0);
    std::vector<bool> on_stack(d.state_count, false);
    std::vector<State> scc_stack;
    std::uint32_t next_index = 0;

    struct Frame {
        State state;
        std::uint32_t edge;
    };
    std::vector<Frame> call_stack;

    auto strongconnect = [&](State root) {
        call_stack.push_back({root, 0});
        index[root] = lowlink[root] = next_index++;
        scc_stack.push_back(root);
        on_stack[root] = true;
        while (!call_stack.empty()) {
            Frame& frame = call_stack.back();
            State q = frame.state;
            if (frame.edge < arity) {
                State t = d.next(q, static_cast<SymbolId>(frame.edge));
                ++frame.edge;
                if (index[t] == kUnvisited) {
                    call_stack.push_back({t, 0});
                    index[t] = lowlink[t] = next_index++;
                    scc_stack.push_back(t);
                    on_stack[t] = true;
                } else if (on_stack[t]) {
                    lowlink[q] = std::min(lowlink[q], index[t]);
                }
            } else {
                call_stack.pop_back();
                if (!call_stack.empty()) {
                    State parent = call_stack.back().state;
                    lowlink[parent] = std::min(lowlink[parent], lowlink[q]);
                }
                if (lowlink[q] == index[q]) {
                    std::uint32_t id = out.component_count++;
                    std::uint32_t size = 0;
                    for (;;) {
                        State w = scc_stack.back();
                        scc_stack.pop_back();
                        on_stack[w] = false;
                        out.component[w] = static_cast<std::int32_t>(id);
                        ++size;
                        if (w == q) break;
                    }
                    out.component_size.push_back(size);
                }
            }
        }
    };

    // One root suffices: the reachable subgraph is connected from initial.
    strongconnect(d.initial);

    out.is_sink.assign(out.component_count, true);
    for (State q = 0; q < d.state_count; ++q) {
        if (out.component[q] < 0) continue;
        for (SymbolId a = 0; a < arity; ++a) {
            State t = d.next(q, a);
            if (out.component[t] != out.component[q]) {
                out.is_sink[static_cast<std::uint32_t>(out.component[q])] = false;
            }
        }
    }
    return out;
}

MuResult mu_is_nonzero(const Dfa& d) {
    SccDecomposition scc = sccs(d);
    BfsTree tree = bfs_from_initial(d);

    // BFS order yields the shortest access string; ties resolve to the
    // earliest-discovered state, which is deterministic.
    for (State q : tree.order) {
        if (!d.accepting[q]) continue;
        auto comp = scc.component[q];
        if (comp >= 0 && scc.is_sink[static_cast<std::uint32_t>(comp)]) {
            MuWitness w;
            w.state = q;
            w.access = path_from_initial(d, tree, q);
            return {true, std::move(w)};
        }
    }
    return {false, std::nullopt};
}

bool is_empty(const Dfa& d) {
    std::vector<bool> seen = reachable_set(d);
    for (State q = 0; q < d.state_count; ++q) {
        if (seen[q] && d.accepting[q]) return false;
    }
    return true;
}

bool is_universal(const Dfa& d) { return is_empty(complement(d)); }

namespace {

/// States that can reach an accepting state (reverse BFS).
std::vector<bool> coaccessible_set(const Dfa& d) {
    std::vector<std::vector<State>> reverse(d.state_count);
    for (State q = 0; q < d.state_count; ++q) {
        for (SymbolId a = 0; a < d.alphabet.size(); ++a) {
            reverse[d.next(q, a)].push_back(q);
        }
    }
    std::vector<bool> seen(d.state_count, false);
    std::vector<State> stack;
    for (State q = 0; q < d.state_count; ++q) {
        if (d.accepting[q]) {
            seen[q] = true;
            stack.push_back(q);
        }
    }
    while (!stack.empty()) {
        State q = stack.back();
        stack.pop_back();
        for (State p : reverse[q]) {
            if (!seen[p]) {
                seen[p] = true;
                stack.push_back(p);
            }
        }
    }
    return seen;
}

/// A reachable, co-accessible state lying on a cycle, if one exists.
std::optional<State> pumpable_state(const Dfa& d) {
    SccDecomposition scc = sccs(d);
    std::vector<bool> useful = coaccessible_set(d);
    for (State q = 0; q < d.state_count; ++q) {
        if (scc.component[q] < 0 || !useful[q]) continue;
        auto comp = static_cast<std::uint32_t>(scc.component[q]);
        bool on_cycle = scc.component_size[comp] >= 2;
        if (!on_cycle) {
            for (SymbolId a = 0; a < d.alphabet.size() && !on_cycle; ++a) {
                on_cycle = d.next(q, a) == q;
            }
        }
        if (on_cycle) return q;
    }
    return std::nullopt;
}

}  // namespace

bool is_finite_language(const Dfa& d) { return !pumpable_state(d).has_value(); }

std::optional<std::vector<SymbolId>> shortest_accepted(const Dfa& d) {
    BfsTree tree = bfs_from_initial(d);
    for (State q : tree.order) {
        if (d.accepting[q]) return path_from_initial(d, tree, q);
    }
    return std::nullopt;
}

std::optional<PumpWitness> infinite_witness(const Dfa& d) {
    auto q = pumpable_state(d);
    if (!q) return std::nullopt;

    PumpWitness w;
    w.prefix = path_from_initial(d, bfs_from_initial(d), *q);

    // Shortest nonempty cycle at *q.
    {
        constexpr State kUnset = ~State(0);
        std::vector<State> parent(d.state_count, kUnset);
        std::vector<SymbolId> via(d.state_count, 0);
        std::queue<State> queue;
        for (SymbolId a = 0; a < d.alphabet.size(); ++a) {
            State t = d.next(*q, a);
            if (parent[t] == kUnset) {
                parent[t] = *q;
                via[t] = a;
                queue.push(t);
            }
            if (t == *q) break;
        }
        while (parent[*q] == kUnset && !queue.empty()) {
            State p = queue.front();
            queue.pop();
            for (SymbolId a = 0; a < d.alphabet.size(); ++a) {
                State t = d.next(p, a);
                if (parent[t] == kUnset) {
                    parent[t] = p;
                    via[t] = a;
                    queue.push(t);
                }
            }
        }
        State cur = *q;
        do {
            w.cycle.push_back(via[cur]);
            cur = parent[cur];
        } while (cur != *q);
        std::reverse(w.cycle.begin(), w.cycle.end());
    }

    // Shortest continuation from *q to an accepting state.
    {
        Dfa from_q = d;
        from_q.initial = *q;
        auto suffix = shortest_accepted(from_q);
        w.suffix = std::move(*suffix);  // *q is co-accessible by construction
    }
    return w;
}

}  // namespace almeq
