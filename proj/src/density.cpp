#include "almeq/density.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "almeq/analysis.hpp"

namespace almeq {

namespace {

std::vector<Integer> step_counts(const Dfa& d, const std::vector<Integer>& current) {
    std::vector<Integer> next(d.state_count, 0);
    for (State q = 0; q < d.state_count; ++q) {
        if (current[q] == 0) continue;
        for (SymbolId a = 0; a < d.alphabet.size(); ++a) {
            next[d.next(q, a)] += current[q];
        }
    }
    return next;
}

Integer accepted_total(const Dfa& d, const std::vector<Integer>& occupancy) {
    Integer total = 0;
    for (State q = 0; q < d.state_count; ++q) {
        if (d.accepting[q]) total += occupancy[q];
    }
    return total;
}

}  // namespace

Integer count_words(const Dfa& d, std::uint32_t n) {
    std::vector<Integer> occupancy(d.state_count, 0);
    occupancy[d.initial] = 1;
    for (std::uint32_t k = 0; k < n; ++k) occupancy = step_counts(d, occupancy);
    return accepted_total(d, occupancy);
}

DensityProfile profile(const Dfa& d, std::uint32_t horizon, std::uint32_t cap) {
    if (horizon < 1) throw Error("profile: horizon must be >= 1");
    if (horizon > cap) throw CapacityError("profile: horizon cap exceeded");

    const Integer arity = static_cast<unsigned>(d.alphabet.size());

    DensityProfile p;
    p.horizon = horizon;
    p.counts.reserve(horizon + 1);
    p.mu.reserve(horizon + 1);
    p.mu_star.reserve(horizon + 1);
    p.delta.reserve(horizon + 1);

    std::vector<Integer> occupancy(d.state_count, 0);
    occupancy[d.initial] = 1;

    Integer length_denominator = 1;   // |A|^n
    Integer cumulative_count = 0;     // |L ∩ A^{<n}|
    Integer cumulative_denominator = 0;  // |A^{<n}|
    Rational mu_sum = 0;              // mu[0] + ... + mu[n-1]

    for (std::uint32_t n = 0; n <= horizon; ++n) {
        if (n > 0) {
            occupancy = step_counts(d, occupancy);
            length_denominator *= arity;
        }
        Integer count = accepted_total(d, occupancy);

        p.mu.emplace_back(count, length_denominator);
        p.mu_star.emplace_back(n == 0 ? Rational(0)
                                      : Rational(cumulative_count, cumulative_denominator));
        p.delta.emplace_back(n == 0 ? Rational(0) : mu_sum / n);

        cumulative_count += count;
        cumulative_denominator += length_denominator;
        mu_sum += p.mu.back();
        p.counts.push_back(std::move(count));
    }
    return p;
}

namespace {

/// gcd of internal cycle lengths of one SCC, via BFS levels: every internal
/// edge u -> v contributes |level[u] + 1 - level[v]|.
std::uint64_t scc_period(const Dfa& d, const SccDecomposition& scc, State root) {
    const std::int32_t comp = scc.component[root];
    std::vector<std::int64_t> level(d.state_count, -1);
    std::vector<State> queue{root};
    level[root] = 0;
    std::uint64_t g = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        State q = queue[i];
        for (SymbolId a = 0; a < d.alphabet.size(); ++a) {
            State t = d.next(q, a);
            if (scc.component[t] != comp) continue;
            if (level[t] < 0) {
                level[t] = level[q] + 1;
                queue.push_back(t);
            } else {
                auto diff = level[q] + 1 - level[t];
                g = std::gcd(g, static_cast<std::uint64_t>(diff < 0 ? -diff : diff));
            }
        }
    }
    return g;
}

Rational residue_oscillation(const std::vector<Rational>& mu, std::uint32_t horizon,
                             std::uint32_t period, std::uint32_t residue) {
    // Last 4 sampled indices == residue (mod period) within [0, horizon].
    Rational lo, hi;
    bool first = true;
    std::uint32_t taken = 0;
    std::uint32_t n = horizon - ((horizon + period - residue) % period);
    for (; taken < 4; n -= period, ++taken) {
        const Rational& v = mu[n];
        if (first || v < lo) lo = v;
        if (first || v > hi) hi = v;
        first = false;
        if (n < period) break;
    }
    return hi - lo;
}

}  // namespace

ResidueProbe residue_probe(const Dfa& d, std::uint32_t horizon) {
    if (horizon < 4) throw Error("residue_probe: horizon must be >= 4 * period");
    SccDecomposition scc = sccs(d);

    // Structural candidate: lcm of SCC periods over the reachable subgraph.
    std::uint64_t candidate = 1;
    std::vector<bool> seen_component(scc.component_count, false);
    for (State q = 0; q < d.state_count; ++q) {
        if (scc.component[q] < 0) continue;
        auto comp = static_cast<std::uint32_t>(scc.component[q]);
        if (seen_component[comp]) continue;
        seen_component[comp] = true;
        std::uint64_t g = scc_period(d, scc, q);
        if (g == 0) continue;  // no internal cycle
        candidate = std::lcm(candidate, g);
        if (candidate > kPeriodCap) break;
    }

    DensityProfile p = profile(d, horizon, std::max(horizon, kDefaultHorizonCap));

    ResidueProbe probe;
    if (candidate <= kPeriodCap) {
        probe.period = static_cast<std::uint32_t>(candidate);
        if (horizon < 4 * probe.period) {
            throw Error("residue_probe: horizon must be >= 4 * period");
        }
    } else {
        // Empirical fallback: smallest period minimizing the worst residue
        // oscillation over the tail.
        probe.empirical_fallback = true;
        Rational best_score = -1;
        std::uint32_t best_period = 1;
        for (std::uint32_t period = 1; period <= kPeriodCap && 4 * period <= horizon; ++period) {
            Rational score = 0;
            for (std::uint32_t b = 0; b < period; ++b) {
                score = std::max(score, residue_oscillation(p.mu, horizon, period, b));
            }
            if (best_score < 0 || score < best_score) {
                best_score = score;
                best_period = period;
            }
        }
        probe.period = best_period;
    }

    for (std::uint32_t b = 0; b < probe.period; ++b) {
        std::uint32_t last = horizon - ((horizon + probe.period - b) % probe.period);
        probe.tail_estimate.push_back(p.mu[last]);
        probe.oscillation.push_back(residue_oscillation(p.mu, horizon, probe.period, b));
    }
    return probe;
}

void write_profile_csv(std::ostream& out, const DensityProfile& p) {
    out << "n,count,mu_num,mu_den,mu_star_num,mu_star_den,delta_num,delta_den,mu_float\n";
    for (std::uint32_t n = 0; n <= p.horizon; ++n) {
        out << n << ',' << p.counts[n] << ',' << boost::multiprecision::numerator(p.mu[n])
            << ',' << boost::multiprecision::denominator(p.mu[n]) << ','
            << boost::multiprecision::numerator(p.mu_star[n]) << ','
            << boost::multiprecision::denominator(p.mu_star[n]) << ','
            << boost::multiprecision::numerator(p.delta[n]) << ','
            << boost::multiprecision::denominator(p.delta[n]) << ','
            << p.mu[n].convert_to<double>() << '\n';
    }
}

}  // namespace almeq
