/* density.hpp -- exact word-density sequences of a regular language.
 *
 * For a complete DFA D and n >= 0:
 *   count(n)   = |L(D) ∩ A^n|                      (exact big integer)
 *   mu[n]      = count(n) / |A|^n
 *   mu_star[n] = |L(D) ∩ A^{<n}| / |A^{<n}|        (0 at n = 0)
 *   delta[n]   = (mu[0] + ... + mu[n-1]) / n       (0 at n = 0)
 */

#ifndef ALMEQ_DENSITY_HPP_
#define ALMEQ_DENSITY_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <iosfwd>
#include <vector>

#include "almeq/dfa.hpp"

namespace almeq {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr std::uint32_t kDefaultHorizonCap = 2000;

/// Number of accepted strings of length exactly n, by iterating the
/// per-state occupancy-count recurrence n times.
Integer count_words(const Dfa& d, std::uint32_t n);

struct DensityProfile {
    std::uint32_t horizon = 0;
    std::vector<Integer> counts;     // index 0..horizon
    std::vector<Rational> mu;        // index 0..horizon
    std::vector<Rational> mu_star;   // index 0..horizon, mu_star[0] = 0
    std::vector<Rational> delta;     // index 0..horizon, delta[0] = 0
};

/// Exact profile for all n <= horizon. Throws CapacityError past `cap`.
DensityProfile profile(const Dfa& d, std::uint32_t horizon,
                       std::uint32_t cap = kDefaultHorizonCap);

struct ResidueProbe {
    std::uint32_t period = 1;
    /// True when the structural candidate exceeded the period cap and the
    /// period was instead estimated from the mu sequence.
    bool empirical_fallback = false;
    /// Per residue b < period: mu at the largest sampled index == b (mod a).
    std::vector<Rational> tail_estimate;
    /// Per residue: max - min over the last 4 samples of that class.
    std::vector<Rational> oscillation;
};

inline constexpr std::uint32_t kPeriodCap = 64;

/// Candidate convergence period: lcm over reachable SCCs of the gcd of each
/// SCC's internal cycle lengths, capped at kPeriodCap; past the cap the
/// period is estimated empirically from the mu sequence (smallest p <= cap
/// minimizing tail oscillation). Requires horizon >= 4 * period.
ResidueProbe residue_probe(const Dfa& d, std::uint32_t horizon);

/// CSV with columns
/// n,count,mu_num,mu_den,mu_star_num,mu_star_den,delta_num,delta_den,mu_float
void write_profile_csv(std::ostream& out, const DensityProfile& profile);

}  // namespace almeq

#endif  // ALMEQ_DENSITY_HPP_
