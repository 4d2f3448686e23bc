/* brute.hpp -- the slow-path enumeration oracle: exact densities computed by
 * walking every string of a given length through the automaton directly. */

#ifndef ALMEQ_BRUTE_HPP_
#define ALMEQ_BRUTE_HPP_

#include <functional>

#include "almeq/density.hpp"

namespace almeq {

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// Calls `visit` with every word of length exactly `length`, in
/// lexicographic symbol order. Throws CapacityError when |A|^length
/// exceeds `cap`.
void enumerate_words(const Alphabet& alphabet, std::uint32_t length,
                     const std::function<void(const std::vector<SymbolId>&)>& visit,
                     std::uint64_t cap = kDefaultEnumerationCap);

/// Exact mu_n computed by enumerating all |A|^n strings and testing each by
/// direct automaton simulation. The independence anchor for density tests.
Rational brute_density(const Dfa& d, std::uint32_t length,
                       std::uint64_t cap = kDefaultEnumerationCap);
Rational brute_density(const Nfa& nfa, std::uint32_t length,
                       std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace almeq

#endif  // ALMEQ_BRUTE_HPP_
