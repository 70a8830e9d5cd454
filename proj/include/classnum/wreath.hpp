#ifndef CLASSNUM_WREATH_HPP
#define CLASSNUM_WREATH_HPP

#include <optional>

#include "classnum/numbers.hpp"
#include "classnum/permgroup.hpp"

namespace classnum {

// Conjugacy-class counting for wreath products A wr P. The counters
// consume only k = k(A): classes of the product correspond to classes of
// P with the cycles of a representative coloured by classes of A, two
// colourings identified when conjugate under the representative's
// centralizer in P. The tuple-group construction is the brute-force
// cross-check and the only place a concrete base group appears.

struct WreathDescriptor {
    Integer base_class_count;                  // k(A) >= 1
    std::optional<PermutationGroup> top;       // explicit P, or
    unsigned long cyclic_order = 0;            // cyclic shortcut C_r
};

/// Orbit count over all class representatives of P, each counted by
/// Burnside over the centralizer's action on cycle colourings. The
/// Burnside sum must divide exactly; a remainder is a hard failure.
Integer k_wreath_generic(const Integer& k, const PermutationGroup& top);

/// Closed form for cyclic tops: sum over m | r of phi(m) N(r/m, k) with
/// N the necklace count. Must agree with the generic path whenever both
/// run (enforced by tests).
Integer k_wreath_cyclic(const Integer& k, unsigned long r);

Integer k_wreath(const WreathDescriptor& w);

/// Number of k-colourings of d positions up to rotation.
Integer necklace_count(unsigned long d, const Integer& k);

/// Exact check of k^r/r - k^(r/2) <= k(A wr P) <= k^r/r + 2r k^(r/2) for
/// a regular top of degree r; square-root comparisons are done on squares.
bool check_regular_estimate(const Integer& k, const PermutationGroup& top);

/// Exact bigint verdict k_wreath_cyclic(15, r)^100 > 12^(108 r).
bool check_m12_growth(unsigned long r);

/// Smallest r such that the growth verdict holds for every r' in
/// [r, limit]. The raw inequality also holds at the isolated point r = 1.
unsigned long m12_growth_threshold(unsigned long limit = 400);

/// The wreath product A wr P as explicit permutations of
/// domain(A) x {0..r-1}; order |A|^r |P|.
PermutationGroup tuple_group(const PermutationGroup& base,
                             const PermutationGroup& top,
                             std::size_t cap = PermutationGroup::kDefaultCap);

}  // namespace classnum

#endif
