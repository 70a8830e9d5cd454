#ifndef CLASSNUM_PARTITIONS_HPP
#define CLASSNUM_PARTITIONS_HPP

#include <functional>
#include <string>
#include <vector>

#include "classnum/interval.hpp"
#include "classnum/numbers.hpp"

namespace classnum {

// Partition counting and the partition-derived class numbers of the
// symmetric and alternating groups, plus the inequality checkers that
// gate the degree ranges.

struct Partition {
    std::vector<unsigned long> parts;  // weakly decreasing, all >= 1
    unsigned long sum() const;
};

/// Number of partitions p(n); pentagonal-number recurrence behind an
/// internally synchronized cache. p(0) = 1.
Integer partition_count(unsigned long n);

/// Visits every partition of n in deterministic (descending lexicographic)
/// order. Used by the small-degree class-count path and by oracles.
void for_each_partition(unsigned long n,
                        const std::function<void(const Partition&)>& visit);

struct PartitionClassification {
    Integer total;               // = p(d)
    Integer even_count;          // cycle types with d - #parts even
    Integer odd_count;
    Integer distinct_odd_count;  // partitions into distinct odd parts
};

/// Counts by dynamic programming. A partition is "even" when d minus the
/// number of parts is even (the sign of its cycle type).
PartitionClassification classify(unsigned long d);

/// k(S_d) = p(d). Rejects d < 1.
Integer k_symmetric(unsigned long d);

/// k(A_d): direct enumeration for d <= 9, split-class count
/// (even types + types with all parts odd and distinct) for d >= 10.
Integer k_alternating(unsigned long d);

/// Number of ways to write even l as a sum of two distinct odd parts,
/// floor(l/4); rejects odd l.
Integer two_distinct_odd_count(unsigned long l);

/// Decides p(d) < e^(pi*sqrt(2d/3)) / d^(3/4) by interval escalation.
/// Returns true/false on a decided verdict, throws UndecidedError at the
/// precision cap.
bool check_pribitkin(unsigned long d);

/// Decides sqrt(2 pi) d^(d+1/2) e^-d <= d! <= e d^(d+1/2) e^-d; d >= 2.
bool check_stirling(unsigned long d);

/// |order| < 4^d as exact integers.
bool check_praeger_saxl(const Integer& order, unsigned long d);

struct InequalityChain {
    std::string name;
    std::string description;
    unsigned long scan_limit;
    // decided verdict for a single d at the given working precision
    std::function<Verdict(unsigned long d, unsigned digits)> probe;
};

/// The registered degree-bounding inequality chains. All logarithms in
/// these chains are base 2.
const std::vector<InequalityChain>& inequality_chains();

/// Largest d in [1, scan_limit] satisfying the named chain. The full range
/// is swept and must split as true...true false...false; a non-monotone
/// pattern or an undecided verdict is an error.
unsigned long max_d_satisfying(const std::string& name);

}  // namespace classnum

#endif
