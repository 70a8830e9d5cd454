#ifndef CLASSNUM_LIECOUNT_HPP
#define CLASSNUM_LIECOUNT_HPP

#include <optional>
#include <string>
#include <vector>

#include "classnum/numbers.hpp"

namespace classnum {

// Class-number formulas and upper bounds for groups of Lie type, group
// orders, minimal permutation degrees, and the degree formulas for the
// primitive actions handled by the suite.

enum class Family {
    alternating,
    symmetric,
    psl,
    pgl,
    sl,
    psu,
    su,
    psp,
    sp,
    pomega_plus,
    pomega_minus,
    omega_plus,
    omega_minus,
    suzuki,
    sporadic,
};

struct SimpleGroupId {
    Family family{};
    unsigned long d = 0;       // degree / dimension (2m for symplectic & orthogonal)
    unsigned long q = 0;       // field size; 0 when absent
    std::string name;          // sporadic name
    std::string decoration;    // outer extension label, e.g. ".2"

    static SimpleGroupId alternating(unsigned long d);
    static SimpleGroupId symmetric(unsigned long d);
    static SimpleGroupId lie(Family f, unsigned long d, unsigned long q);
    static SimpleGroupId suzuki(unsigned long q);
    static SimpleGroupId sporadic(const std::string& name);

    SimpleGroupId with_decoration(const std::string& dec) const;
    bool same_group(const SimpleGroupId& other) const;
    std::string str() const;
};

/// Lowercase token for data files ("psl", "alternating", ...).
const char* family_token(Family f);
std::optional<Family> family_from_token(const std::string& token);

/// Resolves the exceptional isomorphisms used by the tables
/// (PSL2(4) = PSL2(5) = A5, PSL2(9) = A6, PSL3(2) = PSL2(7),
/// PSL4(2) = A8, PSp4(3) = PSU4(2), SL/SU collapsing to PSL/PSU where
/// the centre is trivial) to one representative per abstract group.
SimpleGroupId canonical_socle(const SimpleGroupId& id);

enum class CountKind { exact, upper, lower };

struct BoundedCount {
    Integer value;
    CountKind kind{};
    std::string provenance;
};

struct NoFormulaError : std::invalid_argument {
    explicit NoFormulaError(const std::string& what) : std::invalid_argument(what) {}
};

/// Exact class number from the formula registry (PSL2, PGL2, SL4 even q,
/// Sp4, PSU4, PSU3, Suzuki, alternating, symmetric). Exact values are
/// cross-checked against the applicable bounds at construction. Throws
/// NoFormulaError outside the registry.
BoundedCount k_exact(const SimpleGroupId& id);

/// True when k_exact accepts the id.
bool has_exact_formula(const SimpleGroupId& id);

/// Every registered upper bound applicable to the id, exact rational
/// coefficients floored to integers.
std::vector<BoundedCount> k_bound_all(const SimpleGroupId& id);

/// The tightest registered upper bound. Throws NoFormulaError for
/// families without one (alternating, symmetric, sporadic).
BoundedCount k_bound(const SimpleGroupId& id);

/// Exact group order |S| of the (undecorated) simple group.
Integer order(const SimpleGroupId& id);

/// Untwisted rank used by the generic Lie-type bounds.
unsigned long untwisted_rank(const SimpleGroupId& id);

/// Minimal faithful permutation degree P(S); registry of formulas plus
/// stored exceptional values. Throws NoFormulaError when not stored.
Integer minimal_degree(const SimpleGroupId& id);
bool has_minimal_degree(const SimpleGroupId& id);

// Degrees of the primitive actions referenced by the tables.
Integer degree_k_subsets(unsigned long d, unsigned long k);
Integer degree_projective_points(unsigned long d, const Integer& q);
Integer degree_flags(unsigned long d, const Integer& q);
Integer degree_two_subspaces(unsigned long d, const Integer& q);
Integer degree_imprimitive(unsigned long d, unsigned long k, unsigned long l);
Integer degree_symplectic_index(unsigned long m, const Integer& q);

/// 4 k^2 < |S| as exact integers.
bool check_4k2(const SimpleGroupId& id, const Integer& k);

}  // namespace classnum

#endif
