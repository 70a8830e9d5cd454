#ifndef CLASSNUM_PERMGROUP_HPP
#define CLASSNUM_PERMGROUP_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "classnum/numbers.hpp"

namespace classnum {

// Brute-force engine for small explicit permutation groups: full element
// enumeration by breadth-first closure, conjugacy classes, centralizers,
// and the class-count inequalities these oracles validate.

class Permutation {
public:
    explicit Permutation(std::vector<std::uint8_t> images);
    static Permutation identity(unsigned degree);
    /// Builds from disjoint cycles over 0-based points.
    static Permutation from_cycles(
        unsigned degree, const std::vector<std::vector<unsigned>>& cycles);

    unsigned degree() const { return static_cast<unsigned>(img_.size()); }
    std::uint8_t operator()(unsigned x) const { return img_[x]; }
    const std::vector<std::uint8_t>& images() const { return img_; }

    /// (a.then(b))(x) = b(a(x)): apply a first.
    Permutation then(const Permutation& b) const;
    Permutation inverse() const;
    bool is_identity() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::uint8_t> img_;
};

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const;
};

/// Cycles of x, fixed points included, each cycle starting at its smallest
/// point, cycles ordered by smallest point.
std::vector<std::vector<unsigned>> cycles(const Permutation& x);

struct GroupTooLargeError : std::runtime_error {
    explicit GroupTooLargeError(const std::string& what)
        : std::runtime_error(what) {}
};

class PermutationGroup {
public:
    static constexpr std::size_t kDefaultCap = 1'000'000;

    /// Full enumeration by breadth-first closure; deterministic element
    /// order (identity first, then discovery order).
    static PermutationGroup closure(unsigned degree,
                                    std::vector<Permutation> generators,
                                    std::size_t cap = kDefaultCap);

    /// Wraps an already-closed element set (e.g. a centralizer).
    static PermutationGroup from_elements(unsigned degree,
                                          std::vector<Permutation> elements);

    unsigned degree() const { return degree_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<Permutation>& elements() const { return elements_; }
    const std::vector<Permutation>& generators() const { return generators_; }
    bool contains(const Permutation& p) const;
    /// Index in enumeration order; the element must belong to the group.
    std::uint32_t index_of(const Permutation& p) const;

    /// Conjugacy classes as element indices, each class led by its first
    /// element in enumeration order.
    const std::vector<std::vector<std::uint32_t>>& conjugacy_classes() const;
    std::size_t class_count() const { return conjugacy_classes().size(); }

    PermutationGroup centralizer(const Permutation& x) const;
    bool is_subgroup_of(const PermutationGroup& big) const;
    bool is_normal_in(const PermutationGroup& big) const;
    bool is_transitive() const;
    bool is_regular() const;

private:
    PermutationGroup() = default;
    unsigned degree_ = 0;
    std::vector<Permutation> generators_;
    std::vector<Permutation> elements_;
    std::unordered_map<Permutation, std::uint32_t, PermutationHash> index_;
    mutable std::vector<std::vector<std::uint32_t>> classes_;
};

/// Permutation induced by c on the cycles of x; c must centralize x.
std::vector<std::size_t> action_on_cycles(const Permutation& c,
                                          const Permutation& x);

/// k(H)/|G:H| <= k(G) <= |G:H| k(H), exact integer comparisons; H must be
/// a subgroup of G.
bool check_subgroup_inequalities(const PermutationGroup& G,
                                 const PermutationGroup& H);

/// k(G) <= k(N) k(G/N) and k(G) <= |G:N| #{G-classes of N}; N must be
/// normal in G. The quotient count works on coset representatives.
bool check_normal_inequalities(const PermutationGroup& G,
                               const PermutationGroup& N);

/// Number of orbits of G on the elements of the normal subgroup N under
/// conjugation by all of G.
std::size_t g_classes_of_normal(const PermutationGroup& G,
                                const PermutationGroup& N);

/// Class count of G/N by coset multiplication.
std::size_t quotient_class_count(const PermutationGroup& G,
                                 const PermutationGroup& N);

/// k(P) <= 2^(r-1) for P <= S_r, plus k(P)^3 <= 5^(r-1) when r >= 4.
bool check_pyber_bound(const PermutationGroup& P);

/// Class enumeration against the averaged-fixed-points count: every class
/// satisfies |class| |C(rep)| = |G| and the centralizer orders sum to
/// k |G|.
bool check_burnside_identity(const PermutationGroup& G);

namespace catalog {

// The stored generator sets backing the oracle: exactly the small groups
// the tables and examples reference.

PermutationGroup cyclic(unsigned n);
PermutationGroup dihedral(unsigned n);       // degree n, order 2n, n >= 3
PermutationGroup symmetric(unsigned d);      // d <= 8
PermutationGroup alternating(unsigned d);    // d <= 8
PermutationGroup klein_four();               // regular on 4 points
PermutationGroup s3_regular();               // right-regular S3 on 6 points
PermutationGroup psl2(unsigned q);           // q in {4,5,7,9,11}, on q+1 points
PermutationGroup pgl2(unsigned q);
PermutationGroup mathieu11();
PermutationGroup mathieu12();
PermutationGroup mathieu11_in_12();          // M11 fixing the 12th point

/// Catalog lookup by name: C<n>, D<n>, S<d>, A<d>, K4, S3R, PSL2(q),
/// PGL2(q), M11, M12. Throws on unknown names.
PermutationGroup by_name(const std::string& name);

struct Entry {
    std::string name;
    PermutationGroup group;
};

/// Every catalog group, for sweeps.
std::vector<Entry> all();

/// (G, H) pairs with H <= G for the subgroup inequality sweep.
std::vector<std::pair<Entry, Entry>> subgroup_pairs();

/// (G, N) pairs with N normal in G.
std::vector<std::pair<Entry, Entry>> normal_pairs();

}  // namespace catalog

}  // namespace classnum

#endif
