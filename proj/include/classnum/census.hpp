#ifndef CLASSNUM_CENSUS_HPP
#define CLASSNUM_CENSUS_HPP

#include <string>
#include <vector>

#include "classnum/liecount.hpp"
#include "classnum/numbers.hpp"

namespace classnum {

// Machine-readable encodings of the exceptional-group tables (groups with
// k(G) >= n/2 for some primitive degree n), plus the verifiers that
// replay every claim the data supports.

enum class SourceTable { final_exceptions, sporadic, alt_ex, psl_ex, as_ex };

const char* to_string(SourceTable t);

struct CensusRow {
    std::string label;             // table label, aliases joined with '='
    SimpleGroupId socle;
    std::vector<Integer> degrees;  // one entry per inequivalent action
    Integer class_count;
    SourceTable source_table;
    Integer socle_order;

    /// Alias components of the label ("S8=SL4(2).2" -> {"S8","SL4(2).2"}).
    std::vector<std::string> alias_components() const;
};

struct LoadError : std::runtime_error {
    explicit LoadError(const std::string& what) : std::runtime_error(what) {}
};

/// Parses and validates the CSV data file. Every row must satisfy the
/// tables' defining property 2k >= n for each listed degree, and stored
/// socle orders must match the order formulas.
std::vector<CensusRow> load_census(const std::string& path);

/// Same content, JSON mirror.
std::vector<CensusRow> load_census_json(const std::string& path);

std::string to_csv(const std::vector<CensusRow>& rows);
std::string to_json(const std::vector<CensusRow>& rows);

/// Bundled data file: $CLASSNUM_CENSUS if set, else the build-time data
/// directory.
std::string default_census_path();

std::vector<CensusRow> rows_in(const std::vector<CensusRow>& rows, SourceTable t);

struct CheckResult {
    std::string id;
    bool pass;
    std::string lhs, rhs;  // the decisive integers, as decimal strings
    std::string note;
};

struct Report {
    std::vector<CheckResult> checks;
    bool all_pass() const;
    void add(std::string id, bool pass, std::string lhs = "", std::string rhs = "",
             std::string note = "");
    void merge(const Report& other);
};

/// 2k >= n for every row and degree; class counts re-derived through
/// every available formula, partition, or oracle path must match.
Report verify_exception_rows(const std::vector<CensusRow>& rows);

/// The (group, degree) pairs with k > n among final_exceptions must be
/// exactly M12 at 12, M24 at 24, Sp6(2) at 28.
Report verify_k_greater_than_m(const std::vector<CensusRow>& rows);

/// Scans alternating groups (d <= 40), PSL2/PGL2 (q <= 128) and every
/// census row: any (G, S) with 4 k(G)^2 >= |S| must have socle A5, A6,
/// PSL2(7) or PSL2(11), and all four must be witnessed.
Report verify_4k2_exceptions(const std::vector<CensusRow>& rows);

/// (2k)^100 <= n^131 for every final_exceptions row and degree, with the
/// documented alternate route for M12 at degree 12; k < 100 n over the
/// subspace-action table.
Report verify_power_bounds(const std::vector<CensusRow>& rows);

/// Alias-matched rows agree on class counts across tables; degree lists
/// are consistent (exact for sporadic/as_ex matches, containment for the
/// alternating/linear alias rows whose subset actions are excluded from
/// final_exceptions).
Report verify_cross_table(const std::vector<CensusRow>& rows);

}  // namespace classnum

#endif
