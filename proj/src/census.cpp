#include "classnum/census.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "classnum/partitions.hpp"
#include "classnum/permgroup.hpp"

namespace classnum {

const char* to_string(SourceTable t) {
    switch (t) {
        case SourceTable::final_exceptions: return "final_exceptions";
        case SourceTable::sporadic: return "sporadic";
        case SourceTable::alt_ex: return "alt_ex";
        case SourceTable::psl_ex: return "psl_ex";
        case SourceTable::as_ex: return "as_ex";
    }
    return "?";
}

namespace {

std::optional<SourceTable> table_from_string(const std::string& s) {
    if (s == "final_exceptions") return SourceTable::final_exceptions;
    if (s == "sporadic") return SourceTable::sporadic;
    if (s == "alt_ex") return SourceTable::alt_ex;
    if (s == "psl_ex") return SourceTable::psl_ex;
    if (s == "as_ex") return SourceTable::as_ex;
    return std::nullopt;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

SimpleGroupId socle_from_fields(const std::string& family_tok,
                                const std::string& params, const std::string& where) {
    auto fam = family_from_token(family_tok);
    if (!fam) throw LoadError(where + ": unknown socle family '" + family_tok + "'");
    if (*fam == Family::sporadic) return SimpleGroupId::sporadic(params);
    if (*fam == Family::alternating || *fam == Family::symmetric) {
        unsigned long d = std::stoul(params);
        return *fam == Family::alternating ? SimpleGroupId::alternating(d)
                                           : SimpleGroupId::symmetric(d);
    }
    if (*fam == Family::suzuki) return SimpleGroupId::suzuki(std::stoul(params));
    auto parts = split(params, ';');
    if (parts.size() != 2)
        throw LoadError(where + ": lie socle needs 'd;q' parameters");
    return SimpleGroupId::lie(*fam, std::stoul(parts[0]), std::stoul(parts[1]));
}

CensusRow row_from_fields(const std::vector<std::string>& f, const std::string& where) {
    CensusRow row;
    row.label = f[0];
    row.socle = socle_from_fields(f[1], f[2], where);
    for (const auto& ds : split(f[3], ';')) {
        if (ds.empty()) throw LoadError(where + ": empty degree");
        row.degrees.emplace_back(ds);
    }
    if (row.degrees.empty()) throw LoadError(where + ": no degrees");
    row.class_count = Integer(f[4]);
    row.socle_order = Integer(f[5]);
    auto table = table_from_string(f[6]);
    if (!table) throw LoadError(where + ": unknown table '" + f[6] + "'");
    row.source_table = *table;

    if (row.class_count < 1) throw LoadError(where + ": class count must be >= 1");
    for (const auto& n : row.degrees)
        if (2 * row.class_count < n)
            throw LoadError(where + " (row " + row.label +
                            "): violates the defining property k >= n/2");
    if (order(row.socle) != row.socle_order)
        throw LoadError(where + " (row " + row.label +
                        "): stored socle order disagrees with the order formula");
    return row;
}

}  // namespace

std::vector<std::string> CensusRow::alias_components() const {
    return split(label, '=');
}

std::vector<CensusRow> load_census(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw LoadError("cannot open census file " + path);
    std::string line;
    std::vector<CensusRow> rows;
    unsigned lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (lineno == 1) {
            if (line != "label,socle_family,socle_params,degrees,k,order,table")
                throw LoadError(path + ":1: bad header");
            continue;
        }
        auto fields = split(line, ',');
        const std::string where = path + ":" + std::to_string(lineno);
        if (fields.size() != 7)
            throw LoadError(where + ": expected 7 fields, got " +
                            std::to_string(fields.size()));
        try {
            rows.push_back(row_from_fields(fields, where));
        } catch (const LoadError&) {
            throw;
        } catch (const std::exception& e) {
            throw LoadError(where + ": " + e.what());
        }
    }
    return rows;
}

std::vector<CensusRow> load_census_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw LoadError("cannot open census file " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw LoadError(path + ": " + e.what());
    }
    std::vector<CensusRow> rows;
    unsigned idx = 0;
    for (const auto& r : doc.at("rows")) {
        ++idx;
        std::string where = path + ": row " + std::to_string(idx);
        std::string degrees;
        for (const auto& d : r.at("degrees")) {
            if (!degrees.empty()) degrees += ';';
            degrees += to_string(Integer(d.get<std::uint64_t>()));
        }
        std::vector<std::string> fields{
            r.at("label").get<std::string>(),
            r.at("socle_family").get<std::string>(),
            r.at("socle_params").get<std::string>(),
            degrees,
            to_string(Integer(r.at("k").get<std::uint64_t>())),
            to_string(Integer(r.at("order").get<std::uint64_t>())),
            r.at("table").get<std::string>()};
        rows.push_back(row_from_fields(fields, where));
    }
    return rows;
}

namespace {

std::string socle_params_string(const SimpleGroupId& s) {
    if (s.family == Family::sporadic) return s.name;
    if (s.family == Family::alternating || s.family == Family::symmetric)
        return std::to_string(s.d);
    if (s.family == Family::suzuki) return std::to_string(s.q);
    return std::to_string(s.d) + ";" + std::to_string(s.q);
}

}  // namespace

std::string to_csv(const std::vector<CensusRow>& rows) {
    std::ostringstream out;
    out << "label,socle_family,socle_params,degrees,k,order,table\n";
    for (const auto& r : rows) {
        out << r.label << ',' << family_token(r.socle.family) << ','
            << socle_params_string(r.socle) << ',';
        for (std::size_t i = 0; i < r.degrees.size(); ++i)
            out << (i ? ";" : "") << r.degrees[i];
        out << ',' << r.class_count << ',' << r.socle_order << ','
            << to_string(r.source_table) << '\n';
    }
    return out.str();
}

std::string to_json(const std::vector<CensusRow>& rows) {
    nlohmann::ordered_json doc;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json jr;
        jr["label"] = r.label;
        jr["socle_family"] = family_token(r.socle.family);
        jr["socle_params"] = socle_params_string(r.socle);
        jr["degrees"] = nlohmann::ordered_json::array();
        for (const auto& d : r.degrees) jr["degrees"].push_back(d.get_ui());
        jr["k"] = r.class_count.get_ui();
        jr["order"] = static_cast<std::uint64_t>(r.socle_order.get_ui());
        jr["table"] = to_string(r.source_table);
        doc["rows"].push_back(std::move(jr));
    }
    return doc.dump(2) + "\n";
}

std::string default_census_path() {
    if (const char* env = std::getenv("CLASSNUM_CENSUS")) return env;
#ifdef CLASSNUM_DATA_DIR
    return std::string(CLASSNUM_DATA_DIR) + "/census.csv";
#else
    return "data/census.csv";
#endif
}

std::vector<CensusRow> rows_in(const std::vector<CensusRow>& rows, SourceTable t) {
    std::vector<CensusRow> out;
    for (const auto& r : rows)
        if (r.source_table == t) out.push_back(r);
    return out;
}

bool Report::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

void Report::add(std::string id, bool pass, std::string lhs, std::string rhs,
                 std::string note) {
    checks.push_back({std::move(id), pass, std::move(lhs), std::move(rhs),
                      std::move(note)});
}

void Report::merge(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

// ---------------------------------------------------------------------------
// label components and recomputation paths

namespace {

// A label component such as "PSL2(9)", "SL4(2).2", "A6.(2x2)", "M11".
// Only undecorated components with a formula/partition/oracle path are
// used to re-derive class counts; the rest are stored facts.
struct ParsedComponent {
    std::optional<SimpleGroupId> id;
    bool mathieu11 = false;
    bool mathieu12 = false;
};

ParsedComponent parse_component(const std::string& s) {
    ParsedComponent out;
    if (s == "M11") {
        out.mathieu11 = true;
        return out;
    }
    if (s == "M12") {
        out.mathieu12 = true;
        return out;
    }
    if (s.find('.') != std::string::npos) return out;  // decorated: stored only
    static const std::vector<std::pair<std::string, Family>> prefixes = {
        {"PSL", Family::psl}, {"PGL", Family::pgl}, {"PSU", Family::psu},
        {"PSp", Family::psp}, {"SL", Family::sl},   {"SU", Family::su},
        {"Sp", Family::sp},
    };
    if (s.rfind("Sz(", 0) == 0 && s.back() == ')') {
        out.id = SimpleGroupId::suzuki(std::stoul(s.substr(3)));
        return out;
    }
    for (const auto& [prefix, fam] : prefixes) {
        if (s.rfind(prefix, 0) != 0) continue;
        const std::string rest = s.substr(prefix.size());
        auto open = rest.find('(');
        if (open == std::string::npos || rest.back() != ')') return out;
        try {
            unsigned long d = std::stoul(rest.substr(0, open));
            unsigned long q = std::stoul(rest.substr(open + 1));
            out.id = SimpleGroupId::lie(fam, d, q);
        } catch (const std::exception&) {
        }
        return out;
    }
    if ((s[0] == 'A' || s[0] == 'S') && s.size() >= 2 &&
        std::isdigit(static_cast<unsigned char>(s[1]))) {
        unsigned long d = std::stoul(s.substr(1));
        out.id = s[0] == 'A' ? SimpleGroupId::alternating(d)
                             : SimpleGroupId::symmetric(d);
    }
    return out;
}

std::optional<BoundedCount> recompute(const SimpleGroupId& id) {
    if (has_exact_formula(id)) return k_exact(id);
    if (id.family == Family::pgl) return std::nullopt;  // socle != group
    const SimpleGroupId c = canonical_socle(id);
    if (!c.same_group(id) && has_exact_formula(c)) return k_exact(c);
    return std::nullopt;
}

std::size_t mathieu_class_count(bool eleven) {
    static const std::size_t k11 = catalog::mathieu11().class_count();
    static const std::size_t k12 = catalog::mathieu12().class_count();
    return eleven ? k11 : k12;
}

std::string row_id(const CensusRow& r) {
    return std::string(to_string(r.source_table)) + "/" + r.label;
}

// "A6.2" names three distinct extensions; it cannot identify a group
const std::set<std::string> kAmbiguousComponents = {"A6.2"};

bool components_match(const CensusRow& a, const CensusRow& b) {
    for (const auto& ca : a.alias_components()) {
        if (kAmbiguousComponents.contains(ca)) continue;
        for (const auto& cb : b.alias_components())
            if (ca == cb) return true;
    }
    return false;
}

}  // namespace

Report verify_exception_rows(const std::vector<CensusRow>& rows) {
    Report rep;
    for (const auto& r : rows) {
        std::set<std::string> seen_degree;
        for (const auto& n : r.degrees) {
            const std::string tag = to_string(n);
            if (!seen_degree.insert(tag).second) continue;
            rep.add("half-degree/" + row_id(r) + "/n=" + tag,
                    2 * r.class_count >= n, to_string(Integer(2 * r.class_count)), tag);
        }
        for (const auto& comp : r.alias_components()) {
            const ParsedComponent pc = parse_component(comp);
            std::optional<Integer> derived;
            std::string how;
            if (pc.mathieu11 || pc.mathieu12) {
                derived = Integer(static_cast<unsigned long>(
                    mathieu_class_count(pc.mathieu11)));
                how = "oracle";
            } else if (pc.id) {
                if (auto k = recompute(*pc.id)) {
                    derived = k->value;
                    how = k->provenance;
                }
            }
            if (derived)
                rep.add("rederive/" + row_id(r) + "/" + comp,
                        *derived == r.class_count, to_string(*derived),
                        to_string(r.class_count), how);
        }
    }
    return rep;
}

Report verify_k_greater_than_m(const std::vector<CensusRow>& rows) {
    Report rep;
    std::set<std::pair<std::string, std::string>> found;
    for (const auto& r : rows_in(rows, SourceTable::final_exceptions))
        for (const auto& n : r.degrees)
            if (r.class_count > n) found.insert({r.label, to_string(n)});
    const std::set<std::pair<std::string, std::string>> expected = {
        {"M12", "12"}, {"M24", "24"}, {"Sp6(2)", "28"}};
    for (const auto& [label, n] : found)
        rep.add("k-exceeds-degree/" + label + "@" + n, expected.contains({label, n}),
                label, n, "k > n");
    for (const auto& [label, n] : expected)
        rep.add("k-exceeds-degree-witnessed/" + label + "@" + n,
                found.contains({label, n}), label, n);
    rep.add("k-exceeds-degree-set",
            found == expected, std::to_string(found.size()), "3",
            "survivor set must be exactly {M12@12, M24@24, Sp6(2)@28}");
    return rep;
}

Report verify_4k2_exceptions(const std::vector<CensusRow>& rows) {
    Report rep;
    const std::vector<SimpleGroupId> exceptions = {
        SimpleGroupId::alternating(5), SimpleGroupId::alternating(6),
        SimpleGroupId::lie(Family::psl, 2, 7), SimpleGroupId::lie(Family::psl, 2, 11)};
    auto is_exception = [&](const SimpleGroupId& s) {
        for (const auto& e : exceptions)
            if (e.same_group(s)) return true;
        return false;
    };
    std::set<std::string> witnessed;

    auto scan = [&](const std::string& what, const SimpleGroupId& socle,
                    const Integer& k, const Integer& socle_order) {
        if (4 * k * k < socle_order) return;  // within the bound
        const SimpleGroupId c = canonical_socle(socle);
        rep.add("4k2-violator/" + what, is_exception(c), to_string(Integer(4 * k * k)),
                to_string(socle_order), "socle " + c.str());
        witnessed.insert(c.str());
    };

    for (unsigned long d = 5; d <= 40; ++d) {
        const SimpleGroupId s = SimpleGroupId::alternating(d);
        const Integer so = order(s);
        scan("A" + std::to_string(d), s, k_alternating(d), so);
        scan("S" + std::to_string(d), s, k_symmetric(d), so);
    }
    for (unsigned long q = 4; q <= 128; ++q) {
        if (!is_prime_power(q)) continue;
        const SimpleGroupId s = SimpleGroupId::lie(Family::psl, 2, q);
        const Integer so = order(s);
        scan("PSL2(" + std::to_string(q) + ")", s, k_exact(s).value, so);
        scan("PGL2(" + std::to_string(q) + ")", s,
             k_exact(SimpleGroupId::lie(Family::pgl, 2, q)).value, so);
    }
    for (const auto& r : rows)
        scan(row_id(r), r.socle, r.class_count, r.socle_order);

    for (const auto& e : exceptions)
        rep.add("4k2-witnessed/" + e.str(), witnessed.contains(e.str()), e.str(), "",
                "every listed exception must actually violate the bound");
    rep.add("4k2-exception-count", witnessed.size() == exceptions.size(),
            std::to_string(witnessed.size()), std::to_string(exceptions.size()));
    return rep;
}

Report verify_power_bounds(const std::vector<CensusRow>& rows) {
    Report rep;
    for (const auto& r : rows_in(rows, SourceTable::final_exceptions)) {
        std::set<std::string> seen;
        for (const auto& n : r.degrees) {
            const std::string tag = to_string(n);
            if (!seen.insert(tag).second) continue;
            if (r.label == "M12" && n == 12) {
                // product-action route for the one row with k > m at every
                // degree: 15^3 * 5 = 16875, compared against 12^3.93 in
                // integer-power form
                Integer lhs;
                mpz_pow_ui(lhs.get_mpz_t(), Integer(16875).get_mpz_t(), 100);
                const Integer rhs = int_pow(Integer(12), 393);
                rep.add("power-bounds/M12@12-alternate", lhs <= rhs, "16875^100",
                        "12^393");
                continue;
            }
            Integer lhs;
            mpz_pow_ui(lhs.get_mpz_t(), Integer(2 * r.class_count).get_mpz_t(), 100);
            Integer rhs;
            mpz_pow_ui(rhs.get_mpz_t(), n.get_mpz_t(), 131);
            rep.add("power-bounds/" + r.label + "@" + tag, lhs <= rhs,
                    "(2*" + to_string(r.class_count) + ")^100", tag + "^131");
        }
    }
    for (const auto& r : rows_in(rows, SourceTable::psl_ex)) {
        std::set<std::string> seen;
        for (const auto& n : r.degrees) {
            const std::string tag = to_string(n);
            if (!seen.insert(tag).second) continue;
            rep.add("subspace-100n/" + r.label + "@" + tag,
                    r.class_count < 100 * n, to_string(r.class_count),
                    "100*" + tag);
        }
    }
    return rep;
}

Report verify_cross_table(const std::vector<CensusRow>& rows) {
    Report rep;
    auto sorted_degrees = [](const CensusRow& r) {
        auto d = r.degrees;
        std::sort(d.begin(), d.end());
        return d;
    };
    // class count is degree-independent: alias-matched rows must agree
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            if (!components_match(rows[i], rows[j])) continue;
            rep.add("cross-k/" + row_id(rows[i]) + "&" + row_id(rows[j]),
                    rows[i].class_count == rows[j].class_count,
                    to_string(rows[i].class_count),
                    to_string(rows[j].class_count));
        }
    // each final_exceptions degree list is drawn from its section rows;
    // exact equality where no subset/subspace action was stripped
    for (const auto& fin : rows_in(rows, SourceTable::final_exceptions)) {
        std::vector<Integer> pool;
        bool exact_table = false;
        std::vector<Integer> exact_pool;
        for (const auto& r : rows) {
            if (r.source_table == SourceTable::final_exceptions) continue;
            if (!components_match(fin, r)) continue;
            for (const auto& n : r.degrees) pool.push_back(n);
            if (r.source_table == SourceTable::sporadic ||
                r.source_table == SourceTable::as_ex) {
                exact_table = true;
                exact_pool = sorted_degrees(r);
            }
        }
        std::sort(pool.begin(), pool.end());
        auto mine = sorted_degrees(fin);
        const bool contained = std::includes(pool.begin(), pool.end(),
                                             mine.begin(), mine.end());
        rep.add("cross-degrees/" + fin.label, contained,
                std::to_string(mine.size()), std::to_string(pool.size()),
                "final degrees within matched section rows");
        if (exact_table)
            rep.add("cross-degrees-exact/" + fin.label, mine == exact_pool,
                    std::to_string(mine.size()), std::to_string(exact_pool.size()));
    }
    return rep;
}

}  // namespace classnum
