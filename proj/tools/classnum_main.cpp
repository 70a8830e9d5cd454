// Command-line front end: exact class counts, degrees, wreath counts, and
// the verification/scan suites with machine-readable output.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "classnum/census.hpp"
#include "classnum/interval.hpp"
#include "classnum/liecount.hpp"
#include "classnum/partitions.hpp"
#include "classnum/permgroup.hpp"
#include "classnum/wreath.hpp"

namespace {

using namespace classnum;
using nlohmann::ordered_json;

// big integers render as JSON numbers when they fit, decimal strings
// otherwise; never floats
ordered_json json_integer(const Integer& v) {
    if (v.fits_slong_p()) return ordered_json(v.get_si());
    return ordered_json(to_string(v));
}

ordered_json report_to_json(const std::string& suite, const Report& rep) {
    ordered_json doc;
    doc["suite"] = suite;
    doc["pass"] = rep.all_pass();
    doc["checks"] = ordered_json::array();
    for (const auto& c : rep.checks) {
        ordered_json jc;
        jc["id"] = c.id;
        jc["status"] = c.pass ? "pass" : "fail";
        if (!c.lhs.empty()) jc["lhs"] = c.lhs;
        if (!c.rhs.empty()) jc["rhs"] = c.rhs;
        if (!c.note.empty()) jc["note"] = c.note;
        doc["checks"].push_back(std::move(jc));
    }
    return doc;
}

void print_report_text(const std::string& suite, const Report& rep) {
    const bool color = std::getenv("NO_COLOR") == nullptr;
    const char* green = color ? "\033[32m" : "";
    const char* red = color ? "\033[31m" : "";
    const char* reset = color ? "\033[0m" : "";
    std::size_t fails = 0;
    for (const auto& c : rep.checks) {
        if (c.pass) continue;
        ++fails;
        std::cout << red << "FAIL" << reset << " " << c.id;
        if (!c.lhs.empty()) std::cout << "  lhs=" << c.lhs << " rhs=" << c.rhs;
        if (!c.note.empty()) std::cout << "  (" << c.note << ")";
        std::cout << "\n";
    }
    std::cout << (fails == 0 ? green : red) << suite << ": "
              << (rep.checks.size() - fails) << "/" << rep.checks.size()
              << " checks passed" << reset << "\n";
}

Report suite_tables(const std::vector<CensusRow>& rows) {
    Report rep;
    rep.merge(verify_exception_rows(rows));
    rep.merge(verify_k_greater_than_m(rows));
    rep.merge(verify_power_bounds(rows));
    rep.merge(verify_cross_table(rows));
    return rep;
}

Report suite_inequalities(const std::vector<CensusRow>& rows) {
    Report rep;
    bool prib = true, stir = true;
    for (unsigned long d = 1; d <= 1000 && prib; ++d) prib = check_pribitkin(d);
    rep.add("pribitkin-sweep-1..1000", prib);
    for (unsigned long d = 2; d <= 1000 && stir; ++d) stir = check_stirling(d);
    rep.add("stirling-sweep-2..1000", stir);
    rep.add("chain/alternating-primitive",
            max_d_satisfying("alternating-primitive") == 20, "max_d", "20");
    rep.add("chain/alternating-imprimitive",
            max_d_satisfying("alternating-imprimitive") == 19, "max_d", "19");
    rep.add("chain/imprimitive-growth",
            max_d_satisfying("imprimitive-growth") == 25, "max_d", "25");
    rep.add("praeger-saxl/M12", check_praeger_saxl(Integer(95040), 12), "95040",
            "4^12");
    rep.add("praeger-saxl/boundary",
            !check_praeger_saxl(int_pow(Integer(4), 5), 5), "4^5", "4^5");
    rep.merge(verify_4k2_exceptions(rows));
    return rep;
}

Report suite_wreath() {
    Report rep;
    bool agree = true;
    for (unsigned long k = 1; k <= 6 && agree; ++k)
        for (unsigned long r = 1; r <= 12 && agree; ++r)
            agree = k_wreath_generic(Integer(k), catalog::cyclic(
                        static_cast<unsigned>(r))) == k_wreath_cyclic(Integer(k), r);
    rep.add("generic-equals-cyclic/k<=6,r<=12", agree);

    const std::vector<std::pair<std::string, PermutationGroup>> bases = {
        {"C2", catalog::cyclic(2)},
        {"C3", catalog::cyclic(3)},
        {"S3", catalog::symmetric(3)},
        {"C4", catalog::cyclic(4)}};
    const std::vector<std::pair<std::string, PermutationGroup>> tops = {
        {"C1", catalog::cyclic(1)},  {"C2", catalog::cyclic(2)},
        {"C3", catalog::cyclic(3)},  {"S3", catalog::symmetric(3)},
        {"C4", catalog::cyclic(4)},  {"K4", catalog::klein_four()}};
    for (const auto& [bn, base] : bases)
        for (const auto& [tn, top] : tops) {
            const Integer kb(static_cast<unsigned long>(base.class_count()));
            const auto product = tuple_group(base, top);
            rep.add("tuple-equivalence/" + bn + "wr" + tn,
                    k_wreath_generic(kb, top) ==
                        Integer(static_cast<unsigned long>(product.class_count())),
                    to_string(k_wreath_generic(kb, top)),
                    std::to_string(product.class_count()));
        }

    bool regular_ok = true;
    for (unsigned long k = 1; k <= 6 && regular_ok; ++k) {
        for (unsigned r = 1; r <= 12 && regular_ok; ++r)
            regular_ok = check_regular_estimate(Integer(k), catalog::cyclic(r));
        if (regular_ok)
            regular_ok = check_regular_estimate(Integer(k), catalog::klein_four()) &&
                         check_regular_estimate(Integer(k), catalog::s3_regular());
    }
    rep.add("regular-estimate/k<=6,r<=12", regular_ok);

    rep.add("m12-growth-at-300", check_m12_growth(300));
    rep.add("m12-growth-threshold", m12_growth_threshold(400) == 222,
            std::to_string(m12_growth_threshold(400)), "222");
    return rep;
}

Report suite_oracle() {
    Report rep;
    for (unsigned q : {4u, 5u, 7u, 9u, 11u}) {
        const auto P = catalog::psl2(q);
        const auto Q = catalog::pgl2(q);
        rep.add("formula-oracle/PSL2(" + std::to_string(q) + ")",
                k_exact(SimpleGroupId::lie(Family::psl, 2, q)).value ==
                    Integer(static_cast<unsigned long>(P.class_count())),
                to_string(k_exact(SimpleGroupId::lie(Family::psl, 2, q)).value),
                std::to_string(P.class_count()));
        rep.add("formula-oracle/PGL2(" + std::to_string(q) + ")",
                k_exact(SimpleGroupId::lie(Family::pgl, 2, q)).value ==
                    Integer(static_cast<unsigned long>(Q.class_count())),
                to_string(k_exact(SimpleGroupId::lie(Family::pgl, 2, q)).value),
                std::to_string(Q.class_count()));
    }
    rep.add("oracle/M11", catalog::mathieu11().class_count() == 10);
    rep.add("oracle/M12", catalog::mathieu12().class_count() == 15);
    for (const auto& [G, H] : catalog::subgroup_pairs())
        rep.add("subgroup-inequalities/" + G.name + "/" + H.name,
                check_subgroup_inequalities(G.group, H.group));
    for (const auto& [G, N] : catalog::normal_pairs())
        rep.add("normal-inequalities/" + G.name + "/" + N.name,
                check_normal_inequalities(G.group, N.group));
    for (const auto& e : catalog::all()) {
        rep.add("pyber/" + e.name, check_pyber_bound(e.group));
        rep.add("burnside/" + e.name, check_burnside_identity(e.group));
    }
    return rep;
}

int run_verify(const std::string& suite, const std::string& data_path,
               const std::string& format) {
    std::vector<CensusRow> rows;
    if (suite == "tables" || suite == "inequalities" || suite == "all")
        rows = load_census(data_path);
    Report rep;
    if (suite == "tables" || suite == "all") rep.merge(suite_tables(rows));
    if (suite == "inequalities" || suite == "all")
        rep.merge(suite_inequalities(rows));
    if (suite == "wreath" || suite == "all") rep.merge(suite_wreath());
    if (suite == "oracle" || suite == "all") rep.merge(suite_oracle());
    if (format == "json")
        std::cout << report_to_json(suite, rep).dump(2) << "\n";
    else
        print_report_text(suite, rep);
    return rep.all_pass() ? 0 : 1;
}

SimpleGroupId id_from_flags(std::string family, unsigned long d, unsigned long q) {
    // accept PSL2 / PGL2 / SL4 style tokens with the dimension appended
    std::string suffix;
    while (!family.empty() &&
           std::isdigit(static_cast<unsigned char>(family.back()))) {
        suffix.insert(suffix.begin(), family.back());
        family.pop_back();
    }
    if (!suffix.empty()) d = std::stoul(suffix);
    if (family == "A" || family == "Alt" || family == "Alternating")
        return SimpleGroupId::alternating(d);
    if (family == "S" || family == "Sym" || family == "Symmetric")
        return SimpleGroupId::symmetric(d);
    if (family == "Sz" || family == "Suzuki") return SimpleGroupId::suzuki(q);
    static const std::map<std::string, Family> names = {
        {"PSL", Family::psl}, {"PGL", Family::pgl}, {"SL", Family::sl},
        {"PSU", Family::psu}, {"SU", Family::su},   {"PSp", Family::psp},
        {"Sp", Family::sp},   {"POmega+", Family::pomega_plus},
        {"POmega-", Family::pomega_minus}};
    auto it = names.find(family);
    if (it == names.end())
        throw CLI::ValidationError("kcount", "unknown family '" + family + "'");
    return SimpleGroupId::lie(it->second, d, q);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact conjugacy-class counts, bounds, and table verification"};
    app.require_subcommand(1);

    auto* cmd_partitions = app.add_subcommand("partitions", "partition counts");
    unsigned long part_d = 0;
    bool part_classify = false;
    cmd_partitions->add_option("--d", part_d, "integer to partition")->required();
    cmd_partitions->add_flag("--classify", part_classify,
                             "split by cycle-type sign and distinct-odd parts");

    auto* cmd_kcount = app.add_subcommand("kcount", "class number of a group");
    std::string kc_family;
    unsigned long kc_d = 0, kc_q = 0;
    cmd_kcount->add_option("--family", kc_family, "PSL2, PGL2, SL4, PSU3, Sp4, Sz, A, S")
        ->required();
    cmd_kcount->add_option("--d", kc_d, "dimension / degree");
    cmd_kcount->add_option("--q", kc_q, "field size");

    auto* cmd_degree = app.add_subcommand("degree", "degree of a primitive action");
    std::string deg_action;
    unsigned long deg_d = 0, deg_k = 0, deg_l = 0, deg_m = 0, deg_q = 0;
    cmd_degree
        ->add_option("--action", deg_action,
                     "k_subsets | projective_points | flags | two_subspaces | "
                     "imprimitive | symplectic_index")
        ->required();
    cmd_degree->add_option("--d", deg_d, "");
    cmd_degree->add_option("--k", deg_k, "");
    cmd_degree->add_option("--l", deg_l, "");
    cmd_degree->add_option("--m", deg_m, "");
    cmd_degree->add_option("--q", deg_q, "");

    auto* cmd_wreath = app.add_subcommand("wreath", "wreath-product class count");
    unsigned long wr_k = 0, wr_cyclic = 0;
    std::string wr_top;
    cmd_wreath->add_option("--k", wr_k, "base class count")->required();
    auto* opt_cyclic = cmd_wreath->add_option("--cyclic", wr_cyclic, "cyclic top C_r");
    auto* opt_top = cmd_wreath->add_option("--top", wr_top, "catalog top group");
    opt_cyclic->excludes(opt_top);

    auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    std::string vf_suite, vf_data, vf_format = "text";
    cmd_verify->add_option("--suite", vf_suite, "tables|inequalities|wreath|oracle|all")
        ->required()
        ->check(CLI::IsMember({"tables", "inequalities", "wreath", "oracle", "all"}));
    cmd_verify->add_option("--data", vf_data, "census file override");
    cmd_verify->add_option("--format", vf_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* cmd_scan = app.add_subcommand("scan", "threshold sweeps");
    std::string sc_suite;
    cmd_scan->add_option("--suite", sc_suite, "m12-threshold|d-threshold")
        ->required()
        ->check(CLI::IsMember({"m12-threshold", "d-threshold"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_partitions->parsed()) {
            if (part_classify) {
                const auto c = classify(part_d);
                ordered_json doc;
                doc["d"] = part_d;
                doc["total"] = json_integer(c.total);
                doc["even"] = json_integer(c.even_count);
                doc["odd"] = json_integer(c.odd_count);
                doc["distinct_odd"] = json_integer(c.distinct_odd_count);
                std::cout << doc.dump() << "\n";
            } else {
                std::cout << partition_count(part_d) << "\n";
            }
            return 0;
        }
        if (cmd_kcount->parsed()) {
            const SimpleGroupId id = id_from_flags(kc_family, kc_d, kc_q);
            BoundedCount k;
            if (has_exact_formula(id))
                k = k_exact(id);
            else
                k = k_bound(id);
            ordered_json doc;
            doc["value"] = json_integer(k.value);
            doc["kind"] = k.kind == CountKind::exact ? "exact"
                          : k.kind == CountKind::upper ? "upper"
                                                       : "lower";
            doc["provenance"] = k.provenance;
            std::cout << doc.dump() << "\n";
            return 0;
        }
        if (cmd_degree->parsed()) {
            Integer v;
            if (deg_action == "k_subsets")
                v = degree_k_subsets(deg_d, deg_k);
            else if (deg_action == "projective_points")
                v = degree_projective_points(deg_d, Integer(deg_q));
            else if (deg_action == "flags")
                v = degree_flags(deg_d, Integer(deg_q));
            else if (deg_action == "two_subspaces")
                v = degree_two_subspaces(deg_d, Integer(deg_q));
            else if (deg_action == "imprimitive")
                v = degree_imprimitive(deg_d, deg_k, deg_l);
            else if (deg_action == "symplectic_index")
                v = degree_symplectic_index(deg_m, Integer(deg_q));
            else
                throw CLI::ValidationError("degree", "unknown action '" + deg_action + "'");
            std::cout << v << "\n";
            return 0;
        }
        if (cmd_wreath->parsed()) {
            if (*opt_cyclic)
                std::cout << k_wreath_cyclic(Integer(wr_k), wr_cyclic) << "\n";
            else if (*opt_top)
                std::cout << k_wreath_generic(Integer(wr_k), catalog::by_name(wr_top))
                          << "\n";
            else
                throw CLI::ValidationError("wreath", "need --cyclic or --top");
            return 0;
        }
        if (cmd_verify->parsed()) {
            const std::string path = vf_data.empty() ? default_census_path() : vf_data;
            return run_verify(vf_suite, path, vf_format);
        }
        if (cmd_scan->parsed()) {
            ordered_json doc;
            doc["suite"] = sc_suite;
            if (sc_suite == "m12-threshold") {
                doc["limit"] = 400;
                doc["smallest_stable_r"] = m12_growth_threshold(400);
                doc["holds_at_r1"] = check_m12_growth(1);
            } else {
                doc["chains"] = ordered_json::array();
                for (const auto& c : inequality_chains()) {
                    ordered_json jc;
                    jc["name"] = c.name;
                    jc["description"] = c.description;
                    jc["max_d"] = max_d_satisfying(c.name);
                    doc["chains"].push_back(std::move(jc));
                }
            }
            std::cout << doc.dump(2) << "\n";
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
