#pragma once

// Command-line front end. Every subcommand builds a JSON document which is
// then rendered as json (default), tsv or text.
//
// Exit codes: 0 ok, 1 usage error, 2 domain error, 3 selftest found an
// unexplained mismatch (or an internal inconsistency was detected).

#include <iostream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "twaff/center.hpp"
#include "twaff/json_export.hpp"
#include "twaff/selftest.hpp"

namespace twaff::cli {

enum ExitCode { kOk = 0, kUsage = 1, kDomain = 2, kMismatch = 3 };

namespace detail {

inline std::string scalar_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        std::string s;
        // rows of a matrix are separated by ';'
        const char* sep = !v.empty() && v.front().is_array() ? ";" : ",";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + scalar_text(v[i]);
        return s;
    }
    return v.dump();
}

inline bool is_table(const Json& v) { return v.is_array() && !v.empty() && v.front().is_object(); }

inline void render_text(const Json& v, std::ostream& out, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    for (const auto& [key, val] : v.items()) {
        if (val.is_object()) {
            out << pad << key << ":\n";
            render_text(val, out, indent + 2);
        } else if (is_table(val)) {
            out << pad << key << ":\n";
            for (const auto& row : val) {
                out << pad << "  -";
                bool first = true;
                for (const auto& [k, x] : row.items()) {
                    out << (first ? " " : ", ") << k << "=" << (x.is_object() ? x.dump() : scalar_text(x));
                    first = false;
                }
                out << '\n';
            }
        } else if (val.is_array() && !val.empty() && val.front().is_array()) {
            out << pad << key << ":\n";
            for (const auto& row : val) out << pad << "  " << scalar_text(row) << '\n';
        } else {
            out << pad << key << ": " << scalar_text(val) << '\n';
        }
    }
}

// Scalars as "key<TAB>value"; each array of objects becomes a table with a
// "# key" heading and a header row taken from its first element.
inline void render_tsv(const Json& v, std::ostream& out) {
    for (const auto& [key, val] : v.items())
        if (!is_table(val)) out << key << '\t' << (val.is_object() ? val.dump() : scalar_text(val)) << '\n';
    for (const auto& [key, val] : v.items()) {
        if (!is_table(val)) continue;
        out << "\n# " << key << '\n';
        bool first = true;
        for (const auto& [k, x] : val.front().items()) {
            out << (first ? "" : "\t") << k;
            first = false;
        }
        out << '\n';
        for (const auto& row : val) {
            first = true;
            for (const auto& [k, x] : row.items()) {
                out << (first ? "" : "\t") << (x.is_object() ? x.dump() : scalar_text(x));
                first = false;
            }
            out << '\n';
        }
    }
}

inline void emit(const Json& doc, const std::string& format, std::ostream& out) {
    if (format == "tsv")
        render_tsv(doc, out);
    else if (format == "text")
        render_text(doc, out, 0);
    else
        out << doc.dump(2) << '\n';
}

inline Json selftest_json(const SelftestReport& rep, bool& unexplained) {
    Json doc;
    Json rows = Json::array();
    Json flagged = Json::array();
    unexplained = false;
    for (const auto& c : rep.criteria) {
        Json row;
        row["id"] = c.id;
        row["name"] = c.name;
        row["status"] = c.passed ? "pass" : "fail";
        row["detail"] = c.detail;
        rows.push_back(row);
        unexplained = unexplained || !c.passed;
        for (const auto& f : c.flagged) flagged.push_back(Json::parse(f));
    }
    doc["criteria"] = rows;
    doc["flagged_discrepancies"] = flagged;
    doc["result"] = unexplained ? "unexplained-mismatch" : "pass";
    return doc;
}

} // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Root data, q-arithmetic and central generators for twisted affine quantum algebras at odd roots of 1",
                 "twaff"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "tsv", "text"}))
        ->capture_default_str();

    std::string type_spec;
    int l = 0;
    int ddeg = 1;
    int rmax = 10;
    int r = 1;
    std::string eta_text;

    auto* info = app.add_subcommand("info", "Cartan matrix, symmetrizer d, null-root marks r");
    info->add_option("type", type_spec, "type specifier, e.g. A4_2")->required();

    auto* roots = app.add_subcommand("roots", "positive real roots up to a delta-degree");
    roots->add_option("type", type_spec)->required();
    roots->add_option("--ddeg", ddeg, "delta-degree cutoff")->check(CLI::NonNegativeNumber)->capture_default_str();

    auto* par_cmd = app.add_subcommand("par", "PBW partition count par(eta)");
    par_cmd->add_option("type", type_spec)->required();
    par_cmd->add_option("--eta", eta_text, "weight c0,c1,...,cn")->required();

    auto* dethr = app.add_subcommand("dethr", "multiplicity of eps in det H^r: table vs product formula");
    dethr->add_option("type", type_spec)->required();
    dethr->add_option("-l", l, "odd order of the root of unity")->required();
    dethr->add_option("--rmax", rmax)->check(CLI::PositiveNumber)->capture_default_str();

    auto* mult = app.add_subcommand("mult", "highest-coefficient multiplicity next to the J-bound");
    mult->add_option("type", type_spec)->required();
    mult->add_option("-l", l)->required();
    mult->add_option("--eta", eta_text)->required();

    auto* jsets_cmd = app.add_subcommand("jsets", "index sets J' and J''");
    jsets_cmd->add_option("type", type_spec)->required();
    jsets_cmd->add_option("-l", l)->required();
    jsets_cmd->add_option("--rmax", rmax)->check(CLI::PositiveNumber)->capture_default_str();

    auto* star = app.add_subcommand("star", "coefficients of the central element E* at degree r delta");
    star->add_option("type", type_spec)->required();
    star->add_option("-l", l)->required();
    star->add_option("-r", r)->required();

    auto* center = app.add_subcommand("center", "generator catalog of the center and the relation P_Z");
    center->add_option("type", type_spec)->required();
    center->add_option("-l", l)->required();
    center->add_option("--ddeg", ddeg)->check(CLI::NonNegativeNumber)->capture_default_str();

    auto* selftest = app.add_subcommand("selftest", "run the exact consistency grid");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "twaff: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*selftest) {
            bool unexplained = false;
            const Json doc = detail::selftest_json(run_selftest(), unexplained);
            detail::emit(doc, format, out);
            return unexplained ? kMismatch : kOk;
        }

        const TwistedType t = parse_type(type_spec);
        if (!*info && !*roots && !*par_cmd) require_admissible(t, l);

        Json doc;
        if (*info) {
            doc = type_json(t);
        } else if (*roots) {
            doc = catalog_json(real_roots_upto(t, ddeg));
        } else if (*par_cmd) {
            const LatticeVector eta = parse_weight(eta_text, t.size());
            const RootCatalog cat = real_roots_upto(t, static_cast<int>(std::max<std::int64_t>(0, eta.delta_degree())));
            doc["type"] = type_name(t);
            doc["eta"] = coords_json(eta);
            doc["par"] = par(cat, eta);
        } else if (*dethr) {
            doc["type"] = type_name(t);
            doc["l"] = l;
            doc["rmax"] = rmax;
            Json rows = Json::array();
            int flagged = 0;
            for (int s = 1; s <= rmax; ++s) {
                const DetHrData d = det_hr(t, s, l);
                flagged += d.discrepancy ? 1 : 0;
                rows.push_back(det_hr_json(d));
            }
            doc["discrepancies"] = flagged;
            doc["rows"] = rows;
        } else if (*mult) {
            const LatticeVector eta = parse_weight(eta_text, t.size());
            const RootCatalog cat = real_roots_upto(t, static_cast<int>(std::max<std::int64_t>(0, eta.delta_degree())));
            const AgreementReport rep = compare_bounds(cat, eta, l);
            doc["type"] = type_name(t);
            doc["l"] = l;
            doc["eta"] = coords_json(eta);
            doc["highest_coeff_mult"] = rep.highest;
            doc["ziz_bound"] = rep.bound;
            doc["agree"] = rep.agree;
            doc["flagged_r"] = rep.flagged_r;
            doc["explained"] = rep.explained;
            doc["graded_center_dim"] = graded_center_dim(cat, eta, l);
        } else if (*jsets_cmd) {
            doc = jset_json(t, jsets(t, l, rmax));
        } else if (*star) {
            doc = star_json(t, star_coeffs(t, r, l));
        } else if (*center) {
            doc = center_json(center_generators(t, l, ddeg));
        }
        detail::emit(doc, format, out);
        return kOk;
    } catch (const Error& e) {
        err << "twaff: " << e.what() << '\n';
        if (e.kind() == ErrorKind::TypeSpec) return kUsage;
        if (e.kind() == ErrorKind::InternalInconsistency) return kMismatch;
        return kDomain;
    }
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, out, err);
}

} // namespace twaff::cli
