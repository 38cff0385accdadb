#pragma once

// The exact-arithmetic consistency grid run by `twaff selftest`.

#include <chrono>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "twaff/center.hpp"
#include "twaff/json_export.hpp"

namespace twaff {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = true;
    std::string detail;
    double seconds = 0.0;
    // Known, explained disagreements (det H^r table vs product formula).
    std::vector<std::string> flagged;
};

struct SelftestReport {
    std::vector<CriterionResult> criteria;
    bool all_passed() const {
        for (const auto& c : criteria)
            if (!c.passed) return false;
        return true;
    }
};

// Every family at its minimal rank and, where the rank varies, one above.
inline std::vector<TwistedType> test_types() {
    return {build_type(Family::A2n_2, 1),   build_type(Family::A2n_2, 2),  build_type(Family::A2nm1_2, 3),
            build_type(Family::A2nm1_2, 4), build_type(Family::Dnp1_2, 2), build_type(Family::Dnp1_2, 3),
            build_type(Family::E6_2, 4),    build_type(Family::D4_3, 2)};
}

inline std::vector<TwistedType> grid_types() {
    return {parse_type("A2_2"), parse_type("A4_2"), parse_type("D3_2"), parse_type("D4_3")};
}

inline std::vector<int> admissible_orders(const TwistedType& t, int max_l) {
    std::vector<int> ls;
    for (int l = t.k + 1; l <= max_l; ++l)
        if (l % 2 == 1) ls.push_back(l);
    return ls;
}

// All eta in Q_+ with delta-degree <= max_degree and coordinates <= max_coord.
inline std::vector<LatticeVector> weight_grid(const TwistedType& t, int max_degree, int max_coord) {
    std::vector<LatticeVector> out;
    LatticeVector v(t.size());
    std::function<void(int)> fill = [&](int i) {
        if (i == t.size()) {
            out.push_back(v);
            return;
        }
        const int hi = i == 0 ? std::min(max_degree, max_coord) : max_coord;
        for (int c = 0; c <= hi; ++c) {
            v[i] = c;
            fill(i + 1);
        }
    };
    fill(0);
    return out;
}

namespace detail {

// budget_seconds <= 0 means unbounded.
template <class Body>
CriterionResult timed(int id, std::string name, double budget_seconds, Body&& body) {
    CriterionResult res;
    res.id = id;
    res.name = std::move(name);
    const auto start = std::chrono::steady_clock::now();
    std::ostringstream detail;
    body(res, detail);
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget_seconds > 0 && res.seconds > budget_seconds) {
        if (res.passed) detail.str("");
        res.passed = false;
        detail << "runtime above " << budget_seconds << " s";
    }
    res.detail = detail.str();
    return res;
}

inline void fail(CriterionResult& res, std::ostringstream& detail, const std::string& what) {
    if (res.passed) detail << what;
    res.passed = false;
}

} // namespace detail

inline CriterionResult check_cartan_suite() {
    return detail::timed(1, "cartan", 1.0, [](CriterionResult& res, std::ostringstream& os) {
        int checked = 0;
        for (const auto& t : test_types()) {
            const auto& a = t.cartan;
            const std::string name = type_name(t);
            if (matrix_rank(a) != a.size() - 1) detail::fail(res, os, name + ": corank != 1; ");
            if (t.delta[0] != 1) detail::fail(res, os, name + ": r_0 != 1; ");
            for (int i = 0; i < a.size(); ++i) {
                long long s = 0;
                for (int j = 0; j < a.size(); ++j) {
                    s += static_cast<long long>(a(i, j)) * t.delta[static_cast<std::size_t>(j)];
                    if (t.d[static_cast<std::size_t>(i)] * a(i, j) != t.d[static_cast<std::size_t>(j)] * a(j, i))
                        detail::fail(res, os, name + ": symmetrizer fails; ");
                }
                if (s != 0) detail::fail(res, os, name + ": A r != 0; ");
            }
            ++checked;
        }
        if (res.passed) os << checked << " types";
    });
}

inline CriterionResult check_qint_multiplicities() {
    return detail::timed(2, "q-arithmetic", 5.0, [](CriterionResult& res, std::ostringstream& os) {
        int checked = 0;
        for (int l = 3; l <= 15; l += 2)
            for (int r = 1; r <= 4; ++r)
                for (int m = 1; m <= 60; ++m) {
                    const int got = mult_eps(qint(m, r), l);
                    const int rule = ((m * r) % l == 0 && r % l != 0) ? 1 : 0;
                    if (got != rule || got > 1)
                        detail::fail(res, os, "m=" + std::to_string(m) + " r=" + std::to_string(r) +
                                                  " l=" + std::to_string(l) + "; ");
                    ++checked;
                }
        if (res.passed) os << checked << " q-integers";
    });
}

inline CriterionResult check_partition_oracle() {
    return detail::timed(3, "partition-oracle", 30.0, [](CriterionResult& res, std::ostringstream& os) {
        int checked = 0;
        for (const auto& t : grid_types()) {
            const RootCatalog cat = real_roots_upto(t, 2);
            const LatticeVector top = weight_grid(t, 2, 4).back();
            const PartitionTable table = par_table(cat, top);
            for (const auto& eta : weight_grid(t, 2, 4)) {
                const Count dp = table(eta);
                const auto listed = enumerate_partitions(cat, eta).size();
                if (dp != listed || par(cat, eta) != dp)
                    detail::fail(res, os, type_name(t) + " eta=" + format_root(eta) + "; ");
                ++checked;
            }
        }
        if (res.passed) os << checked << " weights";
    });
}

inline CriterionResult check_real_part_identity() {
    return detail::timed(4, "real-part-identity", 0.0, [](CriterionResult& res, std::ostringstream& os) {
        int checked = 0;
        for (const auto& t : grid_types()) {
            const RootCatalog cat = real_roots_upto(t, 2);
            const LatticeVector top = weight_grid(t, 2, 4).back();
            const PartitionTable table = par_table(cat, top);
            for (int l : {5, 7, 9})
                for (const auto& eta : weight_grid(t, 2, 4))
                    for (const auto& root : cat.reals()) {
                        Count lhs = 0, rhs = 0;
                        LatticeVector rest = eta - root.v;
                        for (int m = 1; rest.nonnegative(); ++m, rest -= root.v)
                            lhs += table(rest) * static_cast<Count>(mult_eps(qint(m, root.d_alpha), l));
                        const LatticeVector step = static_cast<std::int64_t>(l_alpha(root, l)) * root.v;
                        for (rest = eta - step; rest.nonnegative(); rest -= step) rhs += table(rest);
                        if (lhs != rhs)
                            detail::fail(res, os, type_name(t) + " eta=" + format_root(eta) +
                                                      " alpha=" + format_root(root.v) + "; ");
                        ++checked;
                    }
        }
        if (res.passed) os << checked << " (eta, alpha, l) triples";
    });
}

inline CriterionResult check_agreement_identity() {
    return detail::timed(5, "agreement-identity", 0.0, [](CriterionResult& res, std::ostringstream& os) {
        int checked = 0;
        for (const auto& t : grid_types()) {
            const RootCatalog cat = real_roots_upto(t, 2);
            for (int l : {5, 7})
                for (const auto& eta : weight_grid(t, 2, 4)) {
                    const AgreementReport rep = compare_bounds(cat, eta, l);
                    const bool exception = !rep.agree;
                    const bool flagged = !rep.flagged_r.empty();
                    const std::string ctx = type_name(t) + " eta=" + format_root(eta) + " l=" + std::to_string(l);
                    if (exception != flagged || !rep.explained)
                        detail::fail(res, os, ctx + " highest=" + std::to_string(rep.highest) +
                                                  " bound=" + std::to_string(rep.bound) + "; ");
                    else if (exception)
                        res.flagged.push_back(discrepancy_line(ctx, Json(rep.bound), Json(rep.highest)));
                    ++checked;
                }
        }
        if (res.passed) os << checked << " (eta, l) pairs, " << res.flagged.size() << " flagged";
    });
}

inline CriterionResult check_jsets() {
    return detail::timed(6, "j-double-prime", 0.0, [](CriterionResult& res, std::ostringstream& os) {
        for (const auto& t : {build_type(Family::Dnp1_2, 2), build_type(Family::Dnp1_2, 3), build_type(Family::D4_3, 2)})
            for (int l : admissible_orders(t, 25))
                if (!jsets(t, l, 50).double_prime.empty())
                    detail::fail(res, os, type_name(t) + " l=" + std::to_string(l) + " has star degrees; ");
        std::vector<int> expected, got;
        for (int r = 1; r <= 50; ++r)
            if (r % 2 == 1 && r % 5 != 0) expected.push_back(r);
        for (const auto& s : jsets(parse_type("A4_2"), 5, 50).double_prime) got.push_back(s.r);
        if (got != expected) detail::fail(res, os, "A4_2 l=5 J'' differs; ");
        if (res.passed) os << "A4_2 l=5: " << got.size() << " degrees";
    });
}

inline CriterionResult check_star_nonvanishing() {
    return detail::timed(7, "star-nonvanishing", 0.0, [](CriterionResult& res, std::ostringstream& os) {
        int checked = 0;
        const std::vector<TwistedType> types = {build_type(Family::A2n_2, 1),   build_type(Family::A2n_2, 2),
                                                build_type(Family::A2n_2, 3),   build_type(Family::A2nm1_2, 3),
                                                build_type(Family::A2nm1_2, 4), build_type(Family::E6_2, 4)};
        for (const auto& t : types)
            for (int l : admissible_orders(t, 25))
                for (const auto& s : jsets(t, l, 50).double_prime) {
                    try {
                        const StarElement e = star_coeffs(t, s.r, l);
                        if (eval_at_eps(e.coeffs.at(e.i_star), l).is_zero()) throw Error(ErrorKind::InternalInconsistency, "");
                    } catch (const Error&) {
                        detail::fail(res, os, type_name(t) + " r=" + std::to_string(s.r) + " l=" + std::to_string(l) + "; ");
                    }
                    ++checked;
                }
        if (res.passed) os << checked << " star elements";
    });
}

inline CriterionResult check_pz_relation() {
    return detail::timed(8, "pz-relation", 0.0, [](CriterionResult& res, std::ostringstream& os) {
        int checked = 0;
        for (const auto& t : test_types())
            for (int l : admissible_orders(t, 25)) {
                try {
                    const PZRelation pz = pz_relation(t, l);
                    LatticeVector lhs = static_cast<std::int64_t>(l) * delta_vector(t);
                    LatticeVector rhs(t.size());
                    for (int i = 0; i < t.size(); ++i)
                        rhs[i] = static_cast<std::int64_t>(pz.exponents[static_cast<std::size_t>(i)]) *
                                 pz.l_i[static_cast<std::size_t>(i)];
                    if (lhs != rhs) detail::fail(res, os, type_name(t) + " l=" + std::to_string(l) + "; ");
                } catch (const Error& e) {
                    detail::fail(res, os, type_name(t) + " l=" + std::to_string(l) + ": " + e.what() + "; ");
                }
                ++checked;
            }
        if (res.passed) os << checked << " (type, l) pairs";
    });
}

inline SelftestReport run_selftest() {
    SelftestReport rep;
    rep.criteria.push_back(check_cartan_suite());
    rep.criteria.push_back(check_qint_multiplicities());
    rep.criteria.push_back(check_partition_oracle());
    rep.criteria.push_back(check_real_part_identity());
    rep.criteria.push_back(check_agreement_identity());
    rep.criteria.push_back(check_jsets());
    rep.criteria.push_back(check_star_nonvanishing());
    rep.criteria.push_back(check_pz_relation());
    return rep;
}

} // namespace twaff
