#pragma once

// Center of the specialization at a primitive l-th root of unity: the
// multiplicity bookkeeping for det H_eta, the index sets J' and J'', the
// extra imaginary central elements E*, and the generator catalog with the
// single null-part relation P_Z.

#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "twaff/laurent.hpp"
#include "twaff/pbw.hpp"
#include "twaff/roots.hpp"

namespace twaff {

// Multiplicity of eps in det H^r. Two sources are kept side by side: the
// product [r]_q^{#I^r} * F evaluated by cyclotomic division (authoritative),
// and the closed-form case table. They disagree when l | r and k does not
// divide r outside A_2n^(2): the table gives #I_0 there, the product #I^r.
struct DetHrData {
    int r = 1;
    int l = 3;
    int slot_count = 0;  // #I^r
    LaurentPoly product;
    int table_mult = 0;
    int formula_mult = 0;
    bool discrepancy = false;
};

namespace detail {

// c with J'' = {r odd, l !| r, l | c r}; nullopt where J'' is empty.
inline std::optional<int> star_factor(const TwistedType& t) {
    switch (t.family) {
    case Family::A2n_2: return 2 * t.n + 1;
    case Family::A2nm1_2:
    case Family::E6_2: return t.n_tilde - t.n + 1;
    default: return std::nullopt;
    }
}

inline int star_index(const TwistedType& t) { return t.family == Family::E6_2 ? 2 : t.n; }

} // namespace detail

inline bool is_star_degree(const TwistedType& t, int r, int l) {
    const auto c = detail::star_factor(t);
    return c && r >= 1 && r % 2 == 1 && r % l != 0 && (static_cast<long long>(*c) * r) % l == 0;
}

inline DetHrData det_hr(const TwistedType& t, int r, int l) {
    require_admissible(t, l);
    if (r < 1) throw Error(ErrorKind::Domain, "det H^r needs r >= 1");
    DetHrData out;
    out.r = r;
    out.l = l;
    out.slot_count = imaginary_multiplicity(t, r);

    LaurentPoly factor(1L);
    if (t.family == Family::A2n_2) {
        if (r % 2 == 1) factor = qint(2 * t.n + 1, r);
    } else if (r % t.k != 0) {
        factor = qint(t.short_slot_count() + 1, r);
    }
    out.product = qint(r, 1).pow(static_cast<unsigned>(out.slot_count)) * factor;
    out.formula_mult = mult_eps(out.product, l);

    if (r % l == 0)
        out.table_mult = t.n;
    else if (is_star_degree(t, r, l))
        out.table_mult = 1;
    else
        out.table_mult = 0;
    out.discrepancy = out.table_mult != out.formula_mult;
    return out;
}

struct StarDegree {
    int r = 1;
    int i_star = 1;

    friend bool operator==(const StarDegree&, const StarDegree&) = default;
};

// An imaginary slot (l s delta, i) of J' with i in I_0; in_root_system is false
// when i is not in I^{l s}, i.e. the slot does not exist among the positive
// roots with multiplicity.
struct PrimeSlot {
    int r = 1;  // the full degree l*s
    int slot = 1;
    bool in_root_system = true;
};

struct JSet {
    int l = 3;
    int r_max = 1;
    // Real part of J' is every positive real root with f = l_alpha.
    std::vector<PrimeSlot> prime_imaginary;
    std::vector<StarDegree> double_prime;
};

inline JSet jsets(const TwistedType& t, int l, int r_max) {
    require_admissible(t, l);
    if (r_max < 1) throw Error(ErrorKind::Domain, "r_max must be >= 1");
    JSet j;
    j.l = l;
    j.r_max = r_max;
    for (int r = l; r <= r_max; r += l) {
        const auto slots = imaginary_slots(t, r);
        for (int i = 1; i <= t.n; ++i)
            j.prime_imaginary.push_back({r, i, std::find(slots.begin(), slots.end(), i) != slots.end()});
    }
    for (int r = 1; r <= r_max; ++r)
        if (is_star_degree(t, r, l)) j.double_prime.push_back({r, detail::star_index(t)});
    return j;
}

struct StarElement {
    int r = 1;
    int l = 3;
    int i_star = 1;
    std::map<int, LaurentPoly> coeffs;  // keyed by i in I^r
};

inline StarElement star_coeffs(const TwistedType& t, int r, int l) {
    require_admissible(t, l);
    if (!is_star_degree(t, r, l))
        throw Error(ErrorKind::NotAStarDegree, "r = " + std::to_string(r) + " is not in J'' for " + type_name(t) +
                                                   " at l = " + std::to_string(l));
    StarElement s;
    s.r = r;
    s.l = l;
    s.i_star = detail::star_index(t);
    const LaurentPoly sign(r % 2 == 0 ? 1L : -1L);
    if (t.family == Family::A2n_2) {
        s.coeffs[1] = qint(t.n, 2 * r);
        for (int i = 2; i <= t.n; ++i) s.coeffs[i] = -sign * qint(2, 1) * qint(t.n - i + 1, r);
    } else {
        const int nu = s.i_star;
        for (int i : imaginary_slots(t, r)) s.coeffs[i] = sign * qint(nu - i + 1, r);
    }
    if (!s.coeffs.contains(s.i_star) || eval_at_eps(s.coeffs.at(s.i_star), l).is_zero())
        throw Error(ErrorKind::InternalInconsistency, "E* coefficient at i_* vanishes at eps");
    return s;
}

namespace detail {

// sum_{m > 0} table(eta - m w)
inline Count ray_sum(const PartitionTable& table, const LatticeVector& eta, const LatticeVector& w) {
    Count s = 0;
    LatticeVector rest = eta - w;
    while (rest.nonnegative()) {
        s = checked_add(s, table(rest));
        rest -= w;
    }
    return s;
}

} // namespace detail

// Multiplicity of eps in the highest coefficient of det H_eta:
//   sum_{alpha real, m>0} par(eta - m alpha) mult_eps([m]_{q^{d_alpha}})
//   + sum_{r, m > 0} mult_eps(det H^r) par(eta - m r delta)
inline Count highest_coeff_mult(const RootCatalog& catalog, const LatticeVector& eta, int l,
                                const PbwLimits& limits = {}) {
    const auto& t = catalog.type();
    require_admissible(t, l);
    const PartitionTable table = par_table(catalog, eta, limits);
    std::map<std::pair<int, int>, int> qint_mult;
    Count total = 0;
    for (const auto& root : catalog.reals()) {
        if (!root.v.leq(eta)) continue;
        LatticeVector rest = eta - root.v;
        for (int m = 1; rest.nonnegative(); ++m, rest -= root.v) {
            const Count p = table(rest);
            if (p == 0) continue;
            auto key = std::make_pair(m, root.d_alpha);
            auto it = qint_mult.find(key);
            if (it == qint_mult.end()) it = qint_mult.emplace(key, mult_eps(qint(m, root.d_alpha), l)).first;
            total = detail::checked_add(total, detail::checked_mul(p, static_cast<Count>(it->second)));
        }
    }
    const LatticeVector delta = delta_vector(t);
    for (int r = 1; (r * delta).leq(eta); ++r) {
        const int fm = det_hr(t, r, l).formula_mult;
        if (fm == 0) continue;
        total = detail::checked_add(total, detail::checked_mul(static_cast<Count>(fm),
                                                                detail::ray_sum(table, eta, r * delta)));
    }
    return total;
}

// sum_{alpha in J, m > 0} par(eta - m f(alpha) p(alpha)) with J = J' u J''.
// J' imaginary slots are counted over all of I_0.
inline Count ziz_bound(const RootCatalog& catalog, const LatticeVector& eta, int l, const PbwLimits& limits = {}) {
    const auto& t = catalog.type();
    require_admissible(t, l);
    const PartitionTable table = par_table(catalog, eta, limits);
    Count total = 0;
    for (const auto& root : catalog.reals()) {
        const LatticeVector w = static_cast<std::int64_t>(l_alpha(root, l)) * root.v;
        if (w.leq(eta)) total = detail::checked_add(total, detail::ray_sum(table, eta, w));
    }
    const LatticeVector delta = delta_vector(t);
    for (int r = l; (r * delta).leq(eta); r += l)
        total = detail::checked_add(total, detail::checked_mul(static_cast<Count>(t.n),
                                                                detail::ray_sum(table, eta, r * delta)));
    for (int r = 1; (r * delta).leq(eta); ++r)
        if (is_star_degree(t, r, l)) total = detail::checked_add(total, detail::ray_sum(table, eta, r * delta));
    return total;
}

// Side-by-side comparison at one weight. A gap is explained when it equals
// sum_r (formula_mult - table_mult)(r) * sum_m par(eta - m r delta) over the
// flagged degrees r, which is exactly the tension recorded by det_hr.
struct AgreementReport {
    Count highest = 0;
    Count bound = 0;
    std::vector<int> flagged_r;
    bool agree = true;
    bool explained = true;
};

inline AgreementReport compare_bounds(const RootCatalog& catalog, const LatticeVector& eta, int l,
                                      const PbwLimits& limits = {}) {
    AgreementReport rep;
    rep.highest = highest_coeff_mult(catalog, eta, l, limits);
    rep.bound = ziz_bound(catalog, eta, l, limits);
    rep.agree = rep.highest == rep.bound;

    const auto& t = catalog.type();
    const PartitionTable table = par_table(catalog, eta, limits);
    const LatticeVector delta = delta_vector(t);
    BigInt predicted_gap = 0;
    for (int r = 1; (r * delta).leq(eta); ++r) {
        const DetHrData dh = det_hr(t, r, l);
        if (!dh.discrepancy) continue;
        rep.flagged_r.push_back(r);
        predicted_gap += BigInt(dh.formula_mult - dh.table_mult) * BigInt(detail::ray_sum(table, eta, r * delta));
    }
    rep.explained = BigInt(rep.highest) - BigInt(rep.bound) == predicted_gap;
    return rep;
}

enum class GeneratorTag { RealPower, ImaginarySlot, Star, NegRealPower, NegImaginarySlot, NegStar, KPower, KDelta };

inline std::string to_string(GeneratorTag tag) {
    switch (tag) {
    case GeneratorTag::RealPower: return "RealPower";
    case GeneratorTag::ImaginarySlot: return "ImaginarySlot";
    case GeneratorTag::Star: return "Star";
    case GeneratorTag::NegRealPower: return "NegRealPower";
    case GeneratorTag::NegImaginarySlot: return "NegImaginarySlot";
    case GeneratorTag::NegStar: return "NegStar";
    case GeneratorTag::KPower: return "KPower";
    case GeneratorTag::KDelta: return "KDelta";
    }
    return "?";
}

struct CentralGenerator {
    GeneratorTag tag = GeneratorTag::KDelta;
    LatticeVector weight;
    std::optional<LatticeVector> root;  // RealPower: alpha
    int power = 0;                      // RealPower: l_alpha; KPower: l_i
    int r = 0;                          // ImaginarySlot: l*s; Star: r
    int index = 0;                      // ImaginarySlot slot, Star i_*, KPower i
    std::optional<StarElement> star;
};

// K_delta^l = prod_i (K_i^{l_i})^{l r_i / l_i}
struct PZRelation {
    int l = 3;
    std::vector<int> l_i;
    std::vector<int> exponents;
    std::string statement;
};

inline PZRelation pz_relation(const TwistedType& t, int l) {
    require_admissible(t, l);
    PZRelation pz;
    pz.l = l;
    std::ostringstream os;
    os << "K_delta^" << l << " - ";
    for (int i = 0; i < t.size(); ++i) {
        const int li = l_alpha(t.d[static_cast<std::size_t>(i)], l);
        const long long num = static_cast<long long>(l) * t.delta[static_cast<std::size_t>(i)];
        if (num % li != 0) throw Error(ErrorKind::InternalInconsistency, "P_Z exponent is not an integer");
        pz.l_i.push_back(li);
        pz.exponents.push_back(static_cast<int>(num / li));
        os << (i ? " " : "") << "(K_" << i << "^" << li << ")^" << pz.exponents.back();
    }
    pz.statement = os.str();
    return pz;
}

struct SlotDivergence {
    int l = 3;
    int r = 1;  // degree l*s of the J' slot
    int slot = 1;
};

struct CenterCatalog {
    std::string type;
    int l = 3;
    int cutoff = 0;
    std::vector<CentralGenerator> generators;
    PZRelation pz;
    std::vector<SlotDivergence> divergences;
};

inline CenterCatalog center_generators(const TwistedType& t, int l, int cutoff, const RootLimits& limits = {}) {
    require_admissible(t, l);
    const RootCatalog catalog = real_roots_upto(t, cutoff, limits);
    const LatticeVector delta = delta_vector(t);
    CenterCatalog c;
    c.type = type_name(t);
    c.l = l;
    c.cutoff = cutoff;

    std::vector<CentralGenerator> positive;
    for (const auto& root : catalog.reals()) {
        const int la = l_alpha(root, l);
        if (static_cast<long long>(la) * root.v.delta_degree() > cutoff) continue;
        CentralGenerator g;
        g.tag = GeneratorTag::RealPower;
        g.weight = static_cast<std::int64_t>(la) * root.v;
        g.root = root.v;
        g.power = la;
        positive.push_back(std::move(g));
    }
    for (int r = l; r <= cutoff; r += l) {
        const auto slots = imaginary_slots(t, r);
        for (int i = 1; i <= t.n; ++i) {
            if (std::find(slots.begin(), slots.end(), i) == slots.end()) {
                c.divergences.push_back({l, r, i});
                continue;
            }
            CentralGenerator g;
            g.tag = GeneratorTag::ImaginarySlot;
            g.weight = r * delta;
            g.r = r;
            g.index = i;
            positive.push_back(std::move(g));
        }
    }
    for (int r = 1; r <= cutoff; ++r) {
        if (!is_star_degree(t, r, l)) continue;
        CentralGenerator g;
        g.tag = GeneratorTag::Star;
        g.weight = r * delta;
        g.r = r;
        g.star = star_coeffs(t, r, l);
        g.index = g.star->i_star;
        positive.push_back(std::move(g));
    }

    c.generators = positive;
    for (const auto& g : positive) {
        CentralGenerator neg = g;
        neg.weight = -g.weight;
        neg.tag = g.tag == GeneratorTag::RealPower       ? GeneratorTag::NegRealPower
                  : g.tag == GeneratorTag::ImaginarySlot ? GeneratorTag::NegImaginarySlot
                                                         : GeneratorTag::NegStar;
        c.generators.push_back(std::move(neg));
    }
    for (int i = 0; i < t.size(); ++i) {
        CentralGenerator g;
        g.tag = GeneratorTag::KPower;
        g.weight = LatticeVector(t.size());
        g.index = i;
        g.power = l_alpha(t.d[static_cast<std::size_t>(i)], l);
        c.generators.push_back(std::move(g));
    }
    CentralGenerator kd;
    kd.tag = GeneratorTag::KDelta;
    kd.weight = LatticeVector(t.size());
    c.generators.push_back(std::move(kd));
    c.pz = pz_relation(t, l);
    return c;
}

// Number of monomials of weight eta in the positive-part generators:
// E_alpha^{l_alpha}, E_{(l s delta, i)} for i in I_0, and E*_r for r in J''.
inline Count graded_center_dim(const RootCatalog& catalog, const LatticeVector& eta, int l,
                               const PbwLimits& limits = {}) {
    const auto& t = catalog.type();
    require_admissible(t, l);
    detail::require_weight(catalog, eta, limits);
    std::vector<LatticeVector> letters;
    for (const auto& root : catalog.reals()) {
        LatticeVector w = static_cast<std::int64_t>(l_alpha(root, l)) * root.v;
        if (w.leq(eta)) letters.push_back(std::move(w));
    }
    const LatticeVector delta = delta_vector(t);
    for (int r = l; (r * delta).leq(eta); r += l)
        for (int i = 1; i <= t.n; ++i) letters.push_back(r * delta);
    for (int r = 1; (r * delta).leq(eta); ++r)
        if (is_star_degree(t, r, l)) letters.push_back(r * delta);
    return PartitionTable(letters, eta, limits)(eta);
}

} // namespace twaff
