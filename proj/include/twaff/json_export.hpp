#pragma once

// JSON documents for every computed object. Field names here are the frozen
// output format of the command-line tool (see README).

#include <string>

#include <json.hpp>

#include "twaff/center.hpp"
#include "twaff/laurent.hpp"
#include "twaff/pbw.hpp"
#include "twaff/roots.hpp"

namespace twaff {

using Json = nlohmann::ordered_json;

inline Json coords_json(const LatticeVector& v) { return Json(v.coords()); }

inline Json type_json(const TwistedType& t) {
    Json j;
    j["type"] = type_name(t);
    j["family"] = family_label(t.family);
    j["n"] = t.n;
    j["n_tilde"] = t.n_tilde;
    j["k"] = t.k;
    j["vertices"] = t.size();
    Json edges = Json::array();
    for (const auto& e : t.diagram.edges) {
        Json je;
        je["a"] = e.a;
        je["b"] = e.b;
        je["multiplicity"] = e.multiplicity;
        je["arrow_at"] = e.arrow_at ? Json(*e.arrow_at) : Json(nullptr);
        edges.push_back(je);
    }
    j["edges"] = edges;
    Json m = Json::array();
    for (int i = 0; i < t.size(); ++i) m.push_back(t.cartan.row(i));
    j["cartan"] = m;
    j["d"] = t.d;
    j["r"] = t.delta;
    j["delta"] = format_root(delta_vector(t));
    return j;
}

inline Json real_root_json(const RealRoot& root) {
    Json j;
    j["root"] = format_root(root.v);
    j["coords"] = coords_json(root.v);
    j["ddeg"] = root.v.delta_degree();
    j["d_alpha"] = root.d_alpha;
    return j;
}

inline Json catalog_json(const RootCatalog& c) {
    Json j;
    j["type"] = type_name(c.type());
    j["ddeg"] = c.cutoff();
    j["count"] = c.reals().size();
    Json roots = Json::array();
    for (const auto& r : c.reals()) roots.push_back(real_root_json(r));
    j["roots"] = roots;
    return j;
}

inline Json det_hr_json(const DetHrData& d) {
    Json j;
    j["r"] = d.r;
    j["slots"] = d.slot_count;
    j["product"] = to_string(d.product);
    j["table_mult"] = d.table_mult;
    j["formula_mult"] = d.formula_mult;
    j["discrepancy"] = d.discrepancy;
    return j;
}

inline Json jset_json(const TwistedType& t, const JSet& js) {
    Json j;
    j["type"] = type_name(t);
    j["l"] = js.l;
    j["rmax"] = js.r_max;
    j["j_prime_real"] = "all positive real roots, f = l_alpha";
    Json prime = Json::array();
    for (const auto& p : js.prime_imaginary) {
        Json e;
        e["r"] = p.r;
        e["slot"] = p.slot;
        e["in_root_system"] = p.in_root_system;
        prime.push_back(e);
    }
    j["j_prime_imaginary"] = prime;
    Json dp = Json::array();
    for (const auto& s : js.double_prime) {
        Json e;
        e["r"] = s.r;
        e["i_star"] = s.i_star;
        dp.push_back(e);
    }
    j["j_double_prime"] = dp;
    return j;
}

inline Json star_json(const TwistedType& t, const StarElement& s) {
    Json j;
    j["type"] = type_name(t);
    j["l"] = s.l;
    j["r"] = s.r;
    j["i_star"] = s.i_star;
    Json coeffs;
    for (const auto& [i, c] : s.coeffs) coeffs[std::to_string(i)] = to_string(c);
    j["coeffs"] = coeffs;
    const CycloElement at_eps = eval_at_eps(s.coeffs.at(s.i_star), s.l);
    j["i_star_residue"] = to_string(at_eps.residue());
    j["i_star_nonzero_at_eps"] = !at_eps.is_zero();
    return j;
}

inline Json pz_json(const std::string& type, const PZRelation& pz) {
    Json j;
    j["type"] = type;
    j["l"] = pz.l;
    j["l_i"] = pz.l_i;
    j["exponents"] = pz.exponents;
    j["statement"] = pz.statement;
    return j;
}

inline Json generator_json(const CentralGenerator& g) {
    Json j;
    j["tag"] = to_string(g.tag);
    j["weight"] = coords_json(g.weight);
    Json p = Json::object();
    switch (g.tag) {
    case GeneratorTag::RealPower:
    case GeneratorTag::NegRealPower:
        p["root"] = format_root(*g.root);
        p["l_alpha"] = g.power;
        break;
    case GeneratorTag::ImaginarySlot:
    case GeneratorTag::NegImaginarySlot:
        p["r"] = g.r;
        p["slot"] = g.index;
        break;
    case GeneratorTag::Star:
    case GeneratorTag::NegStar: {
        p["r"] = g.r;
        p["i_star"] = g.index;
        Json coeffs;
        // the mirrored element is the image under q -> q^{-1}
        const bool mirrored = g.tag == GeneratorTag::NegStar;
        for (const auto& [i, c] : g.star->coeffs) coeffs[std::to_string(i)] = to_string(mirrored ? c.bar() : c);
        p["coeffs"] = coeffs;
        break;
    }
    case GeneratorTag::KPower:
        p["i"] = g.index;
        p["l_i"] = g.power;
        break;
    case GeneratorTag::KDelta:
        break;
    }
    j["params"] = p;
    return j;
}

inline Json center_json(const CenterCatalog& c) {
    Json j;
    j["type"] = c.type;
    j["l"] = c.l;
    j["ddeg"] = c.cutoff;
    Json gens = Json::array();
    for (const auto& g : c.generators) gens.push_back(generator_json(g));
    j["generators"] = gens;
    j["pz"] = pz_json(c.type, c.pz);
    Json div = Json::array();
    for (const auto& d : c.divergences) {
        Json e;
        e["l"] = d.l;
        e["r"] = d.r;
        e["slot"] = d.slot;
        div.push_back(e);
    }
    j["slot_divergences"] = div;
    return j;
}

// One line of the discrepancy log.
inline std::string discrepancy_line(const std::string& context, const Json& expected, const Json& got) {
    Json j;
    j["context"] = context;
    j["expected"] = expected;
    j["got"] = got;
    return j.dump();
}

} // namespace twaff
