#pragma once

/**
 * @file record.hpp
 * @brief Structured (JSON) records and plain-text renderings of results.
 *
 * Rationals are written as strings "p/q" and forms as "[d; c0, ..., cd]",
 * both of which parse back exactly. Field order is fixed, so equal inputs
 * give byte-identical records.
 *
 * Needs nlohmann/json; not part of the umbrella header.
 */

#include <sstream>
#include <string>

#include "json.hpp"

#include "binform/binform.hpp"

namespace binform::io {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rat& r) { return r.str(); }
inline Json to_json(const Int& z) { return z.get_str(); }
inline Json to_json(const BinaryForm& f) { return f.str(); }
inline Json to_json(const Mat2& m) {
    return Json::array({Json::array({m.a.str(), m.b.str()}), Json::array({m.c.str(), m.d.str()})});
}
inline Json to_json(const Lattice2& l) { return l.str(); }
inline Json to_json(const Point& p) { return Json::array({p.first, p.second}); }

template <class T>
Json to_json(const std::vector<T>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

inline Json to_json(const Error& e) {
    Json j{{"kind", std::string(kind_name(e.kind()))}, {"message", e.what()}};
    if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
        j["position"] = pe->position();
        j["expected"] = pe->expected();
    }
    return j;
}

inline Json to_json(const AutGroup& g) {
    return {{"label", std::string(label_name(g.label))}, {"order", g.order()}, {"elements", to_json(g.elements)}};
}

inline Json to_json(const IsomSet& s) {
    return {{"source", to_json(s.source)}, {"target", to_json(s.target)}, {"elements", to_json(s.elements)}};
}

inline Json to_json(const ParityProof& p) {
    Json rows = Json::array(), rows_y = Json::array();
    for (const auto& r : p.parity_table)
        rows.push_back({{"m", r.m}, {"n", r.n}, {"even", ParityProof::first_expr(r.which)}});
    for (const auto& r : p.parity_table_y)
        rows_y.push_back({{"m", r.m}, {"n", r.n}, {"even", ParityProof::second_expr(r.which)}});
    return {{"sigma", to_json(p.sigma)}, {"parity_table", rows}, {"parity_table_y", rows_y}};
}

inline Json to_json(const ClassificationReport& r) {
    Json j{{"form", to_json(r.form)}, {"verdict", std::string(verdict_name(r.verdict))}};
    j["witness"] = r.witness ? Json{{"sigma", to_json(r.witness->sigma)},
                                    {"pattern", std::string(pattern_name(r.witness->pattern))}}
                             : Json(nullptr);
    j["aut_label"] = std::string(label_name(r.aut_label));
    j["companion"] = r.companion ? to_json(*r.companion) : Json(nullptr);
    j["proof"] = r.proof ? to_json(*r.proof) : Json(nullptr);
    j["notes"] = r.notes;
    return j;
}

inline Json to_json(const Companion& c) {
    return {{"companion", to_json(c.form)},     {"representative", to_json(c.representative)},
            {"transform", to_json(c.transform)}, {"disc_ratio", to_json(c.disc_ratio)},
            {"proof", to_json(c.proof)},         {"cert_inequiv", c.cert_inequiv}};
}

inline Json to_json(const ValueClass& v) {
    Json j{{"kind", v.is_pair() ? "pair" : "single"}, {"classes", to_json(v.classes)}};
    j["transform"] = v.transform ? to_json(*v.transform) : Json(nullptr);
    return j;
}

inline Json to_json(const ReductionResult& r) {
    return {{"G1", to_json(r.G1)},
            {"G2", to_json(r.G2)},
            {"P", to_json(r.P)},
            {"Qinv", to_json(r.Qinv)},
            {"D", to_json(r.D)},
            {"nu", to_json(r.nu)},
            {"rho", to_json(r.rho)},
            {"swapped", r.swapped},
            {"index", to_json(r.index)},
            {"theorem_case", r.theorem_case},
            {"case_flag", r.case_flag}};
}

inline Json to_json(const CoveringResult& c) {
    Json j{{"covers", c.covers}, {"modulus", to_json(c.modulus)}};
    j["witness"] = c.witness ? Json::array({to_json(c.witness->first), to_json(c.witness->second)}) : Json(nullptr);
    return j;
}

inline Json to_json(const CoveringReport& r) {
    Json fams = Json::array();
    for (const auto& f : r.families)
        fams.push_back({{"family", f.name}, {"lattices", to_json(f.lattices)}, {"result", to_json(f.result)}});
    return {{"all_cover", r.all_cover()}, {"families", fams}};
}

inline Json to_json(const ValueTable& t) {
    Json vals = Json::array();
    for (const auto& [v, e] : t.entries)
        vals.push_back({{"value", to_json(v)}, {"count", e.count}, {"reps", to_json(e.reps)}});
    return {{"form", to_json(t.form)}, {"box", t.box}, {"zero_count", t.zero_count}, {"values", vals}};
}

inline Json to_json(const EssentialReport& r) {
    Json j{{"answer", std::string(essential_name(r.answer))}, {"reps", to_json(r.reps)}};
    j["separated"] = r.separated ? Json::array({to_json(r.separated->first), to_json(r.separated->second)})
                                 : Json(nullptr);
    return j;
}

inline Json to_json(const GrowthReport& r) {
    Json rows = Json::array();
    for (const auto& row : r.rows) rows.push_back({{"X", to_json(row.X)}, {"N", row.count}});
    return {{"box", r.box},           {"eta", r.eta},
            {"rows", rows},           {"slope_last", r.slope_last},
            {"slope_fit", r.slope_fit}, {"threshold", r.threshold},
            {"passes", r.passes},     {"note", "box counts are lower bounds for N(F, X)"}};
}

// Text renderings.

inline std::string to_text(const Mat2& m) { return m.str(); }

inline std::string to_text(const AutGroup& g) {
    std::ostringstream os;
    os << "label: " << label_name(g.label) << "\norder: " << g.order() << "\n";
    for (const auto& e : g.elements) os << "  " << e.str() << "\n";
    return os.str();
}

inline std::string to_text(const ParityProof& p) {
    std::ostringstream os;
    os << "parity proof for sigma = " << p.sigma.str() << "\n";
    for (std::size_t i = 0; i < 4; ++i) {
        const auto& r = p.parity_table[i];
        os << "  (" << r.m << "," << r.n << ") mod 2: " << ParityProof::first_expr(r.which) << " even; "
           << ParityProof::second_expr(p.parity_table_y[i].which) << " even\n";
    }
    return os.str();
}

inline std::string to_text(const ClassificationReport& r) {
    std::ostringstream os;
    os << "form: " << r.form.str() << "\nverdict: " << verdict_name(r.verdict)
       << "\naut label: " << label_name(r.aut_label) << "\n";
    if (r.witness)
        os << "witness: " << r.witness->sigma.str() << " (pattern " << pattern_name(r.witness->pattern) << ")\n";
    if (r.companion) os << "companion: " << r.companion->str() << "\n";
    for (const auto& n : r.notes) os << "note: " << n << "\n";
    return os.str();
}

inline std::string to_text(const Companion& c) {
    std::ostringstream os;
    os << "companion: " << c.form.str() << "\nrepresentative: " << c.representative.str()
       << "\ntransform: " << c.transform.str() << "\ndisc ratio: " << c.disc_ratio.str()
       << "\ncertificate: " << c.cert_inequiv << "\n"
       << to_text(c.proof);
    return os.str();
}

inline std::string to_text(const ValueClass& v) {
    std::ostringstream os;
    os << (v.is_pair() ? "pair" : "single") << "\n";
    for (const auto& f : v.classes) os << "  " << f.str() << "\n";
    return os.str();
}

inline std::string to_text(const ReductionResult& r) {
    std::ostringstream os;
    os << "G1: " << r.G1.str() << "\nG2: " << r.G2.str() << "\nP: " << r.P.str() << "\nQinv: " << r.Qinv.str()
       << "\nD: " << r.D.get_str() << "\nnu: " << r.nu.get_str() << "\nrho: " << r.rho.str()
       << (r.swapped ? " (inputs swapped)" : "") << "\nindex: " << r.index.get_str()
       << "\ntheorem case: " << (r.theorem_case ? "yes" : "no") << "\nintegral order-3 side: " << r.case_flag
       << "\n";
    return os.str();
}

inline std::string to_text(const CoveringResult& c) {
    std::ostringstream os;
    os << "covering: " << (c.covers ? "true" : "false") << "\nmodulus: " << c.modulus.get_str() << "\n";
    if (c.witness) os << "uncovered: (" << c.witness->first.get_str() << "," << c.witness->second.get_str() << ")\n";
    return os.str();
}

inline std::string to_text(const CoveringReport& r) {
    std::ostringstream os;
    for (const auto& f : r.families) {
        os << f.name << ": " << (f.result.covers ? "true" : "false");
        if (f.result.witness)
            os << " (uncovered (" << f.result.witness->first.get_str() << "," << f.result.witness->second.get_str()
               << "))";
        os << "\n";
    }
    return os.str();
}

/// Two-column "value count" stream.
inline std::string to_text(const ValueTable& t) {
    std::ostringstream os;
    for (const auto& [v, e] : t.entries) os << v.str() << " " << e.count << "\n";
    return os.str();
}

inline std::string to_text(const EssentialReport& r) {
    std::ostringstream os;
    os << "essentially represented: " << essential_name(r.answer) << "\n";
    for (const auto& [x, y] : r.reps) os << "  (" << x << "," << y << ")\n";
    return os.str();
}

inline std::string to_text(const GrowthReport& r) {
    std::ostringstream os;
    os << "box: " << r.box << "\n";
    for (const auto& row : r.rows) os << "  N(F, " << row.X.get_str() << ") >= " << row.count << "\n";
    os << "slope (last window): " << r.slope_last << "\nslope (fit): " << r.slope_fit
       << "\nthreshold: " << r.threshold << "\npasses: " << (r.passes ? "true" : "false") << "\n";
    return os.str();
}

} // namespace binform::io
