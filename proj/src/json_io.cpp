#include "relroots/json_io.hpp"

#include <cstdio>

namespace relroots {

using nlohmann::json;

namespace {

std::string fmt12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

}  // namespace

json json_of(const RatPoly& p) {
    json arr = json::array();
    for (const Rat& c : p.coeffs()) arr.push_back(rat_to_string(c));
    return arr;
}

json json_of(const IsolatedRoot& r) {
    return json{{"lo", rat_to_string(r.lo)},
                {"hi", rat_to_string(r.hi)},
                {"multiplicity", r.multiplicity},
                {"approx", r.approx()}};
}

json json_of(const RootReport& r) {
    json roots = json::array();
    for (const IsolatedRoot& x : r.real_roots) roots.push_back(json_of(x));
    json pairs = json::array();
    for (const auto& z : r.complex_pairs) pairs.push_back(json::array({z.real(), z.imag()}));
    return json{{"real_roots", roots},
                {"n_distinct_real", r.n_distinct_real},
                {"real_rooted", r.real_rooted},
                {"complex_pairs", pairs},
                {"epsilon", rat_to_string(r.epsilon)}};
}

json json_of(const RelRootsReport& r) {
    return json{{"q1_multiplicity", r.q_one_multiplicity},
                {"h", json_of(r.h)},
                {"h_report", json_of(r.h_report)}};
}

json json_of(const RelForms& f) {
    auto ints = [](const std::vector<Int>& v) {
        json arr = json::array();
        for (const Int& x : v) arr.push_back(x.get_str());
        return arr;
    };
    return json{{"n", f.n},       {"m", f.m},       {"d", f.d},       {"rel", json_of(f.rel)},
                {"F", ints(f.F)}, {"H", ints(f.H)}, {"c", ints(f.c)}};
}

json json_of(const Certificate& c) {
    json out{{"n", c.n}, {"m", c.m}, {"d", c.d}, {"verdict", to_string(c.verdict)}};
    out["c1"] = c.c1 ? json(c.c1->get_str()) : json(nullptr);
    out["c2"] = c.c2 ? json(c.c2->get_str()) : json(nullptr);
    out["bound"] = c.bound ? json(rat_to_string(*c.bound)) : json(nullptr);
    out["f2_lead"] = c.f2_lead ? json(rat_to_string(*c.f2_lead)) : json(nullptr);
    return out;
}

json json_of(const GadgetEquation& e) {
    return json{{"n", e.h.n},
                {"m", e.h.m()},
                {"terminals", json::array({e.uv.s, e.uv.t})},
                {"s", rat_to_string(e.s)},
                {"split_rel", json_of(e.split_rel)},
                {"rel", json_of(e.rel)},
                {"poly", json_of(e.poly)}};
}

json json_of(const RootSynthesis& s) {
    json out{{"target", rat_to_string(s.target)},
             {"eps", rat_to_string(s.eps)},
             {"construction", s.construction},
             {"conditional", s.conditional},
             {"verified", s.verified},
             {"root", json_of(s.root)},
             {"achieved_gap", s.achieved_gap},
             {"graph", json{{"n", s.graph.n}, {"m", s.graph.m()}, {"edge_list", to_edge_list(s.graph)}}}};
    if (s.cycle_n > 0) out["cycle_n"] = s.cycle_n;
    if (s.eta > 0) {
        out["eta"] = s.eta;
        out["k"] = s.k;
    }
    if (s.s) out["s"] = rat_to_string(*s.s);
    return out;
}

json json_of(const SurveyRow& r) {
    json out{{"id", r.id},
             {"n", r.n},
             {"m", r.m},
             {"d", r.d},
             {"c1", r.c1.get_str()},
             {"c2", r.c2.get_str()},
             {"verdict", to_string(r.verdict)},
             {"real_rooted", r.real_rooted},
             {"n_distinct_real", r.n_distinct_real}};
    out["min_real_root"] = r.min_real_root ? json(*r.min_real_root) : json(nullptr);
    out["lambda"] = r.lambda ? json(*r.lambda) : json(nullptr);
    return out;
}

json json_of(const RandomSurveySummary& s) {
    return json{{"n", s.n},
                {"rho", s.rho},
                {"trials", s.trials},
                {"seed", s.seed},
                {"connected", s.connected},
                {"discarded_disconnected", s.discarded_disconnected},
                {"certified_nonreal", s.certified_nonreal},
                {"with_nonreal_root", s.with_nonreal_root},
                {"real_rooted", s.real_rooted},
                {"h_minus_one_zero", s.h_minus_one_zero},
                {"frac_certified",
                 s.connected ? static_cast<double>(s.certified_nonreal) / s.connected : 0.0},
                {"frac_nonreal",
                 s.connected ? static_cast<double>(s.with_nonreal_root) / s.connected : 0.0},
                {"frac_real_rooted",
                 s.connected ? static_cast<double>(s.real_rooted) / s.connected : 0.0}};
}

json json_of(const ExhaustiveSurveyResult& r) {
    json hist = json::object();
    for (const auto& [k, v] : r.histogram) hist[std::to_string(k)] = v;
    return json{{"n", r.n},
                {"connected_total", r.connected_total},
                {"histogram", hist},
                {"parity_violations", r.parity_violations},
                {"h_minus_one_zero", r.h_minus_one_zero}};
}

json json_of(const KnTrendResult& r) {
    json rows = json::array();
    for (const KnTrendRow& row : r.rows)
        rows.push_back(json{{"n", row.n}, {"min_real_root", row.approx},
                            {"root", json_of(row.min_root)}});
    return json{{"rows", rows}, {"strictly_decreasing", r.strictly_decreasing}};
}

std::string branch_csv(const std::vector<BranchPoint>& pts) {
    std::string out = "s,q\n";
    for (const BranchPoint& p : pts) {
        out += fmt12(rat_to_double(p.s));
        out += ",";
        out += fmt12(p.q);
        out += "\n";
    }
    return out;
}

std::string kn_trend_csv(const KnTrendResult& r) {
    std::string out = "n,min_real_root\n";
    for (const KnTrendRow& row : r.rows) {
        out += std::to_string(row.n);
        out += ",";
        out += fmt12(row.approx);
        out += "\n";
    }
    return out;
}

}  // namespace relroots
