#pragma once

#include <string>

#include "json.hpp"

#include "hm/classify.hpp"
#include "hm/cyclotomic.hpp"
#include "hm/rational.hpp"
#include "hm/resolution.hpp"
#include "hm/strata.hpp"

namespace hm {

using Json = nlohmann::ordered_json;

inline std::string field_name(const Rational&) { return "Q"; }
inline std::string field_name(const Cyclotomic&) { return "Q(zeta5)"; }

template <class K>
Json scalar_json(const K& v) {
    return to_string(v);
}

template <class K, size_t N>
Json array_json(const std::array<K, N>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(scalar_json(x));
    return out;
}

inline Json pair_json(const ResolutionPair& p, int t_max) {
    Json out;
    out["label"] = p.label();
    out["a"] = p.a;
    out["b"] = p.b;
    out["stable"] = p.stable();
    out["h0"] = p.cohomology_table(t_max);
    return out;
}

template <class K>
Json witness_json(const InPlaneWitness<K>& w) {
    Json out;
    out["dual_point"] = array_json(w.dual_point);
    out["order"] = w.order;
    out["multiplicity"] = w.multiplicity;
    Json cov = Json::array();
    for (const auto& c : w.line.cov) cov.push_back(array_json(c));
    out["line_covectors"] = cov;
    return out;
}

template <class K>
Json stratum_json(const StratumReport<K>& r) {
    Json out;
    out["schema"] = "hm/stratum-report.v1";
    out["field"] = field_name(K(0));
    out["rank_m"] = r.rank_m;
    out["jumping"] = r.jumping;
    out["h0_f1"] = r.h0_twist1;
    Json cands = Json::array();
    for (const auto& c : r.candidates) cands.push_back(c.label());
    out["candidates"] = cands;
    out["status"] = r.unresolved ? "unresolved" : "resolved";
    if (r.resolved)
        out["resolution"] = r.resolved->label();
    else
        out["resolution"] = nullptr;
    if (r.unresolved) out["unresolved_reason"] = r.unresolved_reason;
    if (r.contains_hm_line)
        out["contains_hm_line"] = *r.contains_hm_line;
    else
        out["contains_hm_line"] = nullptr;
    if (r.witness_search_status)
        out["witness_search"] = locus_status_name(*r.witness_search_status);
    else
        out["witness_search"] = nullptr;
    Json ws = Json::array();
    for (const auto& w : r.witness_lines) ws.push_back(witness_json(w));
    out["witness_lines"] = ws;
    return out;
}

template <class K>
Json incidence_json(const IncidenceReport<K>& r) {
    Json out;
    out["schema"] = "hm/incidence.v1";
    out["field"] = field_name(K(0));
    out["kind"] = incidence_kind_name(r.kind);
    if (r.conic) {
        // quadric coefficients in the order m0^2, m0 m1, m0 m2, m1^2, m1 m2, m2^2
        Json q = Json::array();
        q.push_back(scalar_json(r.conic->at(0, 0)));
        q.push_back(scalar_json(r.conic->at(1, 0)));
        q.push_back(scalar_json(r.conic->at(0, 1)));
        q.push_back(scalar_json(r.conic->at(2, 0)));
        q.push_back(scalar_json(r.conic->at(1, 1)));
        q.push_back(scalar_json(r.conic->at(0, 2)));
        out["conic"] = q;
        out["gram_rank"] = r.gram_rank;
    } else {
        out["conic"] = nullptr;
        out["gram_rank"] = nullptr;
    }
    out["count"] = r.count;
    Json pts = Json::array();
    for (const auto& [p, mult] : r.points) {
        Json e;
        e["point"] = array_json(p);
        e["multiplicity"] = mult;
        pts.push_back(e);
    }
    out["points"] = pts;
    if (r.line_coeffs)
        out["line"] = array_json(*r.line_coeffs);
    else
        out["line"] = nullptr;
    if (r.extra_point)
        out["external_point"] = array_json(*r.extra_point);
    else
        out["external_point"] = nullptr;
    if (!r.note.empty()) out["note"] = r.note;
    return out;
}

inline Json pencil_json(const PencilCertificate& c) {
    Json out;
    out["status"] = c.status == PencilStatus::Ok ? "ok" : "degenerate";
    if (c.status == PencilStatus::Ok) {
        out["degree"] = c.degree;
        Json coeffs = Json::array();
        for (int k = 0; k <= c.certificate.degree(); ++k) coeffs.push_back(c.certificate.coeff(k).str());
        out["certificate"] = coeffs;
    } else {
        out["degree"] = nullptr;
        out["certificate"] = nullptr;
    }
    out["minors_used"] = c.minors_used;
    out["zero_minors"] = c.zero_minors;
    return out;
}

} // namespace hm
