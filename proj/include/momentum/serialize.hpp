#pragma once

// JSON encoding. Rationals are strings "p/q" or "p"; vectors are arrays of
// such strings; every list is emitted in canonical (sorted) order.

#include "momentum/momentum.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace momentum {

using json = nlohmann::json;

// Malformed request data (missing field, wrong JSON type, bad literal).
struct RequestError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline json to_json(const Rational& q) { return to_string(q); }

inline json to_json(const QVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

inline json to_json(const std::vector<QVec>& vs) {
    json a = json::array();
    for (const auto& v : vs) a.push_back(to_json(v));
    return a;
}

inline Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const DomainError& e) {
            throw RequestError(e.what());
        }
    }
    throw RequestError("expected a rational (integer or \"p/q\" string), got " + j.dump());
}

inline QVec qvec_from_json(const json& j) {
    if (!j.is_array()) throw RequestError("expected an array of rationals, got " + j.dump());
    QVec v(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) v[i] = rational_from_json(j[i]);
    return v;
}

inline std::vector<QVec> qvecs_from_json(const json& j) {
    if (!j.is_array()) throw RequestError("expected an array of vectors, got " + j.dump());
    std::vector<QVec> out;
    for (const auto& e : j) out.push_back(qvec_from_json(e));
    return out;
}

inline json to_json(const Polyhedron& p0) {
    Polyhedron p = p0.canonical();
    json j;
    j["dim"] = p.dim();
    j["empty"] = p.is_empty();
    j["points"] = to_json(p.points());
    std::vector<QVec> rays = all_rays(p);
    std::sort(rays.begin(), rays.end());
    j["rays"] = to_json(rays);
    json hs = json::array();
    for (const auto& h : p.halfspaces()) hs.push_back(json{{"normal", to_json(h.normal)}, {"offset", to_string(h.offset)}});
    j["halfspaces"] = hs;
    return j;
}

// Accepts either description; generators win when both are present.
inline Polyhedron polyhedron_from_json(const json& j, std::optional<std::size_t> dim_hint = std::nullopt) {
    if (!j.is_object()) throw RequestError("polyhedron must be a JSON object");
    std::optional<std::size_t> dim = dim_hint;
    if (j.contains("dim")) dim = j.at("dim").get<std::size_t>();
    auto field = [&](const char* key) { return j.contains(key) ? qvecs_from_json(j.at(key)) : std::vector<QVec>{}; };
    auto points = field("points");
    auto rays = field("rays");
    auto lines = field("lines");
    if (!points.empty()) {
        std::size_t d = points.front().size();
        if (dim && *dim != d) throw ShapeError("polyhedron dim disagrees with its points");
        return Polyhedron::from_generators(d, points, rays, lines).canonical();
    }
    if (j.contains("halfspaces")) {
        std::vector<Halfspace> hs;
        for (const auto& h : j.at("halfspaces")) {
            if (!h.contains("normal") || !h.contains("offset")) throw RequestError("halfspace needs normal and offset");
            hs.push_back(Halfspace{qvec_from_json(h.at("normal")), rational_from_json(h.at("offset"))});
        }
        if (!dim) {
            if (hs.empty()) throw RequestError("polyhedron without points or halfspaces needs \"dim\"");
            dim = hs.front().normal.size();
        }
        return Polyhedron::from_halfspaces(*dim, std::move(hs)).canonical();
    }
    if (!dim) throw RequestError("polyhedron needs points, halfspaces or dim");
    if (j.value("empty", false)) return Polyhedron::empty(*dim);
    return Polyhedron::universe(*dim);
}

inline json to_json(const BoundedAnswer& a) {
    json j;
    j["exact"] = a.exact ? to_json(*a.exact) : json(nullptr);
    j["lower"] = to_json(a.lower);
    j["upper"] = to_json(a.upper);
    j["certificate"] = a.certificate;
    return j;
}

inline json to_json(const WeightSystem& ws) {
    json a = json::array();
    for (const auto& [nu, m] : ws.entries()) a.push_back(json{{"weight", to_json(nu)}, {"mult", m}});
    return a;
}

}  // namespace momentum
