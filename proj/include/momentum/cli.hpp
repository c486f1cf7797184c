#pragma once

// Request dispatch for the command-line front end.
//
// A request is {"command": ..., "group": "A2", "payload": {...}}. The response
// is a JSON object. render, and projective on rank-two groups, also produce
// an SVG document.

#include "momentum/momentum.hpp"
#include "momentum/serialize.hpp"
#include "momentum/svg.hpp"

#include <map>
#include <optional>
#include <string>

namespace momentum::cli {

enum class ExitCode : int { ok = 0, parse_error = 2, domain_error = 3, unsupported = 4 };

struct Response {
    json body;
    std::optional<std::string> svg;
};

namespace detail {

inline const json& need(const json& obj, const char* key) {
    if (!obj.is_object() || !obj.contains(key)) throw RequestError(std::string("missing field \"") + key + "\"");
    return obj.at(key);
}

inline LocalConeSpec local_spec_from_json(const std::shared_ptr<const RootSystem>& rs, const json& j) {
    LocalConeSpec s;
    s.rs = rs;
    s.mu = qvec_from_json(need(j, "mu"));
    s.slice_weights = j.contains("slice_weights") ? qvecs_from_json(j.at("slice_weights")) : std::vector<QVec>{};
    s.isotropy_subtorus = j.contains("isotropy") ? qvecs_from_json(j.at("isotropy")) : std::vector<QVec>{};
    const json& c = need(j, "case");
    if (!c.is_string()) throw RequestError("\"case\" must be a string");
    s.case_tag = parse_isotropy_case(c.get<std::string>());
    return s;
}

inline std::vector<QVec> hw_from_payload(const json& payload) {
    auto hw = qvecs_from_json(need(payload, "hw"));
    if (hw.empty()) throw DomainError("\"hw\" must list at least one highest weight");
    return hw;
}

}  // namespace detail

inline Response run(const json& request) {
    if (!request.is_object()) throw RequestError("request must be a JSON object");
    const json& cmdj = detail::need(request, "command");
    const json& groupj = detail::need(request, "group");
    if (!cmdj.is_string() || !groupj.is_string()) throw RequestError("\"command\" and \"group\" must be strings");
    const std::string cmd = cmdj.get<std::string>();
    const json payload = request.value("payload", json::object());
    if (!payload.is_object()) throw RequestError("\"payload\" must be an object");

    GroupSpec gspec;
    try {
        gspec = parse_group(groupj.get<std::string>());
    } catch (const DomainError& e) {
        throw RequestError(e.what());
    }
    auto rs = std::make_shared<const RootSystem>(gspec);
    Response out;
    json& body = out.body;
    body["command"] = cmd;
    body["group"] = to_string(rs->spec());

    if (cmd == "roots") {
        json cartan = json::array();
        for (const auto& r : rs->cartan().row_list()) cartan.push_back(to_json(r));
        body["cartan"] = cartan;
        body["simple_roots"] = to_json(rs->simple_roots());
        std::vector<QVec> pos;
        for (const auto& a : rs->positive_roots()) pos.push_back(a.weight);
        std::sort(pos.begin(), pos.end());
        body["positive_roots"] = to_json(pos);
        body["dominant_roots"] = rs->semisimple_rank() ? to_json(rs->dominant_roots()) : json::array();
        body["rank"] = rs->dim();
        body["semisimple_rank"] = rs->semisimple_rank();
    } else if (cmd == "irrep") {
        QVec l = qvec_from_json(detail::need(payload, "hw"));
        auto ws = irrep_weights(rs, l);
        body["weights"] = to_json(ws);
        body["dim"] = weyl_dimension(*rs, l).get_str();
        auto pi = pi_lambda(*rs, l);
        body["pi_lambda"] = to_json(std::vector<QVec>(pi.begin(), pi.end()));
    } else if (cmd == "orbit") {
        QVec w = qvec_from_json(detail::need(payload, "weight"));
        auto orbit = rs->weyl_orbit(w);
        body["orbit"] = to_json(std::vector<QVec>(orbit.begin(), orbit.end()));
        auto [dom, word] = rs->dominantize(w);
        body["dominant"] = to_json(dom);
        body["word"] = word.letters;
        body["star"] = to_json(rs->star(dom));
    } else if (cmd == "projective") {
        if (payload.contains("weights")) {
            body["polytope"] = to_json(projective_polytope_torus(*rs, qvecs_from_json(payload.at("weights"))));
        } else {
            auto hw = detail::hw_from_payload(payload);
            auto ans = momentum_polytope_projective(*rs, hw);
            body["answer"] = to_json(ans);
            if (rs->semisimple_rank() == 2 && rs->dim() == 2) out.svg = render(*rs, ans.exact ? *ans.exact : ans.upper, hw);
        }
    } else if (cmd == "linear-cone") {
        Polyhedron c = linear_cone_torus(*rs, qvecs_from_json(detail::need(payload, "weights")));
        body["cone"] = to_json(c);
        body["proper"] = is_proper(c);
    } else if (cmd == "affine-cone") {
        Polyhedron c = affine_cone_from_hw(*rs, qvecs_from_json(detail::need(payload, "generators")));
        body["cone"] = to_json(c);
        body["star_invariant"] = star_invariance_check(*rs, c);
    } else if (cmd == "local-cone") {
        auto spec = detail::local_spec_from_json(rs, payload);
        body["cone"] = to_json(local_cone(spec));
        body["vertex_condition"] = vertex_condition(spec);
    } else if (cmd == "assemble") {
        const json& specs = detail::need(payload, "specs");
        if (!specs.is_array()) throw RequestError("\"specs\" must be an array");
        std::vector<LocalConeSpec> list;
        for (const auto& s : specs) list.push_back(detail::local_spec_from_json(rs, s));
        body["polytope"] = to_json(assemble_polytope(list));
    } else if (cmd == "reduce") {
        Polyhedron p = polyhedron_from_json(detail::need(payload, "polytope"), rs->dim());
        QVec mu = payload.contains("mu") ? qvec_from_json(payload.at("mu")) : QVec(rs->dim());
        auto basis = qvecs_from_json(detail::need(payload, "basis"));
        body["polytope"] = to_json(reduce(*rs, p, mu, basis));
    } else if (cmd == "cotangent") {
        auto wall = payload.contains("wall") ? qvecs_from_json(payload.at("wall")) : std::vector<QVec>{};
        auto ans = cotangent_homogeneous(*rs, wall);
        body["answer"] = to_json(ans);
        if (ans.exact) body["star_invariant"] = star_invariance_check(*rs, *ans.exact);
    } else if (cmd == "closure") {
        Polyhedron p = polyhedron_from_json(detail::need(payload, "polytope"), rs->dim());
        body["closure"] = to_json(projective_closure_polytope(*rs, p));
        body["cone"] = to_json(recover_cone(p));
    } else if (cmd == "render") {
        Polyhedron dark;
        std::vector<QVec> hw;
        if (payload.contains("polytope")) {
            dark = polyhedron_from_json(payload.at("polytope"), rs->dim());
            if (payload.contains("hw")) hw = detail::hw_from_payload(payload);
        } else {
            hw = detail::hw_from_payload(payload);
            auto ans = momentum_polytope_projective(*rs, hw);
            dark = ans.exact ? *ans.exact : ans.upper;
            body["answer"] = to_json(ans);
        }
        out.svg = render(*rs, dark, hw);
        body["svg"] = *out.svg;
    } else {
        throw RequestError("unknown command '" + cmd + "'");
    }
    return out;
}

// Maps an exception raised by run() to its exit code.
inline ExitCode classify(const std::exception& e) {
    if (dynamic_cast<const RequestError*>(&e) || dynamic_cast<const json::exception*>(&e)) return ExitCode::parse_error;
    if (dynamic_cast<const UnsupportedCase*>(&e)) return ExitCode::unsupported;
    return ExitCode::domain_error;
}

}  // namespace momentum::cli
