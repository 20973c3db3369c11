#pragma once

/**
 * @file cli.hpp
 * @brief Problem files and the JSON documents produced by each command.
 *
 * Every rational is written as a string ("3", "-1/7"). Sets of polynomials
 * and cones are emitted in a canonical order so that identical inputs give
 * byte-identical outputs.
 */

#include "tategb/fan.hpp"
#include "tategb/io.hpp"
#include "tategb/polyhedral.hpp"
#include "tategb/uagb.hpp"

#include "json.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tategb {

/// A malformed or incomplete problem file.
class SchemaError : public ParseError {
public:
    explicit SchemaError(const std::string& what) : ParseError(what, 0) {}
};

struct ProblemFile {
    long prime = 0;
    std::vector<std::string> variables;
    std::vector<std::string> generators;
    std::optional<LogRadii> log_radii;
    std::optional<std::vector<LogRadii>> polyhedron_vertices;
    std::optional<std::vector<Rational>> weight;
    std::optional<Rational> cap;
    std::optional<std::string> tie_break;
    std::optional<std::string> target;  ///< wnf: the polynomial to reduce
};

struct RunOptions {
    std::optional<Rational> cap;
    std::optional<TieBreak> tie;
    unsigned jobs = 1;
    bool emit_certificates = false;
    std::uint64_t seed = 0;
};

namespace detail {

inline Rational json_rational(const nlohmann::json& j, const std::string& field) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw SchemaError("field '" + field + "' must hold rationals written as strings or integers");
}

inline std::vector<Rational> json_vector(const nlohmann::json& j, const std::string& field) {
    if (!j.is_array()) throw SchemaError("field '" + field + "' must be an array");
    std::vector<Rational> out;
    for (const auto& x : j) out.push_back(json_rational(x, field));
    return out;
}

inline nlohmann::json to_json(const std::vector<Rational>& v) {
    auto arr = nlohmann::json::array();
    for (const auto& x : v) arr.push_back(x.to_string());
    return arr;
}

inline nlohmann::json to_json(const std::vector<Polynomial>& fs) {
    auto arr = nlohmann::json::array();
    for (const auto& f : fs) arr.push_back(to_string(f));
    return arr;
}

inline nlohmann::json to_json(const std::vector<Point>& rows) {
    auto arr = nlohmann::json::array();
    for (const auto& r : rows) arr.push_back(to_json(r));
    return arr;
}

inline nlohmann::json cone_json(const GroebnerCone& c, bool certificates) {
    nlohmann::json j;
    j["dimension"] = c.dimension;
    j["equalities"] = to_json(c.equalities);
    j["inequalities"] = to_json(c.inequalities);
    j["sample"] = to_json(c.sample.values());
    j["initial_forms"] = to_json(c.initial_forms);
    j["monomial_free"] = c.monomial_free;
    if (certificates) j["basis"] = to_json(c.basis);
    return j;
}

}  // namespace detail

inline ProblemFile parse_problem(const nlohmann::json& j) {
    if (!j.is_object()) throw SchemaError("problem file must be a JSON object");
    ProblemFile p;
    auto require = [&](const char* key) -> const nlohmann::json& {
        if (!j.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
        return j.at(key);
    };
    const auto& prime = require("prime");
    if (!prime.is_number_integer()) throw SchemaError("field 'prime' must be an integer");
    p.prime = prime.get<long>();
    const auto& vars = require("variables");
    const auto& gens = require("generators");
    if (!vars.is_array() || !gens.is_array()) throw SchemaError("'variables' and 'generators' must be arrays");
    for (const auto& v : vars) {
        if (!v.is_string()) throw SchemaError("variable names must be strings");
        p.variables.push_back(v.get<std::string>());
    }
    for (const auto& g : gens) {
        if (!g.is_string()) throw SchemaError("generators must be expression strings");
        p.generators.push_back(g.get<std::string>());
    }
    const std::size_t n = p.variables.size();
    if (j.contains("log_radii")) {
        p.log_radii = detail::json_vector(j["log_radii"], "log_radii");
        if (p.log_radii->size() != n) throw SchemaError("'log_radii' length differs from the number of variables");
    }
    if (j.contains("polyhedron_vertices")) {
        const auto& vs = j["polyhedron_vertices"];
        if (!vs.is_array()) throw SchemaError("'polyhedron_vertices' must be an array of vectors");
        p.polyhedron_vertices.emplace();
        for (const auto& v : vs) {
            p.polyhedron_vertices->push_back(detail::json_vector(v, "polyhedron_vertices"));
            if (p.polyhedron_vertices->back().size() != n)
                throw SchemaError("a polyhedron vertex has the wrong dimension");
        }
    }
    if (j.contains("weight")) {
        p.weight = detail::json_vector(j["weight"], "weight");
        if (p.weight->size() != n + 1) throw SchemaError("'weight' must have one more entry than 'variables'");
    }
    if (j.contains("cap")) p.cap = detail::json_rational(j["cap"], "cap");
    if (j.contains("tie_break")) {
        if (!j["tie_break"].is_string()) throw SchemaError("'tie_break' must be a string");
        p.tie_break = j["tie_break"].get<std::string>();
    }
    if (j.contains("target")) {
        if (!j["target"].is_string()) throw SchemaError("'target' must be an expression string");
        p.target = j["target"].get<std::string>();
    }
    return p;
}

/// Executes one command. Throws SchemaError/ParseError for malformed input and
/// std::invalid_argument (or other std::exception) for mathematical domain errors.
inline nlohmann::json run(const std::string& command, const ProblemFile& pf, const RunOptions& opts = {}) {
    const ValuedField field(pf.prime);
    const auto ring = Ring::make(pf.variables, field);
    std::vector<Polynomial> F;
    for (const auto& g : pf.generators) F.push_back(parse_polynomial(g, ring));
    TieBreak tie = TieBreak::Grevlex;
    if (pf.tie_break) {
        try {
            tie = parse_tie_break(*pf.tie_break);
        } catch (const std::invalid_argument& e) {
            throw SchemaError(e.what());
        }
    }
    if (opts.tie) tie = *opts.tie;
    const Rational cap = opts.cap ? *opts.cap : (pf.cap ? *pf.cap : Rational(50));

    auto need = [&](bool present, const char* what) {
        if (!present) throw SchemaError("command '" + command + "' needs field '" + what + "'");
    };
    auto nonempty = [&] {
        if (F.empty()) throw SchemaError("command '" + command + "' needs at least one generator");
    };

    nlohmann::json out;
    out["command"] = command;
    out["prime"] = pf.prime;
    out["variables"] = pf.variables;
    out["tie_break"] = to_string(tie);

    if (command == "gb") {
        need(pf.log_radii.has_value(), "log_radii");
        nonempty();
        const auto G = local_gb(F, *pf.log_radii, tie);
        out["log_radii"] = detail::to_json(*pf.log_radii);
        out["generators"] = detail::to_json(G.generators);
        if (opts.emit_certificates) {
            auto lts = nlohmann::json::array();
            for (const auto& t : lt_set(G.generators, G.order)) lts.push_back(to_string(t, *ring));
            out["leading_terms"] = lts;
        }
    } else if (command == "uagb") {
        nonempty();
        const auto trace = uagb_trace(F, field, tie, opts.jobs);
        out["generators"] = detail::to_json(trace.generators);
        if (opts.emit_certificates) {
            out["rounds"] = trace.witnesses.size();
            out["witnesses"] = detail::to_json(trace.witnesses);
        }
    } else if (command == "test-uagb") {
        nonempty();
        const auto rep = test_uagb(F, field, tie, opts.jobs);
        out["verdict"] = rep.verdict;
        out["witness"] = rep.witness ? detail::to_json(*rep.witness) : nlohmann::json(nullptr);
        out["vertex_count"] = rep.vertex_count;
        if (opts.emit_certificates) {
            auto log = nlohmann::json::array();
            for (const auto& c : rep.log)
                log.push_back({{"vertex", detail::to_json(c.vertex)},
                               {"direction", detail::to_json(c.direction)},
                               {"log_radii", detail::to_json(c.radii)},
                               {"passed", c.passed}});
            out["checks"] = log;
        }
    } else if (command == "fan") {
        nonempty();
        const auto cones = groebner_fan(F, tie, opts.seed, opts.jobs);
        auto arr = nlohmann::json::array();
        for (const auto& c : cones) arr.push_back(detail::cone_json(c, opts.emit_certificates));
        out["cone_count"] = cones.size();
        out["cones"] = arr;
        if (pf.weight) {
            const auto at = detail::finish(cone_of(F, WeightVector(*pf.weight), tie));
            out["cone_at_weight"] = detail::cone_json(at, opts.emit_certificates);
        }
    } else if (command == "tropical") {
        nonempty();
        const auto trop = tropical_variety(F, tie, opts.seed, opts.jobs);
        auto arr = nlohmann::json::array();
        for (const auto& c : trop.cones) arr.push_back(detail::cone_json(c, opts.emit_certificates));
        out["maximal_cone_count"] = trop.maximal_cones;
        out["cone_count"] = trop.cones.size();
        out["cones"] = arr;
    } else if (command == "wnf") {
        need(pf.log_radii.has_value(), "log_radii");
        need(pf.polyhedron_vertices.has_value(), "polyhedron_vertices");
        const PolyhedralDomain P(*pf.polyhedron_vertices);
        Polynomial f(ring);
        std::vector<Polynomial> G;
        if (pf.target) {
            f = parse_polynomial(*pf.target, ring);
            G = F;
        } else {
            nonempty();
            f = F.front();
            G.assign(F.begin() + 1, F.end());
        }
        WNFOptions wopts;
        wopts.tie = tie;
        const auto res = mora_wnf(f, G, P, *pf.log_radii, cap, wopts);
        out["log_radii"] = detail::to_json(*pf.log_radii);
        out["target"] = to_string(f);
        out["reducers"] = detail::to_json(G);
        out["remainder"] = to_string(res.remainder);
        out["status"] = to_string(res.status);
        out["cap"] = res.cap.to_string();
        out["steps"] = res.steps;
        if (opts.emit_certificates) {
            out["mu"] = to_string(res.mu);
            out["cofactors"] = detail::to_json(res.cofactors);
            out["pool_size"] = res.pool_size;
            out["monotonicity_violations"] = res.monotonicity_violations;
        }
    } else if (command == "terms-p") {
        need(pf.polyhedron_vertices.has_value(), "polyhedron_vertices");
        nonempty();
        const PolyhedralDomain P(*pf.polyhedron_vertices);
        auto arr = nlohmann::json::array();
        for (const auto& t : terms_p_principal(F.front(), P)) arr.push_back(to_string(t, *ring));
        out["polynomial"] = to_string(F.front());
        out["terms"] = arr;
    } else {
        throw SchemaError("unknown command '" + command + "'");
    }
    return out;
}

}  // namespace tategb
