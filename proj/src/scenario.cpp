#include "crossed_forge/scenario.hpp"
#include <algorithm>

#include "crossed_forge/crossed_elem.hpp"
#include "crossed_forge/ideal.hpp"
#include "crossed_forge/structure.hpp"

#include <chrono>

namespace crossed_forge {

namespace {

[[noreturn]] void schema_error(const std::string& what) {
    throw ParseError("scenario schema: " + what);
}

Ring::Ptr parse_ring_spec(const Json& j) {
    if (!j.is_object() || !j.contains("kind")) schema_error("ring needs a kind");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "modular") return Ring::modular(j.at("n").get<std::int64_t>());
    if (kind == "poly_quotient")
        return Ring::poly_quotient(j.at("p").get<std::int64_t>(),
                                   j.at("modulus").get<std::vector<std::int64_t>>());
    if (kind == "finite_field") {
        if (j.contains("modulus"))
            return Ring::finite_field(j.at("p").get<std::int64_t>(), j.at("degree").get<int>(),
                                      j.at("modulus").get<std::vector<std::int64_t>>());
        return Ring::finite_field(j.at("p").get<std::int64_t>(), j.at("degree").get<int>());
    }
    if (kind == "laurent_rational") return Ring::laurent_rational();
    if (kind == "truncated_multivar") {
        std::string t = j.at("truncation").get<std::string>();
        TruncationKind tk = t == "total_degree" ? TruncationKind::total_degree
                          : t == "var_power"    ? TruncationKind::var_power
                                                : throw ParseError("unknown truncation '" + t + "'");
        return Ring::truncated_multivar(j.at("p").get<std::int64_t>(), j.at("nvars").get<int>(),
                                        tk, j.at("bound").get<int>());
    }
    if (kind == "function_ring")
        return Ring::function_ring(j.at("p").get<std::int64_t>(), j.at("points").get<int>());
    schema_error("unknown ring kind '" + kind + "'");
}

Group::Ptr parse_group_spec(const Json& j) {
    if (!j.is_object() || !j.contains("kind")) schema_error("group needs a kind");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "cyclic") return Group::cyclic(j.at("k").get<std::int64_t>());
    if (kind == "symmetric") return Group::symmetric(j.at("n").get<int>());
    if (kind == "integers") return Group::integers();
    if (kind == "direct_product") {
        std::vector<Group::Ptr> factors;
        for (const auto& f : j.at("factors")) factors.push_back(parse_group_spec(f));
        return Group::direct_product(std::move(factors));
    }
    if (kind == "quotient") {
        Group::Ptr parent = parse_group_spec(j.at("parent"));
        std::vector<GroupElem> sub;
        for (const auto& s : j.at("subgroup")) sub.push_back(parent->parse(s.get<std::string>()));
        return Group::quotient(parent, sub);
    }
    schema_error("unknown group kind '" + kind + "'");
}

CrossedSystem::Ptr resolve_inline_system(const Json& j) {
    Ring::Ptr ring = parse_ring_spec(j.at("ring"));
    Group::Ptr group = parse_group_spec(j.at("group"));

    std::vector<RingAutomorphism> sigma;
    if (j.contains("sigma")) {
        const Json& js = j.at("sigma");
        std::string kind = js.value("kind", "trivial");
        if (kind == "trivial") {
            // defaults below
        } else if (kind == "generator") {
            std::vector<RingElem> images;
            for (const auto& t : js.at("images")) images.push_back(ring->parse(t.get<std::string>()));
            RingAutomorphism gen = RingAutomorphism::from_generator_images(ring, std::move(images));
            if (group->is_finite()) {
                if (group->kind() != GroupKind::cyclic)
                    schema_error("sigma kind 'generator' needs a cyclic or integers group");
                RingAutomorphism acc = RingAutomorphism::identity(ring);
                for (std::int64_t i = 0; i < group->cyclic_order(); ++i) {
                    sigma.push_back(acc);
                    acc = gen.compose(acc);
                }
            } else {
                sigma.push_back(gen);
            }
        } else if (kind == "table") {
            if (!group->is_finite()) schema_error("sigma tables need a finite group");
            sigma.assign(group->order(), RingAutomorphism::identity(ring));
            std::vector<bool> seen(group->order(), false);
            for (const auto& entry : js.at("entries")) {
                GroupElem g = group->parse(entry.at("g").get<std::string>());
                std::vector<RingElem> images;
                for (const auto& t : entry.at("images"))
                    images.push_back(ring->parse(t.get<std::string>()));
                sigma[g.index()] = RingAutomorphism::from_generator_images(ring, std::move(images));
                seen[g.index()] = true;
            }
            for (std::uint64_t i = 0; i < group->order(); ++i)
                if (!seen[i]) schema_error("sigma table misses group element " +
                                           group->to_text(group->at(i)));
        } else {
            schema_error("unknown sigma kind '" + kind + "'");
        }
    }
    if (sigma.empty() && !group->is_finite())
        sigma.push_back(RingAutomorphism::identity(ring));

    std::vector<RingElem> alpha;
    if (j.contains("alpha")) {
        const Json& ja = j.at("alpha");
        std::string kind = ja.value("kind", "trivial");
        if (kind == "table") {
            if (!group->is_finite()) schema_error("alpha tables need a finite group");
            std::uint64_t n = group->order();
            RingElem dflt = ja.contains("default") ? ring->parse(ja.at("default").get<std::string>())
                                                   : ring->one();
            alpha.assign(n * n, dflt);
            for (const auto& entry : ja.at("entries")) {
                GroupElem s = group->parse(entry.at("s").get<std::string>());
                GroupElem t = group->parse(entry.at("t").get<std::string>());
                alpha[s.index() * n + t.index()] = ring->parse(entry.at("value").get<std::string>());
            }
        } else if (kind != "trivial") {
            schema_error("unknown alpha kind '" + kind + "'");
        }
    }
    return CrossedSystem::make_unchecked(std::move(ring), std::move(group), std::move(sigma),
                                         std::move(alpha));
}

CrossedSystem::Ptr resolve_catalog_system(const Json& j) {
    std::string id = j.at("catalog").get<std::string>();
    try {
        if (id == "truncated_quantum_torus")
            return make_truncated_quantum_torus(j.at("p").get<std::int64_t>(),
                                                j.at("q").get<std::int64_t>(), j.at("m").get<int>(),
                                                j.at("k").get<std::int64_t>())
                .system;
        if (id == "truncated_quantum_torus_z")
            return make_truncated_quantum_torus_z(j.at("p").get<std::int64_t>(),
                                                  j.at("q").get<std::int64_t>(), j.at("m").get<int>())
                .system;
        if (id == "rational_quantum_torus") {
            Rational q = j.at("q").is_string() ? parse_rational(j.at("q").get<std::string>())
                                               : Rational(j.at("q").get<std::int64_t>());
            return make_rational_quantum_torus(q).system;
        }
        if (id == "symmetric_action") {
            std::string t = j.value("truncation", "total_degree");
            TruncationKind tk = t == "total_degree" ? TruncationKind::total_degree
                              : t == "var_power"    ? TruncationKind::var_power
                                                    : throw ParseError("unknown truncation '" + t + "'");
            return make_symmetric_action(j.at("p").get<std::int64_t>(), j.at("n").get<int>(), tk,
                                         j.at("bound").get<int>())
                .system;
        }
        if (id == "function_dynamics")
            return make_function_dynamics(j.at("p").get<std::int64_t>(),
                                          j.at("pi").get<std::vector<int>>())
                .system;
        if (id == "group_ring")
            return make_group_ring(parse_ring_spec(j.at("ring")), parse_group_spec(j.at("group")))
                .system;
        if (id == "twisted_group_ring") {
            Ring::Ptr ring = parse_ring_spec(j.at("ring"));
            Group::Ptr group = parse_group_spec(j.at("group"));
            std::uint64_t n = group->order();
            std::vector<RingElem> alpha(n * n, ring->one());
            for (const auto& entry : j.at("alpha")) {
                GroupElem s = group->parse(entry.at("s").get<std::string>());
                GroupElem t = group->parse(entry.at("t").get<std::string>());
                alpha[s.index() * n + t.index()] = ring->parse(entry.at("value").get<std::string>());
            }
            return make_twisted_group_ring(std::move(ring), std::move(group), std::move(alpha))
                .system;
        }
        if (id == "galois_field_action")
            return make_galois_field_action(j.at("p").get<std::int64_t>(), j.at("degree").get<int>())
                .system;
    } catch (const Json::exception& e) {
        throw ParseError("catalog '" + id + "': bad parameters (" + e.what() + ")");
    }
    throw ParseError("unknown catalog name '" + id + "'");
}

} // namespace

Scenario parse_scenario(const std::string& text, const std::string& name) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("scenario is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("system")) schema_error("top level needs a 'system'");

    Scenario s;
    s.name = name;
    s.system_spec = doc.at("system");
    try {
        s.system = s.system_spec.contains("catalog") ? resolve_catalog_system(s.system_spec)
                                                     : resolve_inline_system(s.system_spec);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("system spec: ") + e.what());
    }

    static const std::vector<std::string> known_checks = {
        "verify", "center", "commutant", "maximal", "commutative",
        "ideal", "lift", "descend", "obstruction", "theorem-suite"};
    if (doc.contains("checks")) {
        for (const auto& c : doc.at("checks")) {
            if (!c.is_object() || !c.contains("kind")) schema_error("every check needs a kind");
            CheckSpec spec;
            spec.kind = c.at("kind").get<std::string>();
            if (std::find(known_checks.begin(), known_checks.end(), spec.kind) == known_checks.end())
                schema_error("unknown check kind '" + spec.kind + "'");
            spec.args = c;
            s.checks.push_back(std::move(spec));
        }
    }
    if (doc.contains("output")) {
        const Json& o = doc.at("output");
        s.output.include_timings = o.value("include_timings", false);
        s.output.max_listed_elements = o.value("max_listed_elements", std::size_t{128});
    }
    return s;
}

namespace {

Json elem_list(const std::vector<RingElem>& v, std::size_t cap) {
    Json out = Json::array();
    for (std::size_t i = 0; i < v.size() && i < cap; ++i) out.push_back(v[i].to_text());
    return out;
}

Json crossed_list(const std::vector<CrossedElem>& v, std::size_t cap) {
    Json out = Json::array();
    for (std::size_t i = 0; i < v.size() && i < cap; ++i) out.push_back(v[i].to_text());
    return out;
}

Json run_check(const Scenario& s, const CheckSpec& check) {
    const CrossedSystem::Ptr& sys = s.system;
    std::size_t cap = s.output.max_listed_elements;

    if (check.kind == "verify") {
        ValidationReport rep = verify_crossed_system(*sys);
        Json violations = Json::array();
        for (const auto& issue : rep.issues)
            violations.push_back(Json{{"condition", issue.condition}, {"witness", issue.witness}});
        return Json{{"valid", rep.valid()}, {"violations", violations}};
    }
    if (check.kind == "center") {
        CenterDescription c = center_compute(sys);
        if (c.elements) {
            return Json{{"kind", "elements"},
                        {"size", c.elements->size()},
                        {"elements", crossed_list(*c.elements, cap)}};
        }
        Json out{{"kind", "symbolic"}, {"support_modulus", bigint_to_text(*c.support_modulus)}};
        if (c.fixed_exponent_modulus) out["fixed_exponent_modulus"] = *c.fixed_exponent_modulus;
        if (!c.per_residue_coeffs.empty()) {
            Json per = Json::array();
            for (const auto& set : c.per_residue_coeffs) per.push_back(elem_list(set, cap));
            out["per_residue_coefficients"] = per;
        }
        out["description"] = c.text;
        return out;
    }
    if (check.kind == "commutant") {
        CoefficientConstraintSet cs = commutant_constraints(sys);
        if (!cs.per_degree.empty()) {
            Json degrees = Json::array();
            for (std::size_t i = 0; i < cs.per_degree.size(); ++i)
                degrees.push_back(Json{{"degree", sys->group()->to_text(sys->group()->at(i))},
                                       {"size", cs.per_degree[i].size()},
                                       {"elements", elem_list(cs.per_degree[i], cap)}});
            return Json{{"kind", "per_degree"}, {"degrees", degrees}};
        }
        Json out{{"kind", "integers"}, {"kernel_modulus", bigint_to_text(*cs.kernel_modulus)}};
        if (cs.laurent_dichotomy) {
            out["dichotomy"] = "full ring on the kernel, zero elsewhere";
        } else {
            Json per = Json::array();
            for (const auto& set : cs.per_residue) per.push_back(elem_list(set, cap));
            out["per_residue"] = per;
        }
        return out;
    }
    if (check.kind == "maximal") {
        MaximalityVerdict v = is_maximal_commutative(sys);
        Json out{{"maximal_commutative", v.value}};
        if (v.witness_degree)
            out["witness"] = Json{{"degree", v.witness_degree->to_text()},
                                  {"coefficient", v.witness_coefficient->to_text()}};
        out["via_domain_fast_path"] = v.via_domain_fast_path;
        return out;
    }
    if (check.kind == "commutative") {
        CommutativityVerdict v = is_commutative(sys);
        Json out{{"commutative", v.value}};
        if (!v.value) {
            out["violated_condition"] = v.violated_condition;
            out["witness"] = v.witness;
        }
        return out;
    }
    if (check.kind == "ideal") {
        std::vector<CrossedElem> gens;
        for (const auto& g : check.args.at("generators"))
            gens.push_back(parse_crossed(sys, g.get<std::string>()));
        IdealSet I = ideal_closure(sys, gens);
        std::vector<RingElem> base = intersect_base(I);
        Json out{{"size", I.size()},
                 {"base_intersection", Json{{"size", base.size()}, {"elements", elem_list(base, cap)}}}};
        if (sys->ring()->is_commutative()) {
            CommutantIntersection ci = intersect_commutant(I);
            Json cj{{"size", ci.codes.size()}};
            if (ci.witness) {
                cj["witness"] = ci.witness->to_text();
                cj["replay_rounds"] = ci.replay_rounds;
            }
            out["commutant_intersection"] = cj;
        }
        return out;
    }
    if (check.kind == "lift") {
        std::vector<RingElem> base;
        for (const auto& e : check.args.at("elements"))
            base.push_back(sys->ring()->parse(e.get<std::string>()));
        LiftedIdeal L = lift_ideal(sys, base);
        return Json{{"base_size", base.size()},
                    {"size", L.ideal.size()},
                    {"two_sided", L.two_sided},
                    {"base_in_fixed_ring", L.base_in_fixed_ring}};
    }
    if (check.kind == "descend") {
        std::vector<GroupElem> N;
        for (const auto& e : check.args.at("subgroup"))
            N.push_back(sys->group()->parse(e.get<std::string>()));
        DescentHomomorphism h = quotient_descend(sys, N);
        Json out{{"quotient_order", h.target()->group()->order()},
                 {"target", h.target()->describe()},
                 {"verification", h.verification_note()}};
        // demonstrate the vanishing ideal for the smallest nontrivial N-element
        GroupElem pick = sys->group()->identity();
        for (const auto& n : N)
            if (!n.is_identity() && (pick.is_identity() || n < pick)) pick = n;
        if (!pick.is_identity()) {
            CrossedElem gen = CrossedElem::one(sys) -
                              CrossedElem::single(sys, pick, sys->ring()->one());
            IdealSet I = ideal_closure(sys, {gen});
            std::vector<RingElem> base = intersect_base(I);
            out["demo"] = Json{{"generator", gen.to_text()},
                               {"ideal_size", I.size()},
                               {"base_intersection_trivial", base.size() == 1}};
        }
        return out;
    }
    if (check.kind == "obstruction") {
        RingElem c = sys->ring()->parse(check.args.at("c").get<std::string>());
        RingElem d = sys->ring()->parse(check.args.at("d").get<std::string>());
        GroupElem g = sys->group()->parse(check.args.at("g").get<std::string>());
        ObstructionResult r = zero_divisor_obstruction(sys, c, d, g);
        return Json{{"c", c.to_text()},
                    {"d", d.to_text()},
                    {"g", g.to_text()},
                    {"annihilator_size", r.annihilator_size},
                    {"ideal_size", r.ideal.size()},
                    {"empty_regular_intersection", r.empty_regular_intersection},
                    {"gamma_verification", r.gamma.verification_note()}};
    }
    if (check.kind == "theorem-suite") {
        TheoremReport rep = run_theorem_suite(sys);
        Json results = Json::array();
        for (const auto& e : rep.entries) {
            const char* status = e.status == TheoremStatus::PASS   ? "PASS"
                                 : e.status == TheoremStatus::FAIL ? "FAIL"
                                                                   : "SKIPPED";
            results.push_back(Json{{"theorem", e.id}, {"status", status}, {"detail", e.detail}});
        }
        return Json{{"results", results}, {"all_applicable_pass", rep.all_applicable_pass()}};
    }
    throw ParseError("unknown check kind '" + check.kind + "'");
}

} // namespace

Json run_scenario(const Scenario& s) {
    Json report;
    report["scenario"] = s.name;
    report["system"] = Json{{"description", s.system->describe()},
                            {"ring", s.system->ring()->describe()},
                            {"group", s.system->group()->describe()}};
    Json checks = Json::array();
    for (std::size_t i = 0; i < s.checks.size(); ++i) {
        Json entry;
        entry["index"] = i;
        entry["kind"] = s.checks[i].kind;
        auto start = std::chrono::steady_clock::now();
        try {
            entry["status"] = "ok";
            entry["result"] = run_check(s, s.checks[i]);
        } catch (const Error& e) {
            entry["status"] = "error";
            entry["error"] = e.what();
        }
        if (s.output.include_timings) {
            auto elapsed = std::chrono::steady_clock::now() - start;
            entry["elapsed_ms"] =
                std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
        }
        checks.push_back(std::move(entry));
    }
    report["checks"] = checks;
    return report;
}

namespace {

void render_text_value(const Json& v, const std::string& indent, std::string& out) {
    if (v.is_object()) {
        for (const auto& [k, val] : v.items()) {
            if (val.is_object() || val.is_array()) {
                out += indent + k + ":\n";
                render_text_value(val, indent + "  ", out);
            } else {
                out += indent + k + ": " + (val.is_string() ? val.get<std::string>() : val.dump()) +
                       "\n";
            }
        }
    } else if (v.is_array()) {
        for (const auto& val : v) {
            if (val.is_object() || val.is_array()) {
                out += indent + "-\n";
                render_text_value(val, indent + "  ", out);
            } else {
                out += indent + "- " +
                       (val.is_string() ? val.get<std::string>() : val.dump()) + "\n";
            }
        }
    } else {
        out += indent + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
    }
}

} // namespace

std::string emit_report(const Json& report, const std::string& format) {
    if (format == "json") return report.dump(2) + "\n";
    if (format != "text") throw PreconditionError("unknown report format '" + format + "'");
    std::string out;
    out += "scenario: " + report.at("scenario").get<std::string>() + "\n";
    out += "system:   " + report.at("system").at("description").get<std::string>() + "\n";
    for (const auto& c : report.at("checks")) {
        std::string status = c.at("status").get<std::string>();
        out += "[" + status + "] " + c.at("kind").get<std::string>() + "\n";
        if (status == "ok") render_text_value(c.at("result"), "    ", out);
        else out += "    " + c.at("error").get<std::string>() + "\n";
    }
    return out;
}

Json emit_scenario(const Scenario& s) {
    Json doc;
    doc["system"] = s.system_spec;
    Json checks = Json::array();
    for (const auto& c : s.checks) checks.push_back(c.args);
    doc["checks"] = checks;
    doc["output"] = Json{{"include_timings", s.output.include_timings},
                         {"max_listed_elements", s.output.max_listed_elements}};
    return doc;
}

} // namespace crossed_forge
