#include "lieder/cli.hpp"

#include "lieder/io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <map>

namespace lieder::cli {

namespace {

using io::Json;

struct Outcome {
    Json body;
    int code = kOk;
};

struct Options {
    std::string input;
    std::string format = "json";
    std::size_t degree = 0;
    bool representatives = false;
    bool ce = false;
    bool adjoint = false;
    std::optional<std::size_t> max_order;
};

/// The algebra of a document: the "algebra" member when present, else the
/// document itself.
const Json& algebra_node(const Json& doc, std::string& path) {
    if (doc.is_object() && doc.contains("algebra")) {
        path = "/algebra";
        return doc.at("algebra");
    }
    path = "";
    return doc;
}

io::AlgebraFile load_algebra(const Json& doc) {
    std::string path;
    const Json& node = algebra_node(doc, path);
    return io::algebra_from_json(node, path);
}

LieDerPair verified_pair(const io::AlgebraFile& a) {
    const Report r = verify_pair(a.pair);
    if (!r.ok()) throw PreconditionError("input is not a LieDer pair", r);
    return a.pair;
}

const Json& member(const Json& doc, const char* key) {
    if (!doc.is_object() || !doc.contains(key)) throw io::ParseError("", std::string("missing \"") + key + "\"");
    return doc.at(key);
}

Matrix square_member(const Json& doc, const char* key) {
    const Json& m = member(doc, key);
    const std::size_t n = m.is_array() ? m.size() : 0;
    return io::matrix_from_json(m, std::string("/") + key, n, n);
}

std::size_t degree_guard(std::size_t dim) {
    if (const char* env = std::getenv("LIEDER_MAX_DEGREE")) {
        try {
            return std::stoul(env);
        } catch (const std::exception&) {
            throw io::ParseError("LIEDER_MAX_DEGREE", "not a non-negative integer");
        }
    }
    return dim + 1;
}

Outcome report_outcome(const Report& r) { return {io::to_json(r), r.ok() ? kOk : kNegative}; }

// ---------------------------------------------------------------------------

Outcome check_lie(const Json& doc, const Options&) { return report_outcome(verify_lie(load_algebra(doc).pair.algebra)); }

Outcome check_lieder(const Json& doc, const Options&) { return report_outcome(verify_pair(load_algebra(doc).pair)); }

Outcome check_rep(const Json& doc, const Options&) {
    const auto a = load_algebra(doc);
    if (!a.representation) throw io::ParseError("/representation", "missing");
    Report r = verify_pair(a.pair);
    r.merge(verify_representation(a.pair, *a.representation));
    return report_outcome(r);
}

Outcome cohomology(const Json& doc, const Options& o) {
    const auto a = load_algebra(doc);
    const std::size_t guard = degree_guard(a.pair.dim());
    if (o.degree > guard) {
        throw io::ParseError("--degree", "degree " + std::to_string(o.degree) + " exceeds the guard " +
                                             std::to_string(guard) + " (LIEDER_MAX_DEGREE)");
    }
    const bool adjoint = o.adjoint || !a.representation;
    const LieDerRepresentation rep = adjoint ? adjoint_representation(a.pair) : *a.representation;
    Json body;
    if (o.ce) {
        const Report r = verify_module(a.pair.algebra, rep);
        if (!verify_lie(a.pair.algebra).ok() || !r.ok()) {
            Report all = verify_lie(a.pair.algebra);
            all.merge(r);
            throw PreconditionError("input is not a Lie algebra with a representation", all);
        }
        body = io::to_json(ce_cohomology(a.pair.algebra, rep, o.degree));
        body["complex"] = "chevalley-eilenberg";
    } else {
        verified_pair(a);
        body = io::to_json(lieder_cohomology(a.pair, rep, o.degree));
        body["complex"] = "lieder";
    }
    body["coefficients"] = adjoint ? "adjoint" : "file";
    if (!o.representatives) body.erase("representatives");
    return {body};
}

struct DeformationInput {
    LieDerPair pair;
    TruncatedDeformation d;
};

DeformationInput load_deformation(const Json& doc) {
    DeformationInput in{verified_pair(load_algebra(doc)), {}};
    in.d = io::deformation_from_json(member(doc, "deformation"), "/deformation", in.pair);
    return in;
}

Outcome deform_check(const Json& doc, const Options&) {
    const auto in = load_deformation(doc);
    return report_outcome(check_deformation(in.pair, in.d));
}

Outcome deform_infinitesimal(const Json& doc, const Options&) {
    const auto in = load_deformation(doc);
    const CochainPair c = infinitesimal(in.pair, in.d);
    const auto primitive = is_coboundary(c, in.pair, adjoint_representation(in.pair));
    Json body = {{"infinitesimal", io::to_json(c)}, {"exact", primitive.has_value()}};
    if (primitive) body["primitive"] = io::to_json(*primitive);
    return {body};
}

Outcome deform_obstruction(const Json& doc, const Options&) {
    const auto in = load_deformation(doc);
    const CochainPair ob = obstruction(in.pair, in.d);
    const auto primitive = is_coboundary(ob, in.pair, adjoint_representation(in.pair));
    Json body = {{"order", in.d.order()}, {"obstruction", io::to_json(ob)}, {"exact", primitive.has_value()}};
    if (primitive) body["primitive"] = io::to_json(*primitive);
    return {body};
}

Outcome deform_extend(const Json& doc, const Options&) {
    const auto in = load_deformation(doc);
    if (auto e = extend_deformation(in.pair, in.d)) {
        return {{{"extensible", true}, {"terms", io::to_json(e->terms)}, {"deformation", io::to_json(e->extended)}}};
    }
    const CochainPair ob = obstruction(in.pair, in.d);
    return {{{"extensible", false}, {"obstruction_class_nonzero", true}, {"obstruction", io::to_json(ob)}},
            kNegative};
}

Outcome deform_trivialize(const Json& doc, const Options& o) {
    const auto in = load_deformation(doc);
    const std::size_t k = o.max_order.value_or(in.d.order());
    const Trivialization t = trivialization(in.pair, in.d, k);
    if (t.complete()) return {{{"trivial", true}, {"max_order", std::min(k, in.d.order())}, {"iso", io::to_json(t.iso)}}};
    return {{{"trivial", false},
             {"blocking_order", t.blocking_order},
             {"blocking", io::to_json(*t.blocking)},
             {"partial_iso", io::to_json(t.iso)}},
            kNegative};
}

Outcome centext_build(const Json& doc, const Options&) {
    const LieDerPair base = verified_pair(load_algebra(doc));
    const Matrix phi_fiber = square_member(doc, "fiber_phi");
    const CentralCocycle c = io::central_cocycle_from_json(member(doc, "cocycle"), "/cocycle");
    if (c.psi.g_dim() != base.dim() || c.psi.v_dim() != phi_fiber.rows()) {
        throw io::ParseError("/cocycle", "cocycle shape does not match the base and fiber");
    }
    const LieDerCentralExtension e = build_central_extension(base, phi_fiber, c);
    return {{{"extension", io::to_json(e)}, {"verified", io::to_json(verify_central_extension(e))}}};
}

Outcome centext_from_section(const Json& doc, const Options&) {
    const auto e = io::lieder_central_extension_from_json(member(doc, "extension"), "/extension");
    const Matrix s = doc.contains("section")
                         ? io::matrix_from_json(doc.at("section"), "/section", e.algebras.total.dim(), e.algebras.base.dim())
                         : canonical_section(e.algebras);
    const CentralCocycle c = section_to_cocycle(e, s);
    return {{{"cocycle", io::to_json(c)}, {"section", io::to_json(s)}}};
}

Outcome centext_classify(const Json& doc, const Options& o) {
    const LieDerPair base = verified_pair(load_algebra(doc));
    const Matrix phi_fiber = square_member(doc, "fiber_phi");
    Json body = io::to_json(classify_central_extensions(base, phi_fiber));
    if (!o.representatives) body.erase("representatives");
    return {body};
}

struct DerPairInput {
    CentralExtension e;
    Matrix phi_fiber;
    Matrix phi_base;
    std::optional<Matrix> section;
};

DerPairInput load_derpair(const Json& doc) {
    const Json& ext = member(doc, "extension");
    DerPairInput in{io::central_extension_from_json(ext, "/extension"), square_member(doc, "phi_fiber"), {}, {}};
    in.phi_base = doc.contains("phi_base") ? square_member(doc, "phi_base")
                                           : io::algebra_from_json(ext.at("base"), "/extension/base").pair.phi;
    if (doc.contains("section")) {
        in.section = io::matrix_from_json(doc.at("section"), "/section", in.e.total.dim(), in.e.base.dim());
    }
    return in;
}

Outcome derpair_obstruction(const Json& doc, const Options&) {
    const auto in = load_derpair(doc);
    const Matrix s = in.section.value_or(canonical_section(in.e));
    const Cochain ob = derivation_pair_obstruction(in.e, in.phi_fiber, in.phi_base, s);
    const Representation triv{in.phi_fiber.rows(), std::vector<Matrix>(in.e.base.dim(), Matrix(in.phi_fiber.rows(), in.phi_fiber.rows()))};
    const auto lambda = is_ce_coboundary(ob, in.e.base, triv);
    Json body = {{"obstruction", io::to_json(ob)}, {"exact", lambda.has_value()}};
    if (lambda) body["lambda"] = io::to_json(*lambda);
    return {body};
}

Outcome derpair_extend(const Json& doc, const Options&) {
    const auto in = load_derpair(doc);
    const auto r = extend_derivation_pair(in.e, in.phi_fiber, in.phi_base, in.section);
    if (r.extensible()) {
        return {{{"extensible", true},
                 {"obstruction", io::to_json(r.obstruction)},
                 {"lambda", io::to_json(*r.lambda)},
                 {"phi_total", io::to_json(*r.phi_total)}}};
    }
    return {{{"extensible", false}, {"obstruction_class_nonzero", true}, {"obstruction", io::to_json(r.obstruction)}},
            kNegative};
}

Outcome derpair_theta(const Json& doc, const Options&) {
    const auto a = load_algebra(doc);
    const Matrix phi_fiber = square_member(doc, "phi_fiber");
    const Matrix phi_base = doc.contains("phi_base") ? square_member(doc, "phi_base") : a.pair.phi;
    const ThetaMap t = theta_map(a.pair.algebra, phi_fiber.rows(), phi_fiber, phi_base);
    Json basis = Json::array();
    for (const auto& c : t.basis) basis.push_back(io::to_json(c));
    return {{{"zero", t.is_zero()}, {"matrix", io::to_json(t.matrix)}, {"basis", basis}}};
}

std::pair<SkeletalLie2, Lie2Derivation> load_lie2(const Json& doc) {
    return {io::skeletal_from_json(member(doc, "lie2"), "/lie2"),
            io::lie2_derivation_from_json(member(doc, "derivation"), "/derivation")};
}

Outcome lie2_check(const Json& doc, const Options&) {
    const auto [s, d] = load_lie2(doc);
    return report_outcome(verify_lie2der(s, d));
}

Outcome lie2_to_triple(const Json& doc, const Options&) {
    const auto [s, d] = load_lie2(doc);
    return {io::to_json(pair_to_triple(s, d))};
}

Outcome lie2_from_triple(const Json& doc, const Options&) {
    const auto out = triple_to_pair(io::triple_from_json(doc, ""));
    return {{{"lie2", io::to_json(out.algebra)}, {"derivation", io::to_json(out.derivation)}}};
}

Outcome lie2_equiv_check(const Json& doc, const Options&) {
    const Triple t = io::triple_from_json(member(doc, "source"), "/source");
    const Triple t2 = io::triple_from_json(member(doc, "target"), "/target");
    const auto w = io::witness_from_json(member(doc, "witness"), "/witness");
    const WitnessReport r = verify_equivalence_witness(t, t2, w);
    return {{{"ok", r.ok()},
             {"conditions", io::to_json(r.conditions)},
             {"induces_isomorphism", r.induces_isomorphism()},
             {"isomorphism", io::to_json(r.isomorphism)}},
            r.ok() ? kOk : kNegative};
}

// ---------------------------------------------------------------------------

void render_text(const Json& j, std::ostream& out, const std::string& indent = "") {
    for (const auto& [key, val] : j.items()) {
        if (key == "violations" && val.is_array()) {
            out << indent << key << ": " << val.size() << "\n";
            for (const auto& v : val) {
                out << indent << "  " << v.at("rule").get<std::string>() << " " << v.at("indices").dump();
                if (v.contains("detail")) out << " " << v.at("detail").get<std::string>();
                out << "\n";
            }
        } else if (val.is_object() && (val.contains("ok") || key == "extension")) {
            out << indent << key << ":\n";
            render_text(val, out, indent + "  ");
        } else if (val.is_string()) {
            out << indent << key << ": " << val.get<std::string>() << "\n";
        } else {
            out << indent << key << ": " << val.dump() << "\n";
        }
    }
}

void emit(const Json& body, const std::string& format, std::ostream& out) {
    if (format == "text") {
        render_text(body, out);
    } else {
        out << body.dump(2) << "\n";
    }
}

using Handler = std::function<Outcome(const Json&, const Options&)>;

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cohomology and deformations of Lie algebras with derivations", "lieder"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));

    std::map<CLI::App*, Handler> handlers;
    const auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, Handler h) {
        CLI::App* sub = parent->add_subcommand(name, help);
        sub->add_option("input", o.input, "JSON input file, - for stdin")->required();
        handlers[sub] = std::move(h);
        return sub;
    };
    const auto group = [&](const std::string& name, const std::string& help) {
        CLI::App* g = app.add_subcommand(name, help);
        g->require_subcommand(1);
        return g;
    };

    CLI::App* check = group("check", "Verify axioms");
    leaf(check, "lie", "Jacobi identity", check_lie);
    leaf(check, "lieder", "Jacobi identity and Leibniz rule", check_lieder);
    leaf(check, "rep", "LieDer representation", check_rep);

    CLI::App* coh = leaf(&app, "cohomology", "Cohomology in one degree", cohomology);
    coh->add_option("--degree", o.degree, "Degree")->required();
    coh->add_flag("--representatives", o.representatives, "Include class representatives");
    coh->add_flag("--ce", o.ce, "Chevalley-Eilenberg complex instead of the LieDer complex");
    coh->add_flag("--adjoint", o.adjoint, "Adjoint coefficients even when the file has a representation");

    CLI::App* deform = group("deform", "Formal deformations");
    leaf(deform, "check", "Deformation equations", deform_check);
    leaf(deform, "infinitesimal", "Infinitesimal and its class", deform_infinitesimal);
    leaf(deform, "obstruction", "Obstruction cocycle to the next order", deform_obstruction);
    leaf(deform, "extend", "Extend by one order", deform_extend);
    leaf(deform, "trivialize", "Equivalence to the trivial deformation", deform_trivialize)
        ->add_option("--max-order", o.max_order, "Highest order to kill");

    CLI::App* centext = group("centext", "Central extensions");
    leaf(centext, "build", "Extension from a central cocycle", centext_build);
    leaf(centext, "from-section", "Cocycle of an extension and a section", centext_from_section);
    leaf(centext, "classify", "Second cohomology with fiber coefficients", centext_classify)
        ->add_flag("--representatives", o.representatives, "Include class representatives");

    CLI::App* derpair = group("derpair", "Derivation pairs on central extensions");
    leaf(derpair, "obstruction", "Obstruction cocycle", derpair_obstruction);
    leaf(derpair, "extend", "Lift to the total algebra", derpair_extend);
    leaf(derpair, "theta", "Theta map on H^2", derpair_theta);

    CLI::App* lie2 = group("lie2", "Skeletal Lie 2-algebras");
    leaf(lie2, "check", "Axioms with a derivation", lie2_check);
    leaf(lie2, "to-triple", "Pair to triple", lie2_to_triple);
    leaf(lie2, "from-triple", "Triple to pair", lie2_from_triple);
    leaf(lie2, "equiv-check", "Verify an equivalence witness", lie2_equiv_check);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kInputError;
    }

    const auto find_leaf = [&]() -> CLI::App* {
        for (CLI::App* a = &app;;) {
            const auto subs = a->get_subcommands();
            if (subs.empty()) return a;
            a = subs.front();
        }
    };
    const auto it = handlers.find(find_leaf());
    if (it == handlers.end()) {
        err << app.help();
        return kInputError;
    }

    try {
        const Outcome r = it->second(io::read_file(o.input), o);
        emit(r.body, o.format, out);
        return r.code;
    } catch (const io::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const PreconditionError& e) {
        Json body = io::to_json(e.report());
        body["ok"] = false;
        body["error"] = e.what();
        emit(body, o.format, out);
        return kNegative;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

}  // namespace lieder::cli
