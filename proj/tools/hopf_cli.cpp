// Command-line surface: load JSON documents, run verifiers, build crossed
// products, compute integrals, assemble/decompose braidings, emit tables.
//
// Exit codes: 0 all checks pass, 1 a mathematical check failed or a
// construction was refused, 2 input could not be read or parsed.

#include <iostream>

#include <CLI11.hpp>

#include "hopfcross/io.hpp"
#include "hopfcross/polybraid.hpp"
#include "hopfcross/presets.hpp"

using namespace hopfcross;

namespace {

struct Options {
    bool json = false;
    std::string out;
    std::string field = "auto";
    std::string side = "right";
    size_t max_search = 1 << 20;
    size_t degree = 6;
};

FieldContext make_field(const Options& opt) {
    FieldContext fc;
    if (opt.field == "auto" || opt.field == "rational") return fc;
    fc.order = (unsigned)std::stoul(opt.field);
    if (fc.order < 1) fail("ParseError", "--field must be 'rational' or a positive integer n");
    return fc;
}

int report_exit(const AxiomReport& rep, const Options& opt) {
    if (opt.json)
        std::cout << json_text(report_to_json(rep));
    else
        std::cout << rep.to_text();
    return rep.all_passed() ? 0 : 1;
}

void emit(const Options& opt, const std::string& content) {
    if (opt.out.empty())
        std::cout << content;
    else
        write_text_file(opt.out, content);
}

int cmd_hopf_check(const std::string& path, const Options& opt) {
    FieldContext fc = make_field(opt);
    HopfData H = hopf_from_json(load_json_file(path), fc);
    return report_exit(verify_hopf(H), opt);
}

int cmd_hopf_antipode(const std::string& path, const Options& opt) {
    FieldContext fc = make_field(opt);
    json doc = load_json_file(path);
    HopfData H = hopf_from_json(doc, fc);
    H.antipode = derive_antipode(H);
    emit(opt, json_text(hopf_to_json(H, fc.order)));
    return 0;
}

int cmd_hopf_integrals(const std::string& path, const Options& opt) {
    FieldContext fc = make_field(opt);
    HopfData H = hopf_from_json(load_json_file(path), fc);
    Side side = (opt.side == "left") ? Side::Left : Side::Right;
    IntegralSpace sp = integrals(H, side);
    json out;
    out["side"] = (side == Side::Left) ? "left" : "right";
    out["dimension"] = sp.basis.size();
    json basis = json::array();
    for (size_t i = 0; i < sp.basis.size(); ++i) {
        json v = json::array();
        for (const auto& c : sp.basis[i]) v.push_back(c.render());
        basis.push_back(json{{"vector", v}, {"epsilon", sp.epsilon_values[i].render()}});
    }
    out["basis"] = basis;
    if (opt.json) {
        std::cout << json_text(out);
    } else {
        std::cout << "integral space (" << out["side"].get<std::string>()
                  << "), dimension " << sp.basis.size() << "\n";
        for (size_t i = 0; i < sp.basis.size(); ++i) {
            std::cout << "  t" << i << " =";
            for (size_t k = 0; k < sp.basis[i].size(); ++k)
                if (!sp.basis[i][k].is_zero())
                    std::cout << " +(" << sp.basis[i][k].render() << ")*" << H.basis_labels[k];
            std::cout << "   eps = " << sp.epsilon_values[i].render() << "\n";
        }
    }
    return 0;
}

int cmd_hopf_semisimple(const std::string& path, const Options& opt) {
    FieldContext fc = make_field(opt);
    HopfData H = hopf_from_json(load_json_file(path), fc);
    SemisimpleResult r = is_semisimple(H);
    if (opt.json) {
        json out;
        out["semisimple"] = r.semisimple;
        if (r.witness) {
            json v = json::array();
            for (const auto& c : *r.witness) v.push_back(c.render());
            out["witness"] = v;
        } else {
            out["witness"] = nullptr;
        }
        std::cout << json_text(out);
    } else {
        std::cout << (r.semisimple ? "semisimple" : "not semisimple") << "\n";
    }
    return r.semisimple ? 0 : 1;
}

int cmd_crossed_check(const std::string& path, const Options& opt) {
    FieldContext fc = make_field(opt);
    CrossedSystem S = crossed_from_json(load_json_file(path), fc, dir_of(path), /*certify=*/false);
    return report_exit(verify_crossed_system(S), opt);
}

int cmd_crossed_build(const std::string& path, const Options& opt) {
    FieldContext fc = make_field(opt);
    CrossedSystem S = crossed_from_json(load_json_file(path), fc, dir_of(path));
    HopfData P = build_crossed_product(S);
    emit(opt, json_text(hopf_to_json(P, fc.order)));
    return 0;
}

int cmd_crossed_factorize(const std::string& e_path, const std::string& a_path,
                          const std::string& h_path, const Options& opt) {
    FieldContext fc = make_field(opt);
    HopfData E = hopf_from_json(load_json_file(e_path), fc);
    LinMap a_embed = embedding_from_json(load_json_file(a_path), E.dim(), fc);
    LinMap h_embed = embedding_from_json(load_json_file(h_path), E.dim(), fc);
    FactorizationWitness W = factorize(E, a_embed, h_embed);
    json out;
    out["field"] = field_json(fc.order);
    out["A"] = hopf_to_json(W.recovered.A, fc.order);
    out["H"] = hopf_to_json(W.recovered.H, fc.order);
    json action = json::array();
    for (size_t h = 0; h < W.recovered.H.dim(); ++h)
        for (size_t a = 0; a < W.recovered.A.dim(); ++a)
            for (size_t r = 0; r < W.recovered.A.dim(); ++r) {
                const Scalar& c = W.recovered.act.at(r, h * W.recovered.A.dim() + a);
                if (!c.is_zero()) action.push_back(json::array({h, a, r, c.render()}));
            }
    out["action"] = action;
    json cocycle = json::array();
    for (size_t h = 0; h < W.recovered.H.dim(); ++h)
        for (size_t g = 0; g < W.recovered.H.dim(); ++g)
            for (size_t r = 0; r < W.recovered.A.dim(); ++r) {
                const Scalar& c = W.recovered.cocycle.at(r, h * W.recovered.H.dim() + g);
                if (!c.is_zero()) cocycle.push_back(json::array({h, g, r, c.render()}));
            }
    out["cocycle"] = cocycle;
    json iso = json::array();
    for (size_t r = 0; r < W.iso.rows(); ++r)
        for (size_t c = 0; c < W.iso.cols(); ++c)
            if (!W.iso.at(r, c).is_zero())
                iso.push_back(json::array({r, c, W.iso.at(r, c).render()}));
    out["iso_E_to_product"] = iso;
    emit(opt, json_text(out));
    return 0;
}

int cmd_crossed_transform(const std::string& sys_path, const std::string& u_path,
                          const Options& opt) {
    FieldContext fc = make_field(opt);
    CrossedSystem S = crossed_from_json(load_json_file(sys_path), fc, dir_of(sys_path));
    LinMap u = embedding_from_json(load_json_file(u_path), S.A.dim(), fc);
    LazyTransformResult R = transform_by_lazy_cocycle(S, u);
    json out;
    out["field"] = field_json(fc.order);
    json action = json::array(), cocycle = json::array();
    size_t na = S.A.dim(), nh = S.H.dim();
    for (size_t h = 0; h < nh; ++h)
        for (size_t a = 0; a < na; ++a)
            for (size_t r = 0; r < na; ++r) {
                const Scalar& c = R.system.act.at(r, h * na + a);
                if (!c.is_zero()) action.push_back(json::array({h, a, r, c.render()}));
            }
    for (size_t h = 0; h < nh; ++h)
        for (size_t g = 0; g < nh; ++g)
            for (size_t r = 0; r < na; ++r) {
                const Scalar& c = R.system.cocycle.at(r, h * nh + g);
                if (!c.is_zero()) cocycle.push_back(json::array({h, g, r, c.render()}));
            }
    out["action"] = action;
    out["cocycle"] = cocycle;
    emit(opt, json_text(out));
    return 0;
}

CrossedSystem load_system(const std::string& path, FieldContext& fc) {
    return crossed_from_json(load_json_file(path), fc, dir_of(path));
}

int cmd_braid_check(const std::string& sys_path, const std::string& quad_path, const Options& opt) {
    FieldContext fc = make_field(opt);
    CrossedSystem S = load_system(sys_path, fc);
    BraidingQuadruple Q = quadruple_from_json(load_json_file(quad_path), S, fc);
    return report_exit(verify_quadruple(S, Q), opt);
}

int cmd_braid_assemble(const std::string& sys_path, const std::string& quad_path,
                       const Options& opt) {
    FieldContext fc = make_field(opt);
    CrossedSystem S = load_system(sys_path, fc);
    BraidingQuadruple Q = certify_quadruple(S, quadruple_from_json(load_json_file(quad_path), S, fc));
    Pairing sigma = assemble_sigma(S, Q);
    emit(opt, json_text(sigma_to_json(sigma, fc.order)));
    return 0;
}

int cmd_braid_decompose(const std::string& sys_path, const std::string& sigma_path,
                        const Options& opt) {
    FieldContext fc = make_field(opt);
    CrossedSystem S = load_system(sys_path, fc);
    HopfData P = build_crossed_product(S);
    Pairing sigma = sigma_from_json(load_json_file(sigma_path), P.dim(), fc);
    BraidingQuadruple Q = decompose_sigma(S, P, sigma);
    emit(opt, json_text(quadruple_to_json(Q, fc.order)));
    return 0;
}

int cmd_braid_table(const std::string& sys_path, const std::string& quad_path, const Options& opt) {
    FieldContext fc = make_field(opt);
    CrossedSystem S = load_system(sys_path, fc);
    BraidingQuadruple Q = certify_quadruple(S, quadruple_from_json(load_json_file(quad_path), S, fc));
    Pairing sigma = assemble_sigma(S, Q);
    HopfData P = build_crossed_product(S);
    emit(opt, sigma_table_tsv(sigma, P.basis_labels));
    return 0;
}

int cmd_braid_search(const std::string& sys_path, const std::string& spec_path, const Options& opt) {
    FieldContext fc = make_field(opt);
    CrossedSystem S = load_system(sys_path, fc);
    json spec = load_json_file(spec_path);
    fc.adopt(field_order_of(spec));
    std::vector<SearchParam> params;
    for (const json& p : spec.at("parameters")) {
        SearchParam sp;
        sp.name = p.at("name").get<std::string>();
        for (const json& c : p.at("candidates")) sp.candidates.push_back(fc.parse(c.get<std::string>()));
        params.push_back(std::move(sp));
    }
    auto load_rows = [&](const json& rows, size_t nr, size_t nc) {
        if (rows.size() != nr) fail("ParseError", "search template has wrong row count");
        std::vector<std::vector<EntryExpr>> out(nr, std::vector<EntryExpr>(nc));
        for (size_t i = 0; i < nr; ++i) {
            if (rows.at(i).size() != nc) fail("ParseError", "search template has wrong column count");
            for (size_t j = 0; j < nc; ++j)
                out[i][j] = EntryExpr::parse(rows.at(i).at(j).get<std::string>(), fc.order);
        }
        return out;
    };
    QuadrupleTemplate T;
    size_t na = S.A.dim(), nh = S.H.dim();
    T.p = load_rows(spec.at("p"), na, na);
    T.tau = load_rows(spec.at("tau"), nh, nh);
    T.u = load_rows(spec.at("u"), na, nh);
    T.v = load_rows(spec.at("v"), nh, na);
    auto found = search_braidings(S, params, T, opt.max_search);
    json out = json::array();
    for (auto& [env, Q] : found) {
        json assignment;
        for (auto& [k, v] : env) assignment[k] = v.render();
        out.push_back(json{{"assignment", assignment},
                           {"quadruple", quadruple_to_json(Q, fc.order)}});
    }
    emit(opt, json_text(json{{"count", found.size()}, {"results", out}}));
    return 0;
}

PolySigmaParams parse_params(const std::string& text, unsigned order) {
    PolySigmaParams P;
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == ',') { parts.push_back(cur); cur.clear(); }
        else cur += ch;
    }
    parts.push_back(cur);
    if (parts.size() != 4) fail("ParseError", "--params wants s_p,s_tau,s_u,s_v");
    P.s_p = Scalar::parse(parts[0], order);
    P.s_tau = Scalar::parse(parts[1], order);
    P.s_u = Scalar::parse(parts[2], order);
    P.s_v = Scalar::parse(parts[3], order);
    return P;
}

int cmd_poly_sigma(size_t a, size_t b, size_t c, size_t d, const std::string& params,
                   const Options& opt) {
    FieldContext fc = make_field(opt);
    PolySigmaParams P = parse_params(params, fc.order);
    std::cout << closed_form_sigma(P, a, b, c, d).render() << "\n";
    return 0;
}

int cmd_poly_verify(const std::string& params, const Options& opt) {
    FieldContext fc = make_field(opt);
    PolySigmaParams P = parse_params(params, fc.order);
    size_t D = opt.degree;
    bool agree = true;
    std::vector<size_t> w;
    for (size_t s = 0; s <= 2 * D && agree; ++s)
        for (size_t a = 0; a <= s && agree; ++a)
            for (size_t c = 0; c <= s; ++c) {
                size_t b = s - a, d = s - c;
                if (closed_form_sigma(P, a, b, c, d) != assembled_sigma_poly(P, a, b, c, d)) {
                    agree = false;
                    w = {a, b, c, d};
                    break;
                }
            }
    AxiomReport rep;
    rep.record("closed_form_equals_assembled", agree, w);
    rep.merge(br_axioms_bounded(P, D));
    return report_exit(rep, opt);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine for crossed products of Hopf algebras"};
    app.require_subcommand(1);
    Options opt;

    std::string path, path2, path3;
    size_t pa = 0, pb = 0, pc = 0, pd = 0;
    std::string params = "1,1,1,1";
    int rc = 0;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_flag("--json", opt.json, "machine-readable report");
        cmd->add_option("--out", opt.out, "write output to this path");
        cmd->add_option("--field", opt.field, "rational | n (for Q(zeta_n)); default: from files");
    };

    auto* hopf = app.add_subcommand("hopf", "single Hopf algebra operations");
    {
        auto* c = hopf->add_subcommand("check", "verify all Hopf algebra axioms");
        c->add_option("path", path)->required();
        add_common(c);
        c->callback([&] { rc = cmd_hopf_check(path, opt); });
        auto* a = hopf->add_subcommand("antipode", "derive the antipode by convolution inversion");
        a->add_option("path", path)->required();
        add_common(a);
        a->callback([&] { rc = cmd_hopf_antipode(path, opt); });
        auto* i = hopf->add_subcommand("integrals", "solve for the space of integrals");
        i->add_option("path", path)->required();
        i->add_option("--side", opt.side, "left | right (default right)");
        add_common(i);
        i->callback([&] { rc = cmd_hopf_integrals(path, opt); });
        auto* s = hopf->add_subcommand("semisimple", "Maschke test: some integral has eps != 0");
        s->add_option("path", path)->required();
        add_common(s);
        s->callback([&] { rc = cmd_hopf_semisimple(path, opt); });
    }

    auto* crossed = app.add_subcommand("crossed", "crossed system operations");
    {
        auto* c = crossed->add_subcommand("check", "verify the crossed system axioms");
        c->add_option("path", path)->required();
        add_common(c);
        c->callback([&] { rc = cmd_crossed_check(path, opt); });
        auto* b = crossed->add_subcommand("build", "build the crossed product Hopf algebra");
        b->add_option("path", path)->required();
        add_common(b);
        b->callback([&] { rc = cmd_crossed_build(path, opt); });
        auto* f = crossed->add_subcommand("factorize",
                                          "recover a crossed system from E and two embeddings");
        f->add_option("E", path)->required();
        f->add_option("a_embed", path2)->required();
        f->add_option("h_embed", path3)->required();
        add_common(f);
        f->callback([&] { rc = cmd_crossed_factorize(path, path2, path3, opt); });
        auto* t = crossed->add_subcommand("transform", "apply a coalgebra lazy 1-cocycle");
        t->add_option("system", path)->required();
        t->add_option("cocycle", path2)->required();
        add_common(t);
        t->callback([&] { rc = cmd_crossed_transform(path, path2, opt); });
    }

    auto* braid = app.add_subcommand("braid", "coquasitriangular structures");
    {
        auto* c = braid->add_subcommand("check", "verify a braiding quadruple");
        c->add_option("system", path)->required();
        c->add_option("quadruple", path2)->required();
        add_common(c);
        c->callback([&] { rc = cmd_braid_check(path, path2, opt); });
        auto* a = braid->add_subcommand("assemble", "assemble sigma from a certified quadruple");
        a->add_option("system", path)->required();
        a->add_option("quadruple", path2)->required();
        add_common(a);
        a->callback([&] { rc = cmd_braid_assemble(path, path2, opt); });
        auto* d = braid->add_subcommand("decompose", "split a braiding on A # H into components");
        d->add_option("system", path)->required();
        d->add_option("sigma", path2)->required();
        add_common(d);
        d->callback([&] { rc = cmd_braid_decompose(path, path2, opt); });
        auto* s = braid->add_subcommand("search", "enumerate certified quadruples over candidates");
        s->add_option("system", path)->required();
        s->add_option("searchspec", path2)->required();
        s->add_option("--max-search", opt.max_search, "cap on the candidate space");
        add_common(s);
        s->callback([&] { rc = cmd_braid_search(path, path2, opt); });
        auto* t = braid->add_subcommand("table", "emit the sigma table as TSV");
        t->add_option("system", path)->required();
        t->add_option("quadruple", path2)->required();
        add_common(t);
        t->callback([&] { rc = cmd_braid_table(path, path2, opt); });
    }

    auto* poly = app.add_subcommand("poly", "braidings on the polynomial tensor square");
    {
        auto* s = poly->add_subcommand("sigma", "evaluate the closed-form braiding");
        s->add_option("--a", pa)->required();
        s->add_option("--b", pb)->required();
        s->add_option("--c", pc)->required();
        s->add_option("--d", pd)->required();
        s->add_option("--params", params, "s_p,s_tau,s_u,s_v");
        add_common(s);
        s->callback([&] { rc = cmd_poly_sigma(pa, pb, pc, pd, params, opt); });
        auto* v = poly->add_subcommand("verify", "closed form vs assembled, plus bounded axioms");
        v->add_option("--params", params, "s_p,s_tau,s_u,s_v");
        v->add_option("--degree", opt.degree, "degree bound (default 6)");
        add_common(v);
        v->callback([&] { rc = cmd_poly_verify(params, opt); });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        const std::string& code = e.code();
        return (code == "IoError" || code == "ParseError" || code == "ZeroDenominator") ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
