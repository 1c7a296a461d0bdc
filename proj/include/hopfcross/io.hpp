#pragma once

// JSON document formats and table emission. All scalar values travel as text
// in the canonical grammar (rationals, polynomials in "z"); serialization is
// deterministic so identical inputs produce byte-identical outputs.

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hopfcross/braiding.hpp"
#include "hopfcross/crossed.hpp"

namespace hopfcross {

using json = nlohmann::ordered_json;

// One exact field per session: order 1 encodes the rationals.
struct FieldContext {
    unsigned order = 1;

    void adopt(unsigned doc_order) {
        if (doc_order == 1 || doc_order == order) return;
        if (order == 1) { order = doc_order; return; }
        fail("FieldMismatch", "documents live in different cyclotomic fields (" +
                                  std::to_string(order) + " vs " + std::to_string(doc_order) + ")");
    }
    Scalar parse(const std::string& text) const { return Scalar::parse(text, order); }
};

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("IoError", "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        fail("ParseError", std::string("bad JSON in ") + path + ": " + e.what());
    }
    return j;
}

inline unsigned field_order_of(const json& doc) {
    if (!doc.contains("field")) return 1;
    const json& f = doc.at("field");
    std::string type = f.at("type").get<std::string>();
    if (type == "rational") return 1;
    if (type == "cyclotomic") return f.at("n").get<unsigned>();
    fail("ParseError", "unknown field type '" + type + "'");
}

inline json field_json(unsigned order) {
    if (order == 1) return json{{"type", "rational"}};
    return json{{"type", "cyclotomic"}, {"n", order}};
}

// ---------------------------------------------------------------- Hopf docs

inline HopfData hopf_from_json(const json& doc, FieldContext& field) {
    field.adopt(field_order_of(doc));
    HopfData H;
    H.name = doc.value("name", "");
    size_t n = doc.at("dim").get<size_t>();
    if (n == 0) fail("ParseError", "dim must be positive");
    H.basis_labels.resize(n);
    if (doc.contains("basis_labels")) {
        auto lab = doc.at("basis_labels");
        if (lab.size() != n) fail("ParseError", "basis_labels length != dim");
        for (size_t i = 0; i < n; ++i) H.basis_labels[i] = lab.at(i).get<std::string>();
    } else {
        for (size_t i = 0; i < n; ++i) H.basis_labels[i] = "e" + std::to_string(i);
    }
    H.algebra.dim = H.coalgebra.dim = n;
    H.algebra.mult = LinMap({n, n}, {n});
    H.coalgebra.comult = LinMap({n}, {n, n});
    H.coalgebra.counit = LinMap({n}, {1});

    auto idx = [&](const json& v, size_t bound, const char* what) {
        size_t i = v.get<size_t>();
        if (i >= bound) fail("ParseError", std::string("index out of range in ") + what);
        return i;
    };
    H.algebra.unit = Vec(n);
    {
        const json& u = doc.at("unit");
        if (u.size() != n) fail("ParseError", "unit length != dim");
        for (size_t i = 0; i < n; ++i) H.algebra.unit[i] = field.parse(u.at(i).get<std::string>());
    }
    {
        const json& e = doc.at("counit");
        if (e.size() != n) fail("ParseError", "counit length != dim");
        for (size_t i = 0; i < n; ++i) H.coalgebra.counit.at(0, i) = field.parse(e.at(i).get<std::string>());
    }
    for (const json& ent : doc.at("mult")) {
        if (ent.size() != 4) fail("ParseError", "mult entries are [i, j, k, scalar]");
        size_t i = idx(ent.at(0), n, "mult"), j = idx(ent.at(1), n, "mult"), k = idx(ent.at(2), n, "mult");
        H.algebra.mult.at(k, i * n + j) += field.parse(ent.at(3).get<std::string>());
    }
    for (const json& ent : doc.at("comult")) {
        if (ent.size() != 4) fail("ParseError", "comult entries are [i, j, k, scalar]");
        size_t i = idx(ent.at(0), n, "comult"), j = idx(ent.at(1), n, "comult"), k = idx(ent.at(2), n, "comult");
        H.coalgebra.comult.at(j * n + k, i) += field.parse(ent.at(3).get<std::string>());
    }
    if (doc.contains("antipode")) {
        H.antipode = LinMap({n}, {n});
        for (const json& ent : doc.at("antipode")) {
            if (ent.size() != 3) fail("ParseError", "antipode entries are [i, j, scalar]");
            size_t i = idx(ent.at(0), n, "antipode"), j = idx(ent.at(1), n, "antipode");
            H.antipode.at(j, i) += field.parse(ent.at(2).get<std::string>());
        }
    } else {
        H.antipode = derive_antipode(H);
    }
    return H;
}

inline json hopf_to_json(const HopfData& H, unsigned field_order) {
    size_t n = H.dim();
    json doc;
    doc["name"] = H.name;
    doc["field"] = field_json(field_order);
    doc["dim"] = n;
    doc["basis_labels"] = H.basis_labels;
    json unit = json::array(), counit = json::array();
    for (size_t i = 0; i < n; ++i) {
        unit.push_back(H.algebra.unit[i].render());
        counit.push_back(H.coalgebra.eps_basis(i).render());
    }
    doc["unit"] = unit;
    doc["counit"] = counit;
    json mult = json::array();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                const Scalar& c = H.algebra.mult.at(k, i * n + j);
                if (!c.is_zero()) mult.push_back(json::array({i, j, k, c.render()}));
            }
    doc["mult"] = mult;
    json comult = json::array();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                const Scalar& c = H.coalgebra.comult.at(j * n + k, i);
                if (!c.is_zero()) comult.push_back(json::array({i, j, k, c.render()}));
            }
    doc["comult"] = comult;
    json anti = json::array();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            const Scalar& c = H.antipode.at(j, i);
            if (!c.is_zero()) anti.push_back(json::array({i, j, c.render()}));
        }
    doc["antipode"] = anti;
    return doc;
}

// "A": inline doc or {"file": relative-path}; relative to the referencing file.
inline json resolve_ref(const json& node, const std::string& base_dir) {
    if (node.is_object() && node.contains("file")) {
        std::string p = node.at("file").get<std::string>();
        if (!p.empty() && p[0] != '/' && !base_dir.empty()) p = base_dir + "/" + p;
        return load_json_file(p);
    }
    return node;
}

inline std::string dir_of(const std::string& path) {
    auto pos = path.find_last_of('/');
    return pos == std::string::npos ? std::string() : path.substr(0, pos);
}

// -------------------------------------------------------- crossed system docs

inline CrossedSystem crossed_from_json(const json& doc, FieldContext& field,
                                       const std::string& base_dir, bool certify = true) {
    HopfData A = hopf_from_json(resolve_ref(doc.at("A"), base_dir), field);
    HopfData H = hopf_from_json(resolve_ref(doc.at("H"), base_dir), field);
    size_t na = A.dim(), nh = H.dim();
    LinMap act({nh, na}, {na});
    for (const json& ent : doc.at("action")) {
        if (ent.size() != 4) fail("ParseError", "action entries are [hIdx, aIdx, outAIdx, scalar]");
        size_t h = ent.at(0).get<size_t>(), a = ent.at(1).get<size_t>(), r = ent.at(2).get<size_t>();
        if (h >= nh || a >= na || r >= na) fail("ParseError", "action index out of range");
        act.at(r, h * na + a) += field.parse(ent.at(3).get<std::string>());
    }
    LinMap coc({nh, nh}, {na});
    for (const json& ent : doc.at("cocycle")) {
        if (ent.size() != 4) fail("ParseError", "cocycle entries are [hIdx, gIdx, outAIdx, scalar]");
        size_t h = ent.at(0).get<size_t>(), g = ent.at(1).get<size_t>(), r = ent.at(2).get<size_t>();
        if (h >= nh || g >= nh || r >= na) fail("ParseError", "cocycle index out of range");
        coc.at(r, h * nh + g) += field.parse(ent.at(3).get<std::string>());
    }
    CrossedSystem S{std::move(A), std::move(H), std::move(act), std::move(coc)};
    if (certify) return certify_crossed_system(std::move(S));
    return S;
}

// ------------------------------------------------------------- pairing docs

inline Pairing pairing_from_json(const json& doc, size_t left_dim, size_t right_dim,
                                 FieldContext& field) {
    Pairing P(left_dim, right_dim);
    for (const json& ent : doc.at("entries")) {
        if (ent.size() != 3) fail("ParseError", "pairing entries are [i, j, scalar]");
        size_t i = ent.at(0).get<size_t>(), j = ent.at(1).get<size_t>();
        if (i >= left_dim || j >= right_dim) fail("ParseError", "pairing index out of range");
        P.at(i, j) += field.parse(ent.at(2).get<std::string>());
    }
    return P;
}

inline json pairing_to_json(const Pairing& P) {
    json entries = json::array();
    for (size_t i = 0; i < P.left_dim; ++i)
        for (size_t j = 0; j < P.right_dim; ++j)
            if (!P.at(i, j).is_zero()) entries.push_back(json::array({i, j, P.at(i, j).render()}));
    return json{{"entries", entries}};
}

inline BraidingQuadruple quadruple_from_json(const json& doc, const CrossedSystem& S,
                                             FieldContext& field) {
    field.adopt(field_order_of(doc));
    size_t na = S.A.dim(), nh = S.H.dim();
    BraidingQuadruple Q;
    Q.p = pairing_from_json(doc.at("p"), na, na, field);
    Q.tau = pairing_from_json(doc.at("tau"), nh, nh, field);
    Q.u = pairing_from_json(doc.at("u"), na, nh, field);
    Q.v = pairing_from_json(doc.at("v"), nh, na, field);
    return Q;
}

inline json quadruple_to_json(const BraidingQuadruple& Q, unsigned field_order) {
    json doc;
    doc["field"] = field_json(field_order);
    doc["p"] = pairing_to_json(Q.p);
    doc["tau"] = pairing_to_json(Q.tau);
    doc["u"] = pairing_to_json(Q.u);
    doc["v"] = pairing_to_json(Q.v);
    return doc;
}

inline json sigma_to_json(const Pairing& sigma, unsigned field_order) {
    json doc;
    doc["field"] = field_json(field_order);
    doc["left_dim"] = sigma.left_dim;
    doc["right_dim"] = sigma.right_dim;
    doc["entries"] = pairing_to_json(sigma)["entries"];
    return doc;
}

inline Pairing sigma_from_json(const json& doc, size_t dim, FieldContext& field) {
    field.adopt(field_order_of(doc));
    return pairing_from_json(doc, dim, dim, field);
}

// --------------------------------------------------------------- embeddings

inline LinMap embedding_from_json(const json& doc, size_t codomain_dim, FieldContext& field) {
    size_t d = doc.at("domain_dim").get<size_t>();
    LinMap emb({d}, {codomain_dim});
    for (const json& ent : doc.at("entries")) {
        if (ent.size() != 3) fail("ParseError", "embedding entries are [row, col, scalar]");
        size_t r = ent.at(0).get<size_t>(), c = ent.at(1).get<size_t>();
        if (r >= codomain_dim || c >= d) fail("ParseError", "embedding index out of range");
        emb.at(r, c) += field.parse(ent.at(2).get<std::string>());
    }
    return emb;
}

// ------------------------------------------------------------------- tables

// TSV with basis labels on the first row and column, entries in canonical
// scalar text.
inline std::string sigma_table_tsv(const Pairing& sigma, const std::vector<std::string>& labels) {
    std::ostringstream os;
    os << "sigma";
    for (const auto& l : labels) os << "\t" << l;
    os << "\n";
    for (size_t i = 0; i < sigma.left_dim; ++i) {
        os << labels[i];
        for (size_t j = 0; j < sigma.right_dim; ++j) os << "\t" << sigma.at(i, j).render();
        os << "\n";
    }
    return os.str();
}

inline json report_to_json(const AxiomReport& rep) {
    json out;
    out["all_passed"] = rep.all_passed();
    json entries = json::array();
    for (const auto& e : rep.entries) {
        json je;
        je["axiom"] = e.axiom;
        je["passed"] = e.passed;
        if (e.witness)
            je["witness"] = *e.witness;
        else
            je["witness"] = nullptr;
        if (!e.detail.empty()) je["detail"] = e.detail;
        entries.push_back(je);
    }
    out["entries"] = entries;
    return out;
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail("IoError", "cannot write " + path);
    out << content;
}

inline std::string json_text(const json& j) { return j.dump(2) + "\n"; }

} // namespace hopfcross
