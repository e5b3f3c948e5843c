#include "qybe/json_io.hpp"

#include <fstream>

#include "qybe/errors.hpp"

namespace qybe {

Json matrix_to_json(const ExactMatrix& m) {
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    Json entries = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.cols(); ++k)
            row.push_back(m.at(i, k).to_string());
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    return j;
}

ExactMatrix matrix_from_json(const Json& j) {
    if (!j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw DomainError("matrix JSON needs rows, cols and entries");
    std::size_t rows = j["rows"].get<std::size_t>();
    std::size_t cols = j["cols"].get<std::size_t>();
    const Json& entries = j["entries"];
    if (entries.size() != rows)
        throw ShapeError("matrix JSON: entries has " +
                         std::to_string(entries.size()) + " rows, expected " +
                         std::to_string(rows));
    ExactMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (entries[i].size() != cols)
            throw ShapeError("matrix JSON: row " + std::to_string(i) +
                             " has wrong length");
        for (std::size_t k = 0; k < cols; ++k)
            m.at(i, k) = parse_scalar(entries[i][k].get<std::string>());
    }
    return m;
}

Json quiver_to_json(const Quiver& q) {
    Json j;
    j["vertices"] = q.vertices();
    Json arrows = Json::array();
    for (const auto& a : q.arrows()) {
        Json e;
        e["src"] = a.src;
        e["dst"] = a.dst;
        e["weight"] = a.weight.to_string();
        e["name"] = a.name;
        arrows.push_back(std::move(e));
    }
    j["arrows"] = std::move(arrows);
    j["mode"] = mode_name(q.mode());
    return j;
}

Quiver quiver_from_json(const Json& j) {
    QuiverMode mode = QuiverMode::Weighted;
    if (j.contains("mode")) mode = mode_from_name(j["mode"].get<std::string>());
    if (j.contains("adjacency"))
        return Quiver::from_adjacency(matrix_from_json(j["adjacency"]), mode);
    if (!j.contains("vertices"))
        throw DomainError("quiver JSON needs vertices or adjacency");
    std::vector<std::string> vertices =
        j["vertices"].get<std::vector<std::string>>();
    std::vector<Arrow> arrows;
    if (j.contains("arrows"))
        for (const auto& e : j["arrows"]) {
            Arrow a;
            a.src = e.at("src").get<std::string>();
            a.dst = e.at("dst").get<std::string>();
            a.weight = e.contains("weight")
                           ? parse_scalar(e["weight"].get<std::string>())
                           : Scalar(1);
            if (e.contains("name")) a.name = e["name"].get<std::string>();
            arrows.push_back(std::move(a));
        }
    return Quiver(std::move(vertices), std::move(arrows), mode);
}

namespace {

Json position_json(const std::optional<std::pair<std::size_t, std::size_t>>& p) {
    if (!p) return nullptr;
    return Json::array({p->first, p->second});
}

}  // namespace

Json qybe_report_to_json(const QybeReport& r) {
    Json j;
    j["holds"] = r.holds;
    j["mu"] = r.mu ? Json(r.mu->to_string()) : Json(nullptr);
    j["mu_degenerate"] = r.mu_degenerate;
    j["a3_nonzero"] = r.a3_nonzero;
    j["witness"] = position_json(r.witness);
    return j;
}

Json classification_to_json(const Classification& c) {
    Json j;
    Json comps = Json::array();
    for (const auto& comp : c.components) {
        Json cj;
        cj["vertices"] = comp.vertices;
        cj["block"] = matrix_to_json(comp.block);
        cj["rank_one"] = comp.rank_one;
        if (comp.a_vector) {
            Json av = Json::array();
            for (const auto& s : *comp.a_vector) av.push_back(s.to_string());
            cj["a_vector"] = std::move(av);
        } else {
            cj["a_vector"] = nullptr;
        }
        cj["mu"] = comp.mu ? Json(comp.mu->to_string()) : Json(nullptr);
        cj["complete_weighted"] = comp.complete_weighted;
        comps.push_back(std::move(cj));
    }
    j["components"] = std::move(comps);
    j["isolated"] = c.isolated;
    j["global_mu"] = c.global_mu ? Json(c.global_mu->to_string()) : Json(nullptr);
    j["vertex_order"] = c.vertex_order;
    return j;
}

Json census_report_to_json(const CensusReport& r) {
    Json j;
    j["mode"] = mode_name(r.mode);
    j["max_vertices"] = r.max_vertices;
    j["graphs_checked"] = r.graphs_checked;
    j["satisfying"] = r.satisfying;
    Json ces = Json::array();
    for (const auto& ce : r.counterexamples) {
        Json cj;
        cj["vertices"] = ce.vertices;
        cj["adjacency"] = ce.adjacency;
        cj["tl_holds"] = ce.tl_holds;
        cj["structure_holds"] = ce.structure_holds;
        ces.push_back(std::move(cj));
    }
    j["counterexamples"] = std::move(ces);
    return j;
}

Json tl_generator_to_json(const TLGenerator& x) {
    Json j;
    j["matrix"] = matrix_to_json(x.matrix);
    j["mu"] = x.mu.to_string();
    if (x.source) {
        j["b"] = matrix_to_json(x.source->first);
        j["b_inv"] = matrix_to_json(x.source->second);
    }
    return j;
}

TLGenerator tl_generator_from_json(const Json& j) {
    TLGenerator x;
    x.matrix = matrix_from_json(j.at("matrix"));
    x.mu = parse_scalar(j.at("mu").get<std::string>());
    if (j.contains("b") && j.contains("b_inv"))
        x.source = std::make_pair(matrix_from_json(j["b"]),
                                  matrix_from_json(j["b_inv"]));
    return x;
}

Json hecke_candidate_to_json(const HeckeCandidate& c) {
    Json j;
    j["matrix"] = matrix_to_json(c.matrix);
    Json cons = Json::array();
    for (const auto& p : c.q_constraints) cons.push_back(p.to_string());
    j["q_constraints"] = std::move(cons);
    j["provenance"] = provenance_name(c.provenance);
    return j;
}

Json relation_set_to_json(const RelationSet& s) {
    Json j;
    j["generators"] = s.generators.names();
    Json rels = Json::array();
    for (const auto& r : s.relations) {
        Json rj;
        Json words = Json::array();
        Json coeffs = Json::array();
        for (const auto& [w, c] : r.terms()) {
            Json wj = Json::array();
            for (std::size_t g : w) wj.push_back(s.generators.name(g));
            words.push_back(std::move(wj));
            coeffs.push_back(c.to_string());
        }
        rj["words"] = std::move(words);
        rj["coeffs"] = std::move(coeffs);
        rels.push_back(std::move(rj));
    }
    j["relations"] = std::move(rels);
    j["canonical"] = s.canonical;
    return j;
}

Json presentation_to_json(const Presentation& p) {
    Json j;
    j["vertices"] = p.vertices;
    j["edges"] = p.edges;
    j["ghosts"] = p.ghosts;
    j["generators"] = p.generators.names();
    Json rels = Json::array();
    for (const auto& r : p.relations) {
        Json rj;
        Json words = Json::array();
        Json coeffs = Json::array();
        for (const auto& [w, c] : r.terms()) {
            Json wj = Json::array();
            for (std::size_t g : w) wj.push_back(p.generators.name(g));
            words.push_back(std::move(wj));
            coeffs.push_back(c.to_string());
        }
        rj["words"] = std::move(words);
        rj["coeffs"] = std::move(coeffs);
        rels.push_back(std::move(rj));
    }
    j["relations"] = std::move(rels);
    Json groups;
    for (const char* g : {"path", "CK1", "CK2", "RTT"}) {
        auto it = p.groups.find(g);
        groups[g] = it == p.groups.end() ? Json::array() : Json(it->second);
    }
    j["groups"] = std::move(groups);
    return j;
}

std::string relation_set_to_text(const RelationSet& s) {
    std::string out;
    for (const auto& r : s.relations) {
        out += r.to_string(s.generators);
        out += "\n";
    }
    return out;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw DomainError("JSON parse error in '" + path + "': " + e.what());
    }
    return j;
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write file '" + path + "'");
    out << j.dump(2) << "\n";
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write file '" + path + "'");
    out << text;
}

}  // namespace qybe
