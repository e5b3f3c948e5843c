#include "qybe/quiver.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "qybe/errors.hpp"

namespace qybe {

std::string mode_name(QuiverMode m) {
    switch (m) {
        case QuiverMode::Simple: return "simple";
        case QuiverMode::Loops: return "loops";
        case QuiverMode::Multi: return "multi";
        case QuiverMode::Weighted: return "weighted";
    }
    return "weighted";
}

QuiverMode mode_from_name(const std::string& name) {
    if (name == "simple") return QuiverMode::Simple;
    if (name == "loops") return QuiverMode::Loops;
    if (name == "multi") return QuiverMode::Multi;
    if (name == "weighted") return QuiverMode::Weighted;
    throw DomainError("unknown quiver mode '" + name + "'");
}

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows,
               QuiverMode mode)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)), mode_(mode) {
    std::map<std::string, std::size_t> seen;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (!seen.emplace(vertices_[i], i).second)
            throw DomainError("duplicate vertex name '" + vertices_[i] + "'");
    }
    std::size_t auto_id = 0;
    for (auto& a : arrows_) {
        if (!seen.count(a.src))
            throw DomainError("arrow source '" + a.src + "' is not a vertex");
        if (!seen.count(a.dst))
            throw DomainError("arrow target '" + a.dst + "' is not a vertex");
        if (a.weight.is_zero())
            throw DomainError("zero-weight arrow " + a.src + " -> " + a.dst +
                              " (omit the arrow instead)");
        if (a.name.empty()) a.name = "e" + std::to_string(++auto_id);
    }
}

Quiver Quiver::from_adjacency(const ExactMatrix& a, QuiverMode mode) {
    if (!a.is_square()) throw ShapeError("adjacency matrix must be square");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < a.rows(); ++i)
        names.push_back("v" + std::to_string(i + 1));
    std::vector<Arrow> arrows;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!a.at(i, j).is_zero())
                arrows.push_back({names[i], names[j], a.at(i, j), ""});
    return Quiver(std::move(names), std::move(arrows), mode);
}

std::size_t Quiver::vertex_index(const std::string& name) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), name);
    if (it == vertices_.end())
        throw DomainError("unknown vertex '" + name + "'");
    return static_cast<std::size_t>(it - vertices_.begin());
}

ExactMatrix Quiver::adjacency() const {
    ExactMatrix a(vertices_.size(), vertices_.size());
    for (const auto& e : arrows_) {
        std::size_t i = vertex_index(e.src), j = vertex_index(e.dst);
        a.at(i, j) += e.weight;
    }
    return a;
}

std::vector<const Arrow*> Quiver::loops_at(const std::string& vertex) const {
    std::vector<const Arrow*> out;
    for (const auto& e : arrows_)
        if (e.src == vertex && e.dst == vertex) out.push_back(&e);
    return out;
}

std::size_t Quiver::out_degree(std::size_t vertex) const {
    const std::string& name = vertices_[vertex];
    std::size_t d = 0;
    for (const auto& e : arrows_)
        if (e.src == name) ++d;
    return d;
}

Quiver kronecker_square(const Quiver& q) {
    std::vector<std::string> vertices;
    vertices.reserve(q.num_vertices() * q.num_vertices());
    for (const auto& u : q.vertices())
        for (const auto& v : q.vertices())
            vertices.push_back("[" + u + "," + v + "]");
    std::vector<Arrow> arrows;
    arrows.reserve(q.arrows().size() * q.arrows().size());
    for (const auto& e : q.arrows())
        for (const auto& f : q.arrows())
            arrows.push_back({"[" + e.src + "," + f.src + "]",
                              "[" + e.dst + "," + f.dst + "]",
                              e.weight * f.weight,
                              "[" + e.name + "," + f.name + "]"});
    return Quiver(std::move(vertices), std::move(arrows), q.mode());
}

QybeReport satisfies_qybe(const Quiver& q) {
    QybeReport rep;
    std::size_t n = q.num_vertices();
    if (n == 0) {
        rep.holds = true;
        rep.mu = Scalar(0);
        rep.mu_degenerate = true;
        return rep;
    }
    ExactMatrix a = q.adjacency();
    ExactMatrix a3 = a * a * a;
    rep.a3_nonzero = !a3.is_zero();

    ExactMatrix defect = braid_defect(kron(a, a), n);
    rep.holds = defect.is_zero();
    if (!rep.holds) rep.witness = defect.first_nonzero();

    MuResult mu = tl_scalar(a);
    if (mu.exists) {
        rep.mu = mu.mu;
        rep.mu_degenerate = mu.degenerate;
    }
    // Theorem route and direct defect must agree when A^3 != 0.
    if (rep.a3_nonzero && rep.holds != mu.exists)
        throw Error("internal inconsistency: braid defect and A^2 = mu A "
                    "disagree on a matrix with A^3 != 0");
    return rep;
}

namespace {

// Connected components of the underlying (symmetrized) graph.
std::vector<std::vector<std::size_t>> components_of(const ExactMatrix& a) {
    std::size_t n = a.rows();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!a.at(i, j).is_zero()) parent[find(i)] = find(j);
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);
    std::vector<std::vector<std::size_t>> out;
    for (auto& [root, members] : groups) out.push_back(std::move(members));
    // Deterministic: order components by smallest member.
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x[0] < y[0]; });
    return out;
}

bool vertex_is_isolated(const ExactMatrix& a, std::size_t v) {
    for (std::size_t j = 0; j < a.cols(); ++j)
        if (!a.at(v, j).is_zero() || !a.at(j, v).is_zero()) return false;
    return true;
}

}  // namespace

Classification classify(const Quiver& q) {
    ExactMatrix a = q.adjacency();
    if (!a.is_symmetric())
        throw DomainError("classify requires a symmetric adjacency matrix");
    Classification cls;
    for (const auto& comp : components_of(a)) {
        if (comp.size() == 1 && vertex_is_isolated(a, comp[0])) {
            cls.isolated.push_back(q.vertices()[comp[0]]);
            continue;
        }
        ComponentInfo info;
        info.block = ExactMatrix(comp.size(), comp.size());
        for (std::size_t i = 0; i < comp.size(); ++i) {
            info.vertices.push_back(q.vertices()[comp[i]]);
            for (std::size_t j = 0; j < comp.size(); ++j)
                info.block.at(i, j) = a.at(comp[i], comp[j]);
        }
        if (auto factors = rank_one_factor(info.block)) {
            info.rank_one = true;
            if (factors->symmetric_form) {
                std::vector<Scalar> av;
                for (std::size_t i = 0; i < comp.size(); ++i)
                    av.push_back(factors->u.at(i, 0));
                info.a_vector = std::move(av);
            }
        }
        MuResult mu = tl_scalar(info.block);
        if (mu.exists) info.mu = mu.mu;
        info.complete_weighted = true;
        for (std::size_t i = 0; i < comp.size() && info.complete_weighted; ++i)
            for (std::size_t j = 0; j < comp.size(); ++j)
                if (info.block.at(i, j).is_zero()) {
                    info.complete_weighted = false;
                    break;
                }
        cls.components.push_back(std::move(info));
    }
    // Global mu exists iff every block has one and they all agree; with no
    // nontrivial components the adjacency is zero and mu = 0 by convention.
    if (cls.components.empty()) {
        cls.global_mu = Scalar(0);
    } else {
        bool all = true;
        for (const auto& c : cls.components)
            if (!c.mu || (cls.components[0].mu && *c.mu != *cls.components[0].mu))
                all = false;
        if (all && cls.components[0].mu) cls.global_mu = cls.components[0].mu;
    }
    for (const auto& c : cls.components)
        cls.vertex_order.insert(cls.vertex_order.end(), c.vertices.begin(),
                                c.vertices.end());
    cls.vertex_order.insert(cls.vertex_order.end(), cls.isolated.begin(),
                            cls.isolated.end());
    return cls;
}

Quiver groupoid_quiver(const std::vector<std::vector<long>>& components) {
    if (components.empty())
        throw DomainError("groupoid quiver needs at least one component");
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;
    for (std::size_t c = 0; c < components.size(); ++c) {
        const auto& g = components[c];
        if (g.empty())
            throw DomainError("groupoid component " + std::to_string(c + 1) +
                              " is empty");
        std::vector<std::string> names;
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (g[i] < 1)
                throw DomainError("automorphism-group size must be >= 1");
            names.push_back("c" + std::to_string(c + 1) + "v" +
                            std::to_string(i + 1));
        }
        // |Hom(i, j)| = |Aut(j)| within a component.
        for (std::size_t i = 0; i < g.size(); ++i)
            for (std::size_t j = 0; j < g.size(); ++j)
                arrows.push_back({names[i], names[j],
                                  Scalar(make_rational(g[j])), ""});
        vertices.insert(vertices.end(), names.begin(), names.end());
    }
    return Quiver(std::move(vertices), std::move(arrows), QuiverMode::Multi);
}

}  // namespace qybe
