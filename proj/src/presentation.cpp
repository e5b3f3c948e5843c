#include "qybe/presentation.hpp"

#include <cmath>
#include <sstream>

#include "qybe/errors.hpp"

namespace qybe {

std::string Presentation::to_text() const {
    std::ostringstream out;
    for (const char* group : {"path", "CK1", "CK2", "RTT"}) {
        auto it = groups.find(group);
        if (it == groups.end() || it->second.empty()) continue;
        out << "# " << group << "\n";
        for (std::size_t idx : it->second)
            out << relations[idx].to_string(generators) << "\n";
    }
    return out.str();
}

Presentation leavitt_presentation(
    const Quiver& q, const std::map<std::string, RttAssignment>& r_assignments) {
    Presentation p;
    p.vertices = q.vertices();
    for (const auto& e : q.arrows()) {
        p.edges.push_back(e.name);
        p.ghosts.push_back(e.name + "*");
    }
    std::vector<std::string> all = p.vertices;
    all.insert(all.end(), p.edges.begin(), p.edges.end());
    all.insert(all.end(), p.ghosts.begin(), p.ghosts.end());
    p.generators = GeneratorSet(all);

    auto gen = [&](const std::string& name) {
        return NCPoly::generator(p.generators.index(name));
    };
    auto add = [&](const std::string& group, NCPoly rel) {
        p.groups[group].push_back(p.relations.size());
        p.relations.push_back(std::move(rel));
    };

    // Vertex idempotents are orthogonal; edges and ghosts are supported on
    // their source/range vertices.
    for (const auto& u : p.vertices)
        for (const auto& v : p.vertices) {
            NCPoly prod = gen(u) * gen(v);
            add("path", u == v ? prod - gen(u) : prod);
        }
    for (const auto& e : q.arrows()) {
        add("path", gen(e.src) * gen(e.name) - gen(e.name));
        add("path", gen(e.name) * gen(e.dst) - gen(e.name));
        add("path", gen(e.dst) * (gen(e.name + "*")) - gen(e.name + "*"));
        add("path", gen(e.name + "*") * gen(e.src) - gen(e.name + "*"));
    }

    // CK1: e* f = delta_{e,f} r(e) for every pair of edges.
    for (const auto& e : q.arrows())
        for (const auto& f : q.arrows()) {
            NCPoly rel = gen(e.name + "*") * gen(f.name);
            if (e.name == f.name) rel = rel - gen(e.dst);
            add("CK1", rel);
        }

    // CK2 at regular vertices (finite quiver: out-degree >= 1).
    for (std::size_t vi = 0; vi < p.vertices.size(); ++vi) {
        if (q.out_degree(vi) == 0) continue;
        NCPoly sum;
        for (const auto& e : q.arrows())
            if (e.src == p.vertices[vi])
                sum += gen(e.name) * gen(e.name + "*");
        add("CK2", gen(p.vertices[vi]) - sum);
    }

    // RTT group per assigned vertex, expanded over the loop generators and
    // re-expressed on the presentation's generator set.
    for (const auto& [vertex, assignment] : r_assignments) {
        auto loops = q.loops_at(vertex);
        if (loops.empty())
            throw DomainError("vertex '" + vertex + "' has no loops for RTT");
        std::vector<std::string> loop_names;
        for (const auto* e : loops) loop_names.push_back(e->name);

        GeneratorSet local;
        NCMatrix t;
        if (assignment.layout == Layout::Diag) {
            t = diagonal_generator_matrix(loop_names, local);
        } else {
            auto k = loop_names.size();
            auto n = static_cast<std::size_t>(std::lround(std::sqrt(double(k))));
            if (n * n != k)
                throw DomainError("vertex '" + vertex + "' has " +
                                  std::to_string(k) +
                                  " loops; the full layout needs a square count");
            std::vector<std::vector<std::string>> grid(n);
            for (std::size_t i = 0; i < n; ++i)
                grid[i].assign(loop_names.begin() + i * n,
                               loop_names.begin() + (i + 1) * n);
            t = generator_matrix(grid, local);
        }
        if (assignment.r.rows() != t.rows() * t.rows() || !assignment.r.is_square())
            throw ShapeError("R for vertex '" + vertex + "' must be " +
                             std::to_string(t.rows() * t.rows()) + "x" +
                             std::to_string(t.rows() * t.rows()));
        RelationSet rtt = rtt_relations(assignment.r, t, local, assignment.layout);
        for (const auto& rel : rtt.relations) {
            NCPoly mapped;
            for (const auto& [w, c] : rel.terms()) {
                Word translated;
                for (std::size_t g : w)
                    translated.push_back(p.generators.index(local.name(g)));
                mapped += NCPoly::monomial(c, translated);
            }
            add("RTT", mapped);
        }
    }
    return p;
}

}  // namespace qybe
