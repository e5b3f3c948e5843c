#include "qybe/relations.hpp"

#include <algorithm>
#include <set>

#include "qybe/errors.hpp"

namespace qybe {

Layout layout_from_name(const std::string& name) {
    if (name == "full") return Layout::Full;
    if (name == "diag") return Layout::Diag;
    throw DomainError("unknown layout '" + name + "' (expected full or diag)");
}

std::string layout_name(Layout l) { return l == Layout::Full ? "full" : "diag"; }

NCMatrix generator_matrix(const std::vector<std::vector<std::string>>& names,
                          GeneratorSet& gens_out) {
    std::vector<std::string> flat;
    for (const auto& row : names)
        for (const auto& n : row) flat.push_back(n);
    gens_out = GeneratorSet(flat);  // throws on duplicates
    NCMatrix t(names.size(), names.empty() ? 0 : names[0].size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i].size() != t.cols())
            throw ShapeError("ragged generator grid");
        for (std::size_t j = 0; j < t.cols(); ++j)
            t.at(i, j) = NCPoly::generator(k++);
    }
    return t;
}

NCMatrix diagonal_generator_matrix(const std::vector<std::string>& names,
                                   GeneratorSet& gens_out) {
    gens_out = GeneratorSet(names);
    NCMatrix t(names.size(), names.size());
    for (std::size_t i = 0; i < names.size(); ++i)
        t.at(i, i) = NCPoly::generator(i);
    return t;
}

namespace {

RelationSet collect_entries(const NCMatrix& defect, const GeneratorSet& gens) {
    RelationSet s;
    s.generators = gens;
    for (std::size_t i = 0; i < defect.rows(); ++i)
        for (std::size_t j = 0; j < defect.cols(); ++j)
            if (!defect.at(i, j).is_zero()) s.relations.push_back(defect.at(i, j));
    return canonicalize(s);
}

}  // namespace

RelationSet rtt_relations(const ExactMatrix& r, const NCMatrix& t,
                          const GeneratorSet& gens, Layout layout) {
    if (t.rows() != t.cols()) throw ShapeError("generator matrix must be square");
    std::size_t n = t.rows();
    if (!r.is_square() || r.rows() != n * n)
        throw ShapeError("R must be n^2 x n^2 for an n x n generator matrix");

    if (layout == Layout::Diag) {
        // Hecke eigenvalue condition (R - qI) w = 0 on the column of
        // diagonal-generator products w_(i,j) = t_i t_j.
        NCMatrix w(n * n, 1);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                w.at(pair_index(i, j, n), 0) = t.at(i, i) * t.at(j, j);
        ExactMatrix r_minus_q =
            r - ExactMatrix::identity(n * n) * Scalar::q();
        NCMatrix defect = NCMatrix::from_scalar(r_minus_q) * w;
        return collect_entries(defect, gens);
    }

    NCMatrix id = NCMatrix::identity(n);
    NCMatrix x1 = nc_kron(id, t);  // leg labelling: see header
    NCMatrix x2 = nc_kron(t, id);
    NCMatrix rr = NCMatrix::from_scalar(r);
    NCMatrix defect = rr * x1 * x2 - x2 * x1 * rr;
    return collect_entries(defect, gens);
}

RelationSet canonicalize(const RelationSet& s) {
    RelationSet out;
    out.generators = s.generators;
    out.canonical = true;
    std::vector<NCPoly> rows;
    for (const auto& r : s.relations)
        if (!r.is_zero()) rows.push_back(r);

    // Gauss-Jordan with pivots on deglex-smallest words.
    std::vector<NCPoly> basis;
    for (NCPoly p : rows) {
        for (const auto& b : basis) {
            if (p.is_zero()) break;
            Scalar c = p.coeff(b.leading_word());
            if (!c.is_zero()) p = p - b * c;
        }
        if (p.is_zero()) continue;
        p = p * p.coeff(p.leading_word()).inverse();
        // Eliminate the new pivot from the existing basis.
        for (auto& b : basis) {
            Scalar c = b.coeff(p.leading_word());
            if (!c.is_zero()) b = b - p * c;
        }
        basis.push_back(std::move(p));
    }
    std::sort(basis.begin(), basis.end(), [](const NCPoly& a, const NCPoly& b) {
        return word_compare(a.leading_word(), b.leading_word()) < 0;
    });
    out.relations = std::move(basis);
    return out;
}

RelationSet frt_relations(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            names.push_back("t" + std::to_string(i) + std::to_string(j));
    RelationSet s;
    s.generators = GeneratorSet(names);
    auto t = [&](std::size_t i, std::size_t j) {  // 1-based
        return NCPoly::generator((i - 1) * n + (j - 1));
    };
    Scalar q = Scalar::q();
    Scalar lambda = q - Scalar::q_pow(-1);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            for (std::size_t l = j + 1; l <= n; ++l)  // same row
                s.relations.push_back(t(i, j) * t(i, l) - t(i, l) * t(i, j) * q);
            for (std::size_t k = i + 1; k <= n; ++k)  // same column
                s.relations.push_back(t(i, j) * t(k, j) - t(k, j) * t(i, j) * q);
            for (std::size_t k = i + 1; k <= n; ++k)
                for (std::size_t l = 1; l <= n; ++l) {
                    if (l < j)  // cross pair commutes
                        s.relations.push_back(t(i, j) * t(k, l) - t(k, l) * t(i, j));
                    else if (l > j)  // q-commutator
                        s.relations.push_back(t(i, j) * t(k, l) - t(k, l) * t(i, j) -
                                              t(i, l) * t(k, j) * lambda);
                }
        }
    return canonicalize(s);
}

NCPoly reduce_against(const NCPoly& p, const RelationSet& canonical_set) {
    NCPoly r = p;
    for (const auto& b : canonical_set.relations) {
        if (r.is_zero()) break;
        Scalar c = r.coeff(b.leading_word());
        if (!c.is_zero()) r = r - b * c;
    }
    return r;
}

SpanComparison span_equal(const RelationSet& s1, const RelationSet& s2) {
    if (!(s1.generators == s2.generators))
        throw DomainError("span_equal needs identical generator lists");
    RelationSet c1 = s1.canonical ? s1 : canonicalize(s1);
    RelationSet c2 = s2.canonical ? s2 : canonicalize(s2);
    SpanComparison cmp;
    for (const auto& r : c2.relations) {
        NCPoly rem = reduce_against(r, c1);
        if (!rem.is_zero()) {
            cmp.witness = rem;
            cmp.witness_side = 2;
            return cmp;
        }
    }
    for (const auto& r : c1.relations) {
        NCPoly rem = reduce_against(r, c2);
        if (!rem.is_zero()) {
            cmp.witness = rem;
            cmp.witness_side = 1;
            return cmp;
        }
    }
    cmp.equal = true;
    return cmp;
}

}  // namespace qybe
