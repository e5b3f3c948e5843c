#include "qybe/ncpoly.hpp"

#include <algorithm>
#include <sstream>

#include "qybe/errors.hpp"

namespace qybe {

GeneratorSet::GeneratorSet(std::vector<std::string> names)
    : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (!index_.emplace(names_[i], i).second)
            throw DomainError("duplicate generator name '" + names_[i] + "'");
}

std::size_t GeneratorSet::index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw DomainError("unknown generator '" + name + "'");
    return it->second;
}

int word_compare(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] != b[k]) return a[k] < b[k] ? -1 : 1;
    return 0;
}

NCPoly NCPoly::constant(const Scalar& c) { return monomial(c, {}); }

NCPoly NCPoly::generator(std::size_t index) {
    return monomial(Scalar(1), {index});
}

NCPoly NCPoly::monomial(const Scalar& c, Word w) {
    NCPoly p;
    if (!c.is_zero()) p.terms_.emplace(std::move(w), c);
    return p;
}

int NCPoly::degree() const {
    int d = -1;
    for (const auto& [w, c] : terms_) d = std::max(d, static_cast<int>(w.size()));
    return d;
}

Scalar NCPoly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar(0) : it->second;
}

const Word& NCPoly::leading_word() const {
    if (terms_.empty()) throw DomainError("leading word of the zero polynomial");
    return terms_.begin()->first;
}

NCPoly NCPoly::operator-() const {
    NCPoly r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
    NCPoly r = *this;
    for (const auto& [w, c] : o.terms_) {
        auto it = r.terms_.find(w);
        if (it == r.terms_.end()) {
            r.terms_.emplace(w, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

NCPoly NCPoly::operator-(const NCPoly& o) const { return *this + (-o); }

NCPoly NCPoly::operator*(const NCPoly& o) const {
    NCPoly r;
    for (const auto& [w1, c1] : terms_)
        for (const auto& [w2, c2] : o.terms_) {
            Word w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            Scalar c = c1 * c2;
            auto it = r.terms_.find(w);
            if (it == r.terms_.end()) {
                if (!c.is_zero()) r.terms_.emplace(std::move(w), c);
            } else {
                it->second += c;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    return r;
}

NCPoly NCPoly::operator*(const Scalar& c) const {
    NCPoly r;
    if (c.is_zero()) return r;
    for (const auto& [w, k] : terms_) r.terms_.emplace(w, k * c);
    return r;
}

NCPoly NCPoly::substitute_zero(const std::vector<std::size_t>& gens) const {
    NCPoly r;
    for (const auto& [w, c] : terms_) {
        bool killed = false;
        for (std::size_t g : w)
            if (std::find(gens.begin(), gens.end(), g) != gens.end()) {
                killed = true;
                break;
            }
        if (!killed) r.terms_.emplace(w, c);
    }
    return r;
}

NCPoly NCPoly::abelianization() const {
    NCPoly r;
    for (const auto& [w, c] : terms_) {
        Word sorted = w;
        std::sort(sorted.begin(), sorted.end());
        auto it = r.terms_.find(sorted);
        if (it == r.terms_.end()) {
            r.terms_.emplace(std::move(sorted), c);
        } else {
            it->second += c;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

std::string NCPoly::to_string(const GeneratorSet& gens) const {
    if (terms_.empty()) return "0";
    bool concat = true;
    for (const auto& n : gens.names())
        if (n.size() != 1) concat = false;

    auto word_str = [&](const Word& w) {
        std::string s;
        for (std::size_t k = 0; k < w.size(); ++k) {
            if (k && !concat) s += " ";
            s += gens.name(w[k]);
        }
        return s;
    };

    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        std::string cs = c.to_string();
        bool neg = cs.size() > 1 && cs[0] == '-';
        std::string mag = neg ? (-c).to_string() : cs;
        bool composite = mag.find(' ') != std::string::npos;
        if (first) {
            if (neg) out << "-";
        } else {
            out << (neg ? " - " : " + ");
        }
        first = false;
        if (w.empty()) {
            out << (composite ? "(" + mag + ")" : mag);
            continue;
        }
        if (mag != "1")
            out << (composite ? "(" + mag + ")" : mag) << "*";
        out << word_str(w);
    }
    return out.str();
}

NCMatrix NCMatrix::identity(std::size_t n) {
    NCMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = NCPoly::constant(Scalar(1));
    return m;
}

NCMatrix NCMatrix::from_scalar(const ExactMatrix& s) {
    NCMatrix m(s.rows(), s.cols());
    for (std::size_t i = 0; i < s.rows(); ++i)
        for (std::size_t j = 0; j < s.cols(); ++j)
            if (!s.at(i, j).is_zero()) m.at(i, j) = NCPoly::constant(s.at(i, j));
    return m;
}

NCMatrix NCMatrix::operator*(const NCMatrix& o) const {
    if (cols_ != o.rows_) throw ShapeError("NC matrix product shape mismatch");
    NCMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const NCPoly& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const NCPoly& b = o.at(k, j);
                if (b.is_zero()) continue;
                r.at(i, j) += a * b;
            }
        }
    return r;
}

NCMatrix NCMatrix::operator-(const NCMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw ShapeError("NC matrix difference shape mismatch");
    NCMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r.at(i, j) = at(i, j) - o.at(i, j);
    return r;
}

NCMatrix nc_kron(const NCMatrix& a, const NCMatrix& b) {
    NCMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const NCPoly& f = a.at(i, j);
            if (f.is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    const NCPoly& g = b.at(k, l);
                    if (g.is_zero()) continue;
                    r.at(i * b.rows() + k, j * b.cols() + l) = f * g;
                }
        }
    return r;
}

}  // namespace qybe
