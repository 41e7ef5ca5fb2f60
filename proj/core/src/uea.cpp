#include "casimir/uea.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "casimir/error.hpp"

namespace casimir {

LieRelations::LieRelations(int count, const std::vector<Bracket>& brackets) : count_(count) {
    if (count < 0) throw Error(ErrorKind::InvalidArgument, "negative generator count");
    c_.assign(static_cast<std::size_t>(count * count * count), Scalar{});
    auto at = [&](int i, int j, int k) -> Scalar& { return c_[static_cast<std::size_t>((i * count_ + j) * count_ + k)]; };
    for (const auto& b : brackets) {
        if (b.i < 1 || b.i > count || b.j < 1 || b.j > count || b.i == b.j) {
            throw Error(ErrorKind::InvalidArgument, "bracket index out of range");
        }
        for (const auto& [k, v] : b.out) {
            if (k < 1 || k > count) throw Error(ErrorKind::InvalidArgument, "bracket output out of range");
            at(b.i - 1, b.j - 1, k - 1) += v;
            at(b.j - 1, b.i - 1, k - 1) -= v;
        }
    }
    for (int x = 0; x < count; ++x)
        for (int y = x + 1; y < count; ++y)
            for (int z = y + 1; z < count; ++z)
                for (int k = 0; k < count; ++k) {
                    Scalar s;
                    for (int l = 0; l < count; ++l) s += c(x, y, l) * c(l, z, k) + c(y, z, l) * c(l, x, k) + c(z, x, l) * c(l, y, k);
                    if (!s.is_zero()) throw Error(ErrorKind::RelationViolation, "Jacobi identity fails");
                }
}

LieRelations LieRelations::from_algebra(const MetricReductiveAlgebra& L) { return LieRelations(L.total(), L.brackets()); }

LieRelations LieRelations::rescaled(const std::vector<Scalar>& s) const {
    if (static_cast<int>(s.size()) != count_) throw Error(ErrorKind::DimensionMismatch, "rescaling vector size mismatch");
    std::vector<Bracket> out;
    for (int i = 0; i < count_; ++i)
        for (int j = i + 1; j < count_; ++j) {
            Bracket b{i + 1, j + 1, {}};
            for (int k = 0; k < count_; ++k) {
                if (c(i, j, k).is_zero()) continue;
                b.out.emplace_back(k + 1, s[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(j)] * c(i, j, k) /
                                              s[static_cast<std::size_t>(k)]);
            }
            out.push_back(std::move(b));
        }
    return LieRelations(count_, out);
}

OperatorPolynomial OperatorPolynomial::constant(const Matrix& a) {
    OperatorPolynomial p(a.rows());
    p.add({}, a);
    return p;
}

OperatorPolynomial OperatorPolynomial::generator(int g, const Matrix& a) {
    OperatorPolynomial p(a.rows());
    p.add({g}, a);
    return p;
}

Matrix OperatorPolynomial::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Matrix(d_, d_) : it->second;
}

int OperatorPolynomial::degree() const {
    int deg = 0;
    for (const auto& [w, a] : terms_) deg = std::max(deg, static_cast<int>(w.size()));
    return deg;
}

bool OperatorPolynomial::is_ordered() const {
    for (const auto& [w, a] : terms_)
        if (!std::is_sorted(w.begin(), w.end())) return false;
    return true;
}

void OperatorPolynomial::add(const Word& w, const Matrix& a) {
    if (a.rows() != d_ || a.cols() != d_) throw Error(ErrorKind::DimensionMismatch, "coefficient size mismatch");
    auto [it, inserted] = terms_.emplace(w, a);
    if (!inserted) it->second += a;
    if (it->second.is_zero()) terms_.erase(it);
}

OperatorPolynomial& OperatorPolynomial::operator+=(const OperatorPolynomial& o) {
    for (const auto& [w, a] : o.terms_) add(w, a);
    return *this;
}

OperatorPolynomial& OperatorPolynomial::operator-=(const OperatorPolynomial& o) {
    for (const auto& [w, a] : o.terms_) add(w, -a);
    return *this;
}

OperatorPolynomial OperatorPolynomial::conjugated(const Matrix& p) const {
    Matrix pinv = inverse(p);
    OperatorPolynomial out(d_);
    for (const auto& [w, a] : terms_) out.add(w, pinv * a * p);
    return out;
}

std::string OperatorPolynomial::str() const {
    std::ostringstream os;
    for (const auto& [w, a] : terms_) {
        os << "[";
        for (std::size_t k = 0; k < w.size(); ++k) os << (k ? " " : "") << "g" << w[k] + 1;
        os << "]\n" << a.str();
    }
    return os.str();
}

OperatorPolynomial normal_order(int d, const std::vector<std::pair<Word, Matrix>>& raw, const LieRelations& rel,
                                const RewritePicker& pick) {
    std::map<Word, Matrix> work;
    auto push = [&](const Word& w, const Matrix& a) {
        if (a.is_zero()) return;
        auto [it, inserted] = work.emplace(w, a);
        if (!inserted) {
            it->second += a;
            if (it->second.is_zero()) work.erase(it);
        }
    };
    for (const auto& [w, a] : raw) {
        if (static_cast<int>(w.size()) > OperatorPolynomial::kMaxDegree) {
            throw Error(ErrorKind::DegreeOverflow, "degree overflow: word of length " + std::to_string(w.size()));
        }
        for (int g : w)
            if (g < 0 || g >= rel.count()) throw Error(ErrorKind::InvalidArgument, "unknown generator");
        push(w, a);
    }
    OperatorPolynomial out(d);
    while (!work.empty()) {
        auto it = work.begin();
        Word w = it->first;
        Matrix a = std::move(it->second);
        work.erase(it);
        std::vector<std::size_t> inversions;
        for (std::size_t k = 0; k + 1 < w.size(); ++k)
            if (w[k] > w[k + 1]) inversions.push_back(k);
        if (inversions.empty()) {
            out.add(w, a);
            continue;
        }
        const std::size_t k = pick ? pick(w, inversions) : inversions.front();
        if (std::find(inversions.begin(), inversions.end(), k) == inversions.end()) {
            throw Error(ErrorKind::InvalidArgument, "rewrite picker returned a non-inversion");
        }
        // u b a v -> u a b v + u [b,a] v
        Word swapped = w;
        std::swap(swapped[k], swapped[k + 1]);
        push(swapped, a);
        for (int g = 0; g < rel.count(); ++g) {
            const Scalar& c = rel.c(w[k], w[k + 1], g);
            if (c.is_zero()) continue;
            Word reduced(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
            reduced.push_back(g);
            reduced.insert(reduced.end(), w.begin() + static_cast<std::ptrdiff_t>(k + 2), w.end());
            push(reduced, a * ComplexScalar(c));
        }
    }
    return out;
}

OperatorPolynomial multiply(const OperatorPolynomial& p, const OperatorPolynomial& q, const LieRelations& rel,
                            const RewritePicker& pick) {
    if (p.coeff_dim() != q.coeff_dim()) throw Error(ErrorKind::DimensionMismatch, "coefficient size mismatch");
    std::vector<std::pair<Word, Matrix>> raw;
    for (const auto& [wp, a] : p.terms())
        for (const auto& [wq, b] : q.terms()) {
            Word w = wp;
            w.insert(w.end(), wq.begin(), wq.end());
            if (static_cast<int>(w.size()) > OperatorPolynomial::kMaxDegree) {
                throw Error(ErrorKind::DegreeOverflow, "degree overflow in product");
            }
            raw.emplace_back(std::move(w), a * b);
        }
    return normal_order(p.coeff_dim(), raw, rel, pick);
}

void check_representation(const std::vector<Matrix>& rep, const LieRelations& rel) {
    if (static_cast<int>(rep.size()) != rel.count()) throw Error(ErrorKind::DimensionMismatch, "one matrix per generator required");
    for (int i = 0; i < rel.count(); ++i)
        for (int j = i + 1; j < rel.count(); ++j) {
            Matrix lhs = commutator(rep[static_cast<std::size_t>(i)], rep[static_cast<std::size_t>(j)]);
            for (int k = 0; k < rel.count(); ++k)
                if (!rel.c(i, j, k).is_zero()) lhs -= rep[static_cast<std::size_t>(k)] * ComplexScalar(rel.c(i, j, k));
            if (!lhs.is_zero()) {
                throw Error(ErrorKind::RelationViolation,
                            "representation violates [g" + std::to_string(i + 1) + ", g" + std::to_string(j + 1) + "]");
            }
        }
}

Matrix evaluate_in_representation(const OperatorPolynomial& p, const std::vector<Matrix>& rep, const LieRelations& rel) {
    check_representation(rep, rel);
    const int k = rep.empty() ? 1 : rep.front().rows();
    Matrix out(p.coeff_dim() * k, p.coeff_dim() * k);
    for (const auto& [w, a] : p.terms()) {
        Matrix r = Matrix::identity(k);
        for (int g : w) r = r * rep[static_cast<std::size_t>(g)];
        out += kron(a, r);
    }
    return out;
}

ComplexScalar ReducedOperator::coefficient(const Word& w) const {
    auto it = terms.find(w);
    return it == terms.end() ? ComplexScalar{} : it->second;
}

namespace {

std::string magnitude_prefix(const Scalar& r) {
    if (r == Scalar(1)) return "";
    if (r == Scalar::sqrt3()) return "s3*";
    return r.str() + "*";
}

// Coefficient prefix for "c*symbol"; empty for c = 1.
std::string coeff_prefix(const ComplexScalar& c, bool& negative) {
    negative = false;
    if (c.is_real()) {
        Scalar r = c.re();
        if (r.sign() < 0) {
            negative = true;
            r = -r;
        }
        return magnitude_prefix(r);
    }
    if (c.re().is_zero()) {
        Scalar im = c.im();
        if (im.sign() < 0) {
            negative = true;
            im = -im;
        }
        return magnitude_prefix(im) + "i*";
    }
    return "(" + c.str() + ")*";
}

}  // namespace

std::string ReducedOperator::str() const {
    std::vector<std::string> parts;
    std::vector<bool> negs;
    auto emit = [&](const ComplexScalar& c, const std::string& symbol) {
        bool neg = false;
        std::string text;
        if (symbol.empty()) {
            text = coeff_prefix(c, neg);
            if (text.empty()) {
                text = "1";
            } else {
                text.pop_back();  // drop the trailing '*'
            }
        } else {
            text = coeff_prefix(c, neg) + symbol;
        }
        parts.push_back(text);
        negs.push_back(neg);
    };
    // Quadratic part: detect c * sum(X_i^2) over the diagonal words.
    std::map<Word, ComplexScalar> quad;
    for (const auto& [w, c] : terms)
        if (w.size() == 2) quad.emplace(w, c);
    int max_gen = -1;
    for (const auto& [w, c] : terms)
        for (int g : w) max_gen = std::max(max_gen, g);
    bool uniform = !quad.empty();
    if (uniform) {
        const ComplexScalar c0 = quad.begin()->second;
        for (int g = 0; g <= max_gen && uniform; ++g) {
            auto it = quad.find(Word{g, g});
            uniform = it != quad.end() && it->second == c0;
        }
        uniform = uniform && static_cast<int>(quad.size()) == max_gen + 1;
        if (uniform) emit(c0, "sum(X^2)");
    }
    if (!uniform) {
        for (const auto& [w, c] : quad) {
            emit(c, w[0] == w[1] ? "X" + std::to_string(w[0] + 1) + "^2"
                                 : "X" + std::to_string(w[0] + 1) + "*X" + std::to_string(w[1] + 1));
        }
    }
    if (auto it = terms.find(Word{}); it != terms.end()) emit(it->second, "");
    for (const auto& [w, c] : terms)
        if (w.size() == 1) emit(c, "X" + std::to_string(w[0] + 1));
    if (parts.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k == 0) {
            out += (negs[k] ? "-" : "") + parts[k];
        } else {
            out += (negs[k] ? " - " : " + ") + parts[k];
        }
    }
    return out;
}

std::vector<ReducedOperator> reduce_to_casimir(const OperatorPolynomial& p,
                                               const std::map<int, std::vector<ComplexScalar>>& quasiperiodicity) {
    const int d = p.coeff_dim();
    for (const auto& [g, vals] : quasiperiodicity) {
        if (static_cast<int>(vals.size()) != d) {
            throw Error(ErrorKind::InvalidArgument, "quasi-periodicity map needs one eigenvalue per component");
        }
    }
    if (p.is_zero()) return {};
    std::map<Word, Matrix> acc;
    for (const auto& [w, a] : p.terms()) {
        std::size_t split = w.size();
        while (split > 0 && quasiperiodicity.count(w[split - 1])) --split;
        for (std::size_t k = 0; k < split; ++k) {
            if (quasiperiodicity.count(w[k])) {
                throw Error(ErrorKind::InvalidArgument, "isotropy generator is not right-most in a monomial");
            }
        }
        std::vector<ComplexScalar> diag(static_cast<std::size_t>(d), ComplexScalar(1));
        for (std::size_t k = split; k < w.size(); ++k) {
            const auto& vals = quasiperiodicity.at(w[k]);
            for (int c = 0; c < d; ++c) diag[static_cast<std::size_t>(c)] *= vals[static_cast<std::size_t>(c)];
        }
        Word head(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(split));
        Matrix m = a * Matrix::diagonal(diag);
        auto [it, inserted] = acc.emplace(head, m);
        if (!inserted) it->second += m;
    }
    std::vector<ReducedOperator> out(static_cast<std::size_t>(d));
    for (int c = 0; c < d; ++c) out[static_cast<std::size_t>(c)].component = c;
    for (const auto& [w, m] : acc) {
        if (!m.is_diagonal()) {
            throw Error(ErrorKind::InvalidArgument, "reduced coefficients are not diagonal in the component basis");
        }
        for (int c = 0; c < d; ++c)
            if (!m(c, c).is_zero()) out[static_cast<std::size_t>(c)].terms.emplace(w, m(c, c));
    }
    return out;
}

ReducedOperator make_reduced(int component, int m, const ComplexScalar& laplace, const std::map<int, ComplexScalar>& linear,
                             const ComplexScalar& constant) {
    ReducedOperator r;
    r.component = component;
    if (!laplace.is_zero())
        for (int i = 0; i < m; ++i) r.terms.emplace(Word{i, i}, laplace);
    for (const auto& [g, c] : linear)
        if (!c.is_zero()) r.terms.emplace(Word{g}, c);
    if (!constant.is_zero()) r.terms.emplace(Word{}, constant);
    return r;
}

}  // namespace casimir
