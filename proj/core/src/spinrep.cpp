#include "casimir/spinrep.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "casimir/error.hpp"

namespace casimir {

SpinEndomorphism& SpinEndomorphism::operator+=(const SpinEndomorphism& o) {
    mat += o.mat;
    return *this;
}

SpinEndomorphism& SpinEndomorphism::operator-=(const SpinEndomorphism& o) {
    mat -= o.mat;
    return *this;
}

SpinEndomorphism operator*(const SpinEndomorphism& a, const SpinEndomorphism& b) { return {a.n, a.mat * b.mat}; }

namespace {

ComplexScalar i_power(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return 1;
        case 1: return ComplexScalar::i();
        case 2: return -1;
        default: return -ComplexScalar::i();
    }
}

}  // namespace

SpinRepresentation::SpinRepresentation(int n) : n_(n) {
    if (n < 3 || n > kMaxDim) throw Error(ErrorKind::InvalidArgument, "spin representation needs 3 <= n <= 8");
    const int m = n / 2;
    const Monomial id{{0, 1}, {0, 0}};
    const Monomial s1{{1, 0}, {0, 0}};
    const Monomial s2{{1, 0}, {3, 1}};
    const Monomial s3{{0, 1}, {0, 2}};
    auto tensor = [](const Monomial& a, const Monomial& b) {
        const int db = static_cast<int>(b.perm.size());
        Monomial out;
        for (std::size_t i = 0; i < a.perm.size(); ++i)
            for (std::size_t k = 0; k < b.perm.size(); ++k) {
                out.perm.push_back(a.perm[i] * db + b.perm[k]);
                out.phase.push_back((a.phase[i] + b.phase[k]) % 4);
            }
        return out;
    };
    auto chain = [&](int k, const Monomial& mid) {
        Monomial out{{0}, {0}};
        for (int f = 0; f < m; ++f) out = tensor(out, f < k ? s3 : (f == k ? mid : id));
        return out;
    };
    for (int k = 0; k < m; ++k) {
        mono_.push_back(chain(k, s1));
        mono_.push_back(chain(k, s2));
    }
    if (n % 2) mono_.push_back(chain(m, id));
    for (auto& g : mono_)
        for (auto& p : g.phase) p = (p + 1) % 4;  // rho(e_j) = i gamma_j

    if (n % 2) {
        Monomial vol = blade_monomial(IndexBlade::from_mask((1U << n) - 1));
        const int want = (n % 4 == 3) ? 0 : 1;
        if (vol.phase[0] != want) {
            for (auto& p : mono_.back().phase) p = (p + 2) % 4;
        }
    }
    const int d = spinor_dim();
    for (const auto& g : mono_) {
        Matrix mat(d, d);
        for (int r = 0; r < d; ++r) mat(r, g.perm[static_cast<std::size_t>(r)]) = i_power(g.phase[static_cast<std::size_t>(r)]);
        gens_.push_back({n, std::move(mat)});
    }
}

SpinRepresentation::Monomial SpinRepresentation::blade_monomial(IndexBlade b) const {
    const int d = spinor_dim();
    Monomial out;
    for (int r = 0; r < d; ++r) {
        out.perm.push_back(r);
        out.phase.push_back(0);
    }
    for (int k : b.indices()) {
        const Monomial& g = mono_[static_cast<std::size_t>(k - 1)];
        for (int r = 0; r < d; ++r) {
            auto& col = out.perm[static_cast<std::size_t>(r)];
            out.phase[static_cast<std::size_t>(r)] = (out.phase[static_cast<std::size_t>(r)] + g.phase[static_cast<std::size_t>(col)]) % 4;
            col = g.perm[static_cast<std::size_t>(col)];
        }
    }
    return out;
}

SpinEndomorphism SpinRepresentation::act(const CliffordElement& a) const {
    if (a.dim() != n_) {
        throw Error(ErrorKind::DimensionMismatch,
                    "element of dimension " + std::to_string(a.dim()) + " acting on Delta_" + std::to_string(n_));
    }
    const int d = spinor_dim();
    Matrix out(d, d);
    for (const auto& [b, c] : a.terms()) {
        Monomial mono = blade_monomial(b);
        for (int r = 0; r < d; ++r) {
            out(r, mono.perm[static_cast<std::size_t>(r)]) += i_power(mono.phase[static_cast<std::size_t>(r)]) * ComplexScalar(c);
        }
    }
    return {n_, std::move(out)};
}

CliffordElement SpinRepresentation::lift_form(const std::vector<std::vector<Scalar>>& a) const {
    if (static_cast<int>(a.size()) != n_) throw Error(ErrorKind::DimensionMismatch, "so(n) matrix size mismatch");
    Form out(n_);
    const Scalar half = Scalar::fraction(1, 2);
    for (int j = 0; j < n_; ++j)
        for (int k = j + 1; k < n_; ++k) out.add(IndexBlade{j + 1, k + 1}, half * a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]);
    return out;
}

std::vector<SpinEndomorphism> build_generators(int n) { return SpinRepresentation(n).generators(); }

bool commute(const SpinEndomorphism& a, const SpinEndomorphism& b) { return commutator(a.mat, b.mat).is_zero(); }

NumericSpectrum spectrum(const Matrix& m, double tol) {
    if (!m.is_hermitian()) throw Error(ErrorKind::NotHermitian, "spectrum requires an exactly Hermitian matrix");
    const int d = m.rows();
    Eigen::MatrixXcd a(d, d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) a(r, c) = {m(r, c).re().to_double(), m(r, c).im().to_double()};
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a);
    if (solver.info() != Eigen::Success) throw Error(ErrorKind::SnapFailure, "eigen solver did not converge");
    NumericSpectrum out;
    const auto& vals = solver.eigenvalues();
    const auto& vecs = solver.eigenvectors();
    for (int k = 0; k < d; ++k) {
        out.values.push_back(vals(k));
        out.residual = std::max(out.residual, (a * vecs.col(k) - vals(k) * vecs.col(k)).norm());
    }
    if (out.residual > tol * std::max(1.0, a.norm())) {
        throw Error(ErrorKind::SnapFailure, "eigenvalue residual exceeds tolerance");
    }
    return out;
}

NumericSpectrum spectrum(const SpinEndomorphism& m, double tol) { return spectrum(m.mat, tol); }

namespace {

/// Visits snap candidates nearest first (b = 0 before any sqrt 3 part) until `visit` returns true.
template <class Visit>
bool for_each_candidate(double x, double tol, Visit&& visit) {
    constexpr long kSmallDenA = 24;
    constexpr long kMaxDenA = 360;
    constexpr long kMaxDenB = 24;
    constexpr long kMaxB = 64;
    const double window = tol * std::max(1.0, std::abs(x));
    const double r3 = std::sqrt(3.0);
    auto try_b = [&](const mpq_class& b, long den_lo, long den_hi) {
        const double a = x - b.get_d() * r3;
        for (long den = den_lo; den <= den_hi; ++den) {
            const double num = std::round(a * static_cast<double>(den));
            if (std::abs(a - num / static_cast<double>(den)) <= window)
                return visit(Scalar(mpq_class(static_cast<long>(num), den), b));
        }
        return false;
    };
    // Small denominators in the rational part first, so 8/3 s3 beats 12995/331 - 20 s3.
    for (const auto [lo, hi] : {std::pair{1L, kSmallDenA}, std::pair{kSmallDenA + 1, kMaxDenA}}) {
        if (try_b(0, lo, hi)) return true;
        for (long q = 1; q <= kMaxDenB; ++q)
            for (long p = 1; p <= kMaxB * q; ++p) {
                if (std::gcd(p, q) != 1) continue;
                if (try_b(mpq_class(p, q), lo, hi) || try_b(mpq_class(-p, q), lo, hi)) return true;
            }
    }
    return false;
}

}  // namespace

std::vector<Scalar> snap_candidates(double x, double tol) {
    std::vector<Scalar> out;
    for_each_candidate(x, tol, [&](Scalar s) {
        out.push_back(std::move(s));
        return false;
    });
    return out;
}

namespace {

int eigen_multiplicity(const Matrix& m, const Scalar& lambda) {
    return m.rows() - rank(m - Matrix::identity(m.rows()) * ComplexScalar(lambda));
}

}  // namespace

std::vector<Scalar> exact_spectrum(const Matrix& m, double tol) {
    NumericSpectrum num = spectrum(m, tol);
    const double scale = std::max(1.0, m.frobenius_norm());
    std::vector<Scalar> out;
    std::size_t k = 0;
    while (k < num.values.size()) {
        std::size_t end = k + 1;
        while (end < num.values.size() && num.values[end] - num.values[end - 1] <= 1e-6 * scale) ++end;
        const int cluster = static_cast<int>(end - k);
        double mean = 0;
        for (std::size_t j = k; j < end; ++j) mean += num.values[j];
        mean /= cluster;
        const bool found = for_each_candidate(mean, 1e-7, [&](const Scalar& cand) {
            if (eigen_multiplicity(m, cand) != cluster) return false;
            out.insert(out.end(), static_cast<std::size_t>(cluster), cand);
            return true;
        });
        if (!found) {
            throw Error(ErrorKind::SnapFailure, "eigenvalue " + std::to_string(mean) + " not recognized in Q(sqrt 3)");
        }
        k = end;
    }
    return out;
}

std::vector<Eigenspace> split_by(const SpinEndomorphism& t, double tol) {
    std::vector<Scalar> spec = exact_spectrum(t, tol);
    std::vector<Scalar> distinct;
    for (const auto& s : spec)
        if (distinct.empty() || distinct.back() != s) distinct.push_back(s);
    const int d = t.size();
    std::vector<Eigenspace> out;
    for (const auto& lam : distinct) {
        Matrix p = Matrix::identity(d);
        for (const auto& mu : distinct) {
            if (mu == lam) continue;
            p = p * (t.mat - Matrix::identity(d) * ComplexScalar(mu)) * ComplexScalar((lam - mu).inverse());
        }
        const int r = static_cast<int>(std::count(spec.begin(), spec.end(), lam));
        out.push_back({lam, r, {t.n, std::move(p)}});
    }
    Matrix sum(d, d);
    for (const auto& e : out) {
        const Matrix& p = e.projector.mat;
        if (!(p * p == p) || !p.is_hermitian() || !(t.mat * p == p * ComplexScalar(e.value))) {
            throw Error(ErrorKind::SnapFailure, "spectral projector failed exact verification");
        }
        sum += p;
    }
    if (!(sum == Matrix::identity(d))) throw Error(ErrorKind::SnapFailure, "spectral projectors do not resolve the identity");
    return out;
}

std::vector<Scalar> restricted_spectrum(const SpinEndomorphism& m, const SpinEndomorphism& p, double tol) {
    if (!commute(m, p)) throw Error(ErrorKind::InvalidArgument, "restriction requires a commuting projector");
    std::vector<Scalar> spec = exact_spectrum(p.mat * m.mat * p.mat, tol);
    int drop = m.size() - rank(p.mat);
    std::vector<Scalar> out;
    for (const auto& s : spec) {
        if (drop > 0 && s.is_zero()) {
            --drop;
            continue;
        }
        out.push_back(s);
    }
    return out;
}

}  // namespace casimir
