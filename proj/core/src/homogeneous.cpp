#include "casimir/homogeneous.hpp"

#include <algorithm>

#include "casimir/error.hpp"
#include "casimir/matrix.hpp"

namespace casimir {

MetricReductiveAlgebra::MetricReductiveAlgebra(int dim_m, int dim_h, const std::vector<Bracket>& brackets)
    : dim_m_(dim_m), dim_h_(dim_h) {
    if (dim_m < 1 || dim_m > kMaxDim || dim_h < 0) throw Error(ErrorKind::InvalidArgument, "invalid algebra dimensions");
    const int N = total();
    c_.assign(static_cast<std::size_t>(N * N * N), Scalar{});
    std::vector<bool> seen(static_cast<std::size_t>(N * N), false);
    for (const auto& b : brackets) {
        if (b.i < 1 || b.i > N || b.j < 1 || b.j > N || b.i == b.j) {
            throw Error(ErrorKind::InvalidArgument, "bracket index out of range");
        }
        const int i = b.i - 1;
        const int j = b.j - 1;
        if (seen[static_cast<std::size_t>(i * N + j)]) throw Error(ErrorKind::InvalidArgument, "bracket listed twice");
        seen[static_cast<std::size_t>(i * N + j)] = seen[static_cast<std::size_t>(j * N + i)] = true;
        for (const auto& [k, v] : b.out) {
            if (k < 1 || k > N) throw Error(ErrorKind::InvalidArgument, "bracket output index out of range");
            c_[idx(i, j, k - 1)] += v;
            c_[idx(j, i, k - 1)] -= v;
        }
    }
    // [h,h] in h and [h,m] in m.
    for (int a = dim_m_; a < N; ++a)
        for (int x = 0; x < N; ++x)
            for (int k = 0; k < N; ++k) {
                const bool x_in_h = x >= dim_m_;
                const bool k_in_h = k >= dim_m_;
                if (x_in_h != k_in_h && !c(a, x, k).is_zero()) {
                    throw Error(ErrorKind::InvalidArgument, "split is not reductive");
                }
            }
    // Jacobi: [[x,y],z] + [[y,z],x] + [[z,x],y] = 0.
    for (int x = 0; x < N; ++x)
        for (int y = x + 1; y < N; ++y)
            for (int z = y + 1; z < N; ++z)
                for (int k = 0; k < N; ++k) {
                    Scalar s;
                    for (int l = 0; l < N; ++l) {
                        s += c(x, y, l) * c(l, z, k) + c(y, z, l) * c(l, x, k) + c(z, x, l) * c(l, y, k);
                    }
                    if (!s.is_zero()) {
                        throw Error(ErrorKind::InvalidArgument, "Jacobi identity fails on (" + std::to_string(x + 1) + "," +
                                                                    std::to_string(y + 1) + "," + std::to_string(z + 1) + ")");
                    }
                }
}

std::vector<Bracket> MetricReductiveAlgebra::brackets() const {
    std::vector<Bracket> out;
    for (int i = 0; i < total(); ++i)
        for (int j = i + 1; j < total(); ++j) {
            Bracket b{i + 1, j + 1, {}};
            for (int k = 0; k < total(); ++k)
                if (!c(i, j, k).is_zero()) b.out.emplace_back(k + 1, c(i, j, k));
            if (!b.out.empty()) out.push_back(std::move(b));
        }
    return out;
}

Scalar evaluate(const Form& a, const std::vector<int>& args) {
    std::uint32_t mask = 0;
    for (int k : args) {
        if (mask & (1U << k)) return {};
        mask |= 1U << k;
    }
    Scalar c = a.coefficient(IndexBlade::from_mask(mask));
    if (c.is_zero()) return c;
    int inversions = 0;
    for (std::size_t x = 0; x < args.size(); ++x)
        for (std::size_t y = x + 1; y < args.size(); ++y)
            if (args[x] > args[y]) ++inversions;
    return (inversions & 1) ? -c : c;
}

namespace {

std::vector<IndexBlade> blades_of_degree(int n, int p) {
    std::vector<IndexBlade> out;
    for (std::uint32_t m = 0; m < (1U << n); ++m) {
        IndexBlade b = IndexBlade::from_mask(m);
        if (b.degree() == p) out.push_back(b);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> zero_based(IndexBlade b) {
    std::vector<int> v = b.indices();
    for (int& k : v) --k;
    return v;
}

}  // namespace

Form canonical_torsion(const MetricReductiveAlgebra& L) {
    const int n = L.dim_m();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                // Skew in (i,j) holds by construction; check (j,k).
                if (L.c(i, j, k) != -L.c(i, k, j)) {
                    throw Error(ErrorKind::NotNaturallyReductive,
                                "not naturally reductive: -g([X" + std::to_string(i + 1) + ",X" + std::to_string(j + 1) +
                                    "]_m, X" + std::to_string(k + 1) + ") is not skew in the last two slots");
                }
            }
    Form t(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) t.add(IndexBlade{i + 1, j + 1, k + 1}, -L.c(i, j, k));
    return t;
}

Form invariant_d(const MetricReductiveAlgebra& L, const Form& a) {
    const int n = L.dim_m();
    if (a.dim() != n) throw Error(ErrorKind::DimensionMismatch, "form dimension differs from dim m");
    Form out(n);
    for (int p = 0; p < n; ++p) {
        Form ap = a.part(p);
        if (ap.is_zero()) continue;
        for (IndexBlade target : blades_of_degree(n, p + 1)) {
            const std::vector<int> x = zero_based(target);
            Scalar value;
            for (int i = 0; i <= p; ++i)
                for (int j = i + 1; j <= p; ++j) {
                    std::vector<int> rest;
                    for (int q = 0; q <= p; ++q)
                        if (q != i && q != j) rest.push_back(x[static_cast<std::size_t>(q)]);
                    Scalar term;
                    for (int k = 0; k < n; ++k) {
                        const Scalar& c = L.c(x[static_cast<std::size_t>(i)], x[static_cast<std::size_t>(j)], k);
                        if (c.is_zero()) continue;
                        std::vector<int> args{k};
                        args.insert(args.end(), rest.begin(), rest.end());
                        term += c * evaluate(ap, args);
                    }
                    value += ((i + j) & 1) ? -term : term;
                }
            out.add(target, value);
        }
    }
    return out;
}

Form codifferential(const MetricReductiveAlgebra& L, const Form& a) {
    const int n = L.dim_m();
    Form out(n);
    for (int p = 0; p <= n; ++p) {
        Form ap = a.part(p);
        if (ap.is_zero()) continue;
        Form v = hodge_star(invariant_d(L, hodge_star(ap)));
        out += ((n * (p + 1) + 1) & 1) ? -v : v;
    }
    return out;
}

std::vector<Form> invariant_forms(const MetricReductiveAlgebra& L, int p) {
    const int n = L.dim_m();
    std::vector<IndexBlade> basis = blades_of_degree(n, p);
    std::vector<IndexBlade> rows = basis;
    const int nb = static_cast<int>(basis.size());
    // (H.a)(Y_1..Y_p) = -sum_i a(Y_1, .., [H,Y_i], .., Y_p), stacked over H.
    Matrix m(nb * std::max(1, L.dim_h()), nb);
    for (int h = 0; h < L.dim_h(); ++h) {
        const int hx = n + h;
        for (int col = 0; col < nb; ++col) {
            Form e = Form::blade(n, basis[static_cast<std::size_t>(col)]);
            for (int row = 0; row < nb; ++row) {
                const std::vector<int> y = zero_based(rows[static_cast<std::size_t>(row)]);
                Scalar v;
                for (std::size_t i = 0; i < y.size(); ++i)
                    for (int k = 0; k < n; ++k) {
                        const Scalar& c = L.c(hx, y[i], k);
                        if (c.is_zero()) continue;
                        std::vector<int> args = y;
                        args[i] = k;
                        v -= c * evaluate(e, args);
                    }
                m(h * nb + row, col) = v;
            }
        }
    }
    Matrix ker = nullspace(m);
    std::vector<Form> out;
    for (int k = 0; k < ker.cols(); ++k) {
        Form f(n);
        for (int r = 0; r < nb; ++r) f.add(basis[static_cast<std::size_t>(r)], ker(r, k).re());
        out.push_back(std::move(f));
    }
    return out;
}

Curvature nomizu_curvature(const MetricReductiveAlgebra& L) {
    const int n = L.dim_m();
    const Scalar half = Scalar::fraction(1, 2);
    Curvature cv;
    cv.n = n;
    cv.lambda.assign(static_cast<std::size_t>(n), SoMatrix(static_cast<std::size_t>(n), std::vector<Scalar>(static_cast<std::size_t>(n))));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                // 2 g(U(X_i,X_j), X_k) = g([X_k,X_i]_m, X_j) + g(X_i, [X_k,X_j]_m)
                Scalar u = half * (L.c(k, i, j) + L.c(k, j, i));
                cv.lambda[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = half * L.c(i, j, k) + u;
            }
    auto lam = [&](int i, int k, int j) -> const Scalar& {
        return cv.lambda[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
    };
    cv.r.assign(static_cast<std::size_t>(n),
                std::vector<std::vector<std::vector<Scalar>>>(
                    static_cast<std::size_t>(n),
                    std::vector<std::vector<Scalar>>(static_cast<std::size_t>(n), std::vector<Scalar>(static_cast<std::size_t>(n)))));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    Scalar v;
                    for (int q = 0; q < n; ++q) v += lam(i, l, q) * lam(j, q, k) - lam(j, l, q) * lam(i, q, k);
                    for (int q = 0; q < n; ++q) {
                        const Scalar& cm = L.c(i, j, q);
                        if (!cm.is_zero()) v -= cm * lam(q, l, k);
                    }
                    for (int a = n; a < L.total(); ++a) {
                        const Scalar& ch = L.c(i, j, a);
                        if (!ch.is_zero()) v -= ch * L.c(a, k, l);
                    }
                    cv.r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] = v;
                }
    cv.ricci.assign(static_cast<std::size_t>(n), std::vector<Scalar>(static_cast<std::size_t>(n)));
    for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
            Scalar s;
            for (int i = 0; i < n; ++i) s += cv.r[static_cast<std::size_t>(i)][static_cast<std::size_t>(y)][static_cast<std::size_t>(z)][static_cast<std::size_t>(i)];
            cv.ricci[static_cast<std::size_t>(y)][static_cast<std::size_t>(z)] = s;
        }
    for (int y = 0; y < n; ++y) cv.scal += cv.ricci[static_cast<std::size_t>(y)][static_cast<std::size_t>(y)];
    return cv;
}

}  // namespace casimir
