#pragma once

// Independent reference implementations used to cross-check the library.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "casimir/exterior.hpp"

namespace oracle {

using casimir::Form;
using casimir::IndexBlade;
using casimir::Scalar;
using Tuple = std::vector<int>;

inline int permutation_sign(Tuple t) {
    int sign = 1;
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j) {
            if (t[i] == t[j]) return 0;
            if (t[i] > t[j]) sign = -sign;
        }
    return sign;
}

inline Scalar factorial(int p) {
    Scalar f = 1;
    for (int k = 2; k <= p; ++k) f *= Scalar(k);
    return f;
}

/// Fully antisymmetric component array: every ordered index tuple with its value.
struct Tensor {
    int n = 0;
    int p = 0;
    std::map<Tuple, Scalar> comp;

    Scalar at(const Tuple& t) const {
        auto it = comp.find(t);
        return it == comp.end() ? Scalar{} : it->second;
    }
};

inline void for_each_tuple(int n, int p, const std::function<void(const Tuple&)>& f) {
    Tuple t(static_cast<std::size_t>(p), 1);
    if (p == 0) {
        f(t);
        return;
    }
    while (true) {
        f(t);
        int k = p - 1;
        while (k >= 0 && t[static_cast<std::size_t>(k)] == n) t[static_cast<std::size_t>(k--)] = 1;
        if (k < 0) return;
        ++t[static_cast<std::size_t>(k)];
    }
}

inline Tensor to_tensor(const Form& f, int p) {
    Tensor t{f.dim(), p, {}};
    for_each_tuple(f.dim(), p, [&](const Tuple& idx) {
        const int s = permutation_sign(idx);
        if (s == 0) return;
        Tuple sorted = idx;
        std::sort(sorted.begin(), sorted.end());
        const Scalar c = f.coefficient(IndexBlade::from_indices(sorted));
        if (!c.is_zero()) t.comp[idx] = s > 0 ? c : -c;
    });
    return t;
}

inline Form from_tensor(const Tensor& t) {
    Form f(t.n);
    for (const auto& [idx, c] : t.comp)
        if (std::is_sorted(idx.begin(), idx.end())) f.add(IndexBlade::from_indices(idx), c);
    return f;
}

/// (a ^ b)(v_1..v_{p+q}) = 1/(p! q!) sum_sigma sgn(sigma) a(...) b(...).
inline Tensor wedge(const Tensor& a, const Tensor& b) {
    const int p = a.p, q = b.p, n = a.n;
    Tensor out{n, p + q, {}};
    const Scalar norm = (factorial(p) * factorial(q)).inverse();
    for_each_tuple(n, p + q, [&](const Tuple& idx) {
        if (permutation_sign(idx) == 0) return;
        Tuple perm(static_cast<std::size_t>(p + q));
        std::iota(perm.begin(), perm.end(), 0);
        Scalar sum;
        do {
            Tuple l, r;
            for (int k = 0; k < p; ++k) l.push_back(idx[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])]);
            for (int k = p; k < p + q; ++k) r.push_back(idx[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])]);
            const Scalar v = a.at(l) * b.at(r);
            if (!v.is_zero()) sum += permutation_sign(perm) > 0 ? v : -v;
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (!sum.is_zero()) out.comp[idx] = sum * norm;
    });
    return out;
}

/// (*a)_{j_1..j_q} = 1/p! sum a_{i_1..i_p} eps_{i_1..i_p j_1..j_q}.
inline Tensor hodge(const Tensor& a) {
    const int n = a.n, q = n - a.p;
    Tensor out{n, q, {}};
    const Scalar norm = factorial(a.p).inverse();
    for_each_tuple(n, q, [&](const Tuple& j) {
        if (permutation_sign(j) == 0) return;
        Scalar sum;
        for (const auto& [i, c] : a.comp) {
            Tuple all = i;
            all.insert(all.end(), j.begin(), j.end());
            const int s = permutation_sign(all);
            if (s != 0) sum += s > 0 ? c : -c;
        }
        if (!sum.is_zero()) out.comp[j] = sum * norm;
    });
    return out;
}

inline Scalar inner(const Tensor& a, const Tensor& b) {
    Scalar sum;
    for (const auto& [idx, c] : a.comp) sum += c * b.at(idx);
    return sum * factorial(a.p).inverse();
}

/// (e_k _| a)_{i_2..i_p} = a_{k i_2..i_p}.
inline Tensor hook(int k, const Tensor& a) {
    Tensor out{a.n, a.p - 1, {}};
    for (const auto& [idx, c] : a.comp)
        if (idx.front() == k) out.comp[Tuple(idx.begin() + 1, idx.end())] = c;
    return out;
}

/// Clifford product of words by bubble sorting with e_i e_j = -e_j e_i and e_i e_i = -1.
inline std::pair<int, Tuple> clifford_word(Tuple w) {
    int sign = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k + 1 < w.size(); ++k) {
            if (w[k] > w[k + 1]) {
                std::swap(w[k], w[k + 1]);
                sign = -sign;
                changed = true;
            } else if (w[k] == w[k + 1]) {
                w.erase(w.begin() + static_cast<std::ptrdiff_t>(k), w.begin() + static_cast<std::ptrdiff_t>(k + 2));
                sign = -sign;
                changed = true;
                break;
            }
        }
    }
    return {sign, w};
}

inline Form clifford(const Form& a, const Form& b) {
    Form out(a.dim());
    for (const auto& [ba, ca] : a.terms())
        for (const auto& [bb, cb] : b.terms()) {
            Tuple w = ba.indices();
            const Tuple r = bb.indices();
            w.insert(w.end(), r.begin(), r.end());
            auto [s, reduced] = clifford_word(w);
            out.add(IndexBlade::from_indices(reduced), s > 0 ? ca * cb : -(ca * cb));
        }
    return out;
}

/// Random p-form with small rational coefficients, some of them carrying sqrt 3.
inline Form random_form(std::mt19937& rng, int n, int p, bool with_sqrt3 = false) {
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4), pick(0, 2);
    Form f(n);
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        const IndexBlade b = IndexBlade::from_mask(mask);
        if (b.degree() != p || pick(rng) == 0) continue;
        Scalar c = Scalar::fraction(num(rng), den(rng));
        if (with_sqrt3 && pick(rng) == 0) c += Scalar(0, mpq_class(num(rng), den(rng)));
        f.add(b, c);
    }
    return f;
}

inline Form random_mixed(std::mt19937& rng, int n, int max_degree, bool with_sqrt3 = false) {
    Form f(n);
    for (int p = 0; p <= std::min(n, max_degree); ++p) f += random_form(rng, n, p, with_sqrt3);
    return f;
}

}  // namespace oracle
