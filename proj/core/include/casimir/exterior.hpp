#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "casimir/scalar.hpp"

namespace casimir {

inline constexpr int kMaxDim = 8;

/// Basis blade e_{i1...ip}, i1 < ... < ip, stored as a bit set over 1..8.
class IndexBlade {
public:
    constexpr IndexBlade() = default;
    static IndexBlade from_mask(std::uint32_t mask) { return IndexBlade(mask); }
    /// Builds from strictly increasing 1-based indices.
    static IndexBlade from_indices(const std::vector<int>& idx);
    IndexBlade(std::initializer_list<int> idx);

    std::uint32_t mask() const { return mask_; }
    int degree() const;
    bool contains(int k) const { return (mask_ >> (k - 1)) & 1U; }
    std::vector<int> indices() const;
    int max_index() const;
    std::string str() const;

    /// Degree first, then lexicographic on the index sequence.
    friend bool operator<(const IndexBlade& a, const IndexBlade& b);
    friend bool operator==(const IndexBlade& a, const IndexBlade& b) = default;

private:
    explicit constexpr IndexBlade(std::uint32_t mask) : mask_(mask) {}
    std::uint32_t mask_ = 0;
};

/// Sign of the exterior product of two blades; 0 when they share an index.
int wedge_sign(IndexBlade a, IndexBlade b);

/// Graded element of the exterior algebra over R^n with exact coefficients.
class Form {
public:
    using Terms = std::map<IndexBlade, Scalar>;

    Form() = default;
    explicit Form(int dim);
    Form(int dim, Terms terms);
    static Form scalar(int dim, const Scalar& c);
    static Form blade(int dim, IndexBlade b, const Scalar& c = 1);
    static Form basis(int dim, int k) { return blade(dim, IndexBlade{k}); }
    static Form volume(int dim);

    int dim() const { return dim_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Homogeneous degree, or -1 when mixed; the zero form reports `fallback`.
    int degree(int fallback = 0) const;
    bool is_homogeneous(int p) const;
    Scalar coefficient(IndexBlade b) const;
    Form part(int p) const;

    void add(IndexBlade b, const Scalar& c);
    Form& operator+=(const Form& o);
    Form& operator-=(const Form& o);
    Form& operator*=(const Scalar& c);
    Form operator-() const;
    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator*(Form a, const Scalar& c) { return a *= c; }
    friend Form operator*(const Scalar& c, Form a) { return a *= c; }
    friend bool operator==(const Form& a, const Form& b) = default;

    std::string str() const;

private:
    int dim_ = 0;
    Terms terms_;
};

Form wedge(const Form& a, const Form& b);
/// Interior product with the k-th frame vector, k in 1..dim.
Form hook(int k, const Form& a);
Form hodge_star(const Form& a);
Scalar inner(const Form& a, const Form& b);
inline Scalar norm2(const Form& a) { return inner(a, a); }
/// sigma_T = 1/2 sum_k (e_k _| T) ^ (e_k _| T) for a 3-form T.
Form sigma_T(const Form& t);

void require_same_dim(const Form& a, const Form& b);

}  // namespace casimir
