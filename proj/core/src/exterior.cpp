#include "casimir/exterior.hpp"

#include <bit>
#include <sstream>

#include "casimir/error.hpp"

namespace casimir {

IndexBlade IndexBlade::from_indices(const std::vector<int>& idx) {
    std::uint32_t mask = 0;
    int prev = 0;
    for (int k : idx) {
        if (k <= prev || k > kMaxDim) {
            throw Error(ErrorKind::InvalidArgument, "blade indices must be strictly increasing in 1..8");
        }
        mask |= 1U << (k - 1);
        prev = k;
    }
    return IndexBlade(mask);
}

IndexBlade::IndexBlade(std::initializer_list<int> idx) : IndexBlade(from_indices(std::vector<int>(idx))) {}

int IndexBlade::degree() const { return std::popcount(mask_); }

std::vector<int> IndexBlade::indices() const {
    std::vector<int> out;
    for (int k = 1; k <= kMaxDim; ++k) {
        if (contains(k)) out.push_back(k);
    }
    return out;
}

int IndexBlade::max_index() const { return mask_ == 0 ? 0 : 32 - std::countl_zero(mask_); }

std::string IndexBlade::str() const {
    if (mask_ == 0) return "1";
    std::string s = "e";
    for (int k : indices()) s += std::to_string(k);
    return s;
}

bool operator<(const IndexBlade& a, const IndexBlade& b) {
    int da = a.degree();
    int db = b.degree();
    if (da != db) return da < db;
    // Lexicographic on sorted indices: the lowest differing bit decides.
    std::uint32_t diff = a.mask_ ^ b.mask_;
    if (diff == 0) return false;
    std::uint32_t low = diff & (~diff + 1);
    return (a.mask_ & low) != 0;
}

int wedge_sign(IndexBlade a, IndexBlade b) {
    if (a.mask() & b.mask()) return 0;
    // Count pairs (i in a, j in b) with i > j.
    int swaps = 0;
    std::uint32_t bm = b.mask();
    while (bm) {
        int j = std::countr_zero(bm);
        swaps += std::popcount(a.mask() >> (j + 1));
        bm &= bm - 1;
    }
    return (swaps & 1) ? -1 : 1;
}

void require_same_dim(const Form& a, const Form& b) {
    if (a.dim() != b.dim()) {
        throw Error(ErrorKind::DimensionMismatch,
                    "dimension mismatch: " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
    }
}

Form::Form(int dim) : dim_(dim) {
    if (dim < 0 || dim > kMaxDim) throw Error(ErrorKind::InvalidArgument, "dimension out of range");
}

Form::Form(int dim, Terms terms) : Form(dim) {
    for (auto& [b, c] : terms) add(b, c);
}

Form Form::scalar(int dim, const Scalar& c) { return blade(dim, IndexBlade{}, c); }

Form Form::blade(int dim, IndexBlade b, const Scalar& c) {
    Form f(dim);
    f.add(b, c);
    return f;
}

Form Form::volume(int dim) { return blade(dim, IndexBlade::from_mask((1U << dim) - 1)); }

int Form::degree(int fallback) const {
    if (terms_.empty()) return fallback;
    int p = terms_.begin()->first.degree();
    for (const auto& [b, c] : terms_) {
        if (b.degree() != p) return -1;
    }
    return p;
}

bool Form::is_homogeneous(int p) const { return terms_.empty() || degree() == p; }

Scalar Form::coefficient(IndexBlade b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Scalar{} : it->second;
}

Form Form::part(int p) const {
    Form out(dim_);
    for (const auto& [b, c] : terms_) {
        if (b.degree() == p) out.terms_.emplace(b, c);
    }
    return out;
}

void Form::add(IndexBlade b, const Scalar& c) {
    if (b.max_index() > dim_) {
        throw Error(ErrorKind::InvalidArgument, "blade " + b.str() + " exceeds dimension " + std::to_string(dim_));
    }
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(b, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Form& Form::operator+=(const Form& o) {
    require_same_dim(*this, o);
    for (const auto& [b, c] : o.terms_) add(b, c);
    return *this;
}

Form& Form::operator-=(const Form& o) {
    require_same_dim(*this, o);
    for (const auto& [b, c] : o.terms_) add(b, -c);
    return *this;
}

Form& Form::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [b, v] : terms_) v *= c;
    return *this;
}

Form Form::operator-() const {
    Form out = *this;
    for (auto& [b, v] : out.terms_) v = -v;
    return out;
}

std::string Form::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [b, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")" << b.str();
    }
    return os.str();
}

Form wedge(const Form& a, const Form& b) {
    require_same_dim(a, b);
    Form out(a.dim());
    for (const auto& [ba, ca] : a.terms()) {
        for (const auto& [bb, cb] : b.terms()) {
            int s = wedge_sign(ba, bb);
            if (s == 0) continue;
            out.add(IndexBlade::from_mask(ba.mask() | bb.mask()), s > 0 ? ca * cb : -(ca * cb));
        }
    }
    return out;
}

Form hook(int k, const Form& a) {
    if (k < 1 || k > a.dim()) throw Error(ErrorKind::InvalidArgument, "hook index out of range");
    Form out(a.dim());
    const std::uint32_t bit = 1U << (k - 1);
    for (const auto& [b, c] : a.terms()) {
        if (!(b.mask() & bit)) continue;
        // Move e_k to the front past the indices below it.
        int before = std::popcount(b.mask() & (bit - 1));
        out.add(IndexBlade::from_mask(b.mask() & ~bit), (before & 1) ? -c : c);
    }
    return out;
}

Form hodge_star(const Form& a) {
    Form out(a.dim());
    const std::uint32_t full = (1U << a.dim()) - 1;
    for (const auto& [b, c] : a.terms()) {
        IndexBlade comp = IndexBlade::from_mask(full & ~b.mask());
        // e_I ^ *e_I = vol  with  *e_I = s e_{I^c}.
        int s = wedge_sign(b, comp);
        out.add(comp, s > 0 ? c : -c);
    }
    return out;
}

Scalar inner(const Form& a, const Form& b) {
    require_same_dim(a, b);
    Scalar sum;
    for (const auto& [blade, c] : a.terms()) {
        auto it = b.terms().find(blade);
        if (it != b.terms().end()) sum += c * it->second;
    }
    return sum;
}

Form sigma_T(const Form& t) {
    if (!t.is_homogeneous(3)) throw Error(ErrorKind::InvalidArgument, "sigma_T expects a homogeneous 3-form");
    Form out(t.dim());
    for (int k = 1; k <= t.dim(); ++k) {
        Form h = hook(k, t);
        out += wedge(h, h);
    }
    return out * Scalar::fraction(1, 2);
}

}  // namespace casimir
