#include "casimir/clifford.hpp"

#include <bit>

#include "casimir/error.hpp"

namespace casimir {

int blade_product_sign(IndexBlade a, IndexBlade b) {
    int swaps = 0;
    std::uint32_t bm = b.mask();
    while (bm) {
        int j = std::countr_zero(bm);
        swaps += std::popcount(a.mask() >> (j + 1));
        bm &= bm - 1;
    }
    swaps += std::popcount(a.mask() & b.mask());  // each e_i e_i = -1
    return (swaps & 1) ? -1 : 1;
}

CliffordElement clifford_mul(const CliffordElement& a, const CliffordElement& b) {
    require_same_dim(a, b);
    Form out(a.dim());
    for (const auto& [ba, ca] : a.terms()) {
        for (const auto& [bb, cb] : b.terms()) {
            Scalar c = ca * cb;
            out.add(IndexBlade::from_mask(ba.mask() ^ bb.mask()), blade_product_sign(ba, bb) > 0 ? c : -c);
        }
    }
    return out;
}

CliffordElement contraction_square(const Form& t) {
    if (!t.is_homogeneous(3)) {
        throw Error(ErrorKind::InvalidArgument, "contraction_square expects a homogeneous 3-form");
    }
    Form out(t.dim());
    for (int k = 1; k <= t.dim(); ++k) {
        Form h = hook(k, t);
        out += clifford_mul(h, h);
    }
    return out;
}

CliffordElement reverse(const CliffordElement& a) {
    Form out(a.dim());
    for (const auto& [b, c] : a.terms()) {
        int p = b.degree();
        out.add(b, ((p * (p - 1) / 2) & 1) ? -c : c);
    }
    return out;
}

}  // namespace casimir
