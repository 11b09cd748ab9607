#include "lab5/bundle.hpp"

#include <string>

namespace lab5 {

BundleSpec make_bundle(std::int64_t a, std::int64_t b) {
    if (a == 0 && b == 0) throw precondition_error("make_bundle: (a, b) must not be (0, 0)");
    BundleSpec L;
    L.a = a;
    L.b = b;
    L.r = gcd64(a, b);
    L.a0 = a / L.r;
    L.b0 = b / L.r;
    const BezoutPair mn = bezout_pair(L.a0, L.b0);
    L.m = mn.m;
    L.n = mn.n;
    L.orientation = +1;
    return L;
}

BundleSpec BundleSpec::with_bezout_shift(std::int64_t t) const {
    BundleSpec L = *this;
    L.m = m + t * a0;
    L.n = n - t * b0;
    return L;
}

std::int64_t symmetric_lift(std::int64_t k, std::int64_t r) {
    std::int64_t v = k % r;
    if (v < 0) v += r;
    return v >= (r + 1) / 2 ? v - r : v;
}

bool is_primitive(const BundleSpec& L, const CohomClass& c) {
    const __int128 det = static_cast<__int128>(c.p) * L.b0 - static_cast<__int128>(c.qhat) * L.a0;
    return det == 1 || det == -1;
}

CohomClass induced_class(const BundleSpec& L, const SmoothingParams& params) {
    if (params.epsilon != 1 && params.epsilon != -1)
        throw precondition_error("induced_class: epsilon must be +-1");
    const std::int64_t k = symmetric_lift(params.k, L.r);
    const std::int64_t e = params.epsilon;
    return CohomClass{e * L.m + k * L.a0, -e * L.n + k * L.b0};
}

bool classes_equal(const BundleSpec& L, const CohomClass& c1, const CohomClass& c2) {
    const std::int64_t dp = c1.p - c2.p;
    const std::int64_t dq = c1.qhat - c2.qhat;
    if (L.a != 0) {
        if (dp % L.a != 0) return false;
        const std::int64_t t = dp / L.a;
        return dq == t * L.b;
    }
    // a = 0 forces b != 0
    return dp == 0 && dq % L.b == 0;
}

CohomClass canonical_class(const BundleSpec& L, const CohomClass& c) {
    if (L.a != 0) {
        const std::int64_t aa = L.a < 0 ? -L.a : L.a;
        std::int64_t pm = c.p % aa;
        if (pm < 0) pm += aa;
        const std::int64_t t = (c.p - pm) / L.a;
        return CohomClass{pm, c.qhat - t * L.b};
    }
    const std::int64_t bb = L.b < 0 ? -L.b : L.b;
    std::int64_t qm = c.qhat % bb;
    if (qm < 0) qm += bb;
    return CohomClass{c.p, qm};
}

} // namespace lab5
