#pragma once

// Scalars extended with a positive infinitesimal: value + coeff * eps,
// compared lexicographically. This decides half-open cell membership exactly:
// the half-open region is modeled as a closed region with faces pulled in by
// eps, and the separating-axis test runs over these extended scalars. Region
// edge normals are chosen eps-free (axis and diagonal directions), so
// products stay linear in eps and the lexicographic order is exact.

#include "fracdim/detail/hull.hpp"

namespace fracdim::detail {

template <class Ops>
struct Eps {
    using S = typename Ops::S;
    S v;  // real part
    S e;  // eps coefficient

    static Eps from(const S& value) { return Eps{value, Ops::zero()}; }
};

template <class Ops>
Eps<Ops> eps_add(const Eps<Ops>& a, const Eps<Ops>& b) {
    return Eps<Ops>{Ops::add(a.v, b.v), Ops::add(a.e, b.e)};
}

template <class Ops>
Eps<Ops> eps_scale(const typename Ops::S& k, const Eps<Ops>& a) {
    return Eps<Ops>{Ops::mul(k, a.v), Ops::mul(k, a.e)};
}

template <class Ops>
int eps_cmp_pred(const Eps<Ops>& a, const Eps<Ops>& b) {
    int c = Ops::cmp_pred(a.v, b.v);
    if (c != 0) return c;
    return Ops::cmp(a.e, b.e);
}

template <class Ops>
int eps_cmp(const Eps<Ops>& a, const Eps<Ops>& b) {
    int c = Ops::cmp(a.v, b.v);
    if (c != 0) return c;
    return Ops::cmp(a.e, b.e);
}

}  // namespace fracdim::detail
