#pragma once

#include <vector>

#include "conelim/pair.hpp"

// Shared fixture pairs used across the suites.
namespace fixtures {

using namespace conelim;

inline BinaryForm X() { return BinaryForm::var_x(); }
inline BinaryForm Y() { return BinaryForm::var_y(); }
inline BinaryForm C(int v) { return BinaryForm::constant(v); }
inline BinaryForm Z() { return {}; }

// Regular rank-3 chain on twists (1,0,-1), subdiagonal X, Y.
inline HitchinPair fixture_a() {
    return HitchinPair::create(BundleModel({1, 0, -1}), 2,
                               {{Z(), Z(), Z()}, {X(), Z(), Z()}, {Z(), Y(), Z()}});
}

// Same with a constant in the lower corner; identical kernels.
inline HitchinPair fixture_a_prime() {
    return HitchinPair::create(BundleModel({1, 0, -1}), 2,
                               {{Z(), Z(), Z()}, {X(), Z(), Z()}, {C(1), Y(), Z()}});
}

// Rank-3 square-zero bottom row (X, Y, 0) on twists (0,0,-1).
inline HitchinPair fixture_b() {
    return HitchinPair::create(BundleModel({0, 0, -1}), 2,
                               {{Z(), Z(), Z()}, {Z(), Z(), Z()}, {X(), Y(), Z()}});
}

// Rank-2 regular pair on twists (0,-1).
inline HitchinPair fixture_c() {
    return HitchinPair::create(BundleModel({0, -1}), 2, {{Z(), Z()}, {X(), Z()}});
}

// Rank-2 regular pair whose kernel line is not a coordinate subbundle and
// whose graded quotient module is not free: kernel spanned by (X, Y).
inline HitchinPair fixture_euler() {
    BinaryForm xy = mul(X(), Y());
    BinaryForm x2 = mul(X(), X());
    BinaryForm y2 = mul(Y(), Y());
    return HitchinPair::create(BundleModel({0, 0}), 2,
                               {{xy, -x2}, {y2, -xy}});
}

}  // namespace fixtures
