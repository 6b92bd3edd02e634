// Block weight of a charged l-partition, the affine weight vector attached to
// it, and the bilinear form tying the two together. Everything is exact:
// integers where integrality is provable, rationals elsewhere.

#pragma once

#include <boost/rational.hpp>
#include <vector>

#include "akcores/partitions.hpp"

namespace akcores {

using Rational = boost::rational<long long>;

// Coordinates in the basis (Lambda_0,...,Lambda_{e-1}, delta).
struct AffineWeightVector {
    Int e = 2;
    std::vector<Int> lambda_coeffs;
    Rational delta_coeff = 0;
    friend bool operator==(const AffineWeightVector&, const AffineWeightVector&) = default;
};

AffineWeightVector fundamental_weight(Int e, Int i);
AffineWeightVector simple_root(Int e, Int i);   // -L_{i-1} + 2L_i - L_{i+1} (+ delta when i = 0)
AffineWeightVector null_root(Int e);            // sum of the simple roots

// Closed formula: sum of c_{s_i} minus half the cyclic sum of squared
// consecutive differences of the residue counts. Always a nonnegative-looking
// exact integer; the halving is checked.
Int block_weight(const Multipartition& mp, const Multicharge& s, Int e);

// Same statistic by peeling removable nodes: p(mp) = p(mu) + M_i(mu) - 1
// where mu drops the first removable node (component, row) and i is its
// residue. Memoized per call.
Int block_weight_recursive(const Multipartition& mp, const Multicharge& s, Int e);

// Delta_s, the charge-dependent shift on the null-root coefficient. Exact
// integer (provable from s_i = s_i' + k*e; asserted).
Int delta_shift(const Multicharge& s, Int e);

// alpha^{e,s}(mp): Lambda-coefficient at i is M_i^s(mp); delta-coefficient is
// -Delta_s - c_0(mp).
AffineWeightVector alpha_weight(const Multipartition& mp, const Multicharge& s, Int e);

// Symmetric bilinear form with Gram data (L_i,L_j) = min(i,j) - ij/e,
// (delta,L_i) = 1, (delta,delta) = 0. The stated identities
// (L_i,alpha_j) = delta_ij and (delta,alpha_i) = 0 follow and are tested.
Rational pairing(const AffineWeightVector& u, const AffineWeightVector& v);

// Half the self-pairing of alpha_weight.
Rational norm(const Multipartition& mp, const Multicharge& s, Int e);

}  // namespace akcores
