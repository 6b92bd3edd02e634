// Multicharge normalization, the (reduced) core predicates, and the Uglov
// interleaving map between charged l-partitions and charged partitions.

#pragma once

#include <utility>
#include <vector>

#include "akcores/abacus.hpp"
#include "akcores/partitions.hpp"

namespace akcores {

// sigma is the stable permutation sorting the charge residues; entry i is the
// 0-based input index of the i-th normalized component. tilde holds the
// permuted residues, weakly increasing inside {0,...,e-1}.
struct NormalizedCharge {
    std::vector<int> sigma;
    Multicharge tilde;
};

NormalizedCharge normalize(const Multicharge& s, Int e);

// Components reordered as (mp[sigma[0]], mp[sigma[1]], ...).
Multipartition permute(const Multipartition& mp, const std::vector<int>& sigma);

// 0 <= s_j - s_i < e for all i < j.
bool in_A(const Multicharge& s, Int e);
// 0 <= s_j - s_i <= e for all i < j.
bool in_A_bar(const Multicharge& s, Int e);

// Completeness of the (e,s)-abacus of mp, charges taken as given.
bool is_reduced_core(const Multipartition& mp, const Multicharge& s, Int e);

// Completeness after normalizing the charge (permute + reduce mod e).
bool is_core(const Multipartition& mp, const Multicharge& s, Int e);

// Same predicate phrased on beta-numbers: each beta-number of a component
// must reappear among the beta-numbers of the next one (the last wrapping to
// the first, shifted by e).
bool is_core_beta(const Multipartition& mp, const Multicharge& s, Int e);

// Interleaves the l runner bead sets into one abacus: bead k = q*e + r of
// runner c lands at (l-c)*e + q*e*l + r. Returns the decoded shape and its
// charge; the charge always equals the charge sum.
std::pair<Partition, Int> tau(const Multipartition& mp, const Multicharge& s, Int e);

// Inverse interleaving of L_{total_charge}(p) into l runners. Total; when p
// is an e-core the result is a reduced core with charge in the closed
// staircase set.
std::pair<Multipartition, Multicharge> tau_inverse(const Partition& p, Int total_charge, int l, Int e);

}  // namespace akcores
