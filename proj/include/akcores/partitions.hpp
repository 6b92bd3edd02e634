// Base types for the combinatorics of charged multipartitions: partitions,
// l-partitions, multicharges, nodes, residue counting, rim hooks and
// exhaustive enumeration.

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace akcores {

using Int = long long;

// Floored division/remainder: remainder always lands in [0, b).
inline Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}
inline Int floor_mod(Int a, Int b) { return a - b * floor_div(a, b); }

inline void require_modulus(Int e) {
    if (e < 2) throw std::domain_error("e must be a finite integer >= 2");
}

// Weakly decreasing list of positive integers; trailing zeros are stripped on
// construction so equal partitions compare equal.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<Int> parts);

    const std::vector<Int>& parts() const { return parts_; }
    Int rank() const;
    Int length() const { return static_cast<Int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    // 1-based row access with the infinite zero tail.
    Int part(Int row) const {
        return (row >= 1 && row <= length()) ? parts_[static_cast<size_t>(row - 1)] : 0;
    }

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<Int> parts_;
};

// An l-partition, l >= 1.
class Multipartition {
public:
    Multipartition() = default;
    explicit Multipartition(std::vector<Partition> components);

    const std::vector<Partition>& components() const { return components_; }
    const Partition& component(int c) const { return components_[static_cast<size_t>(c - 1)]; }  // 1-based
    int level() const { return static_cast<int>(components_.size()); }
    Int rank() const;

    friend auto operator<=>(const Multipartition&, const Multipartition&) = default;

private:
    std::vector<Partition> components_;
};

Multipartition empty_multipartition(int l);

// s = (s_1,...,s_l); pairs with a Multipartition of the same level.
using Multicharge = std::vector<Int>;

inline Int charge_sum(const Multicharge& s) {
    Int t = 0;
    for (Int v : s) t += v;
    return t;
}

// Box (a,b) in component c, all 1-based.
struct Node {
    Int row = 1;
    Int col = 1;
    int component = 1;
    friend auto operator<=>(const Node&, const Node&) = default;
};

// Number of nodes per residue class mod e.
struct ResidueVector {
    Int e = 2;
    std::vector<Int> counts;
    friend bool operator==(const ResidueVector&, const ResidueVector&) = default;
    Int total() const;
};

// (b - a + s_c) mod e, normalized into {0,...,e-1}.
Int residue(const Node& node, const Multicharge& s, Int e);

ResidueVector residue_content(const Multipartition& mp, const Multicharge& s, Int e);

// Addable and removable nodes of residue i, each sorted by (component,row).
std::pair<std::vector<Node>, std::vector<Node>>
addable_removable(const Multipartition& mp, const Multicharge& s, Int e, Int i);

// M_i^s: number of addable minus number of removable i-nodes.
Int m_stat(const Multipartition& mp, const Multicharge& s, Int e, Int i);

// Strips the rim e-hook whose head is the last box of start_row (1-based).
// Returns nothing when that hook does not exist or its removal does not leave
// a partition.
std::optional<Partition> remove_rim_hook(const Partition& p, Int e, Int start_row);

// (Core_e(p), omega_e(p)) by repeated rim-hook removal. The result does not
// depend on removal order; this sweeps rows top to bottom.
std::pair<Partition, Int> e_core_by_hooks(const Partition& p, Int e);

// All partitions of n in descending lexicographic order: (n) first, (1^n) last.
std::vector<Partition> partitions_of(Int n);

// Streams every l-partition of n exactly once. Order: rank compositions
// (r_1,...,r_l) of n in descending lexicographic order, each component running
// through partitions_of(r_c) with the last component varying fastest.
// Restartable and self-contained; concurrent enumerators do not share state.
class MultipartitionEnumerator {
public:
    MultipartitionEnumerator(Int n, int l);

    std::optional<Multipartition> next();
    void reset();

private:
    Int n_;
    int l_;
    bool done_ = false;
    std::vector<Int> composition_;
    std::vector<size_t> index_;
    std::vector<std::vector<Partition>> by_rank_;  // partitions_of(0..n)

    bool advance_composition();
    Multipartition current() const;
};

std::vector<Multipartition> all_multipartitions(Int n, int l);

}  // namespace akcores
