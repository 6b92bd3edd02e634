// Charged bead-set model of partitions. An abacus is stored canonically as
// (charge, shape); the bead set {shape_j - j + charge : j >= 1} (zero tail
// included) is derived on demand, so equality is exact and no window is ever
// guessed.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "akcores/partitions.hpp"

namespace akcores {

class Abacus {
public:
    Abacus() = default;  // L_0(empty)
    Abacus(Partition shape, Int charge) : shape_(std::move(shape)), charge_(charge) {}

    const Partition& shape() const { return shape_; }
    Int charge() const { return charge_; }

    // Every position below this is occupied; every bead >= it is explicit.
    Int full_below() const { return charge_ - shape_.length(); }

    bool contains(Int pos) const;

    // Occupied positions in [lo, hi], ascending.
    std::vector<Int> beads(Int lo, Int hi) const;

    // All beads >= t, descending.
    std::vector<Int> beads_down_to(Int t) const;

    Abacus shifted(Int k) const { return Abacus(shape_, charge_ + k); }
    Abacus with_bead(Int pos) const;
    Abacus without_bead(Int pos) const;

    // Decodes a bead set given as "everything below t, plus these beads >= t"
    // (strictly descending). The charge is read off by packing: t + count.
    static Abacus from_beads(Int t, const std::vector<Int>& beads_desc);

    friend bool operator==(const Abacus&, const Abacus&) = default;

private:
    Partition shape_;
    Int charge_ = 0;
};

inline Abacus from_partition(const Partition& p, Int s) { return Abacus(p, s); }
inline std::pair<Partition, Int> to_partition(const Abacus& a) { return {a.shape(), a.charge()}; }

// Set containment of bead sets.
bool subset(const Abacus& a, const Abacus& b);

// e runners: bead k = q*e + r (floored) puts bead q on runner r.
std::vector<Abacus> runner_decomposition(const Abacus& a, Int e);
Abacus recompose_runners(const std::vector<Abacus>& runners, Int e);

// Slides every bead of every runner as far down as possible. Returns the
// core abacus (same charge) and the number of unit slides, which is the
// e-weight of the shape.
std::pair<Abacus, Int> slide_to_core(const Abacus& a, Int e);

// The (e,s)-abacus of an l-partition: runners[0] = L_{s_1} = bottom.
struct MultiAbacus {
    std::vector<Abacus> runners;

    MultiAbacus() = default;
    MultiAbacus(const Multipartition& mp, const Multicharge& s);

    int level() const { return static_cast<int>(runners.size()); }
    Multipartition multipartition() const;
    Multicharge multicharge() const;

    friend bool operator==(const MultiAbacus&, const MultiAbacus&) = default;
};

// l = 1: L_{s_1} inside its own e-shift; l > 1: the chained containments
// L_{s_1} < L_{s_2} < ... < L_{s_l} < L_{s_1 + e}.
bool is_complete(const MultiAbacus& ma, Int e);

// Rows of o/. over [lo, hi] with a bar before position 0; multi-abacus rows
// are printed top runner first so runner 1 lands at the bottom, as in the
// usual pictures.
std::string render(const Abacus& a, Int lo, Int hi);
std::string render(const MultiAbacus& ma, Int lo, Int hi);

}  // namespace akcores
