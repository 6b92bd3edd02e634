// Elementary bead moves on l-abaci, the core of a charged l-partition by two
// independent routes, block decomposition of all l-partitions of a given
// rank, and the predicted shape of weight-1 blocks.

#pragma once

#include <string>
#include <vector>

#include "akcores/abacus.hpp"
#include "akcores/partitions.hpp"
#include "akcores/uglov.hpp"

namespace akcores {

// Up: bead at pos on runner (0-based) climbs to runner+1, same position.
// Wrap: bead at pos on the top runner drops to position pos - e on runner 0.
struct ElementaryMove {
    enum class Kind { Up, Wrap };
    Kind kind = Kind::Up;
    int runner = 0;
    Int pos = 0;
    friend auto operator<=>(const ElementaryMove&, const ElementaryMove&) = default;
};

// All legal moves, ordered by source runner then position (Wrap last).
std::vector<ElementaryMove> legal_moves(const MultiAbacus& ma, Int e);

// Applies one move; throws std::domain_error when it is not legal.
MultiAbacus apply_move(const MultiAbacus& ma, const ElementaryMove& m, Int e);

// The terminal object of the move procedure: a reduced core, its multicharge
// (in the closed staircase set, charge sum conserved), the number of moves
// spent, and the normalization permutation that was applied to the input.
struct CoreDescriptor {
    Multipartition core;
    Multicharge charge;
    Int weight = 0;
    std::vector<int> sigma;
    friend bool operator==(const CoreDescriptor&, const CoreDescriptor&) = default;
};

// Normalizes the charge, then performs elementary moves (deterministic sweep:
// lowest runner, then lowest position) until none remain.
CoreDescriptor core_by_ops(const Multipartition& mp, const Multicharge& s, Int e);

// Independent route: normalize, interleave, slide the level-1 abacus to its
// core, pull back. Agrees with core_by_ops everywhere (tested, not assumed).
CoreDescriptor core_by_tau(const Multipartition& mp, const Multicharge& s, Int e);

// Componentwise e-core.
Multipartition multicore(const Multipartition& mp, Int e);

// Lyle–Mathas criterion: equal rank and equal residue contents.
bool same_block(const Multipartition& mp1, const Multipartition& mp2, const Multicharge& s, Int e);

// Key identifying a block across persisted tables: e, the normalized charge
// residues, and the residue content vector.
struct BlockKey {
    Int e = 2;
    std::vector<Int> charge_residues;
    std::vector<Int> counts;
    friend auto operator<=>(const BlockKey&, const BlockKey&) = default;
    std::string to_string() const;
};

struct Block {
    BlockKey key;
    std::vector<Multipartition> members;  // enumeration order
    CoreDescriptor core;
};

// Groups every l-partition of n by residue content; blocks come out in order
// of first appearance, each annotated with the common core (each member's
// core is computed and checked to agree).
std::vector<Block> decompose_blocks(Int n, int l, Int e, const Multicharge& s);

// One family of weight-1 multipartitions over the ambient charge v: the
// inverse moves between an adjacent runner pair, or the inverse wrap. Listed
// only when the shifted (core-side) charge lies in the closed staircase set.
struct WeightOneFamily {
    ElementaryMove::Kind kind = ElementaryMove::Kind::Up;
    int runner = 0;             // Up: lower runner of the pair, 0-based
    Multicharge core_charge;    // charge carried by the family's cores
    Int size = 0;               // members produced per core
    Int member_rank = 0;        // common rank of those members
    friend bool operator==(const WeightOneFamily&, const WeightOneFamily&) = default;
};

// Predictions for the given core under ambient charge v (normalized to the
// half-open staircase set first when necessary). For l = 1 the single family
// has e members and an unchanged charge.
std::vector<WeightOneFamily> weight_one_structure(const CoreDescriptor& core, const Multicharge& v, Int e);

}  // namespace akcores
