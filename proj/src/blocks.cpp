#include "akcores/blocks.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace akcores {

std::vector<ElementaryMove> legal_moves(const MultiAbacus& ma, Int e) {
    require_modulus(e);
    int l = ma.level();
    std::vector<ElementaryMove> moves;
    for (int i = 0; i + 1 < l; ++i) {
        const Abacus& src = ma.runners[static_cast<size_t>(i)];
        const Abacus& dst = ma.runners[static_cast<size_t>(i + 1)];
        // Below both full thresholds both runners are packed, so only the
        // finitely many positions above matter.
        Int t = std::min(src.full_below(), dst.full_below());
        auto cand = src.beads_down_to(t);
        for (auto it = cand.rbegin(); it != cand.rend(); ++it)
            if (!dst.contains(*it)) moves.push_back({ElementaryMove::Kind::Up, i, *it});
    }
    {
        const Abacus& top = ma.runners[static_cast<size_t>(l - 1)];
        const Abacus& bottom = ma.runners[0];
        // Target slots below bottom's full threshold are always occupied.
        auto cand = top.beads_down_to(bottom.full_below() + e);
        for (auto it = cand.rbegin(); it != cand.rend(); ++it)
            if (!bottom.contains(*it - e)) moves.push_back({ElementaryMove::Kind::Wrap, l - 1, *it});
    }
    std::sort(moves.begin(), moves.end(), [](const ElementaryMove& a, const ElementaryMove& b) {
        if (a.kind != b.kind) return a.kind == ElementaryMove::Kind::Up;
        if (a.runner != b.runner) return a.runner < b.runner;
        return a.pos < b.pos;
    });
    return moves;
}

MultiAbacus apply_move(const MultiAbacus& ma, const ElementaryMove& m, Int e) {
    require_modulus(e);
    int l = ma.level();
    MultiAbacus out = ma;
    if (m.kind == ElementaryMove::Kind::Up) {
        if (m.runner < 0 || m.runner + 1 >= l ||
            !ma.runners[static_cast<size_t>(m.runner)].contains(m.pos) ||
            ma.runners[static_cast<size_t>(m.runner + 1)].contains(m.pos))
            throw std::domain_error("illegal up move");
        out.runners[static_cast<size_t>(m.runner)] =
            ma.runners[static_cast<size_t>(m.runner)].without_bead(m.pos);
        out.runners[static_cast<size_t>(m.runner + 1)] =
            ma.runners[static_cast<size_t>(m.runner + 1)].with_bead(m.pos);
    } else {
        if (m.runner != l - 1 ||
            !ma.runners[static_cast<size_t>(l - 1)].contains(m.pos) ||
            ma.runners[0].contains(m.pos - e))
            throw std::domain_error("illegal wrap move");
        out.runners[static_cast<size_t>(l - 1)] =
            ma.runners[static_cast<size_t>(l - 1)].without_bead(m.pos);
        out.runners[0] = out.runners[0].with_bead(m.pos - e);
    }
    return out;
}

CoreDescriptor core_by_ops(const Multipartition& mp, const Multicharge& s, Int e) {
    NormalizedCharge nc = normalize(s, e);
    MultiAbacus ma(permute(mp, nc.sigma), nc.tilde);
    Int weight = 0;
    for (;;) {
        auto moves = legal_moves(ma, e);
        if (moves.empty()) break;
        ma = apply_move(ma, moves.front(), e);
        ++weight;
    }
    assert(is_complete(ma, e));
    return {ma.multipartition(), ma.multicharge(), weight, nc.sigma};
}

CoreDescriptor core_by_tau(const Multipartition& mp, const Multicharge& s, Int e) {
    NormalizedCharge nc = normalize(s, e);
    Multipartition pm = permute(mp, nc.sigma);
    auto [image, total] = tau(pm, nc.tilde, e);
    auto [core_abacus, weight] = slide_to_core(Abacus(image, total), e);
    auto [core, charge] = tau_inverse(core_abacus.shape(), core_abacus.charge(),
                                      static_cast<int>(nc.tilde.size()), e);
    assert(in_A_bar(charge, e));
    return {std::move(core), std::move(charge), weight, nc.sigma};
}

Multipartition multicore(const Multipartition& mp, Int e) {
    require_modulus(e);
    std::vector<Partition> comps;
    comps.reserve(static_cast<size_t>(mp.level()));
    for (int c = 1; c <= mp.level(); ++c)
        comps.push_back(slide_to_core(Abacus(mp.component(c), 0), e).first.shape());
    return Multipartition(std::move(comps));
}

bool same_block(const Multipartition& mp1, const Multipartition& mp2, const Multicharge& s, Int e) {
    if (mp1.level() != mp2.level()) throw std::domain_error("levels differ");
    return mp1.rank() == mp2.rank() && residue_content(mp1, s, e) == residue_content(mp2, s, e);
}

std::string BlockKey::to_string() const {
    std::string out = "e" + std::to_string(e) + "-s";
    for (size_t i = 0; i < charge_residues.size(); ++i)
        out += (i ? "." : "") + std::to_string(charge_residues[i]);
    out += "-c";
    for (size_t i = 0; i < counts.size(); ++i)
        out += (i ? "." : "") + std::to_string(counts[i]);
    return out;
}

std::vector<Block> decompose_blocks(Int n, int l, Int e, const Multicharge& s) {
    require_modulus(e);
    if (s.size() != static_cast<size_t>(l))
        throw std::domain_error("multicharge length differs from the level");
    NormalizedCharge nc = normalize(s, e);

    std::vector<Block> blocks;
    std::map<BlockKey, size_t> seen;
    MultipartitionEnumerator en(n, l);
    while (auto mp = en.next()) {
        ResidueVector rv = residue_content(*mp, s, e);
        BlockKey key{e, nc.tilde, rv.counts};
        CoreDescriptor core = core_by_ops(*mp, s, e);
        auto found = seen.find(key);
        if (found == seen.end()) {
            seen.emplace(key, blocks.size());
            blocks.push_back(Block{std::move(key), {std::move(*mp)}, std::move(core)});
        } else {
            Block& blk = blocks[found->second];
            if (!(core == blk.core))
                throw std::logic_error("members of one block computed different cores");
            blk.members.push_back(std::move(*mp));
        }
    }
    return blocks;
}

std::vector<WeightOneFamily> weight_one_structure(const CoreDescriptor& core, const Multicharge& v, Int e) {
    require_modulus(e);
    Multicharge amb = v;
    if (!in_A(amb, e)) amb = normalize(v, e).tilde;
    int l = static_cast<int>(amb.size());
    Int core_rank = core.core.rank();
    std::vector<WeightOneFamily> out;
    if (l == 1) {
        out.push_back({ElementaryMove::Kind::Wrap, 0, amb, e, core_rank + e});
        return out;
    }
    for (int i = 0; i + 1 < l; ++i) {
        Multicharge shifted = amb;
        shifted[static_cast<size_t>(i)] -= 1;
        shifted[static_cast<size_t>(i + 1)] += 1;
        if (!in_A_bar(shifted, e)) continue;
        Int gap = amb[static_cast<size_t>(i + 1)] - amb[static_cast<size_t>(i)];
        out.push_back({ElementaryMove::Kind::Up, i, std::move(shifted), gap + 2, core_rank + gap + 1});
    }
    {
        Multicharge shifted = amb;
        shifted.front() += 1;
        shifted.back() -= 1;
        if (in_A_bar(shifted, e)) {
            Int gap = amb.front() - amb.back() + e;
            out.push_back({ElementaryMove::Kind::Wrap, l - 1, std::move(shifted), gap + 2, core_rank + gap + 1});
        }
    }
    return out;
}

}  // namespace akcores
