#include "akcores/partitions.hpp"

#include <algorithm>

namespace akcores {

Partition::Partition(std::vector<Int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] <= 0 || (k + 1 < parts_.size() && parts_[k] < parts_[k + 1]))
            throw std::invalid_argument("partition parts must be weakly decreasing and positive");
    }
}

Int Partition::rank() const {
    Int n = 0;
    for (Int p : parts_) n += p;
    return n;
}

Multipartition::Multipartition(std::vector<Partition> components) : components_(std::move(components)) {
    if (components_.empty()) throw std::invalid_argument("an l-partition needs l >= 1 components");
}

Int Multipartition::rank() const {
    Int n = 0;
    for (const auto& c : components_) n += c.rank();
    return n;
}

Multipartition empty_multipartition(int l) {
    return Multipartition(std::vector<Partition>(static_cast<size_t>(l)));
}

Int ResidueVector::total() const {
    Int t = 0;
    for (Int c : counts) t += c;
    return t;
}

Int residue(const Node& node, const Multicharge& s, Int e) {
    require_modulus(e);
    if (node.component < 1 || static_cast<size_t>(node.component) > s.size())
        throw std::domain_error("node component outside the multicharge range");
    return floor_mod(node.col - node.row + s[static_cast<size_t>(node.component - 1)], e);
}

static void require_matching_level(const Multipartition& mp, const Multicharge& s) {
    if (static_cast<size_t>(mp.level()) != s.size())
        throw std::domain_error("multipartition and multicharge lengths differ");
}

ResidueVector residue_content(const Multipartition& mp, const Multicharge& s, Int e) {
    require_modulus(e);
    require_matching_level(mp, s);
    ResidueVector rv{e, std::vector<Int>(static_cast<size_t>(e), 0)};
    for (int c = 1; c <= mp.level(); ++c) {
        const Partition& p = mp.component(c);
        Int base = s[static_cast<size_t>(c - 1)];
        for (Int a = 1; a <= p.length(); ++a)
            for (Int b = 1; b <= p.part(a); ++b)
                ++rv.counts[static_cast<size_t>(floor_mod(b - a + base, e))];
    }
    return rv;
}

std::pair<std::vector<Node>, std::vector<Node>>
addable_removable(const Multipartition& mp, const Multicharge& s, Int e, Int i) {
    require_modulus(e);
    require_matching_level(mp, s);
    i = floor_mod(i, e);
    std::vector<Node> addable, removable;
    for (int c = 1; c <= mp.level(); ++c) {
        const Partition& p = mp.component(c);
        for (Int a = 1; a <= p.length() + 1; ++a) {
            if (a == 1 || p.part(a - 1) > p.part(a)) {
                Node cand{a, p.part(a) + 1, c};
                if (residue(cand, s, e) == i) addable.push_back(cand);
            }
        }
        for (Int a = 1; a <= p.length(); ++a) {
            if (p.part(a) > p.part(a + 1)) {
                Node cand{a, p.part(a), c};
                if (residue(cand, s, e) == i) removable.push_back(cand);
            }
        }
    }
    return {addable, removable};
}

Int m_stat(const Multipartition& mp, const Multicharge& s, Int e, Int i) {
    auto [add, rem] = addable_removable(mp, s, e, i);
    return static_cast<Int>(add.size()) - static_cast<Int>(rem.size());
}

std::optional<Partition> remove_rim_hook(const Partition& p, Int e, Int start_row) {
    require_modulus(e);
    if (start_row < 1 || start_row > p.length()) return std::nullopt;

    // Walk the rim from the head (start_row, last box) collecting e boxes.
    // From (a,b): descend when row a+1 ends exactly at column b, else step left.
    Int a = start_row, b = p.part(start_row);
    std::vector<Int> exit_col;  // leftmost covered column per visited row
    exit_col.push_back(b);
    for (Int step = 1; step < e; ++step) {
        if (p.part(a + 1) == b) {
            ++a;
            exit_col.push_back(b);
        } else {
            if (b == 1) return std::nullopt;  // fell off the diagram
            --b;
            exit_col.back() = b;
        }
    }
    // Tail box (a,b): the removal leaves a partition only if nothing sits below.
    if (p.part(a + 1) >= b) return std::nullopt;

    std::vector<Int> parts = p.parts();
    for (Int row = start_row; row <= a; ++row)
        parts[static_cast<size_t>(row - 1)] = exit_col[static_cast<size_t>(row - start_row)] - 1;
    return Partition(std::move(parts));
}

std::pair<Partition, Int> e_core_by_hooks(const Partition& p, Int e) {
    require_modulus(e);
    Partition cur = p;
    Int weight = 0;
    for (;;) {
        bool removed = false;
        for (Int row = 1; row <= cur.length(); ++row) {
            if (auto next = remove_rim_hook(cur, e, row)) {
                cur = std::move(*next);
                ++weight;
                removed = true;
                break;
            }
        }
        if (!removed) return {cur, weight};
    }
}

static void gen_partitions(Int n, Int max_part, std::vector<Int>& stack, std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(stack);
        return;
    }
    for (Int k = std::min(n, max_part); k >= 1; --k) {
        stack.push_back(k);
        gen_partitions(n - k, k, stack, out);
        stack.pop_back();
    }
}

std::vector<Partition> partitions_of(Int n) {
    if (n < 0) throw std::invalid_argument("partitions_of needs n >= 0");
    std::vector<Partition> out;
    std::vector<Int> stack;
    gen_partitions(n, n, stack, out);
    return out;
}

MultipartitionEnumerator::MultipartitionEnumerator(Int n, int l) : n_(n), l_(l) {
    if (n < 0 || l < 1) throw std::invalid_argument("enumeration needs n >= 0 and l >= 1");
    by_rank_.reserve(static_cast<size_t>(n + 1));
    for (Int m = 0; m <= n; ++m) by_rank_.push_back(partitions_of(m));
    reset();
}

void MultipartitionEnumerator::reset() {
    composition_.assign(static_cast<size_t>(l_), 0);
    composition_[0] = n_;
    index_.assign(static_cast<size_t>(l_), 0);
    done_ = false;
}

Multipartition MultipartitionEnumerator::current() const {
    std::vector<Partition> comps;
    comps.reserve(static_cast<size_t>(l_));
    for (int c = 0; c < l_; ++c)
        comps.push_back(by_rank_[static_cast<size_t>(composition_[static_cast<size_t>(c)])]
                                [index_[static_cast<size_t>(c)]]);
    return Multipartition(std::move(comps));
}

bool MultipartitionEnumerator::advance_composition() {
    // Descending-lex successor: decrement the rightmost positive entry left of
    // the end and dump everything after it into the next slot.
    for (int j = l_ - 2; j >= 0; --j) {
        if (composition_[static_cast<size_t>(j)] > 0) {
            Int tail = 0;
            for (int k = j + 1; k < l_; ++k) {
                tail += composition_[static_cast<size_t>(k)];
                composition_[static_cast<size_t>(k)] = 0;
            }
            --composition_[static_cast<size_t>(j)];
            composition_[static_cast<size_t>(j + 1)] = tail + 1;
            return true;
        }
    }
    return false;
}

std::optional<Multipartition> MultipartitionEnumerator::next() {
    if (done_) return std::nullopt;
    Multipartition out = current();
    // Odometer over per-component partition lists, last component fastest.
    for (int c = l_ - 1; c >= 0; --c) {
        size_t limit = by_rank_[static_cast<size_t>(composition_[static_cast<size_t>(c)])].size();
        if (++index_[static_cast<size_t>(c)] < limit) return out;
        index_[static_cast<size_t>(c)] = 0;
        if (c == 0) {
            if (!advance_composition()) done_ = true;
            return out;
        }
    }
    return out;
}

std::vector<Multipartition> all_multipartitions(Int n, int l) {
    MultipartitionEnumerator en(n, l);
    std::vector<Multipartition> out;
    while (auto mp = en.next()) out.push_back(std::move(*mp));
    return out;
}

}  // namespace akcores
