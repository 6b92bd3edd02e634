#include "akcores/abacus.hpp"

#include <algorithm>
#include <stdexcept>

namespace akcores {

bool Abacus::contains(Int pos) const {
    if (pos < full_below()) return true;
    // Explicit beads shape_j - j + charge are strictly decreasing in j.
    Int m = shape_.length();
    Int lo = 1, hi = m;
    while (lo <= hi) {
        Int mid = lo + (hi - lo) / 2;
        Int beta = shape_.part(mid) - mid + charge_;
        if (beta == pos) return true;
        if (beta > pos)
            lo = mid + 1;
        else
            hi = mid - 1;
    }
    return false;
}

std::vector<Int> Abacus::beads_down_to(Int t) const {
    std::vector<Int> out;
    for (Int j = 1; j <= shape_.length(); ++j) {
        Int beta = shape_.part(j) - j + charge_;
        if (beta >= t) out.push_back(beta);
    }
    for (Int pos = full_below() - 1; pos >= t; --pos) out.push_back(pos);
    return out;
}

std::vector<Int> Abacus::beads(Int lo, Int hi) const {
    std::vector<Int> out;
    if (lo > hi) return out;
    auto all = beads_down_to(lo);
    for (auto it = all.rbegin(); it != all.rend(); ++it)
        if (*it <= hi) out.push_back(*it);
    return out;
}

Abacus Abacus::from_beads(Int t, const std::vector<Int>& beads_desc) {
    for (size_t k = 0; k < beads_desc.size(); ++k) {
        if (beads_desc[k] < t || (k + 1 < beads_desc.size() && beads_desc[k] <= beads_desc[k + 1]))
            throw std::invalid_argument("bead list must be strictly descending and >= threshold");
    }
    Int charge = t + static_cast<Int>(beads_desc.size());
    std::vector<Int> parts;
    parts.reserve(beads_desc.size());
    for (size_t k = 0; k < beads_desc.size(); ++k)
        parts.push_back(beads_desc[k] + static_cast<Int>(k + 1) - charge);
    return Abacus(Partition(std::move(parts)), charge);
}

Abacus Abacus::with_bead(Int pos) const {
    if (contains(pos)) throw std::domain_error("position already occupied");
    Int t = std::min(pos, full_below());
    auto list = beads_down_to(t);
    list.insert(std::upper_bound(list.begin(), list.end(), pos, std::greater<Int>()), pos);
    return from_beads(t, list);
}

Abacus Abacus::without_bead(Int pos) const {
    if (!contains(pos)) throw std::domain_error("position not occupied");
    Int t = std::min(pos, full_below());
    auto list = beads_down_to(t);
    list.erase(std::find(list.begin(), list.end(), pos));
    return from_beads(t, list);
}

bool subset(const Abacus& a, const Abacus& b) {
    // Positions below a.full_below() are all beads of a; check them against b
    // only where b is not already full.
    for (Int pos = b.full_below(); pos < a.full_below(); ++pos)
        if (!b.contains(pos)) return false;
    for (Int j = 1; j <= a.shape().length(); ++j)
        if (!b.contains(a.shape().part(j) - j + a.charge())) return false;
    return true;
}

std::vector<Abacus> runner_decomposition(const Abacus& a, Int e) {
    require_modulus(e);
    Int q0 = floor_div(a.full_below(), e);
    std::vector<std::vector<Int>> per_runner(static_cast<size_t>(e));
    for (Int k : a.beads_down_to(q0 * e))
        per_runner[static_cast<size_t>(floor_mod(k, e))].push_back(floor_div(k, e));
    std::vector<Abacus> runners;
    runners.reserve(static_cast<size_t>(e));
    for (auto& qs : per_runner) runners.push_back(Abacus::from_beads(q0, qs));
    return runners;
}

Abacus recompose_runners(const std::vector<Abacus>& runners, Int e) {
    require_modulus(e);
    if (static_cast<Int>(runners.size()) != e)
        throw std::domain_error("expected exactly e runners");
    Int q0 = runners[0].full_below();
    for (const auto& r : runners) q0 = std::min(q0, r.full_below());
    std::vector<Int> beads;
    for (Int r = 0; r < e; ++r)
        for (Int q : runners[static_cast<size_t>(r)].beads_down_to(q0))
            beads.push_back(q * e + r);
    std::sort(beads.begin(), beads.end(), std::greater<Int>());
    return Abacus::from_beads(q0 * e, beads);
}

std::pair<Abacus, Int> slide_to_core(const Abacus& a, Int e) {
    auto runners = runner_decomposition(a, e);
    Int weight = 0;
    for (auto& r : runners) {
        weight += r.shape().rank();  // each unit slide drops the runner rank by one
        r = Abacus(Partition{}, r.charge());
    }
    return {recompose_runners(runners, e), weight};
}

MultiAbacus::MultiAbacus(const Multipartition& mp, const Multicharge& s) {
    if (static_cast<size_t>(mp.level()) != s.size())
        throw std::domain_error("multipartition and multicharge lengths differ");
    runners.reserve(s.size());
    for (int c = 1; c <= mp.level(); ++c)
        runners.emplace_back(mp.component(c), s[static_cast<size_t>(c - 1)]);
}

Multipartition MultiAbacus::multipartition() const {
    std::vector<Partition> comps;
    comps.reserve(runners.size());
    for (const auto& r : runners) comps.push_back(r.shape());
    return Multipartition(std::move(comps));
}

Multicharge MultiAbacus::multicharge() const {
    Multicharge s;
    s.reserve(runners.size());
    for (const auto& r : runners) s.push_back(r.charge());
    return s;
}

bool is_complete(const MultiAbacus& ma, Int e) {
    require_modulus(e);
    int l = ma.level();
    if (l == 0) throw std::domain_error("empty multi-abacus");
    for (int c = 0; c + 1 < l; ++c)
        if (!subset(ma.runners[static_cast<size_t>(c)], ma.runners[static_cast<size_t>(c + 1)]))
            return false;
    return subset(ma.runners[static_cast<size_t>(l - 1)], ma.runners[0].shifted(e));
}

std::string render(const Abacus& a, Int lo, Int hi) {
    std::string row;
    for (Int pos = lo; pos <= hi; ++pos) {
        if (pos == 0 && lo < 0) row += '|';
        row += a.contains(pos) ? 'o' : '.';
    }
    return row;
}

std::string render(const MultiAbacus& ma, Int lo, Int hi) {
    std::string out;
    for (int c = ma.level() - 1; c >= 0; --c) {
        out += render(ma.runners[static_cast<size_t>(c)], lo, hi);
        out += '\n';
    }
    return out;
}

}  // namespace akcores
