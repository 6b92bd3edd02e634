#include "akcores/uglov.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace akcores {

NormalizedCharge normalize(const Multicharge& s, Int e) {
    require_modulus(e);
    if (s.empty()) throw std::domain_error("empty multicharge");
    std::vector<int> sigma(s.size());
    std::iota(sigma.begin(), sigma.end(), 0);
    std::stable_sort(sigma.begin(), sigma.end(), [&](int i, int j) {
        return floor_mod(s[static_cast<size_t>(i)], e) < floor_mod(s[static_cast<size_t>(j)], e);
    });
    Multicharge tilde;
    tilde.reserve(s.size());
    for (int i : sigma) tilde.push_back(floor_mod(s[static_cast<size_t>(i)], e));
    return {std::move(sigma), std::move(tilde)};
}

Multipartition permute(const Multipartition& mp, const std::vector<int>& sigma) {
    if (sigma.size() != static_cast<size_t>(mp.level()))
        throw std::domain_error("permutation length differs from the level");
    std::vector<Partition> comps;
    comps.reserve(sigma.size());
    for (int i : sigma) comps.push_back(mp.components()[static_cast<size_t>(i)]);
    return Multipartition(std::move(comps));
}

bool in_A(const Multicharge& s, Int e) {
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j) {
            Int d = s[j] - s[i];
            if (d < 0 || d >= e) return false;
        }
    return true;
}

bool in_A_bar(const Multicharge& s, Int e) {
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j) {
            Int d = s[j] - s[i];
            if (d < 0 || d > e) return false;
        }
    return true;
}

bool is_reduced_core(const Multipartition& mp, const Multicharge& s, Int e) {
    require_modulus(e);
    return is_complete(MultiAbacus(mp, s), e);
}

bool is_core(const Multipartition& mp, const Multicharge& s, Int e) {
    if (static_cast<size_t>(mp.level()) != s.size())
        throw std::domain_error("multipartition and multicharge lengths differ");
    NormalizedCharge nc = normalize(s, e);
    return is_reduced_core(permute(mp, nc.sigma), nc.tilde, e);
}

// Does the bead set of (q, charge t) contain value v, phrased directly on
// beta-numbers: v = q_i - i + t for some i >= 1 (zero tail included).
static bool beta_set_contains(const Partition& q, Int t, Int v) {
    Int m = q.length();
    if (v < t - m) return true;  // tail: i = t - v > m works
    for (Int i = 1; i <= m; ++i)
        if (q.part(i) - i + t == v) return true;
    return false;
}

bool is_core_beta(const Multipartition& mp, const Multicharge& s, Int e) {
    require_modulus(e);
    if (static_cast<size_t>(mp.level()) != s.size())
        throw std::domain_error("multipartition and multicharge lengths differ");
    NormalizedCharge nc = normalize(s, e);
    Multipartition pm = permute(mp, nc.sigma);
    int l = pm.level();
    auto pair_ok = [&](const Partition& a, Int ta, const Partition& b, Int tb) {
        // Every beta-number of (a, ta) must occur among those of (b, tb):
        // explicit rows first, then the full tail below ta - len(a).
        for (Int j = 1; j <= a.length(); ++j)
            if (!beta_set_contains(b, tb, a.part(j) - j + ta)) return false;
        for (Int v = tb - b.length(); v < ta - a.length(); ++v)
            if (!beta_set_contains(b, tb, v)) return false;
        return true;
    };
    for (int c = 0; c + 1 < l; ++c)
        if (!pair_ok(pm.component(c + 1), nc.tilde[static_cast<size_t>(c)],
                     pm.component(c + 2), nc.tilde[static_cast<size_t>(c + 1)]))
            return false;
    return pair_ok(pm.component(l), nc.tilde[static_cast<size_t>(l - 1)],
                   pm.component(1), nc.tilde[0] + e);
}

std::pair<Partition, Int> tau(const Multipartition& mp, const Multicharge& s, Int e) {
    require_modulus(e);
    if (static_cast<size_t>(mp.level()) != s.size())
        throw std::domain_error("multipartition and multicharge lengths differ");
    Int l = mp.level();

    // A cut q0*e below which every runner is packed; the interleaved set is
    // then packed below q0*e*l and everything above is explicit.
    Int cut = s[0] - mp.component(1).length();
    for (int c = 2; c <= l; ++c)
        cut = std::min(cut, s[static_cast<size_t>(c - 1)] - mp.component(c).length());
    Int base = floor_div(cut, e) * e;

    std::vector<Int> beads;
    for (int c = 1; c <= l; ++c) {
        Abacus runner(mp.component(c), s[static_cast<size_t>(c - 1)]);
        for (Int k : runner.beads_down_to(base)) {
            Int q = floor_div(k, e), r = k - q * e;
            beads.push_back((l - c) * e + q * e * l + r);
        }
    }
    std::sort(beads.begin(), beads.end(), std::greater<Int>());
    Abacus image = Abacus::from_beads(base * l, beads);
    assert(image.charge() == charge_sum(s));
    return {image.shape(), image.charge()};
}

std::pair<Multipartition, Multicharge> tau_inverse(const Partition& p, Int total_charge, int l, Int e) {
    require_modulus(e);
    if (l < 1) throw std::domain_error("level must be >= 1");
    Abacus a(p, total_charge);
    Int q0 = floor_div(a.full_below(), e * l);
    std::vector<std::vector<Int>> per_runner(static_cast<size_t>(l));
    for (Int m : a.beads_down_to(q0 * e * l)) {
        Int q = floor_div(m, e * l);
        Int rem = m - q * e * l;           // (l-c)*e + r with r in [0,e)
        Int c = l - rem / e;               // 1-based component
        Int r = rem % e;
        per_runner[static_cast<size_t>(c - 1)].push_back(q * e + r);
    }
    std::vector<Partition> comps;
    Multicharge charges;
    for (auto& ks : per_runner) {
        std::sort(ks.begin(), ks.end(), std::greater<Int>());
        Abacus runner = Abacus::from_beads(q0 * e, ks);
        comps.push_back(runner.shape());
        charges.push_back(runner.charge());
    }
    return {Multipartition(std::move(comps)), std::move(charges)};
}

}  // namespace akcores
