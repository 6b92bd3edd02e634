#include "akcores/weights.hpp"

#include <cassert>
#include <map>
#include <stdexcept>

namespace akcores {

AffineWeightVector fundamental_weight(Int e, Int i) {
    require_modulus(e);
    AffineWeightVector v{e, std::vector<Int>(static_cast<size_t>(e), 0), 0};
    v.lambda_coeffs[static_cast<size_t>(floor_mod(i, e))] = 1;
    return v;
}

AffineWeightVector simple_root(Int e, Int i) {
    require_modulus(e);
    i = floor_mod(i, e);
    AffineWeightVector v{e, std::vector<Int>(static_cast<size_t>(e), 0), 0};
    v.lambda_coeffs[static_cast<size_t>(floor_mod(i - 1, e))] -= 1;
    v.lambda_coeffs[static_cast<size_t>(i)] += 2;
    v.lambda_coeffs[static_cast<size_t>(floor_mod(i + 1, e))] -= 1;
    if (i == 0) v.delta_coeff = 1;
    return v;
}

AffineWeightVector null_root(Int e) {
    require_modulus(e);
    return AffineWeightVector{e, std::vector<Int>(static_cast<size_t>(e), 0), 1};
}

Int block_weight(const Multipartition& mp, const Multicharge& s, Int e) {
    ResidueVector rv = residue_content(mp, s, e);
    Int head = 0;
    for (Int si : s) head += rv.counts[static_cast<size_t>(floor_mod(si, e))];
    Int sq = 0;
    for (Int i = 0; i < e; ++i) {
        Int d = rv.counts[static_cast<size_t>(i)] - rv.counts[static_cast<size_t>(floor_mod(i - 1, e))];
        sq += d * d;
    }
    if (sq % 2 != 0) throw std::logic_error("cyclic squared differences summed to an odd number");
    return head - sq / 2;
}

// First removable node in (component, row) order, or nothing when the
// multipartition is empty.
static std::optional<Node> first_removable(const Multipartition& mp) {
    for (int c = 1; c <= mp.level(); ++c) {
        const Partition& p = mp.component(c);
        for (Int a = 1; a <= p.length(); ++a)
            if (p.part(a) > p.part(a + 1)) return Node{a, p.part(a), c};
    }
    return std::nullopt;
}

static Multipartition remove_node(const Multipartition& mp, const Node& nd) {
    std::vector<Partition> comps = mp.components();
    std::vector<Int> parts = comps[static_cast<size_t>(nd.component - 1)].parts();
    parts[static_cast<size_t>(nd.row - 1)] -= 1;
    comps[static_cast<size_t>(nd.component - 1)] = Partition(std::move(parts));
    return Multipartition(std::move(comps));
}

Int block_weight_recursive(const Multipartition& mp, const Multicharge& s, Int e) {
    require_modulus(e);
    Multicharge res;
    res.reserve(s.size());
    for (Int si : s) res.push_back(floor_mod(si, e));

    std::map<Multipartition, Int> memo;
    auto rec = [&](auto&& self, const Multipartition& cur) -> Int {
        auto found = memo.find(cur);
        if (found != memo.end()) return found->second;
        Int value = 0;
        if (auto nd = first_removable(cur)) {
            Int i = residue(*nd, res, e);
            Multipartition mu = remove_node(cur, *nd);
            value = self(self, mu) + m_stat(mu, res, e, i) - 1;
        }
        memo.emplace(cur, value);
        return value;
    };
    return rec(rec, mp);
}

Int delta_shift(const Multicharge& s, Int e) {
    require_modulus(e);
    Int twice = 0;
    for (Int si : s) {
        Int rep = floor_mod(si, e);
        Int k = (si - rep) / e;
        twice += k * (si + rep - e);
    }
    assert(twice % 2 == 0);
    return twice / 2;
}

AffineWeightVector alpha_weight(const Multipartition& mp, const Multicharge& s, Int e) {
    ResidueVector rv = residue_content(mp, s, e);
    AffineWeightVector v{e, std::vector<Int>(static_cast<size_t>(e), 0), 0};
    for (Int si : s) v.lambda_coeffs[static_cast<size_t>(floor_mod(si, e))] += 1;
    for (Int i = 0; i < e; ++i) {
        // Subtracting c_i * alpha_i contributes c_{i-1} + c_{i+1} - 2 c_i at
        // Lambda_i and -c_0 at delta.
        v.lambda_coeffs[static_cast<size_t>(i)] +=
            rv.counts[static_cast<size_t>(floor_mod(i - 1, e))] +
            rv.counts[static_cast<size_t>(floor_mod(i + 1, e))] -
            2 * rv.counts[static_cast<size_t>(i)];
    }
    v.delta_coeff = Rational(-delta_shift(s, e) - rv.counts[0]);
    return v;
}

Rational pairing(const AffineWeightVector& u, const AffineWeightVector& v) {
    if (u.e != v.e) throw std::domain_error("pairing needs matching e");
    Int e = u.e;
    Rational acc = 0;
    for (Int i = 0; i < e; ++i) {
        Int a = u.lambda_coeffs[static_cast<size_t>(i)];
        if (a == 0) continue;
        for (Int j = 0; j < e; ++j) {
            Int b = v.lambda_coeffs[static_cast<size_t>(j)];
            if (b == 0) continue;
            Rational gram = Rational(std::min(i, j)) - Rational(i * j, e);
            acc += Rational(a * b) * gram;
        }
    }
    Int usum = 0, vsum = 0;
    for (Int a : u.lambda_coeffs) usum += a;
    for (Int b : v.lambda_coeffs) vsum += b;
    acc += u.delta_coeff * vsum + v.delta_coeff * usum;  // (delta, delta) = 0
    return acc;
}

Rational norm(const Multipartition& mp, const Multicharge& s, Int e) {
    AffineWeightVector a = alpha_weight(mp, s, e);
    return pairing(a, a) / 2;
}

}  // namespace akcores
