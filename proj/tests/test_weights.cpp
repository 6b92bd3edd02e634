#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "akcores/uglov.hpp"
#include "akcores/weights.hpp"

using namespace akcores;

namespace {

Multipartition MP(std::vector<std::vector<Int>> comps) {
    std::vector<Partition> out;
    for (auto& c : comps) out.emplace_back(std::move(c));
    return Multipartition(std::move(out));
}

Multipartition level1(const Partition& p) { return Multipartition(std::vector<Partition>{p}); }

Multicharge random_charge(std::mt19937& rng, int l, Int span) {
    Multicharge s;
    for (int i = 0; i < l; ++i)
        s.push_back(static_cast<Int>(rng() % static_cast<unsigned long>(2 * span + 1)) - span);
    return s;
}

Multicharge random_staircase(std::mt19937& rng, int l, Int e) {
    Multicharge s{static_cast<Int>(rng() % 13) - 6};
    std::vector<Int> offsets;
    for (int i = 1; i < l; ++i) offsets.push_back(static_cast<Int>(rng() % (e + 1)));
    std::sort(offsets.begin(), offsets.end());
    for (Int d : offsets) s.push_back(s[0] + d);
    return s;
}

Multipartition add_node(const Multipartition& mp, const Node& nd) {
    std::vector<Partition> comps = mp.components();
    std::vector<Int> parts = comps[static_cast<size_t>(nd.component - 1)].parts();
    if (nd.row == static_cast<Int>(parts.size()) + 1)
        parts.push_back(1);
    else
        parts[static_cast<size_t>(nd.row - 1)] += 1;
    comps[static_cast<size_t>(nd.component - 1)] = Partition(std::move(parts));
    return Multipartition(std::move(comps));
}

}  // namespace

TEST_CASE("block weight on the worked values") {
    CHECK(block_weight(MP({{3}, {1}}), {0, 1}, 4) == 1);
    CHECK(block_weight(MP({{4}, {}}), {0, 1}, 4) == 2);
    CHECK(block_weight(empty_multipartition(2), {0, 1}, 4) == 0);
    CHECK(block_weight(MP({{5, 4, 2, 1, 1}}), {0}, 3) == 3);
}

TEST_CASE("level-1 block weight is the hook weight") {
    for (Int e : {2, 3, 4}) {
        for (Int n = 0; n <= 10; ++n) {
            for (const auto& p : partitions_of(n)) {
                Int hooks = e_core_by_hooks(p, e).second;
                for (Int s : {0, 3, -2}) REQUIRE(block_weight(level1(p), {s}, e) == hooks);
            }
        }
    }
}

TEST_CASE("recursive block weight equals the closed formula") {
    CHECK(block_weight_recursive(MP({{3}, {1}}), {0, 1}, 4) == 1);
    CHECK(block_weight_recursive(empty_multipartition(2), {0, 1}, 4) == 0);

    std::mt19937 rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        Multicharge s = random_charge(rng, 2, 8);
        Int e = 2 + static_cast<Int>(rng() % 3);
        for (Int n = 0; n <= 7; ++n)
            for (const auto& mp : all_multipartitions(n, 2))
                REQUIRE(block_weight_recursive(mp, s, e) == block_weight(mp, s, e));
    }
}

TEST_CASE("recursion is independent of which removable node is peeled") {
    // Random peel order, recomputed from scratch, against the closed formula.
    std::mt19937 rng(4096);
    auto random_peel = [&](auto&& self, const Multipartition& mp, const Multicharge& s, Int e) -> Int {
        std::vector<Node> removable;
        for (Int i = 0; i < e; ++i) {
            auto rem = addable_removable(mp, s, e, i).second;
            removable.insert(removable.end(), rem.begin(), rem.end());
        }
        if (removable.empty()) return 0;
        const Node& nd = removable[rng() % removable.size()];
        Int i = residue(nd, s, e);
        std::vector<Partition> comps = mp.components();
        std::vector<Int> parts = comps[static_cast<size_t>(nd.component - 1)].parts();
        parts[static_cast<size_t>(nd.row - 1)] -= 1;
        comps[static_cast<size_t>(nd.component - 1)] = Partition(std::move(parts));
        Multipartition mu(std::move(comps));
        return self(self, mu, s, e) + m_stat(mu, s, e, i) - 1;
    };
    for (Int n = 0; n <= 5; ++n) {
        for (const auto& mp : all_multipartitions(n, 2)) {
            for (Int e : {2, 4}) {
                Int expected = block_weight(mp, {0, 1}, e);
                for (int order = 0; order < 5; ++order)
                    REQUIRE(random_peel(random_peel, mp, {0, 1}, e) == expected);
            }
        }
    }
}

TEST_CASE("delta_shift") {
    CHECK(delta_shift({0, 1, 3}, 4) == 0);
    CHECK(delta_shift({1, 0}, 2) == 0);
    CHECK(delta_shift({10, 0}, 3) == 12);
    CHECK(delta_shift({-1, 2}, 4) == 1);
}

TEST_CASE("alpha_weight coordinates") {
    AffineWeightVector empty0 = alpha_weight(empty_multipartition(1), {0}, 2);
    CHECK(empty0 == fundamental_weight(2, 0));

    AffineWeightVector a = alpha_weight(MP({{4, 1, 1}, {1, 1}}), {0, 3}, 4);
    CHECK(a.lambda_coeffs == std::vector<Int>{3, 2, -2, -1});

    AffineWeightVector b = alpha_weight(MP({{5, 2, 2, 1, 1, 1}}), {3}, 4);
    CHECK(b.lambda_coeffs == std::vector<Int>{2, 2, -2, -1});
}

TEST_CASE("lambda coefficients are the addable-minus-removable counts") {
    for (Int n = 0; n <= 6; ++n) {
        for (const auto& mp : all_multipartitions(n, 2)) {
            for (Int e : {2, 3}) {
                for (const Multicharge& s : {Multicharge{0, 1}, Multicharge{5, -1}}) {
                    AffineWeightVector v = alpha_weight(mp, s, e);
                    for (Int i = 0; i < e; ++i)
                        REQUIRE(v.lambda_coeffs[static_cast<size_t>(i)] == m_stat(mp, s, e, i));
                }
            }
        }
    }
}

TEST_CASE("pairing reproduces the stated Gram identities") {
    for (Int e : {2, 3, 4, 5}) {
        AffineWeightVector delta = null_root(e);
        CHECK(pairing(fundamental_weight(e, 0), fundamental_weight(e, 0)) == Rational(0));
        CHECK(pairing(delta, delta) == Rational(0));
        for (Int i = 0; i < e; ++i) {
            CHECK(pairing(delta, fundamental_weight(e, i)) == Rational(1));
            CHECK(pairing(delta, simple_root(e, i)) == Rational(0));
            for (Int j = 0; j < e; ++j) {
                CHECK(pairing(fundamental_weight(e, i), simple_root(e, j)) == Rational(i == j ? 1 : 0));
                // Cartan pairing (alpha_i, alpha_j).
                Int expected;
                if (e == 2)
                    expected = i == j ? 2 : -2;
                else if (i == j)
                    expected = 2;
                else if (floor_mod(i - j, e) == 1 || floor_mod(j - i, e) == 1)
                    expected = -1;
                else
                    expected = 0;
                CHECK(pairing(simple_root(e, i), simple_root(e, j)) == Rational(expected));
            }
        }
        // delta really is the sum of the simple roots.
        AffineWeightVector sum{e, std::vector<Int>(static_cast<size_t>(e), 0), 0};
        for (Int i = 0; i < e; ++i) {
            AffineWeightVector root = simple_root(e, i);
            for (Int j = 0; j < e; ++j)
                sum.lambda_coeffs[static_cast<size_t>(j)] += root.lambda_coeffs[static_cast<size_t>(j)];
            sum.delta_coeff += root.delta_coeff;
        }
        CHECK(sum == delta);
    }
    CHECK_THROWS_AS(pairing(fundamental_weight(2, 0), fundamental_weight(3, 0)), std::domain_error);
}

TEST_CASE("norms") {
    CHECK(norm(empty_multipartition(1), {0}, 3) == Rational(0));
    CHECK(norm(MP({{5, 4, 2, 1, 1}}), {0}, 3) == Rational(-3));

    Rational vac = norm(empty_multipartition(2), {0, 1}, 4);
    CHECK(norm(MP({{3}, {1}}), {0, 1}, 4) == vac - 1);
}

TEST_CASE("adding a node moves the norm by M_i - 1") {
    for (int l : {1, 2}) {
        Multicharge s = l == 1 ? Multicharge{1} : Multicharge{0, 2};
        for (Int e : {2, 3}) {
            for (Int n = 0; n <= 6; ++n) {
                for (const auto& mu : all_multipartitions(n, l)) {
                    for (Int i = 0; i < e; ++i) {
                        for (const Node& nd : addable_removable(mu, s, e, i).first) {
                            Multipartition lam = add_node(mu, nd);
                            REQUIRE(norm(mu, s, e) - norm(lam, s, e) == Rational(m_stat(mu, s, e, i) - 1));
                            REQUIRE(block_weight(lam, s, e) - block_weight(mu, s, e) ==
                                    m_stat(mu, s, e, i) - 1);
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("norm equals vacuum norm minus block weight") {
    for (int l : {1, 2}) {
        Multicharge s = l == 1 ? Multicharge{-2} : Multicharge{3, 0};
        for (Int e : {2, 3, 4}) {
            Rational vac = norm(empty_multipartition(l), s, e);
            for (Int n = 0; n <= 6; ++n)
                for (const auto& mp : all_multipartitions(n, l))
                    REQUIRE(norm(mp, s, e) == vac - block_weight(mp, s, e));
        }
    }
}

TEST_CASE("block weight is invariant under charge normalization") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 40; ++trial) {
        int l = 2 + static_cast<int>(rng() % 2);
        Int e = 2 + static_cast<Int>(rng() % 3);
        Multicharge s = random_charge(rng, l, 9);
        NormalizedCharge nc = normalize(s, e);
        for (Int n = 0; n <= 5; ++n)
            for (const auto& mp : all_multipartitions(n, l))
                REQUIRE(block_weight(mp, s, e) == block_weight(permute(mp, nc.sigma), nc.tilde, e));
    }
}

TEST_CASE("block weight transports through tau") {
    std::mt19937 rng(777);
    for (int l : {2, 3}) {
        Int max_n = l == 3 ? 5 : 7;
        for (Int e : {2, 3, 4}) {
            for (int trial = 0; trial < 10; ++trial) {
                Multicharge s = random_staircase(rng, l, e);
                for (Int n = 0; n <= max_n; ++n) {
                    for (const auto& mp : all_multipartitions(n, l)) {
                        auto [img, total] = tau(mp, s, e);
                        REQUIRE(block_weight(mp, s, e) == block_weight(level1(img), {total}, e));
                    }
                }
            }
        }
    }
}

TEST_CASE("block weight is nonnegative on everything enumerated") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 20; ++trial) {
        Multicharge s = random_charge(rng, 2, 10);
        Int e = 2 + static_cast<Int>(rng() % 4);
        for (Int n = 0; n <= 7; ++n)
            for (const auto& mp : all_multipartitions(n, 2))
                REQUIRE(block_weight(mp, s, e) >= 0);
    }
}
