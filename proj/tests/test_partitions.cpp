#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "akcores/partitions.hpp"

using namespace akcores;

namespace {

Partition P(std::vector<Int> parts) { return Partition(std::move(parts)); }

Multipartition MP(std::vector<std::vector<Int>> comps) {
    std::vector<Partition> out;
    for (auto& c : comps) out.emplace_back(std::move(c));
    return Multipartition(std::move(out));
}

bool in_diagram(const Multipartition& mp, const Node& nd) {
    return nd.row >= 1 && nd.col >= 1 && nd.component >= 1 && nd.component <= mp.level() &&
           nd.col <= mp.component(nd.component).part(nd.row);
}

}  // namespace

TEST_CASE("partition construction") {
    CHECK(P({3, 1}).rank() == 4);
    CHECK(P({3, 1, 0, 0}) == P({3, 1}));
    CHECK(P({}).empty());
    CHECK(P({}).rank() == 0);
    CHECK_THROWS_AS(P({1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(P({2, -1}), std::invalid_argument);
    CHECK_THROWS_AS(Multipartition(std::vector<Partition>{}), std::invalid_argument);
}

TEST_CASE("residue of single nodes") {
    Multicharge s{0, 1};
    CHECK(residue(Node{1, 4, 1}, s, 3) == 0);
    CHECK(residue(Node{1, 1, 2}, s, 3) == 1);
    for (Int e = 2; e <= 5; ++e) CHECK(residue(Node{1, 1, 1}, Multicharge{0}, e) == 0);
    CHECK_THROWS_AS(residue(Node{1, 1, 1}, s, 1), std::domain_error);
    CHECK_THROWS_AS(residue(Node{1, 1, 3}, s, 3), std::domain_error);
}

TEST_CASE("residue_content") {
    CHECK(residue_content(MP({{4}, {2, 1}}), {0, 1}, 3).counts == std::vector<Int>{3, 2, 2});
    CHECK(residue_content(empty_multipartition(2), {0, 1}, 3).counts == std::vector<Int>{0, 0, 0});
    CHECK(residue_content(MP({{3}, {1}}), {0, 1}, 4).counts == std::vector<Int>{1, 2, 1, 0});
    CHECK_THROWS_AS(residue_content(MP({{1}}), {0, 1}, 3), std::domain_error);
}

TEST_CASE("addable and removable nodes") {
    // M_0 = 3 for this charged 2-partition; the raw counts are 3 addable and
    // none removable.
    auto [add0, rem0] = addable_removable(MP({{4, 1, 1}, {1, 1}}), {0, 3}, 4, 0);
    CHECK(add0 == std::vector<Node>{{1, 5, 1}, {2, 2, 1}, {1, 2, 2}});
    CHECK(rem0.empty());

    auto [add1, rem1] = addable_removable(empty_multipartition(1), {0}, 4, 0);
    CHECK(add1 == std::vector<Node>{{1, 1, 1}});
    CHECK(rem1.empty());

    auto [add2, rem2] = addable_removable(MP({{4}, {2, 1}}), {0, 1}, 3, 0);
    CHECK(rem2 == std::vector<Node>{{1, 4, 1}, {2, 1, 2}});
    CHECK(add2 == std::vector<Node>{{1, 3, 2}});
}

TEST_CASE("m_stat matches the worked values") {
    Multipartition mp = MP({{4, 1, 1}, {1, 1}});
    Multicharge s{0, 3};
    CHECK(m_stat(mp, s, 4, 0) == 3);
    CHECK(m_stat(mp, s, 4, 1) == 2);
    CHECK(m_stat(mp, s, 4, 2) == -2);
    CHECK(m_stat(mp, s, 4, 3) == -1);

    Multipartition level1 = MP({{5, 2, 2, 1, 1, 1}});
    CHECK(m_stat(level1, {3}, 4, 0) == 2);
    CHECK(m_stat(level1, {3}, 4, 1) == 2);
    CHECK(m_stat(level1, {3}, 4, 2) == -2);
    CHECK(m_stat(level1, {3}, 4, 3) == -1);

    CHECK(m_stat(empty_multipartition(1), {0}, 4, 0) == 1);
    for (Int i = 1; i < 4; ++i) CHECK(m_stat(empty_multipartition(1), {0}, 4, i) == 0);
}

TEST_CASE("remove_rim_hook") {
    CHECK(remove_rim_hook(P({5, 4, 2, 1, 1}), 3, 1) == P({3, 3, 2, 1, 1}));
    CHECK_FALSE(remove_rim_hook(P({1}), 2, 1).has_value());
    for (Int e = 2; e <= 5; ++e) CHECK(remove_rim_hook(P({e}), e, 1) == P({}));
    // Head row whose hook would break the column below: (2,2) has no 2-hook
    // with head in row 1 reaching past the column end.
    CHECK(remove_rim_hook(P({2, 2}), 2, 1) == P({1, 1}));
    CHECK(remove_rim_hook(P({2, 2}), 4, 1) == std::nullopt);
}

TEST_CASE("e_core_by_hooks") {
    auto [core, weight] = e_core_by_hooks(P({5, 4, 2, 1, 1}), 3);
    CHECK(core == P({3, 1}));
    CHECK(weight == 3);

    auto [c2, w2] = e_core_by_hooks(P({3, 1}), 3);
    CHECK(c2 == P({3, 1}));
    CHECK(w2 == 0);

    auto [c3, w3] = e_core_by_hooks(P({7, 1}), 4);
    CHECK(c3 == P({}));
    CHECK(w3 == 2);
}

TEST_CASE("hook removal is order independent") {
    std::mt19937 rng(20240811);
    for (Int e : {2, 3, 4}) {
        for (Int n = 0; n <= 10; ++n) {
            for (const auto& p : partitions_of(n)) {
                auto expected = e_core_by_hooks(p, e);
                Partition cur = p;
                Int weight = 0;
                for (;;) {
                    std::vector<Partition> options;
                    for (Int row = 1; row <= cur.length(); ++row)
                        if (auto next = remove_rim_hook(cur, e, row)) options.push_back(*next);
                    if (options.empty()) break;
                    cur = options[rng() % options.size()];
                    ++weight;
                }
                REQUIRE(cur == expected.first);
                REQUIRE(weight == expected.second);
            }
        }
    }
}

TEST_CASE("enumeration counts and order") {
    CHECK(all_multipartitions(4, 1).size() == 5);
    CHECK(all_multipartitions(0, 3).size() == 1);
    CHECK(all_multipartitions(0, 3)[0] == empty_multipartition(3));

    auto twos = all_multipartitions(4, 2);
    CHECK(twos.size() == 20);
    CHECK(twos.front() == MP({{4}, {}}));
    CHECK(twos.back() == MP({{}, {1, 1, 1, 1}}));
    std::set<Multipartition> distinct(twos.begin(), twos.end());
    CHECK(distinct.size() == twos.size());

    // Convolution of level-1 counts.
    for (Int n = 0; n <= 6; ++n) {
        size_t expected = 0;
        for (Int k = 0; k <= n; ++k)
            expected += partitions_of(k).size() * partitions_of(n - k).size();
        CHECK(all_multipartitions(n, 2).size() == expected);
    }

    MultipartitionEnumerator en(3, 2);
    std::vector<Multipartition> first_pass, second_pass;
    while (auto mp = en.next()) first_pass.push_back(*mp);
    en.reset();
    while (auto mp = en.next()) second_pass.push_back(*mp);
    CHECK(first_pass == second_pass);
}

TEST_CASE("residue content sums to the rank and depends on s mod e") {
    for (int l = 1; l <= 3; ++l) {
        Int max_n = l == 3 ? 6 : 8;
        for (Int n = 0; n <= max_n; ++n) {
            for (const auto& mp : all_multipartitions(n, l)) {
                for (Int e : {2, 3, 4}) {
                    Multicharge s, shifted;
                    for (int c = 0; c < l; ++c) {
                        s.push_back(c == 0 ? 0 : c + 1);
                        shifted.push_back(s.back() + e);
                    }
                    ResidueVector rv = residue_content(mp, s, e);
                    REQUIRE(rv.total() == mp.rank());
                    REQUIRE(rv == residue_content(mp, shifted, e));
                }
            }
        }
    }
}

TEST_CASE("addable/removable lists are disjoint and diagram-consistent") {
    for (const auto& mp : all_multipartitions(5, 2)) {
        Multicharge s{0, 2};
        for (Int e : {2, 3}) {
            for (Int i = 0; i < e; ++i) {
                auto [add, rem] = addable_removable(mp, s, e, i);
                for (const auto& nd : add) {
                    REQUIRE_FALSE(in_diagram(mp, nd));
                    // Adding must keep a valid diagram.
                    const Partition& p = mp.component(nd.component);
                    REQUIRE(nd.col == p.part(nd.row) + 1);
                    REQUIRE((nd.row == 1 || p.part(nd.row - 1) >= nd.col));
                }
                for (const auto& nd : rem) {
                    REQUIRE(in_diagram(mp, nd));
                    const Partition& p = mp.component(nd.component);
                    REQUIRE(nd.col == p.part(nd.row));
                    REQUIRE(p.part(nd.row + 1) < nd.col);
                }
                std::set<Node> aset(add.begin(), add.end()), rset(rem.begin(), rem.end());
                for (const auto& nd : rset) REQUIRE(aset.count(nd) == 0);
            }
        }
    }
}
