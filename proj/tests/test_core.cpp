#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "tableaux/enumerate.hpp"
#include "tableaux/letter.hpp"
#include "tableaux/partition.hpp"
#include "tableaux/tableau.hpp"
#include "tableaux/two_line_array.hpp"
#include "tableaux/word.hpp"

using namespace tableaux;

namespace {

Letter L(int s) { return Letter::from_signed(s); }

// Independent oracle: column-by-column box count.
bool horizontal_strip_oracle(const Partition& inner, const Partition& outer) {
    if (!outer.contains(inner)) return false;
    for (int c = 1; c <= outer.row(1); ++c) {
        int boxes = 0;
        for (int r = 1; r <= outer.num_rows(); ++r)
            if (inner.row(r) < c && c <= outer.row(r)) ++boxes;
        if (boxes > 1) return false;
    }
    return true;
}

std::vector<int> rank_sequence(const Tableau& t) {
    std::vector<int> out;
    for (const auto& row : t.rows())
        for (Letter a : row) out.push_back(a.rank());
    return out;
}

}  // namespace

TEST_CASE("symplectic order") {
    CHECK(symplectic_cmp(L(-1), L(2)) == std::strong_ordering::less);
    CHECK(symplectic_cmp(L(3), L(3)) == std::strong_ordering::equal);
    CHECK(symplectic_cmp(L(-2), L(2)) == std::strong_ordering::greater);

    // rank is a bijection 1..2k consistent with the comparison, k <= 4.
    for (int r = 1; r <= 8; ++r) {
        Letter a = Letter::from_rank(r);
        CHECK(a.rank() == r);
        CHECK(Letter::from_signed(a.to_signed()) == a);
        CHECK(2 * a.index() - (a.is_barred() ? 0 : 1) == r);
        for (int s = 1; s <= 8; ++s) {
            Letter b = Letter::from_rank(s);
            CHECK((a < b) == (r < s));
            CHECK((a == b) == (r == s));
        }
    }
    CHECK(Letter::unbarred(2).rank() == 3);
    CHECK(Letter::barred(2).rank() == 4);
    CHECK_THROWS_AS(Letter::from_signed(0), input_error);
}

TEST_CASE("partition basics") {
    Partition lam({3, 1});
    CHECK(lam.size() == 4);
    CHECK(lam.num_rows() == 2);
    CHECK(lam.row(1) == 3);
    CHECK(lam.row(5) == 0);
    CHECK(Partition({3, 1, 0, 0}) == lam);
    CHECK_THROWS_AS(Partition({1, 2}), input_error);
    CHECK_THROWS_AS(Partition({2, -1}), input_error);

    CHECK(lam.contains(Partition({2, 1})));
    CHECK_FALSE(lam.contains(Partition({1, 1, 1})));
    CHECK(lam.covers(Partition({2, 1})));
    CHECK_FALSE(lam.covers(Partition({3, 1})));
    CHECK_FALSE(lam.covers(Partition({1, 1})));

    CHECK(lam.addable_cells() == std::vector<Cell>{{1, 4}, {2, 2}, {3, 1}});
    CHECK(lam.removable_cells() == std::vector<Cell>{{1, 3}, {2, 1}});
    CHECK(lam.with_cell_added({2, 2}) == Partition({3, 2}));
    CHECK(lam.with_cell_removed({2, 1}) == Partition({3}));
    CHECK_THROWS_AS(lam.with_cell_added({3, 2}), invariant_error);
    CHECK_THROWS_AS(lam.with_cell_removed({1, 1}), invariant_error);
}

TEST_CASE("horizontal strips") {
    CHECK(is_horizontal_strip(Partition({2, 2}), Partition({3, 2, 1})));
    Partition lam({3, 1});
    CHECK(is_horizontal_strip(lam, lam));
    CHECK_FALSE(is_horizontal_strip(Partition({1}), Partition({2, 2})));

    // Exhaustive agreement with the column-count oracle.
    auto shapes = partitions_up_to(5, 4);
    for (const auto& inner : shapes)
        for (const auto& outer : shapes)
            CHECK(is_horizontal_strip(inner, outer) ==
                  horizontal_strip_oracle(inner, outer));
}

TEST_CASE("row and column words") {
    Tableau t = Tableau::from_signed_rows({{1, 2, 4}, {-2, -2, 6}, {3, -4}, {5}});
    CHECK(word_to_signed(row_word(t)) == std::vector<int>{5, 3, -4, -2, -2, 6, 1, 2, 4});
    CHECK(row_word(Tableau{}).empty());
    CHECK(word_to_signed(row_word(Tableau::from_signed_rows({{1, -1}}))) ==
          std::vector<int>{1, -1});

    CHECK(word_to_signed(col_word(Tableau::from_signed_rows({{1, 2}, {-2}}))) ==
          std::vector<int>{-2, 1, 2});
    CHECK(col_word(Tableau{}).empty());
    CHECK(word_to_signed(col_word(Tableau::from_signed_rows({{1}, {2}, {3}}))) ==
          std::vector<int>{3, 2, 1});
}

TEST_CASE("ssyt enumeration") {
    CHECK(enumerate_ssyt(3, Partition({2, 1})).size() == 8);
    CHECK(enumerate_ssyt(1, Partition({1, 1})).empty());
    CHECK(enumerate_ssyt(2, Partition({1})).size() == 2);

    for (const Tableau& t : enumerate_ssyt(3, Partition({2, 2, 1})))
        CHECK(t.is_semistandard());

    // Canonical order: lexicographic on row-major rank sequences.
    auto list = enumerate_ssyt(3, Partition({2, 1}));
    for (std::size_t i = 0; i + 1 < list.size(); ++i)
        CHECK(rank_sequence(list[i]) < rank_sequence(list[i + 1]));
}

TEST_CASE("king tableau enumeration") {
    CHECK(enumerate_kt(2, Partition({1})).size() == 4);
    CHECK(enumerate_kt(1, Partition({1, 1})).empty());

    // Independent oracle for KT_2((1,1)): strictly increasing pairs with the
    // second entry at least the unbarred 2.
    int count = 0;
    for (int a = 1; a <= 4; ++a)
        for (int b = a + 1; b <= 4; ++b)
            if (b >= 3) ++count;
    CHECK(count == 5);
    CHECK(enumerate_kt(2, Partition({1, 1})).size() == 5);

    // KT is exactly the symplectic-condition-satisfying part of barred SSYT.
    for (const Partition& shape : partitions_up_to(4, 2)) {
        auto kt = enumerate_kt(2, shape);
        auto all = enumerate_ssyt(2, shape, /*barred=*/true);
        std::size_t king = 0;
        for (const Tableau& t : all) {
            CHECK(t.is_semistandard());
            if (t.is_king()) ++king;
        }
        CHECK(kt.size() == king);
        for (const Tableau& t : kt) CHECK(t.is_king());
    }
}

TEST_CASE("row word is injective on enumerated families") {
    for (const Partition& shape : partitions_up_to(4, 3)) {
        std::set<std::vector<int>> words;
        auto list = enumerate_ssyt(2, shape, /*barred=*/true);
        for (const Tableau& t : list) words.insert(word_to_signed(row_word(t)));
        CHECK(words.size() == list.size());
    }
}

TEST_CASE("two-line arrays") {
    TwoLineArray a{{1, 1, 2}, word_from_signed({-1, 2, 1})};
    CHECK(a.is_lexicographic());
    TwoLineArray bad{{1, 1}, word_from_signed({2, -1})};
    CHECK_FALSE(bad.is_lexicographic());
    CHECK_THROWS_AS(bad.require_lexicographic(), input_error);

    CHECK(a.standardized().top == std::vector<int>{1, 2, 3});

    // Arrays of length n over l x R pair alphabet are multisets:
    // C(l*R + n - 1, n) of them.
    CHECK(enumerate_arrays(2, 4, 2).size() == 36);  // C(9,2)
    for (const TwoLineArray& w : enumerate_arrays(2, 4, 3)) CHECK(w.is_lexicographic());
    CHECK(enumerate_arrays(2, 4, 3).size() == 120);  // C(10,3)
}
