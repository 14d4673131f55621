#pragma once

#include <compare>
#include <vector>

#include "tableaux/error.hpp"
#include "tableaux/word.hpp"

namespace tableaux {

/// A Knuth array: a two-line array with positive integers on top and letters
/// on the bottom, subject to the lexicographic conditions
///   u_j <= u_{j+1},  and  u_j = u_{j+1}  =>  v_j <= v_{j+1}.
struct TwoLineArray {
    std::vector<int> top;
    Word bottom;

    std::size_t length() const { return top.size(); }

    bool is_lexicographic() const {
        if (top.size() != bottom.size()) return false;
        for (std::size_t j = 0; j + 1 < top.size(); ++j) {
            if (top[j] > top[j + 1]) return false;
            if (top[j] == top[j + 1] && bottom[j] > bottom[j + 1]) return false;
        }
        for (int u : top)
            if (u < 1) return false;
        return true;
    }

    void require_lexicographic() const {
        if (!is_lexicographic()) throw input_error("two-line array is not lexicographic");
    }

    /// Top row replaced by 1..n.
    TwoLineArray standardized() const {
        TwoLineArray out;
        out.top.resize(top.size());
        for (std::size_t j = 0; j < top.size(); ++j) out.top[j] = static_cast<int>(j) + 1;
        out.bottom = bottom;
        return out;
    }

    friend auto operator<=>(const TwoLineArray&, const TwoLineArray&) = default;
};

/// All lexicographic arrays of length n with top letters in [l] and bottom
/// letters among the first num_letters ranks, i.e. sorted multisets of pairs.
inline std::vector<TwoLineArray> enumerate_arrays(int l, int num_letters, int n) {
    std::vector<TwoLineArray> out;
    TwoLineArray cur;
    auto rec = [&](auto&& self, int remaining, int min_u, int min_rank) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int u = min_u; u <= l; ++u)
            for (int rank = (u == min_u ? min_rank : 1); rank <= num_letters; ++rank) {
                cur.top.push_back(u);
                cur.bottom.push_back(Letter::from_rank(rank));
                self(self, remaining - 1, u, rank);
                cur.top.pop_back();
                cur.bottom.pop_back();
            }
    };
    rec(rec, n, 1, 1);
    return out;
}

}  // namespace tableaux
