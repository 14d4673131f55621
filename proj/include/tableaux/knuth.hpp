#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tableaux/correspondences.hpp"
#include "tableaux/insertion.hpp"
#include "tableaux/word.hpp"

namespace tableaux {

enum class MoveKind { k1, k2, k3, k4 };

/// An elementary Knuth move applied at the given 0-based position of the
/// leftmost of the three letters involved.
struct ElementaryMove {
    MoveKind kind;
    int position;
    friend constexpr auto operator<=>(const ElementaryMove&, const ElementaryMove&) = default;
};

/// All words one elementary Knuth move away.  K1/K2 exchange yxz <-> yzx for
/// x < y <= z; K3/K4 exchange xzy <-> zxy for x <= y < z.
inline std::vector<std::pair<ElementaryMove, Word>> elementary_neighbors(const Word& w) {
    std::vector<std::pair<ElementaryMove, Word>> out;
    for (int p = 0; p + 2 < static_cast<int>(w.size()); ++p) {
        Letter a = w[p], b = w[p + 1], c = w[p + 2];
        auto emit = [&](MoveKind kind, Letter na, Letter nb, Letter nc) {
            Word v = w;
            v[p] = na;
            v[p + 1] = nb;
            v[p + 2] = nc;
            out.push_back({ElementaryMove{kind, p}, std::move(v)});
        };
        // K1: y x z -> y z x  (x < y <= z)
        if (b < a && a <= c) emit(MoveKind::k1, a, c, b);
        // K2: y z x -> y x z  (x < y <= z)
        if (c < a && a <= b) emit(MoveKind::k2, a, c, b);
        // K3: x z y -> z x y  (x <= y < z)
        if (a <= c && c < b) emit(MoveKind::k3, b, a, c);
        // K4: z x y -> x z y  (x <= y < z)
        if (b <= c && c < a) emit(MoveKind::k4, b, a, c);
    }
    return out;
}

inline bool knuth_equiv_a(const Word& w, const Word& v) {
    return rs_a(w).first == rs_a(v).first;
}

/// Strictly decreasing left to right in the symplectic order.
inline bool is_column_word(const Word& w) {
    for (std::size_t j = 0; j + 1 < w.size(); ++j)
        if (!(w[j] > w[j + 1])) return false;
    return true;
}

/// Column words are related when their Berele P-symbols agree.
inline bool column_equiv(const Word& c, const Word& c2) {
    if (!is_column_word(c) || !is_column_word(c2))
        throw input_error("column_equiv requires column words");
    return rs_c(c).first == rs_c(c2).first;
}

/// Type-C Knuth equivalence, decided by equality of Berele P-symbols.
inline bool knuth_equiv_c(const Word& w, const Word& v) {
    return rs_c(w).first == rs_c(v).first;
}

/// The canonical representative of the type-A class: row P_A(w).
inline Word canonical_word_a(const Word& w) { return row_word(rs_a(w).first); }

/// The canonical representative of the type-C class: row P_C(w).
inline Word canonical_word_c(const Word& w) { return row_word(rs_c(w).first); }

/// For a Berele step that deletes, the pair (cv, c'v) witnessing the K5 move:
/// cv is Knuth-A-equivalent to (row T)x via the type-A insertion, c is the
/// first-column word containing the cancelled {i, i'} pair and c' drops it.
/// Returns nothing when T <- x adds a box.
inline std::optional<std::pair<Word, Word>> k5_witness(const Tableau& t, Letter x) {
    if (berele_insert(t, x).second.kind != StepKind::deleted) return std::nullopt;
    auto [u, cell] = row_insert_a(t, x);

    // Row minima sit in column 1, so the topmost violating row shows there.
    int vr = 0;
    for (int r = 1; r <= u.num_rows() && vr == 0; ++r)
        if (u.at({r, 1}) < Letter::unbarred(r)) vr = r;
    if (vr < 2 || u.at({vr, 1}) != Letter::barred(vr - 1) ||
        u.at({vr - 1, 1}) != Letter::unbarred(vr - 1))
        throw invariant_error("expected a cancelled pair in column 1");

    Word c, c2, v;
    for (int r = u.num_rows(); r >= 1; --r) {
        c.push_back(u.at({r, 1}));
        if (r != vr && r != vr - 1) c2.push_back(u.at({r, 1}));
    }
    for (int col = 2; col <= u.row_length(1); ++col)
        for (int r = u.num_rows(); r >= 1; --r)
            if (u.has_cell({r, col})) v.push_back(u.at({r, col}));

    Word cv = c, c2v = c2;
    cv.insert(cv.end(), v.begin(), v.end());
    c2v.insert(c2v.end(), v.begin(), v.end());
    return std::pair{cv, c2v};
}

}  // namespace tableaux
