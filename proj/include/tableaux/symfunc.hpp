#pragma once

#include <vector>

#include "tableaux/enumerate.hpp"
#include "tableaux/laurent.hpp"
#include "tableaux/oscillating.hpp"
#include "tableaux/partition.hpp"
#include "tableaux/tableau.hpp"

namespace tableaux {

/// Product of x_{T(m,n)} over all cells, with barred letters contributing
/// inverse variables.
inline Monomial weight_x(const Tableau& t) {
    Monomial m;
    for (const auto& row : t.rows())
        for (Letter a : row) m = m.times_x(a.index(), a.is_barred() ? -1 : 1);
    return m;
}

/// Product of y_{T(m,n)} over all cells; entries must be unbarred.
inline Monomial weight_y(const Tableau& t) {
    Monomial m;
    for (const auto& row : t.rows())
        for (Letter a : row) {
            if (a.is_barred()) throw input_error("y-weight requires unbarred entries");
            m = m.times_y(a.index(), 1);
        }
    return m;
}

/// Product of y_j over every letter j in the compact grid; a monomial of
/// degree equal to the length.
inline Monomial weight_y(const Ssot& s) {
    Monomial m;
    for (const auto& row : s.grid())
        for (const auto& ms : row)
            for (int j : ms) m = m.times_y(j, 1);
    return m;
}

/// Schur polynomial: sum of weights over SSYT_k(shape) in the chosen family.
inline LaurentPolynomial schur_poly(const Partition& shape, int k,
                                    VarFamily family = VarFamily::y) {
    LaurentPolynomial out;
    for (const Tableau& t : enumerate_ssyt(k, shape))
        out.add_term(family == VarFamily::y ? weight_y(t) : weight_x(t), 1);
    return out;
}

/// Schur polynomial on the barred alphabet with x_{j'} = x_j^{-1}:
/// s_shape(x^{+-}) summed over SSYT over [k'].
inline LaurentPolynomial schur_poly_xpm(const Partition& shape, int k) {
    LaurentPolynomial out;
    for (const Tableau& t : enumerate_ssyt(k, shape, /*barred=*/true))
        out.add_term(weight_x(t), 1);
    return out;
}

/// Symplectic Schur Laurent polynomial: sum of x-weights over King tableaux.
inline LaurentPolynomial sp_poly(const Partition& shape, int k) {
    if (shape.num_rows() > k) throw input_error("sp_poly requires at most k rows");
    LaurentPolynomial out;
    for (const Tableau& t : enumerate_kt(k, shape)) out.add_term(weight_x(t), 1);
    return out;
}

/// SSOT polynomial of the given final shape and length.
inline LaurentPolynomial ssot_poly(const Partition& shape, int k, int n) {
    LaurentPolynomial out;
    for (const Ssot& s : enumerate_ssot(k, n, shape)) out.add_term(weight_y(s), 1);
    return out;
}

/// Expansion of prod_{i,j=1..k} (1-x_j y_i)^{-1} (1-x_j^{-1} y_i)^{-1} with
/// all terms of total y-degree above N discarded.
inline LaurentPolynomial cauchy_product_truncated(int k, int N) {
    if (N < 0) throw input_error("truncation degree must be nonnegative");
    LaurentPolynomial out = LaurentPolynomial::one();
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j)
            for (int sign : {1, -1}) {
                LaurentPolynomial factor;
                for (int d = 0; d <= N; ++d)
                    factor.add_term(Monomial{}.times_x(j, sign * d).times_y(i, d), 1);
                out = LaurentPolynomial::multiply_truncated(out, factor, N);
            }
    return out;
}

/// Sum over shapes of s_shape(x^{+-}) s_shape(y), all |shape| <= N.
inline LaurentPolynomial cauchy_rhs_a(int k, int N) {
    LaurentPolynomial out;
    for (const Partition& shape : partitions_up_to(N, k))
        out += schur_poly_xpm(shape, k) * schur_poly(shape, k, VarFamily::y);
    return out;
}

/// Sum over shapes and lengths n <= N of sp_shape(x^{+-}) ss_{shape,n}(y).
inline LaurentPolynomial cauchy_rhs_c(int k, int N) {
    LaurentPolynomial out;
    for (const Partition& shape : partitions_up_to(N, k))
        for (int n = shape.size(); n <= N; n += 2)
            out += sp_poly(shape, k) * ssot_poly(shape, k, n);
    return out;
}

/// Fixed by every adjacent transposition of the chosen variable family
/// (indices 1..k).
inline bool is_symmetric(const LaurentPolynomial& p, VarFamily family, int k) {
    for (int i = 1; i + 1 <= k; ++i)
        if (p.with_swapped(family, i, i + 1) != p) return false;
    return true;
}

/// Fixed by x_j -> x_j^{-1} for each j = 1..k separately.
inline bool is_bar_invariant(const LaurentPolynomial& p, int k) {
    for (int j = 1; j <= k; ++j)
        if (p.with_x_inverted(j) != p) return false;
    return true;
}

/// Elementary symmetric polynomial e_r(y_1, ..., y_k).
inline LaurentPolynomial elementary_e(int r, int k) {
    LaurentPolynomial out;
    std::vector<int> idx;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(idx.size()) == r) {
            Monomial m;
            for (int j : idx) m = m.times_y(j, 1);
            out.add_term(m, 1);
            return;
        }
        for (int j = next; j <= k; ++j) {
            idx.push_back(j);
            self(self, j + 1);
            idx.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

}  // namespace tableaux
