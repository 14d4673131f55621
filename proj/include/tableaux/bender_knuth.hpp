#pragma once

#include <algorithm>
#include <vector>

#include "tableaux/correspondences.hpp"
#include "tableaux/enumerate.hpp"
#include "tableaux/error.hpp"
#include "tableaux/oscillating.hpp"
#include "tableaux/tableau.hpp"

namespace tableaux {

/// The classical Bender-Knuth involution f_i on semistandard tableaux over
/// unbarred letters: in each row the mutable run i^m (i+1)^n becomes
/// i^n (i+1)^m, frozen boxes (vertical i over i+1 dominoes) stay.
inline Tableau bk_a(const Tableau& t, int i) {
    if (i < 1) throw input_error("bk_a: index must be at least 1");
    if (!t.is_semistandard()) throw invariant_error("bk_a requires a semistandard tableau");
    Letter lo = Letter::unbarred(i), hi = Letter::unbarred(i + 1);
    for (const auto& row : t.rows())
        for (Letter a : row)
            if (a.is_barred()) throw input_error("bk_a requires unbarred entries");

    auto rows = t.rows();
    for (int r = 1; r <= t.num_rows(); ++r) {
        int first = 0, last = 0;  // 1-based column range of mutable cells
        int m = 0, n = 0;
        for (int c = 1; c <= t.row_length(r); ++c) {
            Letter a = t.at({r, c});
            bool frozen = (a == lo && t.has_cell({r + 1, c}) && t.at({r + 1, c}) == hi) ||
                          (a == hi && r > 1 && t.at({r - 1, c}) == lo);
            if ((a == lo || a == hi) && !frozen) {
                if (first == 0) first = c;
                last = c;
                (a == lo ? m : n) += 1;
            }
        }
        if (first == 0) continue;
        if (last - first + 1 != m + n)
            throw invariant_error("mutable cells must form one run");
        for (int c = first; c < first + n; ++c) rows[r - 1][c - 1] = lo;
        for (int c = first + n; c <= last; ++c) rows[r - 1][c - 1] = hi;
    }
    return Tableau::from_rows(std::move(rows));
}

/// The superstandard King tableau of the given shape: every cell of row r
/// holds the unbarred letter r.
inline Tableau superstandard_kt(const Partition& shape) {
    std::vector<std::vector<Letter>> rows;
    for (int r = 1; r <= shape.num_rows(); ++r)
        rows.emplace_back(shape.row(r), Letter::unbarred(r));
    return Tableau::from_rows(std::move(rows));
}

/// The Bender-Knuth involution g_i on k-SSOTs, computed through the RSK
/// diagram: pair the SSOT with a fixed King tableau, pass to the type-A side,
/// apply f_i to the type-A recording tableau, and come back.
inline Ssot bk_c(const Ssot& s, int i, int k) {
    if (i < 1 || i >= k) throw input_error("bk_c: index must be in 1..k-1");
    if (!s.is_valid(k)) throw invariant_error("bk_c requires a valid k-SSOT");
    if (s.final_shape().num_rows() > k)
        throw input_error("bk_c: final shape has more than k rows");

    Tableau t = superstandard_kt(s.final_shape());
    TwoLineArray w = inverse_rsk_c(t, s);
    auto [p, q] = rsk_a(w);
    TwoLineArray w2 = inverse_rsk_a(p, bk_a(q, i));
    return rsk_c(w2).q;
}

struct BkDependenceReport {
    bool independent = true;
    int choices = 0;
    std::vector<Ssot> distinct_results;
};

/// Diagnostic: recompute g_i against every King tableau of the final shape
/// and report whether the result depends on the choice.
inline BkDependenceReport bk_c_dependence(const Ssot& s, int i, int k) {
    if (i < 1 || i >= k) throw input_error("bk_c_dependence: index must be in 1..k-1");
    BkDependenceReport report;
    for (const Tableau& t : enumerate_kt(k, s.final_shape())) {
        TwoLineArray w = inverse_rsk_c(t, s);
        auto [p, q] = rsk_a(w);
        TwoLineArray w2 = inverse_rsk_a(p, bk_a(q, i));
        Ssot result = rsk_c(w2).q;
        ++report.choices;
        if (std::find(report.distinct_results.begin(), report.distinct_results.end(),
                      result) == report.distinct_results.end())
            report.distinct_results.push_back(result);
    }
    report.independent = report.distinct_results.size() <= 1;
    return report;
}

}  // namespace tableaux
