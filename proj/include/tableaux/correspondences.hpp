#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "tableaux/error.hpp"
#include "tableaux/insertion.hpp"
#include "tableaux/oscillating.hpp"
#include "tableaux/tableau.hpp"
#include "tableaux/two_line_array.hpp"
#include "tableaux/word.hpp"

namespace tableaux {

namespace detail {

/// Adds a box holding the given unbarred value at the stated cell.
inline void record_box(std::vector<std::vector<Letter>>& rows, Cell cell, int value) {
    if (cell.row > static_cast<int>(rows.size())) rows.push_back({});
    if (cell.row > static_cast<int>(rows.size()) ||
        cell.col != static_cast<int>(rows[cell.row - 1].size()) + 1)
        throw invariant_error("recording cell is not addable");
    rows[cell.row - 1].push_back(Letter::unbarred(value));
}

}  // namespace detail

/// Robinson-Schensted: repeated row insertion with a standard recording
/// tableau.
inline std::pair<Tableau, Tableau> rs_a(const Word& w) {
    Tableau p;
    std::vector<std::vector<Letter>> q;
    for (std::size_t j = 0; j < w.size(); ++j) {
        auto [next, cell] = row_insert_a(p, w[j]);
        p = std::move(next);
        detail::record_box(q, cell, static_cast<int>(j) + 1);
    }
    return {p, Tableau::from_rows(std::move(q))};
}

/// Type-A RSK on a lexicographic two-line array.
inline std::pair<Tableau, Tableau> rsk_a(const TwoLineArray& w) {
    w.require_lexicographic();
    Tableau p;
    std::vector<std::vector<Letter>> q;
    for (std::size_t j = 0; j < w.length(); ++j) {
        auto [next, cell] = row_insert_a(p, w.bottom[j]);
        p = std::move(next);
        detail::record_box(q, cell, w.top[j]);
    }
    return {p, Tableau::from_rows(std::move(q))};
}

/// Inverse of rsk_a: reverse-bump the cells of q grouped by entry, largest
/// entries first, rightmost cell first within a group.
inline TwoLineArray inverse_rsk_a(const Tableau& p, const Tableau& q) {
    if (p.shape() != q.shape()) throw input_error("P and Q must have equal shapes");
    if (!p.is_semistandard() || !q.is_semistandard())
        throw input_error("P and Q must be semistandard");

    std::vector<std::pair<Letter, Cell>> order;  // (q entry, cell)
    for (Cell c : q.shape().cells()) order.push_back({q.at(c), c});
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        return std::pair(a.first, a.second.col) < std::pair(b.first, b.second.col);
    });

    auto rows = p.rows();
    TwoLineArray out;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        auto [u, cell] = *it;
        if (u.is_barred()) throw input_error("recording entries must be unbarred");
        if (cell.row > static_cast<int>(rows.size()) ||
            cell.col != static_cast<int>(rows[cell.row - 1].size()))
            throw invariant_error("recording cells must peel off corners");
        Letter v = rows[cell.row - 1].back();
        rows[cell.row - 1].pop_back();
        if (rows[cell.row - 1].empty()) rows.pop_back();
        auto x = detail::reverse_bump(rows, cell.row - 1, v);
        if (!x) throw invariant_error("not a valid RSK pair");
        out.top.push_back(u.index());
        out.bottom.push_back(*x);
    }
    std::reverse(out.top.begin(), out.top.end());
    std::reverse(out.bottom.begin(), out.bottom.end());
    if (!out.is_lexicographic()) throw invariant_error("not a valid RSK pair");
    return out;
}

/// Inverse of rs_a.
inline Word inverse_rs_a(const Tableau& p, const Tableau& q) {
    if (!q.is_standard()) throw input_error("recording tableau must be standard");
    return inverse_rsk_a(p, q).bottom;
}

/// Type-C Robinson-Schensted: iterated Berele insertion; the recording
/// tableau is the sequence of shapes.
inline std::pair<Tableau, OscillatingTableau> rs_c(const Word& w) {
    Tableau p;
    std::vector<Partition> shapes{Partition{}};
    for (Letter a : w) {
        p = berele_insert(p, a).first;
        shapes.push_back(p.shape());
    }
    return {p, OscillatingTableau(std::move(shapes))};
}

/// Inverse of rs_c: peel Berele steps from the end, reading each step's
/// record from the shape difference.
inline Word inverse_rs_c(const Tableau& p, const OscillatingTableau& q) {
    if (p.shape() != q.final_shape())
        throw input_error("P shape must equal the final shape of Q");
    if (!p.is_king()) throw input_error("P must be a King tableau");
    Tableau cur = p;
    Word w(q.length(), Letter{});
    const auto& shapes = q.shapes();
    for (int j = q.length(); j >= 1; --j) {
        const Partition& before = shapes[j - 1];
        const Partition& after = shapes[j];
        StepRecord rec{};
        if (after.covers(before)) {
            rec.kind = StepKind::added;
            for (Cell c : after.removable_cells())
                if (!before.contains_cell(c)) rec.cell = c;
        } else {
            rec.kind = StepKind::deleted;
            for (Cell c : before.removable_cells())
                if (!after.contains_cell(c)) rec.cell = c;
        }
        try {
            auto [prev, letter] = berele_reverse(cur, rec);
            cur = std::move(prev);
            w[j - 1] = letter;
        } catch (const invariant_error&) {
            throw invariant_error("not a valid RS-C pair");
        }
    }
    return w;
}

struct RskOutputC {
    Tableau p;
    Ssot q;
    friend auto operator<=>(const RskOutputC&, const RskOutputC&) = default;
};

/// Type-C RSK: Berele-insert the bottom row, placing each top entry into the
/// compact recording grid at the cell its step added or deleted.
inline RskOutputC rsk_c(const TwoLineArray& w) {
    w.require_lexicographic();
    Tableau p;
    std::vector<std::pair<int, StepRecord>> records;
    for (std::size_t j = 0; j < w.length(); ++j) {
        auto [next, rec] = berele_insert(p, w.bottom[j]);
        p = std::move(next);
        records.push_back({w.top[j], rec});
    }
    return {p, Ssot::from_records(records)};
}

/// Inverse of rsk_c: standardize the recording SSOT to an oscillating
/// tableau, invert RS-C, and reattach the content as the top row.
inline TwoLineArray inverse_rsk_c(const Tableau& p, const Ssot& s) {
    if (p.shape() != s.final_shape())
        throw input_error("P shape must equal the final shape of the SSOT");
    TwoLineArray out;
    out.top = s.content();
    out.bottom = inverse_rs_c(p, standardize_ssot(s));
    if (!out.is_lexicographic()) throw invariant_error("not a valid RSK-C pair");
    return out;
}

}  // namespace tableaux
