#pragma once

#include <compare>
#include <vector>

#include "tableaux/error.hpp"
#include "tableaux/letter.hpp"
#include "tableaux/partition.hpp"
#include "tableaux/word.hpp"

namespace tableaux {

/// A filling of a Young diagram by letters.  Construction checks only that
/// the row lengths form a partition; semistandardness, the symplectic
/// condition and standardness are separate predicates so that operations can
/// state exactly which of them they require.
class Tableau {
  public:
    Tableau() = default;

    static Tableau from_rows(std::vector<std::vector<Letter>> rows) {
        while (!rows.empty() && rows.back().empty()) rows.pop_back();
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].empty()) throw input_error("tableau has an empty middle row");
            if (r + 1 < rows.size() && rows[r].size() < rows[r + 1].size())
                throw input_error("tableau row lengths must be weakly decreasing");
        }
        Tableau t;
        t.rows_ = std::move(rows);
        return t;
    }

    static Tableau from_signed_rows(const std::vector<std::vector<int>>& rows) {
        std::vector<std::vector<Letter>> ls(rows.size());
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (int v : rows[r]) ls[r].push_back(Letter::from_signed(v));
        return from_rows(std::move(ls));
    }

    Partition shape() const {
        std::vector<int> v;
        v.reserve(rows_.size());
        for (const auto& row : rows_) v.push_back(static_cast<int>(row.size()));
        return Partition(std::move(v));
    }

    int num_rows() const { return static_cast<int>(rows_.size()); }
    bool empty() const { return rows_.empty(); }
    int row_length(int r) const {
        return (r >= 1 && r <= num_rows()) ? static_cast<int>(rows_[r - 1].size()) : 0;
    }

    const std::vector<std::vector<Letter>>& rows() const { return rows_; }

    Letter at(Cell c) const {
        if (c.row < 1 || c.row > num_rows() || c.col < 1 || c.col > row_length(c.row))
            throw input_error("cell outside tableau");
        return rows_[c.row - 1][c.col - 1];
    }

    bool has_cell(Cell c) const {
        return c.row >= 1 && c.col >= 1 && c.col <= row_length(c.row);
    }

    /// Rows weakly increase, columns strictly increase (symplectic order).
    bool is_semistandard() const {
        for (int r = 1; r <= num_rows(); ++r)
            for (int c = 1; c <= row_length(r); ++c) {
                if (c > 1 && at({r, c - 1}) > at({r, c})) return false;
                if (r > 1 && at({r - 1, c}) >= at({r, c})) return false;
            }
        return true;
    }

    /// Semistandard with every entry in row i at least the unbarred letter i.
    bool is_king() const {
        if (!is_semistandard()) return false;
        for (int r = 1; r <= num_rows(); ++r)
            for (int c = 1; c <= row_length(r); ++c)
                if (at({r, c}) < Letter::unbarred(r)) return false;
        return true;
    }

    /// Unbarred entries 1..n, each exactly once, rows and columns strict.
    bool is_standard() const {
        int n = shape().size();
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        for (int r = 1; r <= num_rows(); ++r)
            for (int c = 1; c <= row_length(r); ++c) {
                Letter a = at({r, c});
                if (a.is_barred() || a.index() > n || seen[a.index()]) return false;
                seen[a.index()] = true;
                if (c > 1 && at({r, c - 1}) >= a) return false;
                if (r > 1 && at({r - 1, c}) >= a) return false;
            }
        return true;
    }

    std::vector<std::vector<int>> to_signed_rows() const {
        std::vector<std::vector<int>> out(rows_.size());
        for (std::size_t r = 0; r < rows_.size(); ++r)
            for (Letter a : rows_[r]) out[r].push_back(a.to_signed());
        return out;
    }

    friend auto operator<=>(const Tableau&, const Tableau&) = default;

  private:
    std::vector<std::vector<Letter>> rows_;
};

/// Rows read bottom to top, each left to right.
inline Word row_word(const Tableau& t) {
    Word w;
    for (int r = t.num_rows(); r >= 1; --r)
        for (int c = 1; c <= t.row_length(r); ++c) w.push_back(t.at({r, c}));
    return w;
}

/// Columns read bottom to top, leftmost column first.
inline Word col_word(const Tableau& t) {
    Word w;
    for (int c = 1; c <= t.row_length(1); ++c)
        for (int r = t.num_rows(); r >= 1; --r)
            if (t.has_cell({r, c})) w.push_back(t.at({r, c}));
    return w;
}

/// A filling of a skew shape outer \ inner.  Row r stores the letters in
/// columns inner_r+1 .. outer_r; rows fully covered by the inner shape are
/// stored empty.
class SkewTableau {
  public:
    SkewTableau() = default;

    SkewTableau(Partition inner, std::vector<std::vector<Letter>> rows)
        : inner_(std::move(inner)), rows_(std::move(rows)) {
        while (!rows_.empty() && rows_.back().empty() &&
               inner_.row(static_cast<int>(rows_.size())) == 0)
            rows_.pop_back();
        outer();  // validates that the outer edge is a partition containing inner
    }

    static SkewTableau from_tableau(const Tableau& t) {
        return SkewTableau(Partition{}, t.rows());
    }

    const Partition& inner() const { return inner_; }

    Partition outer() const {
        std::vector<int> v;
        int n = std::max<int>(static_cast<int>(rows_.size()), inner_.num_rows());
        for (int r = 1; r <= n; ++r) v.push_back(inner_.row(r) + row_cells(r));
        Partition out(std::move(v));
        if (!out.contains(inner_)) throw input_error("skew outer does not contain inner");
        return out;
    }

    int row_cells(int r) const {
        return (r >= 1 && r <= static_cast<int>(rows_.size()))
                   ? static_cast<int>(rows_[r - 1].size())
                   : 0;
    }

    int num_cells() const {
        int n = 0;
        for (const auto& row : rows_) n += static_cast<int>(row.size());
        return n;
    }

    bool has_cell(Cell c) const {
        return c.row >= 1 && c.col > inner_.row(c.row) &&
               c.col <= inner_.row(c.row) + row_cells(c.row);
    }

    Letter at(Cell c) const {
        if (!has_cell(c)) throw input_error("cell outside skew tableau");
        return rows_[c.row - 1][c.col - inner_.row(c.row) - 1];
    }

    bool is_semistandard() const {
        Partition out = outer();
        for (int r = 1; r <= out.num_rows(); ++r)
            for (int c = inner_.row(r) + 1; c <= out.row(r); ++c) {
                if (has_cell({r, c - 1}) && at({r, c - 1}) > at({r, c})) return false;
                if (has_cell({r - 1, c}) && at({r - 1, c}) >= at({r, c})) return false;
            }
        return true;
    }

    friend auto operator<=>(const SkewTableau&, const SkewTableau&) = default;

  private:
    Partition inner_;
    std::vector<std::vector<Letter>> rows_;
};

inline Word row_word(const SkewTableau& s) {
    Word w;
    for (int r = s.outer().num_rows(); r >= 1; --r)
        for (int c = s.inner().row(r) + 1; c <= s.inner().row(r) + s.row_cells(r); ++c)
            w.push_back(s.at({r, c}));
    return w;
}

}  // namespace tableaux
