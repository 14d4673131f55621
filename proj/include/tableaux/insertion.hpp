#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "tableaux/error.hpp"
#include "tableaux/tableau.hpp"

namespace tableaux {

enum class StepKind { added, deleted };

/// One insertion step's effect on the shape: the box added to it, or the
/// corner removed from the pre-insertion shape.
struct StepRecord {
    StepKind kind;
    Cell cell;
    friend constexpr auto operator<=>(const StepRecord&, const StepRecord&) = default;
};

namespace detail {

/// Mutable filling used by all sliding algorithms.  Row r occupies columns
/// offset[r-1]+1 .. offset[r-1]+rows[r-1].size(); the hole, when present, is
/// an ordinary slot whose value is ignored.
struct SlideGrid {
    std::vector<int> offset;
    std::vector<std::vector<Letter>> rows;

    int num_rows() const { return static_cast<int>(rows.size()); }
    int row_begin(int r) const { return offset[r - 1] + 1; }
    int row_end(int r) const {
        return offset[r - 1] + static_cast<int>(rows[r - 1].size());
    }
    bool present(Cell c) const {
        return c.row >= 1 && c.row <= num_rows() && !rows[c.row - 1].empty() &&
               c.col >= row_begin(c.row) && c.col <= row_end(c.row);
    }
    Letter get(Cell c) const { return rows[c.row - 1][c.col - offset[c.row - 1] - 1]; }
    void set(Cell c, Letter v) { rows[c.row - 1][c.col - offset[c.row - 1] - 1] = v; }
};

/// One forward slide of the hole: the smaller of the below/right neighbours
/// moves into the hole (ties to below).  Returns false when the hole is at an
/// outer corner and no move exists.
inline bool forward_slide_step(SlideGrid& g, Cell& hole) {
    Cell below{hole.row + 1, hole.col};
    Cell right{hole.row, hole.col + 1};
    bool b = g.present(below);
    bool r = g.present(right);
    if (!b && !r) return false;
    bool move_below = b && (!r || g.get(below) <= g.get(right));
    if (move_below) {
        g.set(hole, g.get(below));
        hole = below;
    } else {
        g.set(hole, g.get(right));
        hole = right;
    }
    return true;
}

/// Slides the hole to an outer corner and removes it.  Returns the corner.
inline Cell slide_hole_out(SlideGrid& g, Cell hole) {
    while (forward_slide_step(g, hole)) {
    }
    if (hole.col != g.row_end(hole.row))
        throw invariant_error("slide terminated away from the row end");
    g.rows[hole.row - 1].pop_back();
    while (!g.rows.empty() && g.rows.back().empty()) {
        g.rows.pop_back();
        g.offset.pop_back();
    }
    return hole;
}

inline Tableau grid_to_tableau(const SlideGrid& g) {
    for (int o : g.offset)
        if (o != 0) throw invariant_error("grid is not of straight shape");
    return Tableau::from_rows(g.rows);
}

}  // namespace detail

/// Schensted row insertion: bump the smallest entry larger than the incoming
/// letter, row by row.  Returns the tableau and the new corner cell.
inline std::pair<Tableau, Cell> row_insert_a(const Tableau& t, Letter x) {
    if (!t.is_semistandard())
        throw invariant_error("row_insert_a requires a semistandard tableau");
    auto rows = t.rows();
    Letter cur = x;
    for (std::size_t r = 0;; ++r) {
        if (r == rows.size()) {
            rows.push_back({cur});
            return {Tableau::from_rows(std::move(rows)),
                    Cell{static_cast<int>(r) + 1, 1}};
        }
        auto& row = rows[r];
        auto it = std::upper_bound(row.begin(), row.end(), cur);
        if (it == row.end()) {
            row.push_back(cur);
            Cell cell{static_cast<int>(r) + 1, static_cast<int>(row.size())};
            return {Tableau::from_rows(std::move(rows)), cell};
        }
        std::swap(cur, *it);
    }
}

/// A skew filling with exactly one empty box.
class PuncturedTableau {
  public:
    PuncturedTableau(Partition inner, std::vector<std::vector<Letter>> rows, Cell hole)
        : inner_(std::move(inner)), rows_(std::move(rows)), hole_(hole) {
        Partition out = outer();
        if (!out.contains_cell(hole_) || inner_.contains_cell(hole_))
            throw input_error("hole is not a cell of the skew shape");
    }

    const Partition& inner() const { return inner_; }

    Partition outer() const {
        std::vector<int> v;
        int n = std::max<int>(static_cast<int>(rows_.size()), inner_.num_rows());
        for (int r = 1; r <= n; ++r) v.push_back(inner_.row(r) + row_cells(r));
        Partition out(std::move(v));
        if (!out.contains(inner_)) throw input_error("punctured outer does not contain inner");
        return out;
    }

    Cell hole() const { return hole_; }

    int row_cells(int r) const {
        return (r >= 1 && r <= static_cast<int>(rows_.size()))
                   ? static_cast<int>(rows_[r - 1].size())
                   : 0;
    }

    bool has_filled_cell(Cell c) const {
        return c != hole_ && c.row >= 1 && c.col > inner_.row(c.row) &&
               c.col <= inner_.row(c.row) + row_cells(c.row);
    }

    Letter at(Cell c) const {
        if (!has_filled_cell(c)) throw input_error("cell is not a filled cell");
        return rows_[c.row - 1][c.col - inner_.row(c.row) - 1];
    }

    bool hole_at_outer_corner() const {
        return !has_filled_cell({hole_.row + 1, hole_.col}) &&
               !has_filled_cell({hole_.row, hole_.col + 1});
    }

    /// Semistandard on the filled cells (comparisons across the hole skipped).
    bool is_semistandard() const {
        Partition out = outer();
        for (int r = 1; r <= out.num_rows(); ++r)
            for (int c = inner_.row(r) + 1; c <= out.row(r); ++c) {
                Cell here{r, c};
                if (!has_filled_cell(here)) continue;
                if (has_filled_cell({r, c - 1}) && at({r, c - 1}) > at(here)) return false;
                if (has_filled_cell({r - 1, c}) && at({r - 1, c}) >= at(here)) return false;
            }
        return true;
    }

    const std::vector<std::vector<Letter>>& raw_rows() const { return rows_; }

    friend auto operator<=>(const PuncturedTableau&, const PuncturedTableau&) = default;

  private:
    Partition inner_;
    std::vector<std::vector<Letter>> rows_;
    Cell hole_;
};

/// One slide: the smaller of the neighbours below/right of the empty box
/// moves into it, ties to below.  The empty box must not sit at an outer
/// corner.
inline PuncturedTableau forward_slide(const PuncturedTableau& p) {
    detail::SlideGrid g;
    Partition out = p.outer();
    for (int r = 1; r <= out.num_rows(); ++r) g.offset.push_back(p.inner().row(r));
    g.rows = p.raw_rows();
    g.rows.resize(out.num_rows());
    Cell hole = p.hole();
    if (!detail::forward_slide_step(g, hole))
        throw invariant_error("forward_slide: empty box is at an outer corner");
    return PuncturedTableau(p.inner(), g.rows, hole);
}

/// Puncture the given inner corner, slide the hole out and shrink the shape.
inline SkewTableau jdt_eliminate_corner(const SkewTableau& s, Cell corner) {
    Partition inner = s.inner();
    auto removable = inner.removable_cells();
    if (std::find(removable.begin(), removable.end(), corner) == removable.end())
        throw input_error("not an inner corner");

    detail::SlideGrid g;
    Partition out = s.outer();
    std::vector<std::vector<Letter>> rows;
    for (int r = 1; r <= out.num_rows(); ++r) {
        g.offset.push_back(inner.row(r));
        std::vector<Letter> row;
        for (int c = inner.row(r) + 1; c <= out.row(r); ++c) row.push_back(s.at({r, c}));
        rows.push_back(std::move(row));
    }
    g.rows = std::move(rows);

    g.offset[corner.row - 1] -= 1;
    g.rows[corner.row - 1].insert(g.rows[corner.row - 1].begin(), Letter{});
    detail::slide_hole_out(g, corner);

    Partition new_inner = inner.with_cell_removed(corner);
    g.rows.resize(std::max<int>(static_cast<int>(g.rows.size()), new_inner.num_rows()));
    return SkewTableau(new_inner, g.rows);
}

/// Jeu de taquin rectification (inner corners eliminated bottom-most first;
/// the result does not depend on the order).
inline Tableau jdt_rectify(const SkewTableau& s) {
    if (!s.is_semistandard())
        throw invariant_error("jdt_rectify requires a semistandard skew tableau");
    SkewTableau cur = s;
    while (!cur.inner().empty())
        cur = jdt_eliminate_corner(cur, cur.inner().removable_cells().back());
    std::vector<std::vector<Letter>> rows;
    for (int r = 1; r <= cur.outer().num_rows(); ++r) {
        std::vector<Letter> row;
        for (int c = 1; c <= cur.outer().row(r); ++c) row.push_back(cur.at({r, c}));
        rows.push_back(std::move(row));
    }
    return Tableau::from_rows(std::move(rows));
}

/// Berele insertion.  Runs type-A bumps except when the unbarred letter i is
/// inserted into row i already containing i': then the first i' becomes i,
/// the first i becomes an empty box (always at column 1), and the empty box
/// slides out to a corner which is removed from the shape.
inline std::pair<Tableau, StepRecord> berele_insert(const Tableau& t, Letter x) {
    if (!t.is_king()) throw invariant_error("berele_insert requires a King tableau");
    auto rows = t.rows();
    Letter cur = x;
    for (int r = 1;; ++r) {
        if (r > static_cast<int>(rows.size())) {
            rows.push_back({cur});
            return {Tableau::from_rows(std::move(rows)),
                    StepRecord{StepKind::added, {r, 1}}};
        }
        auto& row = rows[r - 1];
        if (!cur.is_barred() && cur.index() == r &&
            std::find(row.begin(), row.end(), Letter::barred(r)) != row.end()) {
            *std::find(row.begin(), row.end(), Letter::barred(r)) = Letter::unbarred(r);
            auto first_i = std::find(row.begin(), row.end(), Letter::unbarred(r));
            if (first_i != row.begin())
                throw invariant_error("cancellation: first i is not at column 1");
            detail::SlideGrid g;
            g.offset.assign(rows.size(), 0);
            g.rows = std::move(rows);
            Cell corner = detail::slide_hole_out(g, Cell{r, 1});
            return {detail::grid_to_tableau(g), StepRecord{StepKind::deleted, corner}};
        }
        auto it = std::upper_bound(row.begin(), row.end(), cur);
        if (it == row.end()) {
            row.push_back(cur);
            StepRecord rec{StepKind::added, {r, static_cast<int>(row.size())}};
            return {Tableau::from_rows(std::move(rows)), rec};
        }
        std::swap(cur, *it);
    }
}

/// The alternative computation of a Berele step: full type-A insertion over
/// [k'], then, if the symplectic condition broke, blank the violating
/// domino (i above i' in one column) and slide both holes out.
inline std::pair<Tableau, StepRecord> berele_insert_via_type_a(const Tableau& t, Letter x) {
    if (!t.is_king())
        throw invariant_error("berele_insert_via_type_a requires a King tableau");
    auto [u, cell] = row_insert_a(t, x);
    if (u.is_king()) return {u, StepRecord{StepKind::added, cell}};

    // Topmost row violating the symplectic condition.
    int vr = 0, vc = 0, violations = 0;
    for (int r = 1; r <= u.num_rows() && vr == 0; ++r)
        for (int c = 1; c <= u.row_length(r); ++c)
            if (u.at({r, c}) < Letter::unbarred(r)) {
                vr = r;
                vc = c;
                ++violations;
            }
    if (violations != 1 || vr < 2 || u.at({vr, vc}) != Letter::barred(vr - 1) ||
        u.at({vr - 1, vc}) != Letter::unbarred(vr - 1))
        throw invariant_error("expected a unique violating domino");

    detail::SlideGrid g;
    g.offset.assign(u.num_rows(), 0);
    g.rows = u.rows();
    detail::slide_hole_out(g, Cell{vr, vc});
    Cell corner = detail::slide_hole_out(g, Cell{vr - 1, vc});
    return {detail::grid_to_tableau(g), StepRecord{StepKind::deleted, corner}};
}

namespace detail {

/// Reverse bumping: reinsert v into the rows above start_row, evicting the
/// rightmost smaller entry each time.  Returns the letter evicted from row 1,
/// or nullopt when some row has no smaller entry.
inline std::optional<Letter> reverse_bump(std::vector<std::vector<Letter>>& rows,
                                          int start_row, Letter v) {
    Letter cur = v;
    for (int r = start_row; r >= 1; --r) {
        auto& row = rows[r - 1];
        auto it = std::lower_bound(row.begin(), row.end(), cur);
        if (it == row.begin()) return std::nullopt;
        --it;
        std::swap(cur, *it);
    }
    return cur;
}

}  // namespace detail

/// The unique (T, x) with berele_insert(T, x) == (t2, step).  Throws
/// invariant_error when (t2, step) is not in the image of the forward map.
inline std::pair<Tableau, Letter> berele_reverse(const Tableau& t2, const StepRecord& step) {
    auto fail = [] { throw invariant_error("not a valid Berele step"); };

    if (step.kind == StepKind::added) {
        Partition shape = t2.shape();
        auto removable = shape.removable_cells();
        if (std::find(removable.begin(), removable.end(), step.cell) == removable.end())
            fail();
        auto rows = t2.rows();
        Letter v = rows[step.cell.row - 1].back();
        rows[step.cell.row - 1].pop_back();
        if (rows[step.cell.row - 1].empty()) rows.pop_back();
        auto x = detail::reverse_bump(rows, step.cell.row - 1, v);
        if (!x) fail();
        Tableau t = Tableau::from_rows(std::move(rows));
        if (!t.is_king() || berele_insert(t, *x) != std::pair(t2, step)) fail();
        return {t, *x};
    }

    // Deleted: put the hole back at the removed corner and retrace the slide.
    // Whenever the hole stands in column 1 at row r, try to undo the
    // cancellation there (restore row r to i^m i'^p and reverse-bump the
    // letter r upward); the attempt is accepted only if the forward insertion
    // reproduces (t2, step), which identifies the unique valid stop row.
    Partition shape = t2.shape();
    auto addable = shape.addable_cells();
    if (std::find(addable.begin(), addable.end(), step.cell) == addable.end()) fail();

    auto rows = t2.rows();
    if (step.cell.row > static_cast<int>(rows.size())) rows.push_back({});
    rows[step.cell.row - 1].push_back(Letter{});  // hole slot at the row end
    Cell hole = step.cell;

    while (true) {
        if (hole.col == 1) {
            int r = hole.row;
            const auto& row = rows[r - 1];
            std::size_t m = 0, q = 0, pos = 1;
            while (pos < row.size() && row[pos] == Letter::unbarred(r)) ++pos, ++m;
            while (pos < row.size() && row[pos] == Letter::barred(r)) ++pos, ++q;
            auto cand = rows;
            auto& crow = cand[r - 1];
            // The punctured row reads [hole, i^m, i'^q, rest]; restore i^m i'^{q+1} rest.
            for (std::size_t j = 0; j < m; ++j) crow[j] = Letter::unbarred(r);
            for (std::size_t j = m; j <= m + q; ++j) crow[j] = Letter::barred(r);
            auto x = detail::reverse_bump(cand, r - 1, Letter::unbarred(r));
            if (x) {
                Tableau t = Tableau::from_rows(cand);
                if (t.is_king() && berele_insert(t, *x) == std::pair(t2, step))
                    return {t, *x};
            }
        }
        // Reverse slide: move the above neighbour down when it is >= the left
        // neighbour (or the left one is absent), otherwise move the left one
        // right.  This inverts the forward rule.
        bool has_above = hole.row > 1;
        bool has_left = hole.col > 1;
        if (!has_above && !has_left) fail();
        Cell above{hole.row - 1, hole.col};
        Cell left{hole.row, hole.col - 1};
        auto get = [&](Cell c) { return rows[c.row - 1][c.col - 1]; };
        bool move_above = has_above && (!has_left || get(above) >= get(left));
        Cell src = move_above ? above : left;
        rows[hole.row - 1][hole.col - 1] = get(src);
        hole = src;
    }
}

}  // namespace tableaux
