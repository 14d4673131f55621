#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <vector>

#include "tableaux/error.hpp"

namespace tableaux {

/// 1-based position in a Young diagram, English orientation (row 1 on top).
struct Cell {
    int row = 0;
    int col = 0;
    friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

/// An integer partition, stored as its weakly decreasing row lengths.
class Partition {
  public:
    Partition() = default;

    explicit Partition(std::vector<int> rows) : rows_(std::move(rows)) {
        while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (rows_[i] < 1) throw input_error("partition rows must be positive");
            if (i + 1 < rows_.size() && rows_[i] < rows_[i + 1])
                throw input_error("partition rows must be weakly decreasing");
        }
    }

    int num_rows() const { return static_cast<int>(rows_.size()); }
    int size() const { return std::accumulate(rows_.begin(), rows_.end(), 0); }
    bool empty() const { return rows_.empty(); }

    /// Row length; zero beyond the last row.
    int row(int r) const {
        return (r >= 1 && r <= num_rows()) ? rows_[r - 1] : 0;
    }

    const std::vector<int>& rows() const { return rows_; }

    bool contains_cell(Cell c) const {
        return c.row >= 1 && c.col >= 1 && c.col <= row(c.row);
    }

    /// mu is contained in this diagram.
    bool contains(const Partition& mu) const {
        for (int r = 1; r <= mu.num_rows(); ++r)
            if (mu.row(r) > row(r)) return false;
        return true;
    }

    /// this covers mu: mu is contained and exactly one box smaller.
    bool covers(const Partition& mu) const {
        return contains(mu) && size() == mu.size() + 1;
    }

    /// Cells whose addition keeps the diagram a partition.
    std::vector<Cell> addable_cells() const {
        std::vector<Cell> out;
        for (int r = 1; r <= num_rows() + 1; ++r)
            if (row(r) < row(r - 1) || r == 1) out.push_back({r, row(r) + 1});
        return out;
    }

    /// Cells whose removal keeps the diagram a partition (the outer corners).
    std::vector<Cell> removable_cells() const {
        std::vector<Cell> out;
        for (int r = 1; r <= num_rows(); ++r)
            if (row(r) > row(r + 1)) out.push_back({r, row(r)});
        return out;
    }

    Partition with_cell_added(Cell c) const {
        if (c.col != row(c.row) + 1 || (c.row > 1 && row(c.row - 1) < c.col))
            throw invariant_error("cell is not addable");
        std::vector<int> v = rows_;
        if (c.row > num_rows()) v.push_back(0);
        v[c.row - 1] += 1;
        return Partition(std::move(v));
    }

    Partition with_cell_removed(Cell c) const {
        if (c.col != row(c.row) || row(c.row + 1) >= c.col)
            throw invariant_error("cell is not removable");
        std::vector<int> v = rows_;
        v[c.row - 1] -= 1;
        return Partition(std::move(v));
    }

    /// All cells in row-major order.
    std::vector<Cell> cells() const {
        std::vector<Cell> out;
        for (int r = 1; r <= num_rows(); ++r)
            for (int c = 1; c <= row(r); ++c) out.push_back({r, c});
        return out;
    }

    friend auto operator<=>(const Partition&, const Partition&) = default;

  private:
    std::vector<int> rows_;
};

/// True iff inner is contained in outer and the difference has at most one
/// box per column.
inline bool is_horizontal_strip(const Partition& inner, const Partition& outer) {
    if (!outer.contains(inner)) return false;
    // Interlacing: outer_r >= inner_r >= outer_{r+1}.
    for (int r = 1; r <= outer.num_rows(); ++r)
        if (inner.row(r) < outer.row(r + 1)) return false;
    return true;
}

/// All partitions with at most max_rows rows and at most max_size boxes,
/// including the empty one, ordered by (size, shape).
inline std::vector<Partition> partitions_up_to(int max_size, int max_rows) {
    std::vector<Partition> out{Partition{}};
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (!cur.empty()) out.emplace_back(cur);
        if (static_cast<int>(cur.size()) == max_rows) return;
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    if (max_size > 0 && max_rows > 0) rec(rec, max_size, max_size);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        return std::pair(a.size(), a.rows()) < std::pair(b.size(), b.rows());
    });
    return out;
}

/// All partitions contained in outer.
inline std::vector<Partition> sub_partitions_of(const Partition& outer) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int r) -> void {
        if (r > outer.num_rows()) {
            out.emplace_back(cur);
            return;
        }
        int hi = std::min(outer.row(r), r == 1 ? outer.row(1) : cur[r - 2]);
        for (int v = 0; v <= hi; ++v) {
            cur.push_back(v);
            self(self, r + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

/// All mu contained in outer with outer \ mu a horizontal strip.
inline std::vector<Partition> sub_partitions_horizontal(const Partition& outer) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int r) -> void {
        if (r > outer.num_rows()) {
            out.emplace_back(cur);
            return;
        }
        // outer_r >= mu_r >= outer_{r+1}
        for (int v = outer.row(r); v >= outer.row(r + 1); --v) {
            cur.push_back(v);
            self(self, r + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

/// All nu containing inner with nu \ inner a horizontal strip, at most
/// max_rows rows and at most max_add added boxes.
inline std::vector<Partition> super_partitions_horizontal(const Partition& inner,
                                                          int max_rows, int max_add) {
    std::vector<Partition> out;
    std::vector<int> cur;
    int rows = std::min(max_rows, inner.num_rows() + 1);
    auto rec = [&](auto&& self, int r, int budget) -> void {
        if (r > rows) {
            out.emplace_back(cur);
            return;
        }
        // inner_{r-1} >= nu_r >= inner_r (strip condition on the conjugate side),
        // and nu_r <= previous nu row.
        int hi = (r == 1) ? inner.row(1) + budget
                          : std::min(cur[r - 2], inner.row(r - 1));
        hi = std::min(hi, inner.row(r) + budget);
        for (int v = inner.row(r); v <= hi; ++v) {
            cur.push_back(v);
            self(self, r + 1, budget - (v - inner.row(r)));
            cur.pop_back();
        }
    };
    rec(rec, 1, max_add);
    return out;
}

}  // namespace tableaux
