#pragma once

#include <functional>
#include <vector>

#include "tableaux/partition.hpp"
#include "tableaux/tableau.hpp"

namespace tableaux {

namespace detail {

/// Fillings of `shape` with values from an ordered alphabet of size `asize`
/// (1-based positions in the alphabet), rows weak / columns strict, with an
/// optional per-row minimum position.  Generated in lexicographic order of
/// the row-major position sequence.
inline std::vector<std::vector<std::vector<int>>> enumerate_position_fillings(
    const Partition& shape, int asize, const std::function<int(int)>& row_min) {
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<std::vector<int>> grid(shape.num_rows());
    for (int r = 1; r <= shape.num_rows(); ++r) grid[r - 1].assign(shape.row(r), 0);

    auto cells = shape.cells();
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == cells.size()) {
            out.push_back(grid);
            return;
        }
        auto [r, c] = cells[idx];
        int lo = row_min ? row_min(r) : 1;
        if (c > 1) lo = std::max(lo, grid[r - 1][c - 2]);      // left, weak
        if (r > 1) lo = std::max(lo, grid[r - 2][c - 1] + 1);  // above, strict
        for (int v = lo; v <= asize; ++v) {
            grid[r - 1][c - 1] = v;
            self(self, idx + 1);
        }
        grid[r - 1][c - 1] = 0;
    };
    rec(rec, 0);
    return out;
}

}  // namespace detail

/// All semistandard tableaux of the given shape: over the unbarred letters
/// 1..k by default, or over the full barred alphabet [k'] when barred is set.
inline std::vector<Tableau> enumerate_ssyt(int k, const Partition& shape,
                                           bool barred = false) {
    int asize = barred ? 2 * k : k;
    auto grids = detail::enumerate_position_fillings(shape, asize, nullptr);
    std::vector<Tableau> out;
    out.reserve(grids.size());
    for (const auto& g : grids) {
        std::vector<std::vector<Letter>> rows(g.size());
        for (std::size_t r = 0; r < g.size(); ++r)
            for (int v : g[r])
                rows[r].push_back(barred ? Letter::from_rank(v) : Letter::unbarred(v));
        out.push_back(Tableau::from_rows(std::move(rows)));
    }
    return out;
}

/// All King tableaux of the given shape over [k']; empty when the shape has
/// more than k rows.
inline std::vector<Tableau> enumerate_kt(int k, const Partition& shape) {
    if (shape.num_rows() > k) return {};
    auto row_min = [](int r) { return 2 * r - 1; };  // rank of unbarred r
    auto grids = detail::enumerate_position_fillings(shape, 2 * k, row_min);
    std::vector<Tableau> out;
    out.reserve(grids.size());
    for (const auto& g : grids) {
        std::vector<std::vector<Letter>> rows(g.size());
        for (std::size_t r = 0; r < g.size(); ++r)
            for (int v : g[r]) rows[r].push_back(Letter::from_rank(v));
        out.push_back(Tableau::from_rows(std::move(rows)));
    }
    return out;
}

}  // namespace tableaux
