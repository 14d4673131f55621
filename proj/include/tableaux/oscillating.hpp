#pragma once

#include <algorithm>
#include <map>
#include <tuple>
#include <vector>

#include "tableaux/error.hpp"
#include "tableaux/insertion.hpp"
#include "tableaux/partition.hpp"
#include "tableaux/tableau.hpp"

namespace tableaux {

/// A sequence of partitions starting at the empty shape, consecutive shapes
/// differing by exactly one box.
class OscillatingTableau {
  public:
    OscillatingTableau() : shapes_{Partition{}} {}

    explicit OscillatingTableau(std::vector<Partition> shapes) : shapes_(std::move(shapes)) {
        if (shapes_.empty() || !shapes_.front().empty())
            throw input_error("oscillating tableau must start at the empty shape");
        for (std::size_t j = 0; j + 1 < shapes_.size(); ++j)
            if (!shapes_[j].covers(shapes_[j + 1]) && !shapes_[j + 1].covers(shapes_[j]))
                throw input_error("consecutive shapes must differ by one box");
    }

    int length() const { return static_cast<int>(shapes_.size()) - 1; }
    const std::vector<Partition>& shapes() const { return shapes_; }
    const Partition& final_shape() const { return shapes_.back(); }

    int max_rows() const {
        int m = 0;
        for (const auto& s : shapes_) m = std::max(m, s.num_rows());
        return m;
    }

    friend auto operator<=>(const OscillatingTableau&, const OscillatingTableau&) = default;

  private:
    std::vector<Partition> shapes_;
};

struct SsotSubstep {
    int step;
    StepKind kind;
    Cell cell;
    friend constexpr auto operator<=>(const SsotSubstep&, const SsotSubstep&) = default;
};

/// A semistandard oscillating tableau in its compact form: the grid over the
/// union of all intermediate shapes whose cell (r,c) holds the multiset of
/// step numbers at which a box was added or deleted there, together with the
/// final shape.  The step-sequence view is reconstructed on demand: within
/// step i the deletions come first (right to left), then the additions (left
/// to right).
class Ssot {
  public:
    using Grid = std::vector<std::vector<std::vector<int>>>;

    Ssot() = default;

    static Ssot from_grid(Partition final_shape, Grid grid) {
        Ssot s;
        s.final_shape_ = std::move(final_shape);
        s.grid_ = std::move(grid);
        while (!s.grid_.empty() && s.grid_.back().empty()) s.grid_.pop_back();
        for (auto& row : s.grid_)
            for (auto& ms : row) std::sort(ms.begin(), ms.end());
        s.walk();  // validates
        return s;
    }

    /// Build from the labelled step records of an insertion run.
    static Ssot from_records(const std::vector<std::pair<int, StepRecord>>& records) {
        Ssot s;
        Partition cur;
        for (const auto& [u, rec] : records) {
            if (u < 1) throw input_error("step numbers must be positive");
            auto [r, c] = rec.cell;
            if (static_cast<int>(s.grid_.size()) < r) s.grid_.resize(r);
            auto& row = s.grid_[r - 1];
            if (static_cast<int>(row.size()) < c) row.resize(c);
            row[c - 1].push_back(u);
            cur = rec.kind == StepKind::added ? cur.with_cell_added(rec.cell)
                                              : cur.with_cell_removed(rec.cell);
        }
        s.final_shape_ = cur;
        for (auto& row : s.grid_)
            for (auto& ms : row) std::sort(ms.begin(), ms.end());
        s.walk();  // validates
        return s;
    }

    const Partition& final_shape() const { return final_shape_; }
    const Grid& grid() const { return grid_; }

    bool empty() const { return grid_.empty(); }

    /// Total number of letters.
    int length() const {
        int n = 0;
        for (const auto& row : grid_)
            for (const auto& ms : row) n += static_cast<int>(ms.size());
        return n;
    }

    /// Largest step number present (0 for the empty tableau).
    int num_steps() const {
        int m = 0;
        for (const auto& row : grid_)
            for (const auto& ms : row)
                for (int u : ms) m = std::max(m, u);
        return m;
    }

    /// The weakly increasing sequence of step numbers (u_1, ..., u_n).
    std::vector<int> content() const {
        std::vector<int> out;
        for (const auto& row : grid_)
            for (const auto& ms : row) out.insert(out.end(), ms.begin(), ms.end());
        std::sort(out.begin(), out.end());
        return out;
    }

    int multiplicity(Cell cell, int step) const {
        if (cell.row > static_cast<int>(grid_.size())) return 0;
        const auto& row = grid_[cell.row - 1];
        if (cell.col > static_cast<int>(row.size())) return 0;
        const auto& ms = row[cell.col - 1];
        return static_cast<int>(std::count(ms.begin(), ms.end(), step));
    }

    /// The canonical substep sequence.  Throws input_error when the grid is
    /// not the compact encoding of any SSOT.
    std::vector<SsotSubstep> walk() const {
        std::vector<SsotSubstep> out;
        Partition cur;
        for (int r = 0; r < static_cast<int>(grid_.size()); ++r) {
            if (r + 1 < static_cast<int>(grid_.size()) &&
                grid_[r].size() < grid_[r + 1].size())
                throw input_error("compact grid rows must weakly decrease");
            for (const auto& ms : grid_[r])
                if (ms.empty()) throw input_error("compact grid has an untouched cell");
        }
        for (int i = 1; i <= num_steps(); ++i) {
            std::vector<Cell> dels, adds;
            for (int r = 1; r <= static_cast<int>(grid_.size()); ++r)
                for (int c = 1; c <= static_cast<int>(grid_[r - 1].size()); ++c) {
                    int mult = multiplicity({r, c}, i);
                    if (mult == 0) continue;
                    if (mult > 2) throw input_error("a cell can appear at most twice per step");
                    if (mult == 2) {
                        dels.push_back({r, c});
                        adds.push_back({r, c});
                    } else if (cur.contains_cell({r, c})) {
                        dels.push_back({r, c});
                    } else {
                        adds.push_back({r, c});
                    }
                }
            std::sort(dels.begin(), dels.end(),
                      [](Cell a, Cell b) { return a.col > b.col; });
            std::sort(adds.begin(), adds.end(),
                      [](Cell a, Cell b) { return a.col < b.col; });
            try {
                for (Cell c : dels) {
                    cur = cur.with_cell_removed(c);
                    out.push_back({i, StepKind::deleted, c});
                }
                for (Cell c : adds) {
                    cur = cur.with_cell_added(c);
                    out.push_back({i, StepKind::added, c});
                }
            } catch (const invariant_error&) {
                throw input_error("compact grid does not describe horizontal strips");
            }
        }
        if (cur != final_shape_)
            throw input_error("compact grid does not end at the final shape");
        return out;
    }

    /// The partition sequence (S^1, S'^2, S^2, ..., S'^k, S^k) over k steps.
    std::vector<Partition> step_shapes(int k) const {
        if (num_steps() > k) throw input_error("SSOT uses more than k steps");
        auto subs = walk();
        std::vector<Partition> out;
        Partition cur;
        std::size_t idx = 0;
        for (int i = 1; i <= k; ++i) {
            for (StepKind phase : {StepKind::deleted, StepKind::added}) {
                while (idx < subs.size() && subs[idx].step == i && subs[idx].kind == phase) {
                    cur = phase == StepKind::deleted
                              ? cur.with_cell_removed(subs[idx].cell)
                              : cur.with_cell_added(subs[idx].cell);
                    ++idx;
                }
                if (!(i == 1 && phase == StepKind::deleted)) out.push_back(cur);
            }
        }
        return out;
    }

    /// Valid as a k-SSOT: at most k steps, every intermediate shape with at
    /// most k rows, consistent grid.
    bool is_valid(int k) const {
        if (num_steps() > k) return false;
        if (static_cast<int>(grid_.size()) > k) return false;
        try {
            walk();
        } catch (const input_error&) {
            return false;
        }
        return true;
    }

    friend auto operator<=>(const Ssot&, const Ssot&) = default;

  private:
    Partition final_shape_;
    Grid grid_;
};

/// Replace the j-th letter in canonical order by j; the result is the shape
/// sequence obtained by performing the substeps one at a time.
inline OscillatingTableau standardize_ssot(const Ssot& s) {
    auto subs = s.walk();
    std::vector<Partition> shapes{Partition{}};
    for (const auto& sub : subs)
        shapes.push_back(sub.kind == StepKind::added
                             ? shapes.back().with_cell_added(sub.cell)
                             : shapes.back().with_cell_removed(sub.cell));
    return OscillatingTableau(std::move(shapes));
}

/// The tableau of per-cell maxima restricted to the final shape.
inline Tableau ssot_reduce(const Ssot& s) {
    s.walk();  // validate
    std::vector<std::vector<Letter>> rows;
    const Partition& shape = s.final_shape();
    for (int r = 1; r <= shape.num_rows(); ++r) {
        std::vector<Letter> row;
        for (int c = 1; c <= shape.row(r); ++c) {
            const auto& ms = s.grid()[r - 1][c - 1];
            row.push_back(Letter::unbarred(ms.back()));  // multisets are sorted
        }
        rows.push_back(std::move(row));
    }
    return Tableau::from_rows(std::move(rows));
}

/// An SSYT viewed as an SSOT of length equal to its number of boxes: the box
/// (r,c) holding letter v contributes one letter v at (r,c).
inline Ssot ssot_from_ssyt(const Tableau& t) {
    if (!t.is_semistandard()) throw invariant_error("expected a semistandard tableau");
    Ssot::Grid grid;
    for (const auto& row : t.rows()) {
        grid.emplace_back();
        for (Letter a : row) {
            if (a.is_barred()) throw input_error("SSOT letters are unbarred");
            grid.back().push_back({a.index()});
        }
    }
    return Ssot::from_grid(t.shape(), std::move(grid));
}

/// All k-SSOTs of the given final shape and length n.  Parameters with no
/// solutions (parity mismatch, too-long shape) give the empty list.
inline std::vector<Ssot> enumerate_ssot(int k, int n, const Partition& shape) {
    std::vector<Ssot> out;
    if (shape.num_rows() > k) return out;

    using Records = std::vector<std::pair<int, StepRecord>>;
    using Key = std::tuple<int, Partition, int>;
    std::map<Key, std::vector<Records>> memo;

    auto suffixes = [&](auto&& self, int step, const Partition& cur, int used)
        -> const std::vector<Records>& {
        Key key{step, cur, used};
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        std::vector<Records> result;
        int remaining = n - used;
        int delta = shape.size() - cur.size();
        if (remaining >= std::abs(delta) && (remaining - delta) % 2 == 0) {
            if (step > k) {
                if (cur == shape && remaining == 0) result.push_back({});
            } else {
                for (const Partition& mid : sub_partitions_horizontal(cur)) {
                    int cost_d = cur.size() - mid.size();
                    if (cost_d > remaining) continue;
                    for (const Partition& next :
                         super_partitions_horizontal(mid, k, remaining - cost_d)) {
                        Records prefix;
                        std::vector<Cell> dels, adds;
                        for (int r = 1; r <= cur.num_rows(); ++r)
                            for (int c = mid.row(r) + 1; c <= cur.row(r); ++c)
                                dels.push_back({r, c});
                        for (int r = 1; r <= next.num_rows(); ++r)
                            for (int c = mid.row(r) + 1; c <= next.row(r); ++c)
                                adds.push_back({r, c});
                        std::sort(dels.begin(), dels.end(),
                                  [](Cell a, Cell b) { return a.col > b.col; });
                        std::sort(adds.begin(), adds.end(),
                                  [](Cell a, Cell b) { return a.col < b.col; });
                        for (Cell c : dels) prefix.push_back({step, {StepKind::deleted, c}});
                        for (Cell c : adds) prefix.push_back({step, {StepKind::added, c}});
                        for (const Records& suffix :
                             self(self, step + 1, next,
                                  used + cost_d + (next.size() - mid.size()))) {
                            Records full = prefix;
                            full.insert(full.end(), suffix.begin(), suffix.end());
                            result.push_back(std::move(full));
                        }
                    }
                }
            }
        }
        return memo.emplace(std::move(key), std::move(result)).first->second;
    };

    for (const Records& recs : suffixes(suffixes, 1, Partition{}, 0))
        out.push_back(Ssot::from_records(recs));
    return out;
}

/// All k-OTs of length n ending at the given shape.
inline std::vector<OscillatingTableau> enumerate_ot(int k, int n, const Partition& shape) {
    std::vector<OscillatingTableau> out;
    std::vector<Partition> cur{Partition{}};
    auto rec = [&](auto&& self) -> void {
        int used = static_cast<int>(cur.size()) - 1;
        int remaining = n - used;
        int delta = shape.size() - cur.back().size();
        if (remaining < std::abs(delta) || (remaining - delta) % 2 != 0) return;
        if (remaining == 0) {
            if (cur.back() == shape) out.push_back(OscillatingTableau(cur));
            return;
        }
        for (Cell c : cur.back().addable_cells())
            if (c.row <= k) {
                cur.push_back(cur.back().with_cell_added(c));
                self(self);
                cur.pop_back();
            }
        for (Cell c : cur.back().removable_cells()) {
            cur.push_back(cur.back().with_cell_removed(c));
            self(self);
            cur.pop_back();
        }
    };
    rec(rec);
    return out;
}

}  // namespace tableaux
