#pragma once

#include <compare>
#include <string>

#include "tableaux/error.hpp"

namespace tableaux {

/// A letter of the alphabet 1 < 1' < 2 < 2' < ... < k < k' (the symplectic
/// order; primes denote barred letters).  Internally a letter is its rank in
/// that chain: rank(i) = 2i-1, rank(i') = 2i, a bijection onto 1..2k.
class Letter {
  public:
    constexpr Letter() = default;

    static constexpr Letter unbarred(int index) { return Letter(2 * index - 1); }
    static constexpr Letter barred(int index) { return Letter(2 * index); }

    static Letter from_rank(int rank) {
        if (rank < 1) throw input_error("letter rank must be positive");
        return Letter(rank);
    }

    /// Signed encoding used at all external boundaries: +i is unbarred i,
    /// -i is barred i.
    static Letter from_signed(int s) {
        if (s == 0) throw input_error("letter 0 is not in the alphabet");
        return s > 0 ? unbarred(s) : barred(-s);
    }

    constexpr int index() const { return (rank_ + 1) / 2; }
    constexpr bool is_barred() const { return rank_ % 2 == 0; }
    constexpr int rank() const { return rank_; }
    constexpr int to_signed() const { return is_barred() ? -index() : index(); }

    friend constexpr auto operator<=>(Letter, Letter) = default;

  private:
    explicit constexpr Letter(int rank) : rank_(rank) {}
    int rank_ = 1;
};

inline std::strong_ordering symplectic_cmp(Letter a, Letter b) { return a <=> b; }

inline std::string to_string(Letter a) { return std::to_string(a.to_signed()); }

}  // namespace tableaux
