#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>

#include "tableaux/error.hpp"

namespace tableaux {

enum class VarFamily { x, y };

/// A monomial in the variables x_1^{+-}, x_2^{+-}, ... and y_1, y_2, ....
/// x exponents may be negative; zero exponents are never stored.
class Monomial {
  public:
    Monomial() = default;

    static Monomial x(int j, int e = 1) { return Monomial().times_x(j, e); }
    static Monomial y(int j, int e = 1) { return Monomial().times_y(j, e); }

    Monomial times_x(int j, int e) const {
        Monomial m = *this;
        m.bump(m.x_, j, e);
        return m;
    }
    Monomial times_y(int j, int e) const {
        Monomial m = *this;
        m.bump(m.y_, j, e);
        return m;
    }

    Monomial times(const Monomial& o) const {
        Monomial m = *this;
        for (auto [j, e] : o.x_) m.bump(m.x_, j, e);
        for (auto [j, e] : o.y_) m.bump(m.y_, j, e);
        return m;
    }

    int y_degree() const {
        int d = 0;
        for (auto [j, e] : y_) d += e;
        return d;
    }

    const std::map<int, int>& x_exponents() const { return x_; }
    const std::map<int, int>& y_exponents() const { return y_; }

    /// Exchange two variable indices within one family.
    Monomial with_swapped(VarFamily family, int i, int j) const {
        Monomial m = *this;
        auto& exps = family == VarFamily::x ? m.x_ : m.y_;
        int ei = exps.count(i) ? exps.at(i) : 0;
        int ej = exps.count(j) ? exps.at(j) : 0;
        exps.erase(i);
        exps.erase(j);
        if (ej != 0) exps[i] = ej;
        if (ei != 0) exps[j] = ei;
        return m;
    }

    /// x_j -> x_j^{-1}.
    Monomial with_x_inverted(int j) const {
        Monomial m = *this;
        auto it = m.x_.find(j);
        if (it != m.x_.end()) it->second = -it->second;
        return m;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    /// Canonical term order: graded on total y-degree, then lexicographic on
    /// the y and x exponent maps.
    friend bool operator<(const Monomial& a, const Monomial& b) {
        int da = a.y_degree(), db = b.y_degree();
        if (da != db) return da < db;
        if (a.y_ != b.y_) return a.y_ < b.y_;
        return a.x_ < b.x_;
    }

  private:
    static void bump(std::map<int, int>& exps, int j, int e) {
        if (j < 1) throw input_error("variable indices start at 1");
        if (e == 0) return;
        auto [it, inserted] = exps.try_emplace(j, 0);
        it->second += e;
        if (it->second == 0) exps.erase(it);
    }

    std::map<int, int> x_, y_;
};

/// Exact sparse Laurent polynomial with arbitrary-precision integer
/// coefficients.
class LaurentPolynomial {
  public:
    LaurentPolynomial() = default;

    static LaurentPolynomial zero() { return {}; }
    static LaurentPolynomial one() { return term(Monomial{}, 1); }
    static LaurentPolynomial term(const Monomial& m, mpz_class c) {
        LaurentPolynomial p;
        if (c != 0) p.terms_[m] = std::move(c);
        return p;
    }

    const std::map<Monomial, mpz_class>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    mpz_class coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? mpz_class(0) : it->second;
    }

    LaurentPolynomial& add_term(const Monomial& m, const mpz_class& c) {
        if (c == 0) return *this;
        auto [it, inserted] = terms_.try_emplace(m, 0);
        it->second += c;
        if (it->second == 0) terms_.erase(it);
        return *this;
    }

    LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    LaurentPolynomial& operator-=(const LaurentPolynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
        return a += b;
    }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
        return a -= b;
    }

    friend LaurentPolynomial operator*(const LaurentPolynomial& a,
                                       const LaurentPolynomial& b) {
        return multiply_truncated(a, b, -1);
    }

    /// Product with all terms of total y-degree above bound discarded
    /// (bound < 0 means no truncation).
    static LaurentPolynomial multiply_truncated(const LaurentPolynomial& a,
                                                const LaurentPolynomial& b, int bound) {
        LaurentPolynomial out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m = ma.times(mb);
                if (bound >= 0 && m.y_degree() > bound) continue;
                out.add_term(m, ca * cb);
            }
        return out;
    }

    LaurentPolynomial mapped(auto&& f) const {
        LaurentPolynomial out;
        for (const auto& [m, c] : terms_) out.add_term(f(m), c);
        return out;
    }

    LaurentPolynomial with_swapped(VarFamily family, int i, int j) const {
        return mapped([&](const Monomial& m) { return m.with_swapped(family, i, j); });
    }

    LaurentPolynomial with_x_inverted(int j) const {
        return mapped([&](const Monomial& m) { return m.with_x_inverted(j); });
    }

    friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  private:
    std::map<Monomial, mpz_class> terms_;
};

}  // namespace tableaux
