#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "tableaux/bender_knuth.hpp"
#include "tableaux/correspondences.hpp"
#include "tableaux/enumerate.hpp"
#include "tableaux/json_io.hpp"
#include "tableaux/knuth.hpp"
#include "tableaux/symfunc.hpp"

namespace tableaux::verify {

struct Report {
    std::string suite;
    bool passed = true;
    long long checked = 0;
    json counterexample;  // null when passed

    void fail(json why) {
        if (passed) {
            passed = false;
            counterexample = std::move(why);
        }
    }

    json to_json() const {
        json out{{"suite", suite}, {"passed", passed}, {"checked", checked}};
        if (!passed) out["counterexample"] = counterexample;
        return out;
    }
};

namespace detail {

inline std::vector<Word> all_words(int num_letters, int length) {
    std::vector<Word> out{{}};
    for (int j = 0; j < length; ++j) {
        std::vector<Word> next;
        for (const Word& w : out)
            for (int rank = 1; rank <= num_letters; ++rank) {
                Word v = w;
                v.push_back(Letter::from_rank(rank));
                next.push_back(std::move(v));
            }
        out = std::move(next);
    }
    return out;
}

}  // namespace detail

/// RS and RSK of type A are bijections at the given scale: exhaustive round
/// trips and injectivity over all words of num_letters letters (treated as a
/// plain ordered alphabet) and all arrays with top in [l].
inline Report verify_bijection_a(int num_letters, int l, int n) {
    Report rep;
    rep.suite = "bijection-a";
    for (int m = 0; m <= n; ++m) {
        std::set<std::pair<Tableau, Tableau>> images;
        for (const Word& w : detail::all_words(num_letters, m)) {
            auto [p, q] = rs_a(w);
            ++rep.checked;
            if (p.shape() != q.shape() || !p.is_semistandard() || !q.is_standard())
                rep.fail({{"word", to_json(w)}, {"reason", "malformed RS-A image"}});
            if (inverse_rs_a(p, q) != w)
                rep.fail({{"word", to_json(w)}, {"reason", "RS-A round trip failed"}});
            images.insert({p, q});
        }
        if (images.size() != detail::all_words(num_letters, m).size())
            rep.fail({{"reason", "RS-A is not injective"}, {"length", m}});
    }
    for (int m = 0; m <= n; ++m) {
        std::set<std::pair<Tableau, Tableau>> images;
        auto arrays = enumerate_arrays(l, num_letters, m);
        for (const TwoLineArray& w : arrays) {
            auto [p, q] = rsk_a(w);
            ++rep.checked;
            if (p.shape() != q.shape() || !p.is_semistandard() || !q.is_semistandard())
                rep.fail({{"array", to_json(w)}, {"reason", "malformed RSK-A image"}});
            if (inverse_rsk_a(p, q) != w)
                rep.fail({{"array", to_json(w)}, {"reason", "RSK-A round trip failed"}});
            images.insert({p, q});
        }
        if (images.size() != arrays.size())
            rep.fail({{"reason", "RSK-A is not injective"}, {"length", m}});
    }
    return rep;
}

/// Berele's correspondence is a bijection.  Exhaustive round trips
/// over [k']^m for m <= n, plus the counting identity
/// sum_shape |KT_k| * |OT_{k,m}| = (2k)^m.
inline Report verify_bijection_c(int k, int n) {
    Report rep;
    rep.suite = "bijection-c";
    for (int m = 0; m <= n; ++m) {
        std::set<std::pair<Tableau, OscillatingTableau>> images;
        auto words = detail::all_words(2 * k, m);
        for (const Word& w : words) {
            auto [p, q] = rs_c(w);
            ++rep.checked;
            if (!p.is_king() || p.shape() != q.final_shape() || q.length() != m ||
                q.max_rows() > k)
                rep.fail({{"word", to_json(w)}, {"reason", "malformed RS-C image"}});
            if (inverse_rs_c(p, q) != w)
                rep.fail({{"word", to_json(w)}, {"reason", "RS-C round trip failed"}});
            images.insert({p, q});
        }
        if (images.size() != words.size())
            rep.fail({{"reason", "RS-C is not injective"}, {"length", m}});

        long long total = 0;
        for (const Partition& shape : partitions_up_to(m, k)) {
            if ((m - shape.size()) % 2 != 0) continue;
            total += static_cast<long long>(enumerate_kt(k, shape).size()) *
                     static_cast<long long>(enumerate_ot(k, m, shape).size());
        }
        long long expect = 1;
        for (int j = 0; j < m; ++j) expect *= 2 * k;
        if (total != expect)
            rep.fail({{"reason", "KT x OT count identity failed"},
                      {"length", m},
                      {"total", total},
                      {"expected", expect}});
    }
    return rep;
}

/// Type-C RSK is a bijection onto pairs (King tableau, l-SSOT).
/// Exhaustive round trips, injectivity, image counting, the standardization
/// compatibility, and the per-block deletion/addition structure.
inline Report verify_rsk_c(int k, int l, int n) {
    Report rep;
    rep.suite = "rsk-c";
    for (int m = 0; m <= n; ++m) {
        auto arrays = enumerate_arrays(l, 2 * k, m);
        std::set<std::pair<Tableau, Ssot>> images;
        for (const TwoLineArray& w : arrays) {
            auto [p, q] = rsk_c(w);
            ++rep.checked;
            if (!p.is_king() || p.shape() != q.final_shape() || q.length() != m ||
                !q.is_valid(l))
                rep.fail({{"array", to_json(w)}, {"reason", "malformed RSK-C image"}});
            if (inverse_rsk_c(p, q) != w)
                rep.fail({{"array", to_json(w)}, {"reason", "RSK-C round trip failed"}});
            if (standardize_ssot(q) != rs_c(w.bottom).second)
                rep.fail({{"array", to_json(w)},
                          {"reason", "standardization compatibility failed"}});
            images.insert({p, q});

            // Within each block of equal top letters the deletions form an
            // initial segment, and both phases are horizontal strips.
            Tableau cur;
            std::size_t j = 0;
            while (j < w.length()) {
                std::size_t end = j;
                while (end < w.length() && w.top[end] == w.top[j]) ++end;
                Partition start = cur.shape();
                bool adding = false;
                Partition after_deletes = start;
                for (std::size_t t = j; t < end; ++t) {
                    auto [next, rec] = berele_insert(cur, w.bottom[t]);
                    cur = std::move(next);
                    if (rec.kind == StepKind::added)
                        adding = true;
                    else if (adding)
                        rep.fail({{"array", to_json(w)},
                                  {"reason", "deletion after addition in one block"}});
                    if (!adding) after_deletes = cur.shape();
                }
                if (!is_horizontal_strip(after_deletes, start) ||
                    !is_horizontal_strip(after_deletes, cur.shape()))
                    rep.fail({{"array", to_json(w)},
                              {"reason", "block phases are not horizontal strips"}});
                j = end;
            }
        }
        if (images.size() != arrays.size())
            rep.fail({{"reason", "RSK-C is not injective"}, {"length", m}});

        long long total = 0;
        for (const Partition& shape : partitions_up_to(m, std::min(k, l)))
            total += static_cast<long long>(enumerate_kt(k, shape).size()) *
                     static_cast<long long>(enumerate_ssot(l, m, shape).size());
        if (total != static_cast<long long>(arrays.size()))
            rep.fail({{"reason", "KT x SSOT count does not match the array count"},
                      {"length", m},
                      {"total", total},
                      {"arrays", arrays.size()}});
    }
    return rep;
}

/// The duality of the Cauchy identity: the truncated product equals both the
/// type-A and the type-C expansions, coefficientwise.
inline Report verify_cauchy(int k, int degree) {
    Report rep;
    rep.suite = "cauchy";
    LaurentPolynomial product = cauchy_product_truncated(k, degree);
    LaurentPolynomial a = cauchy_rhs_a(k, degree);
    LaurentPolynomial c = cauchy_rhs_c(k, degree);
    rep.checked = static_cast<long long>(product.size());
    if (product != a)
        rep.fail({{"reason", "product != Schur x Schur expansion"}});
    if (product != c)
        rep.fail({{"reason", "product != sp x ss expansion"}});
    return rep;
}

/// Symmetry of the SSOT polynomial for one shape and length, together with
/// symmetry and bar-inversion invariance of the symplectic Schur polynomial.
inline Report verify_ssot_symmetry(int k, const Partition& shape, int n) {
    Report rep;
    rep.suite = "ssot-symmetry";
    LaurentPolynomial ss = ssot_poly(shape, k, n);
    ++rep.checked;
    if (!is_symmetric(ss, VarFamily::y, k))
        rep.fail({{"reason", "ss polynomial is not symmetric"},
                  {"shape", to_json(shape)},
                  {"n", n}});
    if (shape.num_rows() <= k) {
        LaurentPolynomial sp = sp_poly(shape, k);
        ++rep.checked;
        if (!is_symmetric(sp, VarFamily::x, k))
            rep.fail({{"reason", "sp polynomial is not symmetric"}, {"shape", to_json(shape)}});
        if (!is_bar_invariant(sp, k))
            rep.fail({{"reason", "sp polynomial is not bar-invariant"},
                      {"shape", to_json(shape)}});
    }
    return rep;
}

/// Knuth theory: BFS closure of the K1-K4 moves matches P_A-equality classes
/// on unbarred words; type-A equivalence implies type-C equivalence on barred
/// words; the canonical word map is idempotent.
inline Report verify_knuth(int k_unbarred, int k_barred, int n) {
    Report rep;
    rep.suite = "knuth";
    for (int m = 0; m <= n; ++m) {
        std::map<Word, int> component;
        auto words = detail::all_words(k_unbarred, m);
        // Restrict to unbarred letters: ranks 1..k map to letters 1..k.
        for (Word& w : words)
            for (Letter& a : w) a = Letter::unbarred(a.rank());
        int comp = 0;
        for (const Word& w : words) {
            if (component.count(w)) continue;
            ++comp;
            std::vector<Word> stack{w};
            component[w] = comp;
            while (!stack.empty()) {
                Word cur = stack.back();
                stack.pop_back();
                for (auto& [mv, next] : elementary_neighbors(cur)) {
                    if (component.count(next)) {
                        if (component[next] != comp)
                            rep.fail({{"reason", "BFS merged two components"},
                                      {"word", to_json(next)}});
                        continue;
                    }
                    component[next] = comp;
                    stack.push_back(next);
                }
            }
        }
        std::map<Tableau, std::set<int>> by_p;
        for (const Word& w : words) {
            ++rep.checked;
            by_p[rs_a(w).first].insert(component[w]);
        }
        std::set<int> seen;
        for (const auto& [p, comps] : by_p) {
            if (comps.size() != 1)
                rep.fail({{"reason", "one P-class spans several K1-K4 components"},
                          {"p", to_json(p)}});
            for (int c : comps) {
                if (seen.count(c))
                    rep.fail({{"reason", "one K1-K4 component spans several P-classes"}});
                seen.insert(c);
            }
        }
    }
    for (int m = 0; m <= n; ++m) {
        std::map<Tableau, std::vector<Word>> classes_a;
        for (const Word& w : detail::all_words(2 * k_barred, m))
            classes_a[rs_a(w).first].push_back(w);
        for (const auto& [p, ws] : classes_a)
            for (const Word& w : ws) {
                ++rep.checked;
                if (!knuth_equiv_c(ws.front(), w))
                    rep.fail({{"reason", "A-equivalence does not imply C-equivalence"},
                              {"w", to_json(ws.front())},
                              {"w2", to_json(w)}});
                Word can = canonical_word_c(w);
                if (canonical_word_c(can) != can)
                    rep.fail({{"reason", "canonical word is not idempotent"},
                              {"word", to_json(w)}});
            }
    }
    return rep;
}

/// Bender-Knuth involutions: f_i on all SSYT_k(shape) with |shape| <=
/// max_size, and g_i on SSOT_{k_c,n}(shape_c) when a shape is supplied.
inline Report verify_bk(int k, int max_size) {
    Report rep;
    rep.suite = "bk";
    for (const Partition& shape : partitions_up_to(max_size, k))
        for (const Tableau& t : enumerate_ssyt(k, shape))
            for (int i = 1; i + 1 <= k; ++i) {
                ++rep.checked;
                Tableau ft = bk_a(t, i);
                auto count = [](const Tableau& u, int j) {
                    int c = 0;
                    for (const auto& row : u.rows())
                        for (Letter a : row)
                            if (a == Letter::unbarred(j)) ++c;
                    return c;
                };
                bool ok = ft.is_semistandard() && ft.shape() == t.shape() &&
                          bk_a(ft, i) == t && count(ft, i) == count(t, i + 1) &&
                          count(ft, i + 1) == count(t, i);
                for (int j = 1; j <= k && ok; ++j)
                    if (j != i && j != i + 1 && count(ft, j) != count(t, j)) ok = false;
                if (!ok)
                    rep.fail({{"reason", "f_i failed"}, {"tableau", to_json(t)}, {"i", i}});
            }
    return rep;
}

inline Report verify_bk_c(int k, const Partition& shape, int n) {
    Report rep;
    rep.suite = "bk";
    auto ssots = enumerate_ssot(k, n, shape);
    for (const Ssot& s : ssots)
        for (int i = 1; i + 1 <= k; ++i) {
            ++rep.checked;
            Ssot gs = bk_c(s, i, k);
            auto count = [](const Ssot& u, int j) {
                int c = 0;
                for (int v : u.content())
                    if (v == j) ++c;
                return c;
            };
            bool ok = gs.is_valid(k) && gs.final_shape() == s.final_shape() &&
                      gs.length() == s.length() && bk_c(gs, i, k) == s &&
                      count(gs, i) == count(s, i + 1) && count(gs, i + 1) == count(s, i);
            for (int j = 1; j <= k && ok; ++j)
                if (j != i && j != i + 1 && count(gs, j) != count(s, j)) ok = false;
            if (!ok)
                rep.fail({{"reason", "g_i failed"}, {"ssot", to_json(s)}, {"i", i}});
        }
    return rep;
}

/// Horizontal-strip structure of monotone insertion runs: over all King
/// tableaux of size <= max_size and all weakly increasing words of length <=
/// n, deletions precede additions, and each phase's cells form a horizontal
/// strip appearing from the stated side.
inline Report verify_strips(int k, int max_size, int n) {
    Report rep;
    rep.suite = "strips";
    std::vector<Word> inc_words{{}};
    for (int m = 1; m <= n; ++m) {
        auto rec = [&](auto&& self, Word& cur, int min_rank) -> void {
            if (static_cast<int>(cur.size()) == m) {
                inc_words.push_back(cur);
                return;
            }
            for (int r = min_rank; r <= 2 * k; ++r) {
                cur.push_back(Letter::from_rank(r));
                self(self, cur, r);
                cur.pop_back();
            }
        };
        Word cur;
        rec(rec, cur, 1);
    }
    for (const Partition& shape : partitions_up_to(max_size, k))
        for (const Tableau& t : enumerate_kt(k, shape))
            for (const Word& w : inc_words) {
                ++rep.checked;
                Tableau cur = t;
                std::vector<StepRecord> recs;
                for (Letter a : w) {
                    auto [next, rec] = berele_insert(cur, a);
                    cur = std::move(next);
                    recs.push_back(rec);
                }
                bool adding = false;
                Partition after_deletes = t.shape();
                bool ok = true;
                for (std::size_t j = 0; j < recs.size(); ++j) {
                    if (recs[j].kind == StepKind::added) {
                        if (j > 0 && recs[j - 1].kind == StepKind::added &&
                            recs[j].cell.col <= recs[j - 1].cell.col)
                            ok = false;  // additions appear from the left
                        adding = true;
                    } else {
                        if (adding) {
                            ok = false;  // deletions form a prefix
                            break;
                        }
                        if (j > 0 && recs[j - 1].kind == StepKind::deleted &&
                            recs[j].cell.col >= recs[j - 1].cell.col)
                            ok = false;  // deletions disappear from the right
                        after_deletes = after_deletes.with_cell_removed(recs[j].cell);
                    }
                }
                if (!is_horizontal_strip(after_deletes, t.shape()) ||
                    !is_horizontal_strip(after_deletes, cur.shape()))
                    ok = false;
                if (!ok)
                    rep.fail({{"reason", "strip structure violated"},
                              {"tableau", to_json(t)},
                              {"word", to_json(w)}});
            }
    return rep;
}

}  // namespace tableaux::verify
