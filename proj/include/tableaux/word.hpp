#pragma once

#include <string>
#include <vector>

#include "tableaux/letter.hpp"

namespace tableaux {

using Word = std::vector<Letter>;

inline Word word_from_signed(const std::vector<int>& s) {
    Word w;
    w.reserve(s.size());
    for (int v : s) w.push_back(Letter::from_signed(v));
    return w;
}

inline std::vector<int> word_to_signed(const Word& w) {
    std::vector<int> s;
    s.reserve(w.size());
    for (Letter a : w) s.push_back(a.to_signed());
    return s;
}

inline std::string to_string(const Word& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ' ';
        s += to_string(w[i]);
    }
    return s;
}

}  // namespace tableaux
