#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "tableaux/correspondences.hpp"
#include "tableaux/insertion.hpp"
#include "tableaux/laurent.hpp"
#include "tableaux/oscillating.hpp"
#include "tableaux/partition.hpp"
#include "tableaux/tableau.hpp"
#include "tableaux/two_line_array.hpp"
#include "tableaux/word.hpp"

namespace tableaux {

using nlohmann::json;

inline json to_json(const Partition& p) { return json(p.rows()); }

inline Partition partition_from_json(const json& j) {
    try {
        return Partition(j.get<std::vector<int>>());
    } catch (const json::exception&) {
        throw input_error("expected a partition as an array of integers");
    }
}

inline json to_json(const Word& w) { return json(word_to_signed(w)); }

inline Word word_from_json(const json& j) {
    try {
        return word_from_signed(j.get<std::vector<int>>());
    } catch (const json::exception&) {
        throw input_error("expected a word as an array of signed integers");
    }
}

inline json to_json(const Tableau& t) {
    return json{{"shape", to_json(t.shape())}, {"rows", t.to_signed_rows()}};
}

inline Tableau tableau_from_json(const json& j) {
    try {
        Tableau t = Tableau::from_signed_rows(j.at("rows").get<std::vector<std::vector<int>>>());
        if (j.contains("shape") && partition_from_json(j.at("shape")) != t.shape())
            throw input_error("tableau shape does not match its rows");
        return t;
    } catch (const json::exception&) {
        throw input_error("expected a tableau as {\"shape\":[...],\"rows\":[[...]]}");
    }
}

inline json to_json(const TwoLineArray& a) {
    return json{{"top", a.top}, {"bottom", to_json(a.bottom)}};
}

inline TwoLineArray array_from_json(const json& j) {
    try {
        TwoLineArray a;
        a.top = j.at("top").get<std::vector<int>>();
        a.bottom = word_from_json(j.at("bottom"));
        if (a.top.size() != a.bottom.size())
            throw input_error("two-line array rows must have equal length");
        return a;
    } catch (const json::exception&) {
        throw input_error("expected an array as {\"top\":[...],\"bottom\":[...]}");
    }
}

inline json to_json(const StepRecord& s) {
    return json{{"kind", s.kind == StepKind::added ? "added" : "deleted"},
                {"cell", {s.cell.row, s.cell.col}}};
}

inline StepRecord step_record_from_json(const json& j) {
    try {
        std::string kind = j.at("kind").get<std::string>();
        if (kind != "added" && kind != "deleted")
            throw input_error("step kind must be \"added\" or \"deleted\"");
        auto cell = j.at("cell").get<std::vector<int>>();
        if (cell.size() != 2) throw input_error("step cell must be [row, col]");
        return {kind == "added" ? StepKind::added : StepKind::deleted,
                Cell{cell[0], cell[1]}};
    } catch (const json::exception&) {
        throw input_error("expected a step record as {\"kind\":...,\"cell\":[r,c]}");
    }
}

inline json to_json(const OscillatingTableau& ot) {
    json shapes = json::array();
    for (const Partition& s : ot.shapes()) shapes.push_back(to_json(s));
    return json{{"shapes", shapes}};
}

inline OscillatingTableau ot_from_json(const json& j) {
    try {
        std::vector<Partition> shapes;
        for (const json& s : j.at("shapes")) shapes.push_back(partition_from_json(s));
        return OscillatingTableau(std::move(shapes));
    } catch (const json::exception&) {
        throw input_error("expected an oscillating tableau as {\"shapes\":[[...],...]}");
    }
}

inline json to_json(const Ssot& s) {
    return json{{"final_shape", to_json(s.final_shape())}, {"grid", s.grid()}};
}

inline Ssot ssot_from_json(const json& j) {
    try {
        return Ssot::from_grid(
            partition_from_json(j.at("final_shape")),
            j.at("grid").get<std::vector<std::vector<std::vector<int>>>>());
    } catch (const json::exception&) {
        throw input_error("expected an SSOT as {\"final_shape\":[...],\"grid\":[[[...]]]}");
    }
}

inline json to_json(const LaurentPolynomial& p) {
    json out = json::array();
    for (const auto& [m, c] : p.terms()) {
        json term;
        if (c.fits_slong_p())
            term["coeff"] = c.get_si();
        else
            term["coeff"] = c.get_str();
        json xs = json::object(), ys = json::object();
        for (auto [j2, e] : m.x_exponents()) xs[std::to_string(j2)] = e;
        for (auto [j2, e] : m.y_exponents()) ys[std::to_string(j2)] = e;
        term["x"] = xs;
        term["y"] = ys;
        out.push_back(term);
    }
    return out;
}

}  // namespace tableaux
