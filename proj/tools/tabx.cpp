// tabx: command-line front end for the tableau calculus library.
//
// Subcommands: insert, rsk, inverse, enumerate, knuth, bk, poly, verify.
// All structured input is JSON (stdin or --input); output is JSON on stdout,
// or an ASCII rendering with --format ascii.  Exit codes: 0 success / suite
// passed, 1 verification failure, 2 malformed input, 3 invariant violation.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "tableaux/bender_knuth.hpp"
#include "tableaux/json_io.hpp"
#include "tableaux/knuth.hpp"
#include "tableaux/symfunc.hpp"
#include "tableaux/verify.hpp"

using namespace tableaux;

namespace {

struct Options {
    std::string format = "json";
    std::string input_path;  // empty: stdin
};

json read_input(const Options& opt) {
    try {
        if (!opt.input_path.empty()) {
            std::ifstream in(opt.input_path);
            if (!in) throw input_error("cannot open input file: " + opt.input_path);
            return json::parse(in);
        }
        return json::parse(std::cin);
    } catch (const json::exception& e) {
        throw input_error(std::string("malformed JSON input: ") + e.what());
    }
}

std::string ascii_tableau(const Tableau& t) {
    std::ostringstream out;
    std::size_t width = 1;
    for (const auto& row : t.to_signed_rows())
        for (int v : row) width = std::max(width, std::to_string(v).size());
    for (const auto& row : t.to_signed_rows()) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            std::string s = std::to_string(row[c]);
            out << (c ? " " : "") << std::string(width - s.size(), ' ') << s;
        }
        out << '\n';
    }
    return out.str();
}

std::string ascii_partition(const Partition& p) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < p.rows().size(); ++i) out << (i ? "," : "") << p.rows()[i];
    out << ')';
    return out.str();
}

void emit(const Options& opt, const json& payload) {
    if (opt.format == "ascii") {
        // Render tableau-valued fields as grids, everything else compactly.
        for (auto it = payload.begin(); it != payload.end(); ++it) {
            std::cout << it.key() << ":\n";
            const json& v = it.value();
            if (v.is_object() && v.contains("rows") && v.contains("shape"))
                std::cout << ascii_tableau(tableau_from_json(v));
            else if (v.is_object() && v.contains("shapes")) {
                for (const json& s : v.at("shapes"))
                    std::cout << "  " << ascii_partition(partition_from_json(s)) << '\n';
            } else
                std::cout << "  " << v.dump() << '\n';
        }
        return;
    }
    std::cout << payload.dump() << '\n';
}

json tableau_with_step(const Tableau& t, const StepRecord& rec) {
    return json{{"tableau", to_json(t)}, {"step", to_json(rec)}};
}

int cmd_insert(const Options& opt, const std::string& type) {
    json in = read_input(opt);
    Tableau t = tableau_from_json(in.at("tableau"));
    if (!in.contains("letter")) throw input_error("missing \"letter\"");
    Letter x = Letter::from_signed(in.at("letter").get<int>());
    if (type == "a") {
        auto [res, cell] = row_insert_a(t, x);
        emit(opt, tableau_with_step(res, {StepKind::added, cell}));
    } else {
        auto [res, rec] = berele_insert(t, x);
        emit(opt, tableau_with_step(res, rec));
    }
    return 0;
}

int cmd_rsk(const Options& opt, const std::string& type) {
    json in = read_input(opt);
    json out;
    if (in.contains("word")) {
        Word w = word_from_json(in.at("word"));
        if (type == "a") {
            auto [p, q] = rs_a(w);
            out = {{"p", to_json(p)}, {"q", to_json(q)}};
        } else {
            auto [p, q] = rs_c(w);
            out = {{"p", to_json(p)}, {"q", to_json(q)}};
        }
    } else if (in.contains("array")) {
        TwoLineArray w = array_from_json(in.at("array"));
        if (type == "a") {
            auto [p, q] = rsk_a(w);
            out = {{"p", to_json(p)}, {"q", to_json(q)}};
        } else {
            RskOutputC res = rsk_c(w);
            out = {{"p", to_json(res.p)}, {"q", to_json(res.q)}};
        }
    } else {
        throw input_error("expected \"word\" or \"array\" in the input");
    }
    emit(opt, out);
    return 0;
}

int cmd_inverse(const Options& opt, const std::string& type) {
    json in = read_input(opt);
    Tableau p = tableau_from_json(in.at("p"));
    const json& q = in.at("q");
    json out;
    if (q.is_object() && q.contains("shapes")) {
        if (type != "c") throw input_error("oscillating recording tableaux are type c");
        out["word"] = to_json(inverse_rs_c(p, ot_from_json(q)));
    } else if (q.is_object() && q.contains("grid")) {
        if (type != "c") throw input_error("SSOT recording tableaux are type c");
        out["array"] = to_json(inverse_rsk_c(p, ssot_from_json(q)));
    } else {
        if (type != "a") throw input_error("tableau-valued recording tableaux are type a");
        Tableau qt = tableau_from_json(q);
        TwoLineArray w = inverse_rsk_a(p, qt);
        out["array"] = to_json(w);
        if (qt.is_standard()) out["word"] = to_json(w.bottom);
    }
    emit(opt, out);
    return 0;
}

int cmd_enumerate(const Options& opt, const std::string& kind, int k, int n,
                  const std::vector<int>& shape_rows, bool barred) {
    Partition shape(shape_rows);
    json items = json::array();
    if (kind == "ssyt") {
        for (const Tableau& t : enumerate_ssyt(k, shape, barred)) items.push_back(to_json(t));
    } else if (kind == "kt") {
        for (const Tableau& t : enumerate_kt(k, shape)) items.push_back(to_json(t));
    } else if (kind == "ssot") {
        for (const Ssot& s : enumerate_ssot(k, n, shape)) items.push_back(to_json(s));
    } else if (kind == "ot") {
        for (const OscillatingTableau& s : enumerate_ot(k, n, shape))
            items.push_back(to_json(s));
    } else {
        throw input_error("unknown enumeration kind: " + kind);
    }
    emit(opt, json{{"count", items.size()}, {"items", items}});
    return 0;
}

int cmd_knuth(const Options& opt, const std::string& type, const std::string& w1,
              const std::string& w2) {
    auto parse_word = [](const std::string& s) {
        try {
            return word_from_json(json::parse(s));
        } catch (const json::exception& e) {
            throw input_error(std::string("malformed word: ") + e.what());
        }
    };
    Word a = parse_word(w1), b = parse_word(w2);
    bool eq = type == "a" ? knuth_equiv_a(a, b) : knuth_equiv_c(a, b);
    Word canonical = type == "a" ? canonical_word_a(a) : canonical_word_c(a);
    emit(opt, json{{"equivalent", eq}, {"canonical", to_json(canonical)}});
    return 0;
}

int cmd_bk(const Options& opt, const std::string& type, int i, int k) {
    json in = read_input(opt);
    if (type == "a") {
        Tableau t = tableau_from_json(in.is_object() && in.contains("tableau")
                                          ? in.at("tableau")
                                          : in);
        emit(opt, json{{"tableau", to_json(bk_a(t, i))}});
    } else {
        if (k <= 0) throw input_error("bk --type c requires --k");
        Ssot s = ssot_from_json(in.is_object() && in.contains("ssot") ? in.at("ssot") : in);
        emit(opt, json{{"ssot", to_json(bk_c(s, i, k))}});
    }
    return 0;
}

int cmd_poly(const Options& opt, const std::string& which, int k, int n,
             const std::vector<int>& shape_rows, const std::string& family, bool barred) {
    Partition shape(shape_rows);
    LaurentPolynomial p;
    if (which == "schur") {
        p = barred ? schur_poly_xpm(shape, k)
                   : schur_poly(shape, k,
                                family == "x" ? VarFamily::x : VarFamily::y);
    } else if (which == "sp") {
        p = sp_poly(shape, k);
    } else if (which == "ssot") {
        p = ssot_poly(shape, k, n);
    } else {
        throw input_error("unknown polynomial: " + which);
    }
    emit(opt, json{{"poly", to_json(p)}, {"terms", p.size()}});
    return 0;
}

int cmd_verify(const Options& opt, const std::string& suite, int k, int l, int n,
               int degree, const std::vector<int>& shape_rows, int max_size) {
    verify::Report rep;
    if (suite == "bijection-a") {
        rep = verify::verify_bijection_a(2 * k, l, n);
    } else if (suite == "bijection-c") {
        rep = verify::verify_bijection_c(k, n);
    } else if (suite == "rsk-c") {
        rep = verify::verify_rsk_c(k, l, n);
    } else if (suite == "cauchy") {
        rep = verify::verify_cauchy(k, degree);
    } else if (suite == "ssot-symmetry") {
        rep = verify::verify_ssot_symmetry(k, Partition(shape_rows), n);
    } else if (suite == "knuth") {
        rep = verify::verify_knuth(3, k, n);
    } else if (suite == "bk") {
        rep = verify::verify_bk(k, max_size);
        if (rep.passed && !shape_rows.empty()) {
            auto rep2 = verify::verify_bk_c(k, Partition(shape_rows), n);
            rep2.checked += rep.checked;
            rep = rep2;
        }
    } else if (suite == "strips") {
        rep = verify::verify_strips(k, max_size, n);
    } else {
        throw input_error("unknown suite: " + suite);
    }
    emit(opt, rep.to_json());
    return rep.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"type A and type C Young tableau calculus"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "ascii"}));
    app.add_option("--input", opt.input_path, "Read JSON input from a file, not stdin");

    std::string type = "a", kind = "ssyt", which = "schur", suite, w1, w2;
    std::string family = "y";
    int i = 1, k = 2, l = 2, n = 0, degree = 0, max_size = 4;
    std::vector<int> shape_rows;
    bool barred = false;

    auto* insert = app.add_subcommand("insert", "Row or Berele insertion");
    insert->add_option("--type", type)->check(CLI::IsMember({"a", "c"}));

    auto* rsk = app.add_subcommand("rsk", "RS / RSK correspondences");
    rsk->add_option("--type", type)->check(CLI::IsMember({"a", "c"}));

    auto* inverse = app.add_subcommand("inverse", "Inverse correspondences");
    inverse->add_option("--type", type)->check(CLI::IsMember({"a", "c"}));

    auto* enumerate = app.add_subcommand("enumerate", "Enumerate tableau families");
    enumerate->add_option("--kind", kind)->check(CLI::IsMember({"ssyt", "kt", "ssot", "ot"}));
    enumerate->add_option("--k", k);
    enumerate->add_option("--n", n);
    enumerate->add_option("--shape", shape_rows)->delimiter(',');
    enumerate->add_flag("--barred", barred);

    auto* knuth = app.add_subcommand("knuth", "Knuth equivalence decision");
    knuth->add_option("--type", type)->check(CLI::IsMember({"a", "c"}));
    knuth->add_option("w1", w1)->required();
    knuth->add_option("w2", w2)->required();

    auto* bk = app.add_subcommand("bk", "Bender-Knuth involutions");
    bk->add_option("--type", type)->check(CLI::IsMember({"a", "c"}));
    bk->add_option("--i", i)->required();
    bk->add_option("--k", k);

    auto* poly = app.add_subcommand("poly", "Generating polynomials");
    poly->add_option("which", which)->check(CLI::IsMember({"schur", "sp", "ssot"}));
    poly->add_option("--k", k);
    poly->add_option("--n", n);
    poly->add_option("--shape", shape_rows)->delimiter(',');
    poly->add_option("--family", family)->check(CLI::IsMember({"x", "y"}));
    poly->add_flag("--barred", barred);

    auto* verify_cmd = app.add_subcommand("verify", "Exhaustive verification suites");
    verify_cmd
        ->add_option("suite", suite)
        ->check(CLI::IsMember({"bijection-a", "bijection-c", "rsk-c", "cauchy",
                               "ssot-symmetry", "knuth", "bk", "strips"}))
        ->required();
    verify_cmd->add_option("--k", k);
    verify_cmd->add_option("--l", l);
    verify_cmd->add_option("--n", n);
    verify_cmd->add_option("--degree", degree);
    verify_cmd->add_option("--shape", shape_rows)->delimiter(',');
    verify_cmd->add_option("--max-size", max_size);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (insert->parsed()) return cmd_insert(opt, type);
        if (rsk->parsed()) return cmd_rsk(opt, type);
        if (inverse->parsed()) return cmd_inverse(opt, type);
        if (enumerate->parsed()) return cmd_enumerate(opt, kind, k, n, shape_rows, barred);
        if (knuth->parsed()) return cmd_knuth(opt, type, w1, w2);
        if (bk->parsed()) return cmd_bk(opt, type, i, k);
        if (poly->parsed()) return cmd_poly(opt, which, k, n, shape_rows, family, barred);
        if (verify_cmd->parsed())
            return cmd_verify(opt, suite, k, l, n, degree, shape_rows, max_size);
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const invariant_error& e) {
        std::cerr << "invariant violation: " << e.what() << '\n';
        return 3;
    } catch (const json::exception& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
