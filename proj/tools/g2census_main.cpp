// g2census: reproduce the twisted-connected-sum censuses over the rank 1/2
// Fano building-block catalog, plus ad-hoc lattice utilities.
//
//   g2census validate [--data DIR]
//   g2census census perp|orth|skew [--mu-nonzero] [--format csv|json|text]
//                                  [--out PATH] [--data DIR]
//   g2census exotic [--format json|text] [--out PATH] [--data DIR]
//   g2census lattice disc|sig|min|over --gram "a b; c d" [--h-class "x y"] [--p P]
//
// Exit codes: 0 success, 1 validation/data failure, 2 usage error,
// 3 internal inconsistency.
#include "g2census/census.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace g2census;

namespace {

std::string resolve_data_dir(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("G2CENSUS_DATA")) return env;
    return "data";
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::trunc);
    if (!out) fail(Errc::parse_error, "cannot write " + out_path);
    out << text;
}

Mat parse_gram(const std::string& s) {
    if (s.empty()) fail(Errc::parse_error, "empty gram matrix");
    Mat m;
    std::stringstream rows(s);
    std::string row;
    while (std::getline(rows, row, ';')) {
        for (char& c : row)
            if (c == ',') c = ' ';
        Vec r;
        std::stringstream fields(row);
        std::string f;
        while (fields >> f) {
            try {
                r.push_back(Int(f));
            } catch (...) {
                fail(Errc::parse_error, "bad gram entry '" + f + "'");
            }
        }
        if (!r.empty()) m.push_back(std::move(r));
    }
    if (m.empty()) fail(Errc::parse_error, "empty gram matrix");
    return m;
}

Vec parse_vec(const std::string& s, size_t expect) {
    std::string t = s;
    for (char& c : t)
        if (c == ',') c = ' ';
    Vec v;
    std::stringstream fields(t);
    std::string f;
    while (fields >> f) {
        try {
            v.push_back(Int(f));
        } catch (...) {
            fail(Errc::parse_error, "bad coordinate '" + f + "'");
        }
    }
    if (v.size() != expect)
        fail(Errc::parse_error, "expected " + std::to_string(expect) + " coordinates");
    return v;
}

std::string vec_str(const Vec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    return s + ")";
}

int run(int argc, char** argv) {
    CLI::App app{"twisted-connected-sum census over the rank 1/2 Fano catalog"};
    app.require_subcommand(1);
    std::string data_flag, format = "text", out_path, gram_str, h_str;
    long long prime = 0;
    bool mu_filter = false;

    auto* validate = app.add_subcommand("validate", "run every dataset invariant");
    validate->add_option("--data", data_flag, "dataset directory");

    auto* census = app.add_subcommand("census", "run a census (perp | orth | skew)");
    std::string which;
    census->add_option("kind", which, "perp | orth | skew")->required();
    census->add_flag("--mu-nonzero", mu_filter, "only verified mu != 0 rows (skew)");
    census->add_option("--format", format, "csv | json | text");
    census->add_option("--out", out_path, "write output to a file");
    census->add_option("--data", data_flag, "dataset directory");

    auto* exotic = app.add_subcommand("exotic", "smooth-structure comparison report");
    exotic->add_option("--format", format, "json | text");
    exotic->add_option("--out", out_path, "write output to a file");
    exotic->add_option("--data", data_flag, "dataset directory");

    auto* lattice = app.add_subcommand("lattice", "ad-hoc lattice utilities");
    std::string sub;
    lattice->add_option("op", sub, "disc | sig | min | over")->required();
    lattice->add_option("--gram", gram_str, "Gram matrix, rows separated by ';'")->required();
    lattice->add_option("--h-class", h_str, "polarising class coordinates (for min)");
    lattice->add_option("--p", prime, "prime index (for over)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (validate->parsed()) {
        Catalog cat = load_catalog(resolve_data_dir(data_flag));
        CheckReport rep = validate_catalog(cat);
        std::cout << rep.passed.size() << " checks passed, " << rep.failures.size()
                  << " failed, " << rep.warnings.size() << " warning(s)\n";
        for (const auto& w : rep.warnings) std::cout << "warning: " << w << "\n";
        for (const auto& f : rep.failures) std::cout << "FAIL: " << f << "\n";
        return rep.ok() ? 0 : 1;
    }

    if (census->parsed()) {
        Catalog cat = load_catalog(resolve_data_dir(data_flag));
        std::vector<CensusRow> rows;
        std::string text;
        if (which == "perp") {
            PerpCensus c = census_perp(cat);
            rows = c.rows;
            text = perp_text(c);
        } else if (which == "orth") {
            OrthCensus c = census_orth(cat);
            rows = c.rows;
            text = orth_text(c);
        } else if (which == "skew") {
            SkewCensus c = census_skew(cat, mu_filter);
            rows = c.rows;
            text = skew_text(c);
        } else {
            std::cerr << "unknown census kind '" << which << "'\n";
            return 2;
        }
        if (format == "csv")
            emit(rows_to_csv(rows), out_path);
        else if (format == "json")
            emit(rows_to_json(rows), out_path);
        else if (format == "text")
            emit(text, out_path);
        else {
            std::cerr << "unknown format '" << format << "'\n";
            return 2;
        }
        return 0;
    }

    if (exotic->parsed()) {
        Catalog cat = load_catalog(resolve_data_dir(data_flag));
        ExoticReport rep = exotic_report(cat);
        if (format == "json")
            emit(exotic_json(rep), out_path);
        else
            emit(exotic_text(rep), out_path);
        return 0;
    }

    if (lattice->parsed()) {
        Lattice l = Lattice::from_gram(parse_gram(gram_str));
        if (sub == "disc") {
            std::cout << discriminant_group(l).str() << "\n";
        } else if (sub == "sig") {
            auto [p, m] = signature(l);
            std::cout << "(" << p << "," << m << ")\n";
        } else if (sub == "min") {
            if (h_str.empty()) {
                std::cerr << "min needs --h-class\n";
                return 2;
            }
            MinResult r = fundamental_min(l, parse_vec(h_str, l.rank()));
            std::cout << "min " << r.min << " witness " << vec_str(r.witness) << "\n";
        } else if (sub == "over") {
            if (prime < 2) {
                std::cerr << "over needs --p PRIME\n";
                return 2;
            }
            auto over = prime_index_overlattices(l, Int(prime));
            std::cout << over.size() << " overlattice(s)\n";
            for (const auto& o : over) {
                std::cout << "index " << o.index << " glue " << vec_str(o.glue)
                          << " glue_norm " << o.glue_norm << " disc "
                          << discriminant_group(Lattice{o.new_gram}).str() << "\n";
            }
        } else {
            std::cerr << "unknown lattice op '" << sub << "'\n";
            return 2;
        }
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == Errc::inconsistent ? 3 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
