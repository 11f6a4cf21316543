// Command-line front door for the polygon-space suite: length-vector
// checks, ring/betti inspection, chamber atlases, expansion cross-checks,
// and full TC certificates.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polytc/certifier.hpp"
#include "polytc/chamber.hpp"
#include "polytc/errors.hpp"
#include "polytc/hashing.hpp"
#include "polytc/hk_presentation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitValidation = 2;
constexpr int kExitMismatch = 3;

using nlohmann::ordered_json;
using namespace polytc;

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    return out + "\"";
}

ordered_json signature_json(const ChamberSignature& sig) {
    ordered_json arr = ordered_json::array();
    for (const SubsetMask& s : sig.short_sets) {
        ordered_json one = ordered_json::array();
        for (int i : s.indices()) one.push_back(i);
        arr.push_back(std::move(one));
    }
    return arr;
}

int run_check(const std::string& lengths, bool as_json) {
    const LengthVector ell = LengthVector::parse(lengths);
    const auto wall = find_splitting_subset(ell);
    const bool generic = !wall.has_value();
    const bool nondeg = is_nondegenerate(ell);

    if (as_json) {
        ordered_json j;
        j["n"] = ell.n();
        j["lengths"] = ell.to_string();
        j["generic"] = generic;
        if (wall) {
            ordered_json w = ordered_json::array();
            for (int i : wall->indices()) w.push_back(i);
            j["splitting_subset"] = std::move(w);
        }
        j["nondegenerate"] = nondeg;
        if (generic) j["signature"] = signature_json(chamber_signature(ell));
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "n              " << ell.n() << "\n";
        std::cout << "generic        " << (generic ? "yes" : "no");
        if (wall) std::cout << "  (subset " << wall->to_string() << " splits the total evenly)";
        std::cout << "\n";
        std::cout << "nondegenerate  " << (nondeg ? "yes" : "no") << "\n";
        if (generic)
            std::cout << "signature      " << chamber_signature(ell).to_string() << "\n";
    }
    return generic && nondeg ? kExitOk : kExitValidation;
}

Presentation load_or_base(const std::string& lengths, const std::string& fixture,
                          std::string* id_out) {
    if (!fixture.empty()) {
        if (id_out) *id_out = hash_file(fixture);
        return load_fixture(fixture);
    }
    if (lengths.empty())
        throw input_error("need either a fixture (-f) or lengths (-l) to build a presentation");
    Presentation base = build_base(LengthVector::parse(lengths));
    if (id_out) *id_out = hash_bytes(base.to_json());
    return base;
}

int run_ring(const std::string& lengths, const std::string& fixture, bool as_json) {
    std::string id;
    const Presentation pres = load_or_base(lengths, fixture, &id);
    if (as_json) {
        ordered_json j = ordered_json::parse(pres.to_json());
        j["presentation_id"] = id;
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "n              " << pres.n() << "\n";
    std::cout << "generators     R";
    for (int i = 1; i <= pres.n() - 1; ++i) std::cout << ", V" << i;
    std::cout << "  (V_i^2 = R*V_i built into normalization)\n";
    std::cout << "max_degree     " << pres.max_degree() << "\n";
    std::cout << "annihilators   ";
    if (pres.annihilators().empty()) std::cout << "(none)";
    for (std::size_t k = 0; k < pres.annihilators().size(); ++k) {
        if (k) std::cout << " ";
        std::cout << pres.annihilators()[k].to_string();
    }
    std::cout << "\n";
    std::cout << "relations      " << pres.linear_relations().size() << "\n";
    for (const Polynomial& rel : pres.linear_relations())
        std::cout << "  " << rel.to_string() << " = 0\n";
    std::cout << "id             " << id << "\n";
    return kExitOk;
}

int run_betti(const std::string& lengths, const std::string& fixture, int degree, bool as_json) {
    const Presentation pres = load_or_base(lengths, fixture, nullptr);
    const int lo = degree >= 0 ? degree : 0;
    const int hi = degree >= 0 ? degree : pres.max_degree();

    ordered_json rows = ordered_json::array();
    for (int d = lo; d <= hi; ++d) {
        const GradedComponent comp = component(pres, d);
        ordered_json row;
        row["degree"] = d;
        row["basis"] = comp.basis().size();
        row["rank"] = comp.rank();
        row["betti"] = comp.betti();
        ordered_json tor = ordered_json::array();
        for (const Integer& t : comp.torsion()) tor.push_back(t.get_str());
        row["torsion"] = std::move(tor);
        rows.push_back(std::move(row));
    }
    if (as_json) {
        std::cout << rows.dump(2) << "\n";
    } else {
        std::cout << "d  basis  rank  betti  torsion\n";
        for (const auto& row : rows) {
            std::cout << row["degree"].get<int>() << "  " << row["basis"].get<std::size_t>()
                      << "  " << row["rank"].get<int>() << "  " << row["betti"].get<int>()
                      << "  ";
            if (row["torsion"].empty()) std::cout << "-";
            for (const auto& t : row["torsion"]) std::cout << t.get<std::string>() << " ";
            std::cout << "\n";
        }
    }
    return kExitOk;
}

int run_tc(const std::string& lengths, const std::string& fixture, bool as_json, bool shortcut,
           bool all_witnesses) {
    const LengthVector ell = LengthVector::parse(lengths);
    const Presentation pres = load_fixture(fixture);
    const std::string id = hash_file(fixture);

    const ValidationReport report = validate(pres, ell);
    if (!report.accepted) {
        if (as_json) std::cout << report.to_json();
        else std::cout << report.to_text();
        return kExitValidation;
    }

    const TCCertificate cert =
        certify(ell, pres, id,
                shortcut ? ExpansionPath::middle_term_shortcut : ExpansionPath::brute_force,
                all_witnesses);
    if (as_json) std::cout << cert.to_json(all_witnesses);
    else std::cout << cert.to_text();
    if (!cert.valid) return kExitMismatch;
    return kExitOk;
}

int run_chambers(int n, int bound, int max_n, bool as_json, bool as_csv) {
    if (n > max_n)
        throw input_error("n = " + std::to_string(n) + " exceeds the configured maximum " +
                          std::to_string(max_n));
    const std::vector<Chamber> chambers = enumerate_chambers(n, bound);
    const int tc = 2 * n - 5;

    if (as_json) {
        ordered_json arr = ordered_json::array();
        for (const Chamber& ch : chambers) {
            ordered_json row;
            row["n"] = n;
            row["signature"] = signature_json(ch.signature);
            row["representative"] = ch.representative.to_string();
            row["generic"] = true;
            row["nondegenerate"] = true;
            row["tc"] = tc;
            row["fixture_hash"] = "";
            arr.push_back(std::move(row));
        }
        std::cout << arr.dump(2) << "\n";
        return kExitOk;
    }
    // CSV is the default tabular form for atlases; `text` prints the same
    // rows without quoting rules.
    std::cout << "n,signature,representative,generic,nondegenerate,tc,fixture_hash\n";
    for (const Chamber& ch : chambers) {
        std::cout << n << "," << csv_field(ch.signature.to_string()) << ","
                  << csv_field(ch.representative.to_string()) << ",true,true," << tc << ",\n";
    }
    (void)as_csv;
    return kExitOk;
}

int run_expand(int n, int r, bool as_json) {
    const OracleExpansion e = oracle_expansion(n, r);
    if (as_json) {
        ordered_json j;
        j["n"] = e.n;
        j["r"] = e.r;
        j["brute_force"] = e.brute_force.get_si();
        j["shortcut"] = e.shortcut.get_si();
        j["closed_form"] = e.closed_form.get_si();
        j["brute_matches"] = e.brute_force == e.closed_form;
        j["shortcut_matches"] = e.shortcut == e.closed_form;
        j["tensors_identical"] = e.tensors_identical;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "n                 " << e.n << "\n";
        std::cout << "r                 " << e.r << "\n";
        std::cout << "brute force       " << e.brute_force.get_str() << "\n";
        std::cout << "shortcut          " << e.shortcut.get_str() << "\n";
        std::cout << "closed form       " << e.closed_form.get_str() << "\n";
        std::cout << "tensors identical " << (e.tensors_identical ? "yes" : "no") << "\n";
    }
    return e.all_agree() ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact cohomology-ring analysis and topological-complexity certification "
                 "of spatial polygon spaces N(ell)"};
    app.require_subcommand(1);

    std::string lengths, fixture;
    int degree = -1, n = 0, bound = 1, r = 0, max_n = 8;
    bool as_json = false, as_csv = false, shortcut = false, all_witnesses = false;

    auto* check = app.add_subcommand("check", "genericity / nondegeneracy / chamber signature");
    check->add_option("-l,--lengths", lengths, "comma-separated rational side lengths")
        ->required();
    check->add_flag("--json", as_json, "JSON output");

    auto* ring = app.add_subcommand("ring", "print a presentation (fixture or base)");
    ring->add_option("-l,--lengths", lengths, "lengths for a base presentation");
    ring->add_option("-f,--fixture", fixture, "presentation fixture file");
    ring->add_flag("--json", as_json, "JSON output");

    auto* betti = app.add_subcommand("betti", "per-degree basis/rank/betti/torsion");
    betti->add_option("-l,--lengths", lengths, "lengths for a base presentation");
    betti->add_option("-f,--fixture", fixture, "presentation fixture file");
    betti->add_option("-d,--degree", degree, "single degree (default: all through max_degree)");
    betti->add_flag("--json", as_json, "JSON output");

    auto* tc = app.add_subcommand("tc", "certify TC(N(ell)) = 2n-5");
    tc->add_option("-l,--lengths", lengths, "comma-separated rational side lengths")->required();
    tc->add_option("-f,--fixture", fixture, "validated presentation fixture")->required();
    tc->add_flag("--json", as_json, "JSON output");
    tc->add_flag("--shortcut", shortcut, "use the middle-term expansion path");
    tc->add_flag("--all-witnesses", all_witnesses, "report every minimal nonzero support");

    auto* chambers = app.add_subcommand("chambers", "bounded integer chamber atlas");
    chambers->add_option("-n", n, "number of sides")->required();
    chambers->add_option("-b,--bound", bound, "entry bound (entries range over 1..bound)")
        ->required();
    chambers->add_option("--max-n", max_n, "configured ceiling for n (default 8)");
    chambers->add_flag("--json", as_json, "JSON output");
    chambers->add_flag("--csv", as_csv, "CSV output (the default)");

    auto* expand = app.add_subcommand("expand", "fixture-free expansion cross-check");
    expand->add_option("-n", n, "number of sides")->required();
    expand->add_option("-r", r, "support size, 0 <= r <= n-3")->required();
    expand->add_flag("--json", as_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (check->parsed()) return run_check(lengths, as_json);
        if (ring->parsed()) return run_ring(lengths, fixture, as_json);
        if (betti->parsed()) return run_betti(lengths, fixture, degree, as_json);
        if (tc->parsed()) return run_tc(lengths, fixture, as_json, shortcut, all_witnesses);
        if (chambers->parsed()) return run_chambers(n, bound, max_n, as_json, as_csv);
        if (expand->parsed()) return run_expand(n, r, as_json);
    } catch (const hypothesis_error& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitValidation;
    } catch (const validation_error& e) {
        std::cerr << "validation failure: " << e.what() << "\n";
        return kExitValidation;
    } catch (const incomplete_presentation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
