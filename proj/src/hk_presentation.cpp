#include "polytc/hk_presentation.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "polytc/errors.hpp"

namespace polytc {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json mask_to_json(const SubsetMask& s) {
    ordered_json arr = ordered_json::array();
    for (int i : s.indices()) arr.push_back(i);
    return arr;
}

ordered_json relation_to_json(const Polynomial& rel) {
    ordered_json terms = ordered_json::array();
    // Emit in descending canonical order to match the printed form.
    for (auto it = rel.terms().rbegin(); it != rel.terms().rend(); ++it) {
        if (!it->second.fits_slong_p())
            throw input_error("relation coefficient too large for the JSON schema");
        ordered_json term;
        term["coef"] = it->second.get_si();
        term["r_exp"] = it->first.r_exp;
        term["support"] = mask_to_json(it->first.support);
        terms.push_back(std::move(term));
    }
    return ordered_json{{"terms", std::move(terms)}};
}

SubsetMask mask_from_json(const ordered_json& arr, int n, bool forbid_n,
                          const std::string& where) {
    if (!arr.is_array()) throw input_error(where + ": expected an index array");
    SubsetMask m;
    for (const auto& v : arr) {
        if (!v.is_number_integer()) throw input_error(where + ": indices must be integers");
        const int i = v.get<int>();
        if (i < 1 || i > (forbid_n ? n - 1 : n))
            throw input_error(where + ": index " + std::to_string(i) + " out of range" +
                              (forbid_n && i == n ? " (index n has no generator)" : ""));
        m = m.with(i);
    }
    return m;
}

}  // namespace

std::string Presentation::to_json() const {
    ordered_json j;
    j["n"] = n_;
    j["max_degree"] = max_degree_;
    ordered_json ann = ordered_json::array();
    for (const SubsetMask& a : annihilators_) ann.push_back(mask_to_json(a));
    j["annihilators"] = std::move(ann);
    ordered_json rels = ordered_json::array();
    for (const Polynomial& rel : linear_relations_) rels.push_back(relation_to_json(rel));
    j["linear_relations"] = std::move(rels);
    return j.dump(2) + "\n";
}

Presentation parse_presentation_json(const std::string& text, const std::string& where) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw input_error(where + ": not valid JSON: " + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("max_degree") ||
        !j.contains("annihilators") || !j.contains("linear_relations"))
        throw input_error(where + ": expected keys n, max_degree, annihilators, linear_relations");
    if (!j["n"].is_number_integer() || !j["max_degree"].is_number_integer())
        throw input_error(where + ": n and max_degree must be integers");
    const int n = j["n"].get<int>();
    const int max_degree = j["max_degree"].get<int>();
    if (n < 3) throw input_error(where + ": n must be at least 3");

    std::vector<SubsetMask> annihilators;
    if (!j["annihilators"].is_array()) throw input_error(where + ": annihilators must be an array");
    int k = 0;
    for (const auto& a : j["annihilators"])
        annihilators.push_back(
            mask_from_json(a, n, true, where + ": annihilators[" + std::to_string(k++) + "]"));

    std::vector<Polynomial> relations;
    if (!j["linear_relations"].is_array())
        throw input_error(where + ": linear_relations must be an array");
    k = 0;
    for (const auto& r : j["linear_relations"]) {
        const std::string rwhere = where + ": linear_relations[" + std::to_string(k++) + "]";
        if (!r.is_object() || !r.contains("terms") || !r["terms"].is_array())
            throw input_error(rwhere + ": expected an object with a terms array");
        Polynomial rel;
        int t = 0;
        for (const auto& term : r["terms"]) {
            const std::string twhere = rwhere + ".terms[" + std::to_string(t++) + "]";
            if (!term.is_object() || !term.contains("coef") || !term.contains("r_exp") ||
                !term.contains("support"))
                throw input_error(twhere + ": expected keys coef, r_exp, support");
            if (!term["coef"].is_number_integer() || !term["r_exp"].is_number_integer())
                throw input_error(twhere + ": coef and r_exp must be integers");
            const int r_exp = term["r_exp"].get<int>();
            if (r_exp < 0) throw input_error(twhere + ": negative r_exp");
            const SubsetMask support = mask_from_json(term["support"], n, true, twhere);
            rel.add_term(Monomial{r_exp, support}, Integer(term["coef"].get<long>()));
        }
        if (rel.is_zero()) throw input_error(rwhere + ": relation collapses to zero");
        if (!rel.homogeneous_degree())
            throw input_error(rwhere + ": relation mixes degrees: " + rel.to_string());
        relations.push_back(std::move(rel));
    }

    try {
        return Presentation(n, max_degree, std::move(annihilators), std::move(relations));
    } catch (const input_error& e) {
        throw input_error(where + ": " + e.what());
    }
}

Presentation load_fixture(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open fixture file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_presentation_json(buf.str(), path);
}

Presentation build_base(const LengthVector& ell) {
    if (auto wall = find_splitting_subset(ell))
        throw hypothesis_error("length vector is not generic: subset " + wall->to_string() +
                               " splits the total evenly");
    if (!is_nondegenerate(ell))
        throw hypothesis_error("length vector is degenerate: one side is at least as long as "
                               "the rest combined");

    const int n = ell.n();
    std::vector<SubsetMask> annihilators;
    for (const SubsetMask& s : all_subsets(n - 1))
        if (is_long(ell, s.with(n))) annihilators.push_back(s);
    return Presentation(n, 0, std::move(annihilators), {});
}

const ValidationCheck* ValidationReport::find(const std::string& name) const {
    for (const ValidationCheck& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

std::string ValidationReport::to_json() const {
    ordered_json j;
    ordered_json arr = ordered_json::array();
    for (const ValidationCheck& c : checks) {
        ordered_json e;
        e["name"] = c.name;
        e["status"] = c.passed() ? "pass" : "fail";
        e["mandatory"] = c.mandatory;
        if (!c.witness.empty()) e["witness"] = c.witness;
        arr.push_back(std::move(e));
    }
    j["checks"] = std::move(arr);
    j["full_suite"] = full_suite;
    j["accepted"] = accepted;
    return j.dump(2) + "\n";
}

std::string ValidationReport::to_text() const {
    std::string s;
    for (const ValidationCheck& c : checks) {
        s += c.passed() ? "[pass] " : "[FAIL] ";
        s += c.name;
        if (!c.mandatory) s += " (informational)";
        if (!c.witness.empty()) s += ": " + c.witness;
        s += "\n";
    }
    s += accepted ? "accepted\n" : "rejected\n";
    return s;
}

namespace {

// Enumerates the exponent splittings of check (c): all words
// R^{e0} prod V_i^{e_i} over the given support with e_i >= 1 and total
// degree d. Walks the vectors extra_i = e_i - 1 >= 0 with sum <= d - |S|.
void shuffle_words(const SubsetMask& support, int d, std::vector<GeneratorWord>& out) {
    const std::vector<int> idx = support.indices();
    const int k = static_cast<int>(idx.size());
    const int rest = d - k;
    std::vector<int> extra(static_cast<std::size_t>(k), 0);
    while (true) {
        GeneratorWord w;
        int used = 0;
        for (int i = 0; i < k; ++i) {
            w.emplace_back(GeneratorSymbol::v(idx[static_cast<std::size_t>(i)]),
                           1 + extra[static_cast<std::size_t>(i)]);
            used += extra[static_cast<std::size_t>(i)];
        }
        w.emplace_back(GeneratorSymbol::r(), rest - used);
        out.push_back(std::move(w));

        int pos = k - 1;
        for (; pos >= 0; --pos) {
            int prefix = 0;
            for (int i = 0; i <= pos; ++i) prefix += extra[static_cast<std::size_t>(i)];
            if (prefix < rest) {
                ++extra[static_cast<std::size_t>(pos)];
                for (int i = pos + 1; i < k; ++i) extra[static_cast<std::size_t>(i)] = 0;
                break;
            }
        }
        if (pos < 0) break;
    }
}

}  // namespace

ValidationReport validate(const Presentation& pres, const LengthVector& ell) {
    ValidationReport report;
    const int n = pres.n();

    auto add = [&report](const std::string& name, bool ok, bool mandatory,
                         const std::string& witness) {
        report.checks.push_back(
            ValidationCheck{name, ok ? CheckStatus::pass : CheckStatus::fail, mandatory,
                            ok ? std::string{} : witness});
    };

    // compatibility precheck: nothing else is meaningful across n's
    if (ell.n() != n) {
        add("compatible", false, true,
            "presentation has n=" + std::to_string(n) + ", lengths have n=" +
                std::to_string(ell.n()));
        return report;
    }
    add("compatible", true, true, {});

    // (a) generators: only R, V_1..V_{n-1} appear
    const bool generators_ok = pres.uses_only_generators();
    {
        std::string witness;
        if (!generators_ok) {
            const SubsetMask allowed = SubsetMask::full(n - 1);
            for (const SubsetMask& a : pres.annihilators())
                if (!a.subset_of(allowed)) witness = "annihilator " + a.to_string();
            for (const Polynomial& rel : pres.linear_relations())
                for (const auto& [m, c] : rel.terms())
                    if (!m.support.subset_of(allowed)) witness = "relation term " + m.to_string();
        }
        add("generators", generators_ok, true, witness);
    }

    // (b) every product of n-2 distinct V_i's reduces to 0
    {
        bool ok = true;
        std::string witness;
        for (const SubsetMask& s : subsets_of_size(n - 1, n - 2))
            if (!pres.is_annihilated(s)) {
                ok = false;
                witness = "product over " + s.to_string() + " does not reduce to 0";
                break;
            }
        add("vanishing", ok, true, witness);
    }

    // (c) exponent shuffles of a fixed support and degree all normalize
    // to the same monomial; enumerated exhaustively at these sizes
    {
        bool ok = true;
        std::string witness;
        for (int d = 0; d <= n - 3 && ok; ++d)
            for (int k = 0; k <= d && ok; ++k)
                for (const SubsetMask& s : subsets_of_size(n - 1, k)) {
                    std::vector<GeneratorWord> words;
                    shuffle_words(s, d, words);
                    const Polynomial first = normalize(words.front(), pres);
                    for (const GeneratorWord& w : words)
                        if (normalize(w, pres) != first) {
                            ok = false;
                            witness = "support " + s.to_string() + " degree " +
                                      std::to_string(d) + " splits disagree";
                            break;
                        }
                    if (!ok) break;
                }
        add("shuffle", ok, true, witness);
    }

    const int top = n - 3;
    report.full_suite = pres.max_degree() >= top && generators_ok;

    // Component construction needs in-range generators; without them the
    // degree-dependent checks cannot run at all.
    if (!generators_ok) {
        report.accepted = false;
        return report;
    }

    // (d) connectivity: betti(0) = 1 (computable even for base
    // presentations, whose max_degree is 0)
    {
        const GradedComponent c0 = component(pres, 0);
        add("connected", c0.betti() == 1, true,
            "betti(0) = " + std::to_string(c0.betti()));
    }

    if (pres.max_degree() < top) {
        report.accepted = false;
        return report;
    }

    std::vector<GradedComponent> comps;
    comps.reserve(static_cast<std::size_t>(top) + 1);
    for (int d = 0; d <= top; ++d) comps.push_back(component(pres, d));

    // (e) top class: infinite cyclic
    {
        const GradedComponent& ct = comps[static_cast<std::size_t>(top)];
        const bool ok = ct.betti() == 1 && ct.torsion().empty();
        std::string witness = "betti(" + std::to_string(top) + ") = " +
                              std::to_string(ct.betti());
        if (!ct.torsion().empty()) witness += ", torsion present";
        add("top_class", ok, true, witness);
    }

    // (f) Poincare symmetry of the betti profile
    {
        bool ok = true;
        std::string witness;
        for (int d = 0; 2 * d <= top; ++d) {
            const int bl = comps[static_cast<std::size_t>(d)].betti();
            const int br = comps[static_cast<std::size_t>(top - d)].betti();
            if (bl != br) {
                ok = false;
                witness = "betti(" + std::to_string(d) + ") = " + std::to_string(bl) +
                          " but betti(" + std::to_string(top - d) + ") = " + std::to_string(br);
                break;
            }
        }
        add("symmetry", ok, true, witness);
    }

    // (g) some top-degree monomial is nonzero
    {
        bool ok = false;
        const GradedComponent& ct = comps[static_cast<std::size_t>(top)];
        for (const Monomial& m : ct.basis())
            if (ct.is_nonzero_class(Polynomial(m))) {
                ok = true;
                break;
            }
        add("existence", ok, true, "every degree-" + std::to_string(top) + " monomial vanishes");
    }

    // Optional: unimodularity of the cup pairing in the middle degree.
    // Only meaningful when the top degree is even and the mandatory
    // checks make the top form well-defined.
    if (top % 2 == 0 && top > 0) {
        bool ok = true;
        std::string witness;
        try {
            TopForm phi(pres);
            const int mid = top / 2;
            const GradedComponent& cm = comps[static_cast<std::size_t>(mid)];
            const std::vector<Monomial>& basis = cm.basis();
            const std::size_t k = basis.size();
            // Gram matrix of the pairing on representatives of the free
            // quotient: rows of the inverse column transform past the rank
            // give integer representatives of its generators.
            const SmithNormalForm& snf = cm.snf();
            const std::size_t beta = k - static_cast<std::size_t>(snf.rank);
            IntMatrix gram(beta, IntRow(beta, 0));
            for (std::size_t a = 0; a < beta; ++a)
                for (std::size_t b = 0; b < beta; ++b) {
                    Integer g = 0;
                    for (std::size_t i = 0; i < k; ++i) {
                        const Integer& xa =
                            snf.col_transform_inv[static_cast<std::size_t>(snf.rank) + a][i];
                        if (xa == 0) continue;
                        for (std::size_t j = 0; j < k; ++j) {
                            const Integer& xb =
                                snf.col_transform_inv[static_cast<std::size_t>(snf.rank) + b][j];
                            if (xb == 0) continue;
                            const Monomial prod = mono_mul(basis[i], basis[j]);
                            if (pres.is_annihilated(prod.support)) continue;
                            g += xa * xb * phi.on_monomial(prod);
                        }
                    }
                    gram[a][b] = g;
                }
            // determinant by fraction-free elimination on a copy
            const SmithNormalForm gsnf = smith_normal_form(gram, static_cast<int>(beta));
            Integer det = 1;
            if (gsnf.rank < static_cast<int>(beta)) det = 0;
            else
                for (const Integer& dd : gsnf.divisors) det *= dd;
            ok = det == 1 || det == -1;
            if (!ok) witness = "middle pairing determinant " + det.get_str();
        } catch (const validation_error& e) {
            ok = false;
            witness = e.what();
        }
        add("middle_pairing", ok, false, witness);
    }

    // Optional: chamber consistency with the supplied lengths. A fixture
    // for one chamber can still be structurally valid when paired with
    // lengths from another; this records the mismatch without rejecting.
    {
        bool ok = true;
        std::string witness;
        for (const SubsetMask& s : all_subsets(n - 1))
            if (is_long(ell, s.with(n)) && !pres.is_annihilated(s)) {
                ok = false;
                witness = s.to_string() + " u {" + std::to_string(n) +
                          "} is long for these lengths but its product does not vanish";
                break;
            }
        add("chamber_annihilators", ok, false, witness);
    }

    report.accepted = true;
    for (const ValidationCheck& c : report.checks)
        if (c.mandatory && !c.passed()) report.accepted = false;
    return report;
}

}  // namespace polytc
