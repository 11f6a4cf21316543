#include "polytc/certifier.hpp"

#include <json.hpp>

#include "polytc/errors.hpp"

namespace polytc {

using ordered_json = nlohmann::ordered_json;

namespace {

Monomial top_monomial(const Presentation& pres, SubsetMask support) {
    return Monomial{pres.top_degree() - support.size(), support};
}

// The 2n-6 zero-divisor factors of the certificate product:
// 2n-6-2r copies for R, then two per support index.
std::vector<TensorPolynomial> certificate_factors(const Presentation& pres, int r,
                                                  SubsetMask support) {
    const int n = pres.n();
    std::vector<TensorPolynomial> factors;
    const int r_copies = 2 * (n - 3) - 2 * r;
    for (int k = 0; k < r_copies; ++k)
        factors.push_back(zero_divisor(Polynomial(Monomial::r_power(1))));
    for (int i : support.indices()) {
        const TensorPolynomial zd = zero_divisor(Polynomial(Monomial::v(i)));
        factors.push_back(zd);
        factors.push_back(zd);
    }
    return factors;
}

TensorPolynomial expand_product(const std::vector<TensorPolynomial>& factors,
                                const Presentation& pres) {
    TensorPolynomial acc = TensorPolynomial::one();
    for (const TensorPolynomial& f : factors) acc = tensor_multiply(acc, f, pres);
    return acc;
}

// Middle-term path: each squared V-factor contributes only -2 V (x) V,
// and the R-factors contribute their binomial expansion. This is the
// minimality argument in executable form.
TensorPolynomial shortcut_product(const Presentation& pres, int r, SubsetMask support) {
    const int n = pres.n();
    const int m = 2 * (n - 3) - 2 * r;
    TensorPolynomial acc;
    // (R(x)1 - 1(x)R)^m by the binomial theorem
    Integer binom = 1;
    for (int k = 0; k <= m; ++k) {
        const Integer sign = ((m - k) % 2 == 0) ? 1 : -1;
        acc.add_term(Monomial::r_power(k), Monomial::r_power(m - k), sign * binom);
        binom = binom * (m - k) / (k + 1);
    }
    for (int i : support.indices()) {
        TensorPolynomial middle;
        middle.add_term(Monomial::v(i), Monomial::v(i), -2);
        acc = tensor_multiply(acc, middle, pres);
    }
    // Degrees past the top were never created above for the V part, but
    // the pure-R expansion holds every split; reduce to the window.
    TensorPolynomial out;
    const int cap = pres.top_degree();
    for (const auto& [pair, c] : acc.terms())
        if (pair.first.degree() <= cap && pair.second.degree() <= cap &&
            !pres.is_annihilated(pair.first.support) &&
            !pres.is_annihilated(pair.second.support))
            out.add_term(pair.first, pair.second, c);
    return out;
}

Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Integer out = 1;
    for (int i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
    return out;
}

}  // namespace

MinimalTopMonomial minimal_top_monomial(const Presentation& pres) {
    const int n = pres.n();
    const GradedComponent top = component(pres, pres.top_degree());
    for (int r = 0; r <= n - 3; ++r)
        for (const SubsetMask& s : subsets_of_size(n - 1, r)) {
            if (pres.is_annihilated(s)) continue;
            if (top.is_nonzero_class(Polynomial(top_monomial(pres, s))))
                return MinimalTopMonomial{r, s};
        }
    throw validation_error("no nonzero top-degree monomial; presentation should have been "
                           "rejected by the existence check");
}

std::vector<SubsetMask> all_minimal_supports(const Presentation& pres) {
    const MinimalTopMonomial min = minimal_top_monomial(pres);
    const GradedComponent top = component(pres, pres.top_degree());
    std::vector<SubsetMask> out;
    for (const SubsetMask& s : subsets_of_size(pres.n() - 1, min.r)) {
        if (pres.is_annihilated(s)) continue;
        if (top.is_nonzero_class(Polynomial(top_monomial(pres, s)))) out.push_back(s);
    }
    return out;
}

Integer expected_coefficient(int n, int r) {
    const Integer sign = ((n - 3) % 2 == 0) ? 1 : -1;
    Integer two_r = 1;
    mpz_mul_2exp(two_r.get_mpz_t(), two_r.get_mpz_t(), static_cast<mp_bitcnt_t>(r));
    return sign * binomial(2 * (n - 3) - 2 * r, n - 3 - r) * two_r;
}

Integer certificate_coefficient(const Presentation& pres, int r, SubsetMask support,
                                ExpansionPath path) {
    const int top = pres.top_degree();
    const TensorPolynomial product =
        path == ExpansionPath::brute_force
            ? expand_product(certificate_factors(pres, r, support), pres)
            : shortcut_product(pres, r, support);
    const TensorPolynomial part = product.bidegree_part(top, top);

    // Evaluate against the top form on each side; the result is an exact
    // multiple of phi(M)^2 where M is the minimal nonzero top monomial,
    // because every surviving side is either a class equal to M's (same
    // support, any exponent split) or zero (smaller support, killed by
    // minimality).
    TopForm phi(pres);
    Integer total = 0;
    for (const auto& [pair, c] : part.terms())
        total += c * phi.on_monomial(pair.first) * phi.on_monomial(pair.second);

    const Integer unit = phi.on_monomial(top_monomial(pres, support));
    if (unit == 0)
        throw validation_error("certificate monomial vanishes in the top component; (r, S) was "
                               "not produced by the minimal-monomial search");
    const Integer unit_sq = unit * unit;
    if (total % unit_sq != 0)
        throw validation_error("expansion is not a multiple of the certificate monomial square; "
                               "engine invariant broken");
    return total / unit_sq;
}

OracleExpansion oracle_expansion(int n, int r) {
    if (n < 3) throw input_error("oracle expansion needs n >= 3");
    if (r < 0 || r > n - 3)
        throw input_error("oracle expansion needs 0 <= r <= n-3");

    OracleExpansion out;
    out.n = n;
    out.r = r;
    out.closed_form = expected_coefficient(n, r);

    // Free normalized monomial algebra; the oracle below is the only
    // vanishing imposed.
    const Presentation free = Presentation::free_algebra(n, n - 3);
    SubsetMask support;
    for (int i = 1; i <= r; ++i) support = support.with(i);
    const int top = n - 3;

    const auto oracle_reduce = [&](const TensorPolynomial& t) {
        TensorPolynomial kept;
        const TensorPolynomial part = t.bidegree_part(top, top);
        for (const auto& [pair, c] : part.terms()) {
            if (pair.first.support.size() < r || pair.second.support.size() < r) continue;
            kept.add_term(pair.first, pair.second, c);
        }
        return kept;
    };

    const TensorPolynomial brute =
        oracle_reduce(expand_product(certificate_factors(free, r, support), free));
    const TensorPolynomial shortcut = oracle_reduce(shortcut_product(free, r, support));
    out.tensors_identical = brute == shortcut;

    const Monomial target = top_monomial(free, support);
    const auto extract = [&](const TensorPolynomial& t) -> Integer {
        Integer coef = 0;
        for (const auto& [pair, c] : t.terms()) {
            if (!(pair.first == target) || !(pair.second == target))
                throw validation_error("oracle expansion left a term off the diagonal: (" +
                                       pair.first.to_string() + ")x(" +
                                       pair.second.to_string() + ")");
            coef = c;
        }
        return coef;
    };
    out.brute_force = extract(brute);
    out.shortcut = extract(shortcut);
    return out;
}

bool cup_length_lower_bound(const Presentation& pres, const std::vector<Polynomial>& classes,
                            int m) {
    if (m < 0) throw input_error("negative product length");
    if (m > 2 * pres.max_degree())
        throw input_error("product length " + std::to_string(m) +
                          " exceeds twice the presentation's max_degree");
    if (static_cast<int>(classes.size()) != m)
        throw input_error("expected exactly " + std::to_string(m) + " classes, got " +
                          std::to_string(classes.size()));

    TensorPolynomial product = TensorPolynomial::one();
    for (const Polynomial& y : classes) {
        if (!y.is_zero() && y.require_homogeneous_degree() != 1)
            throw input_error("cup-length classes must be homogeneous of degree 1");
        product = tensor_multiply(product, zero_divisor(pres.reduce(y)), pres);
        if (product.is_zero()) return false;
    }

    // Bidegree-wise zero test with torsion: group the terms, express both
    // sides in SNF coordinates, and test each coordinate pair against the
    // order of its cyclic factor.
    const int cap = std::min(pres.top_degree(), pres.max_degree());
    std::vector<GradedComponent> comps;
    comps.reserve(static_cast<std::size_t>(cap) + 1);
    for (int d = 0; d <= cap; ++d) comps.push_back(component(pres, d));
    for (int d1 = 0; d1 <= cap; ++d1)
        for (int d2 = 0; d2 <= cap; ++d2) {
            const TensorPolynomial part = product.bidegree_part(d1, d2);
            if (part.is_zero()) continue;
            const GradedComponent& c1 = comps[static_cast<std::size_t>(d1)];
            const GradedComponent& c2 = comps[static_cast<std::size_t>(d2)];
            const std::size_t k1 = c1.basis().size(), k2 = c2.basis().size();
            IntMatrix coords(k1, IntRow(k2, 0));
            for (const auto& [pair, c] : part.terms()) {
                const IntRow y1 = c1.class_vector(Polynomial(pair.first)).coords;
                const IntRow y2 = c2.class_vector(Polynomial(pair.second)).coords;
                for (std::size_t i = 0; i < k1; ++i) {
                    if (y1[i] == 0) continue;
                    for (std::size_t j = 0; j < k2; ++j)
                        if (y2[j] != 0) coords[i][j] += c * y1[i] * y2[j];
                }
            }
            const auto order_of = [](const GradedComponent& comp, std::size_t i) -> Integer {
                // 0 encodes infinite order (free coordinate)
                if (i < static_cast<std::size_t>(comp.rank()))
                    return comp.snf().divisors[i];
                return 0;
            };
            for (std::size_t i = 0; i < k1; ++i)
                for (std::size_t j = 0; j < k2; ++j) {
                    if (coords[i][j] == 0) continue;
                    const Integer o1 = order_of(c1, i), o2 = order_of(c2, j);
                    // Z (x) Z = Z, Z/d (x) Z = Z/d, Z/d (x) Z/e = Z/gcd
                    Integer order = 0;
                    if (o1 != 0 && o2 != 0) order = gcd(o1, o2);
                    else if (o1 != 0) order = o1;
                    else if (o2 != 0) order = o2;
                    if (order == 0) return true;           // free x free, nonzero
                    if (coords[i][j] % order != 0) return true;
                }
        }
    return false;
}

TCCertificate certify(const LengthVector& ell, const Presentation& pres,
                      const std::string& presentation_id, ExpansionPath path,
                      bool collect_witnesses) {
    TCCertificate cert;
    cert.n = ell.n();
    cert.lengths = ell.entries();
    cert.presentation_id = presentation_id;

    const auto wall = find_splitting_subset(ell);
    cert.generic = !wall.has_value();
    cert.nondegenerate = is_nondegenerate(ell);
    if (!cert.generic)
        throw hypothesis_error("refusing " + ell.to_string() +
                               ": not generic, straight-line polygons exist (subset " +
                               wall->to_string() + " splits the total evenly)");
    if (!cert.nondegenerate)
        throw hypothesis_error("refusing " + ell.to_string() +
                               ": degenerate, N(ell) is empty (one side reaches all others "
                               "combined)");

    const ValidationReport report = validate(pres, ell);
    if (!report.accepted)
        throw validation_error("presentation rejected by validation:\n" + report.to_text());

    const MinimalTopMonomial min = minimal_top_monomial(pres);
    cert.r = min.r;
    cert.support = min.support;
    cert.coefficient = certificate_coefficient(pres, min.r, min.support, path);
    cert.expected = expected_coefficient(cert.n, min.r);
    cert.tc_lower = 2 * cert.n - 5;
    cert.tc_upper = 2 * cert.n - 5;
    cert.tc = 2 * cert.n - 5;
    cert.valid = cert.coefficient == cert.expected && cert.coefficient != 0;
    if (collect_witnesses) cert.witnesses = all_minimal_supports(pres);
    return cert;
}

std::string TCCertificate::to_json(bool include_witnesses) const {
    ordered_json j;
    j["n"] = n;
    ordered_json ls = ordered_json::array();
    for (const Rational& q : lengths) ls.push_back(polytc::to_string(q));
    j["lengths"] = std::move(ls);
    j["generic"] = generic;
    j["nondegenerate"] = nondegenerate;
    j["r"] = r;
    ordered_json sup = ordered_json::array();
    for (int i : support.indices()) sup.push_back(i);
    j["support"] = std::move(sup);
    if (!coefficient.fits_slong_p() || !expected.fits_slong_p())
        throw input_error("certificate coefficient out of JSON integer range");
    j["coefficient"] = coefficient.get_si();
    j["expected"] = expected.get_si();
    j["tc_lower"] = tc_lower;
    j["tc_upper"] = tc_upper;
    j["tc"] = tc;
    j["presentation_id"] = presentation_id;
    j["valid"] = valid;
    if (include_witnesses) {
        ordered_json ws = ordered_json::array();
        for (const SubsetMask& w : witnesses) {
            ordered_json one = ordered_json::array();
            for (int i : w.indices()) one.push_back(i);
            ws.push_back(std::move(one));
        }
        j["witnesses"] = std::move(ws);
    }
    return j.dump(2) + "\n";
}

std::string TCCertificate::to_text() const {
    std::string s;
    s += "n              " + std::to_string(n) + "\n";
    std::string lens;
    for (std::size_t i = 0; i < lengths.size(); ++i) {
        if (i) lens += ",";
        lens += polytc::to_string(lengths[i]);
    }
    s += "lengths        " + lens + "\n";
    s += std::string("generic        ") + (generic ? "yes" : "no") + "\n";
    s += std::string("nondegenerate  ") + (nondegenerate ? "yes" : "no") + "\n";
    s += "r              " + std::to_string(r) + "\n";
    s += "support        " + support.to_string() + "\n";
    s += "coefficient    " + coefficient.get_str() + "\n";
    s += "expected       " + expected.get_str() + "\n";
    s += "tc             " + std::to_string(tc) + " (lower " + std::to_string(tc_lower) +
         ", upper " + std::to_string(tc_upper) + ")\n";
    s += "presentation   " + presentation_id + "\n";
    if (!witnesses.empty()) {
        s += "witnesses      ";
        for (std::size_t i = 0; i < witnesses.size(); ++i) {
            if (i) s += " ";
            s += witnesses[i].to_string();
        }
        s += "\n";
    }
    s += std::string("certificate    ") + (valid ? "VALID" : "INVALID") + "\n";
    return s;
}

}  // namespace polytc
