#include "polytc/component.hpp"

#include <map>

#include "polytc/errors.hpp"

namespace polytc {

std::vector<Monomial> monomial_basis(const Presentation& pres, int d) {
    std::vector<Monomial> basis;
    const int max_support = std::min(d, pres.n() - 1);
    for (int k = 0; k <= max_support; ++k)
        for (const SubsetMask& s : subsets_of_size(pres.n() - 1, k))
            if (!pres.is_annihilated(s)) basis.push_back(Monomial{d - k, s});
    return basis;
}

GradedComponent component(const Presentation& pres, int d) {
    if (d < 0) throw input_error("negative degree");
    if (d > pres.max_degree())
        throw incomplete_presentation_error(
            "degree " + std::to_string(d) + " is past the asserted completeness degree " +
            std::to_string(pres.max_degree()) + " of this presentation");
    if (!pres.uses_only_generators())
        throw input_error("presentation uses indices outside V1..V" +
                          std::to_string(pres.n() - 1) + "; run validation for details");

    GradedComponent comp;
    comp.degree_ = d;
    comp.basis_ = monomial_basis(pres, d);

    std::map<Monomial, int, MonomialOrder> index;
    for (std::size_t i = 0; i < comp.basis_.size(); ++i)
        index.emplace(comp.basis_[i], static_cast<int>(i));

    const int cols = static_cast<int>(comp.basis_.size());
    for (const Polynomial& rel : pres.linear_relations()) {
        const int rd = rel.require_homogeneous_degree();
        if (rd > d) continue;
        for (const Monomial& m : monomial_basis(pres, d - rd)) {
            IntRow row(static_cast<std::size_t>(cols), 0);
            bool nonzero = false;
            for (const auto& [rm, c] : rel.terms()) {
                const Monomial prod = mono_mul(rm, m);
                if (pres.is_annihilated(prod.support)) continue;
                row[static_cast<std::size_t>(index.at(prod))] += c;
                nonzero = true;
            }
            if (!nonzero) continue;
            bool allzero = true;
            for (const Integer& x : row)
                if (x != 0) {
                    allzero = false;
                    break;
                }
            if (!allzero) comp.relation_matrix_.push_back(std::move(row));
        }
    }

    comp.snf_ = smith_normal_form(comp.relation_matrix_, cols);
    return comp;
}

std::vector<Integer> GradedComponent::torsion() const {
    std::vector<Integer> out;
    for (const Integer& d : snf_.divisors)
        if (d != 1) out.push_back(d);
    return out;
}

IntRow GradedComponent::coordinates(const Polynomial& p) const {
    IntRow x(basis_.size(), 0);
    std::size_t cursor = 0;
    for (const auto& [m, c] : p.terms()) {
        if (m.degree() != degree_)
            throw input_error("degree mismatch: " + m.to_string() + " is not of degree " +
                              std::to_string(degree_));
        // basis_ is in the same canonical order as the term map
        while (cursor < basis_.size() && !(basis_[cursor] == m)) ++cursor;
        if (cursor == basis_.size())
            throw input_error("monomial " + m.to_string() +
                              " is not in the component basis (annihilated term not reduced?)");
        x[cursor] = c;
    }
    return x;
}

bool GradedComponent::is_nonzero_class(const Polynomial& p) const {
    if (p.is_zero()) return false;
    const IntRow y = apply_col_transform(coordinates(p), snf_.col_transform);
    for (int i = 0; i < snf_.rank; ++i)
        if (y[static_cast<std::size_t>(i)] % snf_.divisors[static_cast<std::size_t>(i)] != 0)
            return true;
    for (std::size_t i = static_cast<std::size_t>(snf_.rank); i < y.size(); ++i)
        if (y[i] != 0) return true;
    return false;
}

GradedComponent::ClassVector GradedComponent::class_vector(const Polynomial& p) const {
    ClassVector cv;
    cv.coords = apply_col_transform(coordinates(p), snf_.col_transform);
    return cv;
}

bool is_nonzero(const Presentation& pres, const Polynomial& p) {
    const Polynomial reduced = pres.reduce(p);
    if (reduced.is_zero()) return false;
    const int d = reduced.require_homogeneous_degree();
    return component(pres, d).is_nonzero_class(reduced);
}

TopForm::TopForm(const Presentation& pres) : comp_(polytc::component(pres, pres.top_degree())) {
    if (comp_.betti() != 1)
        throw validation_error("top component has betti " + std::to_string(comp_.betti()) +
                               ", not 1; presentation rejected");
    for (const Integer& d : comp_.snf().divisors)
        if (d != 1)
            throw validation_error("top component has torsion; presentation rejected");

    // The single free SNF coordinate is the quotient's coordinate up to
    // sign; column `rank` of the transform evaluates it on each basis
    // monomial.
    const int rank = comp_.snf().rank;
    const std::size_t k = comp_.basis().size();
    phi_.assign(k, 0);
    for (std::size_t i = 0; i < k; ++i)
        phi_[i] = comp_.snf().col_transform[i][static_cast<std::size_t>(rank)];

    // Sign convention: the first basis monomial with nonzero class (the
    // minimal-support certificate monomial) gets a positive coordinate.
    for (std::size_t i = 0; i < k; ++i) {
        if (phi_[i] == 0) continue;
        if (phi_[i] < 0)
            for (Integer& x : phi_) x = -x;
        break;
    }
}

Integer TopForm::operator()(const Polynomial& p) const {
    Integer out = 0;
    const IntRow x = comp_.coordinates(p);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0) out += x[i] * phi_[i];
    return out;
}

Integer TopForm::on_monomial(const Monomial& m) const { return (*this)(Polynomial(m)); }

Integer top_coordinate(const Presentation& pres, const Polynomial& p) {
    const Polynomial reduced = pres.reduce(p);
    if (reduced.is_zero()) return 0;
    if (reduced.require_homogeneous_degree() != pres.top_degree())
        throw input_error("top_coordinate expects degree " + std::to_string(pres.top_degree()));
    return TopForm(pres)(reduced);
}

}  // namespace polytc
