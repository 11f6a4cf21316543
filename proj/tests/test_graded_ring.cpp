#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "polytc/component.hpp"
#include "polytc/errors.hpp"
#include "polytc/hk_presentation.hpp"

using namespace polytc;

namespace {

const std::string kFixtures = POLYTC_FIXTURE_DIR;

Polynomial gen_r() { return Polynomial(Monomial::r_power(1)); }
Polynomial gen_v(int i) { return Polynomial(Monomial::v(i)); }

Polynomial random_poly(int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 4), rexp(0, 2), coef(-9, 9), pick(0, 1);
    Polynomial p;
    const int terms = nterms(rng);
    for (int t = 0; t < terms; ++t) {
        SubsetMask s;
        for (int i = 1; i <= n - 1; ++i)
            if (pick(rng)) s = s.with(i);
        int a = rexp(rng);
        if (a + s.size() > 4) a = 0;  // keep degree <= 4
        p.add_term(Monomial{a, s}, coef(rng));
    }
    return p;
}

}  // namespace

TEST_CASE("word rewriting and the squaring rule") {
    const Presentation free = Presentation::free_algebra(4, 4);

    // V1*V1 -> R*V1
    const GeneratorWord sq = {{GeneratorSymbol::v(1), 2}};
    CHECK(normalize(sq, free) == Polynomial(Monomial{1, SubsetMask::single(1)}));

    // V1^3 -> R^2*V1, cross-checked by the induction oracle: repeated
    // ring multiplication by V1
    const GeneratorWord cube = {{GeneratorSymbol::v(1), 3}};
    Polynomial bymul = gen_v(1);
    bymul = multiply(bymul, gen_v(1), free);
    bymul = multiply(bymul, gen_v(1), free);
    CHECK(normalize(cube, free) == bymul);
    CHECK(normalize(cube, free) == Polynomial(Monomial{2, SubsetMask::single(1)}));

    // R^2 is already normal
    const GeneratorWord rsq = {{GeneratorSymbol::r(), 2}};
    CHECK(normalize(rsq, free) == Polynomial(Monomial::r_power(2)));

    CHECK_THROWS_AS(rewrite_word({{GeneratorSymbol::v(1), -1}}, 4), input_error);
    CHECK_THROWS_AS(rewrite_word({{GeneratorSymbol::v(5), 1}}, 4), input_error);
}

TEST_CASE("generator symbol parsing") {
    CHECK(parse_generator("R", 5).is_r);
    CHECK(parse_generator("V4", 5).v_index == 4);
    CHECK_THROWS_AS(parse_generator("V5", 5), input_error);  // V_n is not a generator
    CHECK_THROWS_AS(parse_generator("V0", 5), input_error);
    CHECK_THROWS_AS(parse_generator("W", 5), input_error);
    CHECK_THROWS_AS(parse_generator("V1x", 5), input_error);
}

TEST_CASE("ring multiplication") {
    const Presentation free = Presentation::free_algebra(5, 4);

    // (R + V1) * V1 = R*V1 + V1^2 = 2*R*V1
    const Polynomial p = multiply(gen_r() + gen_v(1), gen_v(1), free);
    CHECK(p == Polynomial(Monomial{1, SubsetMask::single(1)}, 2));
    CHECK(p.to_string() == "2*R*V1");

    // 1 * p = p
    std::mt19937 rng(5);
    for (int t = 0; t < 20; ++t) {
        const Polynomial q = random_poly(5, rng);
        CHECK(multiply(Polynomial::one(), q, free) == q);
    }
}

TEST_CASE("products of n-2 distinct generators vanish under base presentations") {
    std::mt19937 rng(31337);
    int found = 0;
    while (found < 10) {
        const LengthVector ell = testing::random_lengths(6, rng);
        if (!is_generic(ell) || !is_nondegenerate(ell)) continue;
        ++found;
        const Presentation base = build_base(ell);
        for (const SubsetMask& s : subsets_of_size(5, 4)) {
            Polynomial prod = Polynomial::one();
            for (int i : s.indices()) prod = multiply(prod, gen_v(i), base);
            CHECK(prod.is_zero());
        }
    }
}

TEST_CASE("canonical polynomial printing") {
    Polynomial p;
    p.add_term(Monomial{2, SubsetMask::from_indices({1, 3})}, 2);
    p.add_term(Monomial{0, SubsetMask::single(2)}, -1);
    CHECK(p.to_string() == "2*R^2*V1*V3 - V2");
    CHECK(Polynomial::zero().to_string() == "0");
    CHECK(Polynomial::one().to_string() == "1");
    CHECK((Polynomial::one() * Integer(-3)).to_string() == "-3");
}

TEST_CASE("monomial order is total and canonical") {
    MonomialOrder less;
    const Monomial r2{2, SubsetMask::empty()};          // degree 2, |S|=0
    const Monomial rv1{1, SubsetMask::single(1)};       // degree 2, |S|=1
    const Monomial v13{0, SubsetMask::from_indices({1, 3})};
    const Monomial v23{0, SubsetMask::from_indices({2, 3})};
    CHECK(less(r2, rv1));
    CHECK(less(rv1, v13));
    CHECK(less(v13, v23));
    CHECK_FALSE(less(v23, v13));
    CHECK_FALSE(less(r2, r2));
}

TEST_CASE("graded components of the sphere fixture") {
    const Presentation pres = load_fixture(kFixtures + "/n4_sphere.json");

    const GradedComponent c0 = component(pres, 0);
    CHECK(c0.betti() == 1);
    CHECK(c0.basis().size() == 1);

    const GradedComponent c1 = component(pres, 1);
    CHECK(c1.basis().size() == 4);  // R, V1, V2, V3
    CHECK(c1.betti() == 1);
    CHECK(c1.torsion().empty());

    const GradedComponent c2 = component(pres, 2);
    CHECK(c2.betti() == 0);

    CHECK_THROWS_AS(component(pres, 3), incomplete_presentation_error);
}

TEST_CASE("annihilating the empty support kills every degree") {
    const Presentation dead(4, 3, {SubsetMask::empty()}, {});
    for (int d = 0; d <= 3; ++d) {
        const GradedComponent c = component(dead, d);
        CHECK(c.basis().empty());
        CHECK(c.betti() == 0);
    }
}

TEST_CASE("is_nonzero decides lattice membership over the integers") {
    const Presentation pres = load_fixture(kFixtures + "/n4_sphere.json");

    CHECK_FALSE(is_nonzero(pres, Polynomial::zero()));
    CHECK(is_nonzero(pres, gen_r()));
    CHECK(is_nonzero(pres, gen_v(1)));
    // V1 + R is a relation
    CHECK_FALSE(is_nonzero(pres, gen_v(1) + gen_r()));
    // annihilated support
    Polynomial v12(Monomial{0, SubsetMask::from_indices({1, 2})});
    CHECK_FALSE(is_nonzero(pres, v12));

    CHECK_THROWS_AS(is_nonzero(pres, gen_r() + Polynomial(Monomial::r_power(2))), input_error);

    // torsion detection: 2x = 0 makes x a torsion class, zero over Q but
    // not over Z
    Polynomial two_r = gen_r() * Integer(2);
    const Presentation torsion(4, 1, {}, {two_r});
    CHECK(is_nonzero(torsion, gen_r()));
    CHECK_FALSE(is_nonzero(torsion, two_r));
    const GradedComponent t1 = component(torsion, 1);
    CHECK(t1.betti() == 3);
    REQUIRE(t1.torsion().size() == 1);
    CHECK(t1.torsion()[0] == 2);
}

TEST_CASE("top coordinates on the sphere fixture") {
    const Presentation pres = load_fixture(kFixtures + "/n4_sphere.json");

    CHECK(top_coordinate(pres, Polynomial::zero()) == 0);
    // sign convention: the minimal nonzero monomial R gets +1
    CHECK(top_coordinate(pres, gen_r()) == 1);
    CHECK(top_coordinate(pres, gen_v(1)) == -1);
    CHECK(top_coordinate(pres, gen_v(2)) == -1);
    CHECK(top_coordinate(pres, gen_v(3)) == -1);

    // well-definedness: ring-equal polynomials get equal coordinates
    CHECK(top_coordinate(pres, gen_v(1)) == top_coordinate(pres, -gen_r()));

    CHECK_THROWS_AS(top_coordinate(pres, Polynomial(Monomial::r_power(2))), input_error);

    // rejected when the top component is not infinite cyclic
    const Presentation base =
        build_base(LengthVector::parse("1,1,1,1,1")).with_max_degree(2);
    CHECK_THROWS_AS(top_coordinate(base, Polynomial(Monomial::r_power(2))), validation_error);
}

TEST_CASE("normal form is confluent under randomized rewrite orders") {
    std::mt19937 rng(2718);
    std::uniform_int_distribution<int> nsym(1, 6), exp(0, 4), pick(0, 5);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 6;
        GeneratorWord w;
        const int syms = nsym(rng);
        for (int s = 0; s < syms; ++s) {
            const int which = pick(rng);
            if (which == 0) w.emplace_back(GeneratorSymbol::r(), exp(rng));
            else w.emplace_back(GeneratorSymbol::v(which), exp(rng));
        }
        const Monomial direct = rewrite_word(w, n);
        const Monomial random_order = testing::rewrite_randomly(w, n, rng);
        CHECK(direct == random_order);
        // idempotence: normalizing the normal form changes nothing
        GeneratorWord back;
        back.emplace_back(GeneratorSymbol::r(), direct.r_exp);
        for (int i : direct.support.indices()) back.emplace_back(GeneratorSymbol::v(i), 1);
        CHECK(rewrite_word(back, n) == direct);
    }
}

TEST_CASE("multiplication is associative and commutative") {
    std::mt19937 rng(161803);
    const Presentation free = Presentation::free_algebra(6, 12);
    const Presentation base = build_base(LengthVector::parse("1,1,1,1,1,2"));
    for (int trial = 0; trial < 300; ++trial) {
        const Polynomial p = random_poly(6, rng);
        const Polynomial q = random_poly(6, rng);
        const Polynomial r = random_poly(6, rng);
        for (const Presentation* pres : {&free, &base}) {
            CHECK(multiply(p, q, *pres) == multiply(q, p, *pres));
            CHECK(multiply(multiply(p, q, *pres), r, *pres) ==
                  multiply(p, multiply(q, r, *pres), *pres));
        }
    }
}

TEST_CASE("exponent-shuffled monomials agree in normal form") {
    // Exponent-shuffle identity: R^{e0} prod V_i^{e_i} depends only on
    // (degree, support) once normalized
    std::mt19937 rng(55);
    std::uniform_int_distribution<int> dn(5, 8);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = dn(rng);
        const int d = std::uniform_int_distribution<int>(0, n - 3)(rng);
        const int k = std::uniform_int_distribution<int>(0, d)(rng);
        SubsetMask s;
        while (s.size() < k) s = s.with(std::uniform_int_distribution<int>(1, n - 1)(rng));

        // two random splittings of d among e0 and the e_i >= 1
        const auto random_word = [&]() {
            GeneratorWord w;
            int left = d - k;
            std::vector<int> extra(static_cast<std::size_t>(k), 0);
            for (int give = 0; give < left;) {
                const int slot = std::uniform_int_distribution<int>(0, k)(rng);
                if (slot == k) break;  // leave the rest on R
                ++extra[static_cast<std::size_t>(slot)];
                ++give;
            }
            int used = 0;
            const auto idx = s.indices();
            for (int i = 0; i < k; ++i) {
                w.emplace_back(GeneratorSymbol::v(idx[static_cast<std::size_t>(i)]),
                               1 + extra[static_cast<std::size_t>(i)]);
                used += extra[static_cast<std::size_t>(i)];
            }
            w.emplace_back(GeneratorSymbol::r(), d - k - used);
            return w;
        };
        const Monomial a = rewrite_word(random_word(), n);
        const Monomial b = rewrite_word(random_word(), n);
        CHECK(a == b);
        CHECK(a == Monomial{d - k, s});
    }
}

TEST_CASE("smith normal form on known matrices") {
    {
        IntMatrix m = {{2, 4}, {6, 8}};
        const SmithNormalForm snf = smith_normal_form(m, 2);
        REQUIRE(snf.rank == 2);
        CHECK(snf.divisors[0] == 2);
        CHECK(snf.divisors[1] == 4);
    }
    {
        // rank-deficient with torsion
        IntMatrix m = {{2, 0, 0}, {0, 3, 0}, {2, 3, 0}};
        const SmithNormalForm snf = smith_normal_form(m, 3);
        REQUIRE(snf.rank == 2);
        CHECK(snf.divisors[0] == 1);
        CHECK(snf.divisors[1] == 6);
    }
    {
        const SmithNormalForm snf = smith_normal_form({}, 3);
        CHECK(snf.rank == 0);
    }
}

namespace {

// Rank over Q by fraction-free Gaussian elimination; independent of the
// SNF code path.
int rational_rank(IntMatrix m, int cols) {
    int rank = 0;
    const int rows = static_cast<int>(m.size());
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i)
            if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[static_cast<std::size_t>(rank)], m[static_cast<std::size_t>(pivot)]);
        for (int i = rank + 1; i < rows; ++i) {
            const Integer a = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
            if (a == 0) continue;
            const Integer b =
                m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
            for (int j = col; j < cols; ++j)
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    b * m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                    a * m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)];
        }
        ++rank;
    }
    return rank;
}

// Determinant by cofactor expansion along the first column; only used
// on tiny matrices.
Integer signed_det(const IntMatrix& m) {
    const std::size_t k = m.size();
    if (k == 0) return 1;
    if (k == 1) return m[0][0];
    Integer det = 0;
    for (std::size_t i = 0; i < k; ++i) {
        if (m[i][0] == 0) continue;
        IntMatrix minor;
        for (std::size_t r = 0; r < k; ++r) {
            if (r == i) continue;
            minor.push_back(IntRow(m[r].begin() + 1, m[r].end()));
        }
        Integer term = m[i][0] * signed_det(minor);
        if (i % 2 == 1) term = -term;
        det += term;
    }
    return det;
}

Integer abs_det(const IntMatrix& m) { return abs(signed_det(m)); }

}  // namespace

TEST_CASE("smith normal form properties on random matrices") {
    std::mt19937 rng(60221023);
    std::uniform_int_distribution<int> dim(1, 5), entry(-6, 6);
    for (int trial = 0; trial < 200; ++trial) {
        const int rows = dim(rng), cols = dim(rng);
        IntMatrix m(static_cast<std::size_t>(rows), IntRow(static_cast<std::size_t>(cols)));
        for (auto& r : m)
            for (auto& x : r) x = entry(rng);
        const SmithNormalForm snf = smith_normal_form(m, cols);

        // rank agrees with fraction-free elimination
        CHECK(snf.rank == rational_rank(m, cols));

        // divisors positive with a divisibility chain
        for (int i = 0; i < snf.rank; ++i) {
            CHECK(snf.divisors[static_cast<std::size_t>(i)] > 0);
            if (i + 1 < snf.rank)
                CHECK(snf.divisors[static_cast<std::size_t>(i + 1)] %
                          snf.divisors[static_cast<std::size_t>(i)] ==
                      0);
        }

        // the tracked transform is unimodular and correctly inverted
        for (int i = 0; i < cols; ++i)
            for (int j = 0; j < cols; ++j) {
                Integer dot = 0;
                for (int t = 0; t < cols; ++t)
                    dot += snf.col_transform[static_cast<std::size_t>(i)]
                                            [static_cast<std::size_t>(t)] *
                           snf.col_transform_inv[static_cast<std::size_t>(t)]
                                                [static_cast<std::size_t>(j)];
                CHECK(dot == (i == j ? 1 : 0));
            }

        // every row of m lies in the lattice as the membership test sees it
        for (const IntRow& row : m) {
            const IntRow y = apply_col_transform(row, snf.col_transform);
            for (int i = 0; i < cols; ++i) {
                if (i < snf.rank)
                    CHECK(y[static_cast<std::size_t>(i)] %
                              snf.divisors[static_cast<std::size_t>(i)] ==
                          0);
                else
                    CHECK(y[static_cast<std::size_t>(i)] == 0);
            }
        }

        // for square full-rank matrices, the divisor product is |det|
        if (rows == cols && snf.rank == cols) {
            Integer prod = 1;
            for (const Integer& d : snf.divisors) prod *= d;
            CHECK(prod == abs_det(m));
        }
    }
}

TEST_CASE("smith invariants survive basis permutation") {
    std::mt19937 rng(98765);
    const Presentation pres = load_fixture(kFixtures + "/n5_equilateral.json");
    for (int d = 0; d <= 2; ++d) {
        const GradedComponent c = component(pres, d);
        const IntMatrix& m = c.relation_matrix();
        const int cols = static_cast<int>(c.basis().size());

        std::vector<int> perm(static_cast<std::size_t>(cols));
        for (int i = 0; i < cols; ++i) perm[static_cast<std::size_t>(i)] = i;
        for (int trial = 0; trial < 10; ++trial) {
            std::shuffle(perm.begin(), perm.end(), rng);
            IntMatrix shuffled(m.size(), IntRow(static_cast<std::size_t>(cols)));
            for (std::size_t r = 0; r < m.size(); ++r)
                for (int j = 0; j < cols; ++j)
                    shuffled[r][static_cast<std::size_t>(j)] =
                        m[r][static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])];
            const SmithNormalForm a = smith_normal_form(m, cols);
            const SmithNormalForm b = smith_normal_form(shuffled, cols);
            CHECK(a.rank == b.rank);
            CHECK(a.divisors == b.divisors);
        }
    }
}

TEST_CASE("betti(0) is 1 for every accepted presentation") {
    for (const char* name : {"/n4_sphere.json", "/n5_equilateral.json"}) {
        const Presentation pres = load_fixture(kFixtures + name);
        CHECK(component(pres, 0).betti() == 1);
    }
}
