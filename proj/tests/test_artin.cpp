#include <doctest.h>

#include "weylflag/artin.hpp"

using namespace weylflag;

namespace {

AlgElem el(const AlgPtr& alg, const std::string& s) { return AlgElem::parse(alg, s); }

ArtinMatrix mat2(const AlgPtr& alg, const std::string& a, const std::string& b,
                 const std::string& c, const std::string& d) {
    ArtinMatrix m(alg, 2, 2);
    m.at(0, 0) = el(alg, a);
    m.at(0, 1) = el(alg, b);
    m.at(1, 0) = el(alg, c);
    m.at(1, 1) = el(alg, d);
    return m;
}

}  // namespace

TEST_CASE("algebra construction and monomial basis") {
    AlgPtr q = TruncatedAlgebra::rationals();
    CHECK(q->dim() == 1);
    CHECK(q->name() == "Q");

    AlgPtr d = TruncatedAlgebra::dual_numbers();
    CHECK(d->dim() == 2);
    CHECK(d->name() == "e^2");

    AlgPtr ef = TruncatedAlgebra::parse("e^2, f^3");
    CHECK(ef->dim() == 6);
    CHECK(ef->mono_str(0) == "1");
    CHECK(ef->mono_str(1) == "f");
    CHECK(ef->mono_str(2) == "e");
    CHECK(ef->mono_str(3) == "f^2");
    CHECK(ef->mono_str(4) == "e*f");
    CHECK(ef->mono_str(5) == "e*f^2");

    CHECK_THROWS_AS(TruncatedAlgebra::parse("e^1"), std::invalid_argument);
    CHECK_THROWS_AS(TruncatedAlgebra::parse("e^2,e^3"), std::invalid_argument);
    CHECK_THROWS_AS(TruncatedAlgebra::parse("2^e"), std::invalid_argument);
}

TEST_CASE("element printing and parsing round trip") {
    AlgPtr a3 = TruncatedAlgebra::truncated("e", 3);
    AlgElem x = el(a3, "3/2 + 1/4*e + 0*e^2");
    CHECK(x.to_string() == "3/2 + 1/4*e + 0*e^2");
    CHECK(x.residue() == make_rat(3, 2));
    CHECK(el(a3, x.to_string()) == x);

    CHECK(el(a3, "3 - e").to_string() == "3 - 1*e + 0*e^2");
    CHECK(el(a3, "e*e") == el(a3, "e^2"));
    CHECK(el(a3, "2*e^5") == AlgElem::zero(a3));  // truncated monomials drop
    CHECK(el(a3, "-1/2").residue() == make_rat(-1, 2));
    CHECK_THROWS_AS(el(a3, "x + 1"), std::invalid_argument);
    CHECK_THROWS_AS(el(a3, ""), std::invalid_argument);

    AlgPtr ef = TruncatedAlgebra::parse("e^2,f^3");
    AlgElem y = el(ef, "1 + 2*e*f^2 - 3*f");
    CHECK(y.to_string() == "1 - 3*f + 0*e + 0*f^2 + 0*e*f + 2*e*f^2");
    CHECK(el(ef, y.to_string()) == y);
}

TEST_CASE("ring axioms and units") {
    AlgPtr a3 = TruncatedAlgebra::truncated("e", 3);
    AlgElem g = AlgElem::generator(a3);
    CHECK((g * g * g).is_zero());
    CHECK(!(g * g).is_zero());
    CHECK(!g.is_unit());

    AlgElem u = el(a3, "2 + e - 1/3*e^2");
    CHECK(u.is_unit());
    CHECK(u * u.inverse() == AlgElem::one(a3));
    CHECK_THROWS_AS(g.inverse(), DomainError);

    AlgElem v = el(a3, "-1/2 + 4*e");
    CHECK((u + v) - v == u);
    CHECK(u * v == v * u);
    CHECK(u * (v + g) == u * v + u * g);
}

TEST_CASE("regular representation is a ring homomorphism") {
    AlgPtr ef = TruncatedAlgebra::parse("e^2,f^3");
    ArtinMatrix m(ef, 1, 1), k(ef, 1, 1);
    m.at(0, 0) = el(ef, "1 + 2*f - e + f^2");
    k.at(0, 0) = el(ef, "3 - f + e*f");
    CHECK(mat_mul(m.expand(), k.expand()) == (m * k).expand());
    CHECK(mat_mul(k.expand(), m.expand()) == (m * k).expand());
}

TEST_CASE("matrix inverse over a local ring") {
    AlgPtr d = TruncatedAlgebra::dual_numbers();
    ArtinMatrix m = mat2(d, "1 + e", "2", "e", "1 - e");
    REQUIRE(m.is_invertible());
    CHECK(m * m.inverse() == ArtinMatrix::identity(d, 2));
    CHECK(m.inverse() * m == ArtinMatrix::identity(d, 2));

    ArtinMatrix s = mat2(d, "e", "1", "0", "1");  // residue rank 1
    CHECK(!s.is_invertible());
    CHECK_THROWS_AS(s.inverse(), DomainError);
    CHECK(s.det() == el(d, "e"));
}

TEST_CASE("solve and kernel over the algebra") {
    AlgPtr d = TruncatedAlgebra::dual_numbers();
    ArtinMatrix m = mat2(d, "1", "e", "0", "e");
    std::vector<AlgElem> y = {el(d, "1 + e"), el(d, "e")};
    auto x = solve_alg(m, y);
    REQUIRE(x.has_value());
    auto back = m.apply(*x);
    CHECK(back[0] == y[0]);
    CHECK(back[1] == y[1]);

    // ker includes (e, 0) and (0, 1 - ...)? Columns must satisfy m k = 0.
    ArtinMatrix kb = kernel_qbasis(m);
    for (int c = 0; c < kb.cols(); ++c) {
        std::vector<AlgElem> v;
        for (int r = 0; r < kb.rows(); ++r) v.push_back(kb.at(r, c));
        for (const auto& entry : m.apply(v)) CHECK(entry.is_zero());
    }
    CHECK(kb.cols() > 0);
}

TEST_CASE("minimal generators via Nakayama") {
    AlgPtr d = TruncatedAlgebra::dual_numbers();
    // Q-span of {(1,0), (e,0)} is the A-module generated by (1,0) alone.
    ArtinMatrix span(d, 2, 2);
    span.at(0, 0) = el(d, "1");
    span.at(0, 1) = el(d, "e");
    ArtinMatrix gen = min_generators(span);
    CHECK(gen.cols() == 1);
    CHECK(gen.at(0, 0).is_unit());
    CHECK(gen.at(1, 0).is_zero());
}

TEST_CASE("polynomial arithmetic and division") {
    AlgPtr d = TruncatedAlgebra::dual_numbers();
    AlgElem one = AlgElem::one(d), two = el(d, "2"), eps = el(d, "e");
    // (x - 2)(x - e) = x^2 - (2 + e) x + 2 e
    AlgPoly p = AlgPoly::linear(-two, one) * AlgPoly::linear(-eps, one);
    CHECK(p.degree() == 2);
    CHECK(p.coeff(0) == two * eps);
    CHECK(p.coeff(1) == -(two + eps));
    CHECK(p.eval(two).is_zero());
    CHECK(p.eval(eps).is_zero());

    auto [q, r] = p.divide_by_linear(eps);
    CHECK(r.is_zero());
    CHECK(q == AlgPoly::linear(-two, one));
}

TEST_CASE("characteristic polynomial via Faddeev-LeVerrier") {
    AlgPtr d = TruncatedAlgebra::dual_numbers();
    ArtinMatrix f = mat2(d, "0", "0", "e", "1");
    AlgPoly cp = charpoly(f);
    AlgElem one = AlgElem::one(d);
    AlgPoly expect = AlgPoly::linear(AlgElem::zero(d), one) *
                     AlgPoly::linear(-one, one);  // x (x - 1)
    CHECK(cp == expect);
    // Cayley-Hamilton.
    CHECK(cp.eval_matrix(f).is_zero());
}

TEST_CASE("Bezout chain frozen for m = 2 and verified in general") {
    AlgPtr q = TruncatedAlgebra::rationals();
    std::vector<AlgElem> lams = {AlgElem::zero(q), AlgElem::one(q)};
    auto chain = bezout_chain(lams);
    REQUIRE(chain.size() == 2);
    // P_1 = -1, P_2 = 1: -(x - 1) + (x - 0) = 1.
    CHECK(chain[0] == AlgPoly::constant(el(q, "-1")));
    CHECK(chain[1] == AlgPoly::constant(el(q, "1")));

    AlgPtr d = TruncatedAlgebra::truncated("e", 3);
    std::vector<AlgElem> la = {el(d, "1 + e"), el(d, "3 - e^2"), el(d, "-2 + e")};
    auto ch = bezout_chain(la);
    AlgPoly sum = AlgPoly::zero(d);
    for (size_t i = 0; i < la.size(); ++i) {
        AlgPoly term = ch[i];
        for (size_t j = 0; j < la.size(); ++j)
            if (j != i) term = term * AlgPoly::linear(-la[j], AlgElem::one(d));
        sum = sum + term;
    }
    CHECK(sum == AlgPoly::one(d));

    CHECK_THROWS_AS(bezout_chain(std::vector<AlgElem>{el(d, "1"), el(d, "1 + e")}), DomainError);
}

TEST_CASE("eigen decomposition of the frozen example") {
    AlgPtr d = TruncatedAlgebra::dual_numbers();
    ArtinMatrix f = mat2(d, "0", "0", "e", "1");
    std::vector<AlgElem> lams = {AlgElem::zero(d), AlgElem::one(d)};

    auto spaces = eigen_decompose(f, lams);
    REQUIRE(spaces.size() == 2);
    REQUIRE(spaces[0].cols() == 1);
    REQUIRE(spaces[1].cols() == 1);
    // ker f is generated by (1, -e); ker (f - 1) by (0, 1).
    AlgElem s = spaces[0].at(0, 0);
    CHECK(s.is_unit());
    CHECK(spaces[0].at(1, 0) == el(d, "-e") * s);
    CHECK(spaces[1].at(0, 0).is_zero());
    CHECK(spaces[1].at(1, 0).is_unit());

    ArtinMatrix b = eigen_basis(f, lams);
    CHECK(b.at(0, 0) == el(d, "1"));
    CHECK(b.at(1, 0) == el(d, "-e"));
    CHECK(b.at(0, 1) == el(d, "0"));
    CHECK(b.at(1, 1) == el(d, "1"));

    auto projs = projection_maps(f, lams);
    CHECK(projs[0] + projs[1] == ArtinMatrix::identity(d, 2));
    CHECK(projs[0] * projs[1] == ArtinMatrix(d, 2, 2));
}

TEST_CASE("eigen preconditions are enforced") {
    AlgPtr d = TruncatedAlgebra::dual_numbers();
    ArtinMatrix f = mat2(d, "0", "0", "e", "1");
    // Residually equal eigenvalues.
    CHECK_THROWS_AS(eigen_basis(f, {AlgElem::zero(d), el(d, "e")}), DomainError);
    // Wrong characteristic polynomial.
    CHECK_THROWS_AS(eigen_basis(f, {AlgElem::zero(d), el(d, "2")}), DomainError);
    // Wrong count is a usage error, not a precondition failure.
    CHECK_THROWS_AS(eigen_basis(f, {AlgElem::zero(d)}), std::invalid_argument);
}

TEST_CASE("refinements and flag stability") {
    AlgPtr d = TruncatedAlgebra::dual_numbers();
    ArtinMatrix f = mat2(d, "2", "0", "e", "1");
    std::vector<AlgElem> lams = {el(d, "2"), el(d, "1")};
    Refinement ref = refinement_from_eigenvalues(f, lams);
    CHECK(ref.basis.is_invertible());
    for (int k = 0; k <= 2; ++k) CHECK(flag_step_stable(f, ref.basis, k));

    // Non-unit eigenvalues are rejected for refinements.
    ArtinMatrix g = mat2(d, "0", "0", "e", "1");
    CHECK_THROWS_AS(refinement_from_eigenvalues(g, {AlgElem::zero(d), AlgElem::one(d)}),
                    DomainError);

    // The other ordering induces a different flag.
    Refinement swapped = refinement_from_eigenvalues(f, {el(d, "1"), el(d, "2")});
    CHECK(swapped.eigenvalues[0] == el(d, "1"));
    CHECK(flag_step_stable(f, swapped.basis, 1));
}
