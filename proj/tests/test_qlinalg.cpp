#include <doctest.h>

#include "weylflag/qlinalg.hpp"

using namespace weylflag;

namespace {

QMat mat(int rows, int cols, std::vector<int> v) {
    QMat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = v[static_cast<size_t>(i) * cols + j];
    return m;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(rat_str(make_rat(4, 6)) == "2/3");
    CHECK(rat_str(make_rat(-4, 2)) == "-2");
    CHECK(parse_rat("3/2") == make_rat(3, 2));
    CHECK(parse_rat("-7") == Rat(-7));
    CHECK(parse_rat("0/5") == Rat(0));
    CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("a"), std::invalid_argument);
    CHECK(is_integer(Rat(5)));
    CHECK(!is_integer(make_rat(1, 2)));
}

TEST_CASE("rref and rank") {
    QMat m = mat(3, 3, {1, 2, 3, 2, 4, 6, 1, 1, 1});
    CHECK(rank(m) == 2);
    CHECK(rank(QMat::identity(4)) == 4);
    CHECK(rank(QMat(2, 3)) == 0);
}

TEST_CASE("kernel basis spans the kernel") {
    QMat m = mat(2, 3, {1, 2, 3, 0, 1, 1});
    auto kb = kernel_basis(m);
    REQUIRE(kb.cols == 1);
    QVec v(3);
    for (int i = 0; i < 3; ++i) v[i] = kb.at(i, 0);
    QVec mv = mat_vec(m, v);
    for (const auto& x : mv) CHECK(x == 0);
}

TEST_CASE("solve finds particular solutions and detects inconsistency") {
    QMat m = mat(2, 2, {1, 1, 0, 1});
    QVec y = {Rat(3), Rat(1)};
    auto x = solve(m, y);
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 2);
    CHECK((*x)[1] == 1);

    QMat sing = mat(2, 2, {1, 1, 2, 2});
    CHECK(!solve(sing, QVec{Rat(1), Rat(3)}).has_value());
    CHECK(solve(sing, QVec{Rat(1), Rat(2)}).has_value());
}

TEST_CASE("column-space intersection") {
    // span{e1, e2} meet span{e2, e3} = span{e2}
    QMat l = mat(3, 2, {1, 0, 0, 1, 0, 0});
    QMat r = mat(3, 2, {0, 0, 1, 0, 0, 1});
    QMat inter = col_space_intersection(l, r);
    REQUIRE(inter.cols == 1);
    CHECK(inter.at(0, 0) == 0);
    CHECK(inter.at(1, 0) != 0);
    CHECK(inter.at(2, 0) == 0);
}

TEST_CASE("hstack and vstack shapes") {
    QMat a = mat(2, 1, {1, 2});
    QMat b = mat(2, 2, {3, 4, 5, 6});
    QMat h = hstack(a, b);
    CHECK(h.rows == 2);
    CHECK(h.cols == 3);
    CHECK(h.at(1, 2) == 6);
    QMat v = vstack(b, b);
    CHECK(v.rows == 4);
    CHECK(v.at(3, 1) == 6);
}

TEST_CASE("in_col_span") {
    QMat m = mat(3, 2, {1, 0, 0, 1, 0, 0});
    CHECK(in_col_span(m, QVec{Rat(2), Rat(-1), Rat(0)}));
    CHECK(!in_col_span(m, QVec{Rat(0), Rat(0), Rat(1)}));
}
