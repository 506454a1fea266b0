#include "doctest.h"

#include <random>

#include "anticode/matrix.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace anticode;

TEST_CASE("construction validates shape and entries") {
    const Field f = gf::make_field(3, 1);
    CHECK_THROWS_AS(Matrix(f, 2, 2, {0, 1, 2}), InputError);
    CHECK_THROWS_AS(Matrix(f, 1, 2, {0, 3}), InputError);
    CHECK_THROWS_AS(Matrix::from_rows(f, {{1, 2}, {1}}), InputError);
    const Matrix m = Matrix::from_rows(f, {{1, 2, 0}, {0, 1, 1}});
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 3);
    CHECK(m(1, 2) == 1);
    CHECK(m.column(1) == std::vector<Elem>{2, 1});
    CHECK(m.transpose()(2, 1) == 1);
    const std::vector<std::size_t> keep{2, 0};
    CHECK(m.select_columns(keep) == Matrix::from_rows(f, {{0, 1}, {1, 0}}));
}

TEST_CASE("rref of a GF(2) matrix") {
    const Field f = gf::make_field(2, 1);
    const Matrix m = Matrix::from_rows(f, {{0, 1, 1, 0}, {1, 1, 0, 1}, {1, 0, 1, 1}});
    const RrefResult r = rref(m);
    CHECK(r.pivots == std::vector<std::size_t>{0, 1});
    CHECK(r.reduced == Matrix::from_rows(f, {{1, 0, 1, 1}, {0, 1, 1, 0}, {0, 0, 0, 0}}));
    CHECK(rank(m) == 2);
}

TEST_CASE("rank matches the codeword-count oracle") {
    std::mt19937_64 rng(7);
    for (std::uint64_t q : {2, 3, 4, 5, 8, 9}) {
        const Field f = gf::make_field_of_order(q);
        const auto o = support::oracle_of(f);
        for (int trial = 0; trial < 40; ++trial) {
            const std::uint64_t k = 1 + rng() % 4, n = 1 + rng() % 6;
            oracle::Gen g(k, oracle::Row(n));
            for (auto& row : g)
                for (auto& v : row) v = rng() % (trial % 3 == 0 ? 2 : q);
            const Matrix m = support::matrix_of(f, g);
            CHECK(rank(m) == oracle::rank(o, g));
            CHECK(rank(m.transpose()) == rank(m));
        }
    }
}

TEST_CASE("null space is orthogonal and of complementary dimension") {
    std::mt19937_64 rng(11);
    for (std::uint64_t q : {2, 3, 4, 7}) {
        const Field f = gf::make_field_of_order(q);
        for (int trial = 0; trial < 30; ++trial) {
            const std::size_t k = 1 + rng() % 4, n = k + rng() % 4;
            std::vector<Elem> e(k * n);
            for (auto& v : e) v = rng() % q;
            const Matrix m(f, k, n, e);
            const Matrix ns = null_space(m);
            CHECK(ns.cols() == n);
            CHECK(ns.rows() == n - rank(m));
            if (ns.rows() > 0) {
                CHECK(rank(ns) == ns.rows());
                const Matrix prod = multiply(m, ns.transpose());
                for (Elem v : prod.entries()) CHECK(v == 0);
            }
        }
    }
}

TEST_CASE("row space comparison ignores basis choice") {
    const Field f = gf::make_field(2, 2);
    const Matrix a = Matrix::from_rows(f, {{1, 0, 2}, {0, 1, 3}});
    // rows: 2*row0 + row1, row1
    const Matrix b = Matrix::from_rows(f, {{2, 1, 0}, {0, 1, 3}});
    CHECK(same_row_space(a, b));
    CHECK(row_space_basis(a) == row_space_basis(b));
    CHECK_FALSE(same_row_space(a, Matrix::from_rows(f, {{1, 0, 0}, {0, 1, 0}})));
}

TEST_CASE("vector products") {
    const Field f = gf::make_field(5, 1);
    const Matrix m = Matrix::from_rows(f, {{1, 2, 3}, {4, 0, 1}});
    const std::vector<Elem> x{2, 3};
    CHECK(vec_mat(x, m) == std::vector<Elem>{(2 + 12) % 5, 4, (6 + 3) % 5});
    const std::vector<Elem> v{1, 1, 1};
    CHECK(mat_vec(m, v) == std::vector<Elem>{1, 0});
    const std::vector<Elem> a{1, 2}, g{3, 4};
    CHECK(functional_apply(f, a, g) == 1);
    CHECK(multiply(Matrix::identity(f, 2), m) == m);
    CHECK_THROWS_AS(multiply(m, m), InputError);
}
