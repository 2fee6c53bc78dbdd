#include <random>

#include "doctest.h"
#include "generators.hpp"
#include "rls/analysis.hpp"
#include "rls/appendix.hpp"
#include "rls/errors.hpp"
#include "rls/linalg.hpp"
#include "stages.hpp"

using namespace rls;
using namespace rls::testing;

namespace {

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an rls::Error");
    return ErrorCode::InvariantViolation;
}

Matrix product_of(const MonodromyTuple& t) {
    Matrix p = t[0];
    for (size_t k = 1; k < t.slot_count(); ++k) p = p * t[k];
    return p;
}

bool isomorphic(const MonodromyTuple& t, const MonodromyTuple& u) {
    return t.rank() == u.rank() && find_intertwiner(t, u).has_value();
}

}  // namespace

TEST_CASE("rank1_from_ramification") {
    const auto g1 = char_g1();
    CHECK(g1.rank() == 1);
    CHECK(g1[0](0, 0) == zeta3());
    CHECK(g1[1](0, 0).is_one());
    CHECK(char_g3()[3](0, 0) == zeta3(2));
    CHECK_NOTHROW((void)rank1_from_ramification(four_labels(), {zeta3(), zeta3(), zeta3(), 1}));
    CHECK(code_of([] { (void)rank1_from_ramification(four_labels(), {zeta3(), zeta3(), 1, 1}); }) ==
          ErrorCode::ProductNotOne);
    CHECK(code_of([] { (void)rank1_from_ramification(four_labels(), {zeta3(), 1, 1, 1}); }) ==
          ErrorCode::ProductNotOne);
    CHECK(code_of([] { (void)rank1_from_ramification({"a", "b"}, {1, 1, 1}); }) == ErrorCode::LabelMismatch);
}

TEST_CASE("tuple construction checks the product relation") {
    const Matrix a{{1, 1}, {0, 1}};
    CHECK(code_of([&] { (void)MonodromyTuple({"a", "b"}, {a, a}); }) == ErrorCode::ProductNotOne);
    CHECK_NOTHROW((void)MonodromyTuple({"a", "b"}, {a, inverse(a)}));
    CHECK(code_of([&] { (void)MonodromyTuple({"a"}, {a, inverse(a)}); }) == ErrorCode::LabelMismatch);
    CHECK(code_of([&] { (void)MonodromyTuple({"a", "b"}, {a, Matrix::identity(3)}); }) == ErrorCode::ShapeMismatch);
}

TEST_CASE("tensor") {
    const auto trivial = MonodromyTuple::trivial(four_labels(), 1, 3);
    CHECK(tensor(char_g3(), dual(char_g3())) == trivial);
    const auto t4 = stage_rank4();
    CHECK(t4.rank() == 4);
    CHECK(tensor(t4, trivial) == t4);
    const auto other = MonodromyTuple::trivial({"a", "b", "c", "d"}, 1);
    CHECK(code_of([&] { (void)tensor(t4, other); }) == ErrorCode::LabelMismatch);

    // eigenvalues of a Kronecker product are the pairwise products
    const auto a = middle_convolution(char_g1(), zeta3(-1));
    const auto b = middle_convolution(char_g2(), zeta3(-1));
    const Polynomial pa = char_poly(a[3]);
    const Polynomial pb = char_poly(b[3]);
    Polynomial expected(std::vector<Cyclotomic>{1});
    for (long i = 0; i < 3; ++i) {
        for (long j = 0; j < 3; ++j) {
            const int m = pa.root_multiplicity(zeta3(i)) * pb.root_multiplicity(zeta3(j));
            for (int r = 0; r < m; ++r) expected = expected * Polynomial::linear(zeta3(i + j));
        }
    }
    CHECK(char_poly(t4[3]) == expected);
}

TEST_CASE("dual") {
    const auto d = dual(char_g3());
    CHECK(d[2](0, 0) == zeta3(-1));
    CHECK(d[3](0, 0) == zeta3());
    const auto h = appendix_tuple();
    CHECK(dual(dual(h)) == h);
    const auto trivial = MonodromyTuple::trivial(four_labels(), 3, 3);
    CHECK(dual(trivial) == trivial);
    CHECK(product_of(dual(h)).is_identity());
}

TEST_CASE("scale_twist") {
    std::mt19937 rng(11);
    const auto t = random_irreducible_tuple(rng, 3, 3);
    CHECK(scale_twist(t, MonodromyTuple::trivial(four_labels(), 1, 3)) == t);
    CHECK(scale_twist(scale_twist(t, char_g3()), dual(char_g3())) == t);
    CHECK(scale_twist(t, char_g3()) == tensor(t, char_g3()));
    CHECK(code_of([&] { (void)scale_twist(t, t); }) == ErrorCode::NotRankOne);

    // the intermediate before the last convolution: x3 eigenvalues move by zeta3
    const auto before = middle_convolution(stage_rank4(), zeta3(-1));
    const auto after = scale_twist(before, char_g3());
    const auto jb = jordan_data(before[2]);
    const auto ja = jordan_data(after[2]);
    for (long e = 0; e < 3; ++e) CHECK(ja.blocks_at(zeta3(e + 1)) == jb.blocks_at(zeta3(e)));
    CHECK(jordan_data(after[0]) == jordan_data(before[0]));
}

TEST_CASE("direct_sum and conjugate") {
    const auto g1 = char_g1();
    const auto s = direct_sum(g1, char_g2());
    CHECK(s.rank() == 2);
    CHECK(s[2] == Matrix::diagonal({zeta3(), zeta3()}).lifted(3));
    std::mt19937 rng(5);
    const auto t = random_irreducible_tuple(rng, 2, 3);
    const Matrix p = random_unimodular(rng, 2, 3);
    const auto c = conjugate(t, p);
    for (size_t k = 0; k < 4; ++k) CHECK(c[k] * p == p * t[k]);
}

TEST_CASE("middle_convolution of g1") {
    const auto ws = convolution_workspace(char_g1(), zeta3(-1));
    CHECK(ws.ambient_dimension() == 3);
    CHECK(ws.kernel_part.size() == 1);
    CHECK(ws.fixed_part.empty());
    CHECK(ws.quotient_dimension() == 2);
    const auto a = middle_convolution(char_g1(), zeta3(-1));
    CHECK(a.rank() == 2);
    CHECK(a.warnings().empty());
    for (const auto& m : a.matrices()) CHECK(determinant(m).is_one());  // SL2
    CHECK(product_of(a).is_identity());
}

TEST_CASE("middle_convolution rejects degenerate parameters") {
    CHECK(code_of([] { (void)middle_convolution(char_g1(), 1); }) == ErrorCode::BadLambda);
    CHECK(code_of([] { (void)middle_convolution(char_g1(), Cyclotomic(Rational(0), 3)); }) == ErrorCode::BadLambda);
    const auto trivial = MonodromyTuple::trivial(four_labels(), 1, 3);
    CHECK(code_of([&] { (void)middle_convolution(trivial, zeta3()); }) == ErrorCode::DegenerateQuotient);
}

TEST_CASE("middle_convolution warns outside its hypotheses") {
    // one nontrivial finite slot: still computed, but flagged
    const auto t = rank1_from_ramification(four_labels(), {zeta3(), 1, 1, zeta3(-1)});
    const auto m = middle_convolution(t, zeta3());
    CHECK_FALSE(m.warnings().empty());
}

TEST_CASE("workspace invariants on the pipeline stages") {
    for (const auto& t : {stage_rank4(), stage_rank5()}) {
        for (const auto& lam : {zeta3(), zeta3(-1)}) {
            const auto ws = convolution_workspace(t, lam);
            const size_t dim = ws.ambient_dimension();
            CHECK(ws.quotient_dimension() == dim - ws.kernel_part.size() - ws.fixed_part.size());
            // K and L are invariant: every image stays in K + L
            SpanBuilder span(dim);
            for (const auto& v : ws.kernel_part) span.add(v);
            for (const auto& v : ws.fixed_part) span.add(v);
            for (const auto& b : ws.blocks) {
                CHECK_FALSE(determinant(b).is_zero());
                for (const auto& v : ws.kernel_part) CHECK(span.contains(b.apply(v)));
                for (const auto& v : ws.fixed_part) CHECK(b.apply(v) == v);
            }
        }
    }
}

TEST_CASE("pipeline stage ranks") {
    CHECK(stage_rank4().rank() == 4);
    CHECK(middle_convolution(stage_rank4(), zeta3()).rank() == 5);
    CHECK(stage_rank5().rank() == 5);
    const auto h = stage_rank7();
    CHECK(h.rank() == 7);
    CHECK(product_of(h).is_identity());
    CHECK(isomorphic(h, appendix_tuple()));
}

TEST_CASE("the outer convolutions in the other order give rank 9") {
    // MC_z on the rank-4 stage, then MC_{z^-1}.
    const auto inner = middle_convolution(stage_rank4(), zeta3());
    const auto outer = middle_convolution(tensor(char_g3(), inner), zeta3(-1));
    CHECK(outer.rank() == 9);
}

TEST_CASE("MC invertibility on the pipeline stages") {
    for (const auto& lam : {zeta3(), zeta3(-1)}) {
        const auto t4 = stage_rank4();
        CHECK(isomorphic(middle_convolution(middle_convolution(t4, lam), lam.inverse()), t4));
        const auto t5 = stage_rank5();
        CHECK(isomorphic(middle_convolution(middle_convolution(t5, lam), lam.inverse()), t5));
    }
}

TEST_CASE("MC invertibility on random irreducible tuples") {
    std::mt19937 rng(2024);
    int checked = 0;
    for (int i = 0; i < 20; ++i) {
        const size_t n = 1 + static_cast<size_t>(i % 3);
        const auto t = random_irreducible_tuple(rng, n, 3);
        const Cyclotomic lam = zeta3(1 + i % 2);
        MonodromyTuple m = t;
        try {
            m = middle_convolution(t, lam);
        } catch (const Error& e) {
            REQUIRE(e.code() == ErrorCode::DegenerateQuotient);
            continue;
        }
        const auto back = middle_convolution(m, lam.inverse());
        CHECK(isomorphic(back, t));
        ++checked;
    }
    CHECK(checked >= 15);
}

TEST_CASE("MC commutes with simultaneous conjugation") {
    std::mt19937 rng(77);
    for (int i = 0; i < 10; ++i) {
        const auto t = random_irreducible_tuple(rng, 2, 3);
        const Matrix p = random_unimodular(rng, 2, 3);
        const Cyclotomic lam = zeta3(1 + i % 2);
        try {
            const auto a = middle_convolution(t, lam);
            const auto b = middle_convolution(conjugate(t, p), lam);
            CHECK(isomorphic(a, b));
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::DegenerateQuotient);
        }
    }
}

TEST_CASE("MC of rank-one tuples has root-of-unity determinants") {
    std::mt19937 rng(3);
    for (int conductor : {3, 4, 6}) {
        std::uniform_int_distribution<long> expo(0, conductor - 1);
        int done = 0;
        while (done < 10) {
            const long a = expo(rng), b = expo(rng), c = expo(rng);
            const auto t = rank1_from_ramification(
                four_labels(), {Cyclotomic::zeta(conductor, a), Cyclotomic::zeta(conductor, b),
                                Cyclotomic::zeta(conductor, c), Cyclotomic::zeta(conductor, -(a + b + c))});
            if (nontrivial_finite_slots(t) < 2) continue;
            const long l = 1 + expo(rng) % (conductor - 1);
            MonodromyTuple m = t;
            try {
                m = middle_convolution(t, Cyclotomic::zeta(conductor, l));
            } catch (const Error& e) {
                CHECK(e.code() == ErrorCode::DegenerateQuotient);
                continue;
            }
            for (const auto& g : m.matrices()) {
                const Cyclotomic d = determinant(g);
                bool root = false;
                for (long k = 1; k <= conductor && !root; ++k) root = d.pow(k).is_one();
                CHECK(root);
            }
            ++done;
        }
    }
}

TEST_CASE("rank laws") {
    std::mt19937 rng(8);
    for (int i = 0; i < 10; ++i) {
        const auto t = random_irreducible_tuple(rng, 1 + static_cast<size_t>(i % 3), 3);
        const auto u = random_irreducible_tuple(rng, 1 + static_cast<size_t>((i + 1) % 2), 3);
        CHECK(tensor(t, u).rank() == t.rank() * u.rank());
        CHECK(direct_sum(t, u).rank() == t.rank() + u.rank());
        CHECK(dual(t).rank() == t.rank());
        CHECK(product_of(tensor(t, u)).is_identity());
        CHECK(product_of(dual(t)).is_identity());
    }
}

TEST_CASE("tuple document round trip") {
    const auto h = appendix_tuple();
    CHECK(parse_tuple(format_tuple(h)) == h);
    std::mt19937 rng(4);
    for (int i = 0; i < 10; ++i) {
        const auto t = random_irreducible_tuple(rng, 2, 3);
        CHECK(parse_tuple(format_tuple(t)) == t);
    }
    const std::string doc =
        "# a comment\n"
        "conductor 3\nrank 1\nslots 4\nlabels x1 x2 x3 inf\n\n"
        "z\n\n1\n\nz\n\nz\n";
    CHECK(parse_tuple(doc) == char_g1());
}

TEST_CASE("tuple document errors carry positions") {
    const std::string bad =
        "conductor 3\nrank 1\nslots 4\nlabels x1 x2 x3 inf\n\n"
        "z\n\n1\n\nz +\n\nz\n";
    try {
        (void)parse_tuple(bad);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 10);
    }
    const std::string not_one =
        "conductor 3\nrank 1\nslots 4\nlabels x1 x2 x3 inf\n\n"
        "z\n\n1\n\nz\n\n1\n";
    CHECK(code_of([&] { (void)parse_tuple(not_one); }) == ErrorCode::ProductNotOne);
}
