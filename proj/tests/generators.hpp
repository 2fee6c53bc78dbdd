#pragma once

// Hand-rolled random generators for the property suites. All draws come from
// a caller-owned std::mt19937 so every suite is reproducible from its seed.

#include <random>
#include <vector>

#include "rls/linalg.hpp"
#include "rls/matrix.hpp"
#include "rls/tuple.hpp"

namespace rls::testing {

inline Rational random_rational(std::mt19937& rng, int span = 5, int max_den = 3) {
    std::uniform_int_distribution<int> num(-span, span);
    std::uniform_int_distribution<int> den(1, max_den);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

inline Cyclotomic random_cyclotomic(std::mt19937& rng, int conductor, int span = 5, int max_den = 3) {
    const int d = euler_phi(conductor);
    std::vector<Rational> c(static_cast<size_t>(d));
    for (auto& x : c) x = random_rational(rng, span, max_den);
    return {conductor, std::move(c)};
}

inline Cyclotomic random_nonzero(std::mt19937& rng, int conductor) {
    while (true) {
        auto x = random_cyclotomic(rng, conductor);
        if (!x.is_zero()) return x;
    }
}

inline Matrix random_matrix(std::mt19937& rng, size_t rows, size_t cols, int conductor, int span = 3) {
    std::vector<Cyclotomic> e;
    for (size_t i = 0; i < rows * cols; ++i) e.push_back(random_cyclotomic(rng, conductor, span, 1));
    return {rows, cols, std::move(e)};
}

/// Product of random elementary matrices and a diagonal of roots of unity:
/// invertible by construction, integral with integral inverse.
inline Matrix random_unimodular(std::mt19937& rng, size_t n, int conductor, int steps = 0) {
    if (steps == 0) steps = static_cast<int>(2 * n);
    std::uniform_int_distribution<size_t> idx(0, n - 1);
    std::uniform_int_distribution<int> small(-2, 2);
    std::uniform_int_distribution<int> expo(0, conductor - 1);
    Vector diag;
    for (size_t i = 0; i < n; ++i) diag.push_back(Cyclotomic::zeta(conductor, expo(rng)));
    Matrix m = Matrix::diagonal(diag).lifted(conductor);
    for (int s = 0; s < steps; ++s) {
        const size_t i = idx(rng);
        const size_t j = idx(rng);
        if (i == j) continue;
        Matrix e = Matrix::identity(n, conductor);
        e.set(i, j, Cyclotomic(Rational(small(rng)), conductor) + Cyclotomic::zeta(conductor, expo(rng)) *
                                                                     Cyclotomic(Rational(small(rng) % 2)));
        m = e * m;
    }
    return m;
}

/// Random matrix of prescribed rank (< n) built as a product of thin factors.
inline Matrix random_of_rank(std::mt19937& rng, size_t n, size_t r, int conductor) {
    return random_matrix(rng, n, r, conductor, 2) * random_matrix(rng, r, n, conductor, 2);
}

/// A Jordan matrix with root-of-unity eigenvalues conjugated by a random
/// unimodular matrix, together with the blocks it was built from.
struct PlantedJordan {
    Matrix matrix;
    std::vector<std::pair<long, size_t>> blocks;  // (exponent of zeta_conductor, length)
};

inline PlantedJordan random_planted_jordan(std::mt19937& rng, size_t n, int conductor, size_t max_block = 3) {
    std::uniform_int_distribution<long> expo(0, conductor - 1);
    PlantedJordan out;
    Matrix j = Matrix::identity(n, conductor);
    size_t at = 0;
    while (at < n) {
        std::uniform_int_distribution<size_t> len(1, std::min(max_block, n - at));
        const size_t l = len(rng);
        const long e = expo(rng);
        for (size_t i = 0; i < l; ++i) {
            j.set(at + i, at + i, Cyclotomic::zeta(conductor, e));
            if (i + 1 < l) j.set(at + i, at + i + 1, Cyclotomic(1));
        }
        out.blocks.emplace_back(e, l);
        at += l;
    }
    const Matrix p = random_unimodular(rng, n, conductor);
    out.matrix = p * j * inverse(p);
    return out;
}

/// Random tuple on four punctures whose finite slots are conjugates of
/// root-of-unity diagonals; retried until it is irreducible with at least two
/// nontrivial finite slots.
inline MonodromyTuple random_irreducible_tuple(std::mt19937& rng, size_t n, int conductor) {
    std::uniform_int_distribution<long> expo(0, conductor - 1);
    while (true) {
        std::vector<Matrix> ms;
        Matrix product = Matrix::identity(n, conductor);
        size_t nontrivial = 0;
        for (int k = 0; k < 3; ++k) {
            Vector d;
            for (size_t i = 0; i < n; ++i) d.push_back(Cyclotomic::zeta(conductor, expo(rng)));
            const Matrix p = random_unimodular(rng, n, conductor);
            Matrix a = p * Matrix::diagonal(d).lifted(conductor) * inverse(p);
            if (!a.is_identity()) ++nontrivial;
            product = product * a;
            ms.push_back(std::move(a));
        }
        ms.push_back(inverse(product));
        MonodromyTuple t({"x1", "x2", "x3", "inf"}, std::move(ms));
        if (nontrivial >= 2 && generated_algebra_dimension(t.matrices()) == n * n) return t;
    }
}

}  // namespace rls::testing
