#include "stg/exact.hpp"

#include <stdexcept>
#include <utility>

#include "stg/errors.hpp"

namespace stg {

BigInt binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n)
        return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

// Bareiss fraction-free elimination: every division below is exact, so the
// whole computation stays in integers.
BigInt determinant(std::vector<std::vector<BigInt>> m) {
    const size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n)
            throw std::invalid_argument("determinant needs a square matrix");
    if (n == 0)
        return 1;

    int sign = 1;
    BigInt prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0)
                ++swap_row;
            if (swap_row == n)
                return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                BigInt num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

BigInt determinant(const DistanceMatrix& d) {
    const int n = d.order();
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[i][j] = d.at(i + 1, j + 1);
    return determinant(std::move(m));
}

BigInt tree_det_formula(int n) {
    if (n < 2)
        throw std::invalid_argument("tree determinant formula needs n >= 2");
    BigInt r = (n - 1) * (BigInt(1) << (n - 2));
    return (n % 2 == 0) ? -r : r;
}

BigRat unicyclic_odd_det_formula(int k, int m) {
    if (k < 1 || m < 0)
        throw std::invalid_argument("unicyclic determinant formula needs k >= 1, m >= 0");
    BigRat half_term(BigInt(2 * k + 1) * m, 2);
    half_term.canonicalize(); // two-argument mpq ctor does not reduce
    const BigRat inner = BigRat(BigInt(k) * (k + 1)) + half_term;
    BigRat scale = 1;
    for (int i = 0; i < m; ++i)
        scale *= -2;
    return scale * inner;
}

RatMatrix to_rational(const DistanceMatrix& d) {
    const int n = d.order();
    RatMatrix m(n, std::vector<BigRat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[i][j] = d.at(i + 1, j + 1);
    return m;
}

RatMatrix invert_exact(const RatMatrix& m) {
    const size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n)
            throw std::invalid_argument("invert_exact needs a square matrix");

    // Gauss-Jordan on [m | I].
    RatMatrix work(n, std::vector<BigRat>(2 * n, 0));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j)
            work[i][j] = m[i][j];
        work[i][n + i] = 1;
    }
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && work[pivot][col] == 0)
            ++pivot;
        if (pivot == n)
            throw SingularMatrixError("matrix is singular");
        std::swap(work[col], work[pivot]);
        const BigRat lead = work[col][col];
        for (size_t j = 0; j < 2 * n; ++j)
            work[col][j] /= lead;
        for (size_t i = 0; i < n; ++i) {
            if (i == col || work[i][col] == 0)
                continue;
            const BigRat factor = work[i][col];
            for (size_t j = 0; j < 2 * n; ++j)
                work[i][j] -= factor * work[col][j];
        }
    }
    RatMatrix inv(n, std::vector<BigRat>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            inv[i][j] = work[i][n + j];
    return inv;
}

} // namespace stg
