#ifndef MONRES_MATRIX_HPP
#define MONRES_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "monres/errors.hpp"
#include "monres/field.hpp"

namespace monres {

/// Dense row-major matrix of exact scalars. Strand matrices are small, so
/// dense storage keeps the elimination code simple.
template <class T>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, T fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& at(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

/// Rank by plain Gaussian elimination over the field; pivot is the first
/// nonzero entry in column order, which keeps runs reproducible.
template <class F>
std::size_t rank_by_elimination(const F& field,
                                Matrix<typename F::Scalar> m) {
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t pivot = r;
        while (pivot < m.rows() && field.is_zero(m.at(pivot, col))) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != r)
            for (std::size_t j = col; j < m.cols(); ++j)
                std::swap(m.at(pivot, j), m.at(r, j));
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (field.is_zero(m.at(i, col))) continue;
            auto factor = field.div(m.at(i, col), m.at(r, col));
            m.at(i, col) = field.zero();
            for (std::size_t j = col + 1; j < m.cols(); ++j)
                m.at(i, j) = field.sub(m.at(i, j),
                                       field.mul(factor, m.at(r, j)));
        }
        ++r;
    }
    return r;
}

/// Fraction-free (Bareiss) rank over the integers; every division is exact,
/// so intermediate entries stay single determinants instead of products.
inline std::size_t rank_bareiss(Matrix<BigInt> m) {
    std::size_t r = 0;
    BigInt prev = 1;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t pivot = r;
        while (pivot < m.rows() && m.at(pivot, col) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != r)
            for (std::size_t j = col; j < m.cols(); ++j)
                std::swap(m.at(pivot, j), m.at(r, j));
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            for (std::size_t j = col + 1; j < m.cols(); ++j)
                m.at(i, j) = (m.at(r, col) * m.at(i, j) -
                              m.at(i, col) * m.at(r, j)) /
                             prev;
            m.at(i, col) = 0;
        }
        prev = m.at(r, col);
        ++r;
    }
    return r;
}

/// Rational rank: clear denominators row by row, then run Bareiss.
inline std::size_t rank_rational(const Matrix<Rational>& m) {
    Matrix<BigInt> z(m.rows(), m.cols(), BigInt(0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        BigInt den = 1;
        for (std::size_t j = 0; j < m.cols(); ++j)
            den = boost::multiprecision::lcm(
                den, BigInt(boost::multiprecision::denominator(m.at(i, j))));
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& q = m.at(i, j);
            z.at(i, j) = BigInt(boost::multiprecision::numerator(q)) *
                         (den / BigInt(boost::multiprecision::denominator(q)));
        }
    }
    return rank_bareiss(std::move(z));
}

/// Exact rank over the given field.
template <class F>
std::size_t rank(const F& field, const Matrix<typename F::Scalar>& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    if constexpr (F::is_rational) {
        (void)field;
        return rank_rational(m);
    } else {
        return rank_by_elimination(field, m);
    }
}

}  // namespace monres

#endif  // MONRES_MATRIX_HPP
