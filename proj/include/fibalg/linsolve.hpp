#pragma once

#include <utility>
#include <vector>

#include <Eigen/Core>

#include "fibalg/golden.hpp"

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
    typedef mpq_class Real;
    typedef mpq_class NonInteger;
    typedef mpq_class Nested;
    typedef mpq_class Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 10,
        AddCost = 100,
        MulCost = 100
    };
    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<fibalg::GoldenRational> : GenericNumTraits<fibalg::GoldenRational> {
    typedef fibalg::GoldenRational Real;
    typedef fibalg::GoldenRational NonInteger;
    typedef fibalg::GoldenRational Nested;
    typedef fibalg::GoldenRational Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 10,
        AddCost = 200,
        MulCost = 200
    };
    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace fibalg {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
struct ExactSolution {
    bool solvable = false;
    Eigen::Index rank = 0;
    /// One solution (free variables set to zero); empty when unsolvable.
    DenseVector<Scalar> x;
};

namespace detail {

inline bool is_zero(const mpq_class& v) { return sgn(v) == 0; }
inline bool is_zero(const GoldenRational& v) { return v.is_zero(); }

}  // namespace detail

/**
 * Solves a·x = b by Gauss-Jordan elimination over an exact field.
 *
 * Works for any scalar with exact +, −, ×, ÷ and a zero test.  No pivoting
 * strategy beyond "first nonzero" is needed since there is no rounding.
 */
template <typename Scalar>
ExactSolution<Scalar> solve_exact(DenseMatrix<Scalar> a, DenseVector<Scalar> b)
{
    using Eigen::Index;
    const Index rows = a.rows();
    const Index cols = a.cols();
    std::vector<Index> pivot_cols;

    Index r = 0;
    for (Index c = 0; c < cols && r < rows; ++c) {
        Index pivot = r;
        while (pivot < rows && detail::is_zero(a(pivot, c)))
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != r) {
            a.row(pivot).swap(a.row(r));
            std::swap(b(pivot), b(r));
        }
        const Scalar inv = Scalar(1) / a(r, c);
        for (Index j = c; j < cols; ++j)
            a(r, j) = a(r, j) * inv;
        b(r) = b(r) * inv;
        for (Index i = 0; i < rows; ++i) {
            if (i == r || detail::is_zero(a(i, c)))
                continue;
            const Scalar factor = a(i, c);
            for (Index j = c; j < cols; ++j)
                a(i, j) = a(i, j) - factor * a(r, j);
            b(i) = b(i) - factor * b(r);
        }
        pivot_cols.push_back(c);
        ++r;
    }

    ExactSolution<Scalar> out;
    out.rank = r;
    for (Index i = r; i < rows; ++i)
        if (!detail::is_zero(b(i)))
            return out;

    out.solvable = true;
    out.x = DenseVector<Scalar>::Zero(cols);
    for (Index i = 0; i < r; ++i)
        out.x(pivot_cols[static_cast<std::size_t>(i)]) = b(i);
    return out;
}

/**
 * Realizes a Q(√5)-matrix as a Q-matrix twice the size.  Entry a + bτ acting
 * on an unknown u + vτ becomes the block [[a, b], [b, a+b]] acting on (u, v).
 */
DenseMatrix<Rational> split_over_q(const DenseMatrix<GoldenRational>& a);
DenseVector<Rational> split_over_q(const DenseVector<GoldenRational>& b);

/// Solves over Q(√5) by splitting into an ordinary rational system.
ExactSolution<GoldenRational> solve_golden(const DenseMatrix<GoldenRational>& a,
                                           const DenseVector<GoldenRational>& b);

}  // namespace fibalg
