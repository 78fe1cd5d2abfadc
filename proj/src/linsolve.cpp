#include "fibalg/linsolve.hpp"

namespace fibalg {

DenseMatrix<Rational> split_over_q(const DenseMatrix<GoldenRational>& a)
{
    DenseMatrix<Rational> out = DenseMatrix<Rational>::Zero(2 * a.rows(), 2 * a.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            const Rational re = a(i, j).rational_part();
            const Rational im = a(i, j).tau_part();
            out(2 * i, 2 * j) = re;
            out(2 * i, 2 * j + 1) = im;
            out(2 * i + 1, 2 * j) = im;
            out(2 * i + 1, 2 * j + 1) = re + im;
        }
    }
    return out;
}

DenseVector<Rational> split_over_q(const DenseVector<GoldenRational>& b)
{
    DenseVector<Rational> out = DenseVector<Rational>::Zero(2 * b.rows());
    for (Eigen::Index i = 0; i < b.rows(); ++i) {
        out(2 * i) = b(i).rational_part();
        out(2 * i + 1) = b(i).tau_part();
    }
    return out;
}

ExactSolution<GoldenRational> solve_golden(const DenseMatrix<GoldenRational>& a,
                                           const DenseVector<GoldenRational>& b)
{
    const auto split = solve_exact<Rational>(split_over_q(a), split_over_q(b));
    ExactSolution<GoldenRational> out;
    out.solvable = split.solvable;
    out.rank = split.rank / 2;
    if (!split.solvable)
        return out;
    out.x = DenseVector<GoldenRational>::Zero(a.cols());
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        out.x(j) = GoldenRational(split.x(2 * j)) + GoldenRational(split.x(2 * j + 1)) * GoldenRational::tau();
    return out;
}

}  // namespace fibalg
