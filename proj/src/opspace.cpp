#include "gmult/opspace.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace gmult {

namespace {

void require_finite(const CMatrix& a, const char* where) {
    if (!a.allFinite()) {
        throw InputError(std::string(where) + ": matrix has non-finite entries");
    }
}

}  // namespace

SpaceLayout::SpaceLayout(std::vector<int> block_sizes) : sizes_(std::move(block_sizes)) {
    if (sizes_.empty()) {
        throw InputError("SpaceLayout: at least one block required");
    }
    offsets_.resize(sizes_.size() + 1);
    offsets_[0] = 0;
    for (size_t i = 0; i < sizes_.size(); ++i) {
        if (sizes_[i] <= 0) {
            throw InputError("SpaceLayout: block sizes must be positive");
        }
        offsets_[i + 1] = offsets_[i] + sizes_[i];
    }
}

void SpaceLayout::check_index(int i) const {
    if (i < 0 || i >= block_count()) {
        throw InputError("SpaceLayout: block index " + std::to_string(i) + " out of range [0, " +
                         std::to_string(block_count()) + ")");
    }
}

SvdResult svd(const CMatrix& a) {
    require_finite(a, "svd");
    Eigen::JacobiSVD<CMatrix> solver(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto p = std::min(a.rows(), a.cols());
    SvdResult out;
    out.u = solver.matrixU().leftCols(p);
    out.sigma = solver.singularValues();
    out.v = solver.matrixV().leftCols(p);
    out.v_full = solver.matrixV();
    return out;
}

HermEigResult herm_eig(const CMatrix& a) {
    require_finite(a, "herm_eig");
    if (a.rows() != a.cols()) {
        throw ShapeError("herm_eig: matrix must be square");
    }
    const double scale = a.norm();
    const double asym = (a - a.adjoint()).norm();
    if (asym > 1e-10 * std::max(scale, 1e-300)) {
        throw InputError("herm_eig: matrix is not Hermitian within tolerance");
    }
    const CMatrix sym = 0.5 * (a + a.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym);
    if (solver.info() != Eigen::Success) {
        throw Error("herm_eig: eigensolver failed to converge");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

CMatrix pinv(const CMatrix& a, double rank_tol) {
    if (!(rank_tol > 0.0 && rank_tol < 1.0)) {
        throw InputError("pinv: rank_tol must lie in (0, 1)");
    }
    const SvdResult dec = svd(a);
    const double cutoff = dec.sigma.size() > 0 ? rank_tol * dec.sigma(0) : 0.0;
    CMatrix out = CMatrix::Zero(a.cols(), a.rows());
    for (Eigen::Index i = 0; i < dec.sigma.size(); ++i) {
        if (dec.sigma(i) > cutoff && dec.sigma(i) > 0.0) {
            out += dec.v.col(i) * (1.0 / dec.sigma(i)) * dec.u.col(i).adjoint();
        }
    }
    return out;
}

CMatrix proj_kernel(const CMatrix& a, double rank_tol) {
    if (!(rank_tol > 0.0 && rank_tol < 1.0)) {
        throw InputError("proj_kernel: rank_tol must lie in (0, 1)");
    }
    const SvdResult dec = svd(a);
    const double cutoff = dec.sigma.size() > 0 ? rank_tol * dec.sigma(0) : 0.0;
    Eigen::Index rank = 0;
    for (Eigen::Index i = 0; i < dec.sigma.size(); ++i) {
        if (dec.sigma(i) > cutoff && dec.sigma(i) > 0.0) ++rank;
    }
    const Eigen::Index cols = a.cols();
    if (rank >= cols) {
        return CMatrix::Zero(cols, cols);
    }
    const CMatrix kernel = dec.v_full.rightCols(cols - rank);
    return kernel * kernel.adjoint();
}

int matrix_rank(const CMatrix& a, double rank_tol) {
    const SvdResult dec = svd(a);
    const double cutoff = dec.sigma.size() > 0 ? rank_tol * dec.sigma(0) : 0.0;
    int rank = 0;
    for (Eigen::Index i = 0; i < dec.sigma.size(); ++i) {
        if (dec.sigma(i) > cutoff && dec.sigma(i) > 0.0) ++rank;
    }
    return rank;
}

double op_norm(const CMatrix& a) {
    require_finite(a, "op_norm");
    if (a.size() == 0) return 0.0;
    Eigen::JacobiSVD<CMatrix> solver(a);
    return solver.singularValues()(0);
}

double cond_number(const CMatrix& a, double rank_tol) {
    const SvdResult dec = svd(a);
    if (dec.sigma.size() == 0) return std::numeric_limits<double>::infinity();
    const double smax = dec.sigma(0);
    const double smin = dec.sigma(dec.sigma.size() - 1);
    if (smin <= rank_tol * smax || smax == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return smax / smin;
}

CMatrix herm_inverse(const CMatrix& a, double rank_tol) {
    const HermEigResult dec = herm_eig(a);
    const double top = dec.values.cwiseAbs().maxCoeff();
    CMatrix out = CMatrix::Zero(a.rows(), a.cols());
    for (Eigen::Index i = 0; i < dec.values.size(); ++i) {
        if (dec.values(i) <= rank_tol * top) {
            throw SingularError("herm_inverse: matrix is singular or indefinite");
        }
        out += dec.vectors.col(i) * (1.0 / dec.values(i)) * dec.vectors.col(i).adjoint();
    }
    return out;
}

CVector embed_block(const SpaceLayout& layout, int i, const CVector& x) {
    if (x.size() != layout.block_size(i)) {
        throw ShapeError("embed_block: vector length does not match block size");
    }
    CVector out = CVector::Zero(layout.total());
    out.segment(layout.offset(i), layout.block_size(i)) = x;
    return out;
}

CVector extract_block(const SpaceLayout& layout, int i, const CVector& x) {
    if (x.size() != layout.total()) {
        throw ShapeError("extract_block: vector length does not match layout total");
    }
    return x.segment(layout.offset(i), layout.block_size(i));
}

CMatrix embed_block_rows(const SpaceLayout& layout, int i, const CMatrix& x) {
    if (x.rows() != layout.block_size(i)) {
        throw ShapeError("embed_block_rows: row count does not match block size");
    }
    CMatrix out = CMatrix::Zero(layout.total(), x.cols());
    out.middleRows(layout.offset(i), layout.block_size(i)) = x;
    return out;
}

CMatrix extract_block_rows(const SpaceLayout& layout, int i, const CMatrix& x) {
    if (x.rows() != layout.total()) {
        throw ShapeError("extract_block_rows: row count does not match layout total");
    }
    return x.middleRows(layout.offset(i), layout.block_size(i));
}

}  // namespace gmult
