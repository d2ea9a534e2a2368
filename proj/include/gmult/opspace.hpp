#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "gmult/errors.hpp"

namespace gmult {

using Cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

// Relative singular-value cutoff used for every rank decision
// (kernel/range splits, invertibility verdicts, frame classification).
inline constexpr double kRankTol = 1e-10;

// Index bookkeeping for the stacked space C^K realizing l2(⊕_i K_i):
// block sizes k_1..k_m, prefix-sum offsets, K = Σ k_i.
class SpaceLayout {
public:
    explicit SpaceLayout(std::vector<int> block_sizes);

    int block_count() const { return static_cast<int>(sizes_.size()); }
    int block_size(int i) const { check_index(i); return sizes_[i]; }
    int offset(int i) const { check_index(i); return offsets_[i]; }
    int total() const { return offsets_.back(); }
    const std::vector<int>& block_sizes() const { return sizes_; }

    bool operator==(const SpaceLayout& other) const { return sizes_ == other.sizes_; }
    bool operator!=(const SpaceLayout& other) const { return !(*this == other); }

private:
    void check_index(int i) const;

    std::vector<int> sizes_;
    std::vector<int> offsets_;  // size m+1, offsets_[m] == K
};

// A = u * sigma.asDiagonal() * v.adjoint(), sigma descending,
// u: rows×p, v: cols×p with p = min(rows, cols).
// v_full additionally carries the complete cols×cols right basis so the
// trailing columns span ker(A).
struct SvdResult {
    CMatrix u;
    RVector sigma;
    CMatrix v;
    CMatrix v_full;
};

// A V = V diag(values), values ascending, V unitary.
struct HermEigResult {
    RVector values;
    CMatrix vectors;
};

SvdResult svd(const CMatrix& a);
HermEigResult herm_eig(const CMatrix& a);

// Moore-Penrose pseudoinverse; singular values below rank_tol·σ₁ are
// treated as zero.
CMatrix pinv(const CMatrix& a, double rank_tol = kRankTol);

// Orthogonal projector onto ker(A) (cols×cols).
CMatrix proj_kernel(const CMatrix& a, double rank_tol = kRankTol);

int matrix_rank(const CMatrix& a, double rank_tol = kRankTol);

// Spectral norm σ_max; op_norm of an empty or zero matrix is 0.
double op_norm(const CMatrix& a);

// σ_max / σ_min over the min(rows, cols) singular values; +inf when
// σ_min falls below rank_tol·σ_max.
double cond_number(const CMatrix& a, double rank_tol = kRankTol);

// Inverse of a Hermitian positive definite matrix via its spectral
// decomposition. Throws SingularError when an eigenvalue falls below
// rank_tol times the largest.
CMatrix herm_inverse(const CMatrix& a, double rank_tol = kRankTol);

// ι_i / π_i on stacked vectors (length K) and stacked matrices (K rows).
// Blocks are indexed 0..m-1.
CVector embed_block(const SpaceLayout& layout, int i, const CVector& x);
CVector extract_block(const SpaceLayout& layout, int i, const CVector& x);
CMatrix embed_block_rows(const SpaceLayout& layout, int i, const CMatrix& x);
CMatrix extract_block_rows(const SpaceLayout& layout, int i, const CMatrix& x);

}  // namespace gmult
