#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gmult/opspace.hpp"

namespace gmult {

enum class FrameClass { BesselOnly, GFrame, GRieszBasis };

std::string to_string(FrameClass c);

// Optimal bounds A = λ_min(S), B = λ_max(S) and the resulting class.
struct FrameBounds {
    double lower = 0.0;
    double upper = 0.0;
    FrameClass classification = FrameClass::BesselOnly;
};

// A finite g-frame: operator blocks Λ_i (k_i × n) over a shared C^n.
class GFrame {
public:
    GFrame(int ambient_dim, SpaceLayout layout, std::vector<CMatrix> blocks);

    int ambient_dim() const { return ambient_dim_; }
    const SpaceLayout& layout() const { return layout_; }
    int block_count() const { return layout_.block_count(); }
    const CMatrix& block(int i) const { return blocks_.at(static_cast<size_t>(i)); }
    const std::vector<CMatrix>& blocks() const { return blocks_; }

private:
    int ambient_dim_;
    SpaceLayout layout_;
    std::vector<CMatrix> blocks_;
};

// Slice a stacked K×n analysis matrix into blocks.
GFrame frame_from_analysis(int ambient_dim, const SpaceLayout& layout, const CMatrix& analysis);

// T_Λ : C^K -> C^n, the horizontal stack [Λ_1* | ... | Λ_m*].
CMatrix synthesis_matrix(const GFrame& f);

// T_Λ* : C^n -> C^K, the vertical stack of the Λ_i.
CMatrix analysis_matrix(const GFrame& f);

// S_Λ = T_Λ T_Λ* = Σ Λ_i* Λ_i.
CMatrix frame_operator(const GFrame& f);

FrameBounds frame_bounds(const GFrame& f, double rank_tol = kRankTol);

bool is_gframe(const GFrame& f, double rank_tol = kRankTol);
bool is_griesz_basis(const GFrame& f, double rank_tol = kRankTol);

// Λ̃_i = Λ_i S_Λ^{-1}; requires a g-frame.
GFrame canonical_dual(const GFrame& f, double rank_tol = kRankTol);

// dim ker(T_Λ) = K - rank(T_Λ).
int excess(const GFrame& f, double rank_tol = kRankTol);

// Λ^d_i = Λ̃_i + π_i Ψ' with Ψ' the orthogonal projection of Ψ (K×n)
// onto ker(T_Λ); Ψ = 0 gives the canonical dual.
GFrame dual_frame(const GFrame& f, const CMatrix& psi, double rank_tol = kRankTol);

struct DualityCheck {
    bool dual = false;
    double residual = 0.0;
};

// True iff ‖Σ F_i* D_i − Id‖ ≤ 1e-8 · max(1, cond(S_F)).
DualityCheck is_dual_pair(const GFrame& f, const GFrame& d, double rank_tol = kRankTol);

// Deterministic per seed. The result satisfies A > 0 and B/A ≤
// condition_cap (singular values of the analysis matrix are compressed
// into the admissible range when the raw sample exceeds the cap).
GFrame random_gframe(int ambient_dim, const SpaceLayout& layout, double condition_cap,
                     std::uint64_t seed);

}  // namespace gmult
