#pragma once

#include <array>

#include "ltc/gma.hpp"
#include "ltc/report.hpp"

namespace ltc {

/// The sixteen corner maps of an operator on a GMA. map(from, to) is the
/// dim(to) x dim(from) matrix of (project to `to`) o phi o (inject from `from`).
///   alpha_k : A -> k,  beta_k : B -> k,  tau_k : M -> k,  gamma_k : N -> k
/// with k running over A, M, N, B as 1..4.
class BlockDecomposition {
public:
    BlockDecomposition() = default;

    const Matrix& map(Block from, Block to) const { return maps_[index(from, to)]; }
    Matrix& map(Block from, Block to) { return maps_[index(from, to)]; }

    const Matrix& alpha1() const { return map(Block::A, Block::A); }
    const Matrix& alpha4() const { return map(Block::A, Block::B); }
    const Matrix& beta1() const { return map(Block::B, Block::A); }
    const Matrix& beta4() const { return map(Block::B, Block::B); }
    const Matrix& tau2() const { return map(Block::M, Block::M); }
    const Matrix& gamma3() const { return map(Block::N, Block::N); }

    LinearOperator reassemble(const Gma& u) const;

private:
    static std::size_t index(Block from, Block to) { return static_cast<int>(from) * 4 + static_cast<int>(to); }
    std::array<Matrix, 16> maps_;
};

BlockDecomposition block_decompose(const Gma& u, const LinearOperator& phi);

/// The six maps that may be nonzero for a Lie triple centralizer.
struct ThmComponents {
    Matrix alpha1;  // A -> A
    Matrix beta1;   // B -> A
    Matrix tau2;    // M -> M
    Matrix gamma3;  // N -> N
    Matrix alpha4;  // A -> B
    Matrix beta4;   // B -> B
};

ThmComponents components_of(const BlockDecomposition& d);
LinearOperator build_from_blocks(const Gma& u, const ThmComponents& c);

/// Checks the block-form characterization of Lie triple centralizers on a
/// unital GMA: ten corners vanish and the six remaining maps satisfy the
/// corner identities, with condition (ii) read as
///   beta4(nm) - alpha4(mn) = n tau2(m) = gamma3(n) m.
CheckReport verify_thm31_conditions(const Gma& u, const BlockDecomposition& d);

/// Under the annihilating conditions, additionally alpha4(A) in Z(B) and beta1(B) in Z(A).
CheckReport corollary32_strengthen(const Gma& u, const BlockDecomposition& d);

/// All component tuples satisfying the corner identities, as a subspace of
/// the concatenated column-major vectors (alpha1, beta1, tau2, gamma3, alpha4, beta4).
/// Built from the corner identities alone, without the Lie triple constraint rows.
Subspace thm31_component_space(const Gma& u);
ThmComponents components_from_vector(const Gma& u, const Vector& v);
Vector components_to_vector(const ThmComponents& c);

}  // namespace ltc
