#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "ltc/algebra.hpp"

namespace ltc {

/// Bimodule over a pair of algebras, by action tensors:
///   left  [(i*dim + p)*dim + q] : (left-algebra basis i) * m_p has m_q-coefficient
///   right [(p*rdim + j)*dim + q]: m_p * (right-algebra basis j) has m_q-coefficient
struct Bimodule {
    std::size_t dim = 0;
    std::vector<Rational> left;
    std::vector<Rational> right;
};

/// (A, B, M, N, zeta, psi). zeta[(p*dimN + q)*dimA + k] is the a_k-coefficient
/// of m_p n_q; psi[(q*dimM + p)*dimB + k] is the b_k-coefficient of n_q m_p.
struct MoritaContext {
    StructureConstants A;
    StructureConstants B;
    Bimodule M;
    Bimodule N;
    std::vector<Rational> zeta;
    std::vector<Rational> psi;
};

enum class Block { A = 0, M = 1, N = 2, B = 3 };

const char* to_string(Block b);

/// A generalized matrix algebra [A M; N B]. Basis order is always
/// [A-block, M-block, N-block, B-block].
class Gma {
public:
    /// Checks that the table respects the 2x2 block multiplication rules.
    Gma(StructureConstants algebra, std::array<std::size_t, 4> block_dims);

    const StructureConstants& algebra() const noexcept { return algebra_; }
    std::size_t dim() const noexcept { return algebra_.dim(); }
    std::size_t block_dim(Block b) const noexcept { return dims_[static_cast<int>(b)]; }
    std::size_t block_offset(Block b) const noexcept;
    std::array<std::size_t, 4> block_dims() const noexcept { return dims_; }
    Block block_of(std::size_t basis_index) const;

    Vector embed(Block b, const Vector& corner) const;
    Vector project(Block b, const Vector& x) const;
    /// Product of two corner elements, projected onto block `out`.
    Vector corner_product(Block lb, const Vector& x, Block rb, const Vector& y, Block out) const;

    /// The corner algebra A or B.
    StructureConstants corner_algebra(Block b) const;
    MoritaContext to_context() const;

    bool is_unital() const noexcept { return unit_.has_value(); }
    /// Throws NotUnital.
    const Vector& unit() const;
    /// 1_A and 1_B as corner vectors.
    Vector unit_a() const { return project(Block::A, unit()); }
    Vector unit_b() const { return project(Block::B, unit()); }
    /// e = diag(1_A, 0).
    Vector standard_idempotent() const { return embed(Block::A, unit_a()); }

private:
    StructureConstants algebra_;
    std::array<std::size_t, 4> dims_;
    std::optional<Vector> unit_;
};

Gma assemble(const MoritaContext& ctx);
Gma m2_of(const StructureConstants& alg);

struct PeirceDecomposition {
    Gma gma;
    /// Columns are the new basis vectors written in the original coordinates.
    Matrix change_of_basis;
};

PeirceDecomposition peirce_from_idempotent(const StructureConstants& alg, const Vector& e);

struct AnnihilatorReport {
    /// {a in A : aM = 0, Na = 0}; the condition holds iff this is zero.
    Subspace a_side;
    /// {b in B : Mb = 0, bN = 0}.
    Subspace b_side;

    bool a_holds() const { return a_side.is_zero(); }
    bool b_holds() const { return b_side.is_zero(); }
    bool holds() const { return a_holds() && b_holds(); }
};

AnnihilatorReport check_annihilating_conditions(const Gma& u);

struct CenterBlocks {
    Subspace center;  // in U coordinates
    Subspace pi_a;    // in A coordinates
    Subspace pi_b;    // in B coordinates
};

/// Z(U) with its corner projections. Requires a unital U satisfying the
/// annihilating conditions; every central element must be block diagonal.
CenterBlocks center_block_description(const Gma& u);

/// {diag(a, b) : am = mb, na = bn for all basis m, n}, built from the
/// corner actions only (independent of the raw kernel center).
Subspace block_center(const Gma& u);

/// The isomorphism pi_A(Z(U)) -> pi_B(Z(U)) with am = m eta(a), na = eta(a) n.
struct EtaMap {
    Subspace domain;
    Subspace codomain;
    Matrix forward;   // column t: eta(domain basis t), B coordinates
    Matrix backward;  // column t: eta^-1(codomain basis t), A coordinates

    Vector apply(const Vector& a) const;
    Vector apply_inverse(const Vector& b) const;
};

EtaMap eta_map(const Gma& u);

}  // namespace ltc
