#pragma once

#include <optional>
#include <variant>

#include "ltc/properness.hpp"

namespace ltc {

struct GltdCorrespondence {
    bool holds = false;          // Lambda - xi is a Lie triple centralizer
    bool direct_holds = false;   // generalized identity checked term by term
    std::optional<IdentityWitness> witness;  // first failing triple of the direct check
    bool agree() const { return holds == direct_holds; }
};

/// Lambda is a generalized Lie triple derivation associated with xi exactly
/// when Lambda - xi is a Lie triple centralizer. Both formulations are
/// evaluated. Throws NotLTD when xi is not a Lie triple derivation.
GltdCorrespondence check_gltd_correspondence(const StructureConstants& alg, const LinearOperator& lambda,
                                             const LinearOperator& xi);

enum class Established { Holds, NotEstablished };
const char* to_string(Established e);

struct Thm41HypothesisReport {
    bool a_is_triple_span = false;   // [[A,A],A] = A
    bool b_is_triple_span = false;   // [[B,B],B] = B
    bool pi_a_is_center_a = false;   // pi_A(Z(U)) = Z(A)
    bool pi_b_is_center_b = false;   // pi_B(Z(U)) = Z(B)
    bool a_commuting_central = false;  // [x,A] in Z(A) => x in Z(A)
    bool b_commuting_central = false;
    bool a_no_central_ideal = false;
    bool b_no_central_ideal = false;
    Established c = Established::NotEstablished;
    Established d = Established::NotEstablished;
    std::optional<Vector> m0;  // candidate that established (c)
    std::optional<Vector> n0;
    std::size_t m0_tested = 0;
    std::size_t n0_tested = 0;
    bool two_torsion_free = true;  // automatic over the rationals

    bool i() const { return a_is_triple_span && b_is_triple_span; }
    bool ii() const { return pi_a_is_center_a && a_is_triple_span; }
    bool iii() const { return pi_b_is_center_b && b_is_triple_span; }
    bool iv() const { return pi_a_is_center_a && pi_b_is_center_b && (a_commuting_central || b_commuting_central); }
    bool first_group() const { return i() || ii() || iii() || iv(); }
    bool second_group() const {
        return a_no_central_ideal || b_no_central_ideal || c == Established::Holds || d == Established::Holds;
    }
    bool satisfied() const { return two_torsion_free && first_group() && second_group(); }
};

/// Empty candidate lists default to the basis vectors of M (resp. N).
/// Throws NotUnital, AnnihilatorConditionsFail.
Thm41HypothesisReport check_thm41_hypotheses(const Gma& u, const std::vector<Vector>& candidates_m0 = {},
                                             const std::vector<Vector>& candidates_n0 = {});

/// {x : [x, e_i] in Z(G) for every basis e_i}.
Subspace commuting_central(const StructureConstants& g);

/// Maps into Z(alg) that vanish on every double commutator.
Subspace central_vanishing_space(const StructureConstants& alg);

struct LtdDecomposition {
    LinearOperator delta;  // derivation
    LinearOperator d;      // singular Jordan derivation
    LinearOperator gamma;  // center-valued, vanishing on double commutators
    CheckReport transcript;
};

struct Infeasible {
    std::string reason;
};

/// xi = delta + d + gamma as an exact membership problem; the echelon
/// particular solution is returned. Throws NotLTD.
std::variant<LtdDecomposition, Infeasible> decompose_ltd(const Gma& u, const LinearOperator& xi);

struct GltdDecomposition {
    LinearOperator delta;
    LinearOperator d;
    LinearOperator psi;
    Vector lambda;
    bool within_hypotheses = false;  // false: labelled "outside certified hypotheses"
    CheckReport transcript;
};

/// Lambda = delta + d + psi + lambda X, built from the properness
/// certificate of Lambda - xi and the decomposition of xi.
/// Throws NotGLTD, NotLTD, NotUnital, AnnihilatorConditionsFail.
std::variant<GltdDecomposition, Infeasible> decompose_generalized_ltd(const Gma& u, const LinearOperator& lambda,
                                                                      const LinearOperator& xi);

}  // namespace ltc
