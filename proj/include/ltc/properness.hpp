#pragma once

#include <cstdint>
#include <optional>
#include <variant>

#include "ltc/blocks.hpp"
#include "ltc/identities.hpp"

namespace ltc {

/// phi(X) = lambda X + chi(X) with lambda central and chi center-valued,
/// vanishing on every double commutator.
struct PropernessCertificate {
    Vector lambda;           // in algebra coordinates
    LinearOperator chi;
    std::optional<Matrix> alpha_bar;  // a -> alpha1(a) - eta^-1(alpha4(a)), A -> A
    std::optional<Matrix> beta_bar;   // b -> beta4(b) - eta(beta1(b)),  B -> B
    CheckReport transcript;
};

/// Why no certificate exists.
///
/// From the unit criterion: side is A (resp. B), witness is alpha4(1_A) in B
/// coordinates (resp. beta1(1_B) in A coordinates) and target is pi_B(Z(U))
/// (resp. pi_A(Z(U))).
///
/// From the direct feasibility problem: input is a basis element or the
/// supplied probe X, witness is phi(X) and target is Z + span{zX : z in Z},
/// the set of values lambda X + chi(X) could take. When no single input
/// is infeasible on its own, input is empty and the note says so.
struct PropernessFailure {
    std::optional<Block> side;
    std::optional<Vector> input;
    Vector witness;
    Subspace target;
    std::string note;
};

using PropernessResult = std::variant<PropernessCertificate, PropernessFailure>;

inline bool is_proper(const PropernessResult& r) { return std::holds_alternative<PropernessCertificate>(r); }

/// Unit criterion on a unital GMA with the annihilating conditions:
/// alpha4(1_A) in pi_B(Z(U)) and beta1(1_B) in pi_A(Z(U)). On success the
/// certificate is built from the corner maps and re-verified on every basis
/// element; a failed re-verification throws TheoremViolation.
/// Throws NotUnital, AnnihilatorConditionsFail, NotLTC.
PropernessResult is_proper_thm33(const Gma& u, const LinearOperator& phi);

/// Exact feasibility search over lambda in Z(alg), with chi = phi - L_lambda.
/// Needs no unit. Throws NotLTC.
PropernessResult is_proper_direct(const StructureConstants& alg, const LinearOperator& phi,
                                  const std::optional<Vector>& probe = std::nullopt);

/// Re-checks a certificate against phi on every basis element and triple.
CheckReport verify_certificate(const StructureConstants& alg, const LinearOperator& phi,
                               const PropernessCertificate& cert);

struct Cor36Report {
    bool pi_b_is_center_b = false;  // pi_B(Z(U)) = Z(B)
    bool a_is_triple_span = false;  // [[A,A],A] = A
    bool pi_a_is_center_a = false;  // pi_A(Z(U)) = Z(A)
    bool b_is_triple_span = false;  // [[B,B],B] = B

    bool side_i() const { return pi_b_is_center_b || a_is_triple_span; }
    bool side_ii() const { return pi_a_is_center_a || b_is_triple_span; }
    bool holds() const { return side_i() && side_ii(); }
};

/// Throws NotUnital, AnnihilatorConditionsFail.
Cor36Report check_cor36_hypotheses(const Gma& u);

struct AuditEntry {
    std::string label;  // "basis 3" or "random 7"
    bool unit_criterion = false;   // alpha4(1_A), beta1(1_B) memberships
    bool range_criterion = false;  // alpha4(A) in pi_B(Z), beta1(B) in pi_A(Z)
    bool direct = false;           // is_proper_direct feasible
    bool certificate_ok = true;    // unit-criterion certificate re-verified
    bool agree() const { return unit_criterion == range_criterion && range_criterion == direct && certificate_ok; }
};

struct EquivalenceAudit {
    std::vector<AuditEntry> entries;
    std::size_t improper_count() const;
    bool consistent() const;
    const AuditEntry* first_disagreement() const;
};

/// Evaluates the three properness verdicts on every basis element of the
/// LTC space and on `random_samples` random integer combinations of it.
/// Throws NotUnital, AnnihilatorConditionsFail.
EquivalenceAudit equivalence_audit(const Gma& u, std::size_t random_samples = 0, std::uint64_t seed = 1);

}  // namespace ltc
