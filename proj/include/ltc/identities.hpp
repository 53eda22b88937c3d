#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ltc/gma.hpp"

namespace ltc {

enum class IdentityKind {
    LieCentralizer,            // phi([a,b]) = [phi(a),b]
    LieTripleCentralizer,      // phi([[a,b],c]) = [[phi(a),b],c]
    JordanCentralizer,         // phi(a o b) = phi(a) o b
    Derivation,                // d(ab) = d(a)b + a d(b)
    LieDerivation,             // d([a,b]) = [d(a),b] + [a,d(b)]
    JordanDerivation,          // d(a o b) = d(a) o b + a o d(b)
    LieTripleDerivation,       // d([[a,b],c]) = [[d(a),b],c] + [[a,d(b)],c] + [[a,b],d(c)]
    SingularJordanDerivation,  // Jordan derivation supported on M -> N and N -> M
};

const char* to_string(IdentityKind kind);
/// CLI names: lc, ltc, jc, der, lieder, jder, ltd, sjder.
const char* short_name(IdentityKind kind);
std::optional<IdentityKind> parse_identity_kind(std::string_view name);
std::size_t arity(IdentityKind kind);

/// All operators satisfying the identity, as a subspace of Q^(dim*dim) in
/// column-major operator coordinates. Throws NotGMA for the singular kind.
Subspace solve_identity_space(const StructureConstants& alg, IdentityKind kind);
Subspace solve_identity_space(const Gma& u, IdentityKind kind);

/// Lie triple centralizers in the form phi([[a,b],c]) = [[a,phi(b)],c].
Subspace solve_ltc_middle_form(const StructureConstants& alg);

std::vector<LinearOperator> operators_of(const Subspace& space, std::size_t dim);

struct IdentityWitness {
    std::vector<std::size_t> tuple;  // basis indices; empty for support violations
    Vector lhs;
    Vector rhs;
    std::string note;
};

struct Membership {
    bool holds = true;
    std::optional<IdentityWitness> witness;
};

/// Evaluates the identity directly on every basis tuple and reports the first failure.
Membership is_identity_member(const StructureConstants& alg, IdentityKind kind, const LinearOperator& op);
Membership is_identity_member(const Gma& u, IdentityKind kind, const LinearOperator& op);

/// Operator given by left multiplication X -> z X.
LinearOperator left_multiplication_operator(const StructureConstants& alg, const Vector& z);
/// Inner derivation X -> zX - Xz.
LinearOperator inner_derivation(const StructureConstants& alg, const Vector& z);

}  // namespace ltc
