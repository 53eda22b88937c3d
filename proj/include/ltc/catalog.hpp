#pragma once

#include <optional>
#include <random>
#include <string>

#include "ltc/gma.hpp"

namespace ltc {

struct CatalogEntry {
    std::string name;
    std::string note;
    StructureConstants algebra;
    std::optional<Gma> gma;  // present when the entry carries a block structure
    std::optional<Vector> probe;  // element tried first when looking for a properness witness
};

/// Matrix units E_ij, 1 <= i <= j <= n, split after row/column k:
/// A = T_k, M = k x (n-k) block, N = 0, B = T_(n-k).
Gma upper_triangular(std::size_t n, std::size_t k = 1);
/// All n x n matrix units split after row/column k.
Gma full_matrix(std::size_t n, std::size_t k = 1);
/// Triangular algebra [A M; 0 B].
Gma tri(const StructureConstants& a, const Bimodule& m, const StructureConstants& b);

StructureConstants rationals();
/// Q[x]/(x^2) with basis 1, x.
StructureConstants dual_numbers();
/// The algebra viewed as a bimodule over itself.
Bimodule regular_bimodule(const StructureConstants& alg);

/// The 2 x 2 matrices over the three-dimensional algebra spanned by
/// u1 = E12, u2 = E23, u3 = E13 inside 3 x 3 matrices, where u1 u2 = u3
/// is the only nonzero product. Encoded over Q; every constant involved is rational.
struct Example12 {
    Gma u;
    LinearOperator phi;  // [X Y; Z W] -> [W 0; 0 X]
    Vector a0;           // diag(u1 + u2, 2u1 + u2)
    Vector b0;           // diag(u1 + u2, u1 + 2u2)
    Vector chi_a0;       // phi(A0), the value chi(A0) would have to take
};
Example12 example_1_2();

/// A unital GMA with corner dimensions at most 2 obtained as a Peirce
/// decomposition of (incidence algebra of a random preorder) (x) R with
/// R in {Q, Q[x]/(x^2), Q x Q}, with at least one nonzero bimodule, followed by a random change of basis in
/// every corner and a round trip through its Morita context.
Gma random_morita_context(std::mt19937_64& rng);

/// Express the algebra in the basis given by the columns of p.
StructureConstants change_basis(const StructureConstants& alg, const Matrix& p);

/// Resolves names such as "upper_triangular(3)", "full_matrix(3,2)",
/// "example_1_2", "dual_tri", "dual_over_q", "q_plus_t2", "m2(a.json)",
/// "tri(a.json,m.json,b.json)", or a path to an algebra or context document.
/// Throws InvalidDocument for unknown names and malformed documents.
CatalogEntry catalog_entry(const std::string& spec);

/// Built-in entries with fixed parameters, in a stable order.
std::vector<CatalogEntry> builtin_catalog();

}  // namespace ltc
