#pragma once

#include <cstdint>

#include "ltc/catalog.hpp"
#include "ltc/report.hpp"

namespace ltc {

/// Every claim of the 12-dimensional non-unital example: vanishing double
/// commutators, phi is a Lie triple centralizer but not a Lie centralizer
/// (with A0, B0 as witnesses), Z = M2(C), and phi is not proper.
CheckReport reproduce_example_1_2();

/// Structural checks on one catalog entry: inclusion lattice,
/// block-form conditions, center description and eta, properness verdicts,
/// and derivation decompositions where their hypotheses hold.
CheckReport audit_entry(const CatalogEntry& entry, std::size_t random_samples, std::uint64_t seed);

/// reproduce_example_1_2 followed by audit_entry over builtin_catalog().
CheckReport verify_paper(std::uint64_t seed = 20240601);

}  // namespace ltc
