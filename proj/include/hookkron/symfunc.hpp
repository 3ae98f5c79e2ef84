#pragma once

#include <cstdint>
#include <vector>

#include "hookkron/partition.hpp"
#include "hookkron/tableau.hpp"

namespace hookkron {

using OrdinaryTableau = Tableau<int>;
using StandardTableau = Tableau<int>;

// Standard fillings of a straight or skew shape, in a fixed deterministic order.
std::vector<StandardTableau> syt_enumerate(const SkewShape& shape);
std::uint64_t syt_count(const Partition& shape);  // hook length formula
bool is_standard(const StandardTableau& t);

// Schutzenberger evacuation of a standard tableau of straight shape.
StandardTableau evacuation(const StandardTableau& t);
// Evacuation of a straight tableau with distinct entries, relabelling through its sorted entry set.
OrdinaryTableau evacuation_distinct(const OrdinaryTableau& t);

// The superstandard tableau Z_lambda (row i filled with i) and its standardization.
OrdinaryTableau superstandard(const Partition& lambda);
StandardTableau superstandard_std(const Partition& lambda);

// Littlewood-Richardson fillings of `shape` with content `content`:
// semistandard, reverse reading word a lattice word.
std::vector<OrdinaryTableau> lr_fillings(const SkewShape& shape, const Partition& content);
std::int64_t lr_count(const SkewShape& shape, const Partition& content);
// c^nu_{lambda mu}
std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

// Character value chi^lambda(rho) (Murnaghan-Nakayama), memoized per thread.
std::int64_t character(const Partition& lambda, const Partition& rho);
// n!/z_rho
std::uint64_t class_size(const Partition& rho);

// Kronecker coefficient from the character table.  Throws OverflowError if the
// 128-bit accumulation would overflow.
std::int64_t kronecker_oracle(const Partition& lambda, const Partition& mu, const Partition& nu);
// g_{lambda mu, outer/inner} = sum_rho c^outer_{rho inner} g_{lambda mu rho}
std::int64_t kronecker_oracle(const Partition& lambda, const Partition& mu, const SkewShape& nu);

}  // namespace hookkron
