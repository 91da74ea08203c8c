#pragma once

// Additive characters psi_lambda(a) = zeta_p^{Tr(lambda a)} of F_{q^h}.

#include <cstdint>

#include "ltlab/cyclotomic.hpp"
#include "ltlab/ffield.hpp"

namespace ltlab {

struct PrimePower {
  unsigned p;
  unsigned f;  // q = p^f
};

/// Splits q into p^f; throws InvalidArgument when q is not a prime power.
PrimePower prime_power(std::uint64_t q);

CyclotomicInteger psi_value(const FieldElement& lambda, const FieldElement& a);

/// True iff lambda (in F_{q^h}) lies in no proper subfield F_{q^d}.
bool is_primitive_char(const FieldElement& lambda, std::uint64_t q, unsigned h);

}  // namespace ltlab
