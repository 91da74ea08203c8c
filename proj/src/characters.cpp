#include "ltlab/characters.hpp"

namespace ltlab {

PrimePower prime_power(std::uint64_t q) {
  if (q < 2) throw InvalidArgument("q must be a prime power");
  std::uint64_t p = 2;
  while (q % p) ++p;
  unsigned f = 0;
  std::uint64_t r = q;
  while (r % p == 0) {
    r /= p;
    ++f;
  }
  if (r != 1) throw InvalidArgument("q must be a prime power");
  return {static_cast<unsigned>(p), f};
}

CyclotomicInteger psi_value(const FieldElement& lambda, const FieldElement& a) {
  FieldElement prod = lambda * a;
  return CyclotomicInteger::root(prod.field().p(), prod.field().abs_trace(prod.value()));
}

bool is_primitive_char(const FieldElement& lambda, std::uint64_t q, unsigned h) {
  auto [p, f] = prime_power(q);
  const FieldDesc& F = lambda.field();
  if (F.p() != p || F.m() != f * h) throw InvalidArgument("lambda must lie in F_{q^h}");
  if (lambda.is_zero()) return false;
  for (unsigned d = 1; d < h; ++d) {
    if (h % d) continue;
    if (F.in_subfield(lambda.value(), f * d)) return false;
  }
  return true;
}

}  // namespace ltlab
