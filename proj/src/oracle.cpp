#include "strictpat/oracle.hpp"

#include <exception>

#include "strictpat/algebra.hpp"

namespace strictpat {

std::vector<std::uint8_t> membership_serial(const Signature& sig, const std::vector<Term>& terms,
                                            const PatternSet& s) {
  std::vector<std::uint8_t> out(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) out[i] = member_set(sig, terms[i], s);
  return out;
}

std::vector<std::uint8_t> membership_parallel(const Signature& sig,
                                              const std::vector<Term>& terms,
                                              const PatternSet& s) {
  std::vector<std::uint8_t> out(terms.size());
  const auto n = static_cast<long>(terms.size());
  std::exception_ptr failure;
  // Terms are immutable and shared only through atomic reference counts.
#pragma omp parallel for schedule(dynamic, 64)
  for (long i = 0; i < n; ++i) {
    try {
      out[i] = member_set(sig, terms[i], s);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace strictpat
