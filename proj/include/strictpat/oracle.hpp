#pragma once

#include <cstdint>
#include <vector>

#include "strictpat/pattern_set.hpp"

namespace strictpat {

/// Membership of every term in `s`, one flag per term. The serial version is
/// the reference; the parallel one splits the terms across OpenMP threads and
/// must return the same vector.
std::vector<std::uint8_t> membership_serial(const Signature& sig, const std::vector<Term>& terms,
                                            const PatternSet& s);
std::vector<std::uint8_t> membership_parallel(const Signature& sig,
                                              const std::vector<Term>& terms,
                                              const PatternSet& s);

}  // namespace strictpat
