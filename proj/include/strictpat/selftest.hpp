#pragma once

#include <string>
#include <vector>

#include "strictpat/pattern_set.hpp"

namespace strictpat {

namespace bundled {

inline constexpr const char* kLamSig =
    "exp : type.\n"
    "lam : (exp ->u exp) ->1 exp.\n"
    "app : exp ->1 exp ->1 exp.\n";

inline constexpr const char* kLamPlainSig =
    "exp : type.\n"
    "lam : (exp -> exp) -> exp.\n"
    "app : exp -> exp -> exp.\n";

/// Simple: every constant is strict in its arguments.
inline constexpr const char* kAbSig = "a : type. b : a. c : a ->1 a.\n";

/// Not simple: c may discard its argument.
inline constexpr const char* kAbUSig = "a : type. b : a. c : a ->u a.\n";

inline constexpr const char* kBinarySig = "a : type. b : a. c : a ->1 a ->1 a.\n";

inline constexpr const char* kTypingSig = "A : type. B : type. c : B.\n";

inline constexpr const char* kIsredxProgram =
    "betardx : isredx (app @1 (lam @1 (\\x^u:exp. E[x^u])) @1 F[]).\n"
    "etardx  : isredx (lam @1 (\\x^u:exp. app @1 E[x^0] @1 x)).\n";

}  // namespace bundled

/// True when `got` equals the set of `expected` patterns (parsed under the
/// set's Ψ and type) up to α-equivalence, renaming of existential variables
/// and member order.
bool same_members(const Signature& sig, const PatternSet& got,
                  const std::vector<std::string>& expected);

struct SelftestResult {
  std::string name;
  bool passed;
  std::string detail;
};

/// Reproduces every worked example on the bundled signatures.
std::vector<SelftestResult> run_selftest();

}  // namespace strictpat
