#pragma once

#include <vector>

#include "powerlaw/process.hpp"

namespace powerlaw {

/// Largest number of outcomes the enumeration oracle will visit.
inline constexpr double kEnumerationLimit = 16777216.0;  // 2^24

/// H(t) in bits on t = 0..t_max, with dH(t) = H(t+1) - H(t) (the last entry
/// is NaN) and h_estimate = the last finite dH, an upper estimate of the
/// entropy rate.
struct EntropyCurve {
  std::vector<Length> t;
  std::vector<double> H;
  std::vector<double> dH;
  double h_estimate = 0.0;
};

/// -sum P log2 P over every length-t string, by depth-first enumeration
/// with a forward recursion over hidden states. Throws when the number of
/// strings exceeds kEnumerationLimit; the message carries the bound.
double exact_block_entropy(const ProcessSpec& spec, Length t);

/// Same for a Santa Fe source: narration strings times every bit
/// assignment of the distinct types they contain.
double exact_block_entropy(const SantaFeConfig& config, Length t);

EntropyCurve exact_entropy_curve(const ProcessSpec& spec, Length t_max);
EntropyCurve exact_entropy_curve(const SantaFeConfig& config, Length t_max);

/// H(X_{k+1}^{k+s} | X_1^t) / s for the worst k (any k >= t), in bits per
/// token, for IID narrations:
///
///   h + H(Z) (V(t+s) - V(t)) / s
///
/// with h the narration entropy and H(Z) the knowledge entropy. Throws for
/// a Markov narration (no closed form) or s = 0.
double santa_fe_conditional_rate(const SantaFeConfig& config, Length t, Length s);

}  // namespace powerlaw
