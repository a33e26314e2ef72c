#pragma once

#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "powerlaw/discrete_law.hpp"

namespace powerlaw {

/// Prediction by partial matching over the alphabet 1..A, escape method C
/// with exclusion and full updating of every order, backed by a uniform
/// law over the symbols not yet excluded.
class PpmModel {
 public:
  static constexpr unsigned kMaxOrder = 8;

  /// Throws for an empty alphabet or order > kMaxOrder.
  PpmModel(std::size_t alphabet, unsigned order);

  /// Ideal code length of x in bits given the history so far, then learns
  /// x. Throws for x outside 1..A.
  double encode(Token x);

  [[nodiscard]] std::size_t alphabet() const { return alphabet_; }
  [[nodiscard]] unsigned order() const { return order_; }

 private:
  struct Context {
    std::vector<std::pair<Token, std::uint64_t>> counts;
    std::uint64_t total = 0;
  };

  std::size_t alphabet_;
  unsigned order_;
  std::vector<std::unordered_map<std::u32string, Context>> tables_;  // by order
  std::u32string history_;  // last `order_` symbols
  std::vector<std::uint8_t> excluded_;
  std::vector<Token> excluded_list_;
};

/// Cumulative code length: entry i is the bits spent on tokens[0..i].
std::vector<double> ppm_codelength(std::span<const Token> tokens, std::size_t alphabet,
                                   unsigned order);

}  // namespace powerlaw
