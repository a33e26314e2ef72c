#include "powerlaw/ppm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace powerlaw {

namespace {

unsigned checked_order(unsigned order) {
  if (order > PpmModel::kMaxOrder) {
    throw std::invalid_argument("ppm: order " + std::to_string(order) + " outside [0, 8]");
  }
  return order;
}

}  // namespace

PpmModel::PpmModel(std::size_t alphabet, unsigned order)
    : alphabet_(alphabet),
      order_(checked_order(order)),
      tables_(order_ + 1),
      excluded_(alphabet + 1, 0) {
  if (alphabet == 0) throw std::invalid_argument("ppm: empty alphabet");
}

double PpmModel::encode(Token x) {
  if (x < 1 || x > alphabet_) {
    throw std::invalid_argument("ppm: token " + std::to_string(x) + " outside alphabet 1.." +
                                std::to_string(alphabet_));
  }
  double bits = 0.0;
  bool coded = false;
  const std::size_t longest = std::min<std::size_t>(order_, history_.size());

  for (std::size_t len = longest + 1; len-- > 0 && !coded;) {
    const auto it = tables_[len].find(history_.substr(history_.size() - len));
    if (it == tables_[len].end()) continue;
    std::uint64_t total = 0;
    std::uint64_t distinct = 0;
    std::uint64_t hit = 0;
    for (const auto& [sym, count] : it->second.counts) {
      if (excluded_[sym]) continue;
      total += count;
      ++distinct;
      if (sym == x) hit = count;
    }
    if (distinct == 0) continue;
    const double denom = static_cast<double>(total + distinct);
    if (hit > 0) {
      bits -= std::log2(static_cast<double>(hit) / denom);
      coded = true;
    } else {
      bits -= std::log2(static_cast<double>(distinct) / denom);
      for (const auto& entry : it->second.counts) {
        if (!excluded_[entry.first]) {
          excluded_[entry.first] = 1;
          excluded_list_.push_back(entry.first);
        }
      }
    }
  }
  if (!coded) {
    bits += std::log2(static_cast<double>(alphabet_ - excluded_list_.size()));
  }
  for (Token s : excluded_list_) excluded_[s] = 0;
  excluded_list_.clear();

  for (std::size_t len = 0; len <= longest; ++len) {
    Context& ctx = tables_[len][history_.substr(history_.size() - len)];
    bool found = false;
    for (auto& entry : ctx.counts) {
      if (entry.first == x) {
        ++entry.second;
        found = true;
        break;
      }
    }
    if (!found) ctx.counts.emplace_back(x, 1);
    ++ctx.total;
  }
  if (order_ > 0) {
    history_.push_back(static_cast<char32_t>(x));
    if (history_.size() > order_) history_.erase(0, 1);
  }
  return bits;
}

std::vector<double> ppm_codelength(std::span<const Token> tokens, std::size_t alphabet,
                                   unsigned order) {
  PpmModel model(alphabet, order);
  std::vector<double> cumulative;
  cumulative.reserve(tokens.size());
  double total = 0.0;
  for (Token x : tokens) {
    total += model.encode(x);
    cumulative.push_back(total);
  }
  return cumulative;
}

}  // namespace powerlaw
