#include "powerlaw/sampling.hpp"

#include <stdexcept>

namespace powerlaw {

AliasTable::AliasTable(std::span<const double> masses)
    : prob_(masses.size()), alias_(masses.size()) {
  const std::size_t n = masses.size();
  if (n == 0) throw std::invalid_argument("alias table: empty law");
  std::vector<double> scaled(n);
  std::vector<std::uint32_t> small;
  std::vector<std::uint32_t> large;
  for (std::size_t i = 0; i < n; ++i) {
    scaled[i] = masses[i] * static_cast<double>(n);
    (scaled[i] < 1.0 ? small : large).push_back(static_cast<std::uint32_t>(i));
  }
  while (!small.empty() && !large.empty()) {
    const std::uint32_t s = small.back();
    small.pop_back();
    const std::uint32_t l = large.back();
    prob_[s] = scaled[s];
    alias_[s] = l;
    scaled[l] = (scaled[l] + scaled[s]) - 1.0;
    if (scaled[l] < 1.0) {
      large.pop_back();
      small.push_back(l);
    }
  }
  // Leftovers are 1 up to rounding.
  for (auto i : large) {
    prob_[i] = 1.0;
    alias_[i] = i;
  }
  for (auto i : small) {
    prob_[i] = masses[i] > 0.0 ? 1.0 : 0.0;
    alias_[i] = i;
  }
  // A zero-mass slot that fell through must never return itself.
  for (std::size_t i = 0; i < n; ++i) {
    if (masses[i] == 0.0 && alias_[i] == i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (masses[j] > 0.0) {
          alias_[i] = static_cast<std::uint32_t>(j);
          prob_[i] = 0.0;
          break;
        }
      }
    }
  }
}

namespace {

std::vector<double> row_of(const Eigen::MatrixXd& m, Eigen::Index r) {
  std::vector<double> out(static_cast<std::size_t>(m.cols()));
  for (Eigen::Index c = 0; c < m.cols(); ++c) out[static_cast<std::size_t>(c)] = m(r, c);
  return out;
}

}  // namespace

NarrationSampler::NarrationSampler(const ProcessSpec& spec) {
  if (const auto* law = spec.iid_law()) {
    emission_.emplace_back(law->masses());
    return;
  }
  const MarkovChain& chain = *spec.chain();
  for (const auto& e : chain.emissions()) emission_.emplace_back(e.masses());
  for (Eigen::Index s = 0; s < static_cast<Eigen::Index>(chain.states()); ++s) {
    const auto row = row_of(chain.transition(), s);
    transition_.emplace_back(row);
  }
  const Eigen::VectorXd& pi = chain.stationary();
  std::vector<double> start(pi.data(), pi.data() + pi.size());
  initial_.emplace_back(start);
}

std::vector<Token> NarrationSampler::generate(Length t, std::uint64_t seed) const {
  if (t == 0) throw std::invalid_argument("narration: length must be at least 1");
  Rng rng(seed);
  std::vector<Token> out(t);
  if (transition_.empty()) {
    const AliasTable& table = emission_.front();
    for (auto& x : out) x = table.sample(rng);
    return out;
  }
  std::size_t state = initial_.front().sample(rng) - 1;
  for (Length i = 0; i < t; ++i) {
    out[i] = emission_[state].sample(rng);
    state = transition_[state].sample(rng) - 1;
  }
  return out;
}

std::vector<Token> sample_narration(const ProcessSpec& spec, Length t, std::uint64_t seed) {
  return NarrationSampler(spec).generate(t, seed);
}

std::uint64_t knowledge_key(const SantaFeConfig& config, std::uint64_t seed) {
  return derive_seed(config.base_seed, splitmix64(seed));
}

std::vector<SantaFeToken> sample_santa_fe(const SantaFeConfig& config, Length t,
                                          std::uint64_t seed) {
  const std::vector<Token> narration = sample_narration(config.narration, t, seed);
  const Knowledge knowledge(knowledge_key(config, seed), config.knowledge_entropy);
  std::vector<SantaFeToken> out;
  out.reserve(narration.size());
  for (Token k : narration) out.push_back({k, knowledge.bit(k)});
  return out;
}

}  // namespace powerlaw
