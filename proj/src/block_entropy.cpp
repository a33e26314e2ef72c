#include "powerlaw/block_entropy.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "powerlaw/occupancy.hpp"
#include "powerlaw/seeding.hpp"

namespace powerlaw {

namespace {

// Neumaier-compensated accumulator; enumerations add up to 2^24 terms.
class Accumulator {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  [[nodiscard]] double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

double plogp(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

// The narration as a hidden chain over its support: an IID law is a
// one-state chain. Types are relabelled 0..A-1.
struct Enumerable {
  std::vector<Token> types;                 // support, ascending
  std::vector<std::vector<double>> emit;    // emit[s][a]
  std::vector<std::vector<double>> trans;   // trans[s][s']
  std::vector<double> initial;              // initial[s]
};

Enumerable enumerable(const ProcessSpec& spec) {
  Enumerable e;
  const DiscreteLaw marginal = marginal_law(spec);
  for (std::size_t k = 1; k <= marginal.size(); ++k) {
    if (marginal.mass(static_cast<Token>(k)) > 0.0) e.types.push_back(static_cast<Token>(k));
  }
  auto row = [&](const DiscreteLaw& law) {
    std::vector<double> r;
    r.reserve(e.types.size());
    for (Token k : e.types) r.push_back(law.mass(k));
    return r;
  };
  if (const DiscreteLaw* law = spec.iid_law()) {
    e.emit.push_back(row(*law));
    e.trans = {{1.0}};
    e.initial = {1.0};
  } else {
    const MarkovChain& chain = *spec.chain();
    const std::size_t n = chain.states();
    for (std::size_t s = 0; s < n; ++s) {
      e.emit.push_back(row(chain.emissions()[s]));
      e.initial.push_back(chain.stationary()(static_cast<Eigen::Index>(s)));
      std::vector<double> r(n);
      for (std::size_t s2 = 0; s2 < n; ++s2) {
        r[s2] = chain.transition()(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(s2));
      }
      e.trans.push_back(std::move(r));
    }
  }
  return e;
}

void require_enumerable(double outcomes, const std::string& what) {
  if (outcomes > kEnumerationLimit) {
    throw std::invalid_argument(what + ": " + std::to_string(outcomes) +
                                " outcomes exceed the enumeration limit of 2^24");
  }
}

// Visits every narration string of length t with its probability and the
// number of distinct types it contains.
template <class Leaf>
void enumerate(const Enumerable& e, Length t, Leaf&& leaf) {
  const std::size_t states = e.initial.size();
  const std::size_t alphabet = e.types.size();
  std::vector<std::vector<double>> alpha(t + 1, std::vector<double>(states, 0.0));
  std::vector<std::uint32_t> seen(alphabet, 0);

  auto visit = [&](auto&& self, Length depth, std::size_t distinct) -> void {
    if (depth == t) {
      double p = 0.0;
      for (double a : alpha[depth]) p += a;
      leaf(p, distinct);
      return;
    }
    for (std::size_t a = 0; a < alphabet; ++a) {
      auto& next = alpha[depth + 1];
      double total = 0.0;
      for (std::size_t s2 = 0; s2 < states; ++s2) {
        double in = 0.0;
        if (depth == 0) {
          in = e.initial[s2];
        } else {
          for (std::size_t s = 0; s < states; ++s) in += alpha[depth][s] * e.trans[s][s2];
        }
        next[s2] = in * e.emit[s2][a];
        total += next[s2];
      }
      if (total <= 0.0) continue;
      const bool fresh = seen[a]++ == 0;
      self(self, depth + 1, distinct + (fresh ? 1 : 0));
      --seen[a];
    }
  };
  visit(visit, 0, 0);
}

}  // namespace

double exact_block_entropy(const ProcessSpec& spec, Length t) {
  if (t == 0) return 0.0;
  const Enumerable e = enumerable(spec);
  require_enumerable(std::pow(static_cast<double>(e.types.size()), static_cast<double>(t)),
                     "block entropy");
  Accumulator h;
  enumerate(e, t, [&](double p, std::size_t) { h.add(plogp(p)); });
  return h.value();
}

double exact_block_entropy(const SantaFeConfig& config, Length t) {
  if (t == 0) return 0.0;
  const Enumerable e = enumerable(config.narration);
  const double a = static_cast<double>(e.types.size());
  const double bit_patterns = std::pow(2.0, std::min(a, static_cast<double>(t)));
  require_enumerable(std::pow(a, static_cast<double>(t)) * bit_patterns,
                     "Santa Fe block entropy");
  const double q = Knowledge(0, config.knowledge_entropy).one_probability();
  Accumulator h;
  enumerate(e, t, [&](double p, std::size_t distinct) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << distinct); ++mask) {
      const int ones = std::popcount(mask);
      const double pz = std::pow(q, ones) * std::pow(1.0 - q, static_cast<double>(distinct) - ones);
      h.add(plogp(p * pz));
    }
  });
  return h.value();
}

namespace {

template <class Source>
EntropyCurve curve_of(const Source& source, Length t_max) {
  EntropyCurve c;
  for (Length t = 0; t <= t_max; ++t) {
    c.t.push_back(t);
    c.H.push_back(exact_block_entropy(source, t));
  }
  for (std::size_t i = 0; i < c.H.size(); ++i) {
    c.dH.push_back(i + 1 < c.H.size() ? c.H[i + 1] - c.H[i]
                                      : std::numeric_limits<double>::quiet_NaN());
  }
  c.h_estimate = c.H.size() >= 2 ? c.dH[c.H.size() - 2] : 0.0;
  return c;
}

}  // namespace

EntropyCurve exact_entropy_curve(const ProcessSpec& spec, Length t_max) {
  return curve_of(spec, t_max);
}

EntropyCurve exact_entropy_curve(const SantaFeConfig& config, Length t_max) {
  return curve_of(config, t_max);
}

double santa_fe_conditional_rate(const SantaFeConfig& config, Length t, Length s) {
  const DiscreteLaw* law = config.narration.iid_law();
  if (law == nullptr) {
    throw std::invalid_argument("conditional rate: only IID narrations have a closed form");
  }
  if (s == 0) throw std::invalid_argument("conditional rate: test length must be positive");
  return law->entropy_bits() +
         config.knowledge_entropy * new_types(*law, t, s) / static_cast<double>(s);
}

}  // namespace powerlaw
