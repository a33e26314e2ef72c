#include "config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <boost/algorithm/string.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

namespace powerlaw::cli {

namespace {

namespace pt = boost::property_tree;

std::vector<std::string> split(const std::string& s, const char* seps) {
  std::vector<std::string> parts;
  boost::split(parts, s, boost::is_any_of(seps), boost::token_compress_on);
  for (auto& p : parts) boost::trim(p);
  std::erase_if(parts, [](const std::string& p) { return p.empty(); });
  return parts;
}

double number(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("config: '" + s + "' is not a number");
  }
  if (used != s.size()) throw std::invalid_argument("config: '" + s + "' is not a number");
  return v;
}

std::size_t count(const std::string& s) {
  const double v = number(s);
  if (!(v >= 0.0) || v != static_cast<double>(static_cast<std::size_t>(v))) {
    throw std::invalid_argument("config: '" + s + "' is not a non-negative integer");
  }
  return static_cast<std::size_t>(v);
}

std::uint64_t seed_value(const std::string& s) {
  std::uint64_t v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size()) {
    throw std::invalid_argument("config: '" + s + "' is not a 64-bit seed");
  }
  return v;
}

double fraction(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return number(s);
  const double den = number(s.substr(slash + 1));
  if (den == 0.0) throw std::invalid_argument("config: zero denominator in '" + s + "'");
  return number(s.substr(0, slash)) / den;
}

}  // namespace

DiscreteLaw parse_law(const std::string& descriptor) {
  const auto words = split(descriptor, " \t");
  if (words.empty()) throw std::invalid_argument("config: empty law descriptor");
  const std::string& kind = words[0];
  auto arg = [&](std::size_t i) -> const std::string& {
    if (i >= words.size()) throw std::invalid_argument("config: law '" + descriptor + "' is short");
    return words[i];
  };
  auto shift = [&](std::size_t i) { return i < words.size() ? count(words[i]) : 0; };

  if (kind == "zipf") {
    if (words.size() > 4) throw std::invalid_argument("config: zipf takes beta kmax [shift]");
    return DiscreteLaw::zipf(number(arg(1)), count(arg(2))).shifted(shift(3));
  }
  if (kind == "geometric") {
    if (words.size() > 4) throw std::invalid_argument("config: geometric takes ratio kmax [shift]");
    return DiscreteLaw::geometric(number(arg(1)), count(arg(2))).shifted(shift(3));
  }
  if (kind == "uniform") {
    if (words.size() > 3) throw std::invalid_argument("config: uniform takes n [shift]");
    return DiscreteLaw::uniform(count(arg(1))).shifted(shift(2));
  }
  if (kind == "point") {
    return DiscreteLaw::point_mass(static_cast<Token>(words.size() > 1 ? count(words[1]) : 1));
  }
  if (kind == "masses") {
    std::string rest;
    for (std::size_t i = 1; i < words.size(); ++i) rest += words[i];
    std::vector<double> masses;
    for (const auto& m : split(rest, ",")) masses.push_back(fraction(m));
    return DiscreteLaw::normalized(std::move(masses));
  }
  throw std::invalid_argument("config: unknown law kind '" + kind + "'");
}

LabConfig parse_config(const std::string& text) {
  pt::ptree tree;
  std::istringstream in(text);
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw std::invalid_argument(std::string("config: ") + e.message() + " at line " +
                                std::to_string(e.line()));
  }

  LabConfig cfg;
  cfg.text = text;
  const auto process = tree.get_child_optional("process");
  if (!process) throw std::invalid_argument("config: missing [process] section");

  if (auto b = process->get_optional<std::string>("beta")) cfg.beta = number(*b);
  if (auto s = process->get_optional<std::string>("seed")) cfg.seed = seed_value(boost::trim_copy(*s));

  const std::string variant = process->get<std::string>("variant", "iid");
  if (variant == "iid") {
    if (auto law = process->get_optional<std::string>("law")) {
      cfg.narration = ProcessSpec::iid(parse_law(*law));
    } else if (auto kmax = process->get_optional<std::string>("kmax")) {
      if (!cfg.beta) throw std::invalid_argument("config: kmax needs beta");
      cfg.narration = ProcessSpec::iid(DiscreteLaw::zipf(*cfg.beta, count(*kmax)));
    } else {
      throw std::invalid_argument("config: [process] needs law or beta + kmax");
    }
  } else if (variant == "markov") {
    const auto markov = tree.get_child_optional("markov");
    if (!markov) throw std::invalid_argument("config: markov variant needs a [markov] section");
    const auto rows = split(markov->get<std::string>("transition", ""), ";");
    const auto laws = split(markov->get<std::string>("emissions", ""), "|");
    if (auto states = markov->get_optional<std::string>("states")) {
      if (count(*states) != rows.size()) {
        throw std::invalid_argument("config: states disagrees with the transition rows");
      }
    }
    if (rows.empty() || laws.size() != rows.size()) {
      throw std::invalid_argument("config: need one emission law per transition row");
    }
    const auto n = static_cast<Eigen::Index>(rows.size());
    Eigen::MatrixXd p(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const auto entries = split(rows[static_cast<std::size_t>(i)], ", \t");
      if (static_cast<Eigen::Index>(entries.size()) != n) {
        throw std::invalid_argument("config: transition matrix must be square");
      }
      for (Eigen::Index j = 0; j < n; ++j) p(i, j) = fraction(entries[static_cast<std::size_t>(j)]);
    }
    std::vector<DiscreteLaw> emissions;
    for (const auto& l : laws) emissions.push_back(parse_law(l));
    cfg.narration = ProcessSpec::markov(std::move(p), std::move(emissions));
  } else {
    throw std::invalid_argument("config: unknown variant '" + variant + "'");
  }

  if (const auto sf = tree.get_child_optional("santa_fe")) {
    cfg.santa_fe = true;
    cfg.knowledge_entropy = number(sf->get<std::string>("knowledge_entropy", "1"));
    cfg.knowledge_seed = seed_value(boost::trim_copy(sf->get<std::string>("base_seed", "0")));
  }
  return cfg;
}

LabConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read config '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace powerlaw::cli
