#include "mapcensus/cayley.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace mapcensus {

std::vector<CayleyIssue> check_cayley_set(const FiniteGroup& g, std::span<const Element> s) {
  std::vector<CayleyIssue> issues;
  std::vector<Element> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (Element x : sorted) {
    if (x >= g.order()) {
      issues.push_back({Reason::OutOfRange, "element " + std::to_string(x) + " is not in a group of order " +
                                                std::to_string(g.order())});
    }
  }
  if (!issues.empty()) return issues;
  if (std::binary_search(sorted.begin(), sorted.end(), Element{0}))
    issues.push_back({Reason::ContainsIdentity, "S contains the identity 0"});
  for (Element x : sorted) {
    if (!std::binary_search(sorted.begin(), sorted.end(), g.inverse(x))) {
      issues.push_back({Reason::NotInverseClosed, "inverse " + std::to_string(g.inverse(x)) + " of " +
                                                      std::to_string(x) + " is missing"});
      break;
    }
  }
  if (sorted.size() < 2)
    issues.push_back({Reason::TooSmall, "|S| = " + std::to_string(sorted.size()) + " < 2"});
  auto sub = generated_subgroup(g, sorted);
  if (sub.size() != g.order()) {
    Element witness = 0;
    for (Element x = 0; x < g.order(); ++x)
      if (!std::binary_search(sub.begin(), sub.end(), x)) {
        witness = x;
        break;
      }
    issues.push_back({Reason::NotGenerating, "<S> has order " + std::to_string(sub.size()) + "; element " +
                                                 std::to_string(witness) + " is not generated"});
  }
  return issues;
}

CayleySet validate_cayley_set(const FiniteGroup& g, std::span<const Element> s) {
  auto issues = check_cayley_set(g, s);
  if (!issues.empty()) {
    std::string msg;
    for (const auto& i : issues) {
      if (!msg.empty()) msg += "; ";
      msg += std::string(reason_token(i.reason)) + ": " + i.message;
    }
    throw Error(issues.front().reason, msg);
  }
  CayleySet out;
  out.members.assign(s.begin(), s.end());
  std::sort(out.members.begin(), out.members.end());
  out.members.erase(std::unique(out.members.begin(), out.members.end()), out.members.end());
  out.rank.assign(g.order(), -1);
  for (std::size_t i = 0; i < out.members.size(); ++i) out.rank[out.members[i]] = static_cast<std::int32_t>(i);
  return out;
}

bool Graph::adjacent(std::uint32_t u, std::uint32_t v) const {
  const auto& a = adjacency[u];
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> Graph::edges() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t u = 0; u < vertex_count; ++u)
    for (auto v : adjacency[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::size_t Graph::edge_count() const {
  std::size_t d = 0;
  for (const auto& a : adjacency) d += a.size();
  return d / 2;
}

Graph build_cayley_graph(const FiniteGroup& g, const CayleySet& s) {
  Graph out;
  out.vertex_count = g.order();
  out.adjacency.resize(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    for (Element t : s.members) out.adjacency[x].push_back(g.mul(t, x));
    std::sort(out.adjacency[x].begin(), out.adjacency[x].end());
  }
  return out;
}

FlagSpace::FlagSpace(Perm alpha, Perm beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {
  auto bad = [](const std::string& m) { throw Error(Reason::AxiomViolation, "flag space: " + m); };
  std::size_t n = alpha_.size();
  if (n == 0 || n % 4 != 0) bad("flag count must be a positive multiple of 4");
  if (beta_.size() != n) bad("alpha and beta have different sizes");
  if (!is_permutation(alpha_) || !is_permutation(beta_)) bad("alpha and beta must be permutations");
  for (std::uint32_t x = 0; x < n; ++x) {
    if (alpha_[x] == x || alpha_[alpha_[x]] != x) bad("alpha is not a fixed-point-free involution at " + std::to_string(x));
    if (beta_[x] == x || beta_[beta_[x]] != x) bad("beta is not a fixed-point-free involution at " + std::to_string(x));
    if (alpha_[x] == beta_[x]) bad("alpha and beta agree at flag " + std::to_string(x));
    std::uint32_t ab = alpha_[beta_[x]];
    if (ab == x) bad("alpha*beta fixes flag " + std::to_string(x));
    if (beta_[alpha_[ab]] != x) bad("alpha and beta do not commute at flag " + std::to_string(x));
  }
  index();
}

void FlagSpace::index() {
  std::size_t n = alpha_.size();
  quad_of_.assign(n, UINT32_MAX);
  dart_of_.assign(n, UINT32_MAX);
  quads_.clear();
  std::uint32_t darts = 0;
  for (std::uint32_t x = 0; x < n; ++x) {
    if (dart_of_[x] == UINT32_MAX) {
      dart_of_[x] = dart_of_[alpha_[x]] = darts++;
    }
    if (quad_of_[x] != UINT32_MAX) continue;
    std::array<std::uint32_t, 4> q{x, alpha_[x], beta_[x], alpha_[beta_[x]]};
    auto id = static_cast<std::uint32_t>(quads_.size());
    for (auto y : q) {
      if (quad_of_[y] != UINT32_MAX) throw Error(Reason::AxiomViolation, "flag space: degenerate quadricell");
      quad_of_[y] = id;
    }
    quads_.push_back(q);
  }
}

Element FlagSpace::vertex_of(std::uint32_t x) const {
  if (!labeling_) throw Error(Reason::NotCayleyLabeled, "flag space has no Cayley labeling");
  return static_cast<Element>(x / (2 * labeling_->set.size()));
}

FlagSpace build_flag_space(std::shared_ptr<const FiniteGroup> g, const CayleySet& s) {
  std::size_t k = s.size();
  std::size_t n = 2 * g->order() * k;
  Perm alpha(n), beta(n);
  for (Element x = 0; x < g->order(); ++x) {
    for (std::size_t r = 0; r < k; ++r) {
      Element t = s.members[r];
      Element y = g->mul(t, x);
      auto rinv = static_cast<std::size_t>(s.rank[g->inverse(t)]);
      for (std::uint32_t sg = 0; sg < 2; ++sg) {
        std::uint32_t id = static_cast<std::uint32_t>(2 * (x * k + r) + sg);
        alpha[id] = id ^ 1u;
        beta[id] = static_cast<std::uint32_t>(2 * (y * k + rinv) + sg);
      }
    }
  }
  FlagSpace f(std::move(alpha), std::move(beta));
  f.labeling_ = CayleyLabeling{std::move(g), s};
  return f;
}

std::uint32_t flag_id(const FlagSpace& f, Element g, Element s, Sign sign) {
  const auto& lab = f.labeling();
  if (!lab) throw Error(Reason::NotCayleyLabeled, "flag space has no Cayley labeling");
  if (g >= lab->group->order()) throw Error(Reason::OutOfRange, "element " + std::to_string(g) + " out of range");
  if (!lab->set.contains(s)) throw Error(Reason::OutOfRange, "element " + std::to_string(s) + " is not in S");
  return static_cast<std::uint32_t>(2 * (g * lab->set.size() + static_cast<std::size_t>(lab->set.rank[s])) +
                                    (sign == Sign::minus ? 1 : 0));
}

Flag flag_decode(const FlagSpace& f, std::uint32_t id) {
  const auto& lab = f.labeling();
  if (!lab) throw Error(Reason::NotCayleyLabeled, "flag space has no Cayley labeling");
  if (id >= f.flag_count()) throw Error(Reason::OutOfRange, "flag id " + std::to_string(id) + " out of range");
  std::size_t k = lab->set.size();
  std::size_t dart = id / 2;
  return Flag{static_cast<Element>(dart / k), lab->set.members[dart % k], (id & 1u) ? Sign::minus : Sign::plus};
}

CayleyInstance make_cayley_instance(FiniteGroup g, std::span<const Element> s) {
  CayleyInstance inst;
  inst.group = std::make_shared<const FiniteGroup>(std::move(g));
  inst.set = validate_cayley_set(*inst.group, s);
  inst.graph = build_cayley_graph(*inst.group, inst.set);
  inst.flags = std::make_shared<const FlagSpace>(build_flag_space(inst.group, inst.set));
  return inst;
}

std::vector<Element> read_cayset(std::istream& in) {
  std::string tag;
  long long k = 0;
  // skip comments
  std::string content, line;
  while (std::getline(in, line)) {
    auto pos = line.find('#');
    if (pos != std::string::npos) line.erase(pos);
    content += line + '\n';
  }
  std::istringstream ss(content);
  if (!(ss >> tag >> k) || tag != "cayset" || k < 0) throw Error(Reason::ParseError, "expected header 'cayset <k>'");
  std::vector<Element> out;
  for (long long i = 0; i < k; ++i) {
    long long v;
    if (!(ss >> v)) throw Error(Reason::ParseError, "cayset lists fewer than " + std::to_string(k) + " elements");
    if (v < 0) throw Error(Reason::ParseError, "negative element index");
    out.push_back(static_cast<Element>(v));
  }
  std::string extra;
  if (ss >> extra) throw Error(Reason::ParseError, "unexpected trailing token '" + extra + "'");
  return out;
}

std::vector<Element> load_cayset(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(Reason::ParseError, "cannot open cayset file " + path);
  return read_cayset(f);
}

void write_cayset(std::ostream& out, std::span<const Element> s) {
  out << "cayset " << s.size() << '\n';
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
  out << '\n';
}

}  // namespace mapcensus
