#include "hcs/rotational.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hcs {
namespace {

void require_spanning(const FiniteGroup& gamma, const std::vector<int>& alpha) {
  if (static_cast<int>(alpha.size()) != gamma.order())
    throw std::invalid_argument("starter cycle must visit every group element once");
  std::vector<bool> seen(gamma.order(), false);
  for (int a : alpha) {
    if (a < 0 || a >= gamma.order() || seen[a])
      throw std::invalid_argument("starter cycle must visit every group element once");
    seen[a] = true;
  }
}

int require_lambda(const FiniteGroup& gamma) {
  const auto lam = gamma.unique_involution();
  if (!lam) throw std::invalid_argument("group " + gamma.name() + " is not binary");
  return *lam;
}

Cycle starter_cycle(const std::vector<int>& alpha) {
  std::vector<Vertex> seq;
  seq.reserve(alpha.size() + 1);
  seq.push_back(Vertex::infinity());
  for (int a : alpha) seq.push_back(Vertex::plain(a));
  return Cycle::canonical(std::move(seq));
}

Cycle translated_cycle(const FiniteGroup& gamma, const std::vector<int>& alpha, int t) {
  std::vector<Vertex> seq;
  seq.reserve(alpha.size() + 1);
  seq.push_back(Vertex::infinity());
  for (int a : alpha) seq.push_back(Vertex::plain(gamma.mul(a, t)));
  return Cycle::canonical(std::move(seq));
}

// splitmix64; stable across platforms, unlike <random> distributions.
std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void shuffled_order(std::vector<int>& order, std::uint64_t seed, int restart) {
  std::iota(order.begin(), order.end(), 0);
  std::uint64_t state = mix64(seed ^ mix64(static_cast<std::uint64_t>(restart) + 1));
  for (std::size_t i = order.size(); i > 1; --i) {
    state = mix64(state);
    std::swap(order[i - 1], order[state % i]);
  }
}

}  // namespace

Starter::Starter(FiniteGroup group, std::vector<int> alpha)
    : group_(std::move(group)), alpha_(std::move(alpha)) {
  require_spanning(group_, alpha_);
}

std::vector<int> Starter::half() const {
  return std::vector<int>(alpha_.begin(), alpha_.begin() + alpha_.size() / 2);
}

Cycle Starter::cycle() const { return starter_cycle(alpha_); }

StarterCheck verify_starter(const FiniteGroup& gamma, const std::vector<int>& alpha) {
  const int lam = require_lambda(gamma);
  require_spanning(gamma, alpha);

  StarterCheck check;
  if (starter_cycle(alpha) != translated_cycle(gamma, alpha, lam))
    check.defects.push_back("A*lambda differs from A");

  const int n = gamma.order() / 2;
  std::vector<bool> covered(gamma.order(), false);
  for (int i = 0; i + 1 < n; ++i) {
    const int d1 = gamma.mul(alpha[i], gamma.inv(alpha[i + 1]));
    const int d2 = gamma.mul(alpha[i + 1], gamma.inv(alpha[i]));
    for (int d : {d1, d2}) {
      if (d == gamma.identity() || d == lam) {
        check.defects.push_back("difference at position " + std::to_string(i) +
                                " lies in {1, lambda}");
      } else if (covered[d]) {
        check.defects.push_back("difference at position " + std::to_string(i) +
                                " repeats an earlier one");
      } else {
        covered[d] = true;
      }
    }
  }
  for (int x = 0; x < gamma.order(); ++x) {
    if (x == gamma.identity() || x == lam) continue;
    if (!covered[x])
      check.defects.push_back("element " + std::to_string(x) +
                              " is not covered by the half differences");
  }

  check.ok = check.defects.empty();
  return check;
}

CycleSystem develop(const FiniteGroup& gamma, const std::vector<int>& alpha) {
  const auto check = verify_starter(gamma, alpha);
  if (!check.ok) {
    std::ostringstream msg;
    msg << "starter fails verification:";
    for (const auto& d : check.defects) msg << " " << d << ";";
    throw std::invalid_argument(msg.str());
  }

  const int lam = *gamma.unique_involution();
  std::vector<Cycle> cycles;
  std::vector<bool> taken(gamma.order(), false);
  for (int x = 0; x < gamma.order(); ++x) {
    if (taken[x]) continue;
    taken[x] = taken[gamma.mul(x, lam)] = true;
    cycles.push_back(translated_cycle(gamma, alpha, x));
  }

  CycleSystem s = CycleSystem::from_cycles(std::move(cycles));
  const auto rep = validate(s);
  if (!rep.ok)
    throw std::logic_error("developed system failed validation: " + rep.summary());
  return s;
}

StarterSearchResult find_starter(const FiniteGroup& gamma, const SearchBudget& budget) {
  const int lam = require_lambda(gamma);
  if (budget.max_nodes == 0 || budget.restarts <= 0)
    throw std::invalid_argument("search budget fields must be positive");

  const int n2 = gamma.order();
  const int n = n2 / 2;
  StarterSearchResult result;

  const std::uint64_t per_restart =
      std::max<std::uint64_t>(1, budget.max_nodes / static_cast<std::uint64_t>(budget.restarts));

  std::vector<int> order(n2);
  std::vector<int> half(n);
  std::vector<bool> coset_used(n2, false);
  std::vector<bool> diff_used(n2, false);

  for (int restart = 0; restart < budget.restarts; ++restart) {
    shuffled_order(order, budget.seed, restart);
    std::fill(coset_used.begin(), coset_used.end(), false);
    std::fill(diff_used.begin(), diff_used.end(), false);

    half[0] = gamma.identity();
    coset_used[gamma.identity()] = coset_used[lam] = true;

    std::uint64_t nodes = 0;
    bool capped = false;

    // Depth d extends half[d-1] by one coset representative.
    auto dfs = [&](auto&& self, int depth) -> bool {
      if (depth == n) return true;
      for (int y : order) {
        if (coset_used[y]) continue;
        const int d1 = gamma.mul(half[depth - 1], gamma.inv(y));
        if (d1 == gamma.identity() || d1 == lam) continue;
        const int d2 = gamma.inv(d1);
        if (diff_used[d1] || diff_used[d2]) continue;
        if (++nodes > per_restart) { capped = true; return false; }
        half[depth] = y;
        coset_used[y] = coset_used[gamma.mul(y, lam)] = true;
        diff_used[d1] = diff_used[d2] = true;
        if (self(self, depth + 1)) return true;
        if (capped) return false;
        coset_used[y] = coset_used[gamma.mul(y, lam)] = false;
        diff_used[d1] = diff_used[d2] = false;
      }
      return false;
    };

    const bool found = dfs(dfs, 1);
    result.nodes += nodes;

    if (found) {
      std::vector<int> alpha(half.begin(), half.end());
      for (int i = n - 1; i >= 0; --i) alpha.push_back(gamma.mul(half[i], lam));
      const auto check = verify_starter(gamma, alpha);
      if (!check.ok) throw std::logic_error("search produced an invalid starter");
      result.starter = Starter(gamma, std::move(alpha));
      return result;
    }
    if (!capped) {
      // Whole space explored: no starter exists for this group at all.
      result.exhausted_space = true;
      return result;
    }
  }
  return result;
}

std::string serialize_starter(const Starter& s) {
  std::ostringstream out;
  out << "starter group=" << s.group().name() << "\n";
  out << "inf";
  for (int a : s.alpha()) out << ' ' << a;
  out << "\n";
  return out.str();
}

Starter parse_starter(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::string> content;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    content.push_back(line);
  }
  if (content.size() != 2)
    throw std::runtime_error("parse error: starter file needs a header and a cycle line");

  std::istringstream hs(content[0]);
  std::string word, gfield;
  hs >> word >> gfield;
  if (word != "starter" || gfield.rfind("group=", 0) != 0)
    throw std::runtime_error("parse error: expected 'starter group=<spec>' header");
  FiniteGroup gamma = parse_group_spec(gfield.substr(6));

  std::istringstream cs(content[1]);
  std::string tok;
  if (!(cs >> tok) || tok != "inf")
    throw std::runtime_error("parse error: starter cycle must begin with inf");
  std::vector<int> alpha;
  while (cs >> tok) {
    try {
      std::size_t pos = 0;
      const int v = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument("trailing");
      alpha.push_back(v);
    } catch (const std::exception&) {
      throw std::runtime_error("parse error: bad element index '" + tok + "'");
    }
  }
  return Starter(std::move(gamma), std::move(alpha));
}

}  // namespace hcs
