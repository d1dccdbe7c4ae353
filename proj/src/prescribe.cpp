#include "hcs/prescribe.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hcs {
namespace {

constexpr const char* kRigid13[] = {
    "inf 0+ 1+ 5+ 2+ 4+ 3+ 3- 1- 2- 5- 4- 0-",
    "inf 1+ 2+ 0+ 3+ 5+ 4+ 4- 2- 3- 0- 5- 1-",
    "inf 2+ 3+ 1+ 4+ 0+ 5+ 5- 3- 4- 1- 0- 2-",
    "0+ 4- 5+ 2- 1+ 3- inf 3+ 1- 2+ 5- 4+ 0-",
    "1+ 5- 0+ 3- 2+ 4- inf 4+ 2- 3+ 0- 5+ 1-",
    "2+ 0- 1+ 4- 3+ 5- inf 5+ 3- 4+ 1- 0+ 2-",
};

std::vector<Vertex> parse_tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<Vertex> seq;
  std::string tok;
  while (in >> tok) seq.push_back(Vertex::parse(tok));
  return seq;
}

std::string alpha_line(const std::vector<int>& alpha) {
  std::ostringstream out;
  out << "inf";
  for (int a : alpha) out << ' ' << a;
  return out.str();
}

// Oriented inf-first listing of the translate A*t, on plain vertices.
std::vector<Vertex> translate_listing(const FiniteGroup& g, const std::vector<int>& alpha,
                                      int t) {
  std::vector<Vertex> seq;
  seq.reserve(alpha.size() + 1);
  seq.push_back(Vertex::infinity());
  for (int a : alpha) seq.push_back(Vertex::plain(g.mul(a, t)));
  return seq;
}

}  // namespace

CycleSystem hardcoded_rigid_hcs13() {
  std::vector<Cycle> cycles;
  for (const char* line : kRigid13)
    cycles.push_back(Cycle::canonical(parse_tokens(line)));
  CycleSystem s = CycleSystem::from_cycles(std::move(cycles));
  const auto rep = validate(s);
  if (!rep.ok) throw std::logic_error("rigid order-13 system is corrupt: " + rep.summary());
  return s;
}

ModifiedStarter modified_starter(const FiniteGroup& gamma, const std::vector<int>& alpha) {
  const auto lam_opt = gamma.unique_involution();
  if (!lam_opt) throw std::invalid_argument("group " + gamma.name() + " is not binary");
  const int lam = *lam_opt;
  const int n = gamma.order() / 2;
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("modified starter needs |group| = 2n with n odd >= 3");
  const auto check = verify_starter(gamma, alpha);
  if (!check.ok) throw std::invalid_argument("modified starter needs a verified starter");

  const std::vector<int> x(alpha.begin(), alpha.begin() + n);
  auto bar = [&](int e) { return gamma.mul(e, lam); };

  const int d12 = gamma.mul(x[0], gamma.inv(x[1]));
  const int d21 = gamma.mul(x[1], gamma.inv(x[0]));
  const std::set<int> target{gamma.mul(d12, lam), gamma.mul(d21, lam)};

  int k = -1;
  for (int kk = 2; kk <= n - 1; ++kk) {  // 1-based index into the half
    if (target.count(gamma.mul(x[kk - 1], gamma.inv(x[kk])))) { k = kk; break; }
  }
  if (k < 0)
    throw std::runtime_error("no admissible swap index for starter " + alpha_line(alpha));

  ModifiedStarter result;
  result.k = k;
  auto& out = result.alpha;
  out.reserve(2 * n);
  out.push_back(x[0]);
  for (int i = 2; i <= k; ++i) out.push_back(bar(x[i - 1]));
  for (int i = k + 1; i <= n; ++i) out.push_back(x[i - 1]);
  for (int i = n; i >= k + 1; --i) out.push_back(bar(x[i - 1]));
  for (int i = k; i >= 2; --i) out.push_back(x[i - 1]);
  out.push_back(bar(x[0]));

  const auto recheck = verify_starter(gamma, out);
  if (!recheck.ok)
    throw std::logic_error("modified starter fails verification for " + alpha_line(alpha));
  return result;
}

std::string OddPipelineTrace::report() const {
  std::ostringstream out;
  out << "pipeline: odd-order group\n";
  out << "group G: " << group_name << "\n";
  if (!starter) {
    out << "result: fixed rigid order-13 system\n";
    return out.str();
  }
  out << "gamma = Z2 x G: " << gamma_name << "\n";
  out << "starter C: " << alpha_line(starter->alpha()) << "\n";
  out << "swap index k: " << k << "\n";
  out << "modified starter C*: " << alpha_line(modified_alpha) << "\n";
  out << "doubled (C*-system, C-system, C-system)\n";
  return out.str();
}

OddConstruction construct_odd(const FiniteGroup& g, const SearchBudget& budget) {
  if (g.order() % 2 == 0)
    throw std::invalid_argument("construct_odd needs a group of odd order, got " + g.name());

  OddPipelineTrace trace;
  trace.group_name = g.name();

  if (g.order() == 1) return {hardcoded_rigid_hcs13(), std::move(trace)};

  const FiniteGroup gamma = direct_product(make_cyclic(2), g);
  trace.gamma_name = gamma.name();

  auto search = find_starter(gamma, budget);
  if (!search.starter)
    throw std::runtime_error("starter search for " + gamma.name() + " failed (nodes=" +
                             std::to_string(search.nodes) + ")");
  trace.starter = search.starter;
  const auto& c = search.starter->alpha();

  auto modified = modified_starter(gamma, c);
  trace.k = modified.k;
  trace.modified_alpha = modified.alpha;

  const CycleSystem h = develop(gamma, c);
  const CycleSystem h_star = develop(gamma, modified.alpha);

  const auto compat = check_compatible(h_star, h, h);
  if (!compat.ok()) {
    std::ostringstream msg;
    msg << "developed systems are incompatible:";
    for (const auto& d : compat.defects) msg << " " << d << ";";
    throw std::logic_error(msg.str());
  }
  return {double_system(*compat.input), std::move(trace)};
}

EdgeSwap swap_edges(const FiniteGroup& g, int d, const std::vector<int>& alpha) {
  if (d < 3 || d % 2 == 0) throw std::invalid_argument("d must be odd and at least 3");
  if (g.order() % d != 0)
    throw std::invalid_argument("group order is not a multiple of d");
  const auto lam_opt = g.unique_involution();
  if (!lam_opt) throw std::invalid_argument("group " + g.name() + " is not binary");
  const int lam = *lam_opt;
  const int h_order = g.order() / d;

  const int half_len = g.order() / 2;
  const std::vector<int> half(alpha.begin(), alpha.begin() + half_len);
  auto bar = [&](int e) { return g.mul(e, lam); };

  // H sits in G as the indices divisible by d. Scan its order-4 elements by
  // index; the half differences cover G minus {1, lambda}, so one of x, x^-1
  // occurs as a left difference for the first suitable x.
  EdgeSwap swap;
  for (int h = 0; h < h_order && swap.j < 0; ++h) {
    const int x = h * d;
    if (g.element_order(x) != 4) continue;
    for (int j = 0; j + 1 < half_len; ++j) {
      if (g.mul(half[j + 1], g.inv(half[j])) == x) {
        swap.x = x;
        swap.j = j;
        break;
      }
    }
  }
  if (swap.j < 0)
    throw std::runtime_error("no order-4 element of the H factor occurs as a half difference");

  auto& out = swap.swapped;
  out.reserve(2 * half_len);
  for (int i = 0; i <= swap.j; ++i) out.push_back(half[i]);
  for (int i = swap.j + 1; i < half_len; ++i) out.push_back(bar(half[i]));
  for (int i = half_len - 1; i >= swap.j + 1; --i) out.push_back(half[i]);
  for (int i = swap.j; i >= 0; --i) out.push_back(bar(half[i]));
  return swap;
}

std::string BinaryPipelineTrace::report() const {
  std::ostringstream out;
  out << "pipeline: binary group times odd cycle\n";
  out << "group H: " << h_name << "\n";
  out << "d: " << d << "\n";
  out << "G = H x Zd: " << group_name << "\n";
  if (starter) out << "starter A: " << alpha_line(starter->alpha()) << "\n";
  out << "swapped element x: " << swap.x << "\n";
  out << "swap position j: " << swap.j << "\n";
  out << "reknit base cycle: " << alpha_line(swap.swapped) << "\n";
  return out.str();
}

BinaryConstruction construct_binary(const FiniteGroup& h, int d, const SearchBudget& budget) {
  if (!h.is_binary() || h.order() % 4 != 0)
    throw std::invalid_argument("construct_binary needs a binary group of order 4m, got " +
                                h.name());
  if (d < 3 || d % 2 == 0) throw std::invalid_argument("d must be odd and at least 3");

  BinaryPipelineTrace trace;
  trace.h_name = h.name();
  trace.d = d;

  const FiniteGroup g = direct_product(h, make_cyclic(d));
  trace.group_name = g.name();

  auto search = find_starter(g, budget);
  if (!search.starter)
    throw std::runtime_error("starter search for " + g.name() + " failed (nodes=" +
                             std::to_string(search.nodes) + ")");
  trace.starter = search.starter;
  const auto& alpha = search.starter->alpha();

  trace.swap = swap_edges(g, d, alpha);

  // Transversal of {1, lambda} inside the H factor, least index per coset.
  std::vector<int> h_reps;
  std::vector<bool> taken(h.order(), false);
  const int lam_h = *h.unique_involution();
  for (int x = 0; x < h.order(); ++x) {
    if (taken[x]) continue;
    taken[x] = taken[h.mul(x, lam_h)] = true;
    h_reps.push_back(x * d);  // as a G index
  }

  const int z = 1;  // generator of the Z_d factor: (identity, 1)
  std::vector<Cycle> cycles;
  auto push_orbit = [&](const std::vector<int>& base) {
    for (int rep : h_reps) cycles.push_back(Cycle::canonical(translate_listing(g, base, rep)));
  };

  int zi = z;
  for (int i = 1; i < d; ++i) {
    std::vector<int> ai(alpha.size());
    for (std::size_t t = 0; t < alpha.size(); ++t) ai[t] = g.mul(alpha[t], zi);
    push_orbit(ai);
    zi = g.mul(zi, z);
  }
  push_orbit(trace.swap.swapped);

  CycleSystem s = CycleSystem::from_cycles(std::move(cycles));
  const auto rep = validate(s);
  if (!rep.ok)
    throw std::logic_error("assembled system failed validation: " + rep.summary());
  return {std::move(s), std::move(trace)};
}

}  // namespace hcs
