#include "hcs/doubling.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hcs {
namespace {

bool plain_scheme(const CycleSystem& s) {
  if (s.vertices().empty() || !s.vertices().front().is_infinity()) return false;
  return std::all_of(s.vertices().begin() + 1, s.vertices().end(),
                     [](const Vertex& v) { return v.kind() == Vertex::Kind::Plain; });
}

// inf-first sequences keyed by the unordered neighbor pair of inf.
std::map<std::pair<Vertex, Vertex>, std::vector<Vertex>> neighbor_map(
    const CycleSystem& s, std::vector<std::string>& defects, const char* tag) {
  std::map<std::pair<Vertex, Vertex>, std::vector<Vertex>> out;
  for (const auto& c : s.cycles()) {
    const auto& seq = c.seq();  // canonical: inf first when present
    if (!seq.front().is_infinity()) {
      defects.push_back(std::string(tag) + ": cycle does not pass through inf");
      continue;
    }
    const std::pair<Vertex, Vertex> key{seq[1], seq.back()};  // seq[1] < seq.back()
    if (!out.emplace(key, seq).second)
      defects.push_back(std::string(tag) + ": repeated inf-neighbor pair (" +
                        key.first.str() + "," + key.second.str() + ")");
  }
  return out;
}

std::vector<Vertex> orient_to(const std::vector<Vertex>& seq, const Vertex& first) {
  if (seq[1] == first) return seq;
  std::vector<Vertex> rev;
  rev.reserve(seq.size());
  rev.push_back(seq[0]);
  rev.insert(rev.end(), seq.rbegin(), seq.rend() - 1);
  return rev;
}

}  // namespace

Compatibility check_compatible(const CycleSystem& h1, const CycleSystem& h2,
                               const CycleSystem& h3) {
  Compatibility result;
  auto& defects = result.defects;

  if (h1.order() != h2.order() || h1.order() != h3.order()) {
    defects.push_back("systems have different orders");
    return result;
  }
  if (h1.vertices() != h2.vertices() || h1.vertices() != h3.vertices()) {
    defects.push_back("systems are on different vertex sets");
    return result;
  }
  if (!plain_scheme(h1)) {
    defects.push_back("systems must live on inf plus plain labels");
    return result;
  }

  auto m1 = neighbor_map(h1, defects, "first system");
  auto m2 = neighbor_map(h2, defects, "second system");
  auto m3 = neighbor_map(h3, defects, "third system");
  if (!defects.empty()) return result;

  DoublingInput input;
  for (const auto& [key, a] : m1) {
    const auto it2 = m2.find(key);
    const auto it3 = m3.find(key);
    if (it2 == m2.end() || it3 == m3.end()) {
      defects.push_back("inf-neighbor pair (" + key.first.str() + "," +
                        key.second.str() + ") has no match in all three systems");
      continue;
    }
    input.triples.push_back(
        {a, orient_to(it2->second, a[1]), orient_to(it3->second, a[1])});
  }
  for (const auto& [key, b] : m2) {
    if (!m1.count(key))
      defects.push_back("inf-neighbor pair (" + key.first.str() + "," +
                        key.second.str() + ") of the second system is unmatched");
  }
  for (const auto& [key, c] : m3) {
    if (!m1.count(key))
      defects.push_back("inf-neighbor pair (" + key.first.str() + "," +
                        key.second.str() + ") of the third system is unmatched");
  }
  if (!defects.empty()) return result;

  result.input = std::move(input);
  return result;
}

CycleSystem double_system(const DoublingInput& input) {
  if (input.triples.empty()) throw std::invalid_argument("no cycle triples");

  std::vector<Cycle> cycles;
  for (const auto& t : input.triples) {
    const std::size_t len = t.a.size();
    if (t.b.size() != len || t.c.size() != len || len < 3 || len % 2 == 0)
      throw std::invalid_argument("malformed cycle triple");
    for (const auto* seq : {&t.a, &t.b, &t.c}) {
      if (!(*seq)[0].is_infinity())
        throw std::invalid_argument("triple sequences must start at inf");
    }
    if (t.a[1] != t.b[1] || t.a[1] != t.c[1] || t.a.back() != t.b.back() ||
        t.a.back() != t.c.back())
      throw std::invalid_argument(
          "triple violates the neighbor condition: first/last entries differ");

    const std::size_t n2 = len - 1;
    auto pos = [&](const std::vector<Vertex>& seq, std::size_t j) {  // 1-based
      return Vertex::with_sign(seq[j].index(), +1);
    };
    auto neg = [&](const std::vector<Vertex>& seq, std::size_t j) {
      return Vertex::with_sign(seq[j].index(), -1);
    };

    // First type: + copy of a forward, - copy of b backward.
    std::vector<Vertex> t1;
    t1.reserve(2 * n2 + 1);
    t1.push_back(Vertex::infinity());
    for (std::size_t j = 1; j <= n2; ++j) t1.push_back(pos(t.a, j));
    for (std::size_t j = n2; j >= 1; --j) t1.push_back(neg(t.b, j));
    cycles.push_back(Cycle::canonical(std::move(t1)));

    // Second type: both signed copies of c, alternating by index parity.
    std::vector<Vertex> t2;
    t2.reserve(2 * n2 + 1);
    t2.push_back(Vertex::infinity());
    for (std::size_t j = n2; j >= 1; --j)
      t2.push_back(j % 2 == 0 ? pos(t.c, j) : neg(t.c, j));
    for (std::size_t j = 1; j <= n2; ++j)
      t2.push_back(j % 2 == 1 ? pos(t.c, j) : neg(t.c, j));
    cycles.push_back(Cycle::canonical(std::move(t2)));
  }

  CycleSystem s = CycleSystem::from_cycles(std::move(cycles));
  const auto rep = validate(s);
  if (!rep.ok)
    throw std::logic_error("doubled system failed validation: " + rep.summary());
  return s;
}

}  // namespace hcs
