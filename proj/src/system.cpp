#include "hcs/system.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hcs {
namespace {

std::string edge_str(const Edge& e) {
  return "(" + e.first.str() + "," + e.second.str() + ")";
}

void check_label_scheme(const std::vector<Vertex>& vertices) {
  int infinities = 0, plain = 0, signd = 0;
  for (const auto& v : vertices) {
    switch (v.kind()) {
      case Vertex::Kind::Infinity: ++infinities; break;
      case Vertex::Kind::Plain: ++plain; break;
      case Vertex::Kind::Signed: ++signd; break;
    }
  }
  if (infinities > 1) throw std::invalid_argument("more than one inf vertex");
  if (plain > 0 && signd > 0)
    throw std::invalid_argument("mixed plain and signed vertex labels");
}

}  // namespace

std::string ValidationReport::summary() const {
  if (ok) return "valid";
  std::ostringstream out;
  out << "invalid:";
  for (const auto& s : structural) out << " " << s << ";";
  out << " missing=" << missing_edges.size()
      << " duplicated=" << duplicated_edges.size();
  const std::size_t show = 4;
  for (std::size_t i = 0; i < missing_edges.size() && i < show; ++i)
    out << " -" << edge_str(missing_edges[i]);
  for (std::size_t i = 0; i < duplicated_edges.size() && i < show; ++i)
    out << " +" << edge_str(duplicated_edges[i]);
  return out.str();
}

CycleSystem CycleSystem::make(std::vector<Vertex> vertices, std::vector<Cycle> cycles) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw std::invalid_argument("repeated vertex in vertex list");
  if (vertices.size() < 3 || vertices.size() % 2 == 0)
    throw std::invalid_argument("vertex count must be odd and at least 3");
  check_label_scheme(vertices);

  CycleSystem s;
  s.vertices_ = std::move(vertices);

  std::set<Cycle> cycle_set;
  for (auto& c : cycles) {
    for (const auto& v : c.seq()) {
      if (!std::binary_search(s.vertices_.begin(), s.vertices_.end(), v))
        throw std::invalid_argument("cycle uses vertex " + v.str() +
                                    " not in the vertex list");
    }
    cycle_set.insert(std::move(c));
  }
  s.cycles_.assign(cycle_set.begin(), cycle_set.end());

  for (const auto& c : s.cycles_) {
    std::vector<int> ids;
    ids.reserve(c.seq().size());
    for (const auto& v : c.seq()) ids.push_back(s.vertex_id(v));
    s.cycle_ids_.push_back(canonical_listing(ids));
  }
  std::sort(s.cycle_ids_.begin(), s.cycle_ids_.end());
  return s;
}

CycleSystem CycleSystem::from_cycles(std::vector<Cycle> cycles) {
  std::set<Vertex> verts;
  for (const auto& c : cycles)
    for (const auto& v : c.seq()) verts.insert(v);
  return make(std::vector<Vertex>(verts.begin(), verts.end()), std::move(cycles));
}

int CycleSystem::vertex_id(const Vertex& v) const {
  const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return -1;
  return static_cast<int>(it - vertices_.begin());
}

bool CycleSystem::contains_ids(const std::vector<int>& canonical_cycle) const {
  return std::binary_search(cycle_ids_.begin(), cycle_ids_.end(), canonical_cycle);
}

ValidationReport validate(const CycleSystem& s) {
  ValidationReport rep;
  const int v = s.order();
  const int want_cycles = (v - 1) / 2;

  if (static_cast<int>(s.cycles().size()) != want_cycles)
    rep.structural.push_back("expected " + std::to_string(want_cycles) +
                             " cycles, got " + std::to_string(s.cycles().size()));
  for (const auto& c : s.cycles())
    if (c.length() != v)
      rep.structural.push_back("cycle of length " + std::to_string(c.length()) +
                               " is not Hamiltonian");

  // Multiset of covered edges on vertex ids.
  std::vector<int> count(static_cast<std::size_t>(v) * v, 0);
  for (const auto& ids : s.cycle_ids()) {
    const int len = static_cast<int>(ids.size());
    for (int i = 0; i < len; ++i) {
      int a = ids[i], b = ids[(i + 1) % len];
      if (a > b) std::swap(a, b);
      ++count[static_cast<std::size_t>(a) * v + b];
    }
  }
  for (int a = 0; a < v; ++a) {
    for (int b = a + 1; b < v; ++b) {
      const int k = count[static_cast<std::size_t>(a) * v + b];
      const Edge e{s.vertices()[a], s.vertices()[b]};
      if (k == 0) rep.missing_edges.push_back(e);
      if (k > 1) rep.duplicated_edges.push_back(e);
    }
  }
  rep.ok = rep.missing_edges.empty() && rep.duplicated_edges.empty();
  return rep;
}

CycleSystem parse_system(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;

  auto next_content_line = [&](std::string& out) {
    while (std::getline(in, line)) {
      ++lineno;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      if (line[first] == '#') continue;
      out = line;
      return true;
    }
    return false;
  };

  std::string header;
  if (!next_content_line(header))
    throw std::runtime_error("parse error: empty input, expected 'hcs v=<n>' header");
  std::istringstream hs(header);
  std::string word, vfield;
  hs >> word >> vfield;
  if (word != "hcs" || vfield.rfind("v=", 0) != 0)
    throw std::runtime_error("parse error: line " + std::to_string(lineno) +
                             ": expected 'hcs v=<n>' header");
  int v = 0;
  try {
    std::size_t pos = 0;
    v = std::stoi(vfield.substr(2), &pos);
    if (pos != vfield.size() - 2) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw std::runtime_error("parse error: line " + std::to_string(lineno) +
                             ": bad order '" + vfield + "'");
  }
  if (v < 3 || v % 2 == 0)
    throw std::runtime_error("parse error: order must be odd and at least 3");

  std::vector<Cycle> cycles;
  const int want = (v - 1) / 2;
  for (int i = 0; i < want; ++i) {
    std::string row;
    if (!next_content_line(row))
      throw std::runtime_error("parse error: expected " + std::to_string(want) +
                               " cycle lines, got " + std::to_string(i));
    std::istringstream rs(row);
    std::vector<Vertex> seq;
    std::string tok;
    while (rs >> tok) {
      try {
        seq.push_back(Vertex::parse(tok));
      } catch (const std::exception& e) {
        throw std::runtime_error("parse error: line " + std::to_string(lineno) +
                                 ": " + e.what());
      }
    }
    if (static_cast<int>(seq.size()) != v)
      throw std::runtime_error("parse error: line " + std::to_string(lineno) +
                               ": expected " + std::to_string(v) + " vertices, got " +
                               std::to_string(seq.size()));
    try {
      cycles.push_back(Cycle::canonical(std::move(seq)));
    } catch (const std::exception& e) {
      throw std::runtime_error("parse error: line " + std::to_string(lineno) + ": " +
                               e.what());
    }
  }
  std::string extra;
  if (next_content_line(extra))
    throw std::runtime_error("parse error: line " + std::to_string(lineno) +
                             ": unexpected content after cycle lines");

  CycleSystem s = CycleSystem::from_cycles(std::move(cycles));
  if (s.order() != v)
    throw std::runtime_error("parse error: header says v=" + std::to_string(v) +
                             " but cycles use " + std::to_string(s.order()) +
                             " distinct vertices");
  return s;
}

std::string serialize_system(const CycleSystem& s) {
  std::ostringstream out;
  out << "hcs v=" << s.order() << "\n";
  for (const auto& c : s.cycles()) {
    for (std::size_t i = 0; i < c.seq().size(); ++i) {
      if (i) out << ' ';
      out << c.seq()[i].str();
    }
    out << "\n";
  }
  return out.str();
}

CycleSystem relabel_indices(const CycleSystem& s, const std::map<int, int>& mapping) {
  std::set<int> present;
  for (const auto& v : s.vertices())
    if (!v.is_infinity()) present.insert(v.index());
  auto apply = [&](int idx) {
    const auto it = mapping.find(idx);
    return it == mapping.end() ? idx : it->second;
  };
  std::set<int> image;
  for (int idx : present) {
    const int to = apply(idx);
    if (!present.count(to))
      throw std::invalid_argument("relabel target " + std::to_string(to) +
                                  " is not a label of the system");
    image.insert(to);
  }
  if (image.size() != present.size())
    throw std::invalid_argument("relabel map is not injective on the label set");

  std::vector<Cycle> cycles;
  for (const auto& c : s.cycles()) {
    std::vector<Vertex> seq;
    seq.reserve(c.seq().size());
    for (const auto& v : c.seq()) {
      if (v.is_infinity())
        seq.push_back(v);
      else if (v.kind() == Vertex::Kind::Plain)
        seq.push_back(Vertex::plain(apply(v.index())));
      else
        seq.push_back(Vertex::with_sign(apply(v.index()), v.sign()));
    }
    cycles.push_back(Cycle::canonical(std::move(seq)));
  }
  return CycleSystem::make(s.vertices(), std::move(cycles));
}

}  // namespace hcs
