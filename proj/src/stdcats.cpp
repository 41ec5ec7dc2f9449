#include "dtt/stdcats.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace dtt {

FinCat walking_arrow() {
  FinCat c;
  c.label = "2";
  c.objects = {"a", "b"};
  c.morphisms = {{"id_a", "a", "a"}, {"id_b", "b", "b"}, {"f", "a", "b"}};
  c.identity = {{"a", "id_a"}, {"b", "id_b"}};
  c.composition[{"id_a", "id_a"}] = "id_a";
  c.composition[{"id_b", "id_b"}] = "id_b";
  c.composition[{"id_a", "f"}] = "f";
  c.composition[{"f", "id_b"}] = "f";
  return c;
}

namespace {

// builds the free category on a linear chain of arrows
FinCat chain(const std::vector<ObjId>& objs, const std::vector<MorId>& arrows, std::string label) {
  FinCat c;
  c.label = std::move(label);
  c.objects = objs;
  for (const auto& o : objs) {
    c.morphisms.push_back({"id_" + o, o, o});
    c.identity[o] = "id_" + o;
  }
  for (size_t i = 0; i < arrows.size(); ++i) c.morphisms.push_back({arrows[i], objs[i], objs[i + 1]});
  // composites of consecutive arrow runs get concatenated names
  for (size_t i = 0; i < arrows.size(); ++i) {
    std::string name = arrows[i];
    for (size_t j = i + 1; j < arrows.size(); ++j) {
      name += arrows[j];
      c.morphisms.push_back({name, objs[i], objs[j + 1]});
    }
  }
  auto run_name = [&](size_t i, size_t j) {  // arrows i..j-1 composed
    std::string name;
    for (size_t k = i; k < j; ++k) name += arrows[k];
    return name.empty() ? c.identity.at(objs[i]) : name;
  };
  auto index_of = [&](const ObjId& o) {
    return static_cast<size_t>(std::find(objs.begin(), objs.end(), o) - objs.begin());
  };
  for (const auto& m1 : c.morphisms)
    for (const auto& m2 : c.morphisms) {
      if (m1.dst != m2.src) continue;
      c.composition[{m1.id, m2.id}] = run_name(index_of(m1.src), index_of(m2.dst));
    }
  return c;
}

}  // namespace

FinCat three_chain() { return chain({"a", "b", "c"}, {"f", "g"}, "3"); }

FinCat four_chain() { return chain({"a", "b", "c", "d"}, {"f", "g", "h"}, "4"); }

FinCat two_element_group() {
  FinCat c;
  c.label = "Z2";
  c.objects = {"o"};
  c.morphisms = {{"id_o", "o", "o"}, {"g", "o", "o"}};
  c.identity = {{"o", "id_o"}};
  c.composition[{"id_o", "id_o"}] = "id_o";
  c.composition[{"id_o", "g"}] = "g";
  c.composition[{"g", "id_o"}] = "g";
  c.composition[{"g", "g"}] = "id_o";
  return c;
}

ObjId finset_obj_name(const std::vector<std::string>& elems) {
  std::vector<std::string> sorted = elems;
  std::sort(sorted.begin(), sorted.end());
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < sorted.size(); ++i) {
    if (i) os << ",";
    os << sorted[i];
  }
  os << "}";
  return os.str();
}

MorId finset_mor_name(const ObjId& src, const ObjId& dst,
                      const std::vector<std::pair<std::string, std::string>>& graph) {
  auto sorted = graph;
  std::sort(sorted.begin(), sorted.end());
  std::ostringstream os;
  os << "fn(" << src << ">" << dst << "|";
  for (size_t i = 0; i < sorted.size(); ++i) {
    if (i) os << ",";
    os << sorted[i].first << ">" << sorted[i].second;
  }
  os << ")";
  return os.str();
}

std::vector<std::string> finset_elements(const ObjId& set_name) {
  if (set_name.size() < 2 || set_name.front() != '{' || set_name.back() != '}')
    throw std::runtime_error("not a set object name: " + set_name);
  std::vector<std::string> out;
  std::string body = set_name.substr(1, set_name.size() - 2);
  std::string cur;
  for (char ch : body) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<std::pair<std::string, std::string>> finset_graph(const MorId& mor_name) {
  auto bar = mor_name.find('|');
  if (mor_name.rfind("fn(", 0) != 0 || bar == std::string::npos || mor_name.back() != ')')
    throw std::runtime_error("not a function morphism name: " + mor_name);
  std::string body = mor_name.substr(bar + 1, mor_name.size() - bar - 2);
  std::vector<std::pair<std::string, std::string>> out;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) return;
    auto gt = cur.find('>');
    out.emplace_back(cur.substr(0, gt), cur.substr(gt + 1));
    cur.clear();
  };
  for (char ch : body) {
    if (ch == ',') {
      flush();
    } else {
      cur += ch;
    }
  }
  flush();
  return out;
}

FinCat finset_category(int bound, const std::vector<std::string>& atoms) {
  if (bound < 1) throw std::runtime_error("set universe bound must be at least 1");
  if (static_cast<int>(atoms.size()) < 1)
    throw std::runtime_error("set universe needs at least one atom");
  std::vector<std::string> sorted_atoms = atoms;
  std::sort(sorted_atoms.begin(), sorted_atoms.end());

  // all subsets of size <= bound, smallest first, lexicographic within a size
  std::vector<std::vector<std::string>> subsets;
  size_t n = sorted_atoms.size();
  std::vector<std::vector<std::string>> by_size(static_cast<size_t>(bound) + 1);
  for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
    std::vector<std::string> s;
    for (size_t i = 0; i < n; ++i)
      if (mask & (size_t{1} << i)) s.push_back(sorted_atoms[i]);
    if (static_cast<int>(s.size()) <= bound) subsets.push_back(s);
  }
  std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });

  FinCat c;
  c.label = "FinSet<=" + std::to_string(bound);
  std::map<ObjId, std::vector<std::string>> elems;
  for (const auto& s : subsets) {
    ObjId name = finset_obj_name(s);
    c.objects.push_back(name);
    elems[name] = s;
  }

  // all functions between every pair of subsets
  for (const auto& src : c.objects)
    for (const auto& dst : c.objects) {
      const auto& xs = elems[src];
      const auto& ys = elems[dst];
      if (xs.empty()) {
        c.morphisms.push_back({finset_mor_name(src, dst, {}), src, dst});
        continue;
      }
      if (ys.empty()) continue;  // no functions from nonempty to empty
      std::vector<size_t> pick(xs.size(), 0);
      while (true) {
        std::vector<std::pair<std::string, std::string>> graph;
        for (size_t i = 0; i < xs.size(); ++i) graph.emplace_back(xs[i], ys[pick[i]]);
        c.morphisms.push_back({finset_mor_name(src, dst, graph), src, dst});
        size_t i = 0;
        while (i < pick.size() && ++pick[i] == ys.size()) pick[i++] = 0;
        if (i == pick.size()) break;
      }
    }

  for (const auto& o : c.objects) {
    std::vector<std::pair<std::string, std::string>> graph;
    for (const auto& x : elems[o]) graph.emplace_back(x, x);
    c.identity[o] = finset_mor_name(o, o, graph);
  }

  for (const auto& m1 : c.morphisms)
    for (const auto& m2 : c.morphisms) {
      if (m1.dst != m2.src) continue;
      std::map<std::string, std::string> g2;
      for (const auto& [k, v] : finset_graph(m2.id)) g2[k] = v;
      std::vector<std::pair<std::string, std::string>> graph;
      for (const auto& [k, v] : finset_graph(m1.id)) graph.emplace_back(k, g2.at(v));
      c.composition[{m1.id, m2.id}] = finset_mor_name(m1.src, m2.dst, graph);
    }
  return c;
}

}  // namespace dtt
