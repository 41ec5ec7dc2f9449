#include "dtt/fincat.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dtt {

bool FinCat::has_object(const ObjId& o) const {
  return std::find(objects.begin(), objects.end(), o) != objects.end();
}

const Morphism* FinCat::find(const MorId& m) const {
  for (const auto& mor : morphisms)
    if (mor.id == m) return &mor;
  return nullptr;
}

const Morphism& FinCat::at(const MorId& m) const {
  const Morphism* p = find(m);
  if (!p) throw std::runtime_error("no morphism '" + m + "' in category " + label);
  return *p;
}

bool FinCat::composable(const MorId& f, const MorId& g) const {
  const Morphism* pf = find(f);
  const Morphism* pg = find(g);
  return pf && pg && pf->dst == pg->src;
}

MorId FinCat::then(const MorId& f, const MorId& g) const {
  auto it = composition.find({f, g});
  if (it == composition.end())
    throw std::runtime_error("missing composite '" + f + "' then '" + g + "' in category " + label);
  return it->second;
}

std::vector<MorId> FinCat::hom_set(const ObjId& x, const ObjId& y) const {
  std::vector<MorId> out;
  for (const auto& m : morphisms)
    if (m.src == x && m.dst == y) out.push_back(m.id);
  return out;
}

bool FinCat::operator==(const FinCat& o) const {
  return objects == o.objects && morphisms == o.morphisms && identity == o.identity &&
         composition == o.composition;
}

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  for (const auto& v : violations) os << v << "\n";
  return os.str();
}

ValidationReport validate_category(const FinCat& c) {
  ValidationReport rep;
  auto complain = [&](const std::string& s) { rep.violations.push_back(s); };

  std::set<ObjId> objs(c.objects.begin(), c.objects.end());
  if (objs.size() != c.objects.size()) complain("duplicate object identifiers");
  std::set<MorId> mors;
  for (const auto& m : c.morphisms) {
    if (!mors.insert(m.id).second) complain("duplicate morphism identifier '" + m.id + "'");
    if (!objs.count(m.src)) complain("morphism '" + m.id + "' has undeclared source '" + m.src + "'");
    if (!objs.count(m.dst)) complain("morphism '" + m.id + "' has undeclared target '" + m.dst + "'");
  }
  for (const auto& o : c.objects) {
    auto it = c.identity.find(o);
    if (it == c.identity.end()) {
      complain("object '" + o + "' has no identity morphism");
      continue;
    }
    const Morphism* id = c.find(it->second);
    if (!id)
      complain("identity of '" + o + "' names missing morphism '" + it->second + "'");
    else if (id->src != o || id->dst != o)
      complain("identity of '" + o + "' is not an endomorphism of it");
  }
  for (const auto& [o, m] : c.identity)
    if (!objs.count(o)) complain("identity table mentions undeclared object '" + o + "'");

  // composition closed and total on composable pairs
  for (const auto& f : c.morphisms) {
    for (const auto& g : c.morphisms) {
      bool comp = f.dst == g.src;
      auto it = c.composition.find({f.id, g.id});
      if (comp && it == c.composition.end())
        complain("missing composite '" + f.id + "' then '" + g.id + "'");
      if (!comp && it != c.composition.end())
        complain("composite recorded for non-composable pair ('" + f.id + "','" + g.id + "')");
      if (comp && it != c.composition.end()) {
        const Morphism* h = c.find(it->second);
        if (!h)
          complain("composite of ('" + f.id + "','" + g.id + "') names missing morphism");
        else if (h->src != f.src || h->dst != g.dst)
          complain("composite of ('" + f.id + "','" + g.id + "') has wrong endpoints: got '" +
                   h->id + "'");
      }
    }
  }
  if (!rep.ok()) return rep;

  // unit laws
  for (const auto& f : c.morphisms) {
    if (c.then(c.identity.at(f.src), f.id) != f.id)
      complain("left unit law fails at '" + f.id + "'");
    if (c.then(f.id, c.identity.at(f.dst)) != f.id)
      complain("right unit law fails at '" + f.id + "'");
  }
  // associativity over all composable triples
  for (const auto& f : c.morphisms)
    for (const auto& g : c.morphisms) {
      if (f.dst != g.src) continue;
      for (const auto& h : c.morphisms) {
        if (g.dst != h.src) continue;
        if (c.then(c.then(f.id, g.id), h.id) != c.then(f.id, c.then(g.id, h.id)))
          complain("associativity fails on ('" + f.id + "','" + g.id + "','" + h.id + "')");
      }
    }
  return rep;
}

FinCat opposite(const FinCat& c) {
  FinCat o;
  o.label = c.label;
  o.objects = c.objects;
  for (const auto& m : c.morphisms) o.morphisms.push_back({m.id, m.dst, m.src});
  o.identity = c.identity;
  for (const auto& [pair, h] : c.composition) o.composition[{pair.second, pair.first}] = h;
  return o;
}

FinCat discrete_category(std::vector<ObjId> objects, std::string label) {
  FinCat c;
  c.label = std::move(label);
  c.objects = std::move(objects);
  for (const auto& o : c.objects) {
    MorId id = "id_" + o;
    c.morphisms.push_back({id, o, o});
    c.identity[o] = id;
    c.composition[{id, id}] = id;
  }
  return c;
}

FinCat terminal_category() {
  FinCat c = discrete_category({"*"});
  c.label = "1";
  return c;
}

std::optional<InverseTable> groupoid_inverses(const FinCat& c) {
  InverseTable table;
  for (const auto& f : c.morphisms) {
    bool found = false;
    for (const auto& g : c.morphisms) {
      if (f.dst != g.src || g.dst != f.src) continue;
      if (c.then(f.id, g.id) == c.identity.at(f.src) &&
          c.then(g.id, f.id) == c.identity.at(f.dst)) {
        table[f.id] = g.id;
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  return table;
}

bool is_groupoid(const FinCat& c) { return groupoid_inverses(c).has_value(); }

MorId inverse_morphism(const FinCat& c, const MorId& f) {
  auto table = groupoid_inverses(c);
  if (!table) throw std::runtime_error("inverse requested in non-groupoid category " + c.label);
  auto it = table->find(f);
  if (it == table->end()) throw std::runtime_error("no inverse for morphism '" + f + "'");
  return it->second;
}

ObjId Functor::on_obj(const ObjId& o) const {
  auto it = obj_map.find(o);
  if (it == obj_map.end()) throw std::runtime_error("functor has no image for object '" + o + "'");
  return it->second;
}

MorId Functor::on_mor(const MorId& m) const {
  auto it = mor_map.find(m);
  if (it == mor_map.end()) throw std::runtime_error("functor has no image for morphism '" + m + "'");
  return it->second;
}

ValidationReport validate_functor(const Functor& f) {
  ValidationReport rep;
  auto complain = [&](const std::string& s) { rep.violations.push_back(s); };
  for (const auto& o : f.dom.objects) {
    auto it = f.obj_map.find(o);
    if (it == f.obj_map.end()) {
      complain("object '" + o + "' has no image");
      continue;
    }
    if (!f.cod.has_object(it->second))
      complain("image of object '" + o + "' is not in the codomain");
  }
  for (const auto& m : f.dom.morphisms) {
    auto it = f.mor_map.find(m.id);
    if (it == f.mor_map.end()) {
      complain("morphism '" + m.id + "' has no image");
      continue;
    }
    const Morphism* fm = f.cod.find(it->second);
    if (!fm) {
      complain("image of morphism '" + m.id + "' is not in the codomain");
      continue;
    }
    if (f.obj_map.count(m.src) && fm->src != f.obj_map.at(m.src))
      complain("morphism '" + m.id + "': source not preserved");
    if (f.obj_map.count(m.dst) && fm->dst != f.obj_map.at(m.dst))
      complain("morphism '" + m.id + "': target not preserved");
  }
  if (!rep.ok()) return rep;
  for (const auto& o : f.dom.objects)
    if (f.on_mor(f.dom.identity.at(o)) != f.cod.identity.at(f.on_obj(o)))
      complain("identity of '" + o + "' not preserved");
  for (const auto& m : f.dom.morphisms)
    for (const auto& n : f.dom.morphisms) {
      if (m.dst != n.src) continue;
      if (f.on_mor(f.dom.then(m.id, n.id)) != f.cod.then(f.on_mor(m.id), f.on_mor(n.id)))
        complain("composition not preserved on ('" + m.id + "','" + n.id + "')");
    }
  return rep;
}

Functor identity_functor(const FinCat& c) {
  Functor f;
  f.dom = c;
  f.cod = c;
  for (const auto& o : c.objects) f.obj_map[o] = o;
  for (const auto& m : c.morphisms) f.mor_map[m.id] = m.id;
  return f;
}

Functor functor_compose(const Functor& outer, const Functor& inner) {
  Functor f;
  f.dom = inner.dom;
  f.cod = outer.cod;
  for (const auto& [o, v] : inner.obj_map) f.obj_map[o] = outer.on_obj(v);
  for (const auto& [m, v] : inner.mor_map) f.mor_map[m] = outer.on_mor(v);
  return f;
}

Functor opposite_functor(const Functor& f) {
  Functor o;
  o.dom = opposite(f.dom);
  o.cod = opposite(f.cod);
  o.obj_map = f.obj_map;
  o.mor_map = f.mor_map;
  return o;
}

const FinCat& FamilyOfCats::fiber_at(const ObjId& o) const {
  auto it = fiber.find(o);
  if (it == fiber.end()) throw std::runtime_error("family has no fiber at '" + o + "'");
  return it->second;
}

const Functor& FamilyOfCats::transport_at(const MorId& m) const {
  auto it = transport.find(m);
  if (it == transport.end()) throw std::runtime_error("family has no transport at '" + m + "'");
  return it->second;
}

ValidationReport validate_family(const FamilyOfCats& a) {
  ValidationReport rep;
  auto complain = [&](const std::string& s) { rep.violations.push_back(s); };
  ValidationReport base = validate_category(a.base);
  if (!base.ok()) {
    for (auto& v : base.violations) complain("base: " + v);
    return rep;
  }
  for (const auto& o : a.base.objects) {
    if (!a.fiber.count(o)) {
      complain("no fiber at '" + o + "'");
      continue;
    }
    ValidationReport fr = validate_category(a.fiber.at(o));
    for (auto& v : fr.violations) complain("fiber '" + o + "': " + v);
  }
  if (!rep.ok()) return rep;
  for (const auto& m : a.base.morphisms) {
    auto it = a.transport.find(m.id);
    if (it == a.transport.end()) {
      complain("no transport at '" + m.id + "'");
      continue;
    }
    const Functor& t = it->second;
    if (!(t.dom == a.fiber.at(m.src))) complain("transport at '" + m.id + "': wrong domain");
    if (!(t.cod == a.fiber.at(m.dst))) complain("transport at '" + m.id + "': wrong codomain");
    ValidationReport fr = validate_functor(t);
    for (auto& v : fr.violations) complain("transport '" + m.id + "': " + v);
  }
  if (!rep.ok()) return rep;
  for (const auto& o : a.base.objects) {
    const Functor& t = a.transport_at(a.base.identity.at(o));
    if (!(t.obj_map == identity_functor(a.fiber_at(o)).obj_map &&
          t.mor_map == identity_functor(a.fiber_at(o)).mor_map))
      complain("transport of identity at '" + o + "' is not the identity functor");
  }
  for (const auto& f : a.base.morphisms)
    for (const auto& g : a.base.morphisms) {
      if (f.dst != g.src) continue;
      Functor lhs = a.transport_at(a.base.then(f.id, g.id));
      Functor rhs = functor_compose(a.transport_at(g.id), a.transport_at(f.id));
      if (!(lhs.obj_map == rhs.obj_map && lhs.mor_map == rhs.mor_map))
        complain("transport functoriality fails on ('" + f.id + "','" + g.id + "')");
    }
  return rep;
}

FamilyOfCats constant_family(const FinCat& base, const FinCat& fib) {
  FamilyOfCats a;
  a.base = base;
  for (const auto& o : base.objects) a.fiber[o] = fib;
  for (const auto& m : base.morphisms) a.transport[m.id] = identity_functor(fib);
  return a;
}

FamilyOfCats opposite_family(const FamilyOfCats& a) {
  FamilyOfCats o;
  o.base = a.base;
  for (const auto& [k, f] : a.fiber) o.fiber[k] = opposite(f);
  for (const auto& [k, t] : a.transport) o.transport[k] = opposite_functor(t);
  return o;
}

FamilyOfCats restrict_family(const FamilyOfCats& a, const Functor& along) {
  FamilyOfCats r;
  r.base = along.dom;
  for (const auto& o : along.dom.objects) r.fiber[o] = a.fiber_at(along.on_obj(o));
  for (const auto& m : along.dom.morphisms)
    r.transport[m.id] = a.transport_at(along.on_mor(m.id));
  return r;
}

ObjId Section::obj_at(const ObjId& o) const {
  auto it = obj_part.find(o);
  if (it == obj_part.end()) throw std::runtime_error("section has no value at object '" + o + "'");
  return it->second;
}

MorId Section::mor_at(const MorId& m) const {
  auto it = mor_part.find(m);
  if (it == mor_part.end()) throw std::runtime_error("section has no value at morphism '" + m + "'");
  return it->second;
}

ValidationReport validate_section(const Section& s) {
  ValidationReport rep;
  auto complain = [&](const std::string& v) { rep.violations.push_back(v); };
  const FamilyOfCats& a = s.family;
  for (const auto& o : a.base.objects) {
    if (!s.obj_part.count(o)) {
      complain("no object choice at '" + o + "'");
      continue;
    }
    if (!a.fiber_at(o).has_object(s.obj_part.at(o)))
      complain("object choice at '" + o + "' is not in the fiber");
  }
  if (!rep.ok()) return rep;
  for (const auto& m : a.base.morphisms) {
    if (!s.mor_part.count(m.id)) {
      complain("no morphism choice at '" + m.id + "'");
      continue;
    }
    const FinCat& fib = a.fiber_at(m.dst);
    const Morphism* mm = fib.find(s.mor_part.at(m.id));
    if (!mm) {
      complain("morphism choice at '" + m.id + "' is not in the target fiber");
      continue;
    }
    ObjId expected_src = a.transport_at(m.id).on_obj(s.obj_at(m.src));
    if (mm->src != expected_src || mm->dst != s.obj_at(m.dst))
      complain("morphism choice at '" + m.id + "' has wrong endpoints");
  }
  if (!rep.ok()) return rep;
  for (const auto& o : a.base.objects)
    if (s.mor_at(a.base.identity.at(o)) != a.fiber_at(o).identity.at(s.obj_at(o)))
      complain("section does not send identity at '" + o + "' to an identity");
  for (const auto& f : a.base.morphisms)
    for (const auto& g : a.base.morphisms) {
      if (f.dst != g.src) continue;
      MorId lhs = s.mor_at(a.base.then(f.id, g.id));
      MorId rhs = a.fiber_at(g.dst).then(a.transport_at(g.id).on_mor(s.mor_at(f.id)),
                                         s.mor_at(g.id));
      if (lhs != rhs) complain("section condition fails on ('" + f.id + "','" + g.id + "')");
    }
  return rep;
}

Section restrict_section(const Section& s, const Functor& along) {
  Section r;
  r.family = restrict_family(s.family, along);
  for (const auto& o : along.dom.objects) r.obj_part[o] = s.obj_at(along.on_obj(o));
  for (const auto& m : along.dom.morphisms) r.mor_part[m.id] = s.mor_at(along.on_mor(m.id));
  return r;
}

std::vector<Section> enumerate_sections(const FamilyOfCats& a) {
  std::vector<Section> out;
  const auto& objs = a.base.objects;

  // non-identity base morphisms get free choices; identities are forced
  std::vector<Morphism> free_mors;
  for (const auto& m : a.base.morphisms) {
    bool is_id = false;
    for (const auto& [o, id] : a.base.identity)
      if (id == m.id) is_id = true;
    if (!is_id) free_mors.push_back(m);
  }

  std::map<ObjId, ObjId> obj_choice;
  std::map<MorId, MorId> mor_choice;

  auto finish = [&]() {
    Section s;
    s.family = a;
    s.obj_part = obj_choice;
    s.mor_part = mor_choice;
    for (const auto& o : objs)
      s.mor_part[a.base.identity.at(o)] = a.fiber_at(o).identity.at(obj_choice.at(o));
    if (validate_section(s).ok()) out.push_back(std::move(s));
  };

  auto pick_mors = [&](auto&& self, size_t i) -> void {
    if (i == free_mors.size()) {
      finish();
      return;
    }
    const Morphism& m = free_mors[i];
    ObjId src_img = a.transport_at(m.id).on_obj(obj_choice.at(m.src));
    for (const MorId& cand : a.fiber_at(m.dst).hom_set(src_img, obj_choice.at(m.dst))) {
      mor_choice[m.id] = cand;
      self(self, i + 1);
      mor_choice.erase(m.id);
    }
  };

  auto pick_objs = [&](auto&& self, size_t i) -> void {
    if (i == objs.size()) {
      pick_mors(pick_mors, 0);
      return;
    }
    for (const auto& cand : a.fiber_at(objs[i]).objects) {
      obj_choice[objs[i]] = cand;
      self(self, i + 1);
      obj_choice.erase(objs[i]);
    }
  };

  pick_objs(pick_objs, 0);
  return out;
}

Section negate_section(const InverseTable& base_inverses, const Section& s) {
  Section r;
  r.family = opposite_family(s.family);
  r.obj_part = s.obj_part;
  for (const auto& m : s.family.base.morphisms) {
    MorId inv = base_inverses.at(m.id);
    r.mor_part[m.id] = s.family.transport_at(m.id).on_mor(s.mor_at(inv));
  }
  return r;
}

ValidationReport validate_nat_transform(const NatTransform& t) {
  ValidationReport rep;
  auto complain = [&](const std::string& v) { rep.violations.push_back(v); };
  if (!(t.from.family == t.to.family)) {
    complain("transform endpoints live over different families");
    return rep;
  }
  const FamilyOfCats& a = t.from.family;
  for (const auto& o : a.base.objects) {
    auto it = t.components.find(o);
    if (it == t.components.end()) {
      complain("no component at '" + o + "'");
      continue;
    }
    const Morphism* m = a.fiber_at(o).find(it->second);
    if (!m || m->src != t.from.obj_at(o) || m->dst != t.to.obj_at(o))
      complain("component at '" + o + "' has wrong endpoints");
  }
  if (!rep.ok()) return rep;
  // naturality: from.mor(g01) · comp(g1)  =  transport(g01)(comp(g0)) · to.mor(g01)
  for (const auto& m : a.base.morphisms) {
    const FinCat& fib = a.fiber_at(m.dst);
    MorId lhs = fib.then(t.from.mor_at(m.id), t.components.at(m.dst));
    MorId rhs = fib.then(a.transport_at(m.id).on_mor(t.components.at(m.src)), t.to.mor_at(m.id));
    if (lhs != rhs) complain("naturality square fails at '" + m.id + "'");
  }
  return rep;
}

std::vector<NatTransform> enumerate_transforms(const Section& from, const Section& to) {
  std::vector<NatTransform> out;
  if (!(from.family == to.family)) return out;
  const FamilyOfCats& a = from.family;
  const auto& objs = a.base.objects;
  std::map<ObjId, MorId> comp;

  auto rec = [&](auto&& self, size_t i) -> void {
    if (i == objs.size()) {
      NatTransform t{from, to, comp};
      if (validate_nat_transform(t).ok()) out.push_back(std::move(t));
      return;
    }
    const ObjId& o = objs[i];
    for (const MorId& cand : a.fiber_at(o).hom_set(from.obj_at(o), to.obj_at(o))) {
      comp[o] = cand;
      self(self, i + 1);
      comp.erase(o);
    }
  };
  rec(rec, 0);
  return out;
}

ObjId pair_obj_name(const ObjId& base_obj, const ObjId& fiber_obj) {
  return "(" + base_obj + "," + fiber_obj + ")";
}

MorId pair_mor_name(const MorId& base_mor, const MorId& fiber_mor, const ObjId& src_fiber_obj) {
  return "(" + base_mor + "," + fiber_mor + ")@" + src_fiber_obj;
}

TotalCategory total_category_pos(const FinCat& base, const FamilyOfCats& fam) {
  if (!(fam.base == base))
    throw std::runtime_error("total category: family does not live over the given base");
  TotalCategory tc;
  FinCat& t = tc.total;
  t.label = base.label.empty() ? "total" : base.label + ".ext";

  for (const auto& g : base.objects)
    for (const auto& a : fam.fiber_at(g).objects) {
      ObjId name = pair_obj_name(g, a);
      t.objects.push_back(name);
      tc.obj_data[name] = {g, a};
    }

  for (const auto& gm : base.morphisms) {
    const FinCat& dst_fib = fam.fiber_at(gm.dst);
    const Functor& tr = fam.transport_at(gm.id);
    for (const auto& a0 : fam.fiber_at(gm.src).objects)
      for (const auto& am : dst_fib.morphisms) {
        if (am.src != tr.on_obj(a0)) continue;
        MorId name = pair_mor_name(gm.id, am.id, a0);
        t.morphisms.push_back({name, pair_obj_name(gm.src, a0), pair_obj_name(gm.dst, am.dst)});
        tc.mor_data[name] = {{gm.id, am.id}, a0};
      }
  }

  for (const auto& g : base.objects)
    for (const auto& a : fam.fiber_at(g).objects)
      t.identity[pair_obj_name(g, a)] =
          pair_mor_name(base.identity.at(g), fam.fiber_at(g).identity.at(a), a);

  // (g01,a01)·(g12,a12) = (g01·g12, transport(g12)(a01)·a12)
  for (const auto& m1 : t.morphisms)
    for (const auto& m2 : t.morphisms) {
      if (m1.dst != m2.src) continue;
      auto [p1, src1] = tc.mor_data.at(m1.id);
      auto [p2, src2] = tc.mor_data.at(m2.id);
      MorId gbase = base.then(p1.first, p2.first);
      const Functor& tr2 = fam.transport_at(p2.first);
      MorId afib = fam.fiber_at(base.at(p2.first).dst).then(tr2.on_mor(p1.second), p2.second);
      t.composition[{m1.id, m2.id}] = pair_mor_name(gbase, afib, src1);
    }

  tc.projection.dom = t;
  tc.projection.cod = base;
  for (const auto& [name, od] : tc.obj_data) tc.projection.obj_map[name] = od.first;
  for (const auto& [name, md] : tc.mor_data) tc.projection.mor_map[name] = md.first.first;

  tc.generic.family = restrict_family(fam, tc.projection);
  for (const auto& [name, od] : tc.obj_data) tc.generic.obj_part[name] = od.second;
  for (const auto& [name, md] : tc.mor_data) tc.generic.mor_part[name] = md.first.second;
  return tc;
}

std::string section_key(const Section& s) {
  std::ostringstream os;
  os << "s{";
  bool first = true;
  for (const auto& [o, v] : s.obj_part) {
    if (!first) os << ",";
    first = false;
    os << o << ">" << v;
  }
  os << "|";
  first = true;
  for (const auto& [m, v] : s.mor_part) {
    if (!first) os << ",";
    first = false;
    os << m << ">" << v;
  }
  os << "}";
  return os.str();
}

std::string transform_key(const NatTransform& t) {
  std::ostringstream os;
  os << "n{" << section_key(t.from) << ">" << section_key(t.to) << "|";
  bool first = true;
  for (const auto& [o, v] : t.components) {
    if (!first) os << ",";
    first = false;
    os << o << ">" << v;
  }
  os << "}";
  return os.str();
}

}  // namespace dtt
