#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dtt {

using ObjId = std::string;
using MorId = std::string;

struct Morphism {
  MorId id;
  ObjId src;
  ObjId dst;
  bool operator==(const Morphism&) const = default;
  auto operator<=>(const Morphism&) const = default;
};

/// A finite category as explicit tables. Composition is stored in
/// diagrammatic order: composition.at({f,g}) is "f then g".
struct FinCat {
  std::string label;  // display only, not part of structural equality
  std::vector<ObjId> objects;
  std::vector<Morphism> morphisms;
  std::map<ObjId, MorId> identity;
  std::map<std::pair<MorId, MorId>, MorId> composition;

  bool has_object(const ObjId& o) const;
  const Morphism* find(const MorId& m) const;
  const Morphism& at(const MorId& m) const;
  bool composable(const MorId& f, const MorId& g) const;
  /// f·g in diagrammatic order (f first, then g). Throws if the pair is
  /// not composable or missing from the table.
  MorId then(const MorId& f, const MorId& g) const;
  std::vector<MorId> hom_set(const ObjId& x, const ObjId& y) const;

  bool operator==(const FinCat& o) const;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

using InverseTable = std::map<MorId, MorId>;

ValidationReport validate_category(const FinCat& c);
FinCat opposite(const FinCat& c);
FinCat discrete_category(std::vector<ObjId> objects, std::string label = "");
FinCat terminal_category();

/// Two-sided inverse table when the category is a groupoid.
std::optional<InverseTable> groupoid_inverses(const FinCat& c);
bool is_groupoid(const FinCat& c);
MorId inverse_morphism(const FinCat& c, const MorId& f);

struct Functor {
  FinCat dom;
  FinCat cod;
  std::map<ObjId, ObjId> obj_map;
  std::map<MorId, MorId> mor_map;

  ObjId on_obj(const ObjId& o) const;
  MorId on_mor(const MorId& m) const;
  bool operator==(const Functor&) const = default;
};

ValidationReport validate_functor(const Functor& f);
Functor identity_functor(const FinCat& c);
/// Classical order: (outer ∘ inner), inner applied first.
Functor functor_compose(const Functor& outer, const Functor& inner);
/// The same maps viewed between the opposite categories.
Functor opposite_functor(const Functor& f);

/// A family of categories indexed over a base category: one fiber per
/// object and a covariant transport functor per morphism, satisfying
/// transport(id) = id and transport(f·g) = transport(g) ∘ transport(f).
struct FamilyOfCats {
  FinCat base;
  std::map<ObjId, FinCat> fiber;
  std::map<MorId, Functor> transport;

  const FinCat& fiber_at(const ObjId& o) const;
  const Functor& transport_at(const MorId& m) const;
  bool operator==(const FamilyOfCats&) const = default;
};

ValidationReport validate_family(const FamilyOfCats& a);
FamilyOfCats constant_family(const FinCat& base, const FinCat& fib);
FamilyOfCats opposite_family(const FamilyOfCats& a);
/// Reindex a family along a functor into its base.
FamilyOfCats restrict_family(const FamilyOfCats& a, const Functor& along);

/// A section of a family: an object of the fiber per base object, and a
/// fiber morphism transport(g01)(obj(g0)) -> obj(g1) per base morphism,
/// functorial in the base.
struct Section {
  FamilyOfCats family;
  std::map<ObjId, ObjId> obj_part;
  std::map<MorId, MorId> mor_part;

  ObjId obj_at(const ObjId& o) const;
  MorId mor_at(const MorId& m) const;
  bool operator==(const Section&) const = default;
};

ValidationReport validate_section(const Section& s);
Section restrict_section(const Section& s, const Functor& along);
std::vector<Section> enumerate_sections(const FamilyOfCats& a);

/// Coerce a section of `a` to a section of the pointwise opposite family,
/// inverting base morphisms through the groupoid structure of the base.
Section negate_section(const InverseTable& base_inverses, const Section& s);

/// Morphism between two sections of a common family: a fiber morphism per
/// base object, natural with respect to the section morphism parts.
struct NatTransform {
  Section from;
  Section to;
  std::map<ObjId, MorId> components;
  bool operator==(const NatTransform&) const = default;
};

ValidationReport validate_nat_transform(const NatTransform& t);
std::vector<NatTransform> enumerate_transforms(const Section& from, const Section& to);

/// Canonical names for the objects and morphisms of a total category.
ObjId pair_obj_name(const ObjId& base_obj, const ObjId& fiber_obj);
MorId pair_mor_name(const MorId& base_mor, const MorId& fiber_mor, const ObjId& src_fiber_obj);

struct TotalCategory {
  FinCat total;
  Functor projection;                 // first projection onto the base
  Section generic;                    // second projection over the weakened family
  std::map<ObjId, std::pair<ObjId, ObjId>> obj_data;                 // name -> (base, fiber)
  std::map<MorId, std::pair<std::pair<MorId, MorId>, ObjId>> mor_data;  // name -> ((base, fiber), src fiber obj)
};

/// The category of pairs (g, a) with a in fiber(g); morphisms
/// (g0,a0) -> (g1,a1) are pairs (g01, a01) with
/// a01 : fiber(g1)[ transport(g01)(a0), a1 ].
TotalCategory total_category_pos(const FinCat& base, const FamilyOfCats& fam);

/// Compact deterministic keys used to name sections and transforms when
/// they become the objects and morphisms of a function-space category.
std::string section_key(const Section& s);
std::string transform_key(const NatTransform& t);

}  // namespace dtt
