#include "dtt/term.hpp"

#include <functional>

namespace dtt {

namespace {
std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
}
}  // namespace

Term mk(TermKind kind, std::vector<Term> args, std::string name) {
  auto node = std::make_shared<TermNode>();
  node->kind = kind;
  node->name = std::move(name);
  node->args = std::move(args);
  std::size_t h = static_cast<std::size_t>(kind) * 1099511628211ull;
  h = mix(h, std::hash<std::string>{}(node->name));
  for (const Term& a : node->args) h = mix(h, a ? a->hash : 0);
  node->hash = h;
  return node;
}

bool term_eq(const Term& a, const Term& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->hash != b->hash || a->kind != b->kind || a->name != b->name ||
      a->args.size() != b->args.size())
    return false;
  for (std::size_t i = 0; i < a->args.size(); ++i)
    if (!term_eq(a->args[i], b->args[i])) return false;
  return true;
}

const char* kind_name(TermKind k) {
  switch (k) {
    case TermKind::EmptyCtx: return "empty";
    case TermKind::ExtPos: return "ext+";
    case TermKind::ExtNeg: return "ext-";
    case TermKind::NegCtx: return "negC";
    case TermKind::ConstCtx: return "constC";
    case TermKind::IdSub: return "id";
    case TermKind::Comp: return "comp";
    case TermKind::NegSub: return "negS";
    case TermKind::ProjPos: return "p+";
    case TermKind::ProjNeg: return "p-";
    case TermKind::PairPos: return "pair+";
    case TermKind::PairNeg: return "pair-";
    case TermKind::E: return "e";
    case TermKind::EInv: return "einv";
    case TermKind::ExtE: return "exte";
    case TermKind::ConstSub: return "constS";
    case TermKind::SubTy: return "subT";
    case TermKind::NegTy: return "negT";
    case TermKind::Hom: return "hom";
    case TermKind::Pi: return "pi";
    case TermKind::SetU: return "set";
    case TermKind::El: return "el";
    case TermKind::ConstTy: return "constT";
    case TermKind::VarPos: return "v+";
    case TermKind::VarNeg: return "v-";
    case TermKind::SubTm: return "subt";
    case TermKind::NegTm: return "negt";
    case TermKind::Refl: return "refl";
    case TermKind::J: return "J";
    case TermKind::JSimple: return "Js";
    case TermKind::Lam: return "lam";
    case TermKind::App: return "app";
    case TermKind::ConstTm: return "constt";
  }
  return "?";
}

bool is_constant(TermKind k) {
  return k == TermKind::ConstCtx || k == TermKind::ConstSub || k == TermKind::ConstTy ||
         k == TermKind::ConstTm;
}

Term empty_ctx() { return mk(TermKind::EmptyCtx); }
Term ext_pos(Term g, Term a) { return mk(TermKind::ExtPos, {g, a}); }
Term ext_neg(Term g, Term a) { return mk(TermKind::ExtNeg, {g, a}); }
Term neg_ctx(Term g) { return mk(TermKind::NegCtx, {g}); }
Term const_ctx(std::string name) { return mk(TermKind::ConstCtx, {}, std::move(name)); }
Term id_sub(Term g) { return mk(TermKind::IdSub, {g}); }
Term comp(Term outer, Term inner) { return mk(TermKind::Comp, {outer, inner}); }
Term neg_sub(Term s) { return mk(TermKind::NegSub, {s}); }
Term proj_pos(Term a) { return mk(TermKind::ProjPos, {a}); }
Term proj_neg(Term a) { return mk(TermKind::ProjNeg, {a}); }
Term pair_pos(Term s, Term t) { return mk(TermKind::PairPos, {s, t}); }
Term pair_neg(Term s, Term t) { return mk(TermKind::PairNeg, {s, t}); }
Term e_sub(Term g) { return mk(TermKind::E, {g}); }
Term e_inv(Term g) { return mk(TermKind::EInv, {g}); }
Term ext_e(Term a) { return mk(TermKind::ExtE, {a}); }
Term const_sub(std::string name) { return mk(TermKind::ConstSub, {}, std::move(name)); }
Term sub_ty(Term a, Term s) { return mk(TermKind::SubTy, {a, s}); }
Term neg_ty(Term a) { return mk(TermKind::NegTy, {a}); }
Term hom(Term a, Term t_neg, Term t_pos) { return mk(TermKind::Hom, {a, t_neg, t_pos}); }
Term pi(Term a, Term b) { return mk(TermKind::Pi, {a, b}); }
Term set_u() { return mk(TermKind::SetU); }
Term el(Term t) { return mk(TermKind::El, {t}); }
Term const_ty(std::string name) { return mk(TermKind::ConstTy, {}, std::move(name)); }
Term var_pos(Term a) { return mk(TermKind::VarPos, {a}); }
Term var_neg(Term a) { return mk(TermKind::VarNeg, {a}); }
Term sub_tm(Term t, Term s) { return mk(TermKind::SubTm, {t, s}); }
Term neg_tm(Term t) { return mk(TermKind::NegTm, {t}); }
Term refl(Term a, Term t) { return mk(TermKind::Refl, {a, t}); }
Term j_full(Term a, Term t, Term m_ty, Term m_tm) {
  return mk(TermKind::J, {a, t, m_ty, m_tm});
}
Term j_simple(Term a, Term t, Term m_ty, Term m_tm) {
  return mk(TermKind::JSimple, {a, t, m_ty, m_tm});
}
Term lam(Term t) { return mk(TermKind::Lam, {t}); }
Term app(Term f) { return mk(TermKind::App, {f}); }
Term const_tm(std::string name) { return mk(TermKind::ConstTm, {}, std::move(name)); }

}  // namespace dtt
