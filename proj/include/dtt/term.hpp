#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace dtt {

enum class TermKind {
  // contexts
  EmptyCtx,
  ExtPos,
  ExtNeg,
  NegCtx,
  ConstCtx,
  // substitutions
  IdSub,
  Comp,
  NegSub,
  ProjPos,
  ProjNeg,
  PairPos,
  PairNeg,
  E,
  EInv,
  ExtE,
  ConstSub,
  // types
  SubTy,
  NegTy,
  Hom,
  Pi,
  SetU,
  El,
  ConstTy,
  // terms
  VarPos,
  VarNeg,
  SubTm,
  NegTm,
  Refl,
  J,
  JSimple,
  Lam,
  App,
  ConstTm,
};

struct TermNode;
using Term = std::shared_ptr<const TermNode>;

struct TermNode {
  TermKind kind;
  std::string name;  // Const* only
  std::vector<Term> args;
  std::size_t hash;
};

Term mk(TermKind kind, std::vector<Term> args = {}, std::string name = "");
bool term_eq(const Term& a, const Term& b);

struct TermHash {
  std::size_t operator()(const Term& t) const { return t ? t->hash : 0; }
};
struct TermEq {
  bool operator()(const Term& a, const Term& b) const { return term_eq(a, b); }
};

const char* kind_name(TermKind k);
bool is_constant(TermKind k);

// context builders
Term empty_ctx();
Term ext_pos(Term g, Term a);
Term ext_neg(Term g, Term a);
Term neg_ctx(Term g);
Term const_ctx(std::string name);
// substitution builders
Term id_sub(Term g);
Term comp(Term outer, Term inner);  // classical order: inner applied first
Term neg_sub(Term s);
Term proj_pos(Term a);
Term proj_neg(Term a);
Term pair_pos(Term s, Term t);
Term pair_neg(Term s, Term t);
Term e_sub(Term g);
Term e_inv(Term g);
Term ext_e(Term a);
Term const_sub(std::string name);
// type builders
Term sub_ty(Term a, Term s);
Term neg_ty(Term a);
Term hom(Term a, Term t_neg, Term t_pos);
Term pi(Term a, Term b);
Term set_u();
Term el(Term t);
Term const_ty(std::string name);
// term builders
Term var_pos(Term a);
Term var_neg(Term a);
Term sub_tm(Term t, Term s);
Term neg_tm(Term t);
Term refl(Term a, Term t);
Term j_full(Term a, Term t, Term m_ty, Term m_tm);
Term j_simple(Term a, Term t, Term m_ty, Term m_tm);
Term lam(Term t);
Term app(Term f);
Term const_tm(std::string name);

}  // namespace dtt
