#include <sstream>

#include "dtt/kernel.hpp"

namespace dtt {

const char* error_class_name(ErrorClass c) {
  switch (c) {
    case ErrorClass::Sort: return "SortError";
    case ErrorClass::Variance: return "VarianceError";
    case ErrorClass::Neutrality: return "NeutralityError";
    case ErrorClass::Unbound: return "UnboundConstant";
    case ErrorClass::Judgment: return "JudgmentMismatch";
    case ErrorClass::Parse: return "ParseError";
    case ErrorClass::Model: return "ModelError";
  }
  return "Error";
}

Judgment Judgment::con(bool neutral) {
  Judgment j;
  j.sort = Sort::Con;
  j.neutral = neutral;
  return j;
}
Judgment Judgment::sub(Term dom, Term cod) {
  Judgment j;
  j.sort = Sort::Sub;
  j.dom = std::move(dom);
  j.cod = std::move(cod);
  return j;
}
Judgment Judgment::ty(Term ctx, bool neutral) {
  Judgment j;
  j.sort = Sort::Ty;
  j.ctx = std::move(ctx);
  j.neutral = neutral;
  return j;
}
Judgment Judgment::tm(Term ctx, Term type) {
  Judgment j;
  j.sort = Sort::Tm;
  j.ctx = std::move(ctx);
  j.type = std::move(type);
  return j;
}

bool judgment_eq(const Judgment& a, const Judgment& b) {
  if (a.sort != b.sort) return false;
  switch (a.sort) {
    case Judgment::Sort::Con: return a.neutral == b.neutral;
    case Judgment::Sort::Sub: return term_eq(a.dom, b.dom) && term_eq(a.cod, b.cod);
    case Judgment::Sort::Ty: return term_eq(a.ctx, b.ctx) && a.neutral == b.neutral;
    case Judgment::Sort::Tm: return term_eq(a.ctx, b.ctx) && term_eq(a.type, b.type);
  }
  return false;
}

void Signature::declare(const std::string& name, SortExpr sort) {
  if (index_.count(name)) throw KernelError(ErrorClass::Sort, "duplicate constant '" + name + "'");
  index_[name] = decls_.size();
  decls_.push_back({name, std::move(sort), nullptr});
}

void Signature::define(const std::string& name, SortExpr sort, Term body) {
  if (index_.count(name)) throw KernelError(ErrorClass::Sort, "duplicate constant '" + name + "'");
  index_[name] = decls_.size();
  decls_.push_back({name, std::move(sort), std::move(body)});
}

const Declaration* Signature::find(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : &decls_[it->second];
}

Checker::Checker(const Signature& sig, std::size_t max_steps) : sig_(sig), max_steps_(max_steps) {}

Judgment Checker::judgment_of_sort(const SortExpr& s) {
  switch (s.kind) {
    case SortExpr::Kind::Con: return Judgment::con(false);
    case SortExpr::Kind::NCon: return Judgment::con(true);
    case SortExpr::Kind::Sub: return Judgment::sub(nf(s.a), nf(s.b));
    case SortExpr::Kind::Ty: return Judgment::ty(nf(s.a), false);
    case SortExpr::Kind::NTy: return Judgment::ty(nf(s.a), true);
    case SortExpr::Kind::Tm: return Judgment::tm(nf(s.a), nf(s.b));
  }
  throw KernelError(ErrorClass::Sort, "bad sort expression");
}

bool Checker::is_neutral_ctx(const Term& ctx) {
  Judgment j = infer(ctx);
  if (j.sort != Judgment::Sort::Con)
    throw KernelError(ErrorClass::Sort, "expected a context");
  return j.neutral;
}

Judgment Checker::infer(const Term& t) {
  auto it = infer_cache_.find(t);
  if (it != infer_cache_.end()) return it->second;
  if (infer_depth_ > 512) throw KernelError(ErrorClass::Sort, "inference recursion limit hit");
  ++infer_depth_;
  Judgment j;
  try {
    j = infer_rec(t);
  } catch (...) {
    --infer_depth_;
    throw;
  }
  --infer_depth_;
  infer_cache_.emplace(t, j);
  return j;
}

namespace {

const Term& arg(const Term& t, std::size_t i) { return t->args[i]; }

[[noreturn]] void fail(ErrorClass c, const std::string& what, const Term& t) {
  std::ostringstream os;
  os << what << " (at " << kind_name(t->kind) << ")";
  throw KernelError(c, os.str());
}

}  // namespace

// Expect a context / type / term judgment helpers.
namespace {
Judgment expect_con(Checker& ck, const Term& t) {
  Judgment j = ck.infer(t);
  if (j.sort != Judgment::Sort::Con) fail(ErrorClass::Sort, "expected a context", t);
  return j;
}
Judgment expect_ty(Checker& ck, const Term& t) {
  Judgment j = ck.infer(t);
  if (j.sort != Judgment::Sort::Ty) fail(ErrorClass::Sort, "expected a type", t);
  return j;
}
Judgment expect_tm(Checker& ck, const Term& t) {
  Judgment j = ck.infer(t);
  if (j.sort != Judgment::Sort::Tm) fail(ErrorClass::Sort, "expected a term", t);
  return j;
}
Judgment expect_sub(Checker& ck, const Term& t) {
  Judgment j = ck.infer(t);
  if (j.sort != Judgment::Sort::Sub) fail(ErrorClass::Sort, "expected a substitution", t);
  return j;
}
}  // namespace

Judgment Checker::infer_sub_at(const Term& s, const Term& expected_cod_nf) {
  // bidirectional path: pairings take their extension type from the target
  if (s->kind == TermKind::PairPos && expected_cod_nf->kind == TermKind::ExtPos) {
    const Term& gamma = expected_cod_nf->args[0];
    const Term& a = expected_cod_nf->args[1];
    Judgment js = infer_sub_at(arg(s, 0), gamma);
    Judgment jt = expect_tm(*this, arg(s, 1));
    if (!term_eq(jt.ctx, js.dom))
      fail(ErrorClass::Judgment, "pairing: term lives in the wrong context", s);
    Term want = nf(sub_ty(a, arg(s, 0)));
    if (!term_eq(jt.type, want))
      fail(ErrorClass::Sort, "pairing: term does not have the instantiated extension type", s);
    return Judgment::sub(js.dom, expected_cod_nf);
  }
  if (s->kind == TermKind::PairNeg && expected_cod_nf->kind == TermKind::ExtNeg) {
    const Term& gamma = expected_cod_nf->args[0];
    const Term& a = expected_cod_nf->args[1];
    Judgment js = infer_sub_at(arg(s, 0), gamma);
    Judgment jt = expect_tm(*this, arg(s, 1));
    if (!term_eq(jt.ctx, nf(neg_ctx(js.dom))))
      fail(ErrorClass::Judgment, "negative pairing: term lives in the wrong context", s);
    Term want = nf(neg_ty(sub_ty(a, neg_sub(arg(s, 0)))));
    if (!term_eq(jt.type, want))
      fail(ErrorClass::Sort, "negative pairing: term does not have the instantiated type", s);
    return Judgment::sub(js.dom, expected_cod_nf);
  }
  Judgment j = expect_sub(*this, s);
  if (!term_eq(j.cod, expected_cod_nf))
    fail(ErrorClass::Sort, "substitution codomain mismatch", s);
  return j;
}

Judgment Checker::infer_rec(const Term& t) {
  switch (t->kind) {
    case TermKind::EmptyCtx:
      return Judgment::con(true);

    case TermKind::ExtPos: {
      Judgment jg = expect_con(*this, arg(t, 0));
      Judgment ja = expect_ty(*this, arg(t, 1));
      if (!term_eq(ja.ctx, nf(arg(t, 0))))
        fail(ErrorClass::Sort, "extension type lives over a different context", t);
      return Judgment::con(jg.neutral && ja.neutral);
    }

    case TermKind::ExtNeg: {
      Judgment jg = expect_con(*this, arg(t, 0));
      Judgment ja = expect_ty(*this, arg(t, 1));
      if (!term_eq(ja.ctx, nf(neg_ctx(arg(t, 0)))))
        fail(ErrorClass::Sort, "negative extension type must live over the negated context", t);
      return Judgment::con(jg.neutral && ja.neutral);
    }

    case TermKind::NegCtx: {
      Judgment jg = expect_con(*this, arg(t, 0));
      return Judgment::con(jg.neutral);
    }

    case TermKind::ConstCtx: {
      const Declaration* d = sig_.find(t->name);
      if (!d) fail(ErrorClass::Unbound, "unbound constant '" + t->name + "'", t);
      if (d->sort.kind != SortExpr::Kind::Con && d->sort.kind != SortExpr::Kind::NCon)
        fail(ErrorClass::Sort, "constant '" + t->name + "' is not a context", t);
      return judgment_of_sort(d->sort);
    }

    case TermKind::IdSub: {
      expect_con(*this, arg(t, 0));
      Term g = nf(arg(t, 0));
      return Judgment::sub(g, g);
    }

    case TermKind::Comp: {
      Judgment jo = expect_sub(*this, arg(t, 0));
      Judgment ji = infer_sub_at(arg(t, 1), jo.dom);
      return Judgment::sub(ji.dom, jo.cod);
    }

    case TermKind::NegSub: {
      Judgment js = expect_sub(*this, arg(t, 0));
      return Judgment::sub(nf(neg_ctx(js.dom)), nf(neg_ctx(js.cod)));
    }

    case TermKind::ProjPos: {
      Judgment ja = expect_ty(*this, arg(t, 0));
      return Judgment::sub(nf(ext_pos(ja.ctx, arg(t, 0))), ja.ctx);
    }

    case TermKind::ProjNeg: {
      Judgment ja = expect_ty(*this, arg(t, 0));
      Term gamma = nf(neg_ctx(ja.ctx));
      return Judgment::sub(nf(ext_neg(gamma, arg(t, 0))), gamma);
    }

    case TermKind::PairPos: {
      // synthesis: recover the extension type from the term component
      Judgment js = expect_sub(*this, arg(t, 0));
      Judgment jt = expect_tm(*this, arg(t, 1));
      if (!term_eq(jt.ctx, js.dom))
        fail(ErrorClass::Judgment, "pairing components live in different contexts", t);
      Term a;
      if (jt.type->kind == TermKind::SubTy && term_eq(nf(jt.type->args[1]), nf(arg(t, 0))))
        a = jt.type->args[0];
      else if (js.dom && term_eq(js.dom, js.cod) && nf(arg(t, 0))->kind == TermKind::IdSub)
        a = jt.type;
      else
        fail(ErrorClass::Sort,
             "cannot synthesize the extension type of this pairing; use it under an "
             "explicit substitution target",
             t);
      return Judgment::sub(js.dom, nf(ext_pos(js.cod, a)));
    }

    case TermKind::PairNeg: {
      Judgment js = expect_sub(*this, arg(t, 0));
      Judgment jt = expect_tm(*this, arg(t, 1));
      if (!term_eq(jt.ctx, nf(neg_ctx(js.dom))))
        fail(ErrorClass::Judgment, "negative pairing: term must live in the negated domain", t);
      Term a;
      Term ty = jt.type;
      if (nf(arg(t, 0))->kind == TermKind::IdSub) {
        a = nf(neg_ty(ty));
      } else if (ty->kind == TermKind::NegTy && ty->args[0]->kind == TermKind::SubTy &&
                 term_eq(nf(ty->args[0]->args[1]), nf(neg_sub(arg(t, 0))))) {
        a = ty->args[0]->args[0];
      } else {
        fail(ErrorClass::Sort,
             "cannot synthesize the extension type of this negative pairing; use it "
             "under an explicit substitution target",
             t);
      }
      return Judgment::sub(js.dom, nf(ext_neg(js.cod, a)));
    }

    case TermKind::E: {
      Judgment jg = expect_con(*this, arg(t, 0));
      if (!jg.neutral)
        fail(ErrorClass::Neutrality, "e is only available over a neutral context", t);
      Term g = nf(arg(t, 0));
      return Judgment::sub(g, nf(neg_ctx(g)));
    }

    case TermKind::EInv: {
      Judgment jg = expect_con(*this, arg(t, 0));
      if (!jg.neutral)
        fail(ErrorClass::Neutrality, "e-inverse is only available over a neutral context", t);
      Term g = nf(arg(t, 0));
      return Judgment::sub(nf(neg_ctx(g)), g);
    }

    case TermKind::ExtE: {
      Judgment ja = expect_ty(*this, arg(t, 0));
      Judgment jg = expect_con(*this, ja.ctx);
      if (!jg.neutral)
        fail(ErrorClass::Neutrality, "the extension comparison needs a neutral context", t);
      Term g = ja.ctx;
      Term a = arg(t, 0);
      return Judgment::sub(nf(ext_pos(g, a)), nf(ext_neg(g, sub_ty(a, e_inv(g)))));
    }

    case TermKind::ConstSub: {
      const Declaration* d = sig_.find(t->name);
      if (!d) fail(ErrorClass::Unbound, "unbound constant '" + t->name + "'", t);
      if (d->sort.kind != SortExpr::Kind::Sub)
        fail(ErrorClass::Sort, "constant '" + t->name + "' is not a substitution", t);
      return judgment_of_sort(d->sort);
    }

    case TermKind::SubTy: {
      Judgment ja = expect_ty(*this, arg(t, 0));
      Judgment js = infer_sub_at(arg(t, 1), ja.ctx);
      return Judgment::ty(js.dom, ja.neutral);
    }

    case TermKind::NegTy: {
      Judgment ja = expect_ty(*this, arg(t, 0));
      return Judgment::ty(ja.ctx, ja.neutral);
    }

    case TermKind::Hom: {
      Judgment ja = expect_ty(*this, arg(t, 0));
      Judgment jneg = expect_tm(*this, arg(t, 1));
      Judgment jpos = expect_tm(*this, arg(t, 2));
      Term want_neg = nf(neg_ty(arg(t, 0)));
      Term want_pos = nf(arg(t, 0));
      if (!term_eq(jneg.ctx, ja.ctx) || !term_eq(jpos.ctx, ja.ctx))
        fail(ErrorClass::Judgment, "hom endpoints live in a different context", t);
      if (!term_eq(jneg.type, want_neg)) {
        if (term_eq(jneg.type, want_pos))
          fail(ErrorClass::Variance, "hom source endpoint must be a negative term", t);
        fail(ErrorClass::Sort, "hom source endpoint has the wrong type", t);
      }
      if (!term_eq(jpos.type, want_pos)) {
        if (term_eq(jpos.type, want_neg))
          fail(ErrorClass::Variance, "hom target endpoint must be a positive term", t);
        fail(ErrorClass::Sort, "hom target endpoint has the wrong type", t);
      }
      return Judgment::ty(ja.ctx, true);
    }

    case TermKind::Pi: {
      Judgment ja = expect_ty(*this, arg(t, 0));
      Term gamma = nf(neg_ctx(ja.ctx));
      Judgment jb = expect_ty(*this, arg(t, 1));
      if (!term_eq(jb.ctx, nf(ext_neg(gamma, arg(t, 0)))))
        fail(ErrorClass::Sort, "function codomain must live over the negative extension", t);
      return Judgment::ty(gamma, false);
    }

    case TermKind::SetU:
      return Judgment::ty(empty_ctx(), false);

    case TermKind::El: {
      Judgment jt = expect_tm(*this, arg(t, 0));
      Term ty = jt.type;
      bool is_set = ty->kind == TermKind::SetU ||
                    (ty->kind == TermKind::SubTy && ty->args[0]->kind == TermKind::SetU);
      if (!is_set) fail(ErrorClass::Sort, "el needs a term of the set universe", t);
      return Judgment::ty(jt.ctx, true);
    }

    case TermKind::ConstTy: {
      const Declaration* d = sig_.find(t->name);
      if (!d) fail(ErrorClass::Unbound, "unbound constant '" + t->name + "'", t);
      if (d->sort.kind != SortExpr::Kind::Ty && d->sort.kind != SortExpr::Kind::NTy)
        fail(ErrorClass::Sort, "constant '" + t->name + "' is not a type", t);
      return judgment_of_sort(d->sort);
    }

    case TermKind::VarPos: {
      Judgment ja = expect_ty(*this, arg(t, 0));
      return Judgment::tm(nf(ext_pos(ja.ctx, arg(t, 0))),
                          nf(sub_ty(arg(t, 0), proj_pos(arg(t, 0)))));
    }

    case TermKind::VarNeg: {
      Judgment ja = expect_ty(*this, arg(t, 0));
      Term gamma = nf(neg_ctx(ja.ctx));
      return Judgment::tm(nf(neg_ctx(ext_neg(gamma, arg(t, 0)))),
                          nf(neg_ty(sub_ty(arg(t, 0), neg_sub(proj_neg(arg(t, 0)))))));
    }

    case TermKind::SubTm: {
      Judgment jt = expect_tm(*this, arg(t, 0));
      Judgment js = infer_sub_at(arg(t, 1), jt.ctx);
      return Judgment::tm(js.dom, nf(sub_ty(jt.type, arg(t, 1))));
    }

    case TermKind::NegTm: {
      Judgment jt = expect_tm(*this, arg(t, 0));
      if (!is_neutral_ctx(jt.ctx))
        fail(ErrorClass::Variance, "terms can only be negated in a neutral context", t);
      return Judgment::tm(jt.ctx, nf(neg_ty(jt.type)));
    }

    case TermKind::Refl: {
      Judgment ja = expect_ty(*this, arg(t, 0));
      if (!is_neutral_ctx(ja.ctx))
        fail(ErrorClass::Neutrality, "refl needs a neutral context", t);
      Judgment jt = expect_tm(*this, arg(t, 1));
      if (!term_eq(jt.ctx, ja.ctx))
        fail(ErrorClass::Judgment, "refl endpoint lives in a different context", t);
      if (!term_eq(jt.type, nf(neg_ty(arg(t, 0)))))
        fail(ErrorClass::Sort, "refl endpoint must be a negative term of its type", t);
      return Judgment::tm(ja.ctx, nf(hom(arg(t, 0), arg(t, 1), neg_tm(arg(t, 1)))));
    }

    case TermKind::J:
    case TermKind::JSimple: {
      const Term& a = arg(t, 0);
      const Term& tt = arg(t, 1);
      const Term& motive = arg(t, 2);
      const Term& base = arg(t, 3);
      Judgment ja = expect_ty(*this, a);
      Term gamma = ja.ctx;
      if (!is_neutral_ctx(gamma))
        fail(ErrorClass::Neutrality, "directed path induction needs a neutral context", t);
      Judgment jt = expect_tm(*this, tt);
      if (!term_eq(jt.ctx, gamma) || !term_eq(jt.type, nf(neg_ty(a))))
        fail(ErrorClass::Sort, "induction anchor must be a negative term of the family", t);
      Term hom_wk = nf(hom(sub_ty(a, proj_pos(a)), sub_tm(tt, proj_pos(a)), var_pos(a)));
      Term ctx2 = nf(ext_pos(ext_pos(gamma, a), hom_wk));
      Judgment jm = expect_ty(*this, motive);
      Judgment jb = expect_tm(*this, base);
      if (t->kind == TermKind::J) {
        if (!term_eq(jm.ctx, ctx2))
          fail(ErrorClass::Sort, "motive must live over the hom-extended context", t);
        Term want = nf(sub_ty(motive, pair_pos(pair_pos(id_sub(gamma), neg_tm(tt)), refl(a, tt))));
        if (!term_eq(jb.ctx, gamma) || !term_eq(jb.type, want))
          fail(ErrorClass::Sort, "base case does not have the restricted motive type", t);
        return Judgment::tm(ctx2, nf(motive));
      }
      if (!term_eq(jm.ctx, nf(ext_pos(gamma, a))))
        fail(ErrorClass::Sort, "simple motive must live over the extended context", t);
      Term want = nf(sub_ty(motive, pair_pos(id_sub(gamma), neg_tm(tt))));
      if (!term_eq(jb.ctx, gamma) || !term_eq(jb.type, want))
        fail(ErrorClass::Sort, "base case does not have the restricted motive type", t);
      return Judgment::tm(ctx2, nf(sub_ty(motive, proj_pos(hom_wk))));
    }

    case TermKind::Lam: {
      Judgment jt = expect_tm(*this, arg(t, 0));
      if (jt.ctx->kind != TermKind::ExtNeg)
        fail(ErrorClass::Sort, "lambda body must live over a negative extension", t);
      Term gamma = jt.ctx->args[0];
      Term a = jt.ctx->args[1];
      return Judgment::tm(nf(gamma), nf(pi(a, jt.type)));
    }

    case TermKind::App: {
      Judgment jf = expect_tm(*this, arg(t, 0));
      if (jf.type->kind != TermKind::Pi)
        fail(ErrorClass::Sort, "application needs a term of a function type", t);
      Term a = jf.type->args[0];
      Term b = jf.type->args[1];
      return Judgment::tm(nf(ext_neg(jf.ctx, a)), b);
    }

    case TermKind::ConstTm: {
      const Declaration* d = sig_.find(t->name);
      if (!d) fail(ErrorClass::Unbound, "unbound constant '" + t->name + "'", t);
      if (d->sort.kind != SortExpr::Kind::Tm)
        fail(ErrorClass::Sort, "constant '" + t->name + "' is not a term", t);
      return judgment_of_sort(d->sort);
    }
  }
  fail(ErrorClass::Sort, "unhandled constructor", t);
}

SignatureReport wf_signature(const Signature& sig) {
  SignatureReport rep;
  Signature prefix;
  for (const Declaration& d : sig.declarations()) {
    try {
      Checker ck(prefix);
      // sort expression components must be well-formed under the prefix
      switch (d.sort.kind) {
        case SortExpr::Kind::Con:
        case SortExpr::Kind::NCon:
          break;
        case SortExpr::Kind::Sub: {
          if (ck.infer(d.sort.a).sort != Judgment::Sort::Con ||
              ck.infer(d.sort.b).sort != Judgment::Sort::Con)
            throw KernelError(ErrorClass::Sort, "substitution sort needs two contexts");
          break;
        }
        case SortExpr::Kind::Ty:
        case SortExpr::Kind::NTy: {
          if (ck.infer(d.sort.a).sort != Judgment::Sort::Con)
            throw KernelError(ErrorClass::Sort, "type sort needs a context");
          break;
        }
        case SortExpr::Kind::Tm: {
          if (ck.infer(d.sort.a).sort != Judgment::Sort::Con)
            throw KernelError(ErrorClass::Sort, "term sort needs a context");
          Judgment jb = ck.infer(d.sort.b);
          if (jb.sort != Judgment::Sort::Ty || !term_eq(jb.ctx, ck.nf(d.sort.a)))
            throw KernelError(ErrorClass::Sort, "term sort needs a type over its context");
          break;
        }
      }
      if (d.definition) {
        Judgment actual = ck.infer(d.definition);
        bool match = false;
        switch (d.sort.kind) {
          case SortExpr::Kind::Con:
            match = actual.sort == Judgment::Sort::Con;
            break;
          case SortExpr::Kind::NCon:
            match = actual.sort == Judgment::Sort::Con && actual.neutral;
            break;
          case SortExpr::Kind::Sub:
            match = actual.sort == Judgment::Sort::Sub && term_eq(actual.dom, ck.nf(d.sort.a)) &&
                    term_eq(actual.cod, ck.nf(d.sort.b));
            break;
          case SortExpr::Kind::Ty:
          case SortExpr::Kind::NTy:
            match = actual.sort == Judgment::Sort::Ty && term_eq(actual.ctx, ck.nf(d.sort.a)) &&
                    (d.sort.kind == SortExpr::Kind::Ty || actual.neutral);
            break;
          case SortExpr::Kind::Tm:
            match = actual.sort == Judgment::Sort::Tm && term_eq(actual.ctx, ck.nf(d.sort.a)) &&
                    term_eq(actual.type, ck.nf(d.sort.b));
            break;
        }
        if (!match)
          throw KernelError(ErrorClass::Sort, "definition does not match its declared sort");
      }
      if (d.definition)
        prefix.define(d.name, d.sort, d.definition);
      else
        prefix.declare(d.name, d.sort);
    } catch (const KernelError& e) {
      rep.ok = false;
      rep.failing_declaration = d.name;
      rep.error = e.what();
      rep.error_class = e.cls();
      return rep;
    }
  }
  return rep;
}

TruncationVerdict truncation_collapse(const Term& u, const Term& v, const Signature& sig) {
  Checker ck(sig);
  Judgment ju = ck.infer(u);
  Judgment jv = ck.infer(v);
  if (ju.sort != Judgment::Sort::Tm || jv.sort != Judgment::Sort::Tm ||
      !judgment_eq(ju, jv))
    throw KernelError(ErrorClass::Judgment, "truncation needs two terms of one type");
  const Term& ty = ju.type;
  if (ty->kind == TermKind::Hom) {
    Term inner = ty->args[0];
    if (inner->kind == TermKind::NegTy) inner = inner->args[0];
    if (inner->kind == TermKind::Hom) return TruncationVerdict::Equal;
  }
  return TruncationVerdict::NotApplicable;
}

std::vector<std::string> audit_var_neg(const Term& t, const Signature& sig) {
  std::vector<std::string> out;
  Checker ck(sig);
  auto walk = [&](auto&& self, const Term& node) -> void {
    if (node->kind == TermKind::NegTm) {
      try {
        Judgment j = ck.infer(node->args[0]);
        if (j.sort != Judgment::Sort::Tm || !ck.is_neutral_ctx(j.ctx))
          out.push_back("term negation outside a neutral context");
      } catch (const KernelError& e) {
        out.push_back(std::string("unverifiable term negation: ") + e.what());
      }
    }
    for (const Term& a : node->args) self(self, a);
  };
  walk(walk, t);
  return out;
}

Judgment infer(const Term& t, const Signature& sig) {
  Checker ck(sig);
  return ck.infer(t);
}

NormalizeResult normalize(const Term& t, const Signature& sig, std::size_t max_steps) {
  Checker ck(sig, max_steps);
  return ck.normalize(t);
}

EqualResult check_equal(const Term& u, const Term& v, const Signature& sig,
                        const std::vector<const SemanticOracle*>& oracles) {
  Checker ck(sig);
  return ck.check_equal(u, v, oracles);
}

std::string judgment_to_string(const Judgment& j);  // defined with the printer

}  // namespace dtt
