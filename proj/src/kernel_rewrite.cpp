#include "dtt/kernel.hpp"

namespace dtt {

namespace {

bool is_kind(const Term& t, TermKind k) { return t && t->kind == k; }

}  // namespace

/// One-step head rewriting plus the fixpoint driver. The rule set orients
/// the equational theory: substitutions are pushed through the formers,
/// composites are right-nested and cancelled, double negations vanish on
/// all four sorts, and the beta rules for pairing, functions and directed
/// path induction contract.
class Rewriter {
 public:
  Rewriter(Checker& ck) : ck_(ck) {}

  Checker& ck_;
  std::size_t steps = 0;
  bool budget_hit = false;

  bool spend(const char* rule, const Term& before, const Term& after) {
    if (steps >= ck_.max_steps_rw()) {
      budget_hit = true;
      return false;
    }
    ++steps;
    if (ck_.trace) ck_.trace->push_back({rule, before, after});
    return true;
  }

  // structural domain of a substitution; uses inference only for the
  // contexts of annotation types
  Term sub_dom(const Term& s) {
    switch (s->kind) {
      case TermKind::IdSub: return s->args[0];
      case TermKind::Comp: return sub_dom(s->args[1]);
      case TermKind::NegSub: return neg_ctx(sub_dom(s->args[0]));
      case TermKind::ProjPos: return ext_pos(ck_.infer(s->args[0]).ctx, s->args[0]);
      case TermKind::ProjNeg: {
        Term gamma = neg_ctx(ck_.infer(s->args[0]).ctx);
        return ext_neg(gamma, s->args[0]);
      }
      case TermKind::PairPos:
      case TermKind::PairNeg: return sub_dom(s->args[0]);
      case TermKind::E: return s->args[0];
      case TermKind::EInv: return neg_ctx(s->args[0]);
      case TermKind::ExtE: return ext_pos(ck_.infer(s->args[0]).ctx, s->args[0]);
      case TermKind::ConstSub: {
        const Declaration* d = ck_.signature().find(s->name);
        if (!d || d->sort.kind != SortExpr::Kind::Sub)
          throw KernelError(ErrorClass::Unbound, "unknown substitution constant");
        return d->sort.a;
      }
      default: throw KernelError(ErrorClass::Sort, "not a substitution");
    }
  }

  bool neutral_dom(const Term& s) {
    try {
      return ck_.is_neutral_ctx(ck_.nf_internal(sub_dom(s)));
    } catch (const KernelError&) {
      return false;
    }
  }

  bool neutral_ctx_term(const Term& g) {
    try {
      return ck_.is_neutral_ctx(ck_.nf_internal(g));
    } catch (const KernelError&) {
      return false;
    }
  }

  std::optional<Term> head(const Term& t) {
    switch (t->kind) {
      case TermKind::NegCtx: {
        const Term& g = t->args[0];
        if (is_kind(g, TermKind::NegCtx)) return g->args[0];
        if (is_kind(g, TermKind::EmptyCtx)) return empty_ctx();
        if (is_kind(g, TermKind::ExtPos))
          return ext_neg(neg_ctx(g->args[0]), neg_ty(g->args[1]));
        if (is_kind(g, TermKind::ExtNeg))
          return ext_pos(neg_ctx(g->args[0]), neg_ty(g->args[1]));
        break;
      }

      case TermKind::Comp: {
        const Term& o = t->args[0];
        const Term& i = t->args[1];
        if (is_kind(o, TermKind::IdSub)) return i;
        if (is_kind(i, TermKind::IdSub)) return o;
        if (is_kind(o, TermKind::Comp)) return comp(o->args[0], comp(o->args[1], i));
        if (is_kind(o, TermKind::ProjPos)) {
          if (is_kind(i, TermKind::PairPos)) return i->args[0];
          if (is_kind(i, TermKind::Comp) && is_kind(i->args[0], TermKind::PairPos))
            return comp(i->args[0]->args[0], i->args[1]);
        }
        if (is_kind(o, TermKind::ProjNeg)) {
          if (is_kind(i, TermKind::PairNeg)) return i->args[0];
          if (is_kind(i, TermKind::Comp) && is_kind(i->args[0], TermKind::PairNeg))
            return comp(i->args[0]->args[0], i->args[1]);
          // p-(A[e-]) after the extension comparison collapses to p+(A)
          auto matches_exte = [&](const Term& a1, const Term& a) {
            if (term_eq(a1, a)) return true;
            return is_kind(a1, TermKind::SubTy) && is_kind(a1->args[1], TermKind::EInv) &&
                   term_eq(a1->args[0], a);
          };
          if (is_kind(i, TermKind::ExtE) && matches_exte(o->args[0], i->args[0]))
            return proj_pos(i->args[0]);
          if (is_kind(i, TermKind::Comp) && is_kind(i->args[0], TermKind::ExtE) &&
              matches_exte(o->args[0], i->args[0]->args[0]))
            return comp(proj_pos(i->args[0]->args[0]), i->args[1]);
        }
        if (is_kind(o, TermKind::E)) {
          if (is_kind(i, TermKind::EInv) && term_eq(o->args[0], i->args[0]))
            return id_sub(neg_ctx(o->args[0]));
          if (is_kind(i, TermKind::Comp) && is_kind(i->args[0], TermKind::EInv) &&
              term_eq(o->args[0], i->args[0]->args[0]))
            return i->args[1];
        }
        if (is_kind(o, TermKind::EInv)) {
          if (is_kind(i, TermKind::E) && term_eq(o->args[0], i->args[0]))
            return id_sub(o->args[0]);
          if (is_kind(i, TermKind::Comp) && is_kind(i->args[0], TermKind::E) &&
              term_eq(o->args[0], i->args[0]->args[0]))
            return i->args[1];
        }
        if (is_kind(o, TermKind::PairPos))
          return pair_pos(comp(o->args[0], i), sub_tm(o->args[1], i));
        if (is_kind(o, TermKind::PairNeg))
          return pair_neg(comp(o->args[0], i), sub_tm(o->args[1], neg_sub(i)));
        break;
      }

      case TermKind::NegSub: {
        const Term& s = t->args[0];
        switch (s->kind) {
          case TermKind::NegSub: return s->args[0];
          case TermKind::IdSub: return id_sub(neg_ctx(s->args[0]));
          case TermKind::Comp: return comp(neg_sub(s->args[0]), neg_sub(s->args[1]));
          case TermKind::ProjPos: return proj_neg(neg_ty(s->args[0]));
          case TermKind::ProjNeg: return proj_pos(neg_ty(s->args[0]));
          case TermKind::PairPos: return pair_neg(neg_sub(s->args[0]), s->args[1]);
          case TermKind::PairNeg: return pair_pos(neg_sub(s->args[0]), s->args[1]);
          case TermKind::E: return e_inv(s->args[0]);
          case TermKind::EInv: return e_sub(s->args[0]);
          default: break;
        }
        break;
      }

      case TermKind::E: {
        if (is_kind(t->args[0], TermKind::NegCtx)) return e_inv(t->args[0]->args[0]);
        if (is_kind(t->args[0], TermKind::EmptyCtx)) return id_sub(empty_ctx());
        break;
      }
      case TermKind::EInv: {
        if (is_kind(t->args[0], TermKind::NegCtx)) return e_sub(t->args[0]->args[0]);
        if (is_kind(t->args[0], TermKind::EmptyCtx)) return id_sub(empty_ctx());
        break;
      }

      case TermKind::PairPos: {
        const Term& s = t->args[0];
        const Term& u = t->args[1];
        // surjective pairing, contracted
        if (is_kind(s, TermKind::Comp) && is_kind(s->args[0], TermKind::ProjPos) &&
            is_kind(u, TermKind::SubTm) && is_kind(u->args[0], TermKind::VarPos) &&
            term_eq(s->args[0]->args[0], u->args[0]->args[0]) &&
            term_eq(s->args[1], u->args[1]))
          return s->args[1];
        if (is_kind(s, TermKind::ProjPos) && is_kind(u, TermKind::VarPos) &&
            term_eq(s->args[0], u->args[0])) {
          try {
            Term gamma = ck_.infer(s->args[0]).ctx;
            return id_sub(ext_pos(gamma, s->args[0]));
          } catch (const KernelError&) {
          }
        }
        break;
      }

      case TermKind::PairNeg: {
        const Term& s = t->args[0];
        const Term& u = t->args[1];
        if (is_kind(s, TermKind::Comp) && is_kind(s->args[0], TermKind::ProjNeg) &&
            is_kind(u, TermKind::SubTm) && is_kind(u->args[0], TermKind::VarNeg) &&
            is_kind(u->args[1], TermKind::NegSub) &&
            term_eq(s->args[0]->args[0], u->args[0]->args[0]) &&
            term_eq(s->args[1], u->args[1]->args[0]))
          return s->args[1];
        if (is_kind(s, TermKind::ProjNeg) && is_kind(u, TermKind::VarNeg) &&
            term_eq(s->args[0], u->args[0])) {
          try {
            Term gamma = ck_.nf_internal(neg_ctx(ck_.infer(s->args[0]).ctx));
            return id_sub(ext_neg(gamma, s->args[0]));
          } catch (const KernelError&) {
          }
        }
        // over a neutral context, a negative pairing with the identity
        // factors through the extension comparison
        if (is_kind(s, TermKind::IdSub) && neutral_ctx_term(s->args[0])) {
          try {
            const Term& g = s->args[0];
            Judgment ju = ck_.infer(u);
            if (ju.sort == Judgment::Sort::Tm) {
              Term a = ck_.nf_internal(neg_ty(ju.type));
              Term a_over_g = ck_.nf_internal(sub_ty(a, e_sub(g)));
              return comp(ext_e(a_over_g), pair_pos(id_sub(g), neg_tm(sub_tm(u, e_sub(g)))));
            }
          } catch (const KernelError&) {
          }
        }
        break;
      }

      case TermKind::SubTy: {
        const Term& a = t->args[0];
        const Term& s = t->args[1];
        if (is_kind(s, TermKind::IdSub)) return a;
        if (is_kind(a, TermKind::SubTy)) return sub_ty(a->args[0], comp(a->args[1], s));
        if (is_kind(a, TermKind::NegTy)) return neg_ty(sub_ty(a->args[0], s));
        if (is_kind(a, TermKind::Hom))
          return hom(sub_ty(a->args[0], s), sub_tm(a->args[1], s), sub_tm(a->args[2], s));
        if (is_kind(a, TermKind::Pi)) {
          Term a2 = sub_ty(a->args[0], neg_sub(s));
          Term lifted = pair_neg(comp(s, proj_neg(a2)), var_neg(a2));
          return pi(a2, sub_ty(a->args[1], lifted));
        }
        if (is_kind(a, TermKind::El)) return el(sub_tm(a->args[0], s));
        break;
      }

      case TermKind::NegTy: {
        if (is_kind(t->args[0], TermKind::NegTy)) return t->args[0]->args[0];
        break;
      }

      case TermKind::SubTm: {
        const Term& u = t->args[0];
        const Term& s = t->args[1];
        if (is_kind(s, TermKind::IdSub)) return u;
        if (is_kind(u, TermKind::SubTm)) return sub_tm(u->args[0], comp(u->args[1], s));
        if (is_kind(u, TermKind::VarPos) || is_kind(u, TermKind::VarNeg)) {
          if (is_kind(s, TermKind::PairPos)) return s->args[1];
          if (is_kind(s, TermKind::Comp) && is_kind(s->args[0], TermKind::PairPos))
            return sub_tm(s->args[0]->args[1], s->args[1]);
          if (is_kind(u, TermKind::VarNeg) && is_kind(s, TermKind::NegSub) &&
              is_kind(s->args[0], TermKind::PairNeg))
            return s->args[0]->args[1];
        }
        if (is_kind(u, TermKind::NegTm) && neutral_dom(s))
          return neg_tm(sub_tm(u->args[0], s));
        if (is_kind(u, TermKind::Refl) && neutral_dom(s))
          return refl(sub_ty(u->args[0], s), sub_tm(u->args[1], s));
        if (is_kind(u, TermKind::J) || is_kind(u, TermKind::JSimple)) {
          // restriction along <<sigma, -t[sigma]>, refl> collapses to the base
          if (is_kind(s, TermKind::PairPos) && is_kind(s->args[0], TermKind::PairPos) &&
              is_kind(s->args[0]->args[1], TermKind::NegTm) &&
              is_kind(s->args[1], TermKind::Refl)) {
            const Term& sigma = s->args[0]->args[0];
            Term anchor = ck_.nf_internal(sub_tm(u->args[1], sigma));
            if (term_eq(ck_.nf_internal(s->args[0]->args[1]->args[0]), anchor) &&
                term_eq(ck_.nf_internal(s->args[1]->args[1]), anchor))
              return sub_tm(u->args[3], sigma);
          }
        }
        break;
      }

      case TermKind::NegTm: {
        if (is_kind(t->args[0], TermKind::NegTm)) return t->args[0]->args[0];
        break;
      }

      case TermKind::App: {
        if (is_kind(t->args[0], TermKind::Lam)) return t->args[0]->args[0];
        break;
      }
      case TermKind::Lam: {
        if (is_kind(t->args[0], TermKind::App)) return t->args[0]->args[0];
        break;
      }

      default: break;
    }

    // definitional unfolding of signature constants
    if (is_constant(t->kind)) {
      const Declaration* d = ck_.signature().find(t->name);
      if (d && d->definition) return d->definition;
    }
    return std::nullopt;
  }

  Term normalize(const Term& t) {
    if (budget_hit) return t;
    if (Term cached = ck_.nf_lookup(t)) return cached;
    Term cur = t;
    while (true) {
      if (auto stepped = head(cur)) {
        if (!spend(kind_name(cur->kind), cur, *stepped)) return cur;
        cur = *stepped;
        continue;
      }
      bool changed = false;
      std::vector<Term> kids;
      kids.reserve(cur->args.size());
      for (const Term& a : cur->args) {
        Term na = normalize(a);
        changed = changed || !term_eq(na, a);
        kids.push_back(na);
      }
      if (!changed) break;
      cur = mk(cur->kind, std::move(kids), cur->name);
    }
    if (!budget_hit) ck_.nf_store(t, cur);
    return cur;
  }
};

// --- Checker plumbing for the rewriter -------------------------------------

namespace {
thread_local Rewriter* g_active_rewriter = nullptr;
}

std::size_t Checker::max_steps_rw() const { return max_steps_; }

Term Checker::nf_lookup(const Term& t) const {
  auto it = nf_cache_.find(t);
  return it == nf_cache_.end() ? nullptr : it->second;
}

void Checker::nf_store(const Term& t, const Term& n) {
  nf_cache_.emplace(t, n);
  nf_cache_.emplace(n, n);
}

Term Checker::nf_internal(const Term& t) {
  if (g_active_rewriter && &g_active_rewriter->ck_ == this)
    return g_active_rewriter->normalize(t);
  Rewriter rw(*this);
  Rewriter* prev = g_active_rewriter;
  g_active_rewriter = &rw;
  Term r = rw.normalize(t);
  g_active_rewriter = prev;
  return r;
}

Term Checker::nf(const Term& t) { return nf_internal(t); }

NormalizeResult Checker::normalize(const Term& t) {
  Rewriter rw(*this);
  Rewriter* prev = g_active_rewriter;
  g_active_rewriter = &rw;
  Term r = rw.normalize(t);
  g_active_rewriter = prev;
  return {r, rw.steps, rw.budget_hit};
}

std::optional<Term> Checker::rewrite_once(const Term& t) {
  Rewriter rw(*this);
  Rewriter* prev = g_active_rewriter;
  g_active_rewriter = &rw;
  std::optional<Term> result;
  auto walk = [&](auto&& self, const Term& node) -> std::optional<Term> {
    if (auto stepped = rw.head(node)) return stepped;
    for (std::size_t i = 0; i < node->args.size(); ++i) {
      if (auto sub = self(self, node->args[i])) {
        std::vector<Term> kids = node->args;
        kids[i] = *sub;
        return mk(node->kind, std::move(kids), node->name);
      }
    }
    return std::nullopt;
  };
  result = walk(walk, t);
  g_active_rewriter = prev;
  return result;
}

}  // namespace dtt
