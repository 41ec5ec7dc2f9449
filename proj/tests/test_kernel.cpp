#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dtt/kernel.hpp"

using namespace dtt;

namespace {

SortExpr s_con() { return {SortExpr::Kind::Con, nullptr, nullptr}; }
SortExpr s_ncon() { return {SortExpr::Kind::NCon, nullptr, nullptr}; }
SortExpr s_ty(Term ctx) { return {SortExpr::Kind::Ty, std::move(ctx), nullptr}; }
SortExpr s_nty(Term ctx) { return {SortExpr::Kind::NTy, std::move(ctx), nullptr}; }
SortExpr s_tm(Term ctx, Term ty) { return {SortExpr::Kind::Tm, std::move(ctx), std::move(ty)}; }

// closed signature: a type A with a negative and a positive point, a neutral
// type N, another closed type C with a point c
Signature base_sig() {
  Signature sig;
  sig.declare("A", s_ty(empty_ctx()));
  sig.declare("N", s_nty(empty_ctx()));
  sig.declare("C", s_ty(empty_ctx()));
  sig.declare("a", s_tm(empty_ctx(), neg_ty(const_ty("A"))));
  sig.declare("b", s_tm(empty_ctx(), const_ty("A")));
  sig.declare("c", s_tm(empty_ctx(), const_ty("C")));
  sig.declare("n", s_tm(empty_ctx(), neg_ty(const_ty("N"))));
  return sig;
}

Term A() { return const_ty("A"); }
Term N() { return const_ty("N"); }
Term C() { return const_ty("C"); }
Term a_() { return const_tm("a"); }
Term b_() { return const_tm("b"); }
Term c_() { return const_tm("c"); }

}  // namespace

TEST_CASE("the empty context is neutral") {
  Signature sig;
  Judgment j = infer(empty_ctx(), sig);
  CHECK(j.sort == Judgment::Sort::Con);
  CHECK(j.neutral);
}

TEST_CASE("refl infers to the hom with a coerced endpoint") {
  Signature sig = base_sig();
  Judgment j = infer(refl(A(), a_()), sig);
  REQUIRE(j.sort == Judgment::Sort::Tm);
  CHECK(term_eq(j.ctx, empty_ctx()));
  CHECK(term_eq(j.type, hom(A(), a_(), neg_tm(a_()))));
}

TEST_CASE("negating a variable of a non-neutral type is a variance error") {
  Signature sig = base_sig();
  Term bad = neg_tm(var_pos(A()));
  try {
    infer(bad, sig);
    FAIL("expected a variance error");
  } catch (const KernelError& e) {
    CHECK(e.cls() == ErrorClass::Variance);
  }
}

TEST_CASE("negating a variable of a neutral type is fine") {
  Signature sig = base_sig();
  Judgment j = infer(neg_tm(var_pos(N())), sig);
  CHECK(j.sort == Judgment::Sort::Tm);
}

TEST_CASE("function types live over the double negation of their domain context") {
  Signature sig = base_sig();
  Term b_fam = sub_ty(C(), proj_neg(A()));
  Judgment j = infer(pi(A(), b_fam), sig);
  REQUIRE(j.sort == Judgment::Sort::Ty);
  CHECK(term_eq(j.ctx, empty_ctx()));
  CHECK_FALSE(j.neutral);
}

TEST_CASE("hom types are neutral; mixed-polarity endpoints are variance errors") {
  Signature sig = base_sig();
  Judgment j = infer(hom(A(), a_(), b_()), sig);
  REQUIRE(j.sort == Judgment::Sort::Ty);
  CHECK(j.neutral);

  try {
    infer(hom(A(), a_(), a_()), sig);  // a is negative, used positively
    FAIL("expected a variance error");
  } catch (const KernelError& e) {
    CHECK(e.cls() == ErrorClass::Variance);
  }
  try {
    infer(hom(A(), b_(), b_()), sig);  // b is positive, used negatively
    FAIL("expected a variance error");
  } catch (const KernelError& e) {
    CHECK(e.cls() == ErrorClass::Variance);
  }
}

TEST_CASE("category laws and pairing laws normalize") {
  Signature sig = base_sig();
  Checker ck(sig);

  Term sigma = id_sub(empty_ctx());
  CHECK(term_eq(ck.nf(comp(id_sub(empty_ctx()), sigma)), sigma));

  // p+ . <id, b> = id
  Term pair = pair_pos(id_sub(empty_ctx()), b_());
  CHECK(term_eq(ck.nf(comp(proj_pos(A()), pair)), id_sub(empty_ctx())));
  // v[<id, b>] = b
  CHECK(term_eq(ck.nf(sub_tm(var_pos(A()), pair)), b_()));
  // surjective pairing
  Term eta = pair_pos(proj_pos(A()), var_pos(A()));
  CHECK(term_eq(ck.nf(eta), id_sub(ext_pos(empty_ctx(), A()))));
}

TEST_CASE("double negations cancel on all four sorts") {
  Signature sig = base_sig();
  sig.declare("G", s_ncon());
  Checker ck(sig);
  Term G = const_ctx("G");
  CHECK(term_eq(ck.nf(neg_ctx(neg_ctx(G))), G));
  CHECK(term_eq(ck.nf(neg_sub(neg_sub(id_sub(G)))), id_sub(G)));
  CHECK(term_eq(ck.nf(neg_ty(neg_ty(A()))), A()));
  CHECK(term_eq(ck.nf(neg_tm(neg_tm(a_()))), a_()));
}

TEST_CASE("negation distributes and the comparison substitutions cancel") {
  Signature sig = base_sig();
  sig.declare("G", s_ncon());
  sig.declare("AG", s_ty(const_ctx("G")));
  Checker ck(sig);
  Term G = const_ctx("G");
  Term AG = const_ty("AG");

  CHECK(term_eq(ck.nf(comp(e_sub(G), e_inv(G))), id_sub(neg_ctx(G))));
  CHECK(term_eq(ck.nf(comp(e_inv(G), e_sub(G))), id_sub(G)));
  CHECK(term_eq(ck.nf(neg_sub(e_sub(G))), e_inv(G)));
  CHECK(term_eq(ck.nf(e_sub(neg_ctx(G))), e_inv(G)));

  // (G |>+ AG)^- = G^- |>- AG^-
  CHECK(term_eq(ck.nf(neg_ctx(ext_pos(G, AG))), ck.nf(ext_neg(neg_ctx(G), neg_ty(AG)))));

  // stability of type negation under substitution
  Term via_neg_first = sub_ty(neg_ty(AG), e_inv(G));
  Term via_sub_first = neg_ty(sub_ty(AG, e_inv(G)));
  CHECK(term_eq(ck.nf(via_neg_first), ck.nf(via_sub_first)));
}

TEST_CASE("directed path induction contracts on its base point") {
  Signature sig = base_sig();
  Checker ck(sig);
  // constant motive over the extension; base point c
  Term motive = sub_ty(C(), proj_pos(A()));
  Term js = j_simple(A(), a_(), motive, c_());
  Judgment j = infer(js, sig);
  REQUIRE(j.sort == Judgment::Sort::Tm);

  Term restricted = sub_tm(js, pair_pos(pair_pos(id_sub(empty_ctx()), neg_tm(a_())), refl(A(), a_())));
  CHECK(term_eq(ck.nf(restricted), c_()));

  // the full rule contracts the same way
  Term hom_wk = hom(sub_ty(A(), proj_pos(A())), sub_tm(a_(), proj_pos(A())), var_pos(A()));
  Term motive2 = sub_ty(C(), comp(proj_pos(A()), proj_pos(hom_wk)));
  Term jf = j_full(A(), a_(), motive2, c_());
  CHECK(infer(jf, sig).sort == Judgment::Sort::Tm);
  Term restricted2 =
      sub_tm(jf, pair_pos(pair_pos(id_sub(empty_ctx()), neg_tm(a_())), refl(A(), a_())));
  CHECK(term_eq(ck.nf(restricted2), c_()));
}

TEST_CASE("function beta and eta round-trips") {
  Signature sig = base_sig();
  sig.declare("f", s_tm(empty_ctx(), pi(A(), sub_ty(C(), proj_neg(A())))));
  Checker ck(sig);
  Term body = app(const_tm("f"));
  CHECK(infer(body, sig).sort == Judgment::Sort::Tm);
  CHECK(term_eq(ck.nf(lam(app(const_tm("f")))), const_tm("f")));
  CHECK(term_eq(ck.nf(app(lam(body))), ck.nf(body)));
}

TEST_CASE("check_equal is reflexive and three-valued") {
  Signature sig = base_sig();
  Checker ck(sig);
  EqualResult r = ck.check_equal(b_(), b_());
  CHECK(r.verdict == Verdict::Equal);

  // no model registered: distinct constants are inconclusive, not unequal
  sig.declare("b2", s_tm(empty_ctx(), const_ty("A")));
  Checker ck2(sig);
  EqualResult r2 = ck2.check_equal(const_tm("b"), const_tm("b2"));
  CHECK(r2.verdict == Verdict::Inconclusive);

  CHECK_THROWS_AS((void)ck2.check_equal(const_tm("b"), const_tm("a")), KernelError);
}

TEST_CASE("signature well-formedness reports the first failing declaration") {
  Signature good = base_sig();
  good.declare("r", s_tm(empty_ctx(), hom(A(), a_(), neg_tm(a_()))));
  SignatureReport rep = wf_signature(good);
  CHECK(rep.ok);

  CHECK(wf_signature(Signature{}).ok);

  Signature bad;
  bad.declare("S", s_ty(empty_ctx()));
  bad.declare("bad", s_tm(ext_pos(empty_ctx(), const_ty("S")),
                          hom(sub_ty(const_ty("S"), proj_pos(const_ty("S"))),
                              neg_tm(var_pos(const_ty("S"))), var_pos(const_ty("S")))));
  SignatureReport rep2 = wf_signature(bad);
  CHECK_FALSE(rep2.ok);
  CHECK(rep2.failing_declaration == "bad");
  CHECK(rep2.error_class == ErrorClass::Variance);
}

TEST_CASE("parallel homs between homs collapse; level-one homs do not") {
  Signature sig = base_sig();
  Term H = hom(A(), a_(), b_());
  sig.declare("p", s_tm(empty_ctx(), neg_ty(H)));
  sig.declare("q", s_tm(empty_ctx(), H));
  sig.declare("u", s_tm(empty_ctx(), hom(H, const_tm("p"), const_tm("q"))));
  sig.declare("v", s_tm(empty_ctx(), hom(H, const_tm("p"), const_tm("q"))));
  CHECK(truncation_collapse(const_tm("u"), const_tm("v"), sig) == TruncationVerdict::Equal);
  CHECK(truncation_collapse(const_tm("q"), const_tm("q"), sig) ==
        TruncationVerdict::NotApplicable);
  CHECK_THROWS_AS((void)truncation_collapse(const_tm("u"), const_tm("q"), sig), KernelError);
}

TEST_CASE("rewriting preserves judgments on a pile of sample terms") {
  Signature sig = base_sig();
  sig.declare("G", s_ncon());
  sig.declare("AG", s_ty(const_ctx("G")));
  Term G = const_ctx("G");
  Term AG = const_ty("AG");
  std::vector<Term> samples = {
      comp(id_sub(empty_ctx()), id_sub(empty_ctx())),
      comp(proj_pos(A()), pair_pos(id_sub(empty_ctx()), b_())),
      sub_tm(var_pos(A()), pair_pos(id_sub(empty_ctx()), b_())),
      neg_ty(neg_ty(AG)),
      neg_ctx(ext_pos(G, AG)),
      neg_sub(comp(e_inv(G), e_sub(G))),
      sub_ty(neg_ty(AG), e_inv(G)),
      refl(N(), const_tm("n")),
      sub_tm(j_simple(A(), a_(), sub_ty(C(), proj_pos(A())), c_()),
             pair_pos(pair_pos(id_sub(empty_ctx()), neg_tm(a_())), refl(A(), a_()))),
  };
  for (const Term& t : samples) {
    Checker ck(sig);
    Judgment before = ck.infer(t);
    Term cur = t;
    for (int i = 0; i < 50; ++i) {
      auto stepped = ck.rewrite_once(cur);
      if (!stepped) break;
      cur = *stepped;
      Judgment after = ck.infer(cur);
      CHECK(judgment_eq(before, after));
    }
  }
}

TEST_CASE("normal forms carry no doubled negations") {
  Signature sig = base_sig();
  sig.declare("G", s_ncon());
  sig.declare("AG", s_ty(const_ctx("G")));
  Checker ck(sig);
  std::vector<Term> samples = {
      neg_ctx(neg_ctx(neg_ctx(const_ctx("G")))),
      neg_ty(neg_ty(sub_ty(const_ty("AG"), e_inv(const_ctx("G"))))),
      neg_tm(neg_tm(neg_tm(neg_tm(a_())))),
      neg_sub(neg_sub(proj_pos(A()))),
  };
  auto no_doubles = [](const Term& t) {
    auto walk = [](auto&& self, const Term& n) -> bool {
      if ((n->kind == TermKind::NegCtx || n->kind == TermKind::NegSub ||
           n->kind == TermKind::NegTy || n->kind == TermKind::NegTm) &&
          n->args[0]->kind == n->kind)
        return false;
      for (const Term& a : n->args)
        if (!self(self, a)) return false;
      return true;
    };
    return walk(walk, t);
  };
  for (const Term& t : samples) CHECK(no_doubles(ck.nf(t)));
}

TEST_CASE("term negation audit walks the whole tree") {
  Signature sig = base_sig();
  Term good = refl(N(), const_tm("n"));
  CHECK(audit_var_neg(good, sig).empty());
  Term bad = hom(sub_ty(A(), proj_pos(A())), neg_tm(var_pos(A())), var_pos(A()));
  CHECK_FALSE(audit_var_neg(bad, sig).empty());
}
