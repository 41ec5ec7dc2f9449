#include <sstream>

#include "dtt/kernel.hpp"

namespace dtt {

EqualResult Checker::check_equal(const Term& u, const Term& v,
                                 const std::vector<const SemanticOracle*>& oracles) {
  Judgment ju = infer(u);
  Judgment jv = infer(v);
  if (!judgment_eq(ju, jv))
    throw KernelError(ErrorClass::Judgment, "cannot compare terms of different judgments");

  NormalizeResult nu = normalize(u);
  NormalizeResult nv = normalize(v);
  if (term_eq(nu.term, nv.term)) return {Verdict::Equal, "", "identical normal forms"};

  for (const SemanticOracle* o : oracles) {
    if (!o) continue;
    std::optional<bool> same = o->denotations_equal(u, v, sig_);
    if (same.has_value() && !*same)
      return {Verdict::NotEqual, o->name(), "denotations differ in model '" + o->name() + "'"};
  }
  std::string detail = "normal forms differ and no registered model distinguishes the terms";
  if (nu.budget_exceeded || nv.budget_exceeded) detail += " (step budget exceeded)";
  return {Verdict::Inconclusive, "", detail};
}

std::string judgment_to_string(const Judgment& j) {
  std::ostringstream os;
  switch (j.sort) {
    case Judgment::Sort::Con: os << (j.neutral ? "NCon" : "Con"); break;
    case Judgment::Sort::Sub: os << "Sub"; break;
    case Judgment::Sort::Ty: os << (j.neutral ? "NTy" : "Ty"); break;
    case Judgment::Sort::Tm: os << "Tm"; break;
  }
  return os.str();
}

}  // namespace dtt
