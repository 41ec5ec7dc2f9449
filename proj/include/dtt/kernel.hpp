#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "dtt/term.hpp"

namespace dtt {

enum class ErrorClass {
  Sort,        // malformed application of a constructor
  Variance,    // term negated (or used at the wrong polarity) outside a neutral context
  Neutrality,  // refl / J / e used outside a neutral context
  Unbound,     // unresolved constant
  Judgment,    // operands with mismatched judgments
  Parse,
  Model,
};

const char* error_class_name(ErrorClass c);

class KernelError : public std::runtime_error {
 public:
  KernelError(ErrorClass cls, const std::string& msg)
      : std::runtime_error(std::string(error_class_name(cls)) + ": " + msg), cls_(cls) {}
  ErrorClass cls() const { return cls_; }

 private:
  ErrorClass cls_;
};

/// The inferred sort of a term. Component terms are kept in normal form.
struct Judgment {
  enum class Sort { Con, Sub, Ty, Tm };
  Sort sort;
  bool neutral = false;  // Con, Ty
  Term dom, cod;         // Sub
  Term ctx, type;        // Ty: ctx; Tm: ctx and type

  static Judgment con(bool neutral);
  static Judgment sub(Term dom, Term cod);
  static Judgment ty(Term ctx, bool neutral);
  static Judgment tm(Term ctx, Term type);
};

bool judgment_eq(const Judgment& a, const Judgment& b);
std::string judgment_to_string(const Judgment& j);

/// Declared sort of a signature constant.
struct SortExpr {
  enum class Kind { Con, NCon, Sub, Ty, NTy, Tm } kind;
  Term a, b;  // Sub: dom, cod; Ty/NTy: ctx; Tm: ctx, type
};

struct Declaration {
  std::string name;
  SortExpr sort;
  Term definition;  // null for abstract constants
};

class Signature {
 public:
  void declare(const std::string& name, SortExpr sort);
  void define(const std::string& name, SortExpr sort, Term body);
  const Declaration* find(const std::string& name) const;
  const std::vector<Declaration>& declarations() const { return decls_; }
  bool empty() const { return decls_.empty(); }

 private:
  std::vector<Declaration> decls_;
  std::map<std::string, std::size_t> index_;
};

struct NormalizeResult {
  Term term;
  std::size_t steps = 0;
  bool budget_exceeded = false;
};

enum class Verdict { Equal, NotEqual, Inconclusive };

struct EqualResult {
  Verdict verdict;
  std::string witness;  // name of a distinguishing model, when NotEqual
  std::string detail;
};

/// Interface used by check_equal to look for semantic counterexamples.
/// Implemented by the category-model environments.
class SemanticOracle {
 public:
  virtual ~SemanticOracle() = default;
  virtual std::string name() const = 0;
  /// true/false when the model can decide denotational equality of the two
  /// terms, nullopt when it cannot interpret them.
  virtual std::optional<bool> denotations_equal(const Term& u, const Term& v,
                                                const Signature& sig) const = 0;
};

struct RewriteStep {
  std::string rule;
  Term before, after;
};

class Checker {
 public:
  explicit Checker(const Signature& sig, std::size_t max_steps = 10000);

  Judgment infer(const Term& t);
  NormalizeResult normalize(const Term& t);
  Term nf(const Term& t);  // normalize, throwing away the step count
  EqualResult check_equal(const Term& u, const Term& v,
                          const std::vector<const SemanticOracle*>& oracles = {});
  bool is_neutral_ctx(const Term& ctx);

  /// One rewrite step anywhere in the term, if any rule applies.
  std::optional<Term> rewrite_once(const Term& t);

  const Signature& signature() const { return sig_; }
  std::size_t max_steps_rw() const;
  std::vector<RewriteStep>* trace = nullptr;

 private:
  friend class Rewriter;
  Judgment infer_rec(const Term& t);
  Judgment infer_sub_at(const Term& s, const Term& expected_cod_nf);
  Judgment judgment_of_sort(const SortExpr& s);
  Term nf_lookup(const Term& t) const;
  void nf_store(const Term& t, const Term& n);
  Term nf_internal(const Term& t);

  const Signature& sig_;
  std::size_t max_steps_;
  std::unordered_map<Term, Judgment, TermHash, TermEq> infer_cache_;
  std::unordered_map<Term, Term, TermHash, TermEq> nf_cache_;
  int infer_depth_ = 0;
};

/// Report-valued well-formedness check of a signature, declaration by
/// declaration; stops at the first failure.
struct SignatureReport {
  bool ok = true;
  std::string failing_declaration;
  std::string error;
  ErrorClass error_class = ErrorClass::Sort;
};

SignatureReport wf_signature(const Signature& sig);

enum class TruncationVerdict { Equal, NotApplicable };

/// Parallel morphisms between morphisms are identified: terms of a common
/// hom-over-hom type are equal outright.
TruncationVerdict truncation_collapse(const Term& u, const Term& v, Signature const& sig);

/// Re-checks every term negation in the tree against the neutrality of its
/// inferred context. Returns human-readable violations.
std::vector<std::string> audit_var_neg(const Term& t, const Signature& sig);

// convenience wrappers
Judgment infer(const Term& t, const Signature& sig);
NormalizeResult normalize(const Term& t, const Signature& sig, std::size_t max_steps = 10000);
EqualResult check_equal(const Term& u, const Term& v, const Signature& sig,
                        const std::vector<const SemanticOracle*>& oracles = {});

}  // namespace dtt
