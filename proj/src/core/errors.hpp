#pragma once

#include <stdexcept>
#include <string>

namespace hamcay {

enum class errc {
  invalid_spec,
  invalid_action,
  not_a_group,
  not_primitive_root,
  identity_in_s,
  duplicate_generator,
  not_normal,
  not_two_generated,
  not_connected,
  not_abelian,
  not_generating,
  commutator_not_contained,
  not_ham_cycle_in_quotient,
  skewed_set_not_generating,
  inner_cycle_not_found,
  not_cyclic_normal,
  precondition_failed,
  condition_failed,
  bad_prime,
  pattern_limit,
  budget_exceeded,
  arc_not_in_digraph,
  improvement_stalled,
  parse_error,
  io_error,
  internal,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_spec: return "InvalidSpec";
    case errc::invalid_action: return "InvalidAction";
    case errc::not_a_group: return "NotAGroup";
    case errc::not_primitive_root: return "NotPrimitiveRoot";
    case errc::identity_in_s: return "IdentityInS";
    case errc::duplicate_generator: return "DuplicateGenerator";
    case errc::not_normal: return "NotNormal";
    case errc::not_two_generated: return "NotTwoGenerated";
    case errc::not_connected: return "NotConnected";
    case errc::not_abelian: return "NotAbelian";
    case errc::not_generating: return "NotGenerating";
    case errc::commutator_not_contained: return "CommutatorNotContained";
    case errc::not_ham_cycle_in_quotient: return "NotHamCycleInQuotient";
    case errc::skewed_set_not_generating: return "SkewedSetNotGeneratingK";
    case errc::inner_cycle_not_found: return "InnerCycleNotFound";
    case errc::not_cyclic_normal: return "NotCyclicNormal";
    case errc::precondition_failed: return "PreconditionFailed";
    case errc::condition_failed: return "ConditionFailed";
    case errc::bad_prime: return "BadPrime";
    case errc::pattern_limit: return "PatternLimit";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::arc_not_in_digraph: return "ArcNotInDigraph";
    case errc::improvement_stalled: return "ImprovementStalled";
    case errc::parse_error: return "ParseError";
    case errc::io_error: return "IoError";
    case errc::internal: return "Internal";
  }
  return "Unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw error(c, msg); }

}  // namespace hamcay
