#pragma once

#include <string>
#include <vector>

#include "hilbert/algebra.hpp"
#include "hilbert/report.hpp"

namespace hilbert {

struct NamedAlgebra {
  std::string name;
  Algebra algebra;
};

/// Per-algebra suites in run order, then "cross-survey".
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// One suite on one algebra. Exceptions escaping a check become a failing
/// "<suite>/exception" result; PreconditionError becomes a skip.
VerificationReport run_suite(const std::string& suite, const Algebra& a);

/// Pairwise comparisons over the whole list: filter lattices vs adjoint
/// semilattices, endomorphism monoids vs adjoint semilattices and closure
/// endomorphisms, and monoid rigidity for implicative semilattices.
VerificationReport cross_survey(const std::vector<NamedAlgebra>& algebras, int jobs = 1);

/// Runs `suites` ("all" expands to every suite) on each algebra and folds
/// the results per check name. Output order depends only on the inputs,
/// never on `jobs`.
VerificationReport verify(const std::vector<NamedAlgebra>& algebras, const std::vector<std::string>& suites,
                          int jobs = 1);

}  // namespace hilbert
