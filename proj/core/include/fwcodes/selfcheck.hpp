#ifndef FWCODES_SELFCHECK_HPP
#define FWCODES_SELFCHECK_HPP

#include <string>
#include <vector>

namespace fwc::selfcheck {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// The full verification sweep: worked binary-code fixtures, three-way
/// spectrum agreement, counting closed forms, random-complex enumeration
/// oracles, Gray isometry, Griesmer certificates, and structural invariants.
/// Exceptions inside a check are caught and reported as failures. `workers`
/// is forwarded to the spectrum computations (0 = hardware concurrency).
std::vector<CheckResult> run_all(int workers = 0);

}  // namespace fwc::selfcheck

#endif
