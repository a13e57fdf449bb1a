#ifndef EMCOVER_TESTS_SUPPORT_HPP
#define EMCOVER_TESTS_SUPPORT_HPP

#include <string>
#include <vector>

#include "emcover/coverage.hpp"
#include "emcover/setsys.hpp"
#include "oracles.hpp"

namespace testing {

inline oracle::Family family(const emcover::Hypergraph& h) {
    return oracle::Family(h.edges().begin(), h.edges().end());
}

// Multiplicity law bookkeeping: every hypergraph on n > k vertices that
// passes audit(., k, 1) must have cover_multiplicity >= k - r + 1.
struct LawLedger {
    long checked = 0;
    std::vector<std::string> violations;
};

inline LawLedger& law_ledger() {
    static LawLedger ledger;
    return ledger;
}

// Returns false on a violation. Inputs that fail the audit are not counted.
inline bool record_multiplicity_law(const emcover::Hypergraph& h, int k, const std::string& origin) {
    if (h.n() <= k || k < h.r() - 1 || h.r() > h.n() - 1) return true;
    if (!emcover::audit(h, k, 1).covered) return true;
    auto& led = law_ledger();
    ++led.checked;
    const int mult = emcover::cover_multiplicity(h);
    if (mult >= k - h.r() + 1) return true;
    led.violations.push_back(origin + ": multiplicity " + std::to_string(mult) + " < " + std::to_string(k - h.r() + 1));
    return false;
}

}  // namespace testing

#endif  // EMCOVER_TESTS_SUPPORT_HPP
