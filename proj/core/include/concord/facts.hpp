#pragma once

// Declared facts: topological statements the toolchain records but never
// verifies (sliceness, unknotted curves, nonvanishing rho^1, prime
// decompositions).  Certificates surface them as explicit assumptions.

#include <concord/rational.hpp>

#include <string>
#include <vector>

namespace concord {

enum class FactKind { Slice, UnknottedCurve, Rho1Nonzero, PrimeDecomposition, RibbonMove };

struct DeclaredFact {
    FactKind kind;
    std::string citation;                      // required nonempty
    std::vector<std::string> factor_names;     // PrimeDecomposition payload
    std::string text;                          // RibbonMove payload
};

std::string to_string(FactKind k);

inline DeclaredFact make_fact(FactKind kind, std::string citation) {
    if (citation.empty()) throw Error("declared fact requires a citation");
    return DeclaredFact{kind, std::move(citation), {}, {}};
}

inline std::string to_string(FactKind k) {
    switch (k) {
        case FactKind::Slice: return "slice";
        case FactKind::UnknottedCurve: return "unknotted_curve";
        case FactKind::Rho1Nonzero: return "rho1_nonzero";
        case FactKind::PrimeDecomposition: return "prime_decomposition";
        case FactKind::RibbonMove: return "ribbon_move";
    }
    return "?";
}

}  // namespace concord
