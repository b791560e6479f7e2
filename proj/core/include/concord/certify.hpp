#pragma once

// Family descriptions and independence certificates.  A family file names
// the deepest infecting knots (atlas twist knots or Seifert files), the
// slice base knot of every infection level, and the declared topological
// facts; the certifier checks each hypothesis computationally where
// possible, records the rest as explicit assumptions, and applies the
// independence theorem as a single trusted inference rule.

#include <concord/infection.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace concord {

struct LevelBase {
    AbstractKnot knot;
    ModuleElement eta;
};

struct FamilySpec {
    std::string name;
    long depth = 0;
    long bound = 16;
    std::vector<KnotLeaf> knots;
    // levels[i][j]: base of level j+1 for knot i
    std::vector<std::vector<LevelBase>> levels;
    std::vector<long> coefficients;  // empty when not supplied
};

// default bound 16, overridden by the CONCORDANCE_BOUND environment variable
long default_bound();

FamilySpec parse_family_text(const std::string& text, const std::string& filename);
FamilySpec parse_family(const std::string& path);

enum class HypothesisStatus { Verified, AssumedDeclared, Failed, UnknownAtBound };
std::string to_string(HypothesisStatus s);

struct HypothesisResult {
    std::string name;
    HypothesisStatus status;
    nlohmann::ordered_json evidence;
};

std::vector<HypothesisResult> check_hypotheses(const FamilySpec& spec);

// the conclusion gate: no Failed, no UnknownAtBound
bool conclusion_allowed(const std::vector<HypothesisResult>& hypotheses);

struct Certificate {
    std::string family;
    long depth = 0;
    long bound = 0;
    std::vector<HypothesisResult> hypotheses;
    bool concluded = false;
    std::string statement;
    std::vector<std::string> assumptions;
};

Certificate certify_independence(const FamilySpec& spec);

nlohmann::ordered_json certificate_to_json(const Certificate& c);
// human-readable rendering, a pure function of the JSON report
std::string render_certificate_text(const nlohmann::ordered_json& report);

// sum_i a_i * leafwise localized rho at p: the quantity that must vanish
// if the combination were solvable at the family's depth
RhoValue obstruction_of_combination(const FamilySpec& spec, const std::vector<long>& coefficients,
                                    const LaurentPoly& p);

// the iterated infection tower K_i^depth of the family
KnotExprPtr family_tower(const FamilySpec& spec, size_t knot_index);

const char* toolchain_version();

// JSON mirrors of the core value types, shared by the CLI tools
nlohmann::ordered_json coprimality_to_json(const CoprimalityVerdict& v);
nlohmann::ordered_json rho_value_to_json(const RhoValue& v);
nlohmann::ordered_json rho_zero_to_json(const RhoZero& r);
nlohmann::ordered_json signature_function_to_json(const SignatureFunction& sf);
nlohmann::ordered_json blanchfield_to_json(const BlanchfieldForm& bl);
nlohmann::ordered_json localized_module_to_json(const LocalizedModule& loc);
nlohmann::ordered_json strong_anisotropy_to_json(const StrongAnisotropyCert& c);

}  // namespace concord
